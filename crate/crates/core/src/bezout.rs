//! Bézoutian matrices and resultants.
//!
//! The Bézoutian of `g` and `h` collects the coefficients of the Cayley quotient
//!
//! ```text
//! (g(ω) h(v) − g(v) h(ω)) / (ω − v) = Σ b_kl ω^k v^l
//! ```
//!
//! into a symmetric matrix. Rows and columns run over descending powers, so entry
//! `(i, j)` (0-based) holds `b_{n-1-i, n-1-j}`. Its determinant is the resultant of
//! `g` and `h`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numeric::{Rat, SymMat};
use crate::poly::Poly;

/// Inputs of a Bézoutian together with the matrix size. The size may exceed both
/// degrees, which pads the matrix as if the leading coefficients were zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutSpec {
    pub g: Poly,
    pub h: Poly,
    pub size: usize,
}

impl BezoutSpec {
    pub fn new(g: Poly, h: Poly, size: usize) -> Result<Self> {
        let degree = g.deg().max(h.deg());
        if size < degree || size == 0 {
            return Err(Error::SizeTooSmall { size, degree });
        }
        Ok(Self { g, h, size })
    }
}

pub fn bezout_matrix(spec: &BezoutSpec) -> Result<SymMat> {
    let BezoutSpec { g, h, size } = spec;
    let n = *size;
    let degree = g.deg().max(h.deg());
    if n < degree || n == 0 {
        return Err(Error::SizeTooSmall { size: n, degree });
    }
    // ascending-index accumulator: raw[k][l] is the coefficient of ω^k v^l
    let mut raw = vec![vec![Rat::zero(); n]; n];
    for a in 1..=degree {
        for b in 0..a {
            // (ω^a v^b − ω^b v^a) / (ω − v) = Σ_{k<a−b} ω^{b+k} v^{a−1−k}
            let c = g.coeff(a) * h.coeff(b) - g.coeff(b) * h.coeff(a);
            if c.is_zero() {
                continue;
            }
            for k in 0..a - b {
                raw[b + k][a - 1 - k] += &c;
            }
        }
    }
    Ok(SymMat::from_upper(n, |i, j| raw[n - 1 - i][n - 1 - j].clone()))
}

/// Convenience wrapper: `bezout_matrix(g, h, n)`.
pub fn bezoutian(g: &Poly, h: &Poly, n: usize) -> Result<SymMat> {
    bezout_matrix(&BezoutSpec::new(g.clone(), h.clone(), n)?)
}

/// Determinant of the size-`n` Bézoutian; zero whenever `g` and `h` share a root.
pub fn resultant(g: &Poly, h: &Poly, n: usize) -> Result<Rat> {
    Ok(bezoutian(g, h, n)?.det())
}
