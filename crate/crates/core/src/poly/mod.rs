//! Exact polynomial algebra over the rationals.
//!
//! [`Poly`] is univariate with ascending coefficients; [`Poly2`] is bivariate in `(x, y)`.

mod bivariate;
mod intpoly;
mod roots;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{rat_to_string, Rat};

pub use bivariate::{eval2, restrict_line, restrict_segment, Poly2};
pub use roots::{
    cauchy_index, interlace, real_roots, sign_at_root, sturm_count, Bound, RealRootReport,
    RootInterval, SturmChain,
};

/// Univariate polynomial with exact rational coefficients, ascending powers.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The indeterminate `t`.
    pub fn var() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    /// Ascending integer coefficients.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rat::from_integer(BigInt::from(c))).collect())
    }

    /// Descending coefficients, highest power first (`[1, 1, 4, 1]` is `s³+s²+4s+1`).
    pub fn from_descending(mut coeffs: Vec<Rat>) -> Self {
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// Parses whitespace-separated coefficients (integers, `a/b`, or decimals).
    /// Descending order unless `ascending` is set.
    pub fn parse(text: &str, ascending: bool) -> Result<Self> {
        let coeffs = text
            .split_whitespace()
            .map(crate::numeric::parse_rat)
            .collect::<Result<Vec<_>>>()?;
        Self::from_coefficient_list(coeffs, ascending)
    }

    pub fn from_coefficient_list(coeffs: Vec<Rat>, ascending: bool) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Parse("empty coefficient list".into()));
        }
        Ok(if ascending {
            Self::new(coeffs)
        } else {
            Self::from_descending(coeffs)
        })
    }

    /// Coefficients, highest power first, as the text format writes them.
    pub fn to_descending_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .rev()
            .map(rat_to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0 (check [`Poly::is_zero`] where it matters).
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by `t^k`, dropping the `k` lowest coefficients.
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// `p(-t)`
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.leading();
        Self::new(self.coeffs.iter().map(|c| c / &lc).collect())
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.coeffs.len() < d.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let dn = d.deg();
        let lc = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len() - dn];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dn] / &lc;
            if !q.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let delta = &q * dc;
                    rem[k + i] -= delta;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dn);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Division known to be exact.
    pub fn exact_div(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(&self, other: &Poly) -> Poly {
        intpoly::to_poly(&intpoly::gcd(&intpoly::from_poly(self), &intpoly::from_poly(other))).monic()
    }

    pub fn squarefree_part(&self) -> Poly {
        if self.is_constant() {
            return self.monic();
        }
        self.exact_div(&self.gcd(&self.derivative())).monic()
    }

    /// Yun's decomposition: nonconstant, pairwise coprime, squarefree monic factors `a_i`
    /// with multiplicity `i`, so that `self = lc * Π a_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let d = self.derivative();
        let a0 = self.gcd(&d);
        let mut b = self.exact_div(&a0);
        let mut c = d.exact_div(&a0);
        let mut dd = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&dd);
            b = b.exact_div(&a);
            c = dd.exact_div(&a);
            dd = &c - &b.derivative();
            if !a.is_constant() {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    /// Newton interpolation through `(t_k, v_k)` with distinct nodes.
    pub fn interpolate(points: &[(Rat, Rat)]) -> Poly {
        let n = points.len();
        let mut dd: Vec<Rat> = points.iter().map(|(_, v)| v.clone()).collect();
        for level in 1..n {
            for k in (level..n).rev() {
                let num = &dd[k] - &dd[k - 1];
                let den = &points[k].0 - &points[k - level].0;
                dd[k] = num / den;
            }
        }
        let mut acc = Poly::zero();
        for k in (0..n).rev() {
            let lin = Poly::new(vec![-points[k].0.clone(), Rat::one()]);
            acc = &(&acc * &lin) + &Poly::constant(dd[k].clone());
        }
        acc
    }

    /// Renders with the given variable name, highest power first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            push_term(&mut out, c, &mono);
        }
        out
    }
}

/// Appends `c·mono` to a `+`/`-` separated sum.
pub(crate) fn push_term(out: &mut String, c: &Rat, mono: &str) {
    let neg = c.is_negative();
    let mag = c.abs();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if mono.is_empty() {
        out.push_str(&rat_to_string(&mag));
    } else if mag.is_one() {
        out.push_str(mono);
    } else {
        out.push_str(&rat_to_string(&mag));
        out.push(' ');
        out.push_str(mono);
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("s"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Real and imaginary parts of `p(jω)` as polynomials in the real variable ω.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreqSplit {
    pub q_x: Poly,
    pub q_y: Poly,
    pub q_z: Poly,
}

/// `p(jω) = q_x(ω) + j q_y(ω)`, with `q_z = 1`.
pub fn freq_split(p: &Poly) -> Result<FreqSplit> {
    if p.is_constant() {
        return Err(Error::DegreeTooSmall);
    }
    let mut re = vec![Rat::zero(); p.coeffs.len()];
    let mut im = vec![Rat::zero(); p.coeffs.len()];
    for (k, c) in p.coeffs.iter().enumerate() {
        // j^k = (-1)^(k/2) for even k, j·(-1)^((k-1)/2) for odd k
        let signed = if (k / 2) % 2 == 0 { c.clone() } else { -c };
        if k % 2 == 0 {
            re[k] = signed;
        } else {
            im[k] = signed;
        }
    }
    Ok(FreqSplit {
        q_x: Poly::new(re),
        q_y: Poly::new(im),
        q_z: Poly::one(),
    })
}

pub fn eval(p: &Poly, t: &Rat) -> Rat {
    p.eval(t)
}
