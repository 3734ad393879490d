use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{to_f64, Rat};
use crate::error::{Error, Result};
use crate::poly::{Bound, Poly};

/// Square symmetric matrix with exact rational entries, stored densely row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMat {
    n: usize,
    entries: Vec<Rat>,
}

/// Inertia of a symmetric matrix: counts of positive, negative and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl Signature {
    pub fn new(plus: usize, minus: usize, zero: usize) -> Self {
        Self { plus, minus, zero }
    }

    /// `n_plus - n_minus`.
    pub fn index(&self) -> i64 {
        self.plus as i64 - self.minus as i64
    }

    pub fn size(&self) -> usize {
        self.plus + self.minus + self.zero
    }

    /// Signature of `±A` with at least as many positive as negative eigenvalues; the
    /// certificate for a matrix whose overall sign is arbitrary.
    pub fn oriented(&self) -> Self {
        if self.plus >= self.minus {
            *self
        } else {
            Self::new(self.minus, self.plus, self.zero)
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.plus, self.minus, self.zero)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Definiteness {
    PosDef,
    NegDef,
    PosSemi,
    NegSemi,
    Indefinite,
    Zero,
}

impl Definiteness {
    pub fn from_signature(s: Signature) -> Self {
        match (s.plus, s.minus, s.zero) {
            (_, 0, 0) if s.plus > 0 => Definiteness::PosDef,
            (0, _, 0) if s.minus > 0 => Definiteness::NegDef,
            (0, 0, _) => Definiteness::Zero,
            (_, 0, _) => Definiteness::PosSemi,
            (0, _, _) => Definiteness::NegSemi,
            _ => Definiteness::Indefinite,
        }
    }
}

impl SymMat {
    /// Builds a matrix from rows, rejecting non-square or non-symmetric input.
    pub fn new(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidArgument("matrix must be at least 1x1".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("matrix must be square".into()));
        }
        let entries: Vec<Rat> = rows.into_iter().flatten().collect();
        let m = Self { n, entries };
        for i in 0..n {
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::InvalidArgument(format!(
                        "matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| super::rat(v)).collect())
                .collect(),
        )
    }

    /// Builds from the upper triangle: `f(i, j)` is only called for `i <= j`.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = vec![Rat::zero(); n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                entries[j * n + i] = v.clone();
                entries[i * n + j] = v;
            }
        }
        Self { n, entries }
    }

    pub fn zeros(n: usize) -> Self {
        Self { n, entries: vec![Rat::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_upper(n, |i, j| if i == j { Rat::one() } else { Rat::zero() })
    }

    pub fn diag(values: &[Rat]) -> Self {
        Self::from_upper(values.len(), |i, j| {
            if i == j {
                values[i].clone()
            } else {
                Rat::zero()
            }
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<Rat>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn max_abs(&self) -> Rat {
        self.entries
            .iter()
            .map(|e| e.abs())
            .max()
            .unwrap_or_else(Rat::zero)
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.entries
            .chunks(self.n)
            .map(|r| r.iter().map(to_f64).collect())
            .collect()
    }

    /// Integer matrix `D·A` for the least common denominator `D` of the entries.
    fn cleared(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let den = self.entries.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let rows = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let c = self.get(i, j);
                        c.numer() * &den / c.denom()
                    })
                    .collect()
            })
            .collect();
        (rows, den)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Rat {
        let n = self.n;
        let (mut a, den) = self.cleared();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(pivot) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return Rat::zero();
            };
            if pivot != k {
                a.swap(pivot, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        let det = Rat::new(prev, num_traits::pow(den, n));
        if negate {
            -det
        } else {
            det
        }
    }

    /// Coefficients of `det(λI - A)` (ascending powers of λ), computed with the
    /// division-free Samuelson–Berkowitz recursion.
    pub fn charpoly(&self) -> Poly {
        let n = self.n;
        let a = |i: usize, j: usize| self.get(i, j);
        // descending coefficients of the trailing principal submatrix
        let mut c: Vec<Rat> = vec![Rat::one(), -a(n - 1, n - 1).clone()];
        for k in (0..n - 1).rev() {
            let s = n - 1 - k;
            let mut t = Vec::with_capacity(s + 2);
            t.push(Rat::one());
            t.push(-a(k, k).clone());
            // v = A1^i * C, starting from the column below the pivot
            let mut v: Vec<Rat> = (k + 1..n).map(|r| a(r, k).clone()).collect();
            for step in 0..s {
                let rv: Rat = (k + 1..n)
                    .zip(&v)
                    .map(|(col, vi)| a(k, col) * vi)
                    .sum();
                t.push(-rv);
                if step + 1 < s {
                    v = (k + 1..n)
                        .map(|r| (k + 1..n).zip(&v).map(|(col, vi)| a(r, col) * vi).sum())
                        .collect();
                }
            }
            let mut next = vec![Rat::zero(); s + 2];
            for (i, out) in next.iter_mut().enumerate() {
                for (j, cj) in c.iter().enumerate().take(i + 1) {
                    *out += &t[i - j] * cj;
                }
            }
            c = next;
        }
        c.reverse();
        Poly::new(c)
    }

    /// Exact inertia from the characteristic polynomial. The polynomial of a symmetric
    /// matrix is real-rooted, so Sturm counts with multiplicity on each side of zero give
    /// the eigenvalue sign counts.
    pub fn signature(&self) -> Signature {
        let cp = self.charpoly();
        let zero = cp.coeffs().iter().take_while(|c| c.is_zero()).count();
        let reduced = cp.shift_down(zero);
        let plus = reduced
            .count_roots_with_multiplicity(Bound::Finite(Rat::zero()), Bound::PosInf)
            .expect("characteristic polynomial is monic");
        let minus = self.n - zero - plus;
        Signature { plus, minus, zero }
    }

    /// Leading-pivot test (Sylvester): `Some(PosDef | NegDef)` when every leading
    /// principal minor is nonzero with the matching sign pattern, `None` otherwise.
    pub fn sylvester_definite(&self) -> Option<Definiteness> {
        let n = self.n;
        // fraction-free elimination: the k-th pivot is the k-th leading principal minor
        let (mut a, _) = self.cleared();
        let mut prev = BigInt::one();
        let mut first_sign = 0i8;
        for k in 0..n {
            let s = match a[k][k].sign() {
                num_bigint::Sign::Plus => 1,
                num_bigint::Sign::Minus => -1,
                num_bigint::Sign::NoSign => return None,
            };
            if k == 0 {
                first_sign = s;
            }
            // positive definite: all minors positive; negative definite: signs alternate from -
            let want = if first_sign > 0 || k % 2 == 1 { 1 } else { -1 };
            if s != want {
                return None;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        Some(if first_sign > 0 {
            Definiteness::PosDef
        } else {
            Definiteness::NegDef
        })
    }

    /// Symmetric fraction-free elimination without pivoting: `Some(true)` for positive
    /// definite, `Some(false)` for singular positive semidefinite, `None` otherwise.
    /// Each pivot is a ratio of consecutive principal minors, so a negative pivot, or a
    /// zero pivot with a nonzero row, rules out semidefiniteness.
    fn psd_pivots(&self) -> Option<bool> {
        let n = self.n;
        let (mut a, _) = self.cleared();
        let mut prev = BigInt::one();
        let mut definite = true;
        for k in 0..n {
            if a[k][k].is_negative() {
                return None;
            }
            if a[k][k].is_zero() {
                if a[k][k + 1..].iter().any(|v| !v.is_zero()) {
                    return None;
                }
                definite = false;
                continue;
            }
            for i in k + 1..n {
                for j in i..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[j][i] = v.clone();
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        Some(definite)
    }

    pub fn definiteness(&self) -> Definiteness {
        if self.is_zero() {
            return Definiteness::Zero;
        }
        match (self.psd_pivots(), (-self).psd_pivots()) {
            (Some(true), _) => Definiteness::PosDef,
            (_, Some(true)) => Definiteness::NegDef,
            (Some(false), _) => Definiteness::PosSemi,
            (_, Some(false)) => Definiteness::NegSemi,
            _ => Definiteness::Indefinite,
        }
    }
}

impl Add for &SymMat {
    type Output = SymMat;
    fn add(self, rhs: &SymMat) -> SymMat {
        assert_eq!(self.n, rhs.n, "size mismatch");
        SymMat {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &SymMat {
    type Output = SymMat;
    fn sub(self, rhs: &SymMat) -> SymMat {
        assert_eq!(self.n, rhs.n, "size mismatch");
        SymMat {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &SymMat {
    type Output = SymMat;
    fn neg(self) -> SymMat {
        SymMat {
            n: self.n,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl fmt::Display for SymMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.chunks(self.n).enumerate() {
            let cells: Vec<String> = row.iter().map(super::rat_to_string).collect();
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Exact determinant.
pub fn det_exact(m: &SymMat) -> Rat {
    m.det()
}

/// Exact eigenvalue sign counts.
pub fn signature_exact(m: &SymMat) -> Signature {
    m.signature()
}

pub fn definiteness(m: &SymMat) -> Definiteness {
    m.definiteness()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn m(rows: &[&[i64]]) -> SymMat {
        SymMat::from_i64(rows).unwrap()
    }

    fn cubic_f00() -> SymMat {
        m(&[&[1, 0, -1], &[0, 3, 0], &[-1, 0, 4]])
    }

    fn quartic_f00() -> SymMat {
        m(&[&[0, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1]])
    }

    #[test]
    fn rejects_asymmetric_and_ragged() {
        assert!(SymMat::from_i64(&[&[1, 2], &[3, 4]]).is_err());
        assert!(SymMat::from_i64(&[&[1, 2], &[2]]).is_err());
        assert!(SymMat::new(vec![]).is_err());
    }

    #[test]
    fn determinants() {
        assert_eq!(det_exact(&cubic_f00()), rat(9));
        assert_eq!(det_exact(&SymMat::identity(3)), rat(1));
        assert_eq!(det_exact(&quartic_f00()), rat(-1));
        assert_eq!(det_exact(&SymMat::zeros(2)), rat(0));
    }

    #[test]
    fn charpoly_of_small_matrices() {
        // [[2,1],[1,2]]: λ² - 4λ + 3
        let p = m(&[&[2, 1], &[1, 2]]).charpoly();
        assert_eq!(p, Poly::from_i64(&[3, -4, 1]));
        let q = cubic_f00().charpoly();
        assert_eq!(q.eval(&rat(0)), -rat(9));
    }

    #[test]
    fn signatures() {
        let bxy = m(&[&[-1, 0, 1], &[0, -3, 0], &[1, 0, -4]]);
        assert_eq!(signature_exact(&bxy), Signature::new(0, 3, 0));
        assert_eq!(signature_exact(&SymMat::zeros(2)), Signature::new(0, 0, 2));
        assert_eq!(signature_exact(&quartic_f00()), Signature::new(3, 1, 0));
        assert_eq!(signature_exact(&m(&[&[1, 1], &[1, 1]])), Signature::new(1, 0, 1));
    }

    #[test]
    fn definiteness_classes() {
        assert_eq!(definiteness(&cubic_f00()), Definiteness::PosDef);
        assert_eq!(definiteness(&-&cubic_f00()), Definiteness::NegDef);
        assert_eq!(definiteness(&SymMat::diag(&[rat(1), rat(0)])), Definiteness::PosSemi);
        assert_eq!(definiteness(&SymMat::diag(&[rat(0), rat(-2)])), Definiteness::NegSemi);
        assert_eq!(definiteness(&quartic_f00()), Definiteness::Indefinite);
        assert_eq!(definiteness(&SymMat::zeros(3)), Definiteness::Zero);
        // zero leading pivot but still PSD: falls through to the signature path
        assert_eq!(definiteness(&SymMat::diag(&[rat(0), rat(5)])), Definiteness::PosSemi);
    }

    #[test]
    fn sylvester_short_circuit_agrees() {
        assert_eq!(cubic_f00().sylvester_definite(), Some(Definiteness::PosDef));
        assert_eq!(quartic_f00().sylvester_definite(), None);
    }
}
