use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{push_term, Poly};
use crate::error::{Error, Result};
use crate::numeric::Rat;

/// Bivariate polynomial in `(x, y)`: map from `(power of x, power of y)` to a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly2 {
    terms: BTreeMap<(usize, usize), Rat>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_terms([((0, 0), c)])
    }

    pub fn x() -> Self {
        Self::from_terms([((1, 0), Rat::one())])
    }

    pub fn y() -> Self {
        Self::from_terms([((0, 1), Rat::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((usize, usize), Rat)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    /// `(i, j, c)` meaning `c · x^i · y^j`.
    pub fn from_i64(terms: &[(usize, usize, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(i, j, c)| ((i, j), crate::numeric::rat(c))))
    }

    fn add_term(&mut self, key: (usize, usize), c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    /// Nonzero terms as `((power of x, power of y), coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &Rat)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> usize {
        self.terms.keys().map(|(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * num_traits::pow(x.clone(), i) * num_traits::pow(y.clone(), j))
            .sum()
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(i, j), c)| crate::numeric::to_f64(c) * x.powi(i as i32) * y.powi(j as i32))
            .sum()
    }

    /// `u(t) = f(t·a, t·b)`.
    pub fn substitute_ray(&self, a: &Rat, b: &Rat) -> Poly {
        let d = self.total_degree();
        let powers = |base: &Rat| {
            let mut out = vec![Rat::one()];
            for k in 1..=d {
                let next = &out[k - 1] * base;
                out.push(next);
            }
            out
        };
        let (pa, pb) = (powers(a), powers(b));
        let mut coeffs = vec![Rat::zero(); d + 1];
        for (&(i, j), c) in &self.terms {
            coeffs[i + j] += c * &pa[i] * &pb[j];
        }
        Poly::new(coeffs)
    }
}

pub fn eval2(f: &Poly2, x: &Rat, y: &Rat) -> Rat {
    f.eval(x, y)
}

/// Restriction of `f` to the line through the origin with direction `(c, s)`.
pub fn restrict_line(f: &Poly2, c: &Rat, s: &Rat) -> Result<Poly> {
    if c.is_zero() && s.is_zero() {
        return Err(Error::ZeroDirection);
    }
    Ok(f.substitute_ray(c, s))
}

/// `u(t) = f(t·x, t·y)`; roots in `(0, 1)` are crossings strictly between the origin and
/// the target point.
pub fn restrict_segment(f: &Poly2, target: (&Rat, &Rat)) -> Poly {
    f.substitute_ray(target.0, target.1)
}

impl fmt::Display for Poly2 {
    /// Ascending total degree, higher powers of `x` first within a degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| (i + j, std::cmp::Reverse(i)));
        let mut out = String::new();
        for (i, j) in keys {
            let mut mono = Vec::new();
            match i {
                0 => {}
                1 => mono.push("x".to_string()),
                _ => mono.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => mono.push("y".to_string()),
                _ => mono.push(format!("y^{j}")),
            }
            push_term(&mut out, &self.terms[&(i, j)], &mono.join(" "));
        }
        f.write_str(&out)
    }
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        self + &-rhs
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), a * b);
            }
        }
        out
    }
}
