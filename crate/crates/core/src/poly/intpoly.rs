//! Integer-coefficient kernels behind gcd and Sturm sequences. Working with primitive
//! integer polynomials and pseudo-remainders avoids the gcd normalization that every
//! rational operation pays for.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Poly;
use crate::numeric::Rat;

/// Ascending integer coefficients, trimmed.
pub(crate) type IntPoly = Vec<BigInt>;

fn trim(mut v: IntPoly) -> IntPoly {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Primitive integer polynomial that is a positive multiple of `p`.
pub(crate) fn from_poly(p: &Poly) -> IntPoly {
    let den = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let v: IntPoly = p.coeffs.iter().map(|c| c.numer() * &den / c.denom()).collect();
    primitive(v)
}

pub(crate) fn to_poly(v: &IntPoly) -> Poly {
    Poly::new(v.iter().map(|c| Rat::from_integer(c.clone())).collect())
}

/// Divides out the (positive) content.
pub(crate) fn primitive(v: IntPoly) -> IntPoly {
    let v = trim(v);
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|c| c / &g).collect()
}

/// Remainder of `a` by `b` up to a positive factor: `|lc(b)|^k · a mod b`.
pub(crate) fn positive_prem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.len() - 1;
    let lc = b[db].abs();
    let neg = b[db].is_negative();
    let mut r = a.clone();
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let top = r.last().unwrap().clone();
        // r ← |lc|·r − sgn(lc)·top·x^shift·b, which cancels the leading term
        for c in r.iter_mut() {
            *c *= &lc;
        }
        for (i, bc) in b.iter().enumerate() {
            let t = &top * bc;
            if neg {
                r[shift + i] += t;
            } else {
                r[shift + i] -= t;
            }
        }
        r = trim(r);
    }
    r
}

/// Primitive gcd by the primitive pseudo-remainder sequence.
pub(crate) fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (mut a, mut b) = (primitive(a.clone()), primitive(b.clone()));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive(positive_prem(&a, &b));
        a = b;
        b = r;
    }
    a
}

/// Sign of `v(t)` for rational `t = n/d`, from the homogenized integer evaluation.
pub(crate) fn sign_at(v: &IntPoly, t: &Rat) -> i8 {
    let (n, d) = (t.numer(), t.denom());
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    for c in v.iter().rev() {
        acc = acc * n + c * &dpow;
        dpow *= d;
    }
    // acc = d^deg · v(t) with d > 0
    match acc.sign() {
        num_bigint::Sign::Plus => 1,
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
    }
}
