//! Shared fixtures for the benchmarks.

use freqlmi::Poly;

pub fn cubic() -> Poly {
    Poly::from_i64(&[1, 4, 1, 1])
}

pub fn octic() -> Poly {
    Poly::from_i64(&[336, 198, 496, 117, 183, 20, 24, 1, 1])
}

pub fn quartic() -> Poly {
    Poly::from_i64(&[-1, -1, 0, 0, 1])
}
