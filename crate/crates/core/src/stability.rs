//! Hurwitz stability decided three independent ways: the Routh table, Hermite–Biehler
//! interlacing of `Re p(jω)` and `Im p(jω)`, and definiteness of their Bézoutian.

use std::fmt;

use num_traits::Zero;

use crate::bezout::bezoutian;
use crate::error::{Error, Result};
use crate::numeric::{sign, Definiteness, Rat, Signature};
use crate::poly::{cauchy_index, freq_split, interlace, real_roots, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// All roots in the open left half-plane.
    Stable,
    /// All roots in the open right half-plane.
    AntiStable,
    Unstable,
    /// At least one root on the imaginary axis.
    Marginal,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Stable => "Stable",
            Verdict::AntiStable => "AntiStable",
            Verdict::Unstable => "Unstable",
            Verdict::Marginal => "Marginal",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RouthOutcome {
    Stable,
    Marginal { right_half: usize },
    Unstable { right_half: usize },
}

/// Routh table result: the outcome plus the first column. Entries produced under the
/// ε-substitution are reported by the coefficient of their leading power of ε, which
/// carries the limiting sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RouthTable {
    pub outcome: RouthOutcome,
    pub first_column: Vec<Rat>,
    /// True if a zero pivot or an all-zero row was met.
    pub singular: bool,
}

/// Rational function of the perturbation ε, compared by its behavior as ε → 0⁺.
#[derive(Debug, Clone, PartialEq)]
struct EpsFn {
    num: Poly,
    den: Poly,
}

impl EpsFn {
    fn constant(c: Rat) -> Self {
        Self { num: Poly::constant(c), den: Poly::one() }
    }

    fn eps() -> Self {
        Self { num: Poly::var(), den: Poly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self { num, den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = (num.exact_div(&g), den.exact_div(&g));
        let lc = den.leading();
        let inv = lc.recip();
        Self { num: num.scale(&inv), den: den.scale(&inv) }
    }

    fn lowest(p: &Poly) -> Rat {
        p.coeffs().iter().find(|c| !c.is_zero()).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficient of the dominant term as ε → 0⁺.
    fn leading_term(&self) -> Rat {
        if self.is_zero() {
            return Rat::zero();
        }
        Self::lowest(&self.num) / Self::lowest(&self.den)
    }

    fn limit_sign(&self) -> i8 {
        sign(&self.leading_term())
    }

    fn mul(&self, o: &Self) -> Self {
        Self::reduce(&self.num * &o.num, &self.den * &o.den)
    }

    fn sub(&self, o: &Self) -> Self {
        Self::reduce(
            &(&self.num * &o.den) - &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }

    fn div(&self, o: &Self) -> Self {
        Self::reduce(&self.num * &o.den, &self.den * &o.num)
    }

    fn scale(&self, c: &Rat) -> Self {
        Self::reduce(self.num.scale(c), self.den.clone())
    }
}

/// Number of distinct imaginary-axis roots: `p(jω) = 0` for real ω exactly when ω is a
/// common real root of `Re p(jω)` and `Im p(jω)`.
fn imaginary_axis_roots(p: &Poly) -> Result<usize> {
    let split = freq_split(p)?;
    let g = split.q_x.gcd(&split.q_y);
    if g.is_constant() {
        return Ok(0);
    }
    Ok(real_roots(&g)?.count_distinct)
}

/// Exact Routh table. A zero pivot in a nonzero row is replaced by ε and signs are read
/// in the limit ε → 0⁺; an all-zero row is replaced by the derivative of the auxiliary
/// polynomial formed from the row above.
pub fn routh_table(p: &Poly) -> Result<RouthTable> {
    if p.is_constant() {
        return Err(Error::DegreeTooSmall);
    }
    let zero_roots = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let reduced = p.shift_down(zero_roots);
    let m = reduced.deg();
    let width = m / 2 + 1;
    let row_from = |start: usize| -> Vec<EpsFn> {
        (0..width)
            .map(|j| {
                let k = start as isize - 2 * j as isize;
                let c = if k >= 0 { reduced.coeff(k as usize) } else { Rat::zero() };
                EpsFn::constant(c)
            })
            .collect()
    };
    let mut rows: Vec<Vec<EpsFn>> = vec![row_from(m)];
    let mut singular = false;
    if m >= 1 {
        rows.push(row_from(m - 1));
    }
    let zero_fn = || EpsFn::constant(Rat::zero());
    for k in 1..=m {
        // make row k usable as a pivot row
        if rows[k].iter().all(EpsFn::is_zero) {
            singular = true;
            let d = m + 1 - k; // degree of the auxiliary polynomial from row k-1
            let above = rows[k - 1].clone();
            rows[k] = (0..width)
                .map(|j| {
                    if j < above.len() && d > 2 * j {
                        above[j].scale(&Rat::from_integer(((d - 2 * j) as i64).into()))
                    } else {
                        zero_fn()
                    }
                })
                .collect();
        }
        if rows[k][0].is_zero() {
            singular = true;
            rows[k][0] = EpsFn::eps();
        }
        if k == m {
            break;
        }
        let (a, b) = (&rows[k - 1], &rows[k]);
        let next: Vec<EpsFn> = (0..width)
            .map(|j| {
                if j + 1 >= width {
                    return zero_fn();
                }
                b[0].mul(&a[j + 1]).sub(&a[0].mul(&b[j + 1])).div(&b[0])
            })
            .collect();
        rows.push(next);
    }
    let first: Vec<&EpsFn> = rows.iter().map(|r| &r[0]).collect();
    let signs: Vec<i8> = first.iter().map(|e| e.limit_sign()).collect();
    let right_half = signs.windows(2).filter(|w| w[0] != w[1]).count();
    let imaginary = zero_roots > 0 || imaginary_axis_roots(&reduced)? > 0;
    let outcome = if imaginary {
        RouthOutcome::Marginal { right_half }
    } else if right_half == 0 && !singular {
        RouthOutcome::Stable
    } else {
        RouthOutcome::Unstable { right_half }
    };
    Ok(RouthTable {
        outcome,
        first_column: first.iter().map(|e| e.leading_term()).collect(),
        singular,
    })
}

pub fn routh_hurwitz(p: &Poly) -> Result<RouthOutcome> {
    Ok(routh_table(p)?.outcome)
}

/// Interlacing of `q_x` and `q_y`, oriented so that the Cauchy index of `q_x / q_y`
/// is positive (it then equals `deg q_y`).
pub fn hermite_biehler(p: &Poly) -> Result<bool> {
    let split = freq_split(p)?;
    if split.q_x.is_zero() || split.q_y.is_zero() {
        return Ok(false);
    }
    if !interlace(&split.q_x, &split.q_y)? {
        return Ok(false);
    }
    Ok(cauchy_index(&split.q_x, &split.q_y)? == split.q_y.deg() as i64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BezoutVerdict {
    DefiniteStable,
    DefiniteAntiStable,
    NotDefinite(Signature),
}

/// Definiteness of `B(q_x, q_y)` at size `deg p`: negative definite for stable `p`,
/// positive definite for anti-stable `p`.
pub fn bezout_stability(p: &Poly) -> Result<BezoutVerdict> {
    let split = freq_split(p)?;
    let b = bezoutian(&split.q_x, &split.q_y, p.deg())?;
    Ok(match b.definiteness() {
        Definiteness::NegDef => BezoutVerdict::DefiniteStable,
        Definiteness::PosDef => BezoutVerdict::DefiniteAntiStable,
        _ => BezoutVerdict::NotDefinite(b.signature().oriented()),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub verdict: Verdict,
    pub routh_first_column: Vec<Rat>,
    pub right_half_roots: usize,
    pub bezout_signature: Signature,
    pub interlacing: bool,
    pub cauchy_index_value: i64,
    pub agreement: bool,
}

/// Runs all three criteria; the Routh table decides the verdict and the other two must
/// agree with it.
pub fn classify(p: &Poly) -> Result<StabilityReport> {
    let table = routh_table(p)?;
    let n = p.deg();
    let (verdict, right_half_roots) = match table.outcome {
        RouthOutcome::Stable => (Verdict::Stable, 0),
        RouthOutcome::Marginal { right_half } => (Verdict::Marginal, right_half),
        RouthOutcome::Unstable { right_half } if right_half == n => (Verdict::AntiStable, n),
        RouthOutcome::Unstable { right_half } => (Verdict::Unstable, right_half),
    };
    let split = freq_split(p)?;
    let hb = hermite_biehler(p)?;
    let bz = bezout_stability(p)?;
    let bezout_signature = bezoutian(&split.q_x, &split.q_y, n)?.signature();
    let interlacing = !split.q_x.is_zero()
        && !split.q_y.is_zero()
        && interlace(&split.q_x, &split.q_y)?;
    let cauchy_index_value = if split.q_y.is_zero() {
        0
    } else {
        cauchy_index(&split.q_x, &split.q_y)?
    };

    let stable = verdict == Verdict::Stable;
    let mut problems = Vec::new();
    if stable != hb {
        problems.push(format!("routh={verdict} hermite_biehler={hb}"));
    }
    if stable != (bz == BezoutVerdict::DefiniteStable) {
        problems.push(format!("routh={verdict} bezout={bz:?}"));
    }
    if (verdict == Verdict::AntiStable) != (bz == BezoutVerdict::DefiniteAntiStable) {
        problems.push(format!("routh={verdict} bezout={bz:?}"));
    }
    if verdict == Verdict::Marginal && bezout_signature.zero == 0 {
        problems.push(format!("marginal polynomial with nonsingular Bézoutian {bezout_signature}"));
    }
    if !problems.is_empty() {
        return Err(Error::InternalInconsistency(format!("{p}: {}", problems.join("; "))));
    }
    Ok(StabilityReport {
        verdict,
        routh_first_column: table.first_column,
        right_half_roots,
        bezout_signature,
        interlacing,
        cauchy_index_value,
        agreement: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    fn cubic() -> Poly {
        p(&[1, 4, 1, 1])
    }

    fn quartic() -> Poly {
        p(&[-1, -1, 0, 0, 1])
    }

    fn octic() -> Poly {
        p(&[336, 198, 496, 117, 183, 20, 24, 1, 1])
    }

    #[test]
    fn routh_examples() {
        assert_eq!(routh_hurwitz(&cubic()).unwrap(), RouthOutcome::Stable);
        assert!(matches!(routh_hurwitz(&quartic()).unwrap(), RouthOutcome::Unstable { .. }));
        assert_eq!(routh_hurwitz(&p(&[1, 1])).unwrap(), RouthOutcome::Stable);
        assert_eq!(routh_hurwitz(&p(&[3])), Err(Error::DegreeTooSmall));
    }

    #[test]
    fn routh_first_column_cubic() {
        // s^3+s^2+4s+1: rows [1,4], [1,1], [3], [1]
        let t = routh_table(&cubic()).unwrap();
        assert_eq!(t.first_column, vec![rat(1), rat(1), rat(3), rat(1)]);
        assert!(!t.singular);
    }

    #[test]
    fn routh_right_half_counts() {
        // (s-1)(s-2)(s+3) = s^3 - 7s + 6
        assert_eq!(
            routh_hurwitz(&p(&[6, -7, 0, 1])).unwrap(),
            RouthOutcome::Unstable { right_half: 2 }
        );
        // s^4 - s - 1: roots ≈ 1.22, -0.72, -0.25 ± 1.03j
        assert_eq!(
            routh_hurwitz(&quartic()).unwrap(),
            RouthOutcome::Unstable { right_half: 1 }
        );
    }

    #[test]
    fn routh_zero_pivot_uses_epsilon() {
        // s^4 + s^3 + 2s^2 + 2s + 3: zero pivot in row 2, two right-half roots
        let t = routh_table(&p(&[3, 2, 2, 1, 1])).unwrap();
        assert!(t.singular);
        assert_eq!(t.outcome, RouthOutcome::Unstable { right_half: 2 });
    }

    #[test]
    fn routh_zero_row_marginal() {
        // (s^2 + 1)(s + 1) = s^3 + s^2 + s + 1
        let t = routh_table(&p(&[1, 1, 1, 1])).unwrap();
        assert!(t.singular);
        assert_eq!(t.outcome, RouthOutcome::Marginal { right_half: 0 });
        // (s^2 - 1)(s + 2): symmetric real pair, not marginal
        assert_eq!(
            routh_hurwitz(&p(&[-2, -1, 2, 1])).unwrap(),
            RouthOutcome::Unstable { right_half: 1 }
        );
        // root at the origin
        assert!(matches!(
            routh_hurwitz(&p(&[0, 1, 1])).unwrap(),
            RouthOutcome::Marginal { .. }
        ));
    }

    #[test]
    fn hermite_biehler_examples() {
        assert!(hermite_biehler(&cubic()).unwrap());
        assert!(!hermite_biehler(&quartic()).unwrap());
        assert!(hermite_biehler(&p(&[1, 1])).unwrap());
        assert!(!hermite_biehler(&p(&[-1, 1])).unwrap());
        assert!(hermite_biehler(&octic()).unwrap());
    }

    #[test]
    fn bezout_stability_examples() {
        assert_eq!(bezout_stability(&cubic()).unwrap(), BezoutVerdict::DefiniteStable);
        assert_eq!(
            bezout_stability(&quartic()).unwrap(),
            BezoutVerdict::NotDefinite(Signature::new(3, 1, 0))
        );
        assert_eq!(bezout_stability(&p(&[-1, 1])).unwrap(), BezoutVerdict::DefiniteAntiStable);
    }

    #[test]
    fn classify_examples() {
        let r = classify(&cubic()).unwrap();
        assert_eq!(r.verdict, Verdict::Stable);
        assert!(r.agreement && r.interlacing);
        assert_eq!(r.cauchy_index_value, 3);
        assert_eq!(r.bezout_signature, Signature::new(0, 3, 0));
        assert_eq!(classify(&octic()).unwrap().verdict, Verdict::Stable);
        assert_eq!(classify(&quartic()).unwrap().verdict, Verdict::Unstable);
        assert_eq!(classify(&p(&[-1, 1])).unwrap().verdict, Verdict::AntiStable);
        assert_eq!(classify(&p(&[1, 0, 1])).unwrap().verdict, Verdict::Marginal);
        assert_eq!(classify(&p(&[0, 0, 1])).unwrap().verdict, Verdict::Marginal);
    }

    #[test]
    fn time_reversal() {
        for q in [cubic(), octic(), p(&[2, 3, 1])] {
            assert_eq!(classify(&q).unwrap().verdict, Verdict::Stable);
            assert_eq!(classify(&q.reflect()).unwrap().verdict, Verdict::AntiStable);
        }
    }
}
