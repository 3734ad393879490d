use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::intpoly::{self, IntPoly};
use super::Poly;
use crate::error::{Error, Result};
use crate::numeric::{sign, Rat};

/// Interval endpoint for root counting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Rat),
    PosInf,
}

impl From<Rat> for Bound {
    fn from(r: Rat) -> Self {
        Bound::Finite(r)
    }
}

/// Sturm sequence of the squarefree part of a polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    sqf: Poly,
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &Poly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if p.is_constant() {
            return Ok(Self { sqf: p.monic(), chain: vec![intpoly::from_poly(p)] });
        }
        // the chain of p itself ends in gcd(p, p'); when that is constant p is squarefree
        let chain = Self::build(intpoly::from_poly(p));
        if chain.last().is_some_and(|g| g.len() == 1) {
            return Ok(Self { sqf: p.monic(), chain });
        }
        let sqf = p.squarefree_part();
        let chain = Self::build(intpoly::from_poly(&sqf));
        Ok(Self { sqf, chain })
    }

    fn build(p: IntPoly) -> Vec<IntPoly> {
        let dp = intpoly::primitive(
            p.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect(),
        );
        let mut chain = vec![p, dp];
        loop {
            let k = chain.len();
            let r = intpoly::positive_prem(&chain[k - 2], &chain[k - 1]);
            if r.is_empty() {
                break;
            }
            // positive rescaling keeps the signs and tames coefficient growth
            chain.push(intpoly::primitive(r.into_iter().map(|c| -c).collect()));
        }
        chain
    }

    fn variations(&self, at: &Bound) -> usize {
        let mut prev = 0i8;
        let mut count = 0;
        for p in &self.chain {
            let lead = || if p.last().unwrap().is_positive() { 1 } else { -1 };
            let s = match at {
                Bound::Finite(t) => intpoly::sign_at(p, t),
                Bound::PosInf => lead(),
                Bound::NegInf => {
                    if p.len() % 2 == 0 {
                        -lead()
                    } else {
                        lead()
                    }
                }
            };
            if s == 0 {
                continue;
            }
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        let ordered = match (lo, hi) {
            (Bound::PosInf, _) | (_, Bound::NegInf) => false,
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
            _ => true,
        };
        if !ordered {
            return 0;
        }
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    pub fn poly(&self) -> &Poly {
        &self.sqf
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &Poly, lo: &Bound, hi: &Bound) -> Result<usize> {
    Ok(SturmChain::new(p)?.count(lo, hi))
}

impl Poly {
    /// Real roots in `(lo, hi]` counted with multiplicity.
    pub fn count_roots_with_multiplicity(&self, lo: Bound, hi: Bound) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut total = 0;
        for (factor, mult) in self.squarefree_decomposition() {
            total += mult * SturmChain::new(&factor)?.count(&lo, &hi);
        }
        Ok(total)
    }

    /// Cauchy's bound: every root satisfies `|r| < 1 + max |a_k / a_n|`.
    pub fn root_bound(&self) -> Rat {
        let lc = self.leading();
        let max = self.coeffs[..self.deg()]
            .iter()
            .map(|c| (c / &lc).abs())
            .max()
            .unwrap_or_else(Rat::zero);
        max + Rat::one()
    }
}

/// Isolating interval `(lo, hi]` holding exactly one distinct real root;
/// `lo == hi` means the root is exactly that rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rat,
    pub hi: Rat,
    pub multiplicity: usize,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealRootReport {
    pub count_distinct: usize,
    pub count_with_multiplicity: usize,
    pub isolating_intervals: Vec<RootInterval>,
}

/// Isolates all real roots of `p`, in increasing order, with multiplicities.
pub fn real_roots(p: &Poly) -> Result<RealRootReport> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let factors = p.squarefree_decomposition();
    let sqf = p.squarefree_part();
    let mut intervals = Vec::new();
    if !sqf.is_constant() {
        let chain = SturmChain::new(&sqf)?;
        let b = sqf.root_bound();
        let (lo, hi) = (-b.clone(), b);
        let total = chain.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()));
        isolate(&chain, lo, hi, total, &mut intervals);
    }
    let chains = factors
        .iter()
        .map(|(f, m)| Ok((SturmChain::new(f)?, *m)))
        .collect::<Result<Vec<_>>>()?;
    let isolating_intervals: Vec<RootInterval> = intervals
        .into_iter()
        .map(|(lo, hi)| {
            let multiplicity = chains
                .iter()
                .find(|(c, _)| {
                    if lo == hi {
                        c.poly().eval(&lo).is_zero()
                    } else {
                        c.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone())) == 1
                    }
                })
                .map(|(_, m)| *m)
                .expect("every root of the squarefree part belongs to one factor");
            RootInterval { lo, hi, multiplicity }
        })
        .collect();
    Ok(RealRootReport {
        count_distinct: isolating_intervals.len(),
        count_with_multiplicity: isolating_intervals.iter().map(|r| r.multiplicity).sum(),
        isolating_intervals,
    })
}

fn isolate(chain: &SturmChain, lo: Rat, hi: Rat, count: usize, out: &mut Vec<(Rat, Rat)>) {
    match count {
        0 => {}
        1 => {
            if chain.poly().eval(&hi).is_zero() {
                out.push((hi.clone(), hi));
            } else {
                out.push((lo, hi));
            }
        }
        _ => {
            let mid = (&lo + &hi) / Rat::from_integer(2.into());
            let left = chain.count(&Bound::Finite(lo.clone()), &Bound::Finite(mid.clone()));
            isolate(chain, lo, mid.clone(), left, out);
            isolate(chain, mid, hi, count - left, out);
        }
    }
}

/// Sign of `q` at the unique root of the squarefree polynomial `p` isolated by `iv`.
pub fn sign_at_root(q: &Poly, p: &Poly, iv: &RootInterval) -> i8 {
    if iv.is_exact() || q.is_zero() {
        return sign(&q.eval(&iv.lo));
    }
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let common = p.gcd(q);
    if !common.is_constant() {
        let c = SturmChain::new(&common).expect("nonzero gcd");
        if c.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone())) > 0 {
            return 0;
        }
    }
    let pc = SturmChain::new(p).expect("nonzero polynomial");
    let qc = SturmChain::new(q).expect("nonzero polynomial");
    let two = Rat::from_integer(2.into());
    loop {
        if qc.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone())) == 0 {
            return sign(&q.eval(&hi));
        }
        let mid = (&lo + &hi) / &two;
        if p.eval(&mid).is_zero() {
            return sign(&q.eval(&mid));
        }
        if pc.count(&Bound::Finite(lo.clone()), &Bound::Finite(mid.clone())) > 0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// True iff `g` and `h` are real-rooted with simple roots, their degrees differ by one,
/// and their roots strictly alternate.
pub fn interlace(g: &Poly, h: &Poly) -> Result<bool> {
    if g.is_zero() || h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (big, small) = if g.deg() >= h.deg() { (g, h) } else { (h, g) };
    if big.deg() != small.deg() + 1 {
        return Ok(false);
    }
    if !big.gcd(small).is_constant() {
        return Ok(false);
    }
    let rb = real_roots(big)?;
    let rs = real_roots(small)?;
    let simple_real = |r: &RealRootReport, d: usize| r.count_distinct == d && r.count_with_multiplicity == d;
    if !simple_real(&rb, big.deg()) || !simple_real(&rs, small.deg()) {
        return Ok(false);
    }
    // With deg(small) roots for deg(big) - 1 gaps, alternating signs of `small` at the
    // roots of `big` force exactly one root per gap.
    let signs: Vec<i8> = rb
        .isolating_intervals
        .iter()
        .map(|iv| sign_at_root(small, big, iv))
        .collect();
    Ok(signs.windows(2).all(|w| w[0] == -w[1] && w[0] != 0))
}

/// Cauchy index of `num / den` over the whole real line: the number of poles where the
/// function jumps from −∞ to +∞ minus those where it jumps from +∞ to −∞.
pub fn cauchy_index(num: &Poly, den: &Poly) -> Result<i64> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(0);
    }
    let g = num.gcd(den);
    let num = num.exact_div(&g);
    let den = den.exact_div(&g);
    let mut index = 0i64;
    for (factor, mult) in den.squarefree_decomposition() {
        if mult % 2 == 0 {
            continue;
        }
        // near a root of multiplicity m, den behaves like den^(m)(r)/m! · (t - r)^m
        let lowest = den.nth_derivative(mult);
        for iv in real_roots(&factor)?.isolating_intervals {
            let s = sign_at_root(&num, &factor, &iv) * sign_at_root(&lowest, &factor, &iv);
            index += s as i64;
        }
    }
    Ok(index)
}
