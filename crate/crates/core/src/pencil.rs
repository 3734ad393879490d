//! The symmetric pencil `F(x, y) = σ·B(q_x − x q_z, q_y − y q_z)` whose determinant
//! implicitizes the frequency-response curve and whose PSD set is the inner region.

use std::fmt;

use num_traits::Zero;

use crate::bezout::bezoutian;
use crate::error::{Error, Result};
use crate::numeric::{
    min_eig_approx, min_eig_f64, rat, to_f64, Definiteness, Rat, SymMat,
};
use crate::poly::{freq_split, Poly, Poly2};

/// `F(x, y) = f0 + x·fx + y·fy`, each part symmetric of size `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pencil {
    pub n: usize,
    pub f0: SymMat,
    pub fx: SymMat,
    pub fy: SymMat,
    /// Sign applied by [`normalize_sign`]; `None` for a raw pencil.
    pub sigma: Option<i8>,
}

impl Pencil {
    /// Validates sizes and, when `sigma` is present, that `f0` is positive definite.
    pub fn from_parts(f0: SymMat, fx: SymMat, fy: SymMat, sigma: Option<i8>) -> Result<Self> {
        let n = f0.size();
        if fx.size() != n || fy.size() != n {
            return Err(Error::InvalidArgument("pencil parts differ in size".into()));
        }
        if let Some(s) = sigma {
            if s != 1 && s != -1 {
                return Err(Error::InvalidArgument(format!("sigma must be ±1, got {s}")));
            }
            if f0.definiteness() != Definiteness::PosDef {
                return Err(Error::InvalidArgument(
                    "normalized pencil must be positive definite at the origin".into(),
                ));
            }
        }
        Ok(Self { n, f0, fx, fy, sigma })
    }

    pub fn is_normalized(&self) -> bool {
        self.sigma.is_some()
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> SymMat {
        &(&self.f0 + &self.fx.scale(x)) + &self.fy.scale(y)
    }

    /// Entry `(i, j)` as an affine form `(constant, x-coefficient, y-coefficient)`.
    pub fn entry(&self, i: usize, j: usize) -> (Rat, Rat, Rat) {
        (
            self.f0.get(i, j).clone(),
            self.fx.get(i, j).clone(),
            self.fy.get(i, j).clone(),
        )
    }

    fn negated(&self) -> Self {
        Self {
            n: self.n,
            f0: -&self.f0,
            fx: -&self.fx,
            fy: -&self.fy,
            sigma: self.sigma,
        }
    }
}

impl fmt::Display for Pencil {
    /// Matrix of affine entries such as `-336 + x` or `-24 y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let cells: Vec<String> = (0..self.n)
                .map(|j| {
                    let (c, a, b) = self.entry(i, j);
                    Poly2::from_terms([((0, 0), c), ((1, 0), a), ((0, 1), b)]).to_string()
                })
                .collect();
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Raw (unnormalized) pencil `B(q_x − x q_z, q_y − y q_z)` of size `deg p`, split by
/// bilinearity into `B(q_x, q_y) − x·B(q_z, q_y) − y·B(q_x, q_z)`.
pub fn build_pencil(p: &Poly) -> Result<Pencil> {
    let split = freq_split(p)?;
    let n = p.deg();
    let f0 = bezoutian(&split.q_x, &split.q_y, n)?;
    let fx = -&bezoutian(&split.q_z, &split.q_y, n)?;
    let fy = -&bezoutian(&split.q_x, &split.q_z, n)?;
    Ok(Pencil { n, f0, fx, fy, sigma: None })
}

/// Chooses `σ = ±1` so that `σ·F(0, 0)` is positive definite.
pub fn normalize_sign(pc: &Pencil) -> Result<Pencil> {
    if pc.is_normalized() {
        return Ok(pc.clone());
    }
    match pc.f0.definiteness() {
        Definiteness::PosDef => Ok(Pencil { sigma: Some(1), ..pc.clone() }),
        Definiteness::NegDef => Ok(Pencil { sigma: Some(-1), ..pc.negated() }),
        _ => Err(Error::NotDefinite(pc.f0.signature().oriented())),
    }
}

/// [`build_pencil`] followed by [`normalize_sign`].
pub fn lmi_pencil(p: &Poly) -> Result<Pencil> {
    normalize_sign(&build_pencil(p)?)
}

pub fn pencil_eval(pc: &Pencil, x: &Rat, y: &Rat) -> SymMat {
    pc.eval(x, y)
}

/// `det F(x, y)` as an exact bivariate polynomial, by interpolating determinants on the
/// grid `{0..n} × {0..n}` (the determinant has degree at most `n` in each variable).
pub fn implicit_poly(pc: &Pencil) -> Poly2 {
    let n = pc.n;
    let nodes: Vec<Rat> = (0..=n as i64).map(rat).collect();
    // for each x-node, the determinant as a polynomial in y
    let in_y: Vec<Poly> = nodes
        .iter()
        .map(|x| {
            let pts: Vec<(Rat, Rat)> = nodes
                .iter()
                .map(|y| (y.clone(), pc.eval(x, y).det()))
                .collect();
            Poly::interpolate(&pts)
        })
        .collect();
    let mut terms = Vec::new();
    for j in 0..=n {
        let pts: Vec<(Rat, Rat)> = nodes
            .iter()
            .zip(&in_y)
            .map(|(x, py)| (x.clone(), py.coeff(j)))
            .collect();
        let px = Poly::interpolate(&pts);
        for (i, c) in px.coeffs().iter().enumerate() {
            if !c.is_zero() {
                terms.push(((i, j), c.clone()));
            }
        }
    }
    Poly2::from_terms(terms)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MembershipStatus {
    Interior,
    Boundary,
    Exterior,
}

impl MembershipStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            MembershipStatus::Interior => "Interior",
            MembershipStatus::Boundary => "Boundary",
            MembershipStatus::Exterior => "Exterior",
        }
    }
}

impl fmt::Display for MembershipStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MembershipResult {
    pub status: MembershipStatus,
    pub min_eig: f64,
    pub exact_det: Rat,
}

/// Tolerance band used for float boundary decisions: `tol · (1 + max |entry|)`.
pub fn boundary_band(max_abs_entry: f64, tol: f64) -> f64 {
    tol * (1.0 + max_abs_entry)
}

/// Exact LMI membership of a rational point.
///
/// `Interior` iff `F(x, y) ≻ 0`. `Boundary` if `F(x, y)` is singular and positive
/// semidefinite, or (when not PSD) its smallest eigenvalue lies inside the tolerance band.
pub fn membership(pc: &Pencil, x: &Rat, y: &Rat, tol: f64) -> Result<MembershipResult> {
    if !pc.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let m = pc.eval(x, y);
    let exact_det = m.det();
    let min_eig = min_eig_approx(&m, tol);
    let band = boundary_band(to_f64(&m.max_abs()), tol);
    let status = match m.definiteness() {
        Definiteness::PosDef => MembershipStatus::Interior,
        Definiteness::PosSemi | Definiteness::Zero => MembershipStatus::Boundary,
        _ if min_eig.abs() <= band => MembershipStatus::Boundary,
        _ => MembershipStatus::Exterior,
    };
    Ok(MembershipResult { status, min_eig, exact_det })
}

/// Float copy of a normalized pencil for fast tolerance-banded queries.
#[derive(Debug, Clone)]
pub struct FloatPencil {
    f0: Vec<Vec<f64>>,
    fx: Vec<Vec<f64>>,
    fy: Vec<Vec<f64>>,
}

impl FloatPencil {
    pub fn new(pc: &Pencil) -> Result<Self> {
        if !pc.is_normalized() {
            return Err(Error::NotNormalized);
        }
        Ok(Self {
            f0: pc.f0.to_f64(),
            fx: pc.fx.to_f64(),
            fy: pc.fy.to_f64(),
        })
    }

    pub fn eval(&self, x: f64, y: f64) -> Vec<Vec<f64>> {
        self.f0
            .iter()
            .zip(&self.fx)
            .zip(&self.fy)
            .map(|((r0, rx), ry)| {
                r0.iter()
                    .zip(rx)
                    .zip(ry)
                    .map(|((a, b), c)| a + x * b + y * c)
                    .collect()
            })
            .collect()
    }

    /// Banded classification by smallest eigenvalue.
    pub fn classify(&self, x: f64, y: f64, tol: f64) -> (MembershipStatus, f64) {
        let m = self.eval(x, y);
        let max_abs = m.iter().flatten().fold(0.0f64, |acc, v| acc.max(v.abs()));
        let band = boundary_band(max_abs, tol);
        let lambda = min_eig_f64(&m);
        let status = if lambda > band {
            MembershipStatus::Interior
        } else if lambda >= -band {
            MembershipStatus::Boundary
        } else {
            MembershipStatus::Exterior
        };
        (status, lambda)
    }
}
