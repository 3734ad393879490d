//! Geometry of the inner frequency-response set: curve samples, an exact
//! segment-crossing membership oracle, rigid-convexity probing along lines through the
//! origin, and raster/SVG/CSV export.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numeric::{format_sig, format_sig15, rat, to_f64, Rat};
use crate::pencil::{FloatPencil, MembershipStatus, Pencil};
use crate::poly::{freq_split, restrict_line, restrict_segment, Bound, Poly, Poly2, SturmChain};

/// A point `p(jω) = x + jy` of the frequency response.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSample {
    pub omega: Rat,
    pub x: Rat,
    pub y: Rat,
}

/// Exact samples at `count` equally spaced frequencies from `omega_min` to `omega_max`.
pub fn curve_samples(p: &Poly, omega_min: &Rat, omega_max: &Rat, count: usize) -> Result<Vec<CurveSample>> {
    if count < 2 {
        return Err(Error::BadRange(format!("need at least 2 samples, got {count}")));
    }
    if omega_min >= omega_max {
        return Err(Error::BadRange("omega_min must be below omega_max".into()));
    }
    let split = freq_split(p)?;
    let step = (omega_max - omega_min) / rat(count as i64 - 1);
    Ok((0..count)
        .map(|k| {
            let omega = omega_min + &step * rat(k as i64);
            CurveSample {
                x: split.q_x.eval(&omega),
                y: split.q_y.eval(&omega),
                omega,
            }
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentVerdict {
    /// The open segment from the origin to the target, and the target itself, avoid the curve.
    Inside,
    /// Number of distinct curve points on the segment, excluding the origin.
    OutsideOrBoundary { crossings: usize },
}

/// Decides membership in the open component of the origin by counting roots of
/// `f(t·x, t·y)` on `t ∈ (0, 1]`.
pub fn segment_oracle(f: &Poly2, target: (&Rat, &Rat)) -> Result<SegmentVerdict> {
    if f.coeff(0, 0).is_zero() {
        return Err(Error::OriginOnCurve);
    }
    let u = restrict_segment(f, target);
    let crossings = SturmChain::new(&u)?.count(&Bound::Finite(Rat::zero()), &Bound::Finite(rat(1)));
    Ok(if crossings == 0 {
        SegmentVerdict::Inside
    } else {
        SegmentVerdict::OutsideOrBoundary { crossings }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RigidVerdict {
    RigidlyConvex,
    NotRigidlyConvex,
    Inconclusive,
}

impl RigidVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            RigidVerdict::RigidlyConvex => "RigidlyConvex",
            RigidVerdict::NotRigidlyConvex => "NotRigidlyConvex",
            RigidVerdict::Inconclusive => "Inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectionProbe {
    pub direction: (Rat, Rat),
    pub real_root_count: usize,
    pub restricted_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidConvexityReport {
    pub degree_f: usize,
    pub directions_tested: usize,
    /// Directions skipped because the restriction lost degree (line meets the curve at infinity).
    pub degenerate_skipped: usize,
    pub per_direction: Vec<DirectionProbe>,
    /// Most frequent real-root count over the tested directions.
    pub generic_count: Option<usize>,
    pub verdict: RigidVerdict,
}

/// Probes lines through the origin in pseudo-random rational directions and checks that
/// each meets `f = 0` in `deg f` real points counted with multiplicity.
///
/// Directions come from the half-angle parametrization `(b² − a², 2ab)` with a seeded
/// generator, so reports are reproducible.
pub fn rigid_convexity(f: &Poly2, directions: usize, seed: u64) -> Result<RigidConvexityReport> {
    if directions < 8 {
        return Err(Error::InvalidArgument(format!(
            "need at least 8 directions, got {directions}"
        )));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.coeff(0, 0).is_zero() {
        return Err(Error::OriginOnCurve);
    }
    let degree_f = f.total_degree();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut per_direction = Vec::with_capacity(directions);
    let mut degenerate_skipped = 0;
    let budget = 4 * directions;
    let mut attempts = 0;
    while per_direction.len() < directions && attempts < budget {
        attempts += 1;
        let a: i64 = rng.random_range(-64..=64);
        let b: i64 = rng.random_range(1..=64);
        let direction = (rat(b * b - a * a), rat(2 * a * b));
        let u = restrict_line(f, &direction.0, &direction.1)?;
        if u.deg() < degree_f {
            degenerate_skipped += 1;
            continue;
        }
        let real_root_count = u.count_roots_with_multiplicity(Bound::NegInf, Bound::PosInf)?;
        per_direction.push(DirectionProbe {
            direction,
            real_root_count,
            restricted_degree: u.deg(),
        });
    }
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    for probe in &per_direction {
        *histogram.entry(probe.real_root_count).or_default() += 1;
    }
    let generic_count = histogram
        .iter()
        .max_by_key(|&(count, freq)| (*freq, std::cmp::Reverse(*count)))
        .map(|(count, _)| *count);
    let verdict = if per_direction.iter().any(|p| p.real_root_count < degree_f) {
        RigidVerdict::NotRigidlyConvex
    } else if per_direction.len() == directions {
        RigidVerdict::RigidlyConvex
    } else {
        RigidVerdict::Inconclusive
    };
    Ok(RigidConvexityReport {
        degree_f,
        directions_tested: per_direction.len(),
        degenerate_skipped,
        per_direction,
        generic_count,
        verdict,
    })
}

/// Axis-aligned box `[x0, x1] × [y0, y1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BBox {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl BBox {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        if !(x0 < x1 && y0 < y1) || ![x0, y0, x1, y1].iter().all(|v| v.is_finite()) {
            return Err(Error::BadRange(format!("bad bounding box ({x0}, {y0}, {x1}, {y1})")));
        }
        Ok(Self { x0, y0, x1, y1 })
    }
}

/// Membership grid sampled at `width × height` points spanning the box, corners included.
/// Row `j` holds `y = y0 + j·(y1 − y0)/(height − 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Raster {
    pub bbox: BBox,
    pub width: usize,
    pub height: usize,
    pub cells: Vec<MembershipStatus>,
}

impl Raster {
    pub fn x_at(&self, i: usize) -> f64 {
        self.bbox.x0 + (self.bbox.x1 - self.bbox.x0) * i as f64 / (self.width - 1) as f64
    }

    pub fn y_at(&self, j: usize) -> f64 {
        self.bbox.y0 + (self.bbox.y1 - self.bbox.y0) * j as f64 / (self.height - 1) as f64
    }

    pub fn get(&self, i: usize, j: usize) -> MembershipStatus {
        self.cells[j * self.width + i]
    }

    /// Pixel whose sample point is nearest to `(x, y)`.
    pub fn nearest_pixel(&self, x: f64, y: f64) -> (usize, usize) {
        let fx = (x - self.bbox.x0) / (self.bbox.x1 - self.bbox.x0) * (self.width - 1) as f64;
        let fy = (y - self.bbox.y0) / (self.bbox.y1 - self.bbox.y0) * (self.height - 1) as f64;
        let clamp = |v: f64, n: usize| v.round().clamp(0.0, (n - 1) as f64) as usize;
        (clamp(fx, self.width), clamp(fy, self.height))
    }

    /// One string per row, top row (largest y) first: `I`, `B`, `E` per pixel.
    pub fn rows_text(&self) -> Vec<String> {
        (0..self.height)
            .rev()
            .map(|j| {
                (0..self.width)
                    .map(|i| match self.get(i, j) {
                        MembershipStatus::Interior => 'I',
                        MembershipStatus::Boundary => 'B',
                        MembershipStatus::Exterior => 'E',
                    })
                    .collect()
            })
            .collect()
    }
}

/// Per-pixel banded LMI membership. Rows are evaluated in parallel; the result does not
/// depend on evaluation order.
pub fn region_raster(pc: &Pencil, bbox: BBox, resolution: (usize, usize), tol: f64) -> Result<Raster> {
    let (width, height) = resolution;
    if width < 2 || height < 2 {
        return Err(Error::BadRange(format!("resolution must be at least 2x2, got {width}x{height}")));
    }
    let fp = FloatPencil::new(pc)?;
    let mut raster = Raster { bbox, width, height, cells: Vec::new() };
    let rows: Vec<Vec<MembershipStatus>> = (0..height)
        .into_par_iter()
        .map(|j| {
            let y = raster.y_at(j);
            (0..width).map(|i| fp.classify(raster.x_at(i), y, tol).0).collect()
        })
        .collect();
    raster.cells = rows.into_iter().flatten().collect();
    Ok(raster)
}

/// CSV with header `omega,x,y`, values printed with 15 significant digits.
pub fn curve_csv(samples: &[CurveSample]) -> String {
    let mut out = String::from("omega,x,y\n");
    for s in samples {
        let _ = writeln!(
            out,
            "{},{},{}",
            format_sig15(&s.omega),
            format_sig15(&s.x),
            format_sig15(&s.y)
        );
    }
    out
}

fn num(v: f64) -> String {
    format_sig(v, 12)
}

/// SVG path of the non-exterior pixels, one rectangle per horizontal run.
pub fn region_path(raster: &Raster) -> String {
    let dx = (raster.bbox.x1 - raster.bbox.x0) / (raster.width - 1) as f64;
    let dy = (raster.bbox.y1 - raster.bbox.y0) / (raster.height - 1) as f64;
    let mut d = String::new();
    for j in 0..raster.height {
        let mut i = 0;
        while i < raster.width {
            if raster.get(i, j) == MembershipStatus::Exterior {
                i += 1;
                continue;
            }
            let start = i;
            while i < raster.width && raster.get(i, j) != MembershipStatus::Exterior {
                i += 1;
            }
            let x = raster.x_at(start) - dx / 2.0;
            let y = raster.y_at(j) - dy / 2.0;
            let w = dx * (i - start) as f64;
            let _ = write!(d, "M{} {}h{}v{}h{}z", num(x), num(y), num(w), num(dy), num(-w));
        }
    }
    d
}

/// SVG document in data coordinates (`y` pointing up) with the optional shaded region
/// and the optional curve polyline.
pub fn render_svg(bbox: BBox, curve: Option<&[CurveSample]>, region: Option<&Raster>) -> String {
    let w = bbox.x1 - bbox.x0;
    let h = bbox.y1 - bbox.y0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        num(bbox.x0),
        num(-bbox.y1),
        num(w),
        num(h)
    );
    out.push_str("<g transform=\"matrix(1 0 0 -1 0 0)\">\n");
    if let Some(raster) = region {
        let _ = writeln!(
            out,
            r##"<path id="region" fill="#9ecae1" stroke="none" d="{}"/>"##,
            region_path(raster)
        );
    }
    if let Some(samples) = curve {
        let pts: Vec<String> = samples
            .iter()
            .map(|s| format!("{},{}", num(to_f64(&s.x)), num(to_f64(&s.y))))
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline id="curve" fill="none" stroke="black" stroke-width="1" vector-effect="non-scaling-stroke" points="{}"/>"#,
            pts.join(" ")
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}
