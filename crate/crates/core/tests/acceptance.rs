//! End-to-end acceptance checks. Runs as a plain binary so that every criterion prints
//! its own PASS/FAIL line; exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use freqlmi::bezout::bezoutian;
use freqlmi::numeric::to_f64;
use freqlmi::pencil::boundary_band;
use freqlmi::poly::{cauchy_index, real_roots};
use freqlmi::region::{render_svg, BBox};
use freqlmi::stability::{bezout_stability, hermite_biehler, routh_hurwitz, BezoutVerdict, RouthOutcome};
use freqlmi::{
    build_pencil, classify, curve_samples, freq_split, implicit_poly, lmi_pencil, membership,
    normalize_sign, rat, ratio, region_raster, resultant, rigid_convexity, segment_oracle, Error,
    MembershipStatus, Poly, Poly2, Rat, RigidVerdict, SegmentVerdict, Signature, SymMat, Verdict,
};

type Check = fn() -> Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn sym(rows: &[&[i64]]) -> SymMat {
    SymMat::from_i64(rows).unwrap()
}

fn cubic() -> Poly {
    Poly::from_i64(&[1, 4, 1, 1])
}

fn octic() -> Poly {
    Poly::from_i64(&[336, 198, 496, 117, 183, 20, 24, 1, 1])
}

fn quartic() -> Poly {
    Poly::from_i64(&[-1, -1, 0, 0, 1])
}

fn linear_factor(a: i64) -> Poly {
    Poly::from_i64(&[a, 1])
}

/// Product of linear and quadratic factors with positive coefficients.
fn random_stable(rng: &mut ChaCha8Rng, degree: usize) -> Poly {
    let mut p = Poly::constant(rat(rng.random_range(1..=5)));
    let mut d = 0;
    while d < degree {
        if degree - d >= 2 && rng.random_bool(0.5) {
            p = &p * &Poly::from_i64(&[rng.random_range(1..=10), rng.random_range(1..=10), 1]);
            d += 2;
        } else {
            p = &p * &linear_factor(rng.random_range(1..=10));
            d += 1;
        }
    }
    p
}

fn random_poly(rng: &mut ChaCha8Rng, degree: usize, bound: i64) -> Poly {
    let mut c: Vec<i64> = (0..=degree).map(|_| rng.random_range(-bound..=bound)).collect();
    while c[degree] == 0 {
        c[degree] = rng.random_range(-bound..=bound);
    }
    Poly::from_i64(&c)
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    ratio(rng.random_range(-50..=50), rng.random_range(1..=20))
}

/// Parses one printed pencil entry such as `-29514-20\,x`, `183\,y`, `y` or `-336+x`
/// into `(constant, x coefficient, y coefficient)`.
fn parse_entry(text: &str) -> (i64, i64, i64) {
    let t = text.replace("\\,", "").replace(' ', "");
    let (mut c, mut x, mut y) = (0, 0, 0);
    let mut rest = t.as_str();
    while !rest.is_empty() {
        let end = rest[1..].find(['+', '-']).map_or(rest.len(), |k| k + 1);
        let term = &rest[..end];
        rest = &rest[end..];
        let (sign, body) = match term.as_bytes()[0] {
            b'-' => (-1, &term[1..]),
            b'+' => (1, &term[1..]),
            _ => (1, term),
        };
        let coef = |s: &str| if s.is_empty() { 1 } else { s.parse::<i64>().unwrap() };
        if let Some(k) = body.strip_suffix('x') {
            x += sign * coef(k);
        } else if let Some(k) = body.strip_suffix('y') {
            y += sign * coef(k);
        } else {
            c += sign * body.parse::<i64>().unwrap();
        }
    }
    (c, x, y)
}

const OCTIC_PRINTED: &str = r"1&0&-20&0&117&0&-198&y\\
0&4&0&-66&0&298&y&-336+x\\
-20&0&414&0&-2510&y&4416+x&-24\,y\\
0&-66&0&1150&y&-5504+x&-24\,y&6720-20\,x\\
117&0&-2510&y&15907+x&-24\,y&-29514-20\,x&183\,y\\
0&298&y&-5504+x&-24\,y&28518-20\,x&183\,y&-39312+117\,x\\
-198&y&4416+x&-24\,y&-29514-20\,x&183\,y&58896+117\,x&-496\,y\\
y&-336+x&-24\,y&6720-20\,x&183\,y&-39312+117\,x&-496\,y&66528-198\,x";

fn printed_octic_pencil() -> Vec<Vec<(i64, i64, i64)>> {
    OCTIC_PRINTED
        .split("\\\\")
        .map(|row| row.trim().split('&').map(parse_entry).collect())
        .collect()
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure!(t < budget, "took {t:?}, budget {budget:?}");
    Ok(())
}

fn criterion_1() -> Result<(), String> {
    let start = Instant::now();
    let p = cubic();
    let split = freq_split(&p).map_err(|e| e.to_string())?;
    ensure!(split.q_x == Poly::from_i64(&[1, 0, -1]), "q_x = {}", split.q_x);
    ensure!(split.q_y == Poly::from_i64(&[0, 4, 0, -1]), "q_y = {}", split.q_y);

    let bxy = bezoutian(&split.q_x, &split.q_y, 3).map_err(|e| e.to_string())?;
    ensure!(bxy == sym(&[&[-1, 0, 1], &[0, -3, 0], &[1, 0, -4]]), "Bxy = {bxy}");

    let pc = lmi_pencil(&p).map_err(|e| e.to_string())?;
    ensure!(pc.f0 == sym(&[&[1, 0, -1], &[0, 3, 0], &[-1, 0, 4]]), "F0 = {}", pc.f0);
    ensure!(pc.fx == sym(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, -4]]), "Fx = {}", pc.fx);
    ensure!(pc.fy == sym(&[&[0, 0, 0], &[0, 0, -1], &[0, -1, 0]]), "Fy = {}", pc.fy);

    let f = implicit_poly(&pc);
    let expected = Poly2::from_i64(&[(0, 0, 9), (1, 0, -3), (2, 0, -5), (0, 2, -1), (3, 0, -1)]);
    ensure!(f == expected, "f = {f}");
    ensure!(f.to_string().starts_with("9 - 3 x - 5 x"), "f text {f}");
    within(start, Duration::from_millis(100))
}

fn criterion_2() -> Result<(), String> {
    let start = Instant::now();
    let p = octic();
    let pc = lmi_pencil(&p).map_err(|e| e.to_string())?;
    let printed = printed_octic_pencil();
    ensure!(printed.len() == 8 && printed.iter().all(|r| r.len() == 8), "fixture shape");
    for (i, row) in printed.iter().enumerate() {
        for (j, &(c, x, y)) in row.iter().enumerate() {
            let got = (pc.f0.get(i, j), pc.fx.get(i, j), pc.fy.get(i, j));
            ensure!(
                got == (&rat(c), &rat(x), &rat(y)),
                "entry ({}, {}): got ({}, {}, {}), printed ({c}, {x}, {y})",
                i + 1,
                j + 1,
                got.0,
                got.1,
                got.2
            );
        }
    }
    ensure!(printed[0] == [(1, 0, 0), (0, 0, 0), (-20, 0, 0), (0, 0, 0), (117, 0, 0), (0, 0, 0), (-198, 0, 0), (0, 0, 1)], "row 1 transcription");
    ensure!(printed[7][7] == (66528, -198, 0), "(8,8) transcription");

    let report = classify(&p).map_err(|e| e.to_string())?;
    ensure!(report.verdict == Verdict::Stable, "verdict {:?}", report.verdict);
    let f = implicit_poly(&pc);
    let rc = rigid_convexity(&f, 32, 1).map_err(|e| e.to_string())?;
    ensure!(rc.verdict == RigidVerdict::RigidlyConvex, "rigid {:?}", rc.verdict);
    ensure!(rc.directions_tested == 32, "tested {}", rc.directions_tested);
    within(start, Duration::from_secs(2))
}

fn criterion_3() -> Result<(), String> {
    let start = Instant::now();
    let p = quartic();
    let raw = build_pencil(&p).map_err(|e| e.to_string())?;
    let f = implicit_poly(&raw);
    ensure!(f == Poly2::from_i64(&[(0, 0, -1), (1, 0, -1), (0, 4, 1)]), "f = {f}");
    match normalize_sign(&raw) {
        Err(Error::NotDefinite(s)) => ensure!(s == Signature::new(3, 1, 0), "signature {s}"),
        other => return Err(format!("normalize_sign: {other:?}")),
    }
    let report = classify(&p).map_err(|e| e.to_string())?;
    ensure!(report.verdict == Verdict::Unstable, "verdict {:?}", report.verdict);
    let rc = rigid_convexity(&f, 32, 1).map_err(|e| e.to_string())?;
    ensure!(rc.verdict == RigidVerdict::NotRigidlyConvex, "rigid {:?}", rc.verdict);
    ensure!(rc.degree_f == 4, "degree {}", rc.degree_f);
    ensure!(rc.generic_count == Some(2), "generic count {:?}", rc.generic_count);
    within(start, Duration::from_millis(500))
}

fn criterion_4() -> Result<(), String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut stable_seen = 0;
    for k in 0..240 {
        let degree = rng.random_range(1..=8);
        let constructed = k % 2 == 0;
        let p = if constructed { random_stable(&mut rng, degree) } else { random_poly(&mut rng, degree, 10) };
        let rh = routh_hurwitz(&p).map_err(|e| format!("{p}: {e}"))? == RouthOutcome::Stable;
        let hb = hermite_biehler(&p).map_err(|e| format!("{p}: {e}"))?;
        let bz = bezout_stability(&p).map_err(|e| format!("{p}: {e}"))? == BezoutVerdict::DefiniteStable;
        ensure!(rh == hb && hb == bz, "{p}: routh {rh}, interlacing {hb}, bezout {bz}");
        ensure!(!constructed || rh, "constructed stable {p} not classified stable");
        stable_seen += rh as usize;
    }
    ensure!(stable_seen >= 120, "only {stable_seen} stable cases");
    within(start, Duration::from_secs(10))
}

fn criterion_5() -> Result<(), String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let degree = rng.random_range(1..=8);
        let p = random_poly(&mut rng, degree, 10);
        let split = freq_split(&p).map_err(|e| e.to_string())?;
        let f = implicit_poly(&build_pencil(&p).map_err(|e| e.to_string())?);
        for _ in 0..50 {
            let w = random_rat(&mut rng);
            let r = f.eval(&split.q_x.eval(&w), &split.q_y.eval(&w));
            ensure!(r.is_zero(), "{p} at omega = {w}: residual {r}");
        }
    }
    within(start, Duration::from_secs(30))
}

fn coprime_pair(rng: &mut ChaCha8Rng, deg_g: usize, deg_h: usize) -> (Poly, Poly) {
    loop {
        let g = random_poly(rng, deg_g, 9);
        let h = random_poly(rng, deg_h, 9);
        if g.gcd(&h).deg() == 0 {
            return (g, h);
        }
    }
}

fn criterion_6() -> Result<(), String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let root = random_rat(&mut rng);
        let factor = Poly::new(vec![-root.clone(), rat(1)]);
        let da = rng.random_range(0..=4);
        let db = rng.random_range(0..=4);
        let g = &factor * &random_poly(&mut rng, da, 9);
        let h = &factor * &random_poly(&mut rng, db, 9);
        let n = g.deg().max(h.deg());
        ensure!(g.eval(&root).is_zero() && h.eval(&root).is_zero(), "planting failed");
        let r = resultant(&g, &h, n).map_err(|e| e.to_string())?;
        ensure!(r.is_zero(), "planted root {root}: resultant({g}, {h}) = {r}");
    }
    for _ in 0..100 {
        let da = rng.random_range(1..=5);
        let db = rng.random_range(1..=5);
        let (g, h) = coprime_pair(&mut rng, da, db);
        let r = resultant(&g, &h, da.max(db)).map_err(|e| e.to_string())?;
        ensure!(!r.is_zero(), "coprime ({g}, {h}) has zero resultant");
    }
    within(start, Duration::from_secs(5))
}

fn criterion_7() -> Result<(), String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let dg = rng.random_range(1..=6);
        let dh = rng.random_range(0..=dg);
        let (g, h) = coprime_pair(&mut rng, dg, dh);
        let sig = bezoutian(&g, &h, dg).map_err(|e| e.to_string())?.signature();
        let ci = cauchy_index(&h, &g).map_err(|e| e.to_string())?;
        ensure!(sig.index() == ci, "g = {g}, h = {h}: signature {sig}, Cauchy index {ci}");
    }
    within(start, Duration::from_secs(10))
}

/// Integer box around the part of the curve swept while `ω` ranges over the real roots
/// of `q_x·q_y`.
fn test_box(p: &Poly) -> (i64, i64, i64, i64) {
    let split = freq_split(p).unwrap();
    let roots = real_roots(&(&split.q_x * &split.q_y)).unwrap();
    let w = roots
        .isolating_intervals
        .iter()
        .map(|iv| to_f64(&iv.lo).abs().max(to_f64(&iv.hi).abs()))
        .fold(1.0f64, f64::max);
    let w = rat(w.ceil() as i64);
    let samples = curve_samples(p, &-w.clone(), &w, 401).unwrap();
    let (mut x0, mut y0, mut x1, mut y1) = (0f64, 0f64, 0f64, 0f64);
    for s in &samples {
        let (x, y) = (to_f64(&s.x), to_f64(&s.y));
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    (x0.floor() as i64 - 1, y0.floor() as i64 - 1, x1.ceil() as i64 + 1, y1.ceil() as i64 + 1)
}

fn criterion_8() -> Result<(), String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let tol = 1e-9;
    let (mut total, mut interior, mut in_band, mut band_disagree) = (0usize, 0usize, 0usize, 0usize);
    for _ in 0..20 {
        let degree = rng.random_range(1..=8);
        let p = random_stable(&mut rng, degree);
        let pc = lmi_pencil(&p).map_err(|e| format!("{p}: {e}"))?;
        let f = implicit_poly(&pc);
        let (x0, y0, x1, y1) = test_box(&p);
        for _ in 0..200 {
            let x = ratio(x0 * 1000 + rng.random_range(0..=(x1 - x0) * 1000), 1000);
            let y = ratio(y0 * 1000 + rng.random_range(0..=(y1 - y0) * 1000), 1000);
            let m = membership(&pc, &x, &y, tol).map_err(|e| e.to_string())?;
            let band = boundary_band(to_f64(&pc.eval(&x, &y).max_abs()), tol);
            let banded = m.status == MembershipStatus::Boundary || m.min_eig.abs() <= band;
            let lmi_inside = m.status == MembershipStatus::Interior;
            let oracle_inside = segment_oracle(&f, (&x, &y)).map_err(|e| e.to_string())? == SegmentVerdict::Inside;
            total += 1;
            interior += oracle_inside as usize;
            in_band += banded as usize;
            if lmi_inside != oracle_inside {
                ensure!(banded, "{p} at ({x}, {y}): pencil {:?}, oracle inside {oracle_inside}", m.status);
                band_disagree += 1;
            }
        }
    }
    ensure!(band_disagree * 100 <= total, "{band_disagree} of {total} points disagree inside the band");
    println!(
        "    {total} points, {interior} inside, {in_band} in the boundary band, {band_disagree} band disagreements"
    );
    within(start, Duration::from_secs(60))
}

/// Rectangles `M x y h w v dy h -w z` of the SVG region path.
fn region_rects(svg: &str) -> Vec<(f64, f64, f64, f64)> {
    let start = svg.find(r#"id="region""#).expect("region path");
    let d = &svg[start..];
    let d = &d[d.find(" d=\"").unwrap() + 4..];
    let d = &d[..d.find('"').unwrap()];
    d.split('z')
        .filter(|s| !s.is_empty())
        .map(|cmd| {
            let cmd = cmd.strip_prefix('M').unwrap();
            let (xy, rest) = cmd.split_once('h').unwrap();
            let (x, y) = xy.split_once(' ').unwrap();
            let (w, rest) = rest.split_once('v').unwrap();
            let (h, _) = rest.split_once('h').unwrap();
            let f = |s: &str| s.parse::<f64>().unwrap();
            (f(x), f(y), f(w), f(h))
        })
        .collect()
}

fn covered(rects: &[(f64, f64, f64, f64)], px: f64, py: f64) -> bool {
    rects.iter().any(|&(x, y, w, h)| x <= px && px <= x + w && y <= py && py <= y + h)
}

fn criterion_9() -> Result<(), String> {
    let start = Instant::now();
    let p = cubic();
    let pc = lmi_pencil(&p).map_err(|e| e.to_string())?;
    let bbox = BBox::new(-5.0, -7.0, 2.0, 7.0).map_err(|e| e.to_string())?;
    let curve = curve_samples(&p, &rat(-4), &rat(4), 801).map_err(|e| e.to_string())?;
    let render = || {
        let raster = region_raster(&pc, bbox, (141, 281), 1e-9).unwrap();
        render_svg(bbox, Some(&curve), Some(&raster))
    };
    let svg = render();
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(render);
    ensure!(svg == single, "SVG bytes depend on thread count");
    ensure!(svg == render(), "SVG bytes differ between runs");
    ensure!(svg.contains(r#"id="curve""#), "curve polyline missing");

    let rects = region_rects(&svg);
    ensure!(!rects.is_empty(), "empty region");
    ensure!(covered(&rects, 0.0, 0.0), "origin pixel not in region");
    ensure!(!covered(&rects, -4.0, 0.0), "pixel (-4, 0) in region");
    within(start, Duration::from_secs(10))
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 9] = [
        ("cubic golden fixture", criterion_1),
        ("eighth-degree golden fixture", criterion_2),
        ("unstable quartic fixture", criterion_3),
        ("three-oracle stability equivalence", criterion_4),
        ("implicitization residual", criterion_5),
        ("resultant vanishes exactly on common roots", criterion_6),
        ("Bezoutian signature equals Cauchy index", criterion_7),
        ("membership agrees with segment oracle", criterion_8),
        ("region SVG regression", criterion_9),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({secs:.3} s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.3} s): {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} acceptance criteria failed");
        ExitCode::FAILURE
    }
}
