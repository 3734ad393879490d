use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use freqlmi::json::{
    curve_to_json, membership_to_json, pencil_from_json, pencil_to_json, poly2_to_json,
    raster_to_json, report_to_json, rigid_to_json,
};
use freqlmi::region::{curve_csv, render_svg, BBox};
use freqlmi::{
    build_pencil, classify, curve_samples, implicit_poly, lmi_pencil, membership,
    normalize_sign, parse_rat, region_raster, rigid_convexity, CurveSample, Error, Pencil, Poly,
    Rat,
};

const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser)]
#[command(
    name = "freqlmi",
    version,
    about = "Hurwitz stability and LMI descriptions of frequency-response regions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PolyArgs {
    /// Coefficients, highest degree first (integers, a/b or decimals; put negative
    /// fractions after `--`)
    #[arg(required = true, allow_negative_numbers = true, num_args = 1..)]
    coeffs: Vec<String>,
    /// Read coefficients lowest degree first
    #[arg(long)]
    ascending: bool,
}

#[derive(Args)]
struct OmegaArgs {
    /// Lowest sampled frequency
    #[arg(long, default_value = "-10", allow_hyphen_values = true)]
    omega_min: String,
    /// Highest sampled frequency
    #[arg(long, default_value = "10", allow_hyphen_values = true)]
    omega_max: String,
    /// Number of equally spaced frequencies
    #[arg(long, default_value_t = 801)]
    samples: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum CurveFormat {
    Json,
    Csv,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum RegionFormat {
    Json,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Routh-Hurwitz, Hermite-Biehler and Bezoutian stability verdicts
    Stability(PolyArgs),
    /// Symmetric pencil F(x, y) = F0 + x Fx + y Fy, sign-normalized when possible
    Pencil(PolyArgs),
    /// Defining polynomial det F(x, y) of the frequency-response curve
    Implicit(PolyArgs),
    /// LMI membership of a point
    Member {
        /// Coefficients, highest degree first (omit with --pencil)
        #[arg(allow_negative_numbers = true, required_unless_present = "pencil")]
        coeffs: Vec<String>,
        /// Read coefficients lowest degree first
        #[arg(long)]
        ascending: bool,
        /// Pencil JSON as printed by the `pencil` command
        #[arg(long, conflicts_with = "coeffs")]
        pencil: Option<PathBuf>,
        /// Query point; integers, a/b or decimals
        #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_hyphen_values = true, required = true)]
        point: Vec<String>,
        /// Relative width of the boundary band
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Probe rigid convexity of the defining polynomial along random lines through the origin
    Rigid {
        #[command(flatten)]
        poly: PolyArgs,
        /// Number of non-degenerate directions to test (at least 8)
        #[arg(long, default_value_t = 32)]
        directions: usize,
        /// Seed for the direction generator
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Exact samples of p(jw)
    Curve {
        #[command(flatten)]
        poly: PolyArgs,
        #[command(flatten)]
        omega: OmegaArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: CurveFormat,
        /// Plot window for svg output; defaults to the sample extent
        #[arg(long, num_args = 4, value_names = ["X0", "Y0", "X1", "Y1"], allow_hyphen_values = true)]
        bbox: Option<Vec<f64>>,
    },
    /// Membership raster of the LMI set over a bounding box
    Region {
        #[command(flatten)]
        poly: PolyArgs,
        /// Raster window
        #[arg(long, num_args = 4, value_names = ["X0", "Y0", "X1", "Y1"], allow_hyphen_values = true, required = true)]
        bbox: Vec<f64>,
        /// Sample points per axis, window corners included
        #[arg(long, num_args = 2, value_names = ["W", "H"], default_values_t = [100, 100])]
        resolution: Vec<usize>,
        /// Relative width of the boundary band
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, value_enum, default_value = "json")]
        format: RegionFormat,
        #[command(flatten)]
        omega: OmegaArgs,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Stability(_) => "stability",
            Command::Pencil(_) => "pencil",
            Command::Implicit(_) => "implicit",
            Command::Member { .. } => "member",
            Command::Rigid { .. } => "rigid",
            Command::Curve { .. } => "curve",
            Command::Region { .. } => "region",
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Out = Result<String, Failure>;

fn parse_poly(coeffs: &[String], ascending: bool) -> Result<Poly, Failure> {
    let p = Poly::parse(&coeffs.join(" "), ascending).map_err(|e| Failure::Usage(e.to_string()))?;
    if p.deg() < 1 {
        return Err(Failure::Usage("polynomial must have degree at least 1".into()));
    }
    Ok(p)
}

fn parse_value(text: &str, what: &str) -> Result<Rat, Failure> {
    parse_rat(text).map_err(|e| Failure::Usage(format!("{what}: {e}")))
}

fn parse_omega(o: &OmegaArgs) -> Result<(Rat, Rat), Failure> {
    Ok((parse_value(&o.omega_min, "--omega-min")?, parse_value(&o.omega_max, "--omega-max")?))
}

fn bbox_of(v: &[f64]) -> Result<BBox, Failure> {
    Ok(BBox::new(v[0], v[1], v[2], v[3])?)
}

fn sample_extent(samples: &[CurveSample]) -> Result<BBox, Failure> {
    let xs = samples.iter().map(|s| freqlmi::numeric::to_f64(&s.x));
    let ys = samples.iter().map(|s| freqlmi::numeric::to_f64(&s.y));
    let span = |it: &mut dyn Iterator<Item = f64>| {
        let (lo, hi) = it.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)));
        let pad = ((hi - lo) * 0.05).max(1.0);
        (lo - pad, hi + pad)
    };
    let (x0, x1) = span(&mut { xs });
    let (y0, y1) = span(&mut { ys });
    Ok(BBox::new(x0, y0, x1, y1)?)
}

fn compact(v: Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

/// Sign-normalized pencil when one exists, otherwise the raw Bézoutian pencil.
fn best_pencil(p: &Poly) -> Result<Pencil, Failure> {
    let raw = build_pencil(p)?;
    Ok(normalize_sign(&raw).unwrap_or(raw))
}

fn run(cmd: Command) -> Out {
    match cmd {
        Command::Stability(a) => {
            let p = parse_poly(&a.coeffs, a.ascending)?;
            Ok(compact(report_to_json(&classify(&p)?)))
        }
        Command::Pencil(a) => {
            let p = parse_poly(&a.coeffs, a.ascending)?;
            Ok(compact(pencil_to_json(&best_pencil(&p)?)))
        }
        Command::Implicit(a) => {
            let p = parse_poly(&a.coeffs, a.ascending)?;
            Ok(compact(poly2_to_json(&implicit_poly(&best_pencil(&p)?))))
        }
        Command::Member { coeffs, ascending, pencil, point, tol } => {
            let pc = match pencil {
                Some(path) => {
                    let text = fs::read_to_string(&path)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    let v: Value = serde_json::from_str(&text)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    pencil_from_json(&v)?
                }
                None => lmi_pencil(&parse_poly(&coeffs, ascending)?)?,
            };
            let x = parse_value(&point[0], "--point")?;
            let y = parse_value(&point[1], "--point")?;
            Ok(compact(membership_to_json(&membership(&pc, &x, &y, tol)?)))
        }
        Command::Rigid { poly, directions, seed } => {
            let p = parse_poly(&poly.coeffs, poly.ascending)?;
            let f = implicit_poly(&best_pencil(&p)?);
            Ok(compact(rigid_to_json(&rigid_convexity(&f, directions, seed)?)))
        }
        Command::Curve { poly, omega, format, bbox } => {
            let p = parse_poly(&poly.coeffs, poly.ascending)?;
            let (lo, hi) = parse_omega(&omega)?;
            let samples = curve_samples(&p, &lo, &hi, omega.samples)?;
            Ok(match format {
                CurveFormat::Json => compact(curve_to_json(&samples)),
                CurveFormat::Csv => curve_csv(&samples),
                CurveFormat::Svg => {
                    let bbox = match bbox {
                        Some(v) => bbox_of(&v)?,
                        None => sample_extent(&samples)?,
                    };
                    render_svg(bbox, Some(&samples), None)
                }
            })
        }
        Command::Region { poly, bbox, resolution, tol, format, omega } => {
            let p = parse_poly(&poly.coeffs, poly.ascending)?;
            let bbox = bbox_of(&bbox)?;
            let pc = lmi_pencil(&p)?;
            let raster = region_raster(&pc, bbox, (resolution[0], resolution[1]), tol)?;
            Ok(match format {
                RegionFormat::Json => compact(raster_to_json(&raster)),
                RegionFormat::Svg => {
                    let (lo, hi) = parse_omega(&omega)?;
                    let samples = curve_samples(&p, &lo, &hi, omega.samples)?;
                    render_svg(bbox, Some(&samples), Some(&raster))
                }
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let verb = cli.command.name();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            let mut cmd = Cli::command();
            let help = cmd.find_subcommand_mut(verb).map(|c| c.render_help().to_string());
            eprintln!("error: {msg}\n\n{}", help.unwrap_or_default());
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("{}", json!({ "error": e.name(), "message": e.to_string() }));
            ExitCode::from(3)
        }
    }
}
