//! The `rulekit` command line.
//!
//! Exit codes: 0 success, 1 verification failure or inconsistent
//! proposition, 2 malformed input or flags, 3 geometric domain error.

pub mod obj;
pub mod rsd;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::affine::{image_point, mapping_residuals, non_conoidal};
use crate::classify::{classify, proposition_suite_with, ClassificationReport, PropositionReport, Status, SuiteConfig};
use crate::curves::{integrate_curve, CurveFamily, SurfaceCurve};
use crate::error::{Error, Result};
use crate::frame::{Domain, InvariantTriple, RuledSurface, Vec3};
use crate::mutation::Mutation;
use crate::relgeom::{pick, tchebychev};
use crate::tensors::fundamental_forms;
use crate::zoo;

pub use verify::{run_suite, Grid, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "rulekit", version, about = "Skew ruled surfaces and their relative normalizations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample K, J, the Tchebychev vector, div and rot over a grid.
    Eval(Common),
    /// Surface-class predicates and proposition checks.
    Classify(Common),
    /// Compare every closed form with its oracle.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Emit the report as JSON instead of a table.
        #[arg(long)]
        json: bool,
        #[arg(long, hide = true, value_name = "FORMULA:SITE")]
        mutate: Option<Mutation>,
    },
    /// Export the base surface or its affine normal image as OBJ.
    Mesh {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Target::Base)]
        target: Target,
    },
    /// Integrate one curve family from every grid point on u = u0.
    Curves {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        family: CurveFamily,
        /// Largest RK4 step in u.
        #[arg(long, default_value_t = 1e-2)]
        step: f64,
    },
    /// Area, conformal and isometry residuals of the map onto the affine image.
    MapCheck(Common),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Base,
    Affine,
}

#[derive(Debug, Args)]
struct Common {
    /// A `.rsd` file or `builtin:NAME`.
    #[arg(long)]
    surface: String,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    u0: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    u1: Option<f64>,
    #[arg(long, default_value_t = -2.0, allow_negative_numbers = true)]
    v0: f64,
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    v1: f64,
    #[arg(long, default_value_t = 33)]
    nu: usize,
    #[arg(long, default_value_t = 33)]
    nv: usize,
    #[arg(long, default_value_t = 1e-5)]
    tol: f64,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Loads `builtin:NAME` or a definition file.
pub fn load_triple(spec: &str) -> Result<InvariantTriple> {
    match spec.strip_prefix("builtin:") {
        Some(name) => zoo::builtin(name),
        None => rsd::read_definition(std::path::Path::new(spec)),
    }
}

fn invalid(msg: String) -> Error {
    Error::InvalidArgument(msg)
}

impl Common {
    fn grid(&self, domain: Domain) -> Result<Grid> {
        let u0 = self.u0.unwrap_or(domain.lo);
        let u1 = self.u1.unwrap_or(domain.hi);
        for u in [u0, u1] {
            if !domain.contains(u) {
                return Err(invalid(format!("u = {u} lies outside the domain [{}, {}]", domain.lo, domain.hi)));
            }
        }
        if !(u0 < u1) || !(self.v0 < self.v1) || !self.v0.is_finite() || !self.v1.is_finite() {
            return Err(invalid("grid bounds must be finite and increasing".into()));
        }
        if self.nu < 2 || self.nv < 2 {
            return Err(invalid(format!("grid needs at least 2x2 points, got {}x{}", self.nu, self.nv)));
        }
        if !self.alpha.is_finite() {
            return Err(invalid(format!("alpha = {} is not finite", self.alpha)));
        }
        if !(self.tol >= 0.0 && self.tol.is_finite()) {
            return Err(invalid(format!("tolerance {} must be non-negative", self.tol)));
        }
        Ok(Grid {
            u0,
            u1,
            nu: self.nu,
            v0: self.v0,
            v1: self.v1,
            nv: self.nv,
        })
    }

    fn load(&self) -> Result<(RuledSurface, Grid)> {
        let triple = load_triple(&self.surface)?;
        let grid = self.grid(triple.domain)?;
        Ok((RuledSurface::new(triple)?, grid))
    }

    fn emit(&self, text: &str, stdout: &mut dyn Write) -> Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, text)?,
            None => stdout.write_all(text.as_bytes())?,
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sample {
    pub u: f64,
    pub v: f64,
    #[serde(rename = "K")]
    pub gauss: f64,
    #[serde(rename = "J")]
    pub pick: f64,
    #[serde(rename = "T")]
    pub tchebychev: [f64; 3],
    pub div: f64,
    pub rot: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Meta {
    pub version: &'static str,
    pub tol: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleReport {
    pub surface: String,
    pub alpha: f64,
    pub grid: Grid,
    pub samples: Vec<Sample>,
    pub meta: Meta,
}

fn meta(tol: f64) -> Meta {
    Meta {
        version: env!("CARGO_PKG_VERSION"),
        tol,
    }
}

pub fn sample_report(name: &str, surface: &RuledSurface, alpha: f64, grid: &Grid, tol: f64) -> Result<SampleReport> {
    let samples = grid
        .points()
        .par_iter()
        .map(|&(u, v)| {
            let t = tchebychev(surface, u, v, alpha)?;
            Ok(Sample {
                u,
                v,
                gauss: fundamental_forms(surface, u, v)?.gauss,
                pick: pick(surface, u, v, alpha)?,
                tchebychev: [t.vec.x, t.vec.y, t.vec.z],
                div: t.div,
                rot: t.rot,
            })
        })
        .collect::<Result<_>>()?;
    Ok(SampleReport {
        surface: name.to_string(),
        alpha,
        grid: *grid,
        samples,
        meta: meta(tol),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassifyOutput {
    pub surface: String,
    pub classification: ClassificationReport,
    pub propositions: PropositionReport,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveRun {
    pub start: (f64, f64),
    pub curve: SurfaceCurve,
    /// Why integration stopped early, if it did.
    pub aborted: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurvesOutput {
    pub surface: String,
    pub family: CurveFamily,
    pub step: f64,
    pub u_end: f64,
    pub curves: Vec<CurveRun>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MapSample {
    pub u: f64,
    pub v: f64,
    pub area: f64,
    pub conformal: f64,
    pub isometry: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MapCheckOutput {
    pub surface: String,
    pub grid: Grid,
    pub eps0: f64,
    pub max_area: f64,
    pub max_conformal: f64,
    pub max_isometry: f64,
    pub samples: Vec<MapSample>,
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn grid_points<F>(grid: &Grid, f: F) -> Result<Vec<Vec3>>
where
    F: Fn(f64, f64) -> Result<Vec3> + Sync,
{
    grid.points().par_iter().map(|&(u, v)| f(u, v)).collect()
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Eval(c) => {
            let (s, grid) = c.load()?;
            let report = sample_report(&c.surface, &s, c.alpha, &grid, c.tol)?;
            c.emit(&json(&report)?, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Classify(c) => {
            let mut triple = load_triple(&c.surface)?;
            let grid = c.grid(triple.domain)?;
            triple.domain = Domain::new(grid.u0, grid.u1)?;
            let s = RuledSurface::new(triple)?;
            let classification = classify(&s, grid.nu.max(8), c.tol)?;
            let config = SuiteConfig {
                nu: grid.nu,
                nv: grid.nv,
                v0: grid.v0,
                v1: grid.v1,
                tol: c.tol,
            };
            let propositions = proposition_suite_with(&s, c.alpha, &config)?;
            let inconsistent = propositions.propositions.values().any(|p| p.status == Status::Inconsistent);
            let out = ClassifyOutput {
                surface: c.surface.clone(),
                classification,
                propositions,
            };
            c.emit(&json(&out)?, stdout)?;
            Ok(if inconsistent { EXIT_FAILED } else { EXIT_OK })
        }
        Command::Verify { common: c, json: as_json, mutate } => {
            let (s, grid) = c.load()?;
            let s = s.with_mutation(mutate);
            let report = run_suite(&s, c.alpha, &grid, c.tol)?;
            let text = if as_json { json(&report)? } else { report.table() };
            c.emit(&text, stdout)?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Mesh { common: c, target } => {
            let (s, grid) = c.load()?;
            let points = match target {
                Target::Base => grid_points(&grid, |u, v| s.point(u, v))?,
                Target::Affine => {
                    for u in grid.us() {
                        non_conoidal(&s, u, 0)?;
                    }
                    grid_points(&grid, |u, v| image_point(&s, u, v))?
                }
            };
            c.emit(&obj::obj_string(&points, grid.nu, grid.nv)?, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Curves { common: c, family, step } => {
            if family == CurveFamily::Custom {
                return Err(invalid("custom curves cannot be integrated".into()));
            }
            let (s, grid) = c.load()?;
            let curves = grid
                .vs()
                .par_iter()
                .map(|&v| {
                    let start = (grid.u0, v);
                    match integrate_curve(&s, family, start, grid.u1, step) {
                        Ok(curve) => Ok(CurveRun { start, curve, aborted: None }),
                        Err(Error::CurveAborted { partial, cause }) => Ok(CurveRun {
                            start,
                            curve: *partial,
                            aborted: Some(cause.to_string()),
                        }),
                        Err(e) => Err(e),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            let out = CurvesOutput {
                surface: c.surface.clone(),
                family,
                step,
                u_end: grid.u1,
                curves,
            };
            c.emit(&json(&out)?, stdout)?;
            Ok(EXIT_OK)
        }
        Command::MapCheck(c) => {
            let (s, grid) = c.load()?;
            let residuals = grid
                .points()
                .par_iter()
                .map(|&(u, v)| mapping_residuals(&s, u, v).map(|r| (u, v, r)))
                .collect::<Result<Vec<_>>>()?;
            let eps0 = residuals[0].2.eps0;
            let max = |f: fn(&MapSample) -> f64, xs: &[MapSample]| xs.iter().map(|x| f(x).abs()).fold(0.0, f64::max);
            let samples: Vec<MapSample> = residuals
                .into_iter()
                .map(|(u, v, r)| MapSample {
                    u,
                    v,
                    area: r.area,
                    conformal: r.conformal,
                    isometry: r.isometry,
                })
                .collect();
            let out = MapCheckOutput {
                surface: c.surface.clone(),
                grid,
                eps0,
                max_area: max(|x| x.area, &samples),
                max_conformal: max(|x| x.conformal, &samples),
                max_isometry: max(|x| x.isometry, &samples),
                samples,
            };
            c.emit(&json(&out)?, stdout)?;
            Ok(EXIT_OK)
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Inconsistent { .. } => EXIT_FAILED,
        e if e.is_input_error() => EXIT_INPUT,
        _ => EXIT_DOMAIN,
    }
}

/// Runs the command line with explicit output streams.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_INPUT;
            }
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
    };
    match execute(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("rulekit").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn flag_errors_exit_two() {
        assert_eq!(run_args(&["eval", "--surface", "builtin:helicoid", "--nu", "1"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["eval", "--surface", "builtin:nope"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["eval", "--surface", "builtin:helicoid", "--u1", "7"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["verify", "--surface", "builtin:generic", "--mutate", "pick:9"]).0, EXIT_INPUT);
    }

    #[test]
    fn help_exits_zero_on_stdout() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("map-check"));
    }

    #[test]
    fn conoidal_affine_mesh_is_a_domain_error() {
        let (code, _, err) = run_args(&["mesh", "--surface", "builtin:conoid", "--target", "affine", "--nu", "3", "--nv", "3"]);
        assert_eq!(code, EXIT_DOMAIN);
        assert!(err.contains("conoidal"));
    }

    #[test]
    fn eval_report_shape() {
        let (code, out, _) = run_args(&["eval", "--surface", "builtin:generic", "--nu", "3", "--nv", "2"]);
        assert_eq!(code, EXIT_OK);
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        let samples = doc["samples"].as_array().unwrap();
        assert_eq!(samples.len(), 6);
        assert_eq!(samples[1]["u"], 0.0);
        assert_eq!(samples[1]["v"], 2.0);
        assert_eq!(samples[0]["T"].as_array().unwrap().len(), 3);
        assert_eq!(doc["grid"]["nv"], 2);
    }

    #[test]
    fn exit_codes_by_error_kind() {
        assert_eq!(exit_code(&Error::TorsalRuling { u: 0.0, delta: 0.0 }), EXIT_DOMAIN);
        assert_eq!(exit_code(&Error::InvalidArgument(String::new())), EXIT_INPUT);
        assert_eq!(
            exit_code(&Error::Inconsistent {
                what: String::new(),
                residual: 1.0
            }),
            EXIT_FAILED
        );
    }
}
