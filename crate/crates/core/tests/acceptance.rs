//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use rulekit::affine::{
    image_edlinger_check, image_metric, image_point, mapping_residuals, self_affine_residual, EdlingerBranch,
    ImageParametrization,
};
use rulekit::cli::{run_suite, Grid};
use rulekit::curves::{family_slope, tchebychev_alignment, CurveFamily};
use rulekit::frame::linspace;
use rulekit::mutation::Mutation;
use rulekit::oracle::{extract_invariants, numeric_metric_of, FDConfig};
use rulekit::relgeom::{darboux, pick, tchebychev};
use rulekit::tensors::relative_data;
use rulekit::{zoo, Result, RuledSurface};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Result<Outcome> {
    Ok(Outcome { pass, detail })
}

fn grid_points(s: &RuledSurface, n: usize) -> Vec<(f64, f64)> {
    let d = s.domain();
    let vs = linspace(-2.0, 2.0, n);
    linspace(d.lo, d.hi, n).into_iter().flat_map(|u| vs.iter().map(move |&v| (u, v))).collect()
}

fn max_abs<F: FnMut(f64, f64) -> Result<f64>>(s: &RuledSurface, n: usize, mut f: F) -> Result<f64> {
    let mut m = 0.0f64;
    for (u, v) in grid_points(s, n) {
        m = m.max(f(u, v)?.abs());
    }
    Ok(m)
}

fn closed_vs_oracle() -> Result<Outcome> {
    let s = zoo::surface("generic")?;
    let grid = Grid {
        u0: 0.2,
        u1: 3.0,
        nu: 9,
        v0: -2.0,
        v1: 2.0,
        nv: 9,
    };
    let exact = ["g", "h", "K", "G"];
    let fd = ["y", "A", "J", "T", "div", "rot"];
    let (mut worst_exact, mut worst_fd) = (0.0f64, 0.0f64);
    for alpha in [0.0, 0.3, 1.0] {
        let report = run_suite(&s, alpha, &grid, 1e-5)?;
        for q in exact {
            worst_exact = worst_exact.max(report.row(q).expect(q).relative_error);
        }
        for q in fd {
            worst_fd = worst_fd.max(report.row(q).expect(q).relative_error);
        }
    }
    outcome(
        worst_exact <= 1e-8 && worst_fd <= 1e-5,
        format!("exact-jet rel {worst_exact:.2e} <= 1e-8, fd rel {worst_fd:.2e} <= 1e-5"),
    )
}

fn helicoid_pick() -> Result<Outcome> {
    let s = zoo::surface("helicoid")?;
    let families = [CurveFamily::Asymptotic, CurveFamily::UCurve, CurveFamily::KCurve];
    let (mut j, mut spread, mut tangent) = (0.0f64, 0.0f64, 0.0f64);
    for alpha in [0.0, 1.0] {
        j = j.max(max_abs(&s, 9, |u, v| pick(&s, u, v, alpha))?);
        spread = spread.max(max_abs(&s, 9, |u, v| {
            let mut slopes = Vec::new();
            for f in families {
                slopes.push(family_slope(&s, f, u, v)?.for_family(f));
            }
            Ok(slopes.iter().cloned().fold(f64::MIN, f64::max) - slopes.iter().cloned().fold(f64::MAX, f64::min))
        })?);
        tangent = tangent.max(max_abs(&s, 9, |u, v| {
            let vp = family_slope(&s, CurveFamily::Asymptotic, u, v)?.for_family(CurveFamily::Asymptotic);
            Ok(tchebychev_alignment(&s, alpha, u, v, vp)?.tangent_residual)
        })?);
    }
    outcome(
        j <= 1e-10 && spread <= 1e-10 && tangent <= 1e-8,
        format!("|J| {j:.1e}, slope spread {spread:.1e}, tangent residual {tangent:.1e}"),
    )
}

fn vanishing_div_rot() -> Result<Outcome> {
    let conoid = zoo::surface("conoid")?;
    let edlinger = zoo::surface("edlinger")?;
    let helicoid = zoo::surface("helicoid")?;
    let d0 = max_abs(&conoid, 9, |u, v| Ok(tchebychev(&conoid, u, v, 0.0)?.div))?;
    let mut rot = 0.0f64;
    for alpha in [0.0, 1.0] {
        rot = rot.max(max_abs(&edlinger, 9, |u, v| Ok(tchebychev(&edlinger, u, v, alpha)?.rot))?);
    }
    let d1 = max_abs(&helicoid, 9, |u, v| Ok(tchebychev(&helicoid, u, v, 0.3)?.div))?;
    outcome(
        d0 <= 1e-7 && rot <= 1e-7 && d1 <= 1e-7,
        format!("conoid div {d0:.1e}, edlinger rot {rot:.1e}, helicoid div {d1:.1e}"),
    )
}

fn planar_normals() -> Result<Outcome> {
    let s = zoo::surface("skewconoid")?;
    let z0 = s.frame_at(s.domain().lo)?.z;
    let drift = max_abs(&s, 9, |u, _| Ok((s.frame_at(u)?.z - z0).norm()))?;
    let dot = |alpha: f64| max_abs(&s, 9, |u, v| Ok(relative_data(&s, u, v, alpha)?.y.dot(&s.frame_at(u)?.z)));
    let (quarter, witness) = (dot(0.25)?, dot(0.3)?);
    outcome(
        drift <= 1e-8 && quarter <= 1e-8 && witness > 1e-2,
        format!("z drift {drift:.1e}, <y,z> {quarter:.1e} at 1/4, witness {witness:.2e} at 0.3"),
    )
}

fn quarter_degeneracy() -> Result<Outcome> {
    let (mut worst, mut image) = (0.0f64, 0.0f64);
    for name in zoo::ZOO {
        let s = zoo::surface(name)?;
        for (u, v) in grid_points(&s, 9) {
            let a = darboux(&s, u, v, 0.25)?;
            let t = tchebychev(&s, u, v, 0.25)?;
            for x in [a.a112, a.a221, pick(&s, u, v, 0.25)?, t.t1, t.t2, t.div, t.rot] {
                worst = worst.max(x.abs());
            }
            image = image.max((relative_data(&s, u, v, 0.25)?.y - image_point(&s, u, v)?).norm());
        }
    }
    outcome(
        worst <= 1e-12 && image <= 1e-12,
        format!("max vanishing quantity {worst:.1e}, |y - x*| {image:.1e}"),
    )
}

fn self_affine_image() -> Result<Outcome> {
    let s = zoo::surface("selfaffine")?;
    let d = s.domain();
    let cfg = FDConfig::with_step(1e-2)?;
    let (mut inv, mut residual, mut metric) = (0.0f64, 0.0f64, 0.0f64);
    for u in linspace(d.lo, d.hi, 9) {
        let x = extract_invariants(&ImageParametrization(&s), u, &cfg)?;
        inv = inv.max((x.kappa - 1.0).abs()).max((x.delta - 1.0).abs()).max((x.lambda + 1.0).abs());
        let r = self_affine_residual(&s, u)?;
        residual = residual.max(r.r1.abs()).max(r.r2.abs());
        for v in linspace(-2.0, 2.0, 5) {
            let closed = image_metric(&s, u, v)?;
            let num = numeric_metric_of(|a, b| image_point(&s, a, b), u, v, &FDConfig::default(), Some((d.lo, d.hi)))?;
            metric = metric.max((closed - num).norm() / closed.norm());
        }
    }
    outcome(
        inv <= 1e-6 && residual == 0.0 && metric <= 1e-6,
        format!("invariants off by {inv:.1e}, self-congruence residual {residual:.1e}, metric rel {metric:.1e}"),
    )
}

fn mapping() -> Result<Outcome> {
    let s = zoo::surface("selfaffine")?;
    let (mut area, mut iso, mut eps0) = (0.0f64, 0.0f64, true);
    for (u, v) in grid_points(&s, 9) {
        let r = mapping_residuals(&s, u, v)?;
        area = area.max(r.area.abs());
        iso = iso.max(r.isometry);
        eps0 &= r.eps0 == 1.0;
    }
    let c = zoo::surface("conformal")?;
    let (mut conf, mut iso_c) = (0.0f64, f64::INFINITY);
    for (u, v) in grid_points(&c, 9) {
        let r = mapping_residuals(&c, u, v)?;
        conf = conf.max(r.conformal);
        iso_c = iso_c.min(r.isometry);
    }
    outcome(
        area <= 1e-8 && iso <= 1e-6 && eps0 && conf <= 1e-6 && iso_c >= 0.1,
        format!("self-affine area {area:.1e} isometry {iso:.1e}; conformal {conf:.1e}, isometry >= {iso_c:.2}"),
    )
}

fn hyperbolic_family() -> Result<Outcome> {
    let s = zoo::surface("hyperbolic")?;
    let check = image_edlinger_check(&s, &linspace(1.0, 2.0, 17))?;
    outcome(
        check.is_edlinger_image && check.branch == EdlingerBranch::Eq48,
        format!("edlinger image {}, branch {:?}, residual {:.1e}", check.is_edlinger_image, check.branch, check.max_residual),
    )
}

fn mutations() -> Result<Outcome> {
    let run = |extra: &[String]| {
        Command::new(env!("CARGO_BIN_EXE_rulekit"))
            .args(["verify", "--surface", "builtin:generic", "--alpha", "0"])
            .args(extra)
            .output()
            .map(|o| o.status.code())
    };
    let clean = run(&[])?;
    let mut missed = Vec::new();
    let all = Mutation::all();
    for m in &all {
        if run(&["--mutate".into(), m.to_string()])? != Some(1) {
            missed.push(m.to_string());
        }
    }
    outcome(
        clean == Some(0) && missed.is_empty(),
        format!("unmutated exit {clean:?}, {} of {} mutations caught {missed:?}", all.len() - missed.len(), all.len()),
    )
}

fn round_trip() -> Result<Outcome> {
    let cfg = FDConfig::with_step(1e-2)?;
    let mut worst = 0.0f64;
    for name in zoo::ZOO {
        let s = zoo::surface(name)?;
        let d = s.domain();
        for u in linspace(d.lo, d.hi, 17) {
            let got = extract_invariants(&s, u, &cfg)?;
            let want = s.local(u, 0)?;
            for (g, w) in [(got.kappa, want.k()), (got.delta, want.d()), (got.lambda, want.l())] {
                worst = worst.max((g - w).abs() / w.abs().max(1e-3));
            }
        }
    }
    outcome(worst <= 1e-6, format!("max rel error {worst:.1e}"))
}

type Criterion = (&'static str, fn() -> Result<Outcome>);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("closed forms agree with the oracle on the generic surface", closed_vs_oracle),
        ("right helicoid: Pick invariant and Tchebychev tangency", helicoid_pick),
        ("vanishing divergence and rotation", vanishing_div_rot),
        ("conoidal relative normals parallel to a plane", planar_normals),
        ("alpha = 1/4 degeneracy on the zoo", quarter_degeneracy),
        ("affine image of the self-affine surface", self_affine_image),
        ("area, conformal and isometric mapping", mapping),
        ("hyperbolic family has Edlinger images", hyperbolic_family),
        ("every coefficient mutation fails verify", mutations),
        ("invariant extraction inverts synthesis", round_trip),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (pass, detail) = match check() {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        failed += usize::from(!pass);
        println!(
            "{} criterion {:>2}: {name} ({detail}) [{:.2}s]",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            start.elapsed().as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
