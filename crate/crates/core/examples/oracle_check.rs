// Closed forms against the definition-based oracle, and invariant
// extraction from a parametrized ruled surface.

use rulekit::cli::{run_suite, Grid};
use rulekit::oracle::{extract_invariants, FDConfig, FnParametrization};
use rulekit::zoo;
use rulekit::Vec3;

pub fn run_example() -> rulekit::Result<()> {
    let surface = zoo::surface("generic")?;
    let grid = Grid {
        u0: 0.2,
        u1: 3.0,
        nu: 9,
        v0: -2.0,
        v1: 2.0,
        nv: 9,
    };
    let report = run_suite(&surface, 0.3, &grid, 1e-5)?;
    print!("{}", report.table());

    // a helicoid written down by hand: r = (0, 0, 2u), e = (cos u, sin u, 0)
    let helicoid = FnParametrization {
        directrix: |u: f64| Ok(Vec3::new(0.0, 0.0, 2.0 * u)),
        ruling: |u: f64| Ok(Vec3::new(u.cos(), u.sin(), 0.0)),
        domain: rulekit::Domain::new(0.0, 6.0)?,
    };
    let inv = extract_invariants(&helicoid, 1.0, &FDConfig::with_step(1e-3)?)?;
    println!("extracted: kappa = {:.2e}, delta = {:.8}, lambda = {:.2e}", inv.kappa, inv.delta, inv.lambda);
    Ok(())
}

#[allow(dead_code)]
fn main() -> rulekit::Result<()> {
    run_example()
}
