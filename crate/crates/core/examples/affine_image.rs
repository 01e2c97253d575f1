// The affine normal image: its invariants, metric, and the map onto it.

use rulekit::affine::{image_edlinger_check, image_invariants, mapping_residuals, self_affine_residual};
use rulekit::frame::linspace;
use rulekit::zoo;

pub fn run_example() -> rulekit::Result<()> {
    for name in ["generic", "selfaffine", "conformal", "hyperbolic"] {
        let s = zoo::surface(name)?;
        let d = s.domain();
        let u = 0.5 * (d.lo + d.hi);
        let inv = image_invariants(&s, u)?;
        let res = self_affine_residual(&s, u)?;
        let map = mapping_residuals(&s, u, 0.5)?;
        let check = image_edlinger_check(&s, &linspace(d.lo, d.hi, 17))?;
        println!(
            "{name:<10} kappa* = {:+.4} delta* = {:+.4} lambda* = {:+.4}  self-affine = {:.1e}  \
             area = {:+.1e} conformal = {:.1e} isometry = {:.1e}  edlinger image: {} ({:?})",
            inv.kappa_star,
            inv.delta_star,
            inv.lambda_star,
            res.r1.abs().max(res.r2.abs()),
            map.area,
            map.conformal,
            map.isometry,
            check.is_edlinger_image,
            check.branch
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> rulekit::Result<()> {
    run_example()
}
