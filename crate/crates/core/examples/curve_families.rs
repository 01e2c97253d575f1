// Slopes of the distinguished curve families and one integrated
// asymptotic line.

use rulekit::curves::{family_slope, integrate_curve, tchebychev_slope, CurveFamily};
use rulekit::zoo;

pub fn run_example() -> rulekit::Result<()> {
    let surface = zoo::surface("generic")?;
    let (u, v) = (0.8, 1.0);
    for family in CurveFamily::ALL {
        if family == CurveFamily::Custom {
            continue;
        }
        match family_slope(&surface, family, u, v) {
            Ok(slope) => println!("{:<18} v' = {:+.6}", family.name(), slope.for_family(family)),
            Err(e) => println!("{:<18} {e}", family.name()),
        }
    }
    println!("{:<18} v' = {:+.6}", "tchebychev", tchebychev_slope(&surface, u, v)?);

    let curve = integrate_curve(&surface, CurveFamily::Asymptotic, (0.0, 0.5), 1.0, 1e-2)?;
    let (ue, ve) = curve.samples.last().copied().unwrap_or_default();
    println!("asymptotic line from (0, 0.5): {} samples, ends at ({ue}, {ve:.6})", curve.samples.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> rulekit::Result<()> {
    run_example()
}
