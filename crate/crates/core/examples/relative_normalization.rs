// Relative normal, Pick invariant and Tchebychev field for several alpha.

use rulekit::relgeom::{pick, tchebychev};
use rulekit::tensors::relative_data;
use rulekit::zoo;

pub fn run_example() -> rulekit::Result<()> {
    let surface = zoo::surface("generic")?;
    let (u, v) = (1.2, 0.7);
    for alpha in [0.0, 0.25, 0.3, 1.0] {
        let p = relative_data(&surface, u, v, alpha)?;
        let t = tchebychev(&surface, u, v, alpha)?;
        println!(
            "alpha = {alpha:<4}  q = {:.6}  y = [{:+.5}, {:+.5}, {:+.5}]  J = {:+.6}  T = ({:+.6}, {:+.6})  div = {:+.6}  rot = {:+.6}",
            p.q,
            p.y_frame[0],
            p.y_frame[1],
            p.y_frame[2],
            pick(&surface, u, v, alpha)?,
            t.t1,
            t.t2,
            t.div,
            t.rot
        );
    }

    // the Pick invariant of a right helicoid vanishes for every alpha
    let helicoid = zoo::surface("helicoid")?;
    println!("helicoid J at alpha = 0.7: {:e}", pick(&helicoid, 2.0, -1.3, 0.7)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> rulekit::Result<()> {
    run_example()
}
