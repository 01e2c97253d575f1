// Build a skew ruled surface from (kappa, delta, lambda) and sample it.

use rulekit::{InvariantTriple, RuledSurface};

pub fn run_example() -> rulekit::Result<()> {
    let triple = InvariantTriple::parse("1 + 0.3*sin(u)", "2 + sin(u)", "0.5*cos(u)", 0.0, 6.0)?;
    let surface = RuledSurface::new(triple)?;

    for u in [0.0, 1.5, 3.0, 4.5, 6.0] {
        let f = surface.frame_at(u)?;
        println!(
            "u = {u:.1}  striction = ({:+.4}, {:+.4}, {:+.4})  frame defect = {:.1e}",
            f.s.x,
            f.s.y,
            f.s.z,
            f.orthonormality_defect()
        );
    }

    // exact derivatives of the embedding, here x_uv = e'
    let jets = surface.embedding_jets(1.0, 0.5, 2)?;
    println!("x_uv at (1, 0.5) = {:?}", jets.d(1, 1).as_slice());

    // lambda may change sign, delta may not
    let torsal = InvariantTriple::parse("1", "sin(u)", "0", 0.1, 4.0)?;
    if let Err(e) = RuledSurface::new(torsal) {
        println!("rejected: {e}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> rulekit::Result<()> {
    run_example()
}
