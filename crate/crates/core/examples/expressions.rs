// Parse invariant expressions and read off exact derivatives.

use rulekit::parse;

pub fn run_example() -> rulekit::Result<()> {
    let delta = parse("2 + sin(u)")?;
    let jet = delta.eval_jet(0.5, 3)?;
    println!("delta = {delta}");
    println!("jet at u = 0.5: {:?}", jet.coeffs());

    // printing is canonical and parses back to the same tree
    let messy = parse("((1))/(0.5*sin(u)+cos(u))^2")?;
    println!("canonical: {messy}");
    assert_eq!(parse(&messy.to_string())?, messy);

    match parse("ln(u - 2)")?.eval(1.0) {
        Err(e) => println!("expected failure: {e}"),
        Ok(x) => println!("unexpected value {x}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> rulekit::Result<()> {
    run_example()
}
