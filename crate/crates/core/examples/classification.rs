// Surface-class predicates and the proposition suite on the zoo.

use rulekit::classify::{classify, proposition_suite, Status};
use rulekit::zoo;

pub fn run_example() -> rulekit::Result<()> {
    for name in zoo::ZOO {
        let s = zoo::surface(name)?;
        let report = classify(&s, 16, 1e-7)?;
        let classes: Vec<_> = report.predicates.iter().filter(|(_, p)| p.holds).map(|(k, _)| k.as_str()).collect();
        println!("{name:<10} classes: {}", classes.join(", "));
        for alpha in [0.0, 0.3] {
            let suite = proposition_suite(&s, alpha, 1e-7)?;
            let hits: Vec<_> = suite
                .propositions
                .iter()
                .filter(|(_, p)| p.status == Status::Consistent)
                .map(|(k, _)| k.as_str())
                .collect();
            println!("           alpha = {alpha}: all consistent = {}, applies: {}", suite.all_consistent(), hits.join(", "));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> rulekit::Result<()> {
    run_example()
}
