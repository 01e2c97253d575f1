//! Named surfaces used by the command line, the examples and the tests.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::frame::{InvariantTriple, RuledSurface};

/// `(name, kappa, delta, lambda, lo, hi)`.
type Entry = (&'static str, &'static str, &'static str, &'static str, f64, f64);

const ENTRIES: [Entry; 9] = [
    ("helicoid", "0", "1", "0", 0.0, TAU),
    ("edlinger", "1", "1", "-1", 0.0, TAU),
    ("conoid", "0", "2 + sin(u)", "0", 0.0, TAU),
    ("selfaffine", "1", "1", "-1", 0.0, TAU),
    ("generic", "1 + 0.3*sin(u)", "2 + sin(u)", "0.5*cos(u)", 0.0, TAU),
    // conoidal but not a right conoid
    ("skewconoid", "0", "2 + sin(u)", "0.3", 0.0, TAU),
    // conformal but not isometric map onto the affine image
    ("conformal", "2", "1", "-0.5", 0.0, TAU),
    // affine image is an Edlinger surface with non-constant invariants
    ("hyperbolic", "2/u", "3/u^2", "0", 1.0, 2.0),
    // affine image is orthoid
    ("orthoid", "1", "1/(0.5*sin(u) + cos(u))^2", "0", 0.0, 1.0),
];

/// The canonical zoo.
pub const ZOO: [&str; 5] = ["helicoid", "edlinger", "conoid", "selfaffine", "generic"];

/// Every name [`builtin`] accepts.
pub fn names() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|e| e.0)
}

pub fn builtin(name: &str) -> Result<InvariantTriple> {
    let (_, k, d, l, lo, hi) = ENTRIES
        .iter()
        .find(|e| e.0 == name)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown builtin surface '{name}'")))?;
    InvariantTriple::parse(k, d, l, *lo, *hi)
}

pub fn surface(name: &str) -> Result<RuledSurface> {
    RuledSurface::new(builtin(name)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds() {
        for name in names() {
            surface(name).unwrap();
        }
        assert!(builtin("sphere").is_err());
        assert!(ZOO.iter().all(|z| names().any(|n| n == *z)));
    }
}
