//! Coefficient perturbation hooks used to check that the verification
//! driver actually detects a wrong closed form.
//!
//! Each closed form of the form `prefactor * sum(c_k v^k)` exposes its
//! printed coefficients as numbered sites. A [`Mutation`] attached to a
//! [`RuledSurface`](crate::frame::RuledSurface) adds [`PERTURBATION`] to
//! exactly one of them.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

pub const PERTURBATION: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Formula {
    /// Pick invariant: leading constant 3/2, then the v^4, v^2, v^1 coefficients.
    Pick,
    /// Ambient Tchebychev vector: leading 1/2, four e-coefficients
    /// (v^3, v^2, v^1, v^0), the n-coefficient and the z-coefficient.
    TchebychevVector,
    /// Divergence: leading constant 1, then the v^4, v^2, v^1, v^0 coefficients.
    Divergence,
    /// Rotation: leading 1/2, then the v^5 ... v^0 coefficients.
    Rotation,
    /// Third invariant of the affine normal image: the three numerator terms
    /// and the constant 4 of the denominator.
    ImageLambda,
}

impl Formula {
    pub const ALL: [Formula; 5] = [
        Formula::Pick,
        Formula::TchebychevVector,
        Formula::Divergence,
        Formula::Rotation,
        Formula::ImageLambda,
    ];

    pub fn sites(self) -> usize {
        match self {
            Formula::Pick => 4,
            Formula::TchebychevVector => 7,
            Formula::Divergence => 5,
            Formula::Rotation => 7,
            Formula::ImageLambda => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Formula::Pick => "pick",
            Formula::TchebychevVector => "tchebychev",
            Formula::Divergence => "div",
            Formula::Rotation => "rot",
            Formula::ImageLambda => "image-lambda",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mutation {
    pub formula: Formula,
    pub site: usize,
}

impl Mutation {
    /// Every single-coefficient mutation.
    pub fn all() -> Vec<Mutation> {
        Formula::ALL
            .iter()
            .flat_map(|&formula| (0..formula.sites()).map(move |site| Mutation { formula, site }))
            .collect()
    }

    pub(crate) fn apply(this: Option<Mutation>, formula: Formula, site: usize, value: f64) -> f64 {
        match this {
            Some(m) if m.formula == formula && m.site == site => value + PERTURBATION,
            _ => value,
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.formula.name(), self.site)
    }
}

impl FromStr for Mutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidArgument(format!("bad mutation `{s}`, expected FORMULA:SITE"));
        let (name, site) = s.split_once(':').ok_or_else(bad)?;
        let formula = Formula::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(bad)?;
        let site: usize = site.parse().map_err(|_| bad())?;
        if site >= formula.sites() {
            return Err(bad());
        }
        Ok(Mutation { formula, site })
    }
}
