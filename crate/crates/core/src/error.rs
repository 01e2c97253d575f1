use thiserror::Error;

use crate::curves::SurfaceCurve;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: expected one of {}", expected.join(", "))]
    Syntax { offset: usize, expected: Vec<String> },

    #[error("unknown identifier `{name}` at byte {offset}")]
    UnknownIdentifier { name: String, offset: usize },

    #[error("`{expr}` is undefined at u = {u}")]
    Domain { expr: String, u: f64 },

    #[error("u = {u} lies outside the domain [{lo}, {hi}]")]
    OutOfDomain { u: f64, lo: f64, hi: f64 },

    #[error("`{expr}` is not differentiable at u = {u}")]
    NonDifferentiable { expr: String, u: f64 },

    #[error("torsal ruling: parameter of distribution {delta} at u = {u}")]
    TorsalRuling { u: f64, delta: f64 },

    #[error("conoidal ruling: conical curvature {kappa} at u = {u}")]
    ConoidalSurface { u: f64, kappa: f64 },

    #[error("cylindrical ruling at u = {u}: ruling direction is stationary")]
    CylindricalRuling { u: f64 },

    #[error("alpha = 1/4 makes the Tchebychev field vanish identically")]
    AlphaQuarter,

    #[error("slope of the curve family is singular at (u, v) = ({u}, {v})")]
    SingularSlope { u: f64, v: f64 },

    #[error("curve integration stopped after {} samples: {cause}", partial.samples.len())]
    CurveAborted {
        partial: Box<SurfaceCurve>,
        cause: Box<Error>,
    },

    #[error("internal consistency check `{what}` failed with residual {residual:e}")]
    Inconsistent { what: String, residual: f64 },

    #[error("line {line}: {message}")]
    Definition { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Whether the failure stems from malformed input (text, flags, files)
    /// rather than from geometry.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UnknownIdentifier { .. }
                | Error::Definition { .. }
                | Error::InvalidArgument(_)
                | Error::Io(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
