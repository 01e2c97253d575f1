//! Skew ruled surfaces from their fundamental invariants.
//!
//! A surface is given by its conical curvature `kappa(u)`, parameter of
//! distribution `delta(u)` and `lambda(u) = cot(sigma)`; [`frame`] realizes it
//! as `x(u, v) = s(u) + v e(u)`. On top of that the crate evaluates the
//! relative normalizations with support function `|K|^alpha` in closed form
//! ([`tensors`], [`relgeom`]), distinguished curve families ([`curves`]), the
//! affine normal image ([`affine`]) and surface-class predicates
//! ([`classify`]). Every closed form has a definition-based counterpart in
//! [`oracle`].

pub mod affine;
pub mod classify;
pub mod cli;
pub mod curves;
pub mod error;
pub mod expr;
pub mod frame;
pub mod mutation;
pub mod oracle;
pub mod relgeom;
pub mod tensor;
pub mod tensors;
pub mod zoo;

pub use error::{Error, Result};
pub use expr::{parse, Expr, Jet};
pub use frame::{Domain, EmbeddingJets, FramePoint, InvariantTriple, RuledSurface, Vec3};
