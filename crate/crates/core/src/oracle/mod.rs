//! Definition-based reference computations.
//!
//! Nothing here uses the closed forms of [`crate::tensors`] or
//! [`crate::relgeom`] except where stated: metrics come from inner products
//! of embedding derivatives, derivatives of derived fields come from finite
//! differences, and invariants are recovered from sampled geometry.

mod fd;

pub use fd::{derivative, fornberg, FDConfig, Linear};

use crate::error::{Error, Result};
use crate::frame::{Domain, RuledSurface, Vec3};
use crate::relgeom::{tchebychev_components, DarbouxComponents};
use crate::tensor::{inverse, raise, Cubic, Sym2};

/// Fundamental forms from inner products of embedding derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericForms {
    pub g: Sym2,
    pub h: Sym2,
    pub gauss: f64,
    pub xi: Vec3,
    pub tangents: [Vec3; 2],
}

pub fn numeric_forms(surface: &RuledSurface, u: f64, v: f64) -> Result<NumericForms> {
    let j = surface.embedding_jets(u, v, 2)?;
    let (xu, xv) = (j.d(1, 0), j.d(0, 1));
    let xi = xu.cross(&xv).normalize();
    let g = Sym2::new(xu.dot(&xu), xu.dot(&xv), xv.dot(&xu), xv.dot(&xv));
    let h = Sym2::new(
        xi.dot(&j.d(2, 0)),
        xi.dot(&j.d(1, 1)),
        xi.dot(&j.d(1, 1)),
        xi.dot(&j.d(0, 2)),
    );
    Ok(NumericForms {
        g,
        h,
        gauss: h.determinant() / g.determinant(),
        xi,
        tangents: [xu, xv],
    })
}

fn numeric_support(surface: &RuledSurface, u: f64, v: f64, alpha: f64) -> Result<f64> {
    Ok(numeric_forms(surface, u, v)?.gauss.abs().powf(alpha))
}

/// Relative metric `h / |K|^alpha` with `K = det h / det g`.
pub fn numeric_relative_metric(surface: &RuledSurface, u: f64, v: f64, alpha: f64) -> Result<Sym2> {
    let f = numeric_forms(surface, u, v)?;
    Ok(f.h / f.gauss.abs().powf(alpha))
}

fn bounds(d: Domain) -> Option<(f64, f64)> {
    Some((d.lo, d.hi))
}

/// Partial derivatives `[d/du, d/dv]` of a field on the surface.
pub fn gradient<T, F>(surface: &RuledSurface, f: F, u: f64, v: f64, cfg: &FDConfig) -> Result<[T; 2]>
where
    T: Linear,
    F: Fn(f64, f64) -> Result<T>,
{
    let du = derivative(|s| f(s, v), u, 1, cfg, bounds(surface.domain()))?;
    let dv = derivative(|t| f(u, t), v, 1, cfg, None)?;
    Ok([du, dv])
}

/// Darboux tensor from its definition
/// `A_ijk = <xi, x_ijk> / q - (d_k G_ij + d_i G_jk + d_j G_ki) / 2`,
/// every entry computed separately.
pub fn numeric_darboux_tensor(surface: &RuledSurface, u: f64, v: f64, alpha: f64, cfg: &FDConfig) -> Result<Cubic> {
    let jets = surface.embedding_jets(u, v, 3)?;
    let q = numeric_support(surface, u, v, alpha)?;
    let xi = jets.unit_normal();
    let dg = gradient(surface, |s, t| numeric_relative_metric(surface, s, t, alpha), u, v, cfg)?;
    let mut a = [[[0.0; 2]; 2]; 2];
    for (i, plane) in a.iter_mut().enumerate() {
        for (j, row) in plane.iter_mut().enumerate() {
            for (k, x) in row.iter_mut().enumerate() {
                let third = xi.dot(&jets.along(&[i, j, k])) / q;
                *x = third - 0.5 * (dg[k][(i, j)] + dg[i][(j, k)] + dg[j][(k, i)]);
            }
        }
    }
    Ok(Cubic(a))
}

pub fn numeric_darboux(
    surface: &RuledSurface,
    u: f64,
    v: f64,
    alpha: f64,
    cfg: &FDConfig,
) -> Result<DarbouxComponents> {
    let a = numeric_darboux_tensor(surface, u, v, alpha, cfg)?;
    Ok(DarbouxComponents {
        a111: a.get(0, 0, 0),
        a112: a.get(0, 0, 1),
        a221: a.get(1, 1, 0),
        a222: a.get(1, 1, 1),
    })
}

fn relative_inverse(surface: &RuledSurface, u: f64, v: f64, alpha: f64) -> Result<Sym2> {
    inverse(&numeric_relative_metric(surface, u, v, alpha)?).ok_or(Error::Inconsistent {
        what: "relative metric is singular".into(),
        residual: f64::NAN,
    })
}

/// `1/2 A_ijk A^ijk` with the numeric Darboux tensor and metric.
pub fn numeric_pick(surface: &RuledSurface, u: f64, v: f64, alpha: f64, cfg: &FDConfig) -> Result<f64> {
    let a = numeric_darboux_tensor(surface, u, v, alpha, cfg)?;
    let inv = relative_inverse(surface, u, v, alpha)?;
    Ok(0.5 * a.contract(&a.raised(&inv)))
}

/// Contravariant Tchebychev components and the ambient vector.
pub fn numeric_tchebychev(
    surface: &RuledSurface,
    u: f64,
    v: f64,
    alpha: f64,
    cfg: &FDConfig,
) -> Result<([f64; 2], Vec3)> {
    let a = numeric_darboux_tensor(surface, u, v, alpha, cfg)?;
    let inv = relative_inverse(surface, u, v, alpha)?;
    let t = raise(&inv, a.half_trace(&inv));
    let f = numeric_forms(surface, u, v)?;
    Ok((t, f.tangents[0] * t[0] + f.tangents[1] * t[1]))
}

/// `y = -h^ij q_i x_j + q xi` with finite-difference gradients of the
/// numeric support function.
pub fn numeric_relative_normal(surface: &RuledSurface, u: f64, v: f64, alpha: f64, cfg: &FDConfig) -> Result<Vec3> {
    let f = numeric_forms(surface, u, v)?;
    let q = f.gauss.abs().powf(alpha);
    let dq = gradient(surface, |s, t| numeric_support(surface, s, t, alpha), u, v, cfg)?;
    crate::tensors::relative_normal_from_support(&f.h, f.tangents, f.xi, q, dq).ok_or(Error::Inconsistent {
        what: "second fundamental form is singular".into(),
        residual: f64::NAN,
    })
}

/// Divergence and rotation of the Tchebychev field with respect to the
/// numeric first fundamental form, by finite differences of the
/// closed-form components `(T^1, T^2)`:
///
/// `div = (d_u(w T^1) + d_v(w T^2)) / w`,
/// `rot = (d_u(T_2) - d_v(T_1)) / w` with `T_i = g_ij T^j`.
pub fn numeric_field_derivatives(
    surface: &RuledSurface,
    u: f64,
    v: f64,
    alpha: f64,
    cfg: &FDConfig,
) -> Result<(f64, f64)> {
    let field = |s: f64, t: f64| -> Result<[f64; 2]> {
        let local = surface.local(s, 1)?;
        Ok(tchebychev_components(&local, t, alpha))
    };
    let area = |s: f64, t: f64| -> Result<f64> { Ok(numeric_forms(surface, s, t)?.g.determinant().sqrt()) };
    let dom = bounds(surface.domain());
    let w = area(u, v)?;
    let flux_u: f64 = derivative(|s| Ok(area(s, v)? * field(s, v)?[0]), u, 1, cfg, dom)?;
    let flux_v: f64 = derivative(|t| Ok(area(u, t)? * field(u, t)?[1]), v, 1, cfg, None)?;
    let lowered = |s: f64, t: f64| -> Result<[f64; 2]> {
        let g = numeric_forms(surface, s, t)?.g;
        let c = field(s, t)?;
        Ok([g[(0, 0)] * c[0] + g[(0, 1)] * c[1], g[(1, 0)] * c[0] + g[(1, 1)] * c[1]])
    };
    let curl_u: f64 = derivative(|s| Ok(lowered(s, v)?[1]), u, 1, cfg, dom)?;
    let curl_v: f64 = derivative(|t| Ok(lowered(u, t)?[0]), v, 1, cfg, None)?;
    Ok(((flux_u + flux_v) / w, (curl_u - curl_v) / w))
}

/// First fundamental form of an arbitrary parametrization by finite
/// differences of its points.
pub fn numeric_metric_of<F>(f: F, u: f64, v: f64, cfg: &FDConfig, u_bounds: Option<(f64, f64)>) -> Result<Sym2>
where
    F: Fn(f64, f64) -> Result<Vec3>,
{
    let xu: Vec3 = derivative(|s| f(s, v), u, 1, cfg, u_bounds)?;
    let xv: Vec3 = derivative(|t| f(u, t), v, 1, cfg, None)?;
    Ok(Sym2::new(xu.dot(&xu), xu.dot(&xv), xv.dot(&xu), xv.dot(&xv)))
}

/// A ruled surface presented by a directrix and a ruling direction.
pub trait RuledParametrization {
    fn directrix(&self, u: f64) -> Result<Vec3>;
    /// Ruling direction; need not be normalized.
    fn ruling(&self, u: f64) -> Result<Vec3>;
    fn domain(&self) -> Domain;
}

impl RuledParametrization for RuledSurface {
    fn directrix(&self, u: f64) -> Result<Vec3> {
        Ok(self.frame_at(u)?.s)
    }

    fn ruling(&self, u: f64) -> Result<Vec3> {
        Ok(self.frame_at(u)?.e)
    }

    fn domain(&self) -> Domain {
        RuledSurface::domain(self)
    }
}

/// Closure-backed [`RuledParametrization`].
pub struct FnParametrization<R, E> {
    pub directrix: R,
    pub ruling: E,
    pub domain: Domain,
}

impl<R, E> RuledParametrization for FnParametrization<R, E>
where
    R: Fn(f64) -> Result<Vec3>,
    E: Fn(f64) -> Result<Vec3>,
{
    fn directrix(&self, u: f64) -> Result<Vec3> {
        (self.directrix)(u)
    }

    fn ruling(&self, u: f64) -> Result<Vec3> {
        (self.ruling)(u)
    }

    fn domain(&self) -> Domain {
        self.domain
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtractedInvariants {
    pub kappa: f64,
    pub delta: f64,
    pub lambda: f64,
    /// Striction point.
    pub striction: Vec3,
}

/// Recovers `(kappa, delta, lambda)` at `u` from sampled geometry. The
/// parameter must be the arc length of the spherical image.
pub fn extract_invariants<P: RuledParametrization + ?Sized>(
    param: &P,
    u: f64,
    cfg: &FDConfig,
) -> Result<ExtractedInvariants> {
    let dom = bounds(param.domain());
    let unit = |s: f64| -> Result<Vec3> {
        let e = param.ruling(s)?;
        let n = e.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::InvalidArgument(format!("ruling direction vanishes at u = {s}")));
        }
        Ok(e / n)
    };
    let e = unit(u)?;
    let e1: Vec3 = derivative(unit, u, 1, cfg, dom)?;
    let e2: Vec3 = derivative(unit, u, 2, cfg, dom)?;
    let r1: Vec3 = derivative(|s| param.directrix(s), u, 1, cfg, dom)?;
    let r2: Vec3 = derivative(|s| param.directrix(s), u, 2, cfg, dom)?;
    let r = param.directrix(u)?;

    let a2 = e1.norm_squared();
    let a = a2.sqrt();
    if a < 1e-9 {
        return Err(Error::CylindricalRuling { u });
    }
    let kappa = e.dot(&e1.cross(&e2)) / (a2 * a);
    let mu = r1.dot(&e1) / a2;
    let mu1 = (r2.dot(&e1) + r1.dot(&e2)) / a2 - 2.0 * r1.dot(&e1) * e1.dot(&e2) / (a2 * a2);
    let striction = r - e * mu;
    let s1 = r1 - e * mu1 - e1 * mu;
    let delta = s1.dot(&e.cross(&e1)) / a2;
    let lambda = s1.dot(&e) / (a * delta);
    Ok(ExtractedInvariants {
        kappa,
        delta,
        lambda,
        striction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::InvariantTriple;

    fn generic() -> RuledSurface {
        RuledSurface::new(InvariantTriple::parse("1 + 0.3*sin(u)", "2 + sin(u)", "0.5*cos(u)", 0.0, 6.0).unwrap())
            .unwrap()
    }

    #[test]
    fn extraction_from_a_circular_helicoid() {
        // right helicoid: axis as directrix, horizontal rulings
        let c = 1.5;
        let p = FnParametrization {
            directrix: |u: f64| Ok(Vec3::new(0.0, 0.0, c * u)),
            ruling: |u: f64| Ok(Vec3::new(u.cos(), u.sin(), 0.0)),
            domain: Domain::new(0.0, 3.0).unwrap(),
        };
        let inv = extract_invariants(&p, 1.0, &FDConfig::default()).unwrap();
        assert!(inv.kappa.abs() < 1e-9);
        assert!((inv.delta - c).abs() < 1e-9);
        assert!(inv.lambda.abs() < 1e-9);
        // the one-sided stencil works at the ends
        let end = extract_invariants(&p, 3.0, &FDConfig::with_step(1e-3).unwrap()).unwrap();
        assert!((end.delta - c).abs() < 1e-7);
    }

    #[test]
    fn cylinder_is_rejected() {
        let p = FnParametrization {
            directrix: |u: f64| Ok(Vec3::new(u.cos(), u.sin(), 0.0)),
            ruling: |_u: f64| Ok(Vec3::new(0.0, 0.0, 1.0)),
            domain: Domain::new(0.0, 3.0).unwrap(),
        };
        assert!(matches!(
            extract_invariants(&p, 1.0, &FDConfig::default()),
            Err(Error::CylindricalRuling { .. })
        ));
    }

    #[test]
    fn numeric_forms_match_closed_forms() {
        let s = generic();
        let n = numeric_forms(&s, 1.0, 0.7).unwrap();
        let c = crate::tensors::fundamental_forms(&s, 1.0, 0.7).unwrap();
        assert!((n.g - c.g).norm() < 1e-9);
        assert!((n.h - c.h).norm() < 1e-9);
        assert!((n.gauss - c.gauss).abs() < 1e-9);
    }

    #[test]
    fn numeric_darboux_is_symmetric() {
        let s = generic();
        let a = numeric_darboux_tensor(&s, 2.0, -0.5, 0.3, &FDConfig::default()).unwrap();
        assert!(a.asymmetry() < 1e-7, "{}", a.asymmetry());
        assert!(a.get(1, 1, 1).abs() < 1e-7);
    }
}
