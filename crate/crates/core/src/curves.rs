//! Distinguished curve families `v = v(u)` on a ruled surface and the
//! alignment of the Tchebychev field with such curves.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::{LocalInvariants, RuledSurface};
use crate::tensors::{finite_v, forms_from_local};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveFamily {
    /// Curved asymptotic lines.
    Asymptotic,
    /// Curves of constant striction distance.
    UCurve,
    /// Curves of constant Gaussian curvature.
    KCurve,
    /// Line of curvature with the smaller slope.
    CurvatureLine1,
    /// Line of curvature with the larger slope.
    CurvatureLine2,
    Custom,
}

impl CurveFamily {
    pub const ALL: [CurveFamily; 6] = [
        CurveFamily::Asymptotic,
        CurveFamily::UCurve,
        CurveFamily::KCurve,
        CurveFamily::CurvatureLine1,
        CurveFamily::CurvatureLine2,
        CurveFamily::Custom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CurveFamily::Asymptotic => "asymptotic",
            CurveFamily::UCurve => "u_curve",
            CurveFamily::KCurve => "k_curve",
            CurveFamily::CurvatureLine1 => "curvature_line_1",
            CurveFamily::CurvatureLine2 => "curvature_line_2",
            CurveFamily::Custom => "custom",
        }
    }
}

impl std::str::FromStr for CurveFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.replace('-', "_");
        CurveFamily::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown curve family '{s}'")))
    }
}

/// Polyline `(u, v(u))` with strictly monotone `u`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceCurve {
    pub samples: Vec<(f64, f64)>,
    pub family: CurveFamily,
}

impl SurfaceCurve {
    /// A user-supplied curve; `u` must be strictly monotone and inside the
    /// surface domain.
    pub fn custom(surface: &RuledSurface, samples: Vec<(f64, f64)>) -> Result<Self> {
        let dom = surface.domain();
        if let Some(&(u, _)) = samples.iter().find(|(u, _)| !dom.contains(*u)) {
            return Err(Error::OutOfDomain { u, lo: dom.lo, hi: dom.hi });
        }
        let rising = samples.windows(2).all(|p| p[1].0 > p[0].0);
        let falling = samples.windows(2).all(|p| p[1].0 < p[0].0);
        if !(rising || falling) {
            return Err(Error::InvalidArgument("curve samples must have strictly monotone u".into()));
        }
        Ok(SurfaceCurve {
            samples,
            family: CurveFamily::Custom,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Slope {
    Single(f64),
    /// Both curvature-line slopes, ascending.
    Pair(f64, f64),
}

impl Slope {
    /// The slope belonging to `family`.
    pub fn for_family(self, family: CurveFamily) -> f64 {
        match (self, family) {
            (Slope::Single(s), _) => s,
            (Slope::Pair(_, hi), CurveFamily::CurvatureLine2) => hi,
            (Slope::Pair(lo, _), _) => lo,
        }
    }
}

fn singular_v(v: f64, d: f64) -> bool {
    v.abs() <= 1e-12 * (1.0 + d.abs())
}

fn slope_local(local: &LocalInvariants, family: CurveFamily, v: f64) -> Result<Slope> {
    let (k, d, dp, l) = (local.k(), local.d(), local.dp(), local.l());
    match family {
        CurveFamily::Asymptotic => Ok(Slope::Single((k * v * v + dp * v + d * d * (k - l)) / (2.0 * d))),
        CurveFamily::UCurve => Ok(Slope::Single(0.0)),
        CurveFamily::KCurve => {
            if dp == 0.0 {
                Ok(Slope::Single(0.0))
            } else if singular_v(v, d) {
                Err(Error::SingularSlope { u: local.u, v })
            } else {
                Ok(Slope::Single(-dp * (d * d - v * v) / (2.0 * d * v)))
            }
        }
        CurveFamily::CurvatureLine1 | CurveFamily::CurvatureLine2 => {
            let [c0, c1, c2] = curvature_line_coefficients(local, v);
            let disc = c1 * c1 - 4.0 * c2 * c0;
            if c2 == 0.0 || disc < 0.0 {
                return Err(Error::SingularSlope { u: local.u, v });
            }
            // cancellation-free pair of roots
            let t = -0.5 * (c1 + c1.signum() * disc.sqrt());
            let (a, b) = if t == 0.0 { (0.0, 0.0) } else { (t / c2, c0 / t) };
            Ok(Slope::Pair(a.min(b), a.max(b)))
        }
        CurveFamily::Custom => Err(Error::InvalidArgument("the custom family has no slope field".into())),
    }
}

/// Coefficients `[c0, c1, c2]` of the curvature-line equation
/// `c0 + c1 v' + c2 v'^2 = 0`.
fn curvature_line_coefficients(local: &LocalInvariants, v: f64) -> [f64; 3] {
    let f = forms_from_local(local, v);
    let (g, h) = (f.g, f.h);
    [
        g[(0, 1)] * h[(0, 0)] - g[(0, 0)] * h[(0, 1)],
        g[(1, 1)] * h[(0, 0)] - g[(0, 0)] * h[(1, 1)],
        g[(1, 1)] * h[(0, 1)] - g[(0, 1)] * h[(1, 1)],
    ]
}

/// Slope `v'` of the curve of `family` through `(u, v)`.
pub fn family_slope(surface: &RuledSurface, family: CurveFamily, u: f64, v: f64) -> Result<Slope> {
    finite_v(v)?;
    let local = surface.local(u, 1)?;
    slope_local(&local, family, v)
}

/// Left-hand side of the curvature-line equation at `(u, v, v')`.
pub fn curvature_line_residual(surface: &RuledSurface, u: f64, v: f64, vprime: f64) -> Result<f64> {
    finite_v(v)?;
    let local = surface.local(u, 1)?;
    let [c0, c1, c2] = curvature_line_coefficients(&local, v);
    Ok(c0 + c1 * vprime + c2 * vprime * vprime)
}

/// Integrates `v' = slope(u, v)` with classical RK4 from `start` to `u_end`
/// using steps no longer than `step`.
///
/// A singular slope met on the way aborts with [`Error::CurveAborted`],
/// which carries the samples computed so far.
pub fn integrate_curve(
    surface: &RuledSurface,
    family: CurveFamily,
    start: (f64, f64),
    u_end: f64,
    step: f64,
) -> Result<SurfaceCurve> {
    let (u0, v0) = start;
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::InvalidArgument(format!("step must be positive, got {step}")));
    }
    finite_v(v0)?;
    let dom = surface.domain();
    for u in [u0, u_end] {
        if !dom.contains(u) {
            return Err(Error::OutOfDomain { u, lo: dom.lo, hi: dom.hi });
        }
    }
    if u_end == u0 {
        return Err(Error::InvalidArgument("curve end must differ from its start".into()));
    }
    family_slope(surface, family, u0, v0)?;

    let n = ((u_end - u0).abs() / step).ceil().max(1.0) as usize;
    let h = (u_end - u0) / n as f64;
    let f = |u: f64, v: f64| -> Result<f64> {
        // the K-curve slope blows up at v = 0; a stage that jumps across it
        // has hit the singular set
        if !v.is_finite() || (family == CurveFamily::KCurve && v0 != 0.0 && v * v0 <= 0.0) {
            return Err(Error::SingularSlope { u, v });
        }
        family_slope(surface, family, u, v).map(|s| s.for_family(family))
    };
    let mut samples = Vec::with_capacity(n + 1);
    samples.push((u0, v0));
    let mut v = v0;
    for i in 0..n {
        let u = u0 + i as f64 * h;
        // pin the last node to the requested end
        let u_next = if i + 1 == n { u_end } else { u0 + (i + 1) as f64 * h };
        let stage = || -> Result<f64> {
            let k1 = f(u, v)?;
            let k2 = f(u + 0.5 * h, v + 0.5 * h * k1)?;
            let k3 = f(u + 0.5 * h, v + 0.5 * h * k2)?;
            let k4 = f(u_next, v + h * k3)?;
            let next = v + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            f(u_next, next).map(|_| next)
        };
        match stage() {
            Ok(next) => {
                v = next;
                samples.push((u_next, v));
            }
            Err(cause) => {
                return Err(Error::CurveAborted {
                    partial: Box::new(SurfaceCurve { samples, family }),
                    cause: Box::new(cause),
                })
            }
        }
    }
    Ok(SurfaceCurve { samples, family })
}

/// Residuals whose zero sets mark a Tchebychev vector tangent, resp.
/// orthogonal, to the curve with slope `v'`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Alignment {
    pub tangent_residual: f64,
    pub orthogonal_residual: f64,
}

fn alignment_local(local: &LocalInvariants, v: f64, vprime: f64) -> Alignment {
    let (k, d, dp, l) = (local.k(), local.d(), local.dp(), local.l());
    Alignment {
        tangent_residual: 2.0 * k * v.powi(3) + dp * v * v + 2.0 * d * (d * (k - l) - vprime) * v + d * d * dp,
        orthogonal_residual: (d * l + vprime) * (2.0 * k * v + dp) + 2.0 * d * v,
    }
}

pub fn tchebychev_alignment(surface: &RuledSurface, alpha: f64, u: f64, v: f64, vprime: f64) -> Result<Alignment> {
    if (alpha - 0.25).abs() < 1e-12 {
        return Err(Error::AlphaQuarter);
    }
    finite_v(v)?;
    if !vprime.is_finite() {
        return Err(Error::InvalidArgument(format!("slope {vprime} is not finite")));
    }
    let local = surface.local(u, 1)?;
    Ok(alignment_local(&local, v, vprime))
}

/// Slope of the curve through `(u, v)` that the Tchebychev vector is
/// tangent to (the zero of the tangent residual).
pub fn tchebychev_slope(surface: &RuledSurface, u: f64, v: f64) -> Result<f64> {
    finite_v(v)?;
    let local = surface.local(u, 1)?;
    let (k, d, dp, l) = (local.k(), local.d(), local.dp(), local.l());
    if singular_v(v, d) {
        return Err(Error::SingularSlope { u, v });
    }
    Ok((2.0 * k * v.powi(3) + dp * v * v + 2.0 * d * d * (k - l) * v + d * d * dp) / (2.0 * d * v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::InvariantTriple;
    use crate::relgeom::tchebychev;

    fn surface(k: &str, d: &str, l: &str) -> RuledSurface {
        RuledSurface::new(InvariantTriple::parse(k, d, l, 0.0, 6.0).unwrap()).unwrap()
    }

    fn single(s: Slope) -> f64 {
        match s {
            Slope::Single(x) => x,
            Slope::Pair(..) => panic!("expected a single slope"),
        }
    }

    #[test]
    fn k_curve_slope_example() {
        // delta = 2 + (u - 1) has delta = 2, delta' = 1 at u = 1
        let s = surface("0.5", "u + 1", "0");
        assert_eq!(single(family_slope(&s, CurveFamily::KCurve, 1.0, 1.0).unwrap()), -0.75);
        assert!(matches!(
            family_slope(&s, CurveFamily::KCurve, 1.0, 0.0),
            Err(Error::SingularSlope { .. })
        ));
    }

    #[test]
    fn helicoid_families_coincide() {
        let s = surface("0", "1", "0");
        for v in [-1.0, 0.0, 2.0] {
            for fam in [CurveFamily::Asymptotic, CurveFamily::UCurve, CurveFamily::KCurve] {
                assert_eq!(single(family_slope(&s, fam, 1.0, v).unwrap()), 0.0);
            }
        }
    }

    #[test]
    fn u_curve_is_constant() {
        let s = surface("1 + 0.3*sin(u)", "2 + sin(u)", "0.5*cos(u)");
        let c = integrate_curve(&s, CurveFamily::UCurve, (0.0, 1.5), 2.0, 0.01).unwrap();
        assert!(c.samples.iter().all(|&(_, v)| v == 1.5));
        assert_eq!(c.samples.last().unwrap().0, 2.0);
    }

    #[test]
    fn k_curve_keeps_curvature() {
        // v^2 = delta (2.5 - delta) along this curve; it turns vertical at u = pi/6
        let s = surface("1", "2 + sin(u)", "0");
        let c = integrate_curve(&s, CurveFamily::KCurve, (0.0, 1.0), 0.45, 1e-3).unwrap();
        let k0 = crate::tensors::fundamental_forms(&s, 0.0, 1.0).unwrap().gauss;
        for &(u, v) in &c.samples {
            let k = crate::tensors::fundamental_forms(&s, u, v).unwrap().gauss;
            assert!(((k - k0) / k0).abs() <= 1e-6);
        }
    }

    #[test]
    fn edlinger_k_curves_are_u_curves() {
        let s = surface("1", "1", "-1");
        let c = integrate_curve(&s, CurveFamily::KCurve, (0.5, 0.0), 3.0, 0.1).unwrap();
        assert!(c.samples.iter().all(|&(_, v)| v == 0.0));
    }

    #[test]
    fn singular_slope_aborts_with_partial_curve() {
        // delta = 1 + u, K-curve through (1, 1): v^2 = delta (2.5 - delta),
        // so v reaches 0 at u = 1.5 and the slope is vertical there
        let s = surface("1", "1 + u", "0");
        match integrate_curve(&s, CurveFamily::KCurve, (1.0, 1.0), 2.0, 0.05) {
            Err(Error::CurveAborted { partial, cause }) => {
                assert!(!partial.samples.is_empty());
                assert!(partial.samples.last().unwrap().0 <= 1.5);
                assert!(matches!(*cause, Error::SingularSlope { .. }));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn curvature_line_roots_solve_the_quadratic() {
        let s = surface("1 + 0.3*sin(u)", "2 + sin(u)", "0.5*cos(u)");
        let Slope::Pair(a, b) = family_slope(&s, CurveFamily::CurvatureLine1, 0.7, 1.3).unwrap() else {
            panic!()
        };
        assert!(a < b);
        for r in [a, b] {
            let res = curvature_line_residual(&s, 0.7, 1.3, r).unwrap();
            assert!(res.abs() <= 1e-12 * (1.0 + r * r));
        }
    }

    #[test]
    fn alignment_examples() {
        let s = surface("0.4", "2", "0.1");
        let a = tchebychev_alignment(&s, 0.0, 1.0, 0.0, 0.0).unwrap();
        assert_eq!(a.tangent_residual, 0.0);
        let e = surface("1", "1", "-1");
        let b = tchebychev_alignment(&e, 1.0, 2.0, 0.0, 0.0).unwrap();
        assert_eq!(b.orthogonal_residual, 0.0);
        assert!(matches!(tchebychev_alignment(&e, 0.25, 2.0, 0.0, 0.0), Err(Error::AlphaQuarter)));
    }

    #[test]
    fn alignment_agrees_with_ambient_vectors() {
        let s = surface("1 + 0.3*sin(u)", "2 + sin(u)", "0.5*cos(u)");
        let (u, v, alpha) = (0.7, 1.3, 0.0);
        let t = tchebychev(&s, u, v, alpha).unwrap().vec;
        let jets = s.embedding_jets(u, v, 1).unwrap();
        let tangent = |vp: f64| jets.d(1, 0) + jets.d(0, 1) * vp;

        let vp = tchebychev_slope(&s, u, v).unwrap();
        assert!(tchebychev_alignment(&s, alpha, u, v, vp).unwrap().tangent_residual.abs() < 1e-12);
        assert!(t.cross(&tangent(vp)).norm() <= 1e-8 * t.norm() * tangent(vp).norm());

        // orthogonal residual is linear in v'
        let r0 = tchebychev_alignment(&s, alpha, u, v, 0.0).unwrap().orthogonal_residual;
        let r1 = tchebychev_alignment(&s, alpha, u, v, 1.0).unwrap().orthogonal_residual;
        let vq = -r0 / (r1 - r0);
        assert!(t.dot(&tangent(vq)).abs() <= 1e-8 * t.norm() * tangent(vq).norm());

        // same sign on either side of the zero
        for vp in [0.2, -3.0, 5.0] {
            let r = tchebychev_alignment(&s, alpha, u, v, vp).unwrap().orthogonal_residual;
            assert_eq!(r.signum(), t.dot(&tangent(vp)).signum());
        }
    }

    #[test]
    fn family_names_parse() {
        for f in CurveFamily::ALL {
            assert_eq!(f.name().parse::<CurveFamily>().unwrap(), f);
        }
        assert_eq!("k-curve".parse::<CurveFamily>().unwrap(), CurveFamily::KCurve);
    }
}
