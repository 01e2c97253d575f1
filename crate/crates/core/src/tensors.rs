//! Fundamental forms, support function and relative normal in closed form.

use crate::error::{Error, Result};
use crate::frame::{FramePoint, LocalInvariants, RuledSurface, Vec3};
use crate::tensor::{inverse, sym2, Sym2};

/// First and second fundamental forms at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FundamentalForms {
    pub g: Sym2,
    pub h: Sym2,
    /// `sqrt(v^2 + delta^2)`, also `sqrt(det g)`.
    pub w: f64,
    /// Gaussian curvature.
    pub gauss: f64,
    /// Sign of `delta`.
    pub eps: f64,
}

/// Everything the relative normalization `|K|^alpha` assigns to one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointEval {
    pub u: f64,
    pub v: f64,
    pub alpha: f64,
    pub w: f64,
    pub eps: f64,
    pub g: Sym2,
    pub h: Sym2,
    pub gauss: f64,
    /// Support function `|K|^alpha`.
    pub q: f64,
    /// Relative metric `h / q`.
    pub relative_metric: Sym2,
    /// Unit normal `(x_u x x_v) / |x_u x x_v|`.
    pub xi: Vec3,
    /// Relative normal.
    pub y: Vec3,
    /// Components of the relative normal in the frame `(e, n, z)`.
    pub y_frame: [f64; 3],
    /// Tangent-plane covector: `<X, x_u> = <X, x_v> = 0`, `<X, y> = 1`.
    pub covector: Vec3,
}

/// `|K|^alpha` computed as `exp(alpha ln|K|)`.
pub fn support_function(gauss: f64, alpha: f64) -> f64 {
    (alpha * gauss.abs().ln()).exp()
}

pub(crate) fn forms_from_local(local: &LocalInvariants, v: f64) -> FundamentalForms {
    let (k, d, dp, l) = (local.k(), local.d(), local.dp(), local.l());
    let w = (v * v + d * d).sqrt();
    let g = sym2(v * v + d * d * (l * l + 1.0), d * l, 1.0);
    let h = sym2(-(k * v * v + dp * v + d * d * (k - l)) / w, d / w, 0.0);
    FundamentalForms {
        g,
        h,
        w,
        gauss: -d * d / (w * w * w * w),
        eps: local.eps(),
    }
}

/// First and second fundamental forms and Gaussian curvature at `(u, v)`.
pub fn fundamental_forms(surface: &RuledSurface, u: f64, v: f64) -> Result<FundamentalForms> {
    finite_v(v)?;
    let local = surface.local(u, 1)?;
    Ok(forms_from_local(&local, v))
}

pub(crate) fn finite_v(v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("v = {v} is not finite")))
    }
}

/// Frame components `(A1, A2, A3)` of the relative normal.
pub(crate) fn relative_normal_components(local: &LocalInvariants, v: f64, alpha: f64) -> [f64; 3] {
    let (k, d, dp) = (local.k(), local.d(), local.dp());
    let ad = local.abs_d();
    let w = (v * v + d * d).sqrt();
    let a1 = 2.0 * alpha * (2.0 * k * v + dp) * ad.powf(2.0 * alpha - 2.0) / w.powf(4.0 * alpha - 1.0);
    let a2 = local.eps() * (4.0 * alpha * v * v + d * d) * ad.powf(2.0 * alpha - 1.0)
        / w.powf(4.0 * alpha + 1.0);
    let a3 = (4.0 * alpha - 1.0) * ad.powf(2.0 * alpha) / w.powf(4.0 * alpha + 1.0) * v;
    [a1, a2, a3]
}

/// Relative normal of an arbitrary support function from its value and
/// gradient: `y = -h^(ij) q_i x_j + q xi`.
pub fn relative_normal_from_support(
    h: &Sym2,
    tangents: [Vec3; 2],
    xi: Vec3,
    q: f64,
    grad_q: [f64; 2],
) -> Option<Vec3> {
    let hinv = inverse(h)?;
    let mut y = xi * q;
    for i in 0..2 {
        for j in 0..2 {
            y -= tangents[j] * (hinv[(i, j)] * grad_q[i]);
        }
    }
    Some(y)
}

/// Support function, relative metric, covector and relative normal.
///
/// The closed-form normal is cross-checked against the general
/// support-function representation with exact gradients of `|K|^alpha`.
pub fn relative_data(surface: &RuledSurface, u: f64, v: f64, alpha: f64) -> Result<PointEval> {
    finite_v(v)?;
    let local = surface.local(u, 1)?;
    let frame = surface.frame_at(u)?;
    point_eval(&local, &frame, v, alpha)
}

pub(crate) fn point_eval(
    local: &LocalInvariants,
    frame: &FramePoint,
    v: f64,
    alpha: f64,
) -> Result<PointEval> {
    let forms = forms_from_local(local, v);
    let (d, dp, l) = (local.d(), local.dp(), local.l());
    let w = forms.w;
    let q = support_function(forms.gauss, alpha);
    let xi = (frame.n * d - frame.z * v) / w;
    let y_frame = relative_normal_components(local, v, alpha);
    let y = frame.to_ambient(y_frame);

    // d(ln q)/du and d(ln q)/dv for q = (delta^2 / w^4)^alpha
    let grad_ln_q = [
        alpha * (2.0 * dp / d - 4.0 * d * dp / (w * w)),
        -4.0 * alpha * v / (w * w),
    ];
    let tangents = [frame.to_ambient([d * l, v, d]), frame.e];
    let general = relative_normal_from_support(
        &forms.h,
        tangents,
        xi,
        q,
        [q * grad_ln_q[0], q * grad_ln_q[1]],
    )
    .ok_or(Error::Inconsistent {
        what: "second fundamental form is singular".into(),
        residual: f64::NAN,
    })?;
    let residual = (general - y).norm() / (1.0 + y.norm());
    if !(residual <= 1e-6) {
        return Err(Error::Inconsistent {
            what: "relative normal closed form vs support-function representation".into(),
            residual,
        });
    }

    Ok(PointEval {
        u: local.u,
        v,
        alpha,
        w,
        eps: forms.eps,
        g: forms.g,
        h: forms.h,
        gauss: forms.gauss,
        q,
        relative_metric: forms.h / q,
        xi,
        y,
        y_frame,
        covector: xi / q,
    })
}
