//! Darboux tensor, Pick invariant and Tchebychev field of the relative
//! normalization with support function `|K|^alpha`, in closed form.
//!
//! All expressions are polynomials in `v` divided by powers of
//! `w = sqrt(v^2 + delta^2)` and `|delta|`.

use crate::error::Result;
use crate::frame::{LocalInvariants, RuledSurface, Vec3};
use crate::mutation::Formula;
use crate::tensor::{inverse, raise, Cubic};
use crate::tensors::{finite_v, forms_from_local, support_function};

/// Independent components of the Darboux tensor. `a221` stands for every
/// slot with two v-indices; `a222` vanishes on every ruled surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DarbouxComponents {
    pub a111: f64,
    pub a112: f64,
    pub a221: f64,
    pub a222: f64,
}

impl DarbouxComponents {
    pub fn tensor(&self) -> Cubic {
        Cubic::symmetric(self.a111, self.a112, self.a221, self.a222)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TchebychevData {
    /// Contravariant u-component.
    pub t1: f64,
    /// Contravariant v-component.
    pub t2: f64,
    /// Ambient vector `t1 x_u + t2 x_v`.
    pub vec: Vec3,
    pub div: f64,
    pub rot: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldDerivatives {
    pub div: f64,
    pub rot: f64,
}

fn w_of(local: &LocalInvariants, v: f64) -> f64 {
    (v * v + local.d() * local.d()).sqrt()
}

pub(crate) fn darboux_local(local: &LocalInvariants, v: f64, alpha: f64) -> DarbouxComponents {
    let (k, kp, d, dp, dpp, l, lp) = (
        local.k(),
        local.kp(),
        local.d(),
        local.dp(),
        local.dpp(),
        local.l(),
        local.lp(),
    );
    let (a, eps, ad) = (alpha, local.eps(), local.abs_d());
    let w = w_of(local, v);
    let wp = w.powf(3.0 - 4.0 * a);
    let d2 = d * d;
    let kl1 = 1.0 + k * l;

    let a112 = (4.0 * a - 1.0) * ad.powf(-2.0 * a) / (2.0 * wp)
        * (k * v.powi(3) + 2.0 * dp * v * v + d2 * (k - l) * v - d2 * dp);
    let a221 = eps * (1.0 - 4.0 * a) * ad.powf(1.0 - 2.0 * a) / wp * v;
    let poly = (d * kp - 6.0 * a * dp * k) * v.powi(4)
        + (-2.0 * d2 * kl1 + d * dpp - 6.0 * a * dp * dp) * v.powi(3)
        + d2 * (d * (2.0 * kp + lp) - dp * k + 2.0 * (3.0 * a - 1.0) * dp * l) * v * v
        + d2 * (-2.0 * d2 * kl1 + d * dpp + 3.0 * (2.0 * a - 1.0) * dp * dp) * v
        + d2 * d2 * ((6.0 * a - 1.0) * (k - l) * dp + d * (kp + lp));
    let a111 = eps * ad.powf(-2.0 * a - 1.0) / (2.0 * wp) * poly;
    DarbouxComponents {
        a111,
        a112,
        a221,
        a222: 0.0,
    }
}

/// Darboux tensor components at `(u, v)`.
pub fn darboux(surface: &RuledSurface, u: f64, v: f64, alpha: f64) -> Result<DarbouxComponents> {
    finite_v(v)?;
    let local = surface.local(u, 2)?;
    Ok(darboux_local(&local, v, alpha))
}

pub(crate) fn pick_local(surface: &RuledSurface, local: &LocalInvariants, v: f64, alpha: f64) -> f64 {
    let m = |site, x| surface.tweak(Formula::Pick, site, x);
    let (k, d, dp, l) = (local.k(), local.d(), local.dp(), local.l());
    let w = w_of(local, v);
    let d2 = d * d;
    let pre = m(0, 1.5) * (4.0 * alpha - 1.0).powi(2) * local.abs_d().powf(2.0 * alpha - 2.0)
        / w.powf(4.0 * alpha + 3.0);
    pre * (m(1, k) * v.powi(4) + m(2, d2 * (k - l)) * v * v + m(3, d2 * dp) * v)
}

/// Pick invariant `J = 1/2 A_ijk A^ijk`.
pub fn pick(surface: &RuledSurface, u: f64, v: f64, alpha: f64) -> Result<f64> {
    finite_v(v)?;
    let local = surface.local(u, 1)?;
    Ok(pick_local(surface, &local, v, alpha))
}

/// Contravariant Tchebychev components `(T^1, T^2)`.
pub(crate) fn tchebychev_components(local: &LocalInvariants, v: f64, alpha: f64) -> [f64; 2] {
    let (k, d, dp, l) = (local.k(), local.d(), local.dp(), local.l());
    let ad = local.abs_d();
    let w = w_of(local, v);
    let wp = w.powf(4.0 * alpha + 1.0);
    let t1 = local.eps() * (1.0 - 4.0 * alpha) * ad.powf(2.0 * alpha - 1.0) / wp * v;
    let t2 = (1.0 - 4.0 * alpha) * ad.powf(2.0 * alpha - 2.0) / (2.0 * wp)
        * (2.0 * k * v.powi(3) + dp * v * v + 2.0 * d * d * (k - l) * v + d * d * dp);
    [t1, t2]
}

/// Frame components of the ambient Tchebychev vector.
pub(crate) fn tchebychev_vector_frame(
    surface: &RuledSurface,
    local: &LocalInvariants,
    v: f64,
    alpha: f64,
) -> [f64; 3] {
    let m = |site, x| surface.tweak(Formula::TchebychevVector, site, x);
    let (k, d, dp) = (local.k(), local.d(), local.dp());
    let d2 = d * d;
    let w = w_of(local, v);
    let pre = m(0, 0.5) * (1.0 - 4.0 * alpha) * local.abs_d().powf(2.0 * alpha - 2.0)
        / w.powf(4.0 * alpha + 1.0);
    let along_e = m(1, 2.0 * k) * v.powi(3) + m(2, dp) * v * v + m(3, 2.0 * d2 * k) * v + m(4, d2 * dp);
    let along_n = m(5, 2.0 * d) * v * v;
    let along_z = m(6, 2.0 * d2) * v;
    [pre * along_e, pre * along_n, pre * along_z]
}

pub(crate) fn field_derivatives_local(
    surface: &RuledSurface,
    local: &LocalInvariants,
    v: f64,
    alpha: f64,
) -> FieldDerivatives {
    let (k, kp, d, dp, dpp, l) = (
        local.k(),
        local.kp(),
        local.d(),
        local.dp(),
        local.dpp(),
        local.l(),
    );
    let a = alpha;
    let ad = local.abs_d();
    let w = w_of(local, v);
    let d2 = d * d;
    let d4 = d2 * d2;
    let kl1 = 1.0 + k * l;

    let md = |site, x| surface.tweak(Formula::Divergence, site, x);
    let div_pre = md(0, 1.0) * (1.0 - 4.0 * a) * ad.powf(2.0 * a - 2.0) / w.powf(4.0 * a + 3.0);
    let div = div_pre
        * (md(1, (3.0 - 4.0 * a) * k) * v.powi(4)
            + md(2, d2 * (4.0 * (1.0 - a) * k + (4.0 * a - 1.0) * l)) * v * v
            + md(3, -4.0 * a * d2 * dp) * v
            + md(4, d4 * (k - l)));

    let mr = |site, x| surface.tweak(Formula::Rotation, site, x);
    let rot_pre = local.eps() * (1.0 - 4.0 * a) * ad.powf(2.0 * a - 3.0) * mr(0, 0.5)
        / w.powf(4.0 * a + 4.0);
    let c5 = 4.0 * (a - 1.0) * dp * k + 2.0 * d * kp;
    let c4 = 2.0 * (a - 1.0) * dp * dp + d * dpp + 4.0 * d2 * (2.0 * a - 1.0) * kl1;
    let c3 = d2 * (4.0 * d * kp - 6.0 * dp * k + (4.0 * a - 1.0) * dp * l);
    let c2 = d2 * (-3.0 * dp * dp + 2.0 * d * dpp + 2.0 * d2 * (4.0 * a - 3.0) * kl1);
    let c1 = d4 * (-2.0 * (2.0 * a + 1.0) * dp * k + 2.0 * d * kp + (4.0 * a - 1.0) * dp * l);
    let c0 = d4 * (-(2.0 * a + 1.0) * dp * dp + d * dpp - 2.0 * d2 * kl1);
    let rot = rot_pre
        * (mr(1, c5) * v.powi(5)
            + mr(2, c4) * v.powi(4)
            + mr(3, c3) * v.powi(3)
            + mr(4, c2) * v * v
            + mr(5, c1) * v
            + mr(6, c0));
    FieldDerivatives { div, rot }
}

/// Divergence and rotation of the Tchebychev field with respect to the
/// first fundamental form.
pub fn field_derivatives(surface: &RuledSurface, u: f64, v: f64, alpha: f64) -> Result<FieldDerivatives> {
    finite_v(v)?;
    let local = surface.local(u, 2)?;
    Ok(field_derivatives_local(surface, &local, v, alpha))
}

/// Tchebychev components, ambient vector, divergence and rotation.
pub fn tchebychev(surface: &RuledSurface, u: f64, v: f64, alpha: f64) -> Result<TchebychevData> {
    finite_v(v)?;
    let local = surface.local(u, 2)?;
    let frame = surface.frame_at(u)?;
    let [t1, t2] = tchebychev_components(&local, v, alpha);
    let vec = frame.to_ambient(tchebychev_vector_frame(surface, &local, v, alpha));
    let FieldDerivatives { div, rot } = field_derivatives_local(surface, &local, v, alpha);
    Ok(TchebychevData {
        t1,
        t2,
        vec,
        div,
        rot,
    })
}

/// Relative metric `|K|^-alpha h` at a point.
pub(crate) fn relative_metric_local(local: &LocalInvariants, v: f64, alpha: f64) -> crate::tensor::Sym2 {
    let forms = forms_from_local(local, v);
    forms.h / support_function(forms.gauss, alpha)
}

/// `1/2 A_ijk A^ijk` from the closed-form Darboux tensor, indices raised
/// with the relative metric.
pub fn pick_by_contraction(surface: &RuledSurface, u: f64, v: f64, alpha: f64) -> Result<f64> {
    finite_v(v)?;
    let local = surface.local(u, 2)?;
    let a = darboux_local(&local, v, alpha).tensor();
    let inv = inverse(&relative_metric_local(&local, v, alpha)).expect("relative metric is nondegenerate");
    Ok(0.5 * a.contract(&a.raised(&inv)))
}

/// `T^i = G^ij (1/2 A_jkl G^kl)` from the closed-form Darboux tensor.
pub fn tchebychev_by_contraction(surface: &RuledSurface, u: f64, v: f64, alpha: f64) -> Result<[f64; 2]> {
    finite_v(v)?;
    let local = surface.local(u, 2)?;
    let a = darboux_local(&local, v, alpha).tensor();
    let inv = inverse(&relative_metric_local(&local, v, alpha)).expect("relative metric is nondegenerate");
    Ok(raise(&inv, a.half_trace(&inv)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::InvariantTriple;

    fn surface(k: &str, d: &str, l: &str) -> RuledSurface {
        RuledSurface::new(InvariantTriple::parse(k, d, l, 0.0, 6.0).unwrap()).unwrap()
    }

    fn generic() -> RuledSurface {
        surface("1 + 0.3*sin(u)", "2 + sin(u)", "0.5*cos(u)")
    }

    fn rel_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol * (1.0 + b.abs()), "{a} vs {b}");
    }

    #[test]
    fn a222_vanishes_and_quarter_kills_mixed_components() {
        let s = generic();
        for (u, v) in [(0.3, -1.0), (2.0, 0.5), (4.0, 1.9)] {
            assert_eq!(darboux(&s, u, v, 0.7).unwrap().a222, 0.0);
            let q = darboux(&s, u, v, 0.25).unwrap();
            assert_eq!(q.a112, 0.0);
            assert_eq!(q.a221, 0.0);
        }
    }

    #[test]
    fn edlinger_pick_value() {
        let s = surface("1", "1", "-1");
        let j = pick(&s, 2.0, 1.0, 0.0).unwrap();
        rel_close(j, 9.0 / (4.0 * 2f64.sqrt()), 1e-14);
        rel_close(pick_by_contraction(&s, 2.0, 1.0, 0.0).unwrap(), j, 1e-12);
    }

    #[test]
    fn helicoid_pick_vanishes() {
        let s = surface("0", "1", "0");
        for alpha in [0.0, 0.3, 1.0] {
            assert_eq!(pick(&s, 1.0, 1.7, alpha).unwrap(), 0.0);
        }
    }

    #[test]
    fn contraction_routes_agree() {
        let s = generic();
        for alpha in [0.0, 0.3, 1.0, -0.5] {
            for (u, v) in [(0.7, 1.3), (3.0, -2.0), (5.5, 0.1)] {
                rel_close(pick(&s, u, v, alpha).unwrap(), pick_by_contraction(&s, u, v, alpha).unwrap(), 1e-10);
                let t = tchebychev(&s, u, v, alpha).unwrap();
                let tc = tchebychev_by_contraction(&s, u, v, alpha).unwrap();
                rel_close(t.t1, tc[0], 1e-10);
                rel_close(t.t2, tc[1], 1e-10);
            }
        }
    }

    #[test]
    fn ambient_vector_is_combination_of_tangents() {
        let s = generic();
        for alpha in [0.0, 0.3, 1.0] {
            let t = tchebychev(&s, 0.7, 1.3, alpha).unwrap();
            let j = s.embedding_jets(0.7, 1.3, 1).unwrap();
            let built = j.d(1, 0) * t.t1 + j.d(0, 1) * t.t2;
            assert!((built - t.vec).norm() <= 1e-10 * (1.0 + t.vec.norm()));
        }
    }

    #[test]
    fn helicoid_tchebychev_at_unit_distance() {
        let s = surface("0", "1", "0");
        let t = tchebychev(&s, 1.2, 1.0, 0.0).unwrap();
        let f = s.frame_at(1.2).unwrap();
        assert!((t.vec - (f.n + f.z) / 2f64.sqrt()).norm() <= 1e-14);
    }

    #[test]
    fn striction_line_tchebychev_vanishes_for_constant_delta() {
        let s = surface("1 + 0.3*sin(u)", "2", "cos(u)");
        let t = tchebychev(&s, 2.5, 0.0, 0.3).unwrap();
        assert_eq!(t.vec.norm(), 0.0);
    }

    #[test]
    fn quarter_alpha_degeneracy() {
        let s = generic();
        let t = tchebychev(&s, 1.0, 0.7, 0.25).unwrap();
        assert_eq!([t.t1, t.t2, t.div, t.rot], [0.0; 4]);
        assert_eq!(t.vec.norm(), 0.0);
        assert_eq!(pick(&s, 1.0, 0.7, 0.25).unwrap(), 0.0);
    }

    #[test]
    fn right_conoid_divergence_free_at_alpha_zero() {
        let s = surface("0", "2 + sin(u)", "0");
        for (u, v) in [(0.1, -2.0), (1.5, 0.3), (4.0, 2.0)] {
            assert!(field_derivatives(&s, u, v, 0.0).unwrap().div.abs() <= 1e-14);
        }
    }

    #[test]
    fn edlinger_rotation_free() {
        let s = surface("1", "1", "-1");
        for alpha in [0.0, 1.0, 0.3] {
            assert!(field_derivatives(&s, 0.4, 1.7, alpha).unwrap().rot.abs() <= 1e-14);
        }
    }
}
