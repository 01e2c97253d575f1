//! The affine normal image `x* = y(1/4)` of a ruled surface and the
//! rulings-preserving map `x(u, v) -> x*(u, v)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::frame::{LocalInvariants, RuledSurface, Vec3};
use crate::mutation::Formula;
use crate::oracle::RuledParametrization;
use crate::tensor::{sym2, Sym2};
use crate::tensors::{finite_v, forms_from_local};

pub const CONOIDAL_KAPPA: f64 = 1e-12;
const EDLINGER_TOL: f64 = 1e-8;

/// Everything the affine normal image assigns to one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineImageData {
    pub point: Vec3,
    pub directrix: Vec3,
    pub striction: Vec3,
    pub kappa_star: f64,
    pub delta_star: f64,
    pub lambda_star: f64,
    pub g_star: Sym2,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImageInvariants {
    pub kappa_star: f64,
    pub delta_star: f64,
    pub lambda_star: f64,
    /// Directrix point `eps |delta|^-1/2 n`.
    pub directrix: Vec3,
    pub striction: Vec3,
}

pub(crate) fn non_conoidal(surface: &RuledSurface, u: f64, order: usize) -> Result<LocalInvariants> {
    let local = surface.local(u, order)?;
    if local.k().abs() < CONOIDAL_KAPPA {
        return Err(Error::ConoidalSurface { u, kappa: local.k() });
    }
    Ok(local)
}

fn image_frame_components(local: &LocalInvariants, v: f64) -> [f64; 3] {
    let ad = local.abs_d();
    [
        0.5 * (2.0 * local.k() * v + local.dp()) * ad.powf(-1.5),
        local.eps() * ad.powf(-0.5),
        0.0,
    ]
}

/// Point of the affine normal image. Defined on conoidal surfaces too,
/// where it degenerates to a curve.
pub fn image_point(surface: &RuledSurface, u: f64, v: f64) -> Result<Vec3> {
    finite_v(v)?;
    let local = surface.local(u, 1)?;
    let frame = surface.frame_at(u)?;
    Ok(frame.to_ambient(image_frame_components(&local, v)))
}

/// `2 delta delta'' - 3 delta'^2 - 4 delta^2`.
fn p_term(local: &LocalInvariants) -> f64 {
    let (d, dp, dpp) = (local.d(), local.dp(), local.dpp());
    2.0 * d * dpp - 3.0 * dp * dp - 4.0 * d * d
}

fn lambda_star_local(surface: &RuledSurface, local: &LocalInvariants) -> f64 {
    let m = |site, x| surface.tweak(Formula::ImageLambda, site, x);
    let (k, d, dp, dpp) = (local.k(), local.d(), local.dp(), local.dpp());
    (m(0, 2.0 * d * dpp) + m(1, -3.0 * dp * dp) + m(2, -4.0 * d * d)) / (m(3, 4.0) * d * d * k)
}

pub fn image_invariants(surface: &RuledSurface, u: f64) -> Result<ImageInvariants> {
    let local = non_conoidal(surface, u, 2)?;
    let frame = surface.frame_at(u)?;
    let [a, b, _] = image_frame_components(&local, 0.0);
    Ok(ImageInvariants {
        kappa_star: local.k(),
        delta_star: local.eps() * local.k() * local.abs_d().powf(-0.5),
        lambda_star: lambda_star_local(surface, &local),
        directrix: frame.n * b,
        striction: frame.e * a + frame.n * b,
    })
}

fn image_metric_local(local: &LocalInvariants, v: f64) -> Sym2 {
    let (k, kp, d, dp) = (local.k(), local.kp(), local.d(), local.dp());
    let ad = local.abs_d();
    let b = p_term(local) / 4.0 + (2.0 * d * kp - 3.0 * dp * k) * v / 2.0;
    sym2(
        ad.powi(-5) * b * b + k * k * v * v * ad.powi(-3) + k * k / ad,
        local.eps() * k * ad.powi(-4) * b,
        k * k * ad.powi(-3),
    )
}

/// First fundamental form of the image in the coordinates `(u, v)`.
pub fn image_metric(surface: &RuledSurface, u: f64, v: f64) -> Result<Sym2> {
    finite_v(v)?;
    let local = non_conoidal(surface, u, 2)?;
    Ok(image_metric_local(&local, v))
}

pub fn image_data(surface: &RuledSurface, u: f64, v: f64) -> Result<AffineImageData> {
    let inv = image_invariants(surface, u)?;
    Ok(AffineImageData {
        point: image_point(surface, u, v)?,
        directrix: inv.directrix,
        striction: inv.striction,
        kappa_star: inv.kappa_star,
        delta_star: inv.delta_star,
        lambda_star: inv.lambda_star,
        g_star: image_metric(surface, u, v)?,
    })
}

/// Residuals of the self-congruence conditions; both vanish exactly when
/// the surface is congruent with its image.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SelfAffineResidual {
    pub r1: f64,
    pub r2: f64,
}

pub fn self_affine_residual(surface: &RuledSurface, u: f64) -> Result<SelfAffineResidual> {
    let local = non_conoidal(surface, u, 2)?;
    let ad = local.abs_d();
    Ok(SelfAffineResidual {
        r1: local.k() - ad.powf(1.5),
        r2: local.l() - p_term(&local) / (4.0 * ad.powf(3.5)),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdlingerBranch {
    /// Constant `kappa` and constant `delta`.
    ConstSlopeConstDelta,
    /// `kappa = c0 / u`, `delta = c1 / u^2`.
    Eq48,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EdlingerImageCheck {
    pub is_edlinger_image: bool,
    pub branch: EdlingerBranch,
    /// Largest `|delta*'|` and `|1 + kappa* lambda*|` over the samples.
    pub max_residual: f64,
}

/// Whether the image is an Edlinger surface (`delta*' = 0`,
/// `1 + kappa* lambda* = 0`) at every sample, and which family of
/// surfaces produces it.
pub fn image_edlinger_check(surface: &RuledSurface, u_samples: &[f64]) -> Result<EdlingerImageCheck> {
    if u_samples.is_empty() {
        return Err(Error::InvalidArgument("no u samples".into()));
    }
    let mut worst = 0.0f64;
    let mut slope_const = true;
    let mut eq48 = true;
    for &u in u_samples {
        let local = non_conoidal(surface, u, 2)?;
        // delta* = eps kappa |delta|^-1/2 as a jet
        let delta_star = local.kappa * local.delta.abs().powf(-0.5) * local.eps();
        let lambda_star = lambda_star_local(surface, &local);
        worst = worst
            .max(delta_star.deriv(1).abs())
            .max((1.0 + local.k() * lambda_star).abs());

        let scale = |x: f64| EDLINGER_TOL * (1.0 + x.abs());
        slope_const &= local.kp().abs() <= scale(local.k()) && local.dp().abs() <= scale(local.d());
        let uk = local.k() + u * local.kp();
        let uud = 2.0 * u * local.d() + u * u * local.dp();
        eq48 &= uk.abs() <= scale(u * local.k()) && uud.abs() <= scale(u * u * local.d());
    }
    let holds = worst <= EDLINGER_TOL;
    let branch = match (holds, slope_const, eq48) {
        (false, ..) => EdlingerBranch::None,
        (true, true, _) => EdlingerBranch::ConstSlopeConstDelta,
        (true, false, true) => EdlingerBranch::Eq48,
        (true, false, false) => EdlingerBranch::None,
    };
    Ok(EdlingerImageCheck {
        is_edlinger_image: holds,
        branch,
        max_residual: worst,
    })
}

/// Tangents of the striction line and of the image directrix at `u`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrictionTangents {
    pub striction: Vec3,
    pub directrix: Vec3,
}

impl StrictionTangents {
    /// `|sin|` of the angle between the two tangents.
    pub fn parallel_residual(&self) -> f64 {
        self.striction.cross(&self.directrix).norm() / (self.striction.norm() * self.directrix.norm())
    }

    /// `|cos|` of the angle between the two tangents.
    pub fn orthogonal_residual(&self) -> f64 {
        self.striction.dot(&self.directrix).abs() / (self.striction.norm() * self.directrix.norm())
    }
}

pub fn striction_tangents(surface: &RuledSurface, u: f64) -> Result<StrictionTangents> {
    let local = non_conoidal(surface, u, 1)?;
    let frame = surface.frame_at(u)?;
    let (k, d, dp, l, eps) = (local.k(), local.d(), local.dp(), local.l(), local.eps());
    let ad = local.abs_d();
    Ok(StrictionTangents {
        striction: frame.to_ambient([d * l, 0.0, d]),
        directrix: frame.to_ambient([-eps / ad.sqrt(), -0.5 * dp * ad.powf(-1.5), eps * k / ad.sqrt()]),
    })
}

/// Deviation of the map from being area-preserving, conformal and
/// isometric at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MappingResiduals {
    /// `det g - det g*`.
    pub area: f64,
    /// Largest pairwise difference of the ratios `g*_ij / g_ij`.
    pub conformal: f64,
    /// Conformal residual plus `|g*_22 / g_22 - 1|`.
    pub isometry: f64,
    /// Sign of `kappa`.
    pub eps0: f64,
}

pub fn mapping_residuals(surface: &RuledSurface, u: f64, v: f64) -> Result<MappingResiduals> {
    finite_v(v)?;
    let local = non_conoidal(surface, u, 2)?;
    let g = forms_from_local(&local, v).g;
    let gs = image_metric_local(&local, v);
    let mut ratios = vec![gs[(0, 0)] / g[(0, 0)], gs[(1, 1)] / g[(1, 1)]];
    if g[(0, 1)].abs() >= 1e-12 {
        ratios.push(gs[(0, 1)] / g[(0, 1)]);
    }
    let mut conformal = 0.0f64;
    for (i, a) in ratios.iter().enumerate() {
        for b in &ratios[i + 1..] {
            conformal = conformal.max((a - b).abs());
        }
    }
    Ok(MappingResiduals {
        area: g.determinant() - gs.determinant(),
        conformal,
        isometry: conformal + (ratios[1] - 1.0).abs(),
        eps0: local.k().signum(),
    })
}

/// The image as a ruled surface: directrix `x*(u, 0)` and rulings
/// `x*(u, 1) - x*(u, 0)`, oriented along the rulings of the original.
pub struct ImageParametrization<'a>(pub &'a RuledSurface);

impl RuledParametrization for ImageParametrization<'_> {
    fn directrix(&self, u: f64) -> Result<Vec3> {
        image_point(self.0, u, 0.0)
    }

    fn ruling(&self, u: f64) -> Result<Vec3> {
        let d = image_point(self.0, u, 1.0)? - image_point(self.0, u, 0.0)?;
        let e = self.0.frame_at(u)?.e;
        Ok(if d.dot(&e) < 0.0 { -d } else { d })
    }

    fn domain(&self) -> crate::frame::Domain {
        self.0.domain()
    }
}
