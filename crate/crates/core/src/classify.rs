//! Surface-class predicates and numerical checks of the propositions
//! relating them to the relative-geometric invariants.
//!
//! Every predicate is a maximum of residuals over a sample grid compared
//! against a tolerance. Propositions are checked as implications (or
//! equivalences) between such predicates on one concrete surface.

use std::collections::BTreeMap;

use nalgebra::{Matrix3, SymmetricEigen};
use serde::Serialize;

use crate::affine::{
    image_edlinger_check, image_invariants, mapping_residuals, self_affine_residual,
    striction_tangents, EdlingerBranch,
};
use crate::curves::{
    curvature_line_residual, family_slope, tchebychev_alignment, tchebychev_slope, CurveFamily,
};
use crate::error::{Error, Result};
use crate::frame::{linspace, LocalInvariants, RuledSurface};
use crate::relgeom::{field_derivatives, pick};
use crate::tensors::relative_data;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Predicate {
    pub holds: bool,
    /// `None` when the residual is undefined on this surface.
    pub max_residual: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub predicates: BTreeMap<String, Predicate>,
    pub grid: Vec<(f64, f64)>,
    pub alpha_list: Vec<f64>,
    pub tol: f64,
    pub edlinger_image_branch: Option<EdlingerBranch>,
}

impl ClassificationReport {
    pub fn holds(&self, name: &str) -> bool {
        self.predicates.get(name).is_some_and(|p| p.holds)
    }
}

pub const PREDICATES: [&str; 10] = [
    "conoidal",
    "right_conoid",
    "right_helicoid",
    "const_delta",
    "edlinger",
    "constant_slope",
    "asymptotic_striction",
    "orthoid_image",
    "self_affine",
    "edlinger_image",
];

fn local_residuals(local: &LocalInvariants) -> [f64; 7] {
    let (k, kp, dp, l) = (local.k(), local.kp(), local.dp(), local.l());
    [
        k.abs(),
        k.abs().max(l.abs()),
        k.abs().max(l.abs()).max(dp.abs()),
        dp.abs(),
        dp.abs().max((1.0 + k * l).abs()),
        kp.abs(),
        (k - l).abs(),
    ]
}

/// Evaluates every surface-class predicate on `n_u` equally spaced
/// samples of the striction line.
pub fn classify(surface: &RuledSurface, n_u: usize, tol: f64) -> Result<ClassificationReport> {
    if n_u < 8 {
        return Err(Error::InvalidArgument(format!("classification needs at least 8 samples, got {n_u}")));
    }
    if !(tol >= 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance {tol} must be non-negative")));
    }
    let us = surface.domain().samples(n_u);
    let mut worst = [0.0f64; 7];
    for &u in &us {
        let local = surface.local(u, 2)?;
        for (w, r) in worst.iter_mut().zip(local_residuals(&local)) {
            *w = w.max(r);
        }
    }
    let mut predicates = BTreeMap::new();
    for (name, r) in PREDICATES.iter().zip(worst) {
        predicates.insert(name.to_string(), Predicate { holds: r <= tol, max_residual: Some(r) });
    }

    let affine = |f: &dyn Fn(f64) -> Result<f64>| -> Result<Option<f64>> {
        let mut m = 0.0f64;
        for &u in &us {
            match f(u) {
                Ok(r) => m = m.max(r),
                Err(Error::ConoidalSurface { .. }) => return Ok(None),
                Err(e) => return Err(e),
            }
        }
        Ok(Some(m))
    };
    let orthoid = affine(&|u| Ok(image_invariants(surface, u)?.lambda_star.abs()))?;
    let selfaff = affine(&|u| {
        let r = self_affine_residual(surface, u)?;
        Ok(r.r1.abs().max(r.r2.abs()))
    })?;
    let (edl_img, branch) = match image_edlinger_check(surface, &us) {
        Ok(c) => (Some(c.max_residual), Some(c.branch)),
        Err(Error::ConoidalSurface { .. }) => (None, None),
        Err(e) => return Err(e),
    };
    for (name, r) in [("orthoid_image", orthoid), ("self_affine", selfaff), ("edlinger_image", edl_img)] {
        predicates.insert(
            name.to_string(),
            Predicate {
                holds: r.is_some_and(|r| r <= tol),
                max_residual: r,
            },
        );
    }
    Ok(ClassificationReport {
        predicates,
        grid: us.iter().map(|&u| (u, 0.0)).collect(),
        alpha_list: Vec::new(),
        tol,
        edlinger_image_branch: branch,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// The hypothesis holds and so does the conclusion.
    Consistent,
    /// The hypothesis fails on this surface; the witnessed residuals are
    /// recorded.
    VacuouslyConsistent,
    Inconsistent,
    /// The statement does not apply at this `alpha` or on this surface.
    Excluded,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropositionCheck {
    pub status: Status,
    /// Whether the hypothesis holds; `None` when excluded.
    pub antecedent: Option<bool>,
    /// Largest residual of every quantity involved.
    pub residuals: BTreeMap<String, f64>,
    pub detail: String,
}

impl PropositionCheck {
    pub fn consistent(&self) -> bool {
        matches!(self.status, Status::Consistent | Status::VacuouslyConsistent)
    }

    fn excluded(detail: &str) -> Self {
        PropositionCheck {
            status: Status::Excluded,
            antecedent: None,
            residuals: BTreeMap::new(),
            detail: detail.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub nu: usize,
    pub nv: usize,
    pub v0: f64,
    pub v1: f64,
    pub tol: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            nu: 17,
            nv: 9,
            v0: -2.0,
            v1: 2.0,
            tol: 1e-7,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropositionReport {
    pub alpha: f64,
    pub config: SuiteConfig,
    pub propositions: BTreeMap<String, PropositionCheck>,
}

impl PropositionReport {
    pub fn all_consistent(&self) -> bool {
        self.propositions.values().all(|p| p.status != Status::Inconsistent)
    }
}

pub const PROPOSITIONS: [&str; 11] = [
    "planar_normals",
    "helicoid_pick_tchebychev",
    "edlinger_tchebychev",
    "conoid_divergence",
    "helicoid_divergence",
    "edlinger_rotation",
    "self_congruence",
    "striction_tangents",
    "edlinger_image",
    "edlinger_pair",
    "minding_mapping",
];

struct Suite<'a> {
    surface: &'a RuledSurface,
    alpha: f64,
    tol: f64,
    us: Vec<f64>,
    vs: Vec<f64>,
}

/// Outcome of a single-direction check `antecedent => consequent`.
fn implication(antecedent: bool, consequent: bool) -> Status {
    match (antecedent, consequent) {
        (true, true) => Status::Consistent,
        (true, false) => Status::Inconsistent,
        (false, _) => Status::VacuouslyConsistent,
    }
}

/// Outcome of an equivalence between statements.
fn equivalence(statements: &[bool]) -> Status {
    if statements.iter().all(|&s| s) {
        Status::Consistent
    } else if statements.iter().all(|&s| !s) {
        Status::VacuouslyConsistent
    } else {
        Status::Inconsistent
    }
}

fn residual_map(entries: &[(&str, f64)]) -> BTreeMap<String, f64> {
    entries.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

impl Suite<'_> {
    fn quarter(&self) -> bool {
        (self.alpha - 0.25).abs() < 1e-12
    }

    fn max_u(&self, f: impl Fn(&LocalInvariants) -> f64) -> Result<f64> {
        let mut m = 0.0f64;
        for &u in &self.us {
            m = m.max(f(&self.surface.local(u, 2)?).abs());
        }
        Ok(m)
    }

    /// Largest `|f|` over the grid; points where `f` reports a singular
    /// slope are skipped.
    fn max_grid(&self, f: impl Fn(f64, f64) -> Result<f64>) -> Result<f64> {
        let mut m = 0.0f64;
        for &u in &self.us {
            for &v in &self.vs {
                match f(u, v) {
                    Ok(x) => m = m.max(x.abs()),
                    Err(Error::SingularSlope { .. }) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        Ok(m)
    }

    fn ok(&self, r: f64) -> bool {
        r <= self.tol
    }

    fn conoidal_anywhere(&self) -> Result<bool> {
        for &u in &self.us {
            if self.surface.local(u, 0)?.k().abs() < 1e-12 {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn edlinger(&self) -> Result<f64> {
        self.max_u(|l| l.dp().abs().max((1.0 + l.k() * l.l()).abs()))
    }

    fn right_helicoid(&self) -> Result<f64> {
        self.max_u(|l| l.k().abs().max(l.l().abs()).max(l.dp().abs()))
    }

    fn planar_normals(&self) -> Result<PropositionCheck> {
        let mut m = Matrix3::zeros();
        let mut normals = Vec::new();
        let z0 = self.surface.frame_at(self.us[0])?.z;
        let (mut z_dev, mut y_dot_z) = (0.0f64, 0.0f64);
        for &u in &self.us {
            let z = self.surface.frame_at(u)?.z;
            z_dev = z_dev.max((z - z0).norm());
            for &v in &self.vs {
                let y = relative_data(self.surface, u, v, self.alpha)?.y;
                y_dot_z = y_dot_z.max(y.dot(&z).abs());
                let yh = y.normalize();
                m += yh * yh.transpose();
                normals.push(yh);
            }
        }
        let eig = SymmetricEigen::new(m);
        let imin = eig.eigenvalues.imin();
        let c = eig.eigenvectors.column(imin).into_owned();
        let plane = normals.iter().map(|y| y.dot(&c).abs()).fold(0.0, f64::max);
        let conoidal = self.max_u(|l| l.k())?;
        let residuals = residual_map(&[
            ("plane", plane),
            ("conoidal", conoidal),
            ("z_deviation", z_dev),
            ("y_dot_z", y_dot_z),
        ]);
        let antecedent = self.ok(plane);
        let (status, detail) = if self.quarter() && self.ok(conoidal) {
            let s = if antecedent && self.ok(z_dev) && self.ok(y_dot_z) {
                Status::Consistent
            } else {
                Status::Inconsistent
            };
            (s, "conoidal at alpha = 1/4: normals orthogonal to the constant z".to_string())
        } else if antecedent {
            (Status::Inconsistent, "normals planar without alpha = 1/4 and a conoidal surface".to_string())
        } else {
            (Status::VacuouslyConsistent, format!("normals span space; worst plane residual {plane:e}"))
        };
        Ok(PropositionCheck {
            status,
            antecedent: Some(antecedent),
            residuals,
            detail,
        })
    }

    fn helicoid_pick_tchebychev(&self) -> Result<PropositionCheck> {
        if self.quarter() {
            return Ok(PropositionCheck::excluded("Tchebychev field vanishes at alpha = 1/4"));
        }
        let s = self.surface;
        let helicoid = self.right_helicoid()?;
        let j = self.max_grid(|u, v| pick(s, u, v, self.alpha))?;
        let families = [CurveFamily::Asymptotic, CurveFamily::UCurve, CurveFamily::KCurve];
        let mut tangent = f64::INFINITY;
        for fam in families {
            let r = self.max_grid(|u, v| {
                let vp = family_slope(s, fam, u, v)?.for_family(fam);
                Ok(tchebychev_alignment(s, self.alpha, u, v, vp)?.tangent_residual)
            })?;
            tangent = tangent.min(r);
        }
        let spread = self.max_grid(|u, v| {
            let mut slopes = Vec::new();
            for fam in families {
                slopes.push(family_slope(s, fam, u, v)?.for_family(fam));
            }
            let hi = slopes.iter().cloned().fold(f64::MIN, f64::max);
            let lo = slopes.iter().cloned().fold(f64::MAX, f64::min);
            Ok(hi - lo)
        })?;
        let statements = [self.ok(tangent), self.ok(j), self.ok(helicoid)];
        let mut status = equivalence(&statements);
        if status == Status::Consistent && !self.ok(spread) {
            status = Status::Inconsistent;
        }
        Ok(PropositionCheck {
            status,
            antecedent: Some(statements[2]),
            residuals: residual_map(&[
                ("tangent_alignment", tangent),
                ("pick", j),
                ("right_helicoid", helicoid),
                ("slope_spread", spread),
            ]),
            detail: "tangent to a distinguished family <=> J = 0 <=> right helicoid".into(),
        })
    }

    fn edlinger_tchebychev(&self) -> Result<PropositionCheck> {
        if self.quarter() {
            return Ok(PropositionCheck::excluded("Tchebychev field vanishes at alpha = 1/4"));
        }
        let s = self.surface;
        let a = self.alpha;
        let orth_u = self.max_grid(|u, v| Ok(tchebychev_alignment(s, a, u, v, 0.0)?.orthogonal_residual))?;
        let orth_k = self.max_grid(|u, v| {
            let vp = family_slope(s, CurveFamily::KCurve, u, v)?.for_family(CurveFamily::KCurve);
            Ok(tchebychev_alignment(s, a, u, v, vp)?.orthogonal_residual)
        })?;
        let curvature = self.max_grid(|u, v| curvature_line_residual(s, u, v, tchebychev_slope(s, u, v)?))?;
        let edl = self.edlinger()?;
        let antecedent = self.ok(orth_u.min(orth_k).min(curvature));
        let status = if self.ok(edl) {
            if self.ok(orth_u) && self.ok(orth_k) && self.ok(curvature) {
                Status::Consistent
            } else {
                Status::Inconsistent
            }
        } else {
            implication(antecedent, false)
        };
        Ok(PropositionCheck {
            status,
            antecedent: Some(antecedent),
            residuals: residual_map(&[
                ("orthogonal_to_u_curves", orth_u),
                ("orthogonal_to_k_curves", orth_k),
                ("curvature_line", curvature),
                ("edlinger", edl),
            ]),
            detail: "field along orthogonal trajectories or lines of curvature <=> Edlinger".into(),
        })
    }

    fn divergence(&self, class: f64, class_name: &str) -> Result<PropositionCheck> {
        let s = self.surface;
        let div = self.max_grid(|u, v| Ok(field_derivatives(s, u, v, self.alpha)?.div))?;
        let statements = [self.ok(div), self.ok(class)];
        Ok(PropositionCheck {
            status: equivalence(&statements),
            antecedent: Some(statements[1]),
            residuals: residual_map(&[("div", div), (class_name, class)]),
            detail: format!("div T = 0 <=> {class_name}"),
        })
    }

    fn conoid_divergence(&self) -> Result<PropositionCheck> {
        if self.alpha.abs() >= 1e-12 {
            return Ok(PropositionCheck::excluded("applies at alpha = 0"));
        }
        let class = self.max_u(|l| l.k().abs().max(l.l().abs()))?;
        self.divergence(class, "right_conoid")
    }

    fn helicoid_divergence(&self) -> Result<PropositionCheck> {
        if self.alpha.abs() < 1e-12 || self.quarter() {
            return Ok(PropositionCheck::excluded("applies at alpha other than 0 and 1/4"));
        }
        let class = self.right_helicoid()?;
        self.divergence(class, "right_helicoid")
    }

    fn edlinger_rotation(&self) -> Result<PropositionCheck> {
        if self.quarter() {
            return Ok(PropositionCheck::excluded("Tchebychev field vanishes at alpha = 1/4"));
        }
        let s = self.surface;
        let rot = self.max_grid(|u, v| Ok(field_derivatives(s, u, v, self.alpha)?.rot))?;
        let class = self.edlinger()?.max(self.max_u(|l| l.kp())?);
        let statements = [self.ok(rot), self.ok(class)];
        Ok(PropositionCheck {
            status: equivalence(&statements),
            antecedent: Some(statements[1]),
            residuals: residual_map(&[("rot", rot), ("edlinger_constant_slope", class)]),
            detail: "rot T = 0 <=> Edlinger with congruent osculating hyperboloids".into(),
        })
    }

    fn self_congruence(&self) -> Result<PropositionCheck> {
        let s = self.surface;
        let mut diff = 0.0f64;
        let mut cond = 0.0f64;
        for &u in &self.us {
            let local = s.local(u, 2)?;
            let inv = image_invariants(s, u)?;
            diff = diff
                .max((inv.kappa_star - local.k()).abs())
                .max((inv.delta_star - local.d()).abs())
                .max((inv.lambda_star - local.l()).abs());
            let r = self_affine_residual(s, u)?;
            cond = cond.max(r.r1.abs()).max(r.r2.abs());
        }
        let statements = [self.ok(diff), self.ok(cond)];
        Ok(PropositionCheck {
            status: equivalence(&statements),
            antecedent: Some(statements[1]),
            residuals: residual_map(&[("invariant_difference", diff), ("self_affine", cond)]),
            detail: "equal invariants of surface and image <=> self-affine conditions".into(),
        })
    }

    fn striction_tangents(&self) -> Result<PropositionCheck> {
        let s = self.surface;
        let (mut par, mut orth) = (0.0f64, 0.0f64);
        for &u in &self.us {
            let t = striction_tangents(s, u)?;
            par = par.max(t.parallel_residual());
            orth = orth.max(t.orthogonal_residual());
        }
        let edl = self.edlinger()?;
        let asym = self.max_u(|l| l.k() - l.l())?;
        let first = equivalence(&[self.ok(par), self.ok(edl)]);
        let second = equivalence(&[self.ok(orth), self.ok(asym)]);
        let status = if first == Status::Inconsistent || second == Status::Inconsistent {
            Status::Inconsistent
        } else if first == Status::Consistent || second == Status::Consistent {
            Status::Consistent
        } else {
            Status::VacuouslyConsistent
        };
        Ok(PropositionCheck {
            status,
            antecedent: Some(self.ok(par) || self.ok(orth)),
            residuals: residual_map(&[
                ("parallel", par),
                ("edlinger", edl),
                ("orthogonal", orth),
                ("asymptotic_striction", asym),
            ]),
            detail: "parallel tangents <=> Edlinger; orthogonal tangents <=> asymptotic striction line".into(),
        })
    }

    fn image_edlinger(&self) -> Result<f64> {
        Ok(image_edlinger_check(self.surface, &self.us)?.max_residual)
    }

    fn edlinger_image(&self) -> Result<PropositionCheck> {
        let image = self.image_edlinger()?;
        let const_both = self.max_u(|l| l.kp().abs().max(l.dp().abs()))?;
        let eq48 = self.max_u(|l| {
            let u = l.u;
            (l.k() + u * l.kp()).abs().max((2.0 * u * l.d() + u * u * l.dp()).abs())
        })?;
        let antecedent = self.ok(image);
        Ok(PropositionCheck {
            status: implication(antecedent, self.ok(const_both.min(eq48))),
            antecedent: Some(antecedent),
            residuals: residual_map(&[
                ("image_edlinger", image),
                ("const_slope_const_delta", const_both),
                ("eq48", eq48),
            ]),
            detail: "Edlinger image => constant kappa and delta, or kappa = c0/u, delta = c1/u^2".into(),
        })
    }

    fn edlinger_pair(&self) -> Result<PropositionCheck> {
        let image = self.image_edlinger()?;
        let edl = self.edlinger()?;
        let constant = self.max_u(|l| l.kp().abs().max(l.dp().abs()).max(l.lp().abs()))?;
        let antecedent = self.ok(image) && self.ok(edl);
        Ok(PropositionCheck {
            status: implication(antecedent, self.ok(constant)),
            antecedent: Some(antecedent),
            residuals: residual_map(&[
                ("image_edlinger", image),
                ("edlinger", edl),
                ("constant_invariants", constant),
            ]),
            detail: "Edlinger surface with Edlinger image => constant invariants".into(),
        })
    }

    fn minding_mapping(&self) -> Result<PropositionCheck> {
        let s = self.surface;
        let (mut area, mut conformal, mut isometry) = (0.0f64, 0.0f64, 0.0f64);
        for &u in &self.us {
            for &v in &self.vs {
                let m = mapping_residuals(s, u, v)?;
                area = area.max(m.area.abs());
                conformal = conformal.max(m.conformal);
                isometry = isometry.max(m.isometry);
            }
        }
        let mut cs = Vec::new();
        let (mut area_cond, mut lambda_cond, mut eps0_dev, mut remark) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        for &u in &self.us {
            let l = s.local(u, 2)?;
            let ad = l.abs_d();
            let c = l.k() / ad.powf(1.5);
            let eps0 = l.k().signum();
            let p = 2.0 * l.d() * l.dpp() - 3.0 * l.dp() * l.dp() - 4.0 * l.d() * l.d();
            area_cond = area_cond.max((l.k() - eps0 * ad.powf(1.5)).abs());
            lambda_cond = lambda_cond.max((l.l() - p / (4.0 * c * ad.powf(3.5))).abs());
            eps0_dev = eps0_dev.max((c - eps0).abs());
            let inv = image_invariants(s, u)?;
            remark = remark
                .max((inv.kappa_star - l.k()).abs())
                .max((inv.delta_star - eps0 * l.d()).abs())
                .max((inv.lambda_star - l.l()).abs());
            cs.push(c);
        }
        let c_spread = cs.iter().cloned().fold(f64::MIN, f64::max) - cs.iter().cloned().fold(f64::MAX, f64::min);
        let conformal_cond = c_spread.max(lambda_cond);
        let iso_cond = conformal_cond.max(eps0_dev);

        let parts = [
            equivalence(&[self.ok(area), self.ok(area_cond)]),
            equivalence(&[self.ok(conformal), self.ok(conformal_cond)]),
            equivalence(&[self.ok(isometry), self.ok(iso_cond)]),
            implication(self.ok(isometry), self.ok(remark)),
        ];
        let status = if parts.contains(&Status::Inconsistent) {
            Status::Inconsistent
        } else if parts.contains(&Status::Consistent) {
            Status::Consistent
        } else {
            Status::VacuouslyConsistent
        };
        Ok(PropositionCheck {
            status,
            antecedent: Some(self.ok(area) || self.ok(conformal)),
            residuals: residual_map(&[
                ("area", area),
                ("area_condition", area_cond),
                ("conformal", conformal),
                ("conformal_condition", conformal_cond),
                ("isometry", isometry),
                ("isometry_condition", iso_cond),
                ("isometric_image_invariants", remark),
            ]),
            detail: "area-preserving, conformal and isometric map onto the affine image".into(),
        })
    }
}

/// Runs every proposition check on one surface at one `alpha` with the
/// default grid and the given tolerance.
pub fn proposition_suite(surface: &RuledSurface, alpha: f64, tol: f64) -> Result<PropositionReport> {
    proposition_suite_with(surface, alpha, &SuiteConfig { tol, ..SuiteConfig::default() })
}

pub fn proposition_suite_with(surface: &RuledSurface, alpha: f64, config: &SuiteConfig) -> Result<PropositionReport> {
    if !alpha.is_finite() {
        return Err(Error::InvalidArgument(format!("alpha = {alpha} is not finite")));
    }
    if config.nu < 2 || config.nv < 2 || !(config.v0 < config.v1) || !(config.tol >= 0.0) {
        return Err(Error::InvalidArgument(format!("invalid suite grid {config:?}")));
    }
    let d = surface.domain();
    let suite = Suite {
        surface,
        alpha,
        tol: config.tol,
        us: d.samples(config.nu),
        vs: linspace(config.v0, config.v1, config.nv),
    };
    let conoidal = suite.conoidal_anywhere()?;
    let mut out = BTreeMap::new();
    for name in PROPOSITIONS {
        let needs_image = matches!(
            name,
            "self_congruence" | "striction_tangents" | "edlinger_image" | "edlinger_pair" | "minding_mapping"
        );
        let check = if needs_image && conoidal {
            PropositionCheck::excluded("conoidal surface; the affine image is not a ruled surface")
        } else {
            match name {
                "planar_normals" => suite.planar_normals()?,
                "helicoid_pick_tchebychev" => suite.helicoid_pick_tchebychev()?,
                "edlinger_tchebychev" => suite.edlinger_tchebychev()?,
                "conoid_divergence" => suite.conoid_divergence()?,
                "helicoid_divergence" => suite.helicoid_divergence()?,
                "edlinger_rotation" => suite.edlinger_rotation()?,
                "self_congruence" => suite.self_congruence()?,
                "striction_tangents" => suite.striction_tangents()?,
                "edlinger_image" => suite.edlinger_image()?,
                "edlinger_pair" => suite.edlinger_pair()?,
                _ => suite.minding_mapping()?,
            }
        };
        out.insert(name.to_string(), check);
    }
    Ok(PropositionReport {
        alpha,
        config: *config,
        propositions: out,
    })
}
