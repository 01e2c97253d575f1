//! Closed forms against their definition-based oracles over a grid.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::affine::{image_invariants, CONOIDAL_KAPPA, image_metric, image_point, ImageParametrization};
use crate::error::Result;
use crate::frame::{linspace, RuledSurface};
use crate::oracle::{
    extract_invariants, numeric_darboux, numeric_field_derivatives, numeric_forms, numeric_metric_of, numeric_pick,
    numeric_relative_metric, numeric_relative_normal, numeric_tchebychev, FDConfig,
};
use crate::relgeom::{darboux, field_derivatives, pick, tchebychev};
use crate::tensor::Sym2;
use crate::tensors::{fundamental_forms, relative_data};

/// Errors are measured relative to `max(sup |closed|, SCALE_FLOOR)` so
/// that identically vanishing quantities are compared absolutely.
pub const SCALE_FLOOR: f64 = 1e-3;

/// Ceiling on the tolerance of rows whose oracle uses exact derivatives.
pub const EXACT_TOL: f64 = 1e-8;

/// Step for invariant extraction; the frame is only known on a discrete
/// node set, so very small steps amplify interpolation noise.
pub const EXTRACTION_STEP: f64 = 1e-2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Grid {
    pub u0: f64,
    pub u1: f64,
    pub nu: usize,
    pub v0: f64,
    pub v1: f64,
    pub nv: usize,
}

impl Grid {
    pub fn us(&self) -> Vec<f64> {
        linspace(self.u0, self.u1, self.nu)
    }

    pub fn vs(&self) -> Vec<f64> {
        linspace(self.v0, self.v1, self.nv)
    }

    /// Row-major in `u`, then `v`.
    pub fn points(&self) -> Vec<(f64, f64)> {
        let vs = self.vs();
        self.us().into_iter().flat_map(|u| vs.iter().map(move |&v| (u, v))).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleKind {
    /// Oracle built from exact embedding derivatives.
    Exact,
    /// Oracle involving finite differences.
    FiniteDifference,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub quantity: &'static str,
    pub oracle: OracleKind,
    pub max_abs_error: f64,
    pub scale: f64,
    pub relative_error: f64,
    pub tol: f64,
}

impl Row {
    pub fn passed(&self) -> bool {
        self.relative_error <= self.tol
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub alpha: f64,
    pub tol: f64,
    pub grid: Grid,
    pub rows: Vec<Row>,
    pub skipped: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(Row::passed)
    }

    pub fn row(&self, quantity: &str) -> Option<&Row> {
        self.rows.iter().find(|r| r.quantity == quantity)
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{:<10} {:<6} {:>12} {:>12} {:>12}  status", "quantity", "oracle", "max_abs", "scale", "rel").unwrap();
        for r in &self.rows {
            let kind = match r.oracle {
                OracleKind::Exact => "exact",
                OracleKind::FiniteDifference => "fd",
            };
            let status = if r.passed() { "ok" } else { "FAIL" };
            writeln!(
                out,
                "{:<10} {:<6} {:>12.3e} {:>12.3e} {:>12.3e}  {status}",
                r.quantity, kind, r.max_abs_error, r.scale, r.relative_error
            )
            .unwrap();
        }
        for s in &self.skipped {
            writeln!(out, "skipped: {s}").unwrap();
        }
        out
    }
}

#[derive(Default, Clone, Copy)]
struct Acc {
    err: f64,
    scale: f64,
}

impl Acc {
    fn add(&mut self, closed: &[f64], numeric: &[f64]) {
        for (c, n) in closed.iter().zip(numeric) {
            self.err = self.err.max((c - n).abs());
            self.scale = self.scale.max(c.abs());
        }
    }

    fn merge(mut self, other: Acc) -> Acc {
        self.err = self.err.max(other.err);
        self.scale = self.scale.max(other.scale);
        self
    }
}

fn entries(m: &Sym2) -> [f64; 3] {
    [m[(0, 0)], m[(0, 1)], m[(1, 1)]]
}

const POINT_ROWS: [(&str, OracleKind); 11] = [
    ("g", OracleKind::Exact),
    ("h", OracleKind::Exact),
    ("K", OracleKind::Exact),
    ("G", OracleKind::Exact),
    ("y", OracleKind::FiniteDifference),
    ("A", OracleKind::FiniteDifference),
    ("J", OracleKind::FiniteDifference),
    ("T", OracleKind::FiniteDifference),
    ("T_vec", OracleKind::FiniteDifference),
    ("div", OracleKind::FiniteDifference),
    ("rot", OracleKind::FiniteDifference),
];

const IMAGE_POINT_ROWS: [(&str, OracleKind); 2] =
    [("x_star", OracleKind::FiniteDifference), ("g_star", OracleKind::FiniteDifference)];

const IMAGE_U_ROWS: [(&str, OracleKind); 3] = [
    ("kappa_star", OracleKind::FiniteDifference),
    ("delta_star", OracleKind::FiniteDifference),
    ("lambda_star", OracleKind::FiniteDifference),
];

fn point_rows(s: &RuledSurface, u: f64, v: f64, alpha: f64, cfg: &FDConfig) -> Result<[Acc; 11]> {
    let mut acc = [Acc::default(); 11];
    let forms = fundamental_forms(s, u, v)?;
    let num = numeric_forms(s, u, v)?;
    acc[0].add(&entries(&forms.g), &entries(&num.g));
    acc[1].add(&entries(&forms.h), &entries(&num.h));
    acc[2].add(&[forms.gauss], &[num.gauss]);

    let rel = relative_data(s, u, v, alpha)?;
    acc[3].add(&entries(&rel.relative_metric), &entries(&numeric_relative_metric(s, u, v, alpha)?));
    acc[4].add(rel.y.as_slice(), numeric_relative_normal(s, u, v, alpha, cfg)?.as_slice());

    let a = darboux(s, u, v, alpha)?;
    let na = numeric_darboux(s, u, v, alpha, cfg)?;
    acc[5].add(&[a.a111, a.a112, a.a221, a.a222], &[na.a111, na.a112, na.a221, na.a222]);
    acc[6].add(&[pick(s, u, v, alpha)?], &[numeric_pick(s, u, v, alpha, cfg)?]);

    let t = tchebychev(s, u, v, alpha)?;
    let (nt, nvec) = numeric_tchebychev(s, u, v, alpha, cfg)?;
    acc[7].add(&[t.t1, t.t2], &nt);
    acc[8].add(t.vec.as_slice(), nvec.as_slice());

    let fdv = field_derivatives(s, u, v, alpha)?;
    let (ndiv, nrot) = numeric_field_derivatives(s, u, v, alpha, cfg)?;
    acc[9].add(&[fdv.div], &[ndiv]);
    acc[10].add(&[fdv.rot], &[nrot]);
    Ok(acc)
}

fn image_point_rows(s: &RuledSurface, u: f64, v: f64, cfg: &FDConfig) -> Result<[Acc; 2]> {
    let mut acc = [Acc::default(); 2];
    acc[0].add(image_point(s, u, v)?.as_slice(), numeric_relative_normal(s, u, v, 0.25, cfg)?.as_slice());
    let d = s.domain();
    let num = numeric_metric_of(|a, b| image_point(s, a, b), u, v, cfg, Some((d.lo, d.hi)))?;
    acc[1].add(&entries(&image_metric(s, u, v)?), &entries(&num));
    Ok(acc)
}

fn image_u_rows(s: &RuledSurface, u: f64) -> Result<[Acc; 3]> {
    let mut acc = [Acc::default(); 3];
    let cfg = FDConfig::with_step(EXTRACTION_STEP)?;
    let got = extract_invariants(&ImageParametrization(s), u, &cfg)?;
    let want = image_invariants(s, u)?;
    acc[0].add(&[want.kappa_star], &[got.kappa]);
    acc[1].add(&[want.delta_star], &[got.delta]);
    acc[2].add(&[want.lambda_star], &[got.lambda]);
    Ok(acc)
}

fn fold<const N: usize>(parts: Vec<[Acc; N]>) -> [Acc; N] {
    parts.into_iter().fold([Acc::default(); N], |mut a, b| {
        for (x, y) in a.iter_mut().zip(b) {
            *x = x.merge(y);
        }
        a
    })
}

fn push_rows<const N: usize>(rows: &mut Vec<Row>, names: &[(&'static str, OracleKind); N], acc: [Acc; N], tol: f64) {
    for ((quantity, oracle), a) in names.iter().zip(acc) {
        rows.push(Row {
            quantity,
            oracle: *oracle,
            max_abs_error: a.err,
            scale: a.scale,
            relative_error: a.err / a.scale.max(SCALE_FLOOR),
            tol: match oracle {
                OracleKind::Exact => tol.min(EXACT_TOL),
                OracleKind::FiniteDifference => tol,
            },
        });
    }
}

/// Compares every closed form with its oracle on `grid`.
///
/// Rows for the affine image are skipped on surfaces that are conoidal at
/// some grid abscissa.
pub fn run_suite(surface: &RuledSurface, alpha: f64, grid: &Grid, tol: f64) -> Result<VerifyReport> {
    let cfg = FDConfig::default();
    let points = grid.points();
    let per_point: Vec<[Acc; 11]> = points
        .par_iter()
        .map(|&(u, v)| point_rows(surface, u, v, alpha, &cfg))
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    push_rows(&mut rows, &POINT_ROWS, fold(per_point), tol);

    let mut skipped = Vec::new();
    let us = grid.us();
    let mut conoidal = false;
    for &u in &us {
        conoidal |= surface.local(u, 0)?.k().abs() < CONOIDAL_KAPPA;
    }
    if conoidal {
        skipped.push("affine image rows: the surface is conoidal".to_string());
    } else {
        let img: Vec<[Acc; 2]> = points
            .par_iter()
            .map(|&(u, v)| image_point_rows(surface, u, v, &cfg))
            .collect::<Result<_>>()?;
        push_rows(&mut rows, &IMAGE_POINT_ROWS, fold(img), tol);
        let inv: Vec<[Acc; 3]> = us.par_iter().map(|&u| image_u_rows(surface, u)).collect::<Result<_>>()?;
        push_rows(&mut rows, &IMAGE_U_ROWS, fold(inv), tol);
    }
    Ok(VerifyReport {
        alpha,
        tol,
        grid: *grid,
        rows,
        skipped,
    })
}
