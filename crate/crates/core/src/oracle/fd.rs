//! Finite differences of sampled functions.

use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

/// Values that finite differences can combine.
pub trait Linear: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {}

impl<T> Linear for T where T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T> {}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FDConfig {
    /// Base step, within `[1e-7, 1e-2]`.
    pub step: f64,
    /// Combine steps `h` and `h/2` to cancel the leading error term.
    pub richardson: bool,
    /// Scale the step by `max(1, |x|)`.
    pub relative: bool,
}

impl Default for FDConfig {
    fn default() -> Self {
        FDConfig {
            step: 1e-4,
            richardson: true,
            relative: false,
        }
    }
}

impl FDConfig {
    pub const MIN_STEP: f64 = 1e-7;
    pub const MAX_STEP: f64 = 1e-2;

    pub fn with_step(step: f64) -> Result<Self> {
        FDConfig {
            step,
            ..FDConfig::default()
        }
        .validated()
    }

    pub fn validated(self) -> Result<Self> {
        if (Self::MIN_STEP..=Self::MAX_STEP).contains(&self.step) {
            Ok(self)
        } else {
            Err(Error::InvalidArgument(format!(
                "finite-difference step {} outside [{}, {}]",
                self.step,
                Self::MIN_STEP,
                Self::MAX_STEP
            )))
        }
    }

    fn step_at(&self, x: f64) -> f64 {
        if self.relative {
            self.step * x.abs().max(1.0)
        } else {
            self.step
        }
    }
}

/// Derivative of order 1 or 2 of `f` at `x`.
///
/// Uses central differences when `[x - h, x + h]` fits inside `bounds`;
/// otherwise a six-point one-sided stencil pointing into the interval.
pub fn derivative<T, F>(f: F, x: f64, order: usize, cfg: &FDConfig, bounds: Option<(f64, f64)>) -> Result<T>
where
    T: Linear,
    F: Fn(f64) -> Result<T>,
{
    assert!(order == 1 || order == 2, "only first and second derivatives are supported");
    let h = cfg.step_at(x);
    let fits = bounds.is_none_or(|(lo, hi)| x - h >= lo && x + h <= hi);
    if fits {
        let at = |h: f64| central(&f, x, order, h);
        if cfg.richardson {
            let coarse = at(h)?;
            let fine = at(0.5 * h)?;
            Ok(fine * (4.0 / 3.0) - coarse * (1.0 / 3.0))
        } else {
            at(h)
        }
    } else {
        let (lo, hi) = bounds.expect("bounded");
        let dir = if x - h < lo { 1.0 } else { -1.0 };
        if (dir > 0.0 && x + 5.0 * h > hi) || (dir < 0.0 && x - 5.0 * h < lo) {
            return Err(Error::InvalidArgument(format!(
                "interval [{lo}, {hi}] too short for a finite-difference stencil of step {h}"
            )));
        }
        let nodes: Vec<f64> = (0..6).map(|j| dir * j as f64).collect();
        let weights = fornberg(&nodes, order);
        let mut acc: Option<T> = None;
        for (j, w) in weights.iter().enumerate() {
            let term = f(x + nodes[j] * h)? * *w;
            acc = Some(match acc {
                Some(a) => a + term,
                None => term,
            });
        }
        Ok(acc.expect("nonempty stencil") * (1.0 / h.powi(order as i32)))
    }
}

fn central<T, F>(f: &F, x: f64, order: usize, h: f64) -> Result<T>
where
    T: Linear,
    F: Fn(f64) -> Result<T>,
{
    let plus = f(x + h)?;
    let minus = f(x - h)?;
    Ok(match order {
        1 => (plus - minus) * (0.5 / h),
        _ => {
            let mid = f(x)?;
            (plus + minus - mid * 2.0) * (1.0 / (h * h))
        }
    })
}

/// Weights of the `order`-th derivative at 0 over the given nodes
/// (Fornberg's recursion).
pub fn fornberg(nodes: &[f64], order: usize) -> Vec<f64> {
    let n = nodes.len();
    let mut c = vec![vec![0.0; order + 1]; n];
    c[0][0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = nodes[0];
    for i in 1..n {
        let mn = i.min(order);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = nodes[i];
        for j in 0..i {
            let c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.iter().map(|row| row[order]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fornberg_reproduces_textbook_stencils() {
        let w = fornberg(&[-1.0, 0.0, 1.0], 1);
        assert!((w[0] + 0.5).abs() < 1e-15 && w[1].abs() < 1e-15 && (w[2] - 0.5).abs() < 1e-15);
        let w = fornberg(&[0.0, 1.0, 2.0], 2);
        assert!((w[0] - 1.0).abs() < 1e-14 && (w[1] + 2.0).abs() < 1e-14 && (w[2] - 1.0).abs() < 1e-14);
        let w = fornberg(&[0.0, 1.0, 2.0], 1);
        assert!((w[0] + 1.5).abs() < 1e-14 && (w[1] - 2.0).abs() < 1e-14 && (w[2] + 0.5).abs() < 1e-14);
    }

    #[test]
    fn central_and_one_sided() {
        let cfg = FDConfig::default();
        let f = |x: f64| Ok(x.sin());
        let d1: f64 = derivative(f, 0.3, 1, &cfg, None).unwrap();
        assert!((d1 - 0.3f64.cos()).abs() < 1e-11);
        let d2: f64 = derivative(f, 0.3, 2, &cfg, None).unwrap();
        assert!((d2 + 0.3f64.sin()).abs() < 1e-7);
        let edge: f64 = derivative(f, 0.0, 1, &cfg, Some((0.0, 1.0))).unwrap();
        assert!((edge - 1.0).abs() < 1e-10);
        let edge2: f64 = derivative(f, 1.0, 2, &FDConfig::with_step(1e-3).unwrap(), Some((0.0, 1.0))).unwrap();
        assert!((edge2 + 1f64.sin()).abs() < 1e-7);
    }

    #[test]
    fn step_range_is_enforced() {
        assert!(FDConfig::with_step(1e-8).is_err());
        assert!(FDConfig::with_step(0.1).is_err());
        assert!(FDConfig::with_step(1e-2).is_ok());
    }

    #[test]
    fn richardson_is_fourth_order() {
        // exact derivative known; halving the step should cut the error ~16x
        let f = |x: f64| Ok((2.0 * x).exp() * x.cos());
        let exact = |x: f64| (2.0 * x).exp() * (2.0 * x.cos() - x.sin());
        let x = 0.4;
        let err = |h: f64| {
            let d: f64 = derivative(f, x, 1, &FDConfig::with_step(h).unwrap(), None).unwrap();
            (d - exact(x)).abs()
        };
        let ratio = err(1e-2) / err(5e-3);
        assert!((8.0..=24.0).contains(&ratio), "ratio {ratio}");
    }
}
