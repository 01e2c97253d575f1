//! Surface synthesis from the fundamental invariants.
//!
//! The moving frame `(e, n, z)` obeys `e' = n`, `n' = -e + kappa z`,
//! `z' = -kappa n` and the line of striction obeys
//! `s' = delta (lambda e + z)`. The joint system is integrated once with
//! fixed-step RK4 from the standard basis at the left end of the domain;
//! the nodes are cached and queried through cubic Hermite interpolation.
//!
//! Higher u-derivatives never use finite differences: they follow by
//! applying the frame equations recursively to frame components that are
//! themselves jets in u.

use nalgebra::Vector3;

use crate::error::{Error, Result};
use crate::expr::{parse, Expr, Jet};
use crate::mutation::{Formula, Mutation};

pub type Vec3 = Vector3<f64>;

/// Default lower bound on `|delta|`; smaller values count as a torsal ruling.
pub const DEFAULT_DELTA_FLOOR: f64 = 1e-9;

/// Closed parameter interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain {
    pub lo: f64,
    pub hi: f64,
}

impl Domain {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidArgument(format!(
                "domain [{lo}, {hi}] must be a finite interval with lo < hi"
            )));
        }
        Ok(Domain { lo, hi })
    }

    pub fn span(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, u: f64) -> bool {
        let slack = 1e-12 * (1.0 + self.span());
        u >= self.lo - slack && u <= self.hi + slack
    }

    /// `n` evenly spaced samples including both ends.
    pub fn samples(&self, n: usize) -> Vec<f64> {
        linspace(self.lo, self.hi, n)
    }
}

pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..n)
            .map(|i| {
                if i == n - 1 {
                    b
                } else {
                    a + (b - a) * i as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}

/// Conical curvature, parameter of distribution and `lambda = cot(sigma)`
/// as functions of `u`, together with their domain.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantTriple {
    pub kappa: Expr,
    pub delta: Expr,
    pub lambda: Expr,
    pub domain: Domain,
}

impl InvariantTriple {
    pub fn new(kappa: Expr, delta: Expr, lambda: Expr, domain: Domain) -> Self {
        InvariantTriple {
            kappa,
            delta,
            lambda,
            domain,
        }
    }

    /// Parses the three expressions.
    pub fn parse(kappa: &str, delta: &str, lambda: &str, lo: f64, hi: f64) -> Result<Self> {
        Ok(InvariantTriple::new(
            parse(kappa)?,
            parse(delta)?,
            parse(lambda)?,
            Domain::new(lo, hi)?,
        ))
    }

    /// Jets of all three invariants at `u`.
    pub fn local(&self, u: f64, order: usize) -> Result<LocalInvariants> {
        Ok(LocalInvariants {
            u,
            kappa: self.kappa.eval_jet(u, order)?,
            delta: self.delta.eval_jet(u, order)?,
            lambda: self.lambda.eval_jet(u, order)?,
        })
    }
}

/// Invariants and their u-derivatives at one parameter value.
#[derive(Debug, Clone, Copy)]
pub struct LocalInvariants {
    pub u: f64,
    pub kappa: Jet,
    pub delta: Jet,
    pub lambda: Jet,
}

impl LocalInvariants {
    pub fn k(&self) -> f64 {
        self.kappa.value()
    }
    pub fn kp(&self) -> f64 {
        self.kappa.deriv(1)
    }
    pub fn d(&self) -> f64 {
        self.delta.value()
    }
    pub fn dp(&self) -> f64 {
        self.delta.deriv(1)
    }
    pub fn dpp(&self) -> f64 {
        self.delta.deriv(2)
    }
    pub fn l(&self) -> f64 {
        self.lambda.value()
    }
    pub fn lp(&self) -> f64 {
        self.lambda.deriv(1)
    }
    /// Sign of `delta`.
    pub fn eps(&self) -> f64 {
        self.d().signum()
    }
    pub fn abs_d(&self) -> f64 {
        self.d().abs()
    }
}

/// Orthonormal frame and striction point at `u`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FramePoint {
    pub u: f64,
    /// Unit ruling direction.
    pub e: Vec3,
    /// Central normal.
    pub n: Vec3,
    /// Central tangent.
    pub z: Vec3,
    /// Point on the line of striction.
    pub s: Vec3,
}

impl FramePoint {
    /// Largest deviation from a right-handed orthonormal frame.
    pub fn orthonormality_defect(&self) -> f64 {
        let dots = [self.e.dot(&self.n), self.e.dot(&self.z), self.n.dot(&self.z)];
        let norms = [self.e.norm() - 1.0, self.n.norm() - 1.0, self.z.norm() - 1.0];
        let det = self.e.dot(&self.n.cross(&self.z)) - 1.0;
        dots.iter()
            .chain(norms.iter())
            .chain(std::iter::once(&det))
            .fold(0.0f64, |m, x| m.max(x.abs()))
    }

    /// Ambient vector with frame components `c`.
    pub fn to_ambient(&self, c: [f64; 3]) -> Vec3 {
        self.e * c[0] + self.n * c[1] + self.z * c[2]
    }
}

#[derive(Debug, Clone, Copy)]
struct State {
    e: Vec3,
    n: Vec3,
    z: Vec3,
    s: Vec3,
}

impl State {
    fn axpy(&self, h: f64, d: &State) -> State {
        State {
            e: self.e + d.e * h,
            n: self.n + d.n * h,
            z: self.z + d.z * h,
            s: self.s + d.s * h,
        }
    }

    fn orthonormalize(mut self) -> State {
        self.e = self.e.normalize();
        self.n = (self.n - self.e * self.e.dot(&self.n)).normalize();
        self.z = (self.z - self.e * self.e.dot(&self.z) - self.n * self.n.dot(&self.z)).normalize();
        self
    }
}

#[derive(Debug, Clone, Copy)]
struct Node {
    state: State,
    rate: State,
}

/// A ruled surface realized from its invariants, with the integrated frame
/// cached over the whole domain. Queries are read-only after construction.
#[derive(Debug, Clone)]
pub struct RuledSurface {
    triple: InvariantTriple,
    delta_floor: f64,
    eps: f64,
    step: f64,
    nodes: Vec<Node>,
    mutation: Option<Mutation>,
}

impl RuledSurface {
    pub fn new(triple: InvariantTriple) -> Result<Self> {
        Self::with_delta_floor(triple, DEFAULT_DELTA_FLOOR)
    }

    pub fn with_delta_floor(triple: InvariantTriple, delta_floor: f64) -> Result<Self> {
        let domain = triple.domain;
        let steps = (domain.span() / 1e-3).ceil().max(1024.0) as usize;
        let step = domain.span() / steps as f64;

        let mut surface = RuledSurface {
            triple,
            delta_floor,
            eps: 0.0,
            step,
            nodes: Vec::with_capacity(steps + 1),
            mutation: None,
        };
        let mut state = State {
            e: Vec3::x(),
            n: Vec3::y(),
            z: Vec3::z(),
            s: Vec3::zeros(),
        };
        for k in 0..=steps {
            let u = domain.lo + step * k as f64;
            let rate = surface.rate(u, &state)?;
            surface.nodes.push(Node { state, rate });
            if k == steps {
                break;
            }
            let k1 = rate;
            let k2 = surface.rate(u + 0.5 * step, &state.axpy(0.5 * step, &k1))?;
            let k3 = surface.rate(u + 0.5 * step, &state.axpy(0.5 * step, &k2))?;
            let k4 = surface.rate(u + step, &state.axpy(step, &k3))?;
            let sum = State {
                e: k1.e + (k2.e + k3.e) * 2.0 + k4.e,
                n: k1.n + (k2.n + k3.n) * 2.0 + k4.n,
                z: k1.z + (k2.z + k3.z) * 2.0 + k4.z,
                s: k1.s + (k2.s + k3.s) * 2.0 + k4.s,
            };
            state = state.axpy(step / 6.0, &sum).orthonormalize();
        }
        Ok(surface)
    }

    /// Right-hand side of the frame and striction equations; also enforces
    /// the torsal-free and constant-sign conditions on `delta`.
    fn rate(&mut self, u: f64, x: &State) -> Result<State> {
        let kappa = self.triple.kappa.eval(u)?;
        let delta = self.triple.delta.eval(u)?;
        let lambda = self.triple.lambda.eval(u)?;
        if delta.abs() < self.delta_floor {
            return Err(Error::TorsalRuling { u, delta });
        }
        if self.eps == 0.0 {
            self.eps = delta.signum();
        } else if delta.signum() != self.eps {
            return Err(Error::TorsalRuling { u, delta });
        }
        Ok(State {
            e: x.n,
            n: -x.e + x.z * kappa,
            z: -x.n * kappa,
            s: (x.e * lambda + x.z) * delta,
        })
    }

    #[doc(hidden)]
    pub fn with_mutation(mut self, mutation: Option<Mutation>) -> Self {
        self.mutation = mutation;
        self
    }

    pub(crate) fn tweak(&self, formula: Formula, site: usize, value: f64) -> f64 {
        Mutation::apply(self.mutation, formula, site, value)
    }

    pub fn triple(&self) -> &InvariantTriple {
        &self.triple
    }

    pub fn domain(&self) -> Domain {
        self.triple.domain
    }

    /// Sign of the parameter of distribution (constant over the domain).
    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// RK4 step used for the cached frame.
    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn delta_floor(&self) -> f64 {
        self.delta_floor
    }

    fn check_domain(&self, u: f64) -> Result<()> {
        let d = self.domain();
        if d.contains(u) {
            Ok(())
        } else {
            Err(Error::OutOfDomain { u, lo: d.lo, hi: d.hi })
        }
    }

    /// Invariant jets at `u`, rejecting points outside the domain and
    /// torsal rulings.
    pub fn local(&self, u: f64, order: usize) -> Result<LocalInvariants> {
        self.check_domain(u)?;
        let local = self.triple.local(u, order)?;
        if local.abs_d() < self.delta_floor || local.eps() != self.eps {
            return Err(Error::TorsalRuling { u, delta: local.d() });
        }
        Ok(local)
    }

    /// Frame and striction point at `u`.
    pub fn frame_at(&self, u: f64) -> Result<FramePoint> {
        self.local(u, 0)?;
        Ok(self.interpolate(u))
    }

    fn interpolate(&self, u: f64) -> FramePoint {
        let lo = self.domain().lo;
        let last = self.nodes.len() - 1;
        let pos = ((u - lo) / self.step).clamp(0.0, last as f64);
        let k = (pos.floor() as usize).min(last - 1);
        let t = pos - k as f64;
        let (a, b) = (&self.nodes[k], &self.nodes[k + 1]);
        let h = self.step;

        let t2 = t * t;
        let t3 = t2 * t;
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        let mix = |ya: Vec3, ma: Vec3, yb: Vec3, mb: Vec3| {
            ya * h00 + ma * (h10 * h) + yb * h01 + mb * (h11 * h)
        };
        let state = State {
            e: mix(a.state.e, a.rate.e, b.state.e, b.rate.e),
            n: mix(a.state.n, a.rate.n, b.state.n, b.rate.n),
            z: mix(a.state.z, a.rate.z, b.state.z, b.rate.z),
            s: mix(a.state.s, a.rate.s, b.state.s, b.rate.s),
        }
        .orthonormalize();
        FramePoint {
            u,
            e: state.e,
            n: state.n,
            z: state.z,
            s: state.s,
        }
    }

    /// Frame, invariants and the exact u-derivatives of `e` and `s` at `u`.
    pub fn frame_jets(&self, u: f64, order: usize) -> Result<FrameJets> {
        let local = self.local(u, order.max(1).min(3))?;
        let frame = self.interpolate(u);
        let one = Jet::constant(1.0, 3);
        let zero = Jet::constant(0.0, 3);

        let mut e = [Vec3::zeros(); 4];
        let mut s = [Vec3::zeros(); 4];
        e[0] = frame.e;
        s[0] = frame.s;

        let mut ec = FrameComponents([one, zero, zero]);
        let mut sc = FrameComponents([local.delta * local.lambda, zero, local.delta]);
        for k in 1..=order {
            ec = ec.derivative(local.kappa);
            e[k] = ec.ambient(&frame);
            s[k] = sc.ambient(&frame);
            if k < order {
                sc = sc.derivative(local.kappa);
            }
        }
        Ok(FrameJets {
            frame,
            local,
            e,
            s,
            order,
        })
    }

    /// Partial derivatives of `x(u, v) = s(u) + v e(u)` up to total order
    /// `order` (at most 3).
    pub fn embedding_jets(&self, u: f64, v: f64, order: usize) -> Result<EmbeddingJets> {
        if order > 3 {
            return Err(Error::InvalidArgument(format!(
                "embedding derivatives are available up to order 3, got {order}"
            )));
        }
        if !v.is_finite() {
            return Err(Error::InvalidArgument(format!("v = {v} is not finite")));
        }
        let fj = self.frame_jets(u, order)?;
        let mut d = [[Vec3::zeros(); 4]; 4];
        for i in 0..=order {
            d[i][0] = fj.s[i] + fj.e[i] * v;
            if i < order {
                d[i][1] = fj.e[i];
            }
        }
        Ok(EmbeddingJets {
            u,
            v,
            order,
            d,
            frame: fj.frame,
            local: fj.local,
        })
    }

    /// Surface point `x(u, v)`.
    pub fn point(&self, u: f64, v: f64) -> Result<Vec3> {
        let f = self.frame_at(u)?;
        Ok(f.s + f.e * v)
    }
}

/// A vector given by jet components in the moving frame.
#[derive(Debug, Clone, Copy)]
struct FrameComponents([Jet; 3]);

impl FrameComponents {
    /// `(a e + b n + c z)' = (a' - b) e + (a + b' - kappa c) n + (c' + kappa b) z`
    fn derivative(&self, kappa: Jet) -> FrameComponents {
        let [a, b, c] = self.0;
        FrameComponents([
            a.differentiate() - b,
            a + b.differentiate() - kappa * c,
            c.differentiate() + kappa * b,
        ])
    }

    fn ambient(&self, frame: &FramePoint) -> Vec3 {
        frame.to_ambient([self.0[0].value(), self.0[1].value(), self.0[2].value()])
    }
}

/// Exact u-derivatives of the ruling direction and the striction line.
#[derive(Debug, Clone, Copy)]
pub struct FrameJets {
    pub frame: FramePoint,
    pub local: LocalInvariants,
    /// `e, e', e'', e'''` (valid up to `order`).
    pub e: [Vec3; 4],
    /// `s, s', s'', s'''` (valid up to `order`).
    pub s: [Vec3; 4],
    pub order: usize,
}

/// Partial derivatives of the embedding at one point.
#[derive(Debug, Clone, Copy)]
pub struct EmbeddingJets {
    pub u: f64,
    pub v: f64,
    pub order: usize,
    d: [[Vec3; 4]; 4],
    pub frame: FramePoint,
    pub local: LocalInvariants,
}

impl EmbeddingJets {
    /// `d^(i+j) x / du^i dv^j`; panics if `i + j` exceeds the computed order.
    pub fn d(&self, i: usize, j: usize) -> Vec3 {
        assert!(i + j <= self.order, "derivative ({i},{j}) beyond order {}", self.order);
        self.d[i][j]
    }

    pub fn point(&self) -> Vec3 {
        self.d[0][0]
    }

    /// Partial derivative along the multi-index given as coordinate slots
    /// (0 = u, 1 = v), e.g. `[0, 1, 1]` for x_uvv.
    pub fn along(&self, slots: &[usize]) -> Vec3 {
        let j = slots.iter().filter(|&&s| s == 1).count();
        self.d(slots.len() - j, j)
    }

    /// Unit normal `(x_u x x_v) / |x_u x x_v|`.
    pub fn unit_normal(&self) -> Vec3 {
        self.d(1, 0).cross(&self.d(0, 1)).normalize()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surface(k: &str, d: &str, l: &str, lo: f64, hi: f64) -> RuledSurface {
        RuledSurface::new(InvariantTriple::parse(k, d, l, lo, hi).unwrap()).unwrap()
    }

    fn assert_vec(a: Vec3, b: Vec3, tol: f64) {
        assert!((a - b).norm() <= tol, "{a:?} vs {b:?}");
    }

    #[test]
    fn flat_spherical_image_is_a_great_circle() {
        let s = surface("0", "1 + 0.2*u", "0.5", 0.0, 6.0);
        for u in [0.0, 0.37, 1.0, 2.5, 5.999, 6.0] {
            let f = s.frame_at(u).unwrap();
            assert_vec(f.e, Vec3::new(u.cos(), u.sin(), 0.0), 1e-8);
            assert_vec(f.n, Vec3::new(-u.sin(), u.cos(), 0.0), 1e-8);
            assert_vec(f.z, Vec3::z(), 1e-8);
        }
    }

    #[test]
    fn initial_frame_is_standard_basis() {
        let s = surface("1 + u", "2", "u", -1.0, 1.0);
        let f = s.frame_at(-1.0).unwrap();
        assert_eq!(f.e, Vec3::x());
        assert_eq!(f.n, Vec3::y());
        assert_eq!(f.z, Vec3::z());
        assert_eq!(f.s, Vec3::zeros());
    }

    #[test]
    fn long_integration_stays_orthonormal() {
        let s = surface("1", "1", "0", 0.0, 10.0);
        assert!(s.frame_at(10.0).unwrap().orthonormality_defect() <= 1e-9);
        assert!(s.frame_at(7.3).unwrap().orthonormality_defect() <= 1e-9);
    }

    #[test]
    fn helicoid_embedding() {
        let s = surface("0", "1", "0", 0.0, 6.0);
        for (u, v) in [(0.0, 1.0), (0.8, -1.5), (3.1, 2.0)] {
            let j = s.embedding_jets(u, v, 3).unwrap();
            assert_vec(j.point(), Vec3::new(v * u.cos(), v * u.sin(), u), 1e-8);
            assert_vec(j.d(0, 1), j.frame.e, 0.0);
            assert_vec(j.d(1, 0), Vec3::new(-v * u.sin(), v * u.cos(), 1.0), 1e-8);
            assert_vec(j.d(2, 0), Vec3::new(-v * u.cos(), -v * u.sin(), 0.0), 1e-8);
            assert_vec(j.d(1, 1), Vec3::new(-u.sin(), u.cos(), 0.0), 1e-8);
            assert_vec(j.d(3, 0), Vec3::new(v * u.sin(), -v * u.cos(), 0.0), 1e-8);
            assert_vec(j.d(0, 2), Vec3::zeros(), 0.0);
        }
        let j = s.embedding_jets(0.0, 1.0, 1).unwrap();
        assert_vec(j.d(1, 0), Vec3::new(0.0, 1.0, 1.0), 1e-12);
    }

    #[test]
    fn striction_and_arc_length_conditions() {
        let s = surface("1 + 0.3*sin(u)", "2 + sin(u)", "0.5*cos(u)", 0.0, 6.0);
        for u in [0.0, 0.71, 2.2, 4.9, 6.0] {
            let fj = s.frame_jets(u, 3).unwrap();
            assert!(fj.s[1].dot(&fj.e[1]).abs() <= 1e-8);
            assert!((fj.e[0].norm() - 1.0).abs() <= 1e-8);
            assert!((fj.e[1].norm() - 1.0).abs() <= 1e-8);
            // conical curvature from the definition (e, e', e'')
            let k = fj.e[0].dot(&fj.e[1].cross(&fj.e[2]));
            assert!((k - fj.local.k()).abs() <= 1e-10);
        }
    }

    #[test]
    fn exact_derivatives_match_interpolated_frame() {
        let s = surface("1 + 0.3*sin(u)", "2 + sin(u)", "0.5*cos(u)", 0.0, 6.0);
        let (u, h) = (1.3, 1e-4);
        let a = s.frame_at(u - h).unwrap();
        let b = s.frame_at(u + h).unwrap();
        let fj = s.frame_jets(u, 1).unwrap();
        assert_vec((b.e - a.e) / (2.0 * h), fj.e[1], 1e-7);
        assert_vec((b.s - a.s) / (2.0 * h), fj.s[1], 1e-7);
    }

    #[test]
    fn rejects_bad_parameters() {
        let s = surface("0", "1", "0", 0.0, 1.0);
        assert!(matches!(s.frame_at(1.5), Err(Error::OutOfDomain { .. })));
        let t = InvariantTriple::parse("0", "sin(u)", "0", 0.5, 4.0).unwrap();
        assert!(matches!(RuledSurface::new(t), Err(Error::TorsalRuling { .. })));
        let t = InvariantTriple::parse("0", "u - 1", "0", 0.0, 2.0).unwrap();
        assert!(matches!(RuledSurface::new(t), Err(Error::TorsalRuling { .. })));
    }
}
