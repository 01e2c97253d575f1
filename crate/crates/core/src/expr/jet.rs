//! Truncated Taylor arithmetic in one variable.
//!
//! A [`Jet`] carries a value together with its first `order` derivatives
//! (not Taylor coefficients: `d[2]` is f'' itself, not f''/2). Arithmetic
//! propagates derivatives exactly through the Leibniz and Faà di Bruno
//! rules, so every quantity built from jets is differentiated to machine
//! precision.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// Highest derivative order a jet can carry.
pub const MAX_ORDER: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    order: usize,
    d: [f64; MAX_ORDER + 1],
}

const BINOMIAL: [[f64; 4]; 4] = [
    [1.0, 0.0, 0.0, 0.0],
    [1.0, 1.0, 0.0, 0.0],
    [1.0, 2.0, 1.0, 0.0],
    [1.0, 3.0, 3.0, 1.0],
];

impl Jet {
    /// Jet from explicit derivatives; entries past `order` are dropped.
    pub fn new(order: usize, derivs: &[f64]) -> Self {
        assert!(order <= MAX_ORDER, "jet order {order} exceeds {MAX_ORDER}");
        let mut d = [0.0; MAX_ORDER + 1];
        for (slot, &x) in d.iter_mut().zip(derivs).take(order + 1) {
            *slot = x;
        }
        Jet { order, d }
    }

    pub fn constant(value: f64, order: usize) -> Self {
        Jet::new(order, &[value])
    }

    /// The independent variable itself evaluated at `u`.
    pub fn variable(u: f64, order: usize) -> Self {
        Jet::new(order, &[u, 1.0])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn value(&self) -> f64 {
        self.d[0]
    }

    /// The k-th derivative, zero beyond the carried order.
    pub fn deriv(&self, k: usize) -> f64 {
        if k <= self.order {
            self.d[k]
        } else {
            0.0
        }
    }

    /// Derivatives `f, f', ..., f^(order)`.
    pub fn coeffs(&self) -> &[f64] {
        &self.d[..=self.order]
    }

    /// The derivative of this jet as a jet of one lower order.
    ///
    /// Panics on an order-0 jet.
    pub fn differentiate(&self) -> Jet {
        assert!(self.order > 0, "cannot differentiate an order-0 jet");
        Jet::new(self.order - 1, &self.d[1..])
    }

    /// Drops derivatives above `order`.
    pub fn truncate(&self, order: usize) -> Jet {
        Jet::new(order.min(self.order), &self.d)
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs().iter().all(|x| x.is_finite())
    }

    /// Whether all derivatives of order >= 1 vanish exactly.
    pub fn is_constant(&self) -> bool {
        self.d[1..=self.order].iter().all(|&x| x == 0.0)
    }

    pub fn scale(&self, s: f64) -> Jet {
        let mut out = *self;
        for x in out.d.iter_mut() {
            *x *= s;
        }
        out
    }

    /// Composes a scalar function with this jet, given the function's
    /// derivatives `[h, h', h'', h''']` at `self.value()`.
    pub fn compose(&self, h: [f64; 4]) -> Jet {
        let f1 = self.d[1];
        let f2 = self.d[2];
        let f3 = self.d[3];
        let all = [
            h[0],
            h[1] * f1,
            h[2] * f1 * f1 + h[1] * f2,
            h[3] * f1 * f1 * f1 + 3.0 * h[2] * f1 * f2 + h[1] * f3,
        ];
        Jet::new(self.order, &all)
    }

    pub fn recip(&self) -> Jet {
        let x = self.d[0];
        self.compose([1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x), -6.0 / (x * x * x * x)])
    }

    pub fn sin(&self) -> Jet {
        let (s, c) = self.d[0].sin_cos();
        self.compose([s, c, -s, -c])
    }

    pub fn cos(&self) -> Jet {
        let (s, c) = self.d[0].sin_cos();
        self.compose([c, -s, -c, s])
    }

    pub fn tan(&self) -> Jet {
        let t = self.d[0].tan();
        let sec2 = 1.0 + t * t;
        self.compose([t, sec2, 2.0 * t * sec2, sec2 * (2.0 + 6.0 * t * t)])
    }

    pub fn exp(&self) -> Jet {
        let e = self.d[0].exp();
        self.compose([e; 4])
    }

    /// Natural logarithm; the caller guarantees a positive value.
    pub fn ln(&self) -> Jet {
        let x = self.d[0];
        self.compose([x.ln(), 1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x)])
    }

    /// Square root; the caller guarantees a positive value.
    pub fn sqrt(&self) -> Jet {
        let x = self.d[0];
        let r = x.sqrt();
        self.compose([r, 0.5 / r, -0.25 / (r * x), 0.375 / (r * x * x)])
    }

    /// `|x|` away from zero.
    pub fn abs(&self) -> Jet {
        let x = self.d[0];
        self.compose([x.abs(), x.signum(), 0.0, 0.0])
    }

    /// Real power `x^p` for positive `x`.
    pub fn powf(&self, p: f64) -> Jet {
        let x = self.d[0];
        let v = x.powf(p);
        self.compose([
            v,
            p * v / x,
            p * (p - 1.0) * v / (x * x),
            p * (p - 1.0) * (p - 2.0) * v / (x * x * x),
        ])
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, n: i64) -> Jet {
        let mut base = if n < 0 { self.recip() } else { *self };
        let mut e = n.unsigned_abs();
        let mut acc = Jet::constant(1.0, self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    fn lift(a: Jet, b: Jet) -> usize {
        a.order.min(b.order)
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        let order = Jet::lift(self, rhs);
        let mut d = [0.0; 4];
        for k in 0..=order {
            d[k] = self.d[k] + rhs.d[k];
        }
        Jet { order, d }
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        self + (-rhs)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        let order = Jet::lift(self, rhs);
        let mut d = [0.0; 4];
        for n in 0..=order {
            d[n] = (0..=n)
                .map(|k| BINOMIAL[n][k] * self.d[k] * rhs.d[n - k])
                .sum();
        }
        Jet { order, d }
    }
}

impl Div for Jet {
    type Output = Jet;
    fn div(self, rhs: Jet) -> Jet {
        let order = Jet::lift(self, rhs);
        let mut q = [0.0; 4];
        for n in 0..=order {
            let carried: f64 = (0..n).map(|k| BINOMIAL[n][k] * q[k] * rhs.d[n - k]).sum();
            q[n] = (self.d[n] - carried) / rhs.d[0];
        }
        Jet { order, d: q }
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    fn add(mut self, rhs: f64) -> Jet {
        self.d[0] += rhs;
        self
    }
}

impl Sub<f64> for Jet {
    type Output = Jet;
    fn sub(mut self, rhs: f64) -> Jet {
        self.d[0] -= rhs;
        self
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, rhs: f64) -> Jet {
        self.scale(rhs)
    }
}

impl Mul<Jet> for f64 {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        rhs.scale(self)
    }
}

impl Add<Jet> for f64 {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        rhs + self
    }
}

impl Sub<Jet> for f64 {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        -rhs + self
    }
}
