//! Scalar expressions in the single variable `u`.
//!
//! Grammar, whitespace-insensitive:
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := "-" factor | power
//! power  := atom ("^" factor)?
//! atom   := NUMBER | "u" | FUNC "(" expr ")" | "(" expr ")"
//! FUNC   := sin | cos | tan | exp | ln | sqrt | abs
//! ```
//!
//! Expressions are evaluated as [`Jet`]s, which yields exact derivatives up
//! to third order.

mod jet;
mod parse;

use std::fmt;

pub use jet::{Jet, MAX_ORDER};
pub use parse::parse;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Ln,
    Sqrt,
    Abs,
}

impl Func {
    pub const ALL: [Func; 7] = [
        Func::Sin,
        Func::Cos,
        Func::Tan,
        Func::Exp,
        Func::Ln,
        Func::Sqrt,
        Func::Abs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sqrt => "sqrt",
            Func::Abs => "abs",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
            BinOp::Pow => '^',
        }
    }
}

/// Abstract syntax tree of a parsed expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Var,
    Neg(Box<Expr>),
    Call(Func, Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
}

/// Tolerance below which `abs` is treated as sitting on its kink.
const ABS_KINK: f64 = 1e-12;

impl Expr {
    pub fn num(x: f64) -> Expr {
        Expr::Num(x)
    }

    pub fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
        Expr::Binary(op, Box::new(lhs), Box::new(rhs))
    }

    pub fn call(f: Func, arg: Expr) -> Expr {
        Expr::Call(f, Box::new(arg))
    }

    pub fn neg(inner: Expr) -> Expr {
        Expr::Neg(Box::new(inner))
    }

    /// Value at `u`.
    pub fn eval(&self, u: f64) -> Result<f64> {
        Ok(self.eval_jet(u, 0)?.value())
    }

    /// Value and the first `order` derivatives at `u`.
    pub fn eval_jet(&self, u: f64, order: usize) -> Result<Jet> {
        if order > MAX_ORDER {
            return Err(Error::InvalidArgument(format!(
                "derivative order {order} exceeds {MAX_ORDER}"
            )));
        }
        if !u.is_finite() {
            return Err(Error::Domain {
                expr: self.to_string(),
                u,
            });
        }
        self.jet(u, order)
    }

    fn jet(&self, u: f64, order: usize) -> Result<Jet> {
        let domain = || Error::Domain {
            expr: self.to_string(),
            u,
        };
        let out = match self {
            Expr::Num(x) => Jet::constant(*x, order),
            Expr::Var => Jet::variable(u, order),
            Expr::Neg(inner) => -inner.jet(u, order)?,
            Expr::Call(f, arg) => {
                let a = arg.jet(u, order)?;
                let x = a.value();
                match f {
                    Func::Sin => a.sin(),
                    Func::Cos => a.cos(),
                    Func::Tan => {
                        if x.cos() == 0.0 {
                            return Err(domain());
                        }
                        a.tan()
                    }
                    Func::Exp => a.exp(),
                    Func::Ln => {
                        if x <= 0.0 {
                            return Err(domain());
                        }
                        a.ln()
                    }
                    Func::Sqrt => {
                        if x < 0.0 || (x == 0.0 && order > 0) {
                            return Err(domain());
                        }
                        a.sqrt()
                    }
                    Func::Abs => {
                        if order > 0 && x.abs() < ABS_KINK {
                            return Err(Error::NonDifferentiable {
                                expr: self.to_string(),
                                u,
                            });
                        }
                        a.abs()
                    }
                }
            }
            Expr::Binary(op, lhs, rhs) => {
                let a = lhs.jet(u, order)?;
                let b = rhs.jet(u, order)?;
                match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div => {
                        if b.value() == 0.0 {
                            return Err(domain());
                        }
                        a / b
                    }
                    BinOp::Pow => power(a, b).ok_or_else(domain)?,
                }
            }
        };
        if out.is_finite() {
            Ok(out)
        } else {
            Err(domain())
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Binary(BinOp::Add | BinOp::Sub, ..) => 1,
            Expr::Binary(BinOp::Mul | BinOp::Div, ..) => 2,
            Expr::Neg(_) => 3,
            Expr::Binary(BinOp::Pow, ..) => 4,
            Expr::Num(_) | Expr::Var | Expr::Call(..) => 5,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            f.write_str("(")?;
            self.write_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Expr::Num(x) => write!(f, "{x}"),
            Expr::Var => f.write_str("u"),
            Expr::Neg(inner) => {
                f.write_str("-")?;
                inner.write_at(f, 3)
            }
            Expr::Call(func, arg) => {
                write!(f, "{}(", func.name())?;
                arg.write_at(f, 0)?;
                f.write_str(")")
            }
            Expr::Binary(op, lhs, rhs) => {
                let (l, r) = match op {
                    BinOp::Add | BinOp::Sub => (1, 2),
                    BinOp::Mul | BinOp::Div => (2, 3),
                    BinOp::Pow => (5, 3),
                };
                lhs.write_at(f, l)?;
                if *op == BinOp::Pow {
                    f.write_str("^")?;
                } else {
                    write!(f, " {} ", op.symbol())?;
                }
                rhs.write_at(f, r)
            }
        }
    }
}

/// `a^b`: repeated multiplication for constant integer exponents, otherwise
/// `exp(b ln a)` which needs a positive base.
fn power(a: Jet, b: Jet) -> Option<Jet> {
    let p = b.value();
    if b.is_constant() && p.fract() == 0.0 && p.abs() <= i64::MAX as f64 {
        if p < 0.0 && a.value() == 0.0 {
            return None;
        }
        return Some(a.powi(p as i64));
    }
    if a.value() <= 0.0 {
        return None;
    }
    if b.is_constant() {
        Some(a.powf(p))
    } else {
        Some((b * a.ln()).exp())
    }
}

/// Canonical form: minimal parentheses, literals in shortest round-trip
/// notation. Parsing the output reproduces the tree exactly.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

impl std::str::FromStr for Expr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}
