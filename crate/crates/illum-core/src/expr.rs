//! Abstract syntax tree for univariate real functions.
//!
//! An [`Expr`] is a tree over the single variable `x`, finite constants,
//! the named constants `pi` and `e`, the builtin functions
//! `sin cos exp ln sqrt erf`, and the arithmetic operators. Exponents of
//! `^` are constant subtrees (enforced by the parser).
//!
//! Expressions are immutable values; evaluation never mutates them, so a
//! shared `Expr` can be evaluated from many threads at once.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::parse;

/// Builtin named constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedConstant {
    Pi,
    E,
}

/// Unary operators and builtin functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryOp {
    Neg,
    Sin,
    Cos,
    Exp,
    Ln,
    Sqrt,
    Erf,
}

impl UnaryOp {
    /// The source-level name of a function operator (`Neg` has none).
    pub fn func_name(self) -> Option<&'static str> {
        match self {
            UnaryOp::Neg => None,
            UnaryOp::Sin => Some("sin"),
            UnaryOp::Cos => Some("cos"),
            UnaryOp::Exp => Some("exp"),
            UnaryOp::Ln => Some("ln"),
            UnaryOp::Sqrt => Some("sqrt"),
            UnaryOp::Erf => Some("erf"),
        }
    }
}

/// Binary arithmetic operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinaryOp {
    fn symbol(self) -> char {
        match self {
            BinaryOp::Add => '+',
            BinaryOp::Sub => '-',
            BinaryOp::Mul => '*',
            BinaryOp::Div => '/',
            BinaryOp::Pow => '^',
        }
    }
}

/// Parsed expression tree of a univariate real function of `x`.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    /// A finite numeric literal.
    Constant(f64),
    NamedConstant(NamedConstant),
    /// The variable `x`.
    Variable,
    Unary(UnaryOp, Box<Expr>),
    Binary(BinaryOp, Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Whether the variable `x` occurs anywhere in this subtree.
    pub fn contains_variable(&self) -> bool {
        match self {
            Expr::Constant(_) | Expr::NamedConstant(_) => false,
            Expr::Variable => true,
            Expr::Unary(_, child) => child.contains_variable(),
            Expr::Binary(_, lhs, rhs) => lhs.contains_variable() || rhs.contains_variable(),
        }
    }

    // Convenience constructors, mostly for tests and programmatic builders.

    pub fn constant(v: f64) -> Expr {
        Expr::Constant(v)
    }

    pub fn variable() -> Expr {
        Expr::Variable
    }

    pub fn unary(op: UnaryOp, child: Expr) -> Expr {
        Expr::Unary(op, Box::new(child))
    }

    pub fn binary(op: BinaryOp, lhs: Expr, rhs: Expr) -> Expr {
        Expr::Binary(op, Box::new(lhs), Box::new(rhs))
    }

    pub fn add(lhs: Expr, rhs: Expr) -> Expr {
        Expr::binary(BinaryOp::Add, lhs, rhs)
    }

    pub fn sub(lhs: Expr, rhs: Expr) -> Expr {
        Expr::binary(BinaryOp::Sub, lhs, rhs)
    }

    pub fn mul(lhs: Expr, rhs: Expr) -> Expr {
        Expr::binary(BinaryOp::Mul, lhs, rhs)
    }

    pub fn div(lhs: Expr, rhs: Expr) -> Expr {
        Expr::binary(BinaryOp::Div, lhs, rhs)
    }

    pub fn pow(base: Expr, exponent: Expr) -> Expr {
        Expr::binary(BinaryOp::Pow, base, exponent)
    }

    pub fn neg(child: Expr) -> Expr {
        Expr::unary(UnaryOp::Neg, child)
    }
}

impl FromStr for Expr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse(s)
    }
}

/// Fully parenthesized rendering. Reparsing the output reproduces the tree,
/// so `render` and [`parse::parse`] are stable under round trips.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            // {:?} keeps full precision and stays inside the NUMBER grammar
            // for non-negative finite values.
            Expr::Constant(v) => write!(f, "{:?}", v),
            Expr::NamedConstant(NamedConstant::Pi) => f.write_str("pi"),
            Expr::NamedConstant(NamedConstant::E) => f.write_str("e"),
            Expr::Variable => f.write_str("x"),
            Expr::Unary(UnaryOp::Neg, child) => write!(f, "(-{})", child),
            Expr::Unary(op, child) => {
                write!(f, "{}({})", op.func_name().expect("function operator"), child)
            }
            Expr::Binary(op, lhs, rhs) => write!(f, "({}{}{})", lhs, op.symbol(), rhs),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_round_trips_known_trees() {
        let e = Expr::add(
            Expr::unary(UnaryOp::Exp, Expr::Variable),
            Expr::pow(Expr::Variable, Expr::constant(4.0)),
        );
        let rendered = e.to_string();
        assert_eq!(rendered, "(exp(x)+(x^4.0))");
        assert_eq!(rendered.parse::<Expr>().unwrap(), e);
    }

    #[test]
    fn contains_variable() {
        let e: Expr = "sin(pi) + 2".parse().unwrap();
        assert!(!e.contains_variable());
        let e: Expr = "sin(pi) + x".parse().unwrap();
        assert!(e.contains_variable());
    }
}
