//! Evaluation of expressions in jet and plain scalar arithmetic.

use crate::error::DomainError;
use crate::expr::{BinaryOp, Expr, NamedConstant, UnaryOp};
use crate::jet::Jet;
use crate::scalar::Scalar;

// Exponents with |p| beyond 2^53 are not exactly integral in f64 anyway.
const MAX_INTEGER_EXPONENT: f64 = 9.007_199_254_740_992e15;

/// Evaluate `f` as a jet at `center`, yielding the Taylor coefficients
/// `f^(k)(center)/k!` for `k = 0..=order`.
pub fn eval_jet<S: Scalar>(f: &Expr, center: S, order: usize) -> Result<Jet<S>, DomainError> {
    match f {
        Expr::Constant(v) => Ok(Jet::constant(S::from_f64(*v), center, order)),
        Expr::NamedConstant(NamedConstant::Pi) => Ok(Jet::constant(S::PI(), center, order)),
        Expr::NamedConstant(NamedConstant::E) => Ok(Jet::constant(S::E(), center, order)),
        Expr::Variable => Ok(Jet::variable(center, order)),
        Expr::Unary(op, child) => {
            let u = eval_jet(child, center, order)?;
            match op {
                UnaryOp::Neg => Ok(u.neg()),
                UnaryOp::Sin => Ok(u.sin()),
                UnaryOp::Cos => Ok(u.cos()),
                UnaryOp::Exp => Ok(u.exp()),
                UnaryOp::Ln => u.ln(),
                UnaryOp::Sqrt => u.sqrt(),
                UnaryOp::Erf => Ok(u.erf()),
            }
        }
        Expr::Binary(op, lhs, rhs) => match op {
            BinaryOp::Add => Ok(eval_jet(lhs, center, order)?.add(&eval_jet(rhs, center, order)?)),
            BinaryOp::Sub => Ok(eval_jet(lhs, center, order)?.sub(&eval_jet(rhs, center, order)?)),
            BinaryOp::Mul => Ok(eval_jet(lhs, center, order)?.mul(&eval_jet(rhs, center, order)?)),
            BinaryOp::Div => eval_jet(lhs, center, order)?.div(&eval_jet(rhs, center, order)?),
            BinaryOp::Pow => {
                if rhs.contains_variable() {
                    return Err(DomainError {
                        op: "pow",
                        argument: f64::NAN,
                        center: center.as_f64(),
                    });
                }
                let base = eval_jet(lhs, center, order)?;
                let p = eval_scalar(rhs, center, center)?;
                let p64 = p.as_f64();
                if !p64.is_finite() {
                    return Err(DomainError {
                        op: "pow",
                        argument: p64,
                        center: center.as_f64(),
                    });
                }
                if p64.fract() == 0.0 && p64.abs() <= MAX_INTEGER_EXPONENT {
                    base.powi(p64 as i64)
                } else {
                    base.powf(p)
                }
            }
        },
    }
}

/// Evaluate `f(x)` as a plain scalar.
pub fn eval_value<S: Scalar>(f: &Expr, x: S) -> Result<S, DomainError> {
    eval_scalar(f, x, x)
}

/// The unscaled derivative `f^(k)(x)`.
pub fn derivative_at<S: Scalar>(f: &Expr, x: S, k: usize) -> Result<S, DomainError> {
    Ok(eval_jet(f, x, k)?.derivative(k))
}

fn eval_scalar<S: Scalar>(e: &Expr, x: S, err_center: S) -> Result<S, DomainError> {
    let err = |op: &'static str, argument: S| DomainError {
        op,
        argument: argument.as_f64(),
        center: err_center.as_f64(),
    };
    match e {
        Expr::Constant(v) => Ok(S::from_f64(*v)),
        Expr::NamedConstant(NamedConstant::Pi) => Ok(S::PI()),
        Expr::NamedConstant(NamedConstant::E) => Ok(S::E()),
        Expr::Variable => Ok(x),
        Expr::Unary(op, child) => {
            let u = eval_scalar(child, x, err_center)?;
            match op {
                UnaryOp::Neg => Ok(-u),
                UnaryOp::Sin => Ok(u.sin()),
                UnaryOp::Cos => Ok(u.cos()),
                UnaryOp::Exp => Ok(u.exp()),
                UnaryOp::Ln => {
                    if !(u > S::zero()) {
                        return Err(err("ln", u));
                    }
                    Ok(u.ln())
                }
                UnaryOp::Sqrt => {
                    if !(u > S::zero()) {
                        return Err(err("sqrt", u));
                    }
                    Ok(u.sqrt())
                }
                UnaryOp::Erf => Ok(u.erf()),
            }
        }
        Expr::Binary(op, lhs, rhs) => {
            let a = eval_scalar(lhs, x, err_center)?;
            let b = eval_scalar(rhs, x, err_center)?;
            match op {
                BinaryOp::Add => Ok(a + b),
                BinaryOp::Sub => Ok(a - b),
                BinaryOp::Mul => Ok(a * b),
                BinaryOp::Div => {
                    if b == S::zero() {
                        return Err(err("div", b));
                    }
                    Ok(a / b)
                }
                BinaryOp::Pow => {
                    let b64 = b.as_f64();
                    if b64.fract() == 0.0 && b64.abs() <= MAX_INTEGER_EXPONENT {
                        if a == S::zero() && b64 < 0.0 {
                            return Err(err("pow", a));
                        }
                        Ok(a.powi(b64 as i32))
                    } else {
                        if !(a > S::zero()) {
                            return Err(err("pow", a));
                        }
                        Ok(a.powf(b))
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jet_coeffs(text: &str, center: f64, order: usize) -> Vec<f64> {
        let f: Expr = text.parse().unwrap();
        eval_jet(&f, center, order).unwrap().coeffs().to_vec()
    }

    #[test]
    fn square_at_three() {
        assert_eq!(jet_coeffs("x^2", 3.0, 2), vec![9.0, 6.0, 1.0]);
    }

    #[test]
    fn exp_at_zero() {
        let c = jet_coeffs("exp(x)", 0.0, 3);
        assert!((c[0] - 1.0).abs() < 1e-15);
        assert!((c[1] - 1.0).abs() < 1e-15);
        assert!((c[2] - 0.5).abs() < 1e-15);
        assert!((c[3] - 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn sin_at_zero() {
        let c = jet_coeffs("sin(x)", 0.0, 3);
        assert!((c[0]).abs() < 1e-15);
        assert!((c[1] - 1.0).abs() < 1e-15);
        assert!((c[2]).abs() < 1e-15);
        assert!((c[3] + 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn named_constants() {
        let f: Expr = "sin(pi/2) + e".parse().unwrap();
        let v: f64 = eval_value(&f, 0.0).unwrap();
        assert!((v - (1.0 + std::f64::consts::E)).abs() < 1e-15);
    }

    #[test]
    fn fractional_power_positive_base() {
        let f: Expr = "x^0.5".parse().unwrap();
        let v: f64 = eval_value(&f, 9.0).unwrap();
        assert!((v - 3.0).abs() < 1e-12);
        assert!(eval_value::<f64>(&f, -1.0).is_err());
        assert!(eval_jet::<f64>(&f, -1.0, 2).is_err());
    }

    #[test]
    fn integer_power_negative_base_is_fine() {
        let f: Expr = "x^3".parse().unwrap();
        assert_eq!(eval_value::<f64>(&f, -2.0).unwrap(), -8.0);
        let j = eval_jet::<f64>(&f, -2.0, 2).unwrap();
        assert_eq!(j.coeffs(), &[-8.0, 12.0, -6.0]);
    }

    #[test]
    fn domain_error_reports_node_and_center() {
        let f: Expr = "ln(x)".parse().unwrap();
        let err = eval_jet::<f64>(&f, -2.0, 1).unwrap_err();
        assert_eq!(err.op, "ln");
        assert_eq!(err.argument, -2.0);
        assert_eq!(err.center, -2.0);
    }

    #[test]
    fn division_by_zero() {
        let f: Expr = "1/(x-1)".parse().unwrap();
        assert!(eval_value::<f64>(&f, 1.0).is_err());
        assert!(eval_value::<f64>(&f, 2.0).is_ok());
    }

    #[test]
    fn erf_fixture_function_vanishes_at_origin() {
        let f: Expr = "(sqrt(pi)/2)*x*erf(x)+exp(-x^2)/2-1/2".parse().unwrap();
        let v: f64 = eval_value(&f, 0.0).unwrap();
        assert!(v.abs() < 1e-15);
        // f''(x) = exp(-x^2)
        let d2 = derivative_at(&f, 0.8f64, 2).unwrap();
        assert!((d2 - (-0.64f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn derivative_at_matches_hand_values() {
        let f: Expr = "x^4".parse().unwrap();
        // f'''(x) = 24x
        assert!((derivative_at(&f, 2.0f64, 3).unwrap() - 48.0).abs() < 1e-10);
    }
}
