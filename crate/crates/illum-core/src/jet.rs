//! Truncated Taylor-series (jet) arithmetic.
//!
//! A [`Jet`] stores the scaled derivatives `coeffs[k] = f^(k)(center) / k!`
//! of a function at a center, up to a fixed order. Arithmetic on jets
//! propagates derivatives exactly (up to round-off): products use the
//! Cauchy convolution, quotients use series division, and the elementary
//! functions use the standard recurrences driven by `v' = g(u) u'`.

use crate::error::DomainError;
use crate::scalar::Scalar;

/// Taylor coefficients of a function at a center: `coeffs[k] = f^(k)(c)/k!`.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet<S> {
    center: S,
    coeffs: Vec<S>,
}

impl<S: Scalar> Jet<S> {
    /// Jet of the constant function `v`.
    pub fn constant(value: S, center: S, order: usize) -> Jet<S> {
        let mut coeffs = vec![S::zero(); order + 1];
        coeffs[0] = value;
        Jet { center, coeffs }
    }

    /// Jet of the identity `x` at `center`.
    pub fn variable(center: S, order: usize) -> Jet<S> {
        let mut coeffs = vec![S::zero(); order + 1];
        coeffs[0] = center;
        if order >= 1 {
            coeffs[1] = S::one();
        }
        Jet { center, coeffs }
    }

    /// Build a jet from raw Taylor coefficients.
    pub fn from_coeffs(center: S, coeffs: Vec<S>) -> Jet<S> {
        assert!(!coeffs.is_empty(), "a jet has at least the value coefficient");
        Jet { center, coeffs }
    }

    pub fn center(&self) -> S {
        self.center
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// The function value `f(center)`.
    pub fn value(&self) -> S {
        self.coeffs[0]
    }

    /// The unscaled derivative `f^(k)(center) = k! * coeffs[k]`.
    pub fn derivative(&self, k: usize) -> S {
        let mut factorial = S::one();
        for i in 2..=k {
            factorial = factorial * S::from_f64(i as f64);
        }
        factorial * self.coeffs[k]
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    fn same_shape(&self, other: &Jet<S>) {
        debug_assert_eq!(self.coeffs.len(), other.coeffs.len(), "jet order mismatch");
        debug_assert!(
            self.center == other.center || self.center.is_nan() && other.center.is_nan(),
            "jet center mismatch"
        );
    }

    fn domain_error(&self, op: &'static str, argument: S) -> DomainError {
        DomainError {
            op,
            argument: argument.as_f64(),
            center: self.center.as_f64(),
        }
    }

    pub fn neg(&self) -> Jet<S> {
        Jet {
            center: self.center,
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Jet<S>) -> Jet<S> {
        self.same_shape(other);
        Jet {
            center: self.center,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Jet<S>) -> Jet<S> {
        self.same_shape(other);
        Jet {
            center: self.center,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, factor: S) -> Jet<S> {
        Jet {
            center: self.center,
            coeffs: self.coeffs.iter().map(|&c| c * factor).collect(),
        }
    }

    /// Cauchy product.
    pub fn mul(&self, other: &Jet<S>) -> Jet<S> {
        self.same_shape(other);
        let n = self.coeffs.len();
        let mut coeffs = vec![S::zero(); n];
        for k in 0..n {
            let mut acc = S::zero();
            for j in 0..=k {
                acc = acc + self.coeffs[j] * other.coeffs[k - j];
            }
            coeffs[k] = acc;
        }
        Jet { center: self.center, coeffs }
    }

    /// Series division; the divisor value must be nonzero.
    pub fn div(&self, other: &Jet<S>) -> Result<Jet<S>, DomainError> {
        self.same_shape(other);
        if other.coeffs[0] == S::zero() {
            return Err(self.domain_error("div", other.coeffs[0]));
        }
        let n = self.coeffs.len();
        let mut coeffs = vec![S::zero(); n];
        for k in 0..n {
            let mut acc = self.coeffs[k];
            for j in 0..k {
                acc = acc - coeffs[j] * other.coeffs[k - j];
            }
            coeffs[k] = acc / other.coeffs[0];
        }
        Ok(Jet { center: self.center, coeffs })
    }

    pub fn exp(&self) -> Jet<S> {
        let n = self.coeffs.len();
        let mut coeffs = vec![S::zero(); n];
        coeffs[0] = self.coeffs[0].exp();
        for k in 1..n {
            let mut acc = S::zero();
            for j in 1..=k {
                acc = acc + S::from_f64(j as f64) * self.coeffs[j] * coeffs[k - j];
            }
            coeffs[k] = acc / S::from_f64(k as f64);
        }
        Jet { center: self.center, coeffs }
    }

    /// Natural logarithm; the value must be strictly positive.
    pub fn ln(&self) -> Result<Jet<S>, DomainError> {
        let u0 = self.coeffs[0];
        if !(u0 > S::zero()) {
            return Err(self.domain_error("ln", u0));
        }
        let n = self.coeffs.len();
        let mut coeffs = vec![S::zero(); n];
        coeffs[0] = u0.ln();
        for k in 1..n {
            let mut acc = S::zero();
            for j in 1..k {
                acc = acc + S::from_f64(j as f64) * coeffs[j] * self.coeffs[k - j];
            }
            coeffs[k] = (self.coeffs[k] - acc / S::from_f64(k as f64)) / u0;
        }
        Ok(Jet { center: self.center, coeffs })
    }

    /// Square root; the value must be strictly positive (the jet is not
    /// smooth at zero).
    pub fn sqrt(&self) -> Result<Jet<S>, DomainError> {
        let u0 = self.coeffs[0];
        if !(u0 > S::zero()) {
            return Err(self.domain_error("sqrt", u0));
        }
        let n = self.coeffs.len();
        let mut coeffs = vec![S::zero(); n];
        coeffs[0] = u0.sqrt();
        let two_v0 = coeffs[0] + coeffs[0];
        for k in 1..n {
            let mut acc = self.coeffs[k];
            for j in 1..k {
                acc = acc - coeffs[j] * coeffs[k - j];
            }
            coeffs[k] = acc / two_v0;
        }
        Ok(Jet { center: self.center, coeffs })
    }

    /// Sine and cosine share a coupled recurrence; computing them together
    /// costs one pass.
    pub fn sin_cos(&self) -> (Jet<S>, Jet<S>) {
        let n = self.coeffs.len();
        let mut sin = vec![S::zero(); n];
        let mut cos = vec![S::zero(); n];
        let (s0, c0) = self.coeffs[0].sin_cos();
        sin[0] = s0;
        cos[0] = c0;
        for k in 1..n {
            let mut acc_s = S::zero();
            let mut acc_c = S::zero();
            for j in 1..=k {
                let ju = S::from_f64(j as f64) * self.coeffs[j];
                acc_s = acc_s + ju * cos[k - j];
                acc_c = acc_c + ju * sin[k - j];
            }
            let kf = S::from_f64(k as f64);
            sin[k] = acc_s / kf;
            cos[k] = -(acc_c / kf);
        }
        (
            Jet { center: self.center, coeffs: sin },
            Jet { center: self.center, coeffs: cos },
        )
    }

    pub fn sin(&self) -> Jet<S> {
        self.sin_cos().0
    }

    pub fn cos(&self) -> Jet<S> {
        self.sin_cos().1
    }

    /// Error function, propagated through `erf'(u) = 2/sqrt(pi) * exp(-u^2)`.
    pub fn erf(&self) -> Jet<S> {
        let n = self.coeffs.len();
        // g = erf'(u) as a jet; one order less would suffice but reusing
        // the full order keeps the shapes uniform.
        let g = self.mul(self).neg().exp().scale(S::FRAC_2_SQRT_PI());
        let mut coeffs = vec![S::zero(); n];
        coeffs[0] = self.coeffs[0].erf();
        for k in 1..n {
            let mut acc = S::zero();
            for j in 1..=k {
                acc = acc + S::from_f64(j as f64) * self.coeffs[j] * g.coeffs[k - j];
            }
            coeffs[k] = acc / S::from_f64(k as f64);
        }
        Jet { center: self.center, coeffs }
    }

    /// Integer power by binary powering (repeated jet multiplication),
    /// exact for polynomial expressions. Negative exponents require a
    /// nonzero value.
    pub fn powi(&self, exponent: i64) -> Result<Jet<S>, DomainError> {
        if exponent == 0 {
            return Ok(Jet::constant(S::one(), self.center, self.order()));
        }
        let mut result: Option<Jet<S>> = None;
        let mut base = self.clone();
        let mut e = exponent.unsigned_abs();
        loop {
            if e & 1 == 1 {
                result = Some(match result {
                    Some(r) => r.mul(&base),
                    None => base.clone(),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        let powered = result.expect("nonzero exponent");
        if exponent < 0 {
            if powered.coeffs[0] == S::zero() {
                return Err(self.domain_error("pow", self.coeffs[0]));
            }
            Jet::constant(S::one(), self.center, self.order()).div(&powered)
        } else {
            Ok(powered)
        }
    }

    /// Real power via `exp(p ln u)`; requires a strictly positive value.
    pub fn powf(&self, exponent: S) -> Result<Jet<S>, DomainError> {
        if !(self.coeffs[0] > S::zero()) {
            return Err(self.domain_error("pow", self.coeffs[0]));
        }
        Ok(self.ln()?.scale(exponent).exp())
    }
}
