//! Truncated univariate power series over the rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{int, Rational};
use crate::error::{Error, Result};

/// `c_0 + c_1 x + ... + c_order x^order`, everything above `order` unknown.
///
/// Binary operations truncate to the smaller of the two orders, so the
/// coefficient at exponent `e` of a result never depends on input
/// coefficients above `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Builds a series of the given order, zero-padding or truncating `coeffs`.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::new(vec![Rational::zero(), Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, e: usize) -> Rational {
        self.coeffs.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order.min(self.order()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|e| &self.coeffs[e] + &other.coeffs[e]).collect();
        Self::new(coeffs, order)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect(), self.order())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|e| {
                (0..=e)
                    .map(|i| &self.coeffs[i] * &other.coeffs[e - i])
                    .fold(Rational::zero(), |acc, t| acc + t)
            })
            .collect();
        Self::new(coeffs, order)
    }

    /// Substitutes `x -> c*x`.
    pub fn rescale_variable(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power *= c;
        }
        Self::new(coeffs, self.order())
    }

    /// Formal exponential. The constant term must vanish.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpNonZeroConstant);
        }
        // e' = s' e  =>  n e_n = sum_{k=1}^{n} k s_k e_{n-k}
        let order = self.order();
        let mut out = vec![Rational::one()];
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &out[n - k] * int(k as i64);
            }
            out.push(acc / int(n as i64));
        }
        Ok(Self::new(out, order))
    }

    /// Formal logarithm. The constant term must be 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogConstantNotOne);
        }
        // s l' = s'  =>  n l_n = n s_n - sum_{k=1}^{n-1} k l_k s_{n-k}
        let order = self.order();
        let mut out = vec![Rational::zero()];
        for n in 1..=order {
            let mut acc = &self.coeffs[n] * int(n as i64);
            for (k, l) in out.iter().enumerate().skip(1) {
                acc -= l * &self.coeffs[n - k] * int(k as i64);
            }
            out.push(acc / int(n as i64));
        }
        Ok(Self::new(out, order))
    }

    /// `self / den`.
    ///
    /// When the denominator vanishes to order `v` at zero, the numerator must
    /// vanish to at least the same order; a common factor `x^v` is cancelled
    /// and the result loses `v` orders of precision.
    pub fn div(&self, den: &Self) -> Result<Self> {
        let v = den
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::NotInvertible)?;
        if self.coeffs.iter().take(v).any(|c| !c.is_zero()) {
            return Err(Error::NotInvertible);
        }
        let order = self.order().min(den.order());
        if v > order {
            return Err(Error::NotInvertible);
        }
        let order = order - v;
        let num = &self.coeffs[v..];
        let den = &den.coeffs[v..];
        let lead = &den[0];
        let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = num[n].clone();
            for k in 1..=n {
                acc -= &den[k] * &out[n - k];
            }
            out.push(acc / lead);
        }
        Ok(Self::new(out, order))
    }
}

/// `td(x) = x / (1 - e^{-x})` through `x^order`.
pub fn todd_generating_series(order: usize) -> PowerSeries {
    let x = PowerSeries::x(order + 1);
    let exp_neg = x.scale(&int(-1)).exp().expect("zero constant term");
    let den = PowerSeries::one(order + 1).sub(&exp_neg);
    x.div(&den).expect("x divides 1 - e^{-x}")
}

/// Coefficients `s_m` of `log td(x) = sum_m s_m x^m` through `x^order`.
pub fn log_todd_coefficients(order: usize) -> Vec<Rational> {
    todd_generating_series(order)
        .log()
        .expect("td(0) = 1")
        .coeffs
}

/// `e^x` through `x^order` with coefficients `1/k!`.
pub fn exp_coefficients(order: usize) -> Vec<Rational> {
    (0..=order)
        .map(|k| Rational::new(BigInt::one(), super::factorial(k)))
        .collect()
}
