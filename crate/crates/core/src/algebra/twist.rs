//! Polynomials in the formal twist variable `N`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::format::{write_sum, Term};
use super::{int, Rational};

/// A polynomial `a_0 + a_1 N + ... + a_d N^d` with rational coefficients.
///
/// Stored without trailing zeros, so the zero polynomial is the empty
/// coefficient list and equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TwistPoly {
    coeffs: Vec<Rational>,
}

impl TwistPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TwistPoly { coeffs }
    }

    pub fn zero() -> Self {
        TwistPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(int(c))
    }

    /// The twist variable `N`.
    pub fn variable() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `slope * N + offset`.
    pub fn affine(slope: i64, offset: i64) -> Self {
        Self::new(vec![int(offset), int(slope)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// The value if the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Horner evaluation at `N = at`.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_int(&self, at: i64) -> Rational {
        self.eval(&int(at))
    }

    /// Writes the polynomial with descending powers in a caller-chosen
    /// variable name, e.g. `6*N^2 - 60*N - 20`.
    pub fn fmt_with(&self, var: &'static str) -> String {
        let mut out = String::new();
        let terms = self.coeffs.iter().enumerate().rev().map(|(p, c)| Term {
            coeff: c,
            vars: [(var, p), ("", 0)],
        });
        write_sum(&mut out, terms).expect("writing to a String");
        out
    }
}

impl fmt::Display for TwistPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with("N"))
    }
}

impl From<Rational> for TwistPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for TwistPoly {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Add<&TwistPoly> for &TwistPoly {
    type Output = TwistPoly;
    fn add(self, rhs: &TwistPoly) -> TwistPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        TwistPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&TwistPoly> for &TwistPoly {
    type Output = TwistPoly;
    fn sub(self, rhs: &TwistPoly) -> TwistPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        TwistPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&TwistPoly> for &TwistPoly {
    type Output = TwistPoly;
    fn mul(self, rhs: &TwistPoly) -> TwistPoly {
        if self.is_zero() || rhs.is_zero() {
            return TwistPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TwistPoly::new(out)
    }
}

impl Neg for &TwistPoly {
    type Output = TwistPoly;
    fn neg(self) -> TwistPoly {
        TwistPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<TwistPoly> for TwistPoly {
            type Output = TwistPoly;
            fn $method(self, rhs: TwistPoly) -> TwistPoly { (&self).$method(&rhs) }
        }
        impl $tr<&TwistPoly> for TwistPoly {
            type Output = TwistPoly;
            fn $method(self, rhs: &TwistPoly) -> TwistPoly { (&self).$method(rhs) }
        }
        impl $tr<TwistPoly> for &TwistPoly {
            type Output = TwistPoly;
            fn $method(self, rhs: TwistPoly) -> TwistPoly { self.$method(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for TwistPoly {
    type Output = TwistPoly;
    fn neg(self) -> TwistPoly {
        -&self
    }
}
