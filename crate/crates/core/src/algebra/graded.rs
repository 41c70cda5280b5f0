//! The truncated ring `Q[N][H] / (H^(dim+1))`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::format::{write_sum, Term};
use super::{int, Rational, TwistPoly};
use crate::error::{Error, Result};

/// A class `sum_k a_k H^k` with `a_k` in `Q[N]`, truncated above `H^dim`.
///
/// Always carries exactly `dim + 1` parts. Binary operations require equal
/// dimensions and never re-truncate silently.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedClass {
    parts: Vec<TwistPoly>,
}

impl GradedClass {
    /// Builds a class from its parts, padding with zeros and discarding
    /// anything above `H^dim`.
    pub fn from_parts(dim: usize, mut parts: Vec<TwistPoly>) -> Self {
        parts.resize(dim + 1, TwistPoly::zero());
        GradedClass { parts }
    }

    /// A class whose parts are plain rationals.
    pub fn from_rationals(dim: usize, parts: Vec<Rational>) -> Self {
        Self::from_parts(dim, parts.into_iter().map(TwistPoly::constant).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_parts(dim, Vec::new())
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, TwistPoly::one())
    }

    pub fn constant(dim: usize, c: TwistPoly) -> Self {
        Self::from_parts(dim, vec![c])
    }

    /// `coeff * H^codim`, or zero if `codim > dim`.
    pub fn monomial(dim: usize, codim: usize, coeff: TwistPoly) -> Self {
        let mut parts = vec![TwistPoly::zero(); dim + 1];
        if codim <= dim {
            parts[codim] = coeff;
        }
        GradedClass { parts }
    }

    /// The hyperplane class `H`.
    pub fn hyperplane(dim: usize) -> Self {
        Self::monomial(dim, 1, TwistPoly::one())
    }

    pub fn dim(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn part(&self, codim: usize) -> &TwistPoly {
        &self.parts[codim]
    }

    pub fn parts(&self) -> &[TwistPoly] {
        &self.parts
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(TwistPoly::is_zero)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let parts = self.parts.iter().zip(&other.parts).map(|(a, b)| a + b).collect();
        Ok(GradedClass { parts })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let parts = self.parts.iter().zip(&other.parts).map(|(a, b)| a - b).collect();
        Ok(GradedClass { parts })
    }

    /// Cup product; products landing above `H^dim` are dropped.
    pub fn graded_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let dim = self.dim();
        let mut parts = vec![TwistPoly::zero(); dim + 1];
        for (a, pa) in self.parts.iter().enumerate() {
            if pa.is_zero() {
                continue;
            }
            for (b, pb) in other.parts.iter().enumerate().take(dim + 1 - a) {
                if !pb.is_zero() {
                    parts[a + b] = &parts[a + b] + &(pa * pb);
                }
            }
        }
        GradedClass { parts }
    }

    pub fn neg(&self) -> Self {
        GradedClass {
            parts: self.parts.iter().map(|p| -p).collect(),
        }
    }

    pub fn scale(&self, c: &TwistPoly) -> Self {
        GradedClass {
            parts: self.parts.iter().map(|p| p * c).collect(),
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        GradedClass {
            parts: self.parts.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Multiplies the codimension-`k` part by `factor^k`; this is the Adams
    /// operation on Chern characters (`factor = -1` gives the dual).
    pub fn adams(&self, factor: i64) -> Self {
        let mut weight = Rational::one();
        let mut parts = Vec::with_capacity(self.parts.len());
        for p in &self.parts {
            parts.push(p.scale(&weight));
            weight *= int(factor);
        }
        GradedClass { parts }
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(self.dim()), |acc, _| acc.mul_unchecked(self))
    }

    /// `exp(self)`; the codimension-0 part must vanish, so the series is finite.
    pub fn exp(&self) -> Result<Self> {
        if !self.parts[0].is_zero() {
            return Err(Error::ExpNonZeroConstant);
        }
        let dim = self.dim();
        let mut acc = Self::one(dim);
        let mut term = Self::one(dim);
        for k in 1..=dim {
            term = term.mul_unchecked(self).scale_rational(&Rational::new(BigInt::one(), BigInt::from(k)));
            if term.is_zero() {
                break;
            }
            acc = acc.checked_add(&term)?;
        }
        Ok(acc)
    }

    /// Substitutes `N := at` in every part.
    pub fn substitute(&self, at: &Rational) -> Self {
        GradedClass {
            parts: self.parts.iter().map(|p| TwistPoly::constant(p.eval(at))).collect(),
        }
    }

    /// Monomials ordered by ascending codimension, then descending power of `N`.
    fn write_terms<W: fmt::Write>(&self, out: &mut W) -> fmt::Result {
        let terms = self.parts.iter().enumerate().flat_map(|(k, part)| {
            part.coeffs()
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| Term {
                    coeff: c,
                    vars: [("N", j), ("H", k)],
                })
        });
        write_sum(out, terms)
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f)
    }
}
