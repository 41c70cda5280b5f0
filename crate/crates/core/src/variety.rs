//! Smooth complete intersections `X ⊂ P^n` of type `(d_1, ..., d_c)`.
//!
//! Only the numerical type is stored. Smoothness is assumed: every formula
//! here depends on `(n; d_1, ..., d_c)` alone.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{factorial, rat, GradedClass, Rational, TwistPoly};
use crate::bundle::VirtualBundle;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompleteIntersection {
    ambient_dim: u32,
    multidegrees: Vec<u32>,
    degree: BigInt,
}

impl CompleteIntersection {
    /// Validates `n >= 1`, every `d_i >= 1` and `c < n`.
    pub fn new(ambient_dim: u32, multidegrees: Vec<u32>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::InvalidVariety("ambient dimension must be at least 1".into()));
        }
        if let Some(d) = multidegrees.iter().find(|&&d| d == 0) {
            return Err(Error::InvalidVariety(format!("hypersurface degree {d} must be at least 1")));
        }
        if multidegrees.len() >= ambient_dim as usize {
            return Err(Error::InvalidVariety(format!(
                "{} equations in P({}) leave dimension {} (must be at least 1)",
                multidegrees.len(),
                ambient_dim,
                ambient_dim as i64 - multidegrees.len() as i64
            )));
        }
        let degree = multidegrees.iter().map(|&d| BigInt::from(d)).product();
        Ok(CompleteIntersection {
            ambient_dim,
            multidegrees,
            degree,
        })
    }

    pub fn projective_space(n: u32) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    pub fn multidegrees(&self) -> &[u32] {
        &self.multidegrees
    }

    pub fn codim(&self) -> usize {
        self.multidegrees.len()
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim as usize - self.codim()
    }

    /// `prod d_i`, which is also `∫_X H^dim`.
    pub fn degree(&self) -> &BigInt {
        &self.degree
    }

    pub fn hyperplane(&self) -> GradedClass {
        GradedClass::hyperplane(self.dim())
    }

    pub fn line_bundle(&self, t: &TwistPoly) -> VirtualBundle {
        VirtualBundle::line_bundle(self.dim(), t)
    }

    pub fn trivial(&self, rank: i64) -> VirtualBundle {
        VirtualBundle::trivial(self.dim(), rank)
    }

    /// `ch(T_X) = (n - c) + sum_{k=1}^{n-c} (n + 1 - sum_i d_i^k) H^k / k!`,
    /// from the Euler sequence on `P^n` and the normal bundle sequence.
    pub fn tangent_ch(&self) -> VirtualBundle {
        let dim = self.dim();
        let n1 = BigInt::from(self.ambient_dim) + 1;
        let mut parts = vec![TwistPoly::from_int(dim as i64)];
        for k in 1..=dim {
            let power_sum: BigInt = self
                .multidegrees
                .iter()
                .map(|&d| BigInt::from(d).pow(k as u32))
                .sum();
            parts.push(TwistPoly::constant(Rational::new(&n1 - power_sum, factorial(k))));
        }
        VirtualBundle::from_ch(GradedClass::from_parts(dim, parts)).expect("integral rank")
    }

    /// `Ω^1_X`, the dual of the tangent bundle.
    pub fn cotangent_ch(&self) -> VirtualBundle {
        self.tangent_ch().dual()
    }

    /// The degree map: the `H^dim` coefficient times `deg X`.
    pub fn integrate(&self, a: &GradedClass) -> Result<TwistPoly> {
        if a.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: a.dim(),
            });
        }
        Ok(a.part(self.dim()).scale(&Rational::from_integer(self.degree.clone())))
    }

    /// The cotangent Chern character of a surface `X_(d1,d2) ⊂ P^4` exactly as
    /// printed in the source of the K3 example:
    /// `2 - (5 + d1 + d2) H + (5 - d1^2 - d2^2) H^2 / 2`.
    ///
    /// This disagrees with [`cotangent_ch`](Self::cotangent_ch) in the `H`
    /// coefficient and is kept only to replay that computation.
    pub fn paper_compat_cotangent_ch(&self) -> Result<VirtualBundle> {
        let (d1, d2) = self.compat_degrees()?;
        let (d1, d2) = (i64::from(d1), i64::from(d2));
        let ch = GradedClass::from_rationals(
            2,
            vec![rat(2, 1), rat(-(5 + d1 + d2), 1), rat(5 - d1 * d1 - d2 * d2, 2)],
        );
        VirtualBundle::from_ch(ch)
    }

    pub(crate) fn compat_degrees(&self) -> Result<(u32, u32)> {
        match (self.ambient_dim, self.multidegrees.as_slice()) {
            (4, &[d1, d2]) => Ok((d1, d2)),
            _ => Err(Error::CompatModeUnavailable(self.to_string())),
        }
    }

    pub fn is_projective_space(&self) -> bool {
        self.multidegrees.is_empty()
    }

    /// `1 / deg X`: the `H^dim` coefficient of a class integrating to one.
    pub(crate) fn inverse_degree(&self) -> Rational {
        Rational::new(BigInt::one(), self.degree.clone())
    }
}

impl fmt::Display for CompleteIntersection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multidegrees.is_empty() {
            return write!(f, "P({})", self.ambient_dim);
        }
        let degrees: Vec<String> = self.multidegrees.iter().map(u32::to_string).collect();
        write!(f, "CI({};{})", self.ambient_dim, degrees.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn ci(n: u32, ds: &[u32]) -> CompleteIntersection {
        CompleteIntersection::new(n, ds.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(CompleteIntersection::new(2, vec![3, 3]).is_err());
        assert!(CompleteIntersection::new(3, vec![0]).is_err());
        assert!(CompleteIntersection::new(0, vec![]).is_err());
        let x = ci(3, &[2, 2]);
        assert_eq!((x.dim(), x.degree().clone()), (1, BigInt::from(4)));
        assert_eq!(x.to_string(), "CI(3;2,2)");
        assert_eq!(ci(4, &[]).to_string(), "P(4)");
    }

    #[test]
    fn elliptic_quartic_tangent_is_trivial() {
        let t = ci(3, &[2, 2]).tangent_ch();
        assert_eq!(t.rank(), 1);
        assert_eq!(*t.ch(), GradedClass::one(1));
        assert_eq!(ci(3, &[2, 2]).cotangent_ch(), t);
    }

    #[test]
    fn projective_space_tangent() {
        let t = ci(2, &[]).tangent_ch();
        assert_eq!(*t.ch(), GradedClass::from_rationals(2, vec![int(2), int(3), rat(3, 2)]));
        let omega = ci(2, &[]).cotangent_ch();
        assert_eq!(*omega.ch(), GradedClass::from_rationals(2, vec![int(2), int(-3), rat(3, 2)]));
    }

    #[test]
    fn k3_of_type_two_three() {
        let x = ci(4, &[2, 3]);
        let expected = GradedClass::from_rationals(2, vec![int(2), int(0), int(-4)]);
        assert_eq!(*x.tangent_ch().ch(), expected);
        assert_eq!(*x.cotangent_ch().ch(), expected);
        assert_eq!(x.integrate(&expected).unwrap(), TwistPoly::from_int(-24));
    }

    #[test]
    fn integration() {
        let curve = ci(3, &[2, 2]);
        let nh = curve.hyperplane().scale(&TwistPoly::variable());
        assert_eq!(curve.integrate(&nh).unwrap(), TwistPoly::affine(4, 0));
        let k3 = ci(4, &[2, 3]);
        assert_eq!(k3.integrate(&k3.hyperplane().pow(2)).unwrap(), TwistPoly::from_int(6));
        assert!(k3.integrate(&GradedClass::one(2)).unwrap().is_zero());
        assert!(k3.integrate(&GradedClass::one(1)).is_err());
    }

    #[test]
    fn compat_cotangent() {
        let c = ci(4, &[2, 3]).paper_compat_cotangent_ch().unwrap();
        assert_eq!(*c.ch(), GradedClass::from_rationals(2, vec![int(2), int(-10), int(-4)]));
        let c = ci(4, &[2, 2]).paper_compat_cotangent_ch().unwrap();
        assert_eq!(*c.ch(), GradedClass::from_rationals(2, vec![int(2), int(-9), rat(-3, 2)]));
        assert!(matches!(
            ci(3, &[4]).paper_compat_cotangent_ch(),
            Err(Error::CompatModeUnavailable(_))
        ));
    }
}
