//! Virtual bundles tracked by rank and Chern character.
//!
//! All operations act on the Chern character `ch = sum_k ch_k H^k`. The power
//! sums of the Chern roots are `p_k = k! ch_k`, which is the bridge to Chern
//! classes (Newton's identities), to the Todd class (a multiplicative
//! sequence, i.e. an exponential of a linear form in the `p_k`) and to
//! symmetric powers (cycle-index formulas in Adams operations).

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::algebra::series::log_todd_coefficients;
use crate::algebra::{factorial, int, GradedClass, Rational, TwistPoly};
use crate::error::{Error, Result};

/// A class in `K_0(X) ⊗ Q[N]`, represented by its Chern character.
///
/// The rank may be negative (formal differences). The codimension-0 part of
/// `ch` always equals the rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VirtualBundle {
    rank: i64,
    ch: GradedClass,
}

impl VirtualBundle {
    /// Wraps a Chern character whose codimension-0 part is an integer constant.
    pub fn from_ch(ch: GradedClass) -> Result<Self> {
        let rank = ch
            .part(0)
            .as_constant()
            .filter(|r| r.is_integer())
            .and_then(|r| r.to_integer().to_i64())
            .ok_or_else(|| Error::BadRank(ch.part(0).to_string()))?;
        Ok(VirtualBundle { rank, ch })
    }

    /// The trivial bundle of rank `rank`.
    pub fn trivial(dim: usize, rank: i64) -> Self {
        VirtualBundle {
            rank,
            ch: GradedClass::constant(dim, TwistPoly::from_int(rank)),
        }
    }

    pub fn zero(dim: usize) -> Self {
        Self::trivial(dim, 0)
    }

    /// `O(t)`: `ch = sum_k t^k H^k / k!`.
    pub fn line_bundle(dim: usize, t: &TwistPoly) -> Self {
        let parts = (0..=dim)
            .map(|k| t.pow(k as u32).scale(&Rational::new(BigInt::one(), factorial(k))))
            .collect();
        VirtualBundle {
            rank: 1,
            ch: GradedClass::from_parts(dim, parts),
        }
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn ch(&self) -> &GradedClass {
        &self.ch
    }

    pub fn dim(&self) -> usize {
        self.ch.dim()
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        Ok(VirtualBundle {
            rank: self.rank + other.rank,
            ch: self.ch.checked_add(&other.ch)?,
        })
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        Ok(VirtualBundle {
            rank: self.rank - other.rank,
            ch: self.ch.checked_sub(&other.ch)?,
        })
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        Ok(VirtualBundle {
            rank: self.rank * other.rank,
            ch: self.ch.graded_mul(&other.ch)?,
        })
    }

    /// `self ⊗ O(t)`.
    pub fn twist(&self, t: &TwistPoly) -> Self {
        self.tensor(&Self::line_bundle(self.dim(), t))
            .expect("line bundle built at the same dimension")
    }

    /// `ch_k -> (-1)^k ch_k`.
    pub fn dual(&self) -> Self {
        VirtualBundle {
            rank: self.rank,
            ch: self.ch.adams(-1),
        }
    }

    /// Power sums of the Chern roots: `p_0 = rank`, `p_k = k! ch_k`.
    pub fn power_sums(&self) -> Vec<TwistPoly> {
        self.ch
            .parts()
            .iter()
            .enumerate()
            .map(|(k, part)| part.scale(&Rational::from_integer(factorial(k))))
            .collect()
    }

    pub fn chern_classes(&self) -> ChernVector {
        ChernVector::from_power_sums(&self.power_sums())
    }

    /// The Todd class `exp(sum_m s_m p_m H^m)`, where `s_m` are the
    /// coefficients of `log(x / (1 - e^{-x}))`.
    pub fn todd(&self) -> GradedClass {
        let dim = self.dim();
        let s = log_todd_coefficients(dim);
        let p = self.power_sums();
        let exponent = (1..=dim)
            .map(|m| GradedClass::monomial(dim, m, p[m].scale(&s[m])))
            .fold(GradedClass::zero(dim), |acc, t| {
                acc.checked_add(&t).expect("same dimension")
            });
        exponent.exp().expect("exponent has no constant term")
    }

    /// `Sym^k` for `k <= 3`, from the cycle index of the symmetric group with
    /// `p_j` replaced by the Adams operation `psi^j`:
    ///
    /// * `Sym^2 = (psi^1^2 + psi^2) / 2`
    /// * `Sym^3 = (psi^1^3 + 3 psi^1 psi^2 + 2 psi^3) / 6`
    pub fn sym_power(&self, k: u32) -> Result<Self> {
        if k > 3 {
            return Err(Error::SymPowerTooLarge(k));
        }
        if self.rank < 0 {
            return Err(Error::NegativeRank(self.rank));
        }
        let dim = self.dim();
        let a = &self.ch;
        let ch = match k {
            0 => GradedClass::one(dim),
            1 => a.clone(),
            2 => a
                .pow(2)
                .checked_add(&a.adams(2))?
                .scale_rational(&Rational::new(1.into(), 2.into())),
            _ => {
                let cross = a.graded_mul(&a.adams(2))?.scale_rational(&int(3));
                a.pow(3)
                    .checked_add(&cross)?
                    .checked_add(&a.adams(3).scale_rational(&int(2)))?
                    .scale_rational(&Rational::new(1.into(), 6.into()))
            }
        };
        Self::from_ch(ch)
    }

    /// `det = exp(c_1)`, a line bundle.
    pub fn determinant(&self) -> Self {
        let c1 = GradedClass::monomial(self.dim(), 1, self.ch.part(1).clone());
        VirtualBundle {
            rank: 1,
            ch: c1.exp().expect("c_1 has no constant term"),
        }
    }
}

/// Chern classes `c_0 = 1, c_1, ..., c_dim`, each stored as the coefficient
/// of `H^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChernVector {
    classes: Vec<TwistPoly>,
}

impl ChernVector {
    pub fn new(mut classes: Vec<TwistPoly>) -> Self {
        if classes.is_empty() {
            classes.push(TwistPoly::one());
        }
        classes[0] = TwistPoly::one();
        ChernVector { classes }
    }

    /// Newton's identities: `k c_k = sum_{i=1}^{k} (-1)^{i-1} c_{k-i} p_i`.
    /// `power_sums[0]` (the rank) is not used.
    pub fn from_power_sums(power_sums: &[TwistPoly]) -> Self {
        let mut c = vec![TwistPoly::one()];
        for k in 1..power_sums.len() {
            let mut acc = TwistPoly::zero();
            for i in 1..=k {
                let term = &c[k - i] * &power_sums[i];
                acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
            }
            c.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(k))));
        }
        ChernVector { classes: c }
    }

    /// Inverse of [`ChernVector::from_power_sums`], with `p_0 = rank`.
    pub fn power_sums(&self, rank: i64) -> Vec<TwistPoly> {
        let c = &self.classes;
        let mut p = vec![TwistPoly::from_int(rank)];
        for k in 1..c.len() {
            // p_k = (-1)^{k-1} k c_k + sum_{i=1}^{k-1} (-1)^{k-1+i} c_{k-i} p_i
            let mut acc = c[k].scale(&int(k as i64));
            if k % 2 == 0 {
                acc = -acc;
            }
            for i in 1..k {
                let term = &c[k - i] * &p[i];
                acc = if (k - 1 + i) % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            p.push(acc);
        }
        p
    }

    /// Reassembles `ch_k = p_k / k!`.
    pub fn to_ch(&self, rank: i64) -> GradedClass {
        let parts = self
            .power_sums(rank)
            .into_iter()
            .enumerate()
            .map(|(k, p)| p.scale(&Rational::new(BigInt::one(), factorial(k))))
            .collect();
        GradedClass::from_parts(self.dim(), parts)
    }

    pub fn dim(&self) -> usize {
        self.classes.len() - 1
    }

    pub fn c(&self, k: usize) -> TwistPoly {
        self.classes.get(k).cloned().unwrap_or_default()
    }

    pub fn classes(&self) -> &[TwistPoly] {
        &self.classes
    }

    /// The total Chern class `1 + c_1 + ... + c_dim`.
    pub fn total(&self) -> GradedClass {
        GradedClass::from_parts(self.dim(), self.classes.clone())
    }
}

/// Outcome of [`integrality_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Integrality {
    pub integral: bool,
    /// First non-integral part as `(codimension, value)`.
    pub witness: Option<(usize, Rational)>,
}

/// Substitutes `N := at` and checks that every coefficient of `H^k` is an
/// integer.
pub fn integrality_check(a: &GradedClass, at: i64) -> Integrality {
    let at = int(at);
    let witness = a
        .parts()
        .iter()
        .enumerate()
        .map(|(k, p)| (k, p.eval(&at)))
        .find(|(_, v)| !v.is_integer());
    Integrality {
        integral: witness.is_none(),
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn class(dim: usize, parts: &[(i64, i64)]) -> GradedClass {
        GradedClass::from_rationals(dim, parts.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    fn o(dim: usize, m: i64) -> VirtualBundle {
        VirtualBundle::line_bundle(dim, &TwistPoly::from_int(m))
    }

    #[test]
    fn line_bundle_expansions() {
        let l = VirtualBundle::line_bundle(2, &TwistPoly::variable());
        assert_eq!(l.ch().to_string(), "1 + N*H + 1/2*N^2*H^2");
        assert_eq!(o(2, 0), VirtualBundle::trivial(2, 1));
        assert_eq!(*o(2, 3).ch(), class(2, &[(1, 1), (3, 1), (9, 2)]));
    }

    #[test]
    fn sum_difference_tensor() {
        assert_eq!(o(3, 1).tensor(&o(3, 2)).unwrap(), o(3, 3));
        let e = o(2, 1).sum(&o(2, 2)).unwrap();
        assert_eq!(*e.ch(), class(2, &[(2, 1), (3, 1), (5, 2)]));
        let z = e.difference(&e).unwrap();
        assert_eq!(z.rank(), 0);
        assert!(z.ch().is_zero());
        assert!(o(2, 1).sum(&o(3, 1)).is_err());
    }

    #[test]
    fn dual_rules() {
        let e = VirtualBundle::from_ch(class(2, &[(2, 1), (3, 1), (5, 2)])).unwrap();
        assert_eq!(*e.dual().ch(), class(2, &[(2, 1), (-3, 1), (5, 2)]));
        assert_eq!(e.dual().dual(), e);
        assert_eq!(o(3, 2).dual(), o(3, -2));
    }

    #[test]
    fn chern_classes_of_split_bundle() {
        let e = o(2, 1).sum(&o(2, 2)).unwrap();
        let c = e.chern_classes();
        assert_eq!(c.c(1), TwistPoly::from_int(3));
        assert_eq!(c.c(2), TwistPoly::from_int(2));
        assert_eq!(c.to_ch(e.rank()), *e.ch());
    }

    #[test]
    fn chern_classes_of_k3_tangent() {
        let t = VirtualBundle::from_ch(class(2, &[(2, 1), (0, 1), (-4, 1)])).unwrap();
        let c = t.chern_classes();
        assert_eq!(c.c(1), TwistPoly::zero());
        assert_eq!(c.c(2), TwistPoly::from_int(4));
    }

    #[test]
    fn trivial_bundle_has_trivial_classes() {
        let t = VirtualBundle::trivial(4, 3);
        let c = t.chern_classes();
        assert!((1..=4).all(|k| c.c(k).is_zero()));
        assert_eq!(t.todd(), GradedClass::one(4));
        assert_eq!(t.determinant(), VirtualBundle::trivial(4, 1));
    }

    #[test]
    fn todd_of_k3_tangent_integrates_to_two_over_degree_six() {
        let t = VirtualBundle::from_ch(class(2, &[(2, 1), (0, 1), (-4, 1)])).unwrap();
        let td = t.todd();
        assert_eq!(td, class(2, &[(1, 1), (0, 1), (1, 3)]));
    }

    #[test]
    fn todd_of_p1_tangent() {
        // T_{P^1} = O(2)
        assert_eq!(o(1, 2).todd(), class(1, &[(1, 1), (1, 1)]));
    }

    #[test]
    fn sym_power_small_cases() {
        let l = o(3, 2);
        assert_eq!(l.sym_power(2).unwrap(), o(3, 4));
        let e = o(2, 1).sum(&o(2, 2)).unwrap();
        assert_eq!(e.sym_power(0).unwrap(), VirtualBundle::trivial(2, 1));
        assert_eq!(e.sym_power(1).unwrap(), e);
        let s2 = e.sym_power(2).unwrap();
        assert_eq!(*s2.ch(), class(2, &[(3, 1), (9, 1), (29, 2)]));
    }

    #[test]
    fn sym_power_limits() {
        let e = o(2, 1);
        assert_eq!(e.sym_power(4), Err(Error::SymPowerTooLarge(4)));
        let neg = VirtualBundle::zero(2).difference(&e).unwrap();
        assert_eq!(neg.sym_power(2), Err(Error::NegativeRank(-1)));
    }

    #[test]
    fn determinant_of_split_bundle() {
        let e = o(2, 1).sum(&o(2, 2)).unwrap();
        assert_eq!(e.determinant(), o(2, 3));
    }

    #[test]
    fn rank_must_be_integral() {
        assert!(VirtualBundle::from_ch(class(1, &[(1, 2)])).is_err());
        let n_rank = GradedClass::constant(1, TwistPoly::variable());
        assert!(VirtualBundle::from_ch(n_rank).is_err());
    }

    #[test]
    fn integrality() {
        let good = class(2, &[(1, 1), (3, 1), (-7, 1)]);
        assert_eq!(integrality_check(&good, 0), Integrality { integral: true, witness: None });
        let bad = class(2, &[(1, 1), (0, 1), (3, 2)]);
        let r = integrality_check(&bad, 0);
        assert!(!r.integral);
        assert_eq!(r.witness, Some((2, rat(3, 2))));
        let twisted = GradedClass::from_parts(1, vec![TwistPoly::one(), TwistPoly::variable()]);
        assert!((0..=10).all(|n| integrality_check(&twisted, n).integral));
    }
}
