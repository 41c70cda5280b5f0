//! Splitting-principle reference engine.
//!
//! A bundle is an explicit multiset of Chern roots `a_i H`. Every operation
//! is defined root by root, with no use of power sums, Newton identities,
//! logarithms or Adams operations, so it can serve as ground truth for
//! [`crate::bundle`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::series::todd_generating_series;
use crate::algebra::{factorial, GradedClass, Rational, TwistPoly};
use crate::bundle::ChernVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootBundle {
    roots: Vec<Rational>,
    dim: usize,
}

impl RootBundle {
    pub fn new(dim: usize, roots: Vec<Rational>) -> Self {
        RootBundle { roots, dim }
    }

    pub fn rank(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Rational] {
        &self.roots
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// `a^k / k!` for `k = 0..=dim`.
fn exp_root(dim: usize, a: &Rational) -> Vec<Rational> {
    let mut power = Rational::one();
    let mut out = Vec::with_capacity(dim + 1);
    for k in 0..=dim {
        out.push(&power / Rational::from_integer(factorial(k)));
        power *= a;
    }
    out
}

/// `ch = sum_i e^{a_i H}`.
pub fn oracle_ch(b: &RootBundle) -> GradedClass {
    let mut parts = vec![Rational::zero(); b.dim + 1];
    for a in &b.roots {
        for (slot, term) in parts.iter_mut().zip(exp_root(b.dim, a)) {
            *slot += term;
        }
    }
    GradedClass::from_rationals(b.dim, parts)
}

pub fn oracle_sum(a: &RootBundle, b: &RootBundle) -> RootBundle {
    assert_eq!(a.dim, b.dim);
    RootBundle::new(a.dim, a.roots.iter().chain(&b.roots).cloned().collect())
}

pub fn oracle_dual(b: &RootBundle) -> RootBundle {
    RootBundle::new(b.dim, b.roots.iter().map(|a| -a).collect())
}

pub fn oracle_tensor(a: &RootBundle, b: &RootBundle) -> RootBundle {
    assert_eq!(a.dim, b.dim);
    let roots = a
        .roots
        .iter()
        .flat_map(|x| b.roots.iter().map(move |y| x + y))
        .collect();
    RootBundle::new(a.dim, roots)
}

/// Roots of `Sym^k`: sums over all size-`k` multisets of roots.
pub fn oracle_sym(k: u32, b: &RootBundle) -> RootBundle {
    fn go(roots: &[Rational], start: usize, left: u32, acc: Rational, out: &mut Vec<Rational>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..roots.len() {
            go(roots, i, left - 1, &acc + &roots[i], out);
        }
    }
    let mut out = Vec::new();
    go(&b.roots, 0, k, Rational::zero(), &mut out);
    RootBundle::new(b.dim, out)
}

/// `det` has the single root `sum_i a_i`.
pub fn oracle_det(b: &RootBundle) -> RootBundle {
    let total = b.roots.iter().fold(Rational::zero(), |acc, a| acc + a);
    RootBundle::new(b.dim, vec![total])
}

/// `Td = prod_i td(a_i H)`.
pub fn oracle_todd(b: &RootBundle) -> GradedClass {
    let td = todd_generating_series(b.dim);
    b.roots.iter().fold(GradedClass::one(b.dim), |acc, a| {
        let factor = GradedClass::from_rationals(b.dim, td.rescale_variable(a).coeffs().to_vec());
        acc.graded_mul(&factor).expect("same dimension")
    })
}

/// Chern classes as elementary symmetric polynomials of the roots, read off
/// `prod_i (1 + a_i t)`.
pub fn oracle_chern(b: &RootBundle) -> ChernVector {
    let mut e = vec![Rational::one()];
    e.resize(b.dim + 1, Rational::zero());
    for a in &b.roots {
        for k in (1..=b.dim).rev() {
            let prev = e[k - 1].clone();
            e[k] += prev * a;
        }
    }
    ChernVector::new(e.into_iter().map(TwistPoly::constant).collect())
}

/// Integer root coefficient helper for tests and benches.
pub fn int_roots(dim: usize, roots: &[i64]) -> RootBundle {
    RootBundle::new(
        dim,
        roots.iter().map(|&a| Rational::from_integer(BigInt::from(a))).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn ch_examples() {
        assert_eq!(oracle_ch(&int_roots(3, &[0])), GradedClass::one(3));
        assert_eq!(
            oracle_ch(&int_roots(2, &[1, 2])),
            GradedClass::from_rationals(2, vec![int(2), int(3), rat(5, 2)])
        );
        assert!(oracle_ch(&int_roots(2, &[])).is_zero());
    }

    #[test]
    fn sym_examples() {
        let x = RootBundle::new(2, vec![rat(1, 3), rat(-5, 2)]);
        let s = oracle_sym(2, &x);
        assert_eq!(s.roots(), &[rat(2, 3), rat(1, 3) + rat(-5, 2), int(-5)]);
        assert_eq!(oracle_sym(0, &x).roots(), &[int(0)]);
        let s = oracle_sym(2, &int_roots(2, &[1, 2]));
        assert_eq!(s.roots(), &[int(2), int(3), int(4)]);
        assert_eq!(
            oracle_ch(&s),
            GradedClass::from_rationals(2, vec![int(3), int(9), rat(29, 2)])
        );
    }

    #[test]
    fn root_operations() {
        assert_eq!(oracle_dual(&int_roots(2, &[1, 2])), int_roots(2, &[-1, -2]));
        assert_eq!(oracle_tensor(&int_roots(2, &[1]), &int_roots(2, &[2])), int_roots(2, &[3]));
        assert_eq!(oracle_det(&int_roots(2, &[1, 2, -4])), int_roots(2, &[-1]));
    }

    #[test]
    fn todd_of_two_equal_roots() {
        // (1 + H/2 + H^2/12)^2 = 1 + H + (1/4 + 1/6) H^2
        assert_eq!(
            oracle_todd(&int_roots(2, &[1, 1])),
            GradedClass::from_rationals(2, vec![int(1), int(1), rat(5, 12)])
        );
    }

    #[test]
    fn chern_of_split_bundle() {
        let c = oracle_chern(&int_roots(2, &[1, 2]));
        assert_eq!(c.c(1), TwistPoly::from_int(3));
        assert_eq!(c.c(2), TwistPoly::from_int(2));
    }
}
