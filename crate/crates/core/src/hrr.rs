//! Hirzebruch–Riemann–Roch on a complete intersection.

use crate::algebra::{GradedClass, TwistPoly};
use crate::bundle::VirtualBundle;
use crate::error::Result;
use crate::variety::CompleteIntersection;

/// `Td(T_X)`, from the tangent Chern character.
pub fn todd_class(x: &CompleteIntersection) -> GradedClass {
    x.tangent_ch().todd()
}

/// `χ(X, E) = ∫_X ch(E) Td(T_X)`, a polynomial in `N` when `E` is twisted.
pub fn euler_characteristic(x: &CompleteIntersection, e: &VirtualBundle) -> Result<TwistPoly> {
    let integrand = e.ch().graded_mul(&todd_class(x))?;
    x.integrate(&integrand)
}
