//! Differential operators by their symbolic data and their twisted indices.
//!
//! An operator `D: F -> G` of order `<= n` is recorded as `(n, F, G)`. Its
//! symbol class, pulled back along the zero section of the cotangent
//! bundle, is `[P^n] [F] - [G]` where `P^n` is the bundle of principal parts.
//! The index of the twist `D(N): F(N) -> G(N)` is then
//! `∫_X ch(([P^n][F] - [G]) ⊗ O(N)) Td(T_X)`.
//!
//! Ellipticity is taken on trust; no symbol map is stored.

use num_traits::Zero;

use crate::algebra::{int, GradedClass, Rational, TwistPoly};
use crate::bundle::VirtualBundle;
use crate::error::{Error, Result};
use crate::hrr::todd_class;
use crate::variety::CompleteIntersection;

pub const MAX_ORDER: u32 = 3;

/// Which cotangent and Todd data to feed the index formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum IndexMode {
    /// Everything derived from the tangent Chern character of `X`.
    #[default]
    Default,
    /// Replays the printed K3 computation: the printed surface formula for
    /// `ch(Ω^1)` inside `P^n`, and `Td = 1 + c_2/12` with `K = 0` and
    /// `∫ c_2 = 24`. Only defined for `X_(d1,d2) ⊂ P^4`.
    PaperCompat,
}

impl IndexMode {
    pub fn name(self) -> &'static str {
        match self {
            IndexMode::Default => "default",
            IndexMode::PaperCompat => "paper-compat",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorSpec {
    order: u32,
    source: VirtualBundle,
    target: VirtualBundle,
    elliptic: bool,
}

impl OperatorSpec {
    /// An operator assumed elliptic.
    pub fn new(order: u32, source: VirtualBundle, target: VirtualBundle) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        if source.dim() != target.dim() {
            return Err(Error::DimensionMismatch {
                left: source.dim(),
                right: target.dim(),
            });
        }
        Ok(OperatorSpec {
            order,
            source,
            target,
            elliptic: true,
        })
    }

    /// `D_u: O_X -> O_X`, the first-order operator given by the projection
    /// `u: P^1 -> O_X` of the Atiyah extension `0 -> Ω^1 -> P^1 -> O -> 0`.
    pub fn atiyah(x: &CompleteIntersection) -> Self {
        Self::new(1, x.trivial(1), x.trivial(1)).expect("order 1, same dimension")
    }

    /// `D(t): F(t) -> G(t)`.
    pub fn twisted(&self, t: &TwistPoly) -> Self {
        OperatorSpec {
            order: self.order,
            source: self.source.twist(t),
            target: self.target.twist(t),
            elliptic: self.elliptic,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn source(&self) -> &VirtualBundle {
        &self.source
    }

    pub fn target(&self) -> &VirtualBundle {
        &self.target
    }

    pub fn is_elliptic(&self) -> bool {
        self.elliptic
    }
}

/// The symbol class `[P^n][F] - [G]` as a virtual bundle on `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolKClass(VirtualBundle);

impl SymbolKClass {
    pub fn bundle(&self) -> &VirtualBundle {
        &self.0
    }

    pub fn into_bundle(self) -> VirtualBundle {
        self.0
    }
}

/// `ch(P^n) = sum_{k=0}^{n} ch(Sym^k Ω^1)`, from the filtration of the
/// principal parts with graded pieces `Sym^k Ω^1`.
pub fn principal_parts_ch(x: &CompleteIntersection, n: u32) -> Result<VirtualBundle> {
    principal_parts_from(&x.cotangent_ch(), n)
}

fn principal_parts_from(cotangent: &VirtualBundle, n: u32) -> Result<VirtualBundle> {
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    (1..=n).try_fold(VirtualBundle::trivial(cotangent.dim(), 1), |acc, k| {
        acc.sum(&cotangent.sym_power(k)?)
    })
}

fn cotangent_for(x: &CompleteIntersection, mode: IndexMode) -> Result<VirtualBundle> {
    match mode {
        IndexMode::Default => Ok(x.cotangent_ch()),
        IndexMode::PaperCompat => x.paper_compat_cotangent_ch(),
    }
}

fn todd_for(x: &CompleteIntersection, mode: IndexMode) -> Result<GradedClass> {
    match mode {
        IndexMode::Default => Ok(todd_class(x)),
        IndexMode::PaperCompat => {
            x.compat_degrees()?;
            // K = 0 and ∫ c_2 = 24, so ∫ Td_2 = 2.
            let td2 = TwistPoly::constant(int(2) * x.inverse_degree());
            Ok(GradedClass::from_parts(2, vec![TwistPoly::one(), TwistPoly::zero(), td2]))
        }
    }
}

fn check_dim(x: &CompleteIntersection, op: &OperatorSpec) -> Result<()> {
    if op.source.dim() != x.dim() {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: op.source.dim(),
        });
    }
    Ok(())
}

/// `[P^n][F] - [G]` computed on `X` with the default cotangent data.
pub fn symbol_class(x: &CompleteIntersection, op: &OperatorSpec) -> Result<SymbolKClass> {
    symbol_class_in(x, op, IndexMode::Default)
}

pub fn symbol_class_in(
    x: &CompleteIntersection,
    op: &OperatorSpec,
    mode: IndexMode,
) -> Result<SymbolKClass> {
    check_dim(x, op)?;
    let jets = principal_parts_from(&cotangent_for(x, mode)?, op.order)?;
    let class = jets.tensor(&op.source)?.difference(&op.target)?;
    Ok(SymbolKClass(class))
}

/// `Ind(D(N)) = ∫_X ch(symbol ⊗ O(N)) Td(T_X)` as a polynomial in `N`.
pub fn index_polynomial(
    x: &CompleteIntersection,
    op: &OperatorSpec,
    mode: IndexMode,
) -> Result<TwistPoly> {
    let symbol = symbol_class_in(x, op, mode)?;
    let todd = todd_for(x, mode)?;
    let twisted = symbol.bundle().twist(&TwistPoly::variable());
    x.integrate(&twisted.ch().graded_mul(&todd)?)
}

/// The index polynomial evaluated at `N = at`.
pub fn topological_index(
    x: &CompleteIntersection,
    op: &OperatorSpec,
    at: i64,
    mode: IndexMode,
) -> Result<Rational> {
    Ok(index_polynomial(x, op, mode)?.eval_int(at))
}

/// Leading coefficient predicted for the index polynomial:
/// `rank(symbol) deg(X) / dim!`. Zero when the symbol has rank zero.
pub fn expected_leading_coefficient(x: &CompleteIntersection, symbol: &SymbolKClass) -> Rational {
    let rank = symbol.bundle().rank();
    if rank == 0 {
        return Rational::zero();
    }
    Rational::new(
        num_bigint::BigInt::from(rank) * x.degree(),
        crate::algebra::factorial(x.dim()),
    )
}
