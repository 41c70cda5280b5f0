//! Exact characteristic-class calculus and twisted index polynomials for
//! smooth complete intersections in projective space.
//!
//! Classes live in the truncated ring `Q[N][H] / (H^(dim+1))`, where `H` is
//! the hyperplane class and `N` is a formal twist. Bundles are tracked by
//! their Chern character; the Todd class, Chern classes and symmetric
//! powers are derived from it. Indices of differential operators come out
//! as polynomials in `N`.

pub mod algebra;
pub mod bundle;
mod error;
pub mod hrr;
pub mod operator;
pub mod oracle;
pub mod variety;

pub use algebra::{GradedClass, PowerSeries, Rational, TwistPoly};
pub use bundle::{integrality_check, ChernVector, Integrality, VirtualBundle};
pub use error::{Error, Result};
pub use hrr::{euler_characteristic, todd_class};
pub use operator::{
    index_polynomial, principal_parts_ch, symbol_class, topological_index, IndexMode,
    OperatorSpec, SymbolKClass,
};
pub use variety::CompleteIntersection;
