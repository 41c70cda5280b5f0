//! Exact scalar, series and truncated-ring arithmetic.
//!
//! Everything above this layer is written in terms of [`Rational`],
//! [`TwistPoly`] (polynomials in the formal twist variable `N`) and
//! [`GradedClass`] (elements of `Q[N][H] / (H^(dim+1))`).

mod format;
pub mod graded;
pub mod rational;
pub mod series;
pub mod twist;

pub use graded::GradedClass;
pub use rational::{binomial, factorial, int, rat, Rational};
pub use series::PowerSeries;
pub use twist::TwistPoly;
