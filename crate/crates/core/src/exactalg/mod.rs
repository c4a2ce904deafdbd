//! Exact scalars, polynomials and truncated series.

mod linsolve;
mod multi;
mod poly;
mod rational;
mod series;

pub use linsolve::{invert as invert_matrix, solve_unique};
pub use multi::{poly_substitute, Poly2, Poly3, Var};
pub use poly::{definite_unit_integral, poly_eval, Poly1};
pub use rational::{q, Rational};
pub use series::{series_div_unit, series_exp, series_log1p, series_mul, series_pow, Series};

/// Default truncation degree.
pub const DEFAULT_TRUNC: usize = 12;
