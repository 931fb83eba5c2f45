//! Exact multivariate Laurent polynomials, their quotients, and small
//! determinants over both rings.

mod det;
mod poly;
mod ratfn;

pub use det::{det, poly_det, RingElement, MAX_SIDE};
pub use poly::{poly_add, poly_eval, poly_mul, LaurentPoly, Monomial};
pub use ratfn::{ratfn_arith, ratfn_eq, RatOp, RationalFn};
