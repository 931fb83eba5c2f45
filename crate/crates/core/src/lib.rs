//! Exact Z-transform and Tustin-mapped Laplace transform of the
//! Levi-Civita symbol.
//!
//! The crate is layered bottom-up:
//!
//! * [`epsilon`]: the symbol itself, by inversion parity, by a normalised
//!   difference product, and through injective relabelling tables;
//! * [`laurent`]: exact multivariate Laurent polynomials, rational functions
//!   and small determinants over them;
//! * [`z_transform`]: moment sums `S_N(p, q)`, the brute-force transform and
//!   its scaled-determinant closed form;
//! * [`s_domain`]: the same objects after the bilinear substitution;
//! * [`verify`]: oracle cross-checks used by the command-line tool.

pub mod epsilon;
pub mod error;
pub mod laurent;
pub mod rational;
pub mod s_domain;
pub mod sampling;
pub mod verify;
pub mod z_transform;

pub use epsilon::{
    enumerate_indices, epsilon_generalized, epsilon_product, kron_delta, sign_oracle,
    EpsilonValue, InjectionTable, MultiIndex,
};
pub use error::{Error, Result};
pub use laurent::{
    poly_add, poly_det, poly_eval, poly_mul, ratfn_arith, ratfn_eq, LaurentPoly, Monomial,
    RatOp, RationalFn,
};
pub use s_domain::{
    laplace_2d_closed, laplace_compact_3d, laplace_determinant, laplace_numeric,
    laplace_pointwise_exact, pole_zero_report_2d, r_sum, tustin_map, tustin_map_exact,
    LaplaceResult, PoleZeroReport, TustinParams,
};
pub use z_transform::{
    brute_force_ztransform, compact_form_3d, determinant_ztransform, heaviside, roc, s_sum,
    scale_constant, RocSpec, TransformResult,
};

pub use num_complex::Complex64;
pub use num_rational::BigRational;
pub use rational::ExactComplex;
