//! Exact arithmetic kernel: rationals, sparse multivariate polynomials,
//! cyclotomic exponent classes, truncated series, symbolic matrices, and a
//! small Buchberger engine.

pub mod cyc;
pub mod groebner;
pub mod matrix;
pub mod order;
pub mod poly;
pub mod rat;
pub mod series;
pub mod vars;

pub use cyc::CycScalar;
pub use groebner::{GroebnerError, Ideal, DEFAULT_BUDGET};
pub use matrix::SymbolicMatrix;
pub use order::MonomialOrder;
pub use poly::MPoly;
pub use rat::{binomial, pow2, qbin, qi, qr, Q};
pub use series::{SeriesError, TruncSeries};
pub use vars::{Registry, VarSet};
