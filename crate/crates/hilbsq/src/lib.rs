//! Exact verification toolkit for the geometry of Hilbert squares of ADE
//! surface singularities.
//!
//! The crate mechanizes a family of explicit computations: wreath-product
//! invariant rings and their relation ideals, blow-up chart equations,
//! binomial-identity certificates, Mukai-flop walks on central-fiber
//! diagrams, canonical Poisson algebra on formal neighborhoods, and the
//! sub-subregular Slodowy slice of sl4. Every check is exact (arbitrary
//! precision rationals, no floating point) and emits a structured
//! verification report.
//!
//! See the `examples/` directory for one runnable entry point per
//! capability, or the `hilbsq` binary for the `verify`/`flop` subcommands.

pub mod exact;
pub mod flop;
pub mod invariants;
pub mod poisson;
pub mod report;
pub mod roots;
pub mod runner;
pub mod slodowy;
pub mod wz;
