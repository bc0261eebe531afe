//! Exact arithmetic on grossone positional records.
//!
//! A value is a finite sum of rational digits times integer powers of the
//! infinite unit `G`, optionally extended with exponential terms such as
//! `2^(-G)`. On top of the arithmetic sit closed forms for series with an
//! explicitly fixed (finite or infinite) number of items, partial
//! zeta/eta sums at non-positive integer exponents, endpoint-explicit
//! polynomial integration, and the sin(x) Taylor-versus-product
//! coefficient comparison. Everything outside curve emission is exact;
//! no floating point enters any arithmetic path.
//!
//! The `parallel` feature (on by default) runs the batch check suites on
//! a rayon thread pool; disabling it keeps the same API with sequential
//! execution.

pub mod checks;
pub mod error;
pub mod expvalue;
pub mod gross;
pub mod integrals;
pub mod poly;
pub mod powersum;
pub mod rational;
pub mod series;
pub mod sinpoly;
pub mod textio;
pub mod zetaeta;

pub use error::{GrossError, Result};
pub use expvalue::{ExpTerm, ExpValue};
pub use gross::{GrossNumber, Parity};
pub use poly::PolyN;
pub use rational::ExactRational;
