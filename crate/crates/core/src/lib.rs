//! Exact arithmetic for bi-periodic dual Fibonacci quaternions.
//!
//! The bi-periodic Fibonacci numbers `Fₙ` (multiplier `a` on even steps,
//! `b` on odd steps) feed quaternions `Qₙ = Fₙ + Fₙ₊₁i + Fₙ₊₂j + Fₙ₊₃k` and
//! dual quaternions `Q̃ₙ = Qₙ + εQₙ₊₁`. This crate generates them from the
//! recurrence and independently from their closed forms (Binet formulas in
//! `Q(sqrt D)`, generating functions as truncated Laurent series, Catalan
//! and Cassini identities), comparing the two routes with exact equality.
//!
//! - [`arith`]: big rationals, `Q(sqrt D)`, dual scalars
//! - [`quaternion`]: Hamilton and dual quaternions over a coefficient ring
//! - [`sequence`]: recurrence-based sequences with a two-sided cache
//! - [`binet`]: closed-form evaluation
//! - [`series`] and [`genfunc`]: Laurent series and generating functions
//! - [`identities`]: Catalan/Cassini checks and reports
//! - [`verify`]: suite runners used by the command-line tool

pub mod arith;
pub mod binet;
mod error;
pub mod genfunc;
pub mod identities;
pub mod quaternion;
pub mod report;
pub mod sequence;
pub mod series;
pub mod verify;

pub use arith::{parse_rational, rat, render_rational, DualScalar, QuadElem, Rational};
pub use error::{Error, Result};
pub use quaternion::{DualQuaternion, Quaternion};
pub use sequence::BiperiodicParams;
