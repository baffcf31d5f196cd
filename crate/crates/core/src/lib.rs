//! Zero-density exponent bounds for the Riemann zeta function.
//!
//! Two halves:
//!
//! * [`exponent`]: an exact rational calculus for density exponents
//!   B(η) = A(1 - η), built from certified bounds on the Lindelöf function
//!   μ(α). It evaluates the bounds, finds where they cross, computes the
//!   lower envelope of a family, and reads off density-hypothesis ranges,
//!   uniform suprema and prime-gap exponents.
//! * [`numerics`]: a double-precision zeta engine (Euler–Maclaurin and
//!   Riemann–Siegel) that checks the classical inputs numerically: zero
//!   counts against the Riemann–von Mangoldt formula and growth of
//!   |ζ(σ + it)|.
//!
//! [`claims`] re-derives the checkable statements about these bounds and
//! [`cli`] drives everything from the command line.

pub mod claims;
pub mod cli;
pub mod error;
pub mod exponent;
pub mod numerics;
pub mod plot;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Rational;
