//! Exact perturbation series for the ground state of the spheroidal wave
//! equation, together with an independent spectral solver used to
//! cross-validate every series coefficient.
//!
//! The angular equation treated here is
//!
//! ```text
//! d/dx [ (1 - x^2) T'(x) ] + ( E + a x^2 - m^2 / (1 - x^2) ) T(x) = 0
//! ```
//!
//! on -1 < x < 1, with integer order `m >= 0` and coupling `a`. At `a = 0`
//! the ground state of the `m`-sector is the associated Legendre function
//! `P_m^m` with eigenvalue `m (m + 1)`.
//!
//! Substituting `x = cos(theta)` and `Psi = T * sin^(1/2)(theta)` turns the
//! equation into a Schroedinger problem whose superpotential admits a power
//! series in `a`. Each order of that series is a polynomial with rational
//! coefficients, so the whole hierarchy can be solved in exact arithmetic.
//! The crate is organized around that fact:
//!
//! - [`exact`]: arbitrary-precision rationals, binomial coefficients and
//!   double factorials.
//! - [`upoly`]: polynomials in `u = sin^2(theta)` and the three operations
//!   the hierarchy needs (the first-order linear operator, the weighted
//!   product, the weighted integral).
//! - [`engine`]: the order-by-order triangular solve, eigenvalue series
//!   evaluation, and reconstruction of the ground-state wavefunction.
//! - [`identities`]: closed forms and recurrences for the binomial sums
//!   that arise when the low orders are reduced by hand; each is checked
//!   against direct summation.
//! - [`oracle`]: an independent Legendre-Galerkin discretization solved by
//!   Sturm bisection, sharing no code with the series engine.

pub mod engine;
pub mod exact;
pub mod identities;
pub mod oracle;
pub mod upoly;

pub use engine::{GroundState, OrderTerm, PerturbationSeries};
pub use exact::Rational;
pub use upoly::UPoly;
