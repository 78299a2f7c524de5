//! Exact computations for the Taft algebra `U_n(q)` sitting inside its Drinfeld
//! double `D(U_n(q))`.
//!
//! The crate is organised bottom-up:
//!
//! - [`qarith`]: the cyclotomic field `Q(ζ_n)`, q-integers and Gauss polynomials,
//!   and exact sparse linear algebra.
//! - [`greenring`]: indecomposable labels `M(ℓ, r)`, the tensor rulebook of the
//!   Green ring, similarity and depth.
//! - [`taftmod`]: explicit right modules given by the matrices of `b` and `a`,
//!   tensor products through the coproduct and a Krull-Schmidt decomposer.
//! - [`double`]: PBW normal forms in `D(U_n(q))` and the quotient module
//!   `Q = D / R⁺D` built from the presentation alone.
//! - [`verify`]: the pipeline that cross-checks all of the above and produces a
//!   depth certificate.

pub mod double;
pub mod error;
pub mod greenring;
pub mod qarith;
pub mod taftmod;
pub mod verify;

pub use error::{Error, Result};
pub use qarith::Order;
