//! Exact arithmetic over `Q(ζ_n)`, q-combinatorics and exact linear algebra.

mod cyclo;
mod matrix;
mod poly;
mod qcomb;

use std::fmt;

use crate::error::{Error, Result};

pub use cyclo::CycloScalar;
pub use matrix::{row_reduce, subspace_quotient, CycloMatrix, RowEchelon, SubspaceQuotient};
pub use poly::{cyclotomic_poly, euler_phi};
pub use qcomb::{q_binomial, q_factorial, q_int, QBinomialTable};

/// Base-field rationals, always held in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// The order `n ≥ 2` of the distinguished primitive root of unity `q = ζ_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Order(u32);

impl Order {
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidOrder {
                order: n as u64,
                min: 2,
            });
        }
        Ok(Order(n))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn usize(self) -> usize {
        self.0 as usize
    }

    /// Reduces an arbitrary integer to its residue in `0..n`.
    #[inline]
    pub fn residue(self, k: i64) -> u32 {
        k.rem_euclid(self.0 as i64) as u32
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<u32> for Order {
    type Error = Error;

    fn try_from(n: u32) -> Result<Self> {
        Order::new(n)
    }
}
