use std::fmt;

use crate::error::{Error, Result};
use crate::qarith::Order;

/// The isoclass `M(ℓ, r)` of an indecomposable `U_n(q)`-module.
///
/// The shift is stored as its residue mod `n`; ordering is by `(ℓ, r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndecLabel {
    len: u32,
    shift: u32,
}

impl IndecLabel {
    pub fn new(len: u32, shift: i64, order: Order) -> Result<Self> {
        if !(1..=order.get()).contains(&len) {
            return Err(Error::domain(format!(
                "label length {len} outside 1..={order}"
            )));
        }
        Ok(IndecLabel {
            len,
            shift: order.residue(shift),
        })
    }

    pub(crate) fn from_parts(len: u32, shift: u32) -> Self {
        IndecLabel { len, shift }
    }

    /// The unit object `M(1, 0)`.
    pub fn unit() -> Self {
        IndecLabel { len: 1, shift: 0 }
    }

    /// Loewy length.
    #[inline]
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> u32 {
        self.len
    }

    #[inline]
    pub fn shift(&self) -> u32 {
        self.shift
    }

    /// Dimension of the module, which is its length.
    pub fn dim(&self) -> u32 {
        self.len
    }

    pub fn validate(&self, order: Order) -> Result<()> {
        if self.len == 0 || self.len > order.get() || self.shift >= order.get() {
            return Err(Error::domain(format!("{self} is not a label for order {order}")));
        }
        Ok(())
    }

    /// All `n²` labels, sorted.
    pub fn all(order: Order) -> Vec<IndecLabel> {
        let n = order.get();
        (1..=n)
            .flat_map(|len| (0..n).map(move |shift| IndecLabel { len, shift }))
            .collect()
    }

    /// Parses `M(l,r)`; the shift may be any integer and is reduced mod `n`.
    pub fn parse(text: &str, order: Order) -> Result<Self> {
        let bad = || Error::Parse(format!("expected a label like M(2,1), got {text:?}"));
        let body = text
            .trim()
            .strip_prefix("M(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (l, r) = body.split_once(',').ok_or_else(bad)?;
        let len: u32 = l.trim().parse().map_err(|_| bad())?;
        let shift: i64 = r.trim().parse().map_err(|_| bad())?;
        Self::new(len, shift, order)
    }
}

impl fmt::Display for IndecLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.len, self.shift)
    }
}

/// Serialized as its text form `M(l,r)`.
impl serde::Serialize for IndecLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `P_i J^r ↦ M(n - r, (n - r) - i + 1 mod n)`.
pub fn label_from_pj(i: u32, r: u32, order: Order) -> Result<IndecLabel> {
    let n = order.get();
    if !(1..=n).contains(&i) || r >= n {
        return Err(Error::domain(format!(
            "P_{i} J^{r} is not an indecomposable for order {n}"
        )));
    }
    let len = n - r;
    IndecLabel::new(len, len as i64 - i as i64 + 1, order)
}

/// Inverse of [`label_from_pj`]: returns `(i, r)` with `i ∈ 1..=n` (so `P_{n+1} = P_1`).
pub fn label_to_pj(label: IndecLabel, order: Order) -> Result<(u32, u32)> {
    label.validate(order)?;
    let n = order.get();
    let r = n - label.len;
    let i = order.residue(label.len as i64 - label.shift as i64); // i - 1
    Ok((i + 1, r))
}
