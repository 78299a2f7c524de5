use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::IndecLabel;

/// A module class in the positive quadrant of the Green ring: a finite
/// combination of labels with positive multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GreenElement {
    terms: BTreeMap<IndecLabel, u64>,
}

impl GreenElement {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::from_label(IndecLabel::unit())
    }

    pub fn from_label(label: IndecLabel) -> Self {
        let mut e = Self::new();
        e.add_label(label, 1);
        e
    }

    pub fn from_counts(counts: impl IntoIterator<Item = (IndecLabel, u64)>) -> Self {
        let mut e = Self::new();
        for (l, m) in counts {
            e.add_label(l, m);
        }
        e
    }

    pub fn add_label(&mut self, label: IndecLabel, mult: u64) {
        if mult > 0 {
            *self.terms.entry(label).or_insert(0) += mult;
        }
    }

    /// `self += k · other`.
    pub fn add_scaled(&mut self, other: &GreenElement, k: u64) {
        for (l, m) in other.iter() {
            self.add_label(l, m * k);
        }
    }

    pub fn multiplicity(&self, label: IndecLabel) -> u64 {
        self.terms.get(&label).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct constituents.
    pub fn num_labels(&self) -> usize {
        self.terms.len()
    }

    /// Total dimension `Σ mult · ℓ`.
    pub fn dim(&self) -> u64 {
        self.terms.iter().map(|(l, m)| l.len() as u64 * m).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (IndecLabel, u64)> + '_ {
        self.terms.iter().map(|(l, m)| (*l, *m))
    }

    pub fn labels(&self) -> impl Iterator<Item = IndecLabel> + '_ {
        self.terms.keys().copied()
    }

    /// Same labels, every multiplicity set to one.
    pub fn support_element(&self) -> GreenElement {
        GreenElement::from_counts(self.labels().map(|l| (l, 1)))
    }

    pub fn to_counts(&self) -> Vec<LabelCount> {
        self.iter()
            .map(|(l, m)| LabelCount {
                l: l.len(),
                r: l.shift(),
                mult: m,
            })
            .collect()
    }
}

impl fmt::Display for GreenElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (l, m)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if m > 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// One entry of the JSON form `[{"l": .., "r": .., "mult": ..}, ..]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelCount {
    pub l: u32,
    pub r: u32,
    pub mult: u64,
}

impl Serialize for GreenElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_counts().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GreenElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let counts = Vec::<LabelCount>::deserialize(d)?;
        if let Some(bad) = counts.iter().find(|c| c.l == 0) {
            return Err(serde::de::Error::custom(format!(
                "label length must be positive, got l = {}",
                bad.l
            )));
        }
        Ok(GreenElement::from_counts(
            counts
                .into_iter()
                .map(|c| (IndecLabel::from_parts(c.l, c.r), c.mult)),
        ))
    }
}
