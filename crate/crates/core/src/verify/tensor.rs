use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{CheckResult, EXPLICIT_LIMIT};
use crate::error::{Error, Result};
use crate::greenring::{quotient_class, tensor, tensor_labels, tensor_rule, IndecLabel, TensorRule};
use crate::qarith::Order;
use crate::taftmod::{decompose, module_of_q_direct, standard_module, tensor_module};

/// Pairs examined when the full sweep is too large.
pub const SAMPLED_PAIRS: usize = 400;
const SAMPLE_SEED: u64 = 0x7af7_d0b1e;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub n: u32,
    pub exhaustive: bool,
    pub pairs_checked: usize,
    pub rule_counts: BTreeMap<String, usize>,
    pub failures: Vec<String>,
    pub commutative: bool,
    /// Explicit `Q ⊗ Q` against the Green ring, when requested.
    pub q_square_agrees: Option<bool>,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.commutative && self.q_square_agrees != Some(false)
    }

    pub fn to_check(&self) -> CheckResult {
        let mut detail = format!(
            "{} {} pairs, {} failures",
            if self.exhaustive { "all" } else { "sampled" },
            self.pairs_checked,
            self.failures.len()
        );
        if let Some(first) = self.failures.first() {
            detail.push_str(&format!("; first: {first}"));
        }
        if !self.commutative {
            detail.push_str("; rulebook is not commutative");
        }
        if self.q_square_agrees == Some(false) {
            detail.push_str("; explicit Q⊗Q disagrees with the Green ring");
        }
        CheckResult::from_bool(self.passed(), detail)
    }
}

fn rule_name(rule: TensorRule) -> &'static str {
    match rule {
        TensorRule::Simple => "simple",
        TensorRule::Projective => "projective",
        TensorRule::Ladder => "ladder",
        TensorRule::Overflow => "overflow",
    }
}

/// The label pairs to examine: all of them up to the explicit limit, otherwise a
/// seeded sample that keeps at least one pair from every rule.
fn pairs(order: Order) -> Result<(bool, Vec<(IndecLabel, IndecLabel)>)> {
    let labels = IndecLabel::all(order);
    let all: Vec<_> = labels
        .iter()
        .flat_map(|&x| labels.iter().map(move |&y| (x, y)))
        .collect();
    if order.get() <= EXPLICIT_LIMIT || all.len() <= SAMPLED_PAIRS {
        return Ok((true, all));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ order.get() as u64);
    let mut chosen: Vec<_> = all.choose_multiple(&mut rng, SAMPLED_PAIRS).copied().collect();
    let mut seen = BTreeSet::new();
    for &(x, y) in &chosen {
        seen.insert(tensor_rule(x, y, order)?);
    }
    for &(x, y) in &all {
        if seen.insert(tensor_rule(x, y, order)?) {
            chosen.push((x, y));
        }
    }
    chosen.sort();
    Ok((false, chosen))
}

/// Compares explicit decompositions of `standard(x) ⊗ standard(y)` with the rulebook.
pub fn crosscheck_tensor_rules(order: Order, use_explicit_q: bool) -> Result<CrosscheckReport> {
    if use_explicit_q && order.get() > EXPLICIT_LIMIT {
        return Err(Error::domain(format!(
            "explicit Q⊗Q is limited to n <= {EXPLICIT_LIMIT}"
        )));
    }
    let (exhaustive, pairs) = pairs(order)?;
    let outcomes: Vec<(TensorRule, Option<String>)> = pairs
        .par_iter()
        .map(|&(x, y)| -> Result<(TensorRule, Option<String>)> {
            let rule = tensor_rule(x, y, order)?;
            let explicit = decompose(&tensor_module(
                &standard_module(x, order)?,
                &standard_module(y, order)?,
            )?)?;
            let symbolic = tensor_labels(x, y, order)?;
            let failure = (explicit != symbolic)
                .then(|| format!("{x} ⊗ {y}: explicit {explicit}, rulebook {symbolic}"));
            Ok((rule, failure))
        })
        .collect::<Result<_>>()?;
    let mut rule_counts = BTreeMap::new();
    let mut failures = Vec::new();
    for (rule, failure) in outcomes {
        *rule_counts.entry(rule_name(rule).to_string()).or_insert(0) += 1;
        failures.extend(failure);
    }
    let labels = IndecLabel::all(order);
    let mut commutative = true;
    for &x in &labels {
        for &y in &labels {
            commutative &= tensor_labels(x, y, order)? == tensor_labels(y, x, order)?;
        }
    }
    let q_square_agrees = if use_explicit_q {
        let q = module_of_q_direct(order);
        let explicit = decompose(&tensor_module(&q, &q)?)?;
        let class = quotient_class(order);
        Some(explicit == tensor(&class, &class, order)?)
    } else {
        None
    };
    Ok(CrosscheckReport {
        n: order.get(),
        exhaustive,
        pairs_checked: pairs.len(),
        rule_counts,
        failures,
        commutative,
        q_square_agrees,
    })
}
