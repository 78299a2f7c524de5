use serde::{Deserialize, Serialize};

use super::{render_checks, CheckMap, CheckResult};
use crate::error::{Error, Result};
use crate::greenring::{
    depth, depth_chain, indec_set, quotient_class, similar, tensor, GreenElement, IndecLabel,
};
use crate::qarith::Order;
use crate::taftmod::{decompose, module_of_q_direct};

/// The depth certificate for one order. Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthReport {
    pub n: u32,
    pub q_decomposition: GreenElement,
    pub q2_indec_count: usize,
    pub q3_indec_count: usize,
    #[serde(rename = "depth_Q")]
    pub depth_q: u32,
    pub d_ev: u32,
    pub checks: CheckMap,
}

impl DepthReport {
    pub fn all_passed(&self) -> bool {
        self.checks.values().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|(_, c)| !c.passed)
            .map(|(k, _)| k.clone())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("depth report n={}\n", self.n));
        out.push_str(&format!("  Q             = {}\n", self.q_decomposition));
        out.push_str(&format!("  |Indec(Q^2)|  = {}\n", self.q2_indec_count));
        out.push_str(&format!("  |Indec(Q^3)|  = {}\n", self.q3_indec_count));
        out.push_str(&format!("  depth(Q)      = {}\n", self.depth_q));
        out.push_str(&format!("  d_ev          = {}\n", self.d_ev));
        out.push_str(&render_checks(&self.checks));
        out
    }
}

/// Builds the report from a given class of `Q`. A depth other than 2 is a hard error.
pub fn depth_report_from_class(order: Order, q: &GreenElement) -> Result<DepthReport> {
    let n = order.get();
    let all = IndecLabel::all(order).len();
    let q2 = tensor(q, q, order)?;
    let q3 = tensor(&q2, q, order)?;
    let d = depth(q, order)?;
    let chain = depth_chain(q, 3, order)?;
    let mut checks = CheckMap::new();
    checks.insert(
        "q_not_similar_q2".into(),
        CheckResult::from_bool(!similar(q, &q2), format!(
            "|Indec(Q)| = {}, |Indec(Q^2)| = {}",
            q.num_labels(),
            q2.num_labels()
        )),
    );
    checks.insert(
        "q2_similar_q3".into(),
        CheckResult::from_bool(similar(&q2, &q3), format!(
            "|Indec(Q^2)| = {}, |Indec(Q^3)| = {}",
            q2.num_labels(),
            q3.num_labels()
        )),
    );
    let strict = chain[1].len() < chain[2].len() && chain[1].is_subset(&chain[2]);
    checks.insert(
        "p_chain".into(),
        CheckResult::from_bool(
            strict && chain[2] == chain[3] && chain[2].len() == all,
            format!(
                "|Indec(p_1)| = {}, |Indec(p_2)| = {}, |Indec(p_3)| = {}",
                chain[1].len(),
                chain[2].len(),
                chain[3].len()
            ),
        ),
    );
    checks.insert(
        "not_normal".into(),
        CheckResult::from_bool(
            !similar(q, &GreenElement::unit()),
            "Q is not similar to the unit, so depth 0 is excluded",
        ),
    );
    checks.insert(
        "q_square_full_support".into(),
        CheckResult::from_bool(indec_set(&q2).len() == all, format!("{} of {all} labels", q2.num_labels())),
    );
    if d != 2 {
        return Err(Error::TheoremViolation(format!(
            "depth of Q is {d}, expected 2 (n = {n})"
        )));
    }
    Ok(DepthReport {
        n,
        q_decomposition: q.clone(),
        q2_indec_count: q2.num_labels(),
        q3_indec_count: q3.num_labels(),
        depth_q: d,
        d_ev: 2 * d + 2,
        checks,
    })
}

/// Decomposes the formula-built `Q`, checks it against the predicted class and
/// certifies depth 2 and minimum even depth 6.
pub fn depth_certificate(order: Order) -> Result<DepthReport> {
    let explicit = decompose(&module_of_q_direct(order))?;
    let mut report = depth_report_from_class(order, &explicit)?;
    let predicted = quotient_class(order);
    report.checks.insert(
        "q_class_matches_prediction".into(),
        CheckResult::from_bool(
            explicit == predicted,
            format!("{} constituents", explicit.num_labels()),
        ),
    );
    Ok(report)
}
