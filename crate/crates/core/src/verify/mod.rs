//! The theorem pipeline.
//!
//! Every check produces a [`CheckResult`] instead of failing fast, so a single
//! run reports everything that went wrong. The one exception is a depth other
//! than 2, which [`depth_certificate`] raises as [`Error::TheoremViolation`].

mod lemmas;
mod report;
mod tensor;
mod theorems;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qarith::Order;

pub use lemmas::{
    check_basis_q, check_corollary_q, check_indec_from_basis, check_ladder_closed_forms,
    check_qbinom_vanishing,
};
pub use report::{depth_certificate, depth_report_from_class, DepthReport};
pub use tensor::{crosscheck_tensor_rules, CrosscheckReport};
pub use theorems::{
    check_dual_construction, decqq_witnesses, verify_decqq, verify_ksdec, DecQQReport, Witness,
    WitnessCase,
};

/// Largest order at which explicit `Q ⊗ Q` and the double are built.
pub const EXPLICIT_LIMIT: u32 = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    pub fn pass(detail: impl Into<String>) -> Self {
        CheckResult {
            passed: true,
            detail: detail.into(),
        }
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        CheckResult {
            passed: false,
            detail: detail.into(),
        }
    }

    pub fn from_bool(passed: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            passed,
            detail: detail.into(),
        }
    }

    /// Turns an error raised while checking into a failed check.
    pub fn from_result(r: Result<CheckResult>) -> Self {
        r.unwrap_or_else(|e| CheckResult::fail(format!("error: {e}")))
    }
}

pub type CheckMap = BTreeMap<String, CheckResult>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Build explicit matrices for `Q ⊗ Q`, the double and every label pair.
    pub oracle: bool,
}

impl VerifyOptions {
    /// Oracle on exactly when it is affordable.
    pub fn default_for(order: Order) -> Self {
        VerifyOptions {
            oracle: order.get() <= EXPLICIT_LIMIT,
        }
    }
}

/// Result of the full suite for one order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n: u32,
    pub oracle: bool,
    pub checks: CheckMap,
    pub depth: DepthReport,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.values().all(|c| c.passed) && self.depth.all_passed()
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .checks
            .iter()
            .filter(|(_, c)| !c.passed)
            .map(|(k, _)| k.clone())
            .collect();
        out.extend(self.depth.failures().into_iter().map(|k| format!("depth.{k}")));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "verify n={} oracle={}\n",
            self.n,
            if self.oracle { "on" } else { "off" }
        );
        out.push_str(&render_checks(&self.checks));
        out.push('\n');
        out.push_str(&self.depth.to_text());
        out
    }
}

pub(crate) fn render_checks(checks: &CheckMap) -> String {
    let width = checks.keys().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for (name, c) in checks {
        out.push_str(&format!(
            "  {:<width$}  {}  {}\n",
            name,
            if c.passed { "PASS" } else { "FAIL" },
            c.detail
        ));
    }
    out
}

fn check_oracle(order: Order, opts: VerifyOptions) -> Result<()> {
    if opts.oracle && order.get() > EXPLICIT_LIMIT {
        return Err(Error::domain(format!(
            "explicit oracle is limited to n <= {EXPLICIT_LIMIT}, got n = {order}"
        )));
    }
    Ok(())
}

/// Runs every check for one order.
pub fn verify_all(order: Order, opts: VerifyOptions) -> Result<VerifyReport> {
    check_oracle(order, opts)?;
    let n = order.get();
    type Job = Box<dyn Fn() -> Vec<(String, CheckResult)> + Send + Sync>;
    let mut jobs: Vec<Job> = vec![
        Box::new(move || {
            vec![(
                "qbinom_vanishing".into(),
                CheckResult::from_result(check_qbinom_vanishing(order, 3 * n)),
            )]
        }),
        Box::new(move || {
            vec![
                ("ladder_closed_forms".into(), CheckResult::from_result(check_ladder_closed_forms(order))),
                ("basis_q".into(), CheckResult::from_result(check_basis_q(order))),
                ("indec_from_basis".into(), CheckResult::from_result(check_indec_from_basis(order))),
            ]
        }),
        Box::new(move || {
            vec![
                ("corollary_q".into(), CheckResult::from_result(check_corollary_q(order))),
                ("ksdec".into(), CheckResult::from_result(verify_ksdec(order, false))),
            ]
        }),
        Box::new(move || {
            let r = verify_decqq(order, opts.oracle);
            let mut out = Vec::new();
            match r {
                Ok(rep) => {
                    out.push(("decqq_green".into(), rep.green.clone()));
                    out.push(("decqq_witnesses".into(), rep.witnesses.clone()));
                    if let Some(e) = rep.explicit {
                        out.push(("decqq_explicit".into(), e));
                    }
                }
                Err(e) => out.push(("decqq".into(), CheckResult::fail(format!("error: {e}")))),
            }
            out
        }),
    ];
    if opts.oracle {
        jobs.push(Box::new(move || {
            let r = crosscheck_tensor_rules(order, true).map(|rep| rep.to_check());
            vec![("tensor_rules".into(), CheckResult::from_result(r))]
        }));
        jobs.push(Box::new(move || {
            vec![
                ("dual_construction".into(), CheckResult::from_result(check_dual_construction(order))),
                ("ksdec_double".into(), CheckResult::from_result(verify_ksdec(order, true))),
            ]
        }));
    }
    if n == 2 {
        jobs.push(Box::new(theorems::sweedler_checks));
    }
    use rayon::prelude::*;
    let checks: CheckMap = jobs.par_iter().flat_map(|job| job()).collect();
    let depth = depth_certificate(order)?;
    Ok(VerifyReport {
        n,
        oracle: opts.oracle,
        checks,
        depth,
    })
}
