use std::collections::BTreeSet;

use serde::Serialize;

use super::{CheckResult, EXPLICIT_LIMIT};
use crate::double::{build_rplus_d, quotient_module_from_double};
use crate::error::{Error, Result};
use crate::greenring::{indec_set, quotient_class, tensor, tensor_labels, IndecLabel};
use crate::qarith::Order;
use crate::taftmod::{decompose, module_of_q_direct, standard_module, tensor_module};

fn order2() -> Order {
    Order::new(2).expect("2 is a valid order")
}

/// `decompose(Q)` equals the predicted class, which has `2n - 1` constituents
/// and dimension `n²`. With `from_double`, `Q` is built from the presentation.
pub fn verify_ksdec(order: Order, from_double: bool) -> Result<CheckResult> {
    let n = order.get();
    let module = if from_double {
        quotient_module_from_double(order)?.0
    } else {
        module_of_q_direct(order)
    };
    let got = decompose(&module)?;
    let want = quotient_class(order);
    let passed = got == want
        && got.num_labels() == 2 * n as usize - 1
        && got.dim() == (n * n) as u64;
    let detail = if passed {
        format!("{} constituents: {got}", got.num_labels())
    } else {
        format!("decomposition {got}, expected {want}")
    };
    Ok(CheckResult::from_bool(passed, detail))
}

/// `R⁺D` has dimension `n⁴ - n²` and the double-built `Q` equals the formula-built one.
pub fn check_dual_construction(order: Order) -> Result<CheckResult> {
    let n = order.usize();
    let rank = build_rplus_d(order)?.rows();
    let (from_double, _) = quotient_module_from_double(order)?;
    let same = from_double == module_of_q_direct(order);
    Ok(CheckResult::from_bool(
        same && rank == n.pow(4) - n * n,
        format!(
            "dim R+D = {rank} of {}; double-built Q {} the formula-built Q",
            n.pow(4),
            if same { "equals" } else { "differs from" }
        ),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum WitnessCase {
    /// `y = n-1` or `x = y+1`: `M(x,y)` is itself a constituent of `Q`.
    Summand,
    /// `x = n`: two copies of the projective `M(n, n-1)`.
    Projective,
    /// `x ≤ y ≤ n-2`
    Below,
    /// `y+2 ≤ x ≤ n-1`
    Above,
}

/// A pair of constituents of `Q` whose product should contain `target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub case: WitnessCase,
    pub target: IndecLabel,
    pub left: IndecLabel,
    pub right: IndecLabel,
}

/// The witness pairs for every target `M(x, y)` and every case whose hypothesis holds.
pub fn decqq_witnesses(order: Order) -> Result<Vec<Witness>> {
    let n = order.get();
    let label = |l: u32, r: u32| IndecLabel::new(l, r as i64, order);
    let mut out = Vec::new();
    for target in IndecLabel::all(order) {
        let (x, y) = (target.len(), target.shift());
        let mut push = |case, left, right| {
            out.push(Witness {
                case,
                target,
                left,
                right,
            })
        };
        if y == n - 1 || x == y + 1 {
            push(WitnessCase::Summand, target, IndecLabel::unit());
        }
        if x == n {
            push(WitnessCase::Projective, label(n, n - 1)?, label(n, n - 1)?);
        }
        if x <= y && y + 2 <= n {
            let k = n + x - y - 2;
            let l = n - y - 1;
            push(WitnessCase::Below, label(k, n - 1)?, label(l, n - 1)?);
        }
        if y + 2 <= x && x < n {
            let k = n - y - 2;
            let l = n + y - x + 1;
            push(WitnessCase::Above, label(k, n - 1)?, label(l, l - 1)?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecQQReport {
    pub n: u32,
    pub green: CheckResult,
    pub explicit: Option<CheckResult>,
    pub witnesses: CheckResult,
}

impl DecQQReport {
    pub fn passed(&self) -> bool {
        self.green.passed
            && self.witnesses.passed
            && self.explicit.as_ref().is_none_or(|c| c.passed)
    }
}

fn full_support(found: &BTreeSet<IndecLabel>, order: Order) -> CheckResult {
    let total = IndecLabel::all(order).len();
    CheckResult::from_bool(
        found.len() == total,
        format!("{} of {total} labels", found.len()),
    )
}

/// Every indecomposable occurs in `Q ⊗ Q`: in the Green ring, explicitly
/// (when `explicit`), and through the printed witness pairs.
pub fn verify_decqq(order: Order, explicit: bool) -> Result<DecQQReport> {
    if explicit && order.get() > EXPLICIT_LIMIT {
        return Err(Error::domain(format!(
            "explicit Q⊗Q is limited to n <= {EXPLICIT_LIMIT}"
        )));
    }
    let class = quotient_class(order);
    let green = full_support(&indec_set(&tensor(&class, &class, order)?), order);
    let explicit = if explicit {
        let q = module_of_q_direct(order);
        let qq = decompose(&tensor_module(&q, &q)?)?;
        Some(full_support(&indec_set(&qq), order))
    } else {
        None
    };
    let constituents = indec_set(&class);
    let witnesses = decqq_witnesses(order)?;
    let mut covered = BTreeSet::new();
    let mut failures = Vec::new();
    for w in &witnesses {
        let in_q = constituents.contains(&w.left) && constituents.contains(&w.right);
        let hit = tensor_labels(w.left, w.right, order)?.multiplicity(w.target) > 0;
        if in_q && hit {
            covered.insert(w.target);
        } else {
            failures.push(format!("{:?} {} ⊗ {} ↛ {}", w.case, w.left, w.right, w.target));
        }
    }
    let all = IndecLabel::all(order).len();
    let passed = failures.is_empty() && covered.len() == all;
    let mut detail = format!("{} witness pairs cover {} of {all} labels", witnesses.len(), covered.len());
    if let Some(f) = failures.first() {
        detail.push_str(&format!("; first failure: {f}"));
    }
    Ok(DecQQReport {
        n: order.get(),
        green,
        explicit,
        witnesses: CheckResult::from_bool(passed, detail),
    })
}

/// Exact facts about the four-dimensional case.
pub(crate) fn sweedler_checks() -> Vec<(String, CheckResult)> {
    let o = order2();
    let mut out = Vec::new();
    let basis = quotient_module_from_double(o).map(|(m, tags)| {
        let names: Vec<String> = tags.iter().map(|t| t.to_string()).collect();
        CheckResult::from_bool(
            m.dim() == 4 && names == ["c^0 d^0", "c^1 d^0", "c^0 d^1", "c^1 d^1"],
            format!("dim {} on cosets of {}", m.dim(), names.join(", ")),
        )
    });
    out.push(("sweedler_q_basis".to_string(), CheckResult::from_result(basis)));
    let q = decompose(&module_of_q_direct(o)).map(|d| {
        let want = ["M(1,0)", "M(1,1)", "M(2,1)"].map(|s| IndecLabel::parse(s, o).unwrap());
        CheckResult::from_bool(
            d.labels().eq(want.iter().copied()) && d.iter().all(|(_, m)| m == 1),
            format!("Q = {d}"),
        )
    });
    out.push(("sweedler_q_decomposition".to_string(), CheckResult::from_result(q)));
    let p2 = (|| -> Result<CheckResult> {
        let p = standard_module(IndecLabel::parse("M(2,1)", o)?, o)?;
        let d = decompose(&tensor_module(&p, &p)?)?;
        Ok(CheckResult::from_bool(
            d.to_string() == "M(2,0) + M(2,1)",
            format!("P2 ⊗ P2 = {d}"),
        ))
    })();
    out.push(("sweedler_p2_square".to_string(), CheckResult::from_result(p2)));
    let qq = (|| -> Result<CheckResult> {
        let q = module_of_q_direct(o);
        let d = decompose(&tensor_module(&q, &q)?)?;
        Ok(CheckResult::from_bool(d.num_labels() == 4, format!("Q ⊗ Q = {d}")))
    })();
    out.push(("sweedler_qq_support".to_string(), CheckResult::from_result(qq)));
    out
}
