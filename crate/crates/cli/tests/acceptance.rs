//! Acceptance criteria 1 to 8, run in sequence with their runtime bounds.
//!
//! Prints one `PASS`/`FAIL` line per criterion and exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use serde_json::Value;
use taft_depth::double::{build_rplus_d, DoubleElement, Monomial};
use taft_depth::greenring::{
    depth, depth_chain, indec_set, p_m, quotient_class, similar, tensor, GreenElement, IndecLabel,
};
use taft_depth::qarith::{CycloMatrix, CycloScalar};
use taft_depth::taftmod::{decompose, direct_sum, module_of_q_direct, standard_module, tensor_module, TaftModule};
use taft_depth::verify::{
    check_basis_q, check_corollary_q, check_dual_construction, check_indec_from_basis,
    check_ladder_closed_forms, check_qbinom_vanishing, crosscheck_tensor_rules, decqq_witnesses,
    depth_report_from_class, verify_decqq,
};
use taft_depth::Order;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn ord(n: u32) -> Order {
    Order::new(n).expect("valid order")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn check_field(v: &Value, key: &str, detail: &str) -> Result<(), String> {
    let c = &v["checks"][key];
    ensure(c["passed"] == true && c["detail"] == detail, || format!("{key}: {c}"))
}

fn criterion_1() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_taft-depth"))
        .args(["verify", "--n", "2"])
        .output()
        .map_err(err)?;
    ensure(out.status.success(), || {
        format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr))
    })?;
    let v: Value = serde_json::from_slice(&out.stdout).map_err(err)?;
    check_field(&v, "sweedler_q_basis", "dim 4 on cosets of c^0 d^0, c^1 d^0, c^0 d^1, c^1 d^1")?;
    check_field(&v, "sweedler_q_decomposition", "Q = M(1,0) + M(1,1) + M(2,1)")?;
    check_field(&v, "sweedler_p2_square", "P2 ⊗ P2 = M(2,0) + M(2,1)")?;
    check_field(&v, "decqq_explicit", "4 of 4 labels")?;
    let q: Vec<(u64, u64, u64)> = v["depth"]["q_decomposition"]
        .as_array()
        .ok_or("q_decomposition is not a list")?
        .iter()
        .map(|c| (c["l"].as_u64().unwrap_or(0), c["r"].as_u64().unwrap_or(0), c["mult"].as_u64().unwrap_or(0)))
        .collect();
    ensure(q == [(1, 0, 1), (1, 1, 1), (2, 1, 1)], || format!("Q = {q:?}"))?;
    ensure(v["depth"]["depth_Q"] == 2 && v["depth"]["d_ev"] == 6, || "depth fields".into())?;
    let failed: Vec<_> = v["checks"]
        .as_object()
        .into_iter()
        .flatten()
        .filter(|(_, c)| c["passed"] != true)
        .map(|(k, _)| k.clone())
        .collect();
    ensure(failed.is_empty(), || format!("failed checks {failed:?}"))?;
    Ok("Q = M(1,0) + M(1,1) + M(2,1) on cosets of 1, c, d, cd; P2⊗P2 = P1+P2; Q⊗Q has 4 labels".into())
}

fn criterion_2() -> Outcome {
    for n in 2..=6 {
        let o = ord(n);
        let got = decompose(&module_of_q_direct(o)).map_err(err)?;
        // M(ℓ, ℓ-1) for ℓ = 1..n together with M(ℓ', n-1) for ℓ' = 1..n-1
        let mut want = GreenElement::new();
        for l in 1..=n {
            want.add_label(IndecLabel::new(l, l as i64 - 1, o).map_err(err)?, 1);
        }
        for l in 1..n {
            want.add_label(IndecLabel::new(l, n as i64 - 1, o).map_err(err)?, 1);
        }
        ensure(got == want && got == quotient_class(o), || format!("n={n}: {got}"))?;
        ensure(got.num_labels() == 2 * n as usize - 1, || format!("n={n}: {} labels", got.num_labels()))?;
        ensure(got.iter().all(|(_, m)| m == 1), || format!("n={n}: repeated constituent"))?;
        ensure(got.dim() == (n * n) as u64, || format!("n={n}: dim {}", got.dim()))?;
    }
    Ok("n=2..6: 2n-1 distinct constituents of total dimension n²".into())
}

fn criterion_3() -> Outcome {
    for n in 2..=5 {
        let o = ord(n);
        let c = check_dual_construction(o).map_err(err)?;
        ensure(c.passed, || format!("n={n}: {}", c.detail))?;
        let want = format!("dim R+D = {} of {}", n.pow(4) - n * n, n.pow(4));
        ensure(c.detail.starts_with(&want), || format!("n={n}: {}", c.detail))?;
    }
    Ok("n=2..5: double-built Q equals formula-built Q, dim R+D = n⁴-n²".into())
}

fn criterion_4() -> Outcome {
    let mut total = 0;
    for n in 2..=5 {
        let r = crosscheck_tensor_rules(ord(n), false).map_err(err)?;
        ensure(r.exhaustive && r.pairs_checked == (n as usize).pow(4), || {
            format!("n={n}: {} pairs", r.pairs_checked)
        })?;
        ensure(r.failures.is_empty(), || format!("n={n}: {}", r.failures[0]))?;
        ensure(r.commutative, || format!("n={n}: not commutative"))?;
        total += r.pairs_checked;
    }
    Ok(format!("n=2..5: {total} ordered pairs match the rulebook and commute"))
}

fn criterion_5() -> Outcome {
    for n in 2..=8 {
        let o = ord(n);
        let r = verify_decqq(o, false).map_err(err)?;
        ensure(r.passed(), || format!("n={n}: {} / {}", r.green.detail, r.witnesses.detail))?;
        let class = quotient_class(o);
        let all = IndecLabel::all(o).len();
        ensure(indec_set(&tensor(&class, &class, o).map_err(err)?).len() == all && all == (n * n) as usize, || {
            format!("n={n}: Q⊗Q misses labels")
        })?;
        ensure(!decqq_witnesses(o).map_err(err)?.is_empty(), || format!("n={n}: no witnesses"))?;
    }
    Ok("n=2..8: Q⊗Q contains all n² labels and every witness pair hits its target".into())
}

fn criterion_6() -> Outcome {
    for n in 2..=8 {
        let o = ord(n);
        let q = quotient_class(o);
        let d = depth(&q, o).map_err(err)?;
        ensure(d == 2, || format!("n={n}: depth {d}"))?;
        let chain = depth_chain(&q, 3, o).map_err(err)?;
        ensure(
            chain[1].is_subset(&chain[2]) && chain[1] != chain[2] && chain[2] == chain[3],
            || format!("n={n}: chain sizes {} {} {}", chain[1].len(), chain[2].len(), chain[3].len()),
        )?;
        let r = depth_report_from_class(o, &q).map_err(err)?;
        ensure(r.d_ev == 6 && r.all_passed(), || format!("n={n}: {:?}", r.failures()))?;
    }
    Ok("n=2..8: depth(Q) = 2, d_ev = 6, Indec(p1) ⊊ Indec(p2) = Indec(p3)".into())
}

fn criterion_7() -> Outcome {
    for n in 2..=12 {
        let c = check_qbinom_vanishing(ord(n), 3 * n).map_err(err)?;
        ensure(c.passed, || format!("n={n}: {}", c.detail))?;
    }
    for n in 2..=6 {
        let o = ord(n);
        for (name, c) in [
            ("ladder closed forms", check_ladder_closed_forms(o)),
            ("basis", check_basis_q(o)),
            ("ladder submodules", check_indec_from_basis(o)),
            ("[Q] expansion", check_corollary_q(o)),
        ] {
            let c = c.map_err(err)?;
            ensure(c.passed, || format!("n={n} {name}: {}", c.detail))?;
        }
    }
    Ok("vanishing sweep n≤12, closed forms, basis, submodules and [Q] expansion n≤6".into())
}

fn scalar(o: Order, coeffs: &[(i64, i64)]) -> CycloScalar {
    coeffs.iter().enumerate().fold(CycloScalar::zero(o), |acc, (k, &(p, d))| {
        let term = CycloScalar::from_integer(o, p)
            .checked_div(&CycloScalar::from_integer(o, d))
            .expect("nonzero denominator");
        acc + term * CycloScalar::root_pow(o, k as i64)
    })
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-5i64..=5, 1i64..=4), 1..=8)
}

fn field_axioms() -> Result<(), String> {
    let mut runner = TestRunner::new(Config::with_cases(96));
    runner
        .run(&(2u32..=10, coeffs(), coeffs(), coeffs()), |(n, x, y, z)| {
            let o = ord(n);
            let (a, b, c) = (scalar(o, &x), scalar(o, &y), scalar(o, &z));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            prop_assert!((&a * &CycloScalar::one(o)) == a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().map_err(|e| TestCaseError::fail(e.to_string()))?).is_one());
            }
            Ok(())
        })
        .map_err(|e| format!("field axioms: {e}"))
}

fn element(o: Order, terms: &[(usize, i64)]) -> DoubleElement {
    let mut x = DoubleElement::zero(o);
    for &(k, c) in terms {
        x.add_term(Monomial::from_index(k, o), CycloScalar::from_integer(o, c));
    }
    x
}

fn associativity() -> Result<(), String> {
    let strategy = (2u32..=4).prop_flat_map(|n| {
        let k = (n as usize).pow(4);
        let terms = prop::collection::vec((0..k, -3i64..=3), 1..=3);
        (Just(n), terms.clone(), terms.clone(), terms)
    });
    let mut runner = TestRunner::new(Config::with_cases(48));
    runner
        .run(&strategy, |(n, x, y, z)| {
            let o = ord(n);
            let (x, y, z) = (element(o, &x), element(o, &y), element(o, &z));
            let mul = |a: &DoubleElement, b: &DoubleElement| {
                a.multiply(b).map_err(|e| TestCaseError::fail(e.to_string()))
            };
            let left = mul(&mul(&x, &y)?, &z)?;
            let right = mul(&x, &mul(&y, &z)?)?;
            prop_assert_eq!(left, right);
            Ok(())
        })
        .map_err(|e| format!("associativity: {e}"))
}

/// Upper unitriangular, hence invertible, with entries drawn from `seeds`.
fn scrambler(o: Order, dim: usize, seeds: &[i64]) -> CycloMatrix {
    let mut t = CycloMatrix::identity(o, dim);
    let mut k = 0;
    for i in 0..dim {
        for j in i + 1..dim {
            let s = seeds[k % seeds.len()];
            k += 1;
            if s % 3 != 0 {
                t.set(i, j, CycloScalar::from_integer(o, s % 3) * CycloScalar::root_pow(o, s));
            }
        }
    }
    t
}

fn labels(n: u32) -> impl Strategy<Value = Vec<(u32, u32)>> {
    prop::collection::vec((1..=n, 0..n), 1..=3)
}

fn decomposer() -> Result<(), String> {
    let strategy = (2u32..=5).prop_flat_map(|n| {
        (Just(n), labels(n), labels(n), prop::collection::vec(-6i64..=6, 1..=12))
    });
    let mut runner = TestRunner::new(Config::with_cases(40));
    let fail = |e: taft_depth::Error| TestCaseError::fail(e.to_string());
    runner
        .run(&strategy, |(n, left, right, seeds)| {
            let o = ord(n);
            let build = |parts: &[(u32, u32)]| -> Result<(TaftModule, GreenElement), TestCaseError> {
                let mut m = TaftModule::zero(o);
                let mut g = GreenElement::new();
                for &(l, r) in parts {
                    let label = IndecLabel::new(l, r as i64, o).map_err(fail)?;
                    m = direct_sum(&m, &standard_module(label, o).map_err(fail)?).map_err(fail)?;
                    g.add_label(label, 1);
                }
                Ok((m, g))
            };
            let (m, gm) = build(&left)?;
            let (k, gk) = build(&right)?;
            // round trip through a change of basis
            let scrambled = m.change_basis(&scrambler(o, m.dim(), &seeds)).map_err(fail)?;
            prop_assert_eq!(decompose(&scrambled).map_err(fail)?, gm.clone());
            // additivity on modules that are not given as sums of standard ones
            let mk = tensor_module(&m, &k).map_err(fail)?;
            let km = tensor_module(&k, &m).map_err(fail)?;
            let sum = direct_sum(&mk, &km).map_err(fail)?;
            let mut expected = decompose(&mk).map_err(fail)?;
            expected.add_scaled(&decompose(&km).map_err(fail)?, 1);
            prop_assert_eq!(decompose(&sum).map_err(fail)?, expected);
            prop_assert_eq!(decompose(&mk).map_err(fail)?.dim(), gm.dim() * gk.dim());
            Ok(())
        })
        .map_err(|e| format!("decomposer: {e}"))
}

fn stabilization() -> Result<(), String> {
    let strategy = (2u32..=4).prop_flat_map(|n| (Just(n), labels(n)));
    let mut runner = TestRunner::new(Config::with_cases(40));
    let fail = |e: taft_depth::Error| TestCaseError::fail(e.to_string());
    runner
        .run(&strategy, |(n, parts)| {
            let o = ord(n);
            let mut u = GreenElement::new();
            for &(l, r) in &parts {
                u.add_label(IndecLabel::new(l, r as i64, o).map_err(fail)?, 1);
            }
            let d = depth(&u, o).map_err(fail)?;
            // full sums with multiplicities, independent of the support-only chain
            let base = p_m(&u, d, o).map_err(fail)?;
            for m in d + 1..=d + 3 {
                prop_assert!(similar(&base, &p_m(&u, m, o).map_err(fail)?), "m = {}", m);
            }
            if d > 0 {
                prop_assert!(!similar(&p_m(&u, d - 1, o).map_err(fail)?, &base));
            }
            Ok(())
        })
        .map_err(|e| format!("stabilization: {e}"))
}

fn criterion_8() -> Outcome {
    field_axioms()?;
    associativity()?;
    decomposer()?;
    stabilization()?;
    // the spanning set of R+D at n = 2 as an exact rank anchor for the rewriting suite
    let rank = build_rplus_d(ord(2)).map_err(err)?.rows();
    ensure(rank == 12, || format!("rank {rank}"))?;
    Ok("field axioms, rewriting associativity, decomposer round trip and additivity, depth stabilization".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, "Sweedler fixture", Duration::from_secs(1), criterion_1),
        (2, "Q decomposition, n=2..6", Duration::from_secs(10), criterion_2),
        (3, "dual construction, n=2..5", Duration::from_secs(120), criterion_3),
        (4, "tensor rule oracle, n=2..5", Duration::from_secs(300), criterion_4),
        (5, "Q⊗Q full support, n=2..8", Duration::from_secs(5), criterion_5),
        (6, "depth headline, n=2..8", Duration::from_secs(5), criterion_6),
        (7, "lemma suite", Duration::from_secs(60), criterion_7),
        (8, "property suites", Duration::from_secs(600), criterion_8),
    ];
    let mut failed = 0;
    for (id, name, limit, f) in criteria {
        let start = Instant::now();
        let result = f();
        let elapsed = start.elapsed();
        let (verdict, detail) = match result {
            Ok(d) if elapsed <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took longer than {limit:?}")),
            Err(e) => ("FAIL", e),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {id} [{verdict}] {name} ({:.3}s, limit {}s): {detail}",
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
