use super::CheckResult;
use crate::error::Result;
use crate::greenring::{label_from_pj, verify_corollary_q, GreenElement};
use crate::qarith::{q_binomial, q_int, row_reduce, CycloMatrix, CycloScalar, Order};
use crate::taftmod::{decompose, module_of_q_direct, q_index, special_basis_vectors, TaftModule};

/// `C(α, β)_q = 0` whenever `n ≤ α`, `1 ≤ β ≤ n-1` and `α - β < n`, for `α ≤ alpha_max`.
pub fn check_qbinom_vanishing(order: Order, alpha_max: u32) -> Result<CheckResult> {
    let n = order.get() as i64;
    let mut checked = 0usize;
    for alpha in n..=alpha_max as i64 {
        for beta in 1..n {
            if alpha - beta >= n {
                continue;
            }
            checked += 1;
            let v = q_binomial(alpha, beta, order)?;
            if !v.is_zero() {
                return Ok(CheckResult::fail(format!("C({alpha},{beta})_q = {v} is not zero")));
            }
        }
    }
    Ok(CheckResult::pass(format!("{checked} binomials vanish")))
}

fn falling(top: u32, r: u32, order: Order) -> CycloScalar {
    (0..r).fold(CycloScalar::one(order), |acc, t| acc * q_int((top - t) as u64, order))
}

fn ladder(m: &TaftModule, v: &[CycloScalar], len: u32) -> Result<Vec<Vec<CycloScalar>>> {
    let mut out = vec![v.to_vec()];
    for _ in 1..=len {
        let next = m.a().apply_row(out.last().unwrap())?;
        out.push(next);
    }
    Ok(out)
}

/// `u_ℓ·a^r` and `w_ℓ·a^r` against their closed forms, nonvanishing for `r < ℓ`
/// and vanishing at `r = ℓ`.
pub fn check_ladder_closed_forms(order: Order) -> Result<CheckResult> {
    let n = order.get();
    let qm = module_of_q_direct(order);
    let sv = special_basis_vectors(order)?;
    let zero = vec![CycloScalar::zero(order); qm.dim()];
    let w_n = crate::taftmod::w_vector(n, order)?;
    for l in 1..=n {
        let u = ladder(&qm, &sv.u[l as usize - 1], l)?;
        let w_src = if l < n { &sv.w[l as usize - 1] } else { &w_n };
        let w = ladder(&qm, w_src, l)?;
        for r in 0..l {
            let mut eu = zero.clone();
            let mut ew = zero.clone();
            let fu = falling(l - 1, r, order);
            let fw = falling(n - 1, r, order);
            for i in 1..=n as i64 {
                let (ri, li, ni) = (r as i64, l as i64, n as i64);
                let cu = q_binomial(i + ni - 2 - ri, ni - 1 - ri, order)?;
                eu[q_index(i, l - 1 - r, order)] +=
                    &(&fu * &(CycloScalar::root_pow(order, i * (li - 1)) * cu));
                let cw = q_binomial(i + li - 2 - ri, li - 1 - ri, order)?;
                ew[q_index(i, n - 1 - r, order)] +=
                    &(&fw * &(CycloScalar::root_pow(order, -i * (li + 1)) * cw));
            }
            if u[r as usize] != eu {
                return Ok(CheckResult::fail(format!("u_{l}.a^{r} differs from its closed form")));
            }
            if w[r as usize] != ew {
                return Ok(CheckResult::fail(format!("w_{l}.a^{r} differs from its closed form")));
            }
            if eu == zero || ew == zero {
                return Ok(CheckResult::fail(format!("u_{l}.a^{r} or w_{l}.a^{r} vanishes")));
            }
        }
        if u[l as usize] != zero || w[l as usize] != zero {
            return Ok(CheckResult::fail(format!("u_{l}.a^{l} or w_{l}.a^{l} is nonzero")));
        }
    }
    Ok(CheckResult::pass(format!("{} ladder vectors match", n * (n + 1))))
}

/// The `n²` vectors `u_ℓ·a^r`, `w_ℓ'·a^r'` are a basis of `Q`.
pub fn check_basis_q(order: Order) -> Result<CheckResult> {
    let n = order.get();
    let qm = module_of_q_direct(order);
    let sv = special_basis_vectors(order)?;
    let mut rows = Vec::new();
    for (k, u) in sv.u.iter().enumerate() {
        rows.extend(ladder(&qm, u, k as u32)?);
    }
    for (k, w) in sv.w.iter().enumerate() {
        rows.extend(ladder(&qm, w, k as u32)?);
    }
    let count = rows.len();
    let rank = row_reduce(&CycloMatrix::from_rows(order, qm.dim(), rows)?).rank;
    let expected = (n * n) as usize;
    Ok(CheckResult::from_bool(
        count == expected && rank == expected,
        format!("{count} vectors of rank {rank}, expected {expected}"),
    ))
}

/// The ladder of `u_ℓ` spans `P_2 J^{n-ℓ}` and that of `w_ℓ'` spans `P_{2+ℓ'} J^{n-ℓ'}`.
pub fn check_indec_from_basis(order: Order) -> Result<CheckResult> {
    let n = order.get();
    let qm = module_of_q_direct(order);
    let sv = special_basis_vectors(order)?;
    for l in 1..=n {
        let got = decompose(&qm.cyclic_submodule(&sv.u[l as usize - 1])?)?;
        let want = GreenElement::from_label(label_from_pj(2, n - l, order)?);
        if got != want {
            return Ok(CheckResult::fail(format!("span of u_{l}.a^r is {got}, expected {want}")));
        }
    }
    for l in 1..n {
        let got = decompose(&qm.cyclic_submodule(&sv.w[l as usize - 1])?)?;
        // P_{n+1} is P_1
        let i = (1 + l) % n + 1;
        let want = GreenElement::from_label(label_from_pj(i, n - l, order)?);
        if got != want {
            return Ok(CheckResult::fail(format!("span of w_{l}.a^r is {got}, expected {want}")));
        }
    }
    Ok(CheckResult::pass(format!("{} ladder submodules identified", 2 * n - 1)))
}

pub fn check_corollary_q(order: Order) -> Result<CheckResult> {
    let ok = verify_corollary_q(order)?;
    Ok(CheckResult::from_bool(
        ok,
        if ok {
            "[Q] agrees with its expansion in a and x"
        } else {
            "[Q] differs from its expansion in a and x"
        },
    ))
}
