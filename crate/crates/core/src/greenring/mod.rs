//! The Green ring `r(U_n(q))` as a combinatorial calculator.
//!
//! Indecomposables are the labels `M(ℓ, r)` (length `ℓ ∈ 1..=n`, shift `r` mod `n`).
//! Products of labels follow the tensor rulebook; everything else (similarity,
//! depth, the class of the quotient module) is derived from it.

mod element;
mod label;

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::qarith::Order;

pub use element::{GreenElement, LabelCount};
pub use label::{label_from_pj, label_to_pj, IndecLabel};

/// Which clause of the tensor rulebook produced a product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TensorRule {
    /// One factor is one-dimensional: `M(ℓ, r) ⊗ M(1, r') = M(ℓ, r + r')`.
    Simple,
    /// One factor is projective (length `n`).
    Projective,
    /// `ℓ + ℓ' ≤ n`: a Clebsch-Gordan-like ladder.
    Ladder,
    /// `ℓ + ℓ' > n`: truncated ladder plus projectives.
    Overflow,
}

pub fn tensor_rule(x: IndecLabel, y: IndecLabel, order: Order) -> Result<TensorRule> {
    x.validate(order)?;
    y.validate(order)?;
    let n = order.get();
    Ok(if x.len() == 1 || y.len() == 1 {
        TensorRule::Simple
    } else if x.len() == n || y.len() == n {
        TensorRule::Projective
    } else if x.len() + y.len() <= n {
        TensorRule::Ladder
    } else {
        TensorRule::Overflow
    })
}

/// Decomposes `x ⊗ y` into indecomposables.
pub fn tensor_labels(x: IndecLabel, y: IndecLabel, order: Order) -> Result<GreenElement> {
    let rule = tensor_rule(x, y, order)?;
    let n = order.get() as i64;
    let (l, r) = (x.len() as i64, x.shift() as i64);
    let (lp, rp) = (y.len() as i64, y.shift() as i64);
    let s = r + rp;
    let mut out = GreenElement::new();
    let mut push = |len: i64, shift: i64| {
        out.add_label(IndecLabel::from_parts(len as u32, order.residue(shift)), 1);
    };
    match rule {
        TensorRule::Simple => {
            let len = if lp == 1 { l } else { lp };
            push(len, s);
        }
        TensorRule::Projective => {
            // length of the other factor; n when both are projective
            let len = if lp == n { l } else { lp };
            for i in 1..=len {
                push(n, s + i - len);
            }
        }
        TensorRule::Ladder => {
            let (l0, l1) = (l.min(lp), l.max(lp));
            for i in 1..=l0 {
                push(l1 - l0 - 1 + 2 * i, s + i - l0);
            }
        }
        TensorRule::Overflow => {
            let (l0, l1) = (l.min(lp), l.max(lp));
            for i in 1..=(n - l1) {
                push(l1 - l0 - 1 + 2 * i, s + i - l0);
            }
            for j in 1..=(l + lp - n) {
                push(n, s + 1 - j);
            }
        }
    }
    Ok(out)
}

/// Bilinear extension of [`tensor_labels`].
pub fn tensor(u: &GreenElement, v: &GreenElement, order: Order) -> Result<GreenElement> {
    let mut out = GreenElement::new();
    for (x, mx) in u.iter() {
        for (y, my) in v.iter() {
            let prod = tensor_labels(x, y, order)?;
            out.add_scaled(&prod, mx * my);
        }
    }
    Ok(out)
}

/// `u^{⊗m}`, with `u^0` the unit.
pub fn power(u: &GreenElement, m: u32, order: Order) -> Result<GreenElement> {
    let mut acc = GreenElement::unit();
    for _ in 0..m {
        acc = tensor(&acc, u, order)?;
    }
    Ok(acc)
}

/// `p_m(u) = u + u² + ⋯ + u^m`, and `p_0(u) = 1`.
pub fn p_m(u: &GreenElement, m: u32, order: Order) -> Result<GreenElement> {
    if m == 0 {
        return Ok(GreenElement::unit());
    }
    let mut acc = GreenElement::new();
    let mut pow = GreenElement::unit();
    for _ in 0..m {
        pow = tensor(&pow, u, order)?;
        acc.add_scaled(&pow, 1);
    }
    Ok(acc)
}

pub fn indec_set(u: &GreenElement) -> BTreeSet<IndecLabel> {
    u.labels().collect()
}

/// `u ∼ v`: same indecomposable constituents.
pub fn similar(u: &GreenElement, v: &GreenElement) -> bool {
    u.labels().eq(v.labels())
}

/// The sets `Indec(p_0(u)), …, Indec(p_steps(u))`.
///
/// Powers are tracked through their supports only; multiplicities never matter
/// for constituents because they are all positive.
pub fn depth_chain(u: &GreenElement, steps: u32, order: Order) -> Result<Vec<BTreeSet<IndecLabel>>> {
    let mut chain = vec![indec_set(&GreenElement::unit())];
    if steps == 0 {
        return Ok(chain);
    }
    let base = u.support_element();
    let mut pow_support = base.clone();
    let mut acc = indec_set(&base);
    chain.push(acc.clone());
    for _ in 1..steps {
        pow_support = tensor(&pow_support, &base, order)?.support_element();
        acc.extend(pow_support.labels());
        chain.push(acc.clone());
    }
    Ok(chain)
}

/// Least `m` with `p_m(u) ∼ p_{m+1}(u)`.
pub fn depth(u: &GreenElement, order: Order) -> Result<u32> {
    if u.is_zero() {
        return Err(Error::domain("depth of the zero element is undefined"));
    }
    let n = order.get();
    let cap = n * n + 2;
    let base = u.support_element();
    let mut prev = indec_set(&GreenElement::unit());
    let mut current = indec_set(&base);
    let mut pow_support = base.clone();
    for m in 0..cap {
        if prev == current {
            return Ok(m);
        }
        pow_support = tensor(&pow_support, &base, order)?.support_element();
        let mut next = current.clone();
        next.extend(pow_support.labels());
        prev = std::mem::replace(&mut current, next);
    }
    Err(Error::invariant(format!(
        "depth did not stabilise within {cap} steps"
    )))
}

/// The class of the quotient module:
/// `Σ_{ℓ=1..n} M(ℓ, ℓ-1) + Σ_{ℓ'=1..n-1} M(ℓ', n-1)`.
pub fn quotient_class(order: Order) -> GreenElement {
    let n = order.get();
    let mut out = GreenElement::new();
    for l in 1..=n {
        out.add_label(IndecLabel::from_parts(l, l - 1), 1);
    }
    for l in 1..n {
        out.add_label(IndecLabel::from_parts(l, n - 1), 1);
    }
    out
}

/// The simple generator `a = [M(1, n-1)]`.
pub fn generator_a(order: Order) -> GreenElement {
    GreenElement::from_label(IndecLabel::from_parts(1, order.get() - 1))
}

/// The two-dimensional generator `x = [M(2, 0)]`.
pub fn generator_x() -> GreenElement {
    GreenElement::from_label(IndecLabel::from_parts(2, 0))
}

type SignedGreen = BTreeMap<IndecLabel, i64>;

fn signed(u: &GreenElement) -> SignedGreen {
    u.iter().map(|(l, m)| (l, m as i64)).collect()
}

fn signed_tensor(u: &SignedGreen, v: &SignedGreen, order: Order) -> Result<SignedGreen> {
    let mut out = SignedGreen::new();
    for (&x, &mx) in u {
        for (&y, &my) in v {
            for (l, m) in tensor_labels(x, y, order)?.iter() {
                *out.entry(l).or_insert(0) += mx * my * m as i64;
            }
        }
    }
    Ok(out)
}

/// `u_ℓ` from `u_1 = 1`, `u_2 = x`, `u_{ℓ+1} = x u_ℓ - a u_{ℓ-1}`.
pub fn green_u_polynomial(l: u32, order: Order) -> Result<GreenElement> {
    let n = order.get();
    if !(1..=n).contains(&l) {
        return Err(Error::domain(format!("u_{l} requested for order {n}")));
    }
    let a = signed(&generator_a(order));
    let x = signed(&generator_x());
    let mut prev = signed(&GreenElement::unit());
    let mut cur = x.clone();
    if l == 1 {
        cur = prev.clone();
    }
    for _ in 2..l {
        let mut next = signed_tensor(&x, &cur, order)?;
        for (lab, m) in signed_tensor(&a, &prev, order)? {
            *next.entry(lab).or_insert(0) -= m;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    let mut out = GreenElement::new();
    for (lab, m) in cur {
        match m {
            0 => {}
            m if m > 0 => out.add_label(lab, m as u64),
            m => {
                return Err(Error::invariant(format!(
                    "u_{l} has negative multiplicity {m} at {lab}"
                )))
            }
        }
    }
    Ok(out)
}

/// Expands `1 + a + Σ_{ℓ=2}^{n-1} (a^{n-ℓ+1} + a) u_ℓ + a u_n` and compares it
/// with [`quotient_class`].
pub fn verify_corollary_q(order: Order) -> Result<bool> {
    let n = order.get();
    let a = generator_a(order);
    let mut rhs = GreenElement::unit();
    rhs.add_scaled(&a, 1);
    for l in 2..n {
        let mut coeff = power(&a, n - l + 1, order)?;
        coeff.add_scaled(&a, 1);
        rhs.add_scaled(&tensor(&coeff, &green_u_polynomial(l, order)?, order)?, 1);
    }
    rhs.add_scaled(&tensor(&a, &green_u_polynomial(n, order)?, order)?, 1);
    Ok(rhs == quotient_class(order))
}

#[cfg(test)]
mod tests;
