//! Dense univariate polynomials, lowest degree first.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// The `n`-th cyclotomic polynomial `Φ_n`, lowest degree coefficient first.
///
/// Computed as `x^n - 1` divided exactly by `Φ_d` for every proper divisor `d | n`.
pub fn cyclotomic_poly(n: u64) -> Result<Vec<BigInt>> {
    if n == 0 {
        return Err(Error::InvalidOrder { order: 0, min: 1 });
    }
    let n_us = n as usize;
    let mut acc = vec![BigInt::zero(); n_us + 1];
    acc[0] = -BigInt::one();
    acc[n_us] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let factor = cyclotomic_poly(d)?;
            acc = exact_div_monic(&acc, &factor)?;
        }
    }
    Ok(acc)
}

/// Euler's totient, the degree of `Φ_n`.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Result<Vec<BigInt>> {
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    if num.len() <= dd {
        return Err(Error::invariant("cyclotomic division: dividend degree too small"));
    }
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (dd..num.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        quot[k - dd] = c.clone();
        for (t, dc) in den.iter().enumerate() {
            rem[k - dd + t] -= &c * dc;
        }
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::invariant("cyclotomic division left a nonzero remainder"));
    }
    Ok(quot)
}

pub(crate) fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Quotient and remainder over the rationals. `b` must be trimmed and nonzero.
pub(crate) fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let lead = &b[db];
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for k in (db..rem.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let c = &rem[k] / lead;
        for (t, bc) in b.iter().enumerate() {
            let delta = &c * bc;
            rem[k - db + t] -= delta;
        }
        quot[k - db] = c;
    }
    trim(&mut rem);
    (quot, rem)
}

pub(crate) fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

pub(crate) fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().max(b.len());
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Inverse of `a` modulo the irreducible `modulus` by the extended Euclidean algorithm.
/// Returns `None` when `a` is zero modulo `modulus`.
pub(crate) fn inverse_mod(a: &[Rational], modulus: &[Rational]) -> Option<Vec<Rational>> {
    let mut r0 = modulus.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Vec<Rational> = Vec::new();
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        r0 = std::mem::replace(&mut r1, r);
        let next = sub(&s0, &mul(&q, &s1));
        s0 = std::mem::replace(&mut s1, next);
    }
    // r0 is the gcd; for an irreducible modulus it is a nonzero constant unless a ≡ 0.
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    if c.is_zero() {
        return None;
    }
    let (_, s) = divrem(&s0, modulus);
    Some(s.into_iter().map(|x| x / &c).collect())
}
