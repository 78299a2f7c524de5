//! The Drinfeld double `D(U_n(q))` in PBW normal form `a^i b^j c^r d^s`.
//!
//! Relations: `ba = q ab`, `ca = q ac`, `cb = bc`, `db = q bd`, `dc = q cd`,
//! `da = q ad + 1 - bc`, `a^n = d^n = 0`, `b^n = c^n = 1`.

mod quotient;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::qarith::{q_int, CycloScalar, Order};

pub use quotient::{build_rplus_d, quotient_module_from_double, CosetTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    A,
    B,
    C,
    D,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::A, Generator::B, Generator::C, Generator::D];

    fn letter(self) -> u8 {
        self as u8
    }
}

/// `a^i b^j c^r d^s` with every exponent below `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
    pub r: u32,
    pub s: u32,
}

impl Monomial {
    pub fn new(i: u32, j: u32, r: u32, s: u32, order: Order) -> Result<Self> {
        let n = order.get();
        if i >= n || j >= n || r >= n || s >= n {
            return Err(Error::domain(format!(
                "exponents ({i}, {j}, {r}, {s}) must be below {n}"
            )));
        }
        Ok(Monomial { i, j, r, s })
    }

    pub fn unit() -> Self {
        Monomial { i: 0, j: 0, r: 0, s: 0 }
    }

    pub fn exponents(&self) -> [u32; 4] {
        [self.i, self.j, self.r, self.s]
    }

    /// Position among the `n⁴` basis monomials.
    pub fn index(&self, order: Order) -> usize {
        let n = order.usize();
        ((self.i as usize * n + self.j as usize) * n + self.r as usize) * n + self.s as usize
    }

    pub fn from_index(k: usize, order: Order) -> Self {
        let n = order.usize();
        Monomial {
            i: (k / (n * n * n)) as u32,
            j: (k / (n * n) % n) as u32,
            r: (k / n % n) as u32,
            s: (k % n) as u32,
        }
    }

    /// All `n⁴` monomials in index order.
    pub fn all(order: Order) -> impl Iterator<Item = Monomial> {
        (0..order.usize().pow(4)).map(move |k| Monomial::from_index(k, order))
    }

    fn word(&self) -> Vec<u8> {
        let mut w = Vec::with_capacity((self.i + self.j + self.r + self.s) as usize);
        for (letter, e) in self.exponents().into_iter().enumerate() {
            w.extend(std::iter::repeat_n(letter as u8, e as usize));
        }
        w
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a^{} b^{} c^{} d^{}", self.i, self.j, self.r, self.s)
    }
}

/// A linear combination of PBW monomials with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleElement {
    order: Order,
    terms: BTreeMap<Monomial, CycloScalar>,
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, CycloScalar>, key: K, c: CycloScalar) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(slot) => *slot += &c,
        None => {
            map.insert(key, c);
        }
    }
}

impl DoubleElement {
    pub fn zero(order: Order) -> Self {
        DoubleElement {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: Order) -> Self {
        Self::monomial(order, Monomial::unit(), CycloScalar::one(order))
    }

    pub fn monomial(order: Order, m: Monomial, c: CycloScalar) -> Self {
        let mut out = Self::zero(order);
        out.add_term(m, c);
        out
    }

    pub fn generator(order: Order, g: Generator) -> Self {
        let mut e = [0; 4];
        e[g as usize] = 1;
        let m = Monomial { i: e[0], j: e[1], r: e[2], s: e[3] };
        Self::monomial(order, m, CycloScalar::one(order))
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn add_term(&mut self, m: Monomial, c: CycloScalar) {
        accumulate(&mut self.terms, m, c);
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn coefficient(&self, m: &Monomial) -> CycloScalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| CycloScalar::zero(self.order))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycloScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::domain(format!(
                "elements of doubles of orders {} and {}",
                self.order, other.order
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            accumulate(&mut out.terms, *m, c.clone());
        }
        out.terms.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(&-CycloScalar::one(self.order)))
    }

    pub fn scale(&self, c: &CycloScalar) -> Self {
        let mut out = Self::zero(self.order);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(m, v)| (*m, v * c)).collect();
        }
        out
    }

    /// Product in the double, by rewriting concatenated words to normal form.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut words: BTreeMap<Vec<u8>, CycloScalar> = BTreeMap::new();
        for (mx, cx) in &self.terms {
            for (my, cy) in &other.terms {
                let mut w = mx.word();
                w.extend(my.word());
                accumulate(&mut words, w, cx * cy);
            }
        }
        Ok(DoubleElement {
            order: self.order,
            terms: normalize(self.order, words),
        })
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// `self · g` from closed forms; agrees with [`DoubleElement::multiply`].
    pub fn right_multiply_generator(&self, g: Generator) -> Self {
        let order = self.order;
        let n = order.get();
        let q = |k: i64| CycloScalar::root_pow(order, k);
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let Monomial { i, j, r, s } = *m;
            match g {
                Generator::A => {
                    // d^s a = q^s a d^s + (s)_q (1 - q^{s-1} bc) d^{s-1}
                    if i + 1 < n {
                        let lead = Monomial { i: i + 1, ..*m };
                        accumulate(&mut out, lead, c * &q((s + j + r) as i64));
                    }
                    if s > 0 {
                        let qs = c * &q_int(s as u64, order);
                        let lower = Monomial { s: s - 1, ..*m };
                        let mixed = Monomial {
                            j: (j + 1) % n,
                            r: (r + 1) % n,
                            s: s - 1,
                            ..*m
                        };
                        accumulate(&mut out, mixed, -(&qs * &q(s as i64 - 1)));
                        accumulate(&mut out, lower, qs);
                    }
                }
                Generator::B => {
                    let next = Monomial { j: (j + 1) % n, ..*m };
                    accumulate(&mut out, next, c * &q(s as i64));
                }
                Generator::C => {
                    let next = Monomial { r: (r + 1) % n, ..*m };
                    accumulate(&mut out, next, c * &q(s as i64));
                }
                Generator::D => {
                    if s + 1 < n {
                        accumulate(&mut out, Monomial { s: s + 1, ..*m }, c.clone());
                    }
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        DoubleElement { order, terms: out }
    }

    /// Dense coordinates on the `n⁴` monomials in index order.
    pub fn to_coordinates(&self) -> Vec<CycloScalar> {
        let mut v = vec![CycloScalar::zero(self.order); self.order.usize().pow(4)];
        for (m, c) in &self.terms {
            v[m.index(self.order)] = c.clone();
        }
        v
    }

    /// Sparse coordinates on the `n⁴` monomials, sorted by index.
    pub fn to_sparse_coordinates(&self) -> Vec<(usize, CycloScalar)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (m.index(self.order), c.clone()))
            .collect();
        v.sort_by_key(|e| e.0);
        v
    }
}

pub fn multiply(x: &DoubleElement, y: &DoubleElement) -> Result<DoubleElement> {
    x.multiply(y)
}

pub fn right_multiply_generator(x: &DoubleElement, g: Generator) -> DoubleElement {
    x.right_multiply_generator(g)
}

const A: u8 = 0;
const B: u8 = 1;
const C: u8 = 2;
const D: u8 = 3;

/// Rewrites of an inverted adjacent pair `(hi, lo)` as `(q-exponent, sign, word)` terms.
fn swap_rule(hi: u8, lo: u8) -> &'static [(i64, i64, &'static [u8])] {
    match (hi, lo) {
        (B, A) => &[(1, 1, &[A, B])],
        (C, A) => &[(1, 1, &[A, C])],
        (C, B) => &[(0, 1, &[B, C])],
        (D, B) => &[(1, 1, &[B, D])],
        (D, C) => &[(1, 1, &[C, D])],
        (D, A) => &[(1, 1, &[A, D]), (0, 1, &[]), (0, -1, &[B, C])],
        _ => unreachable!("pair ({hi}, {lo}) is not inverted"),
    }
}

/// Applies `a^n = d^n = 0` and `b^n = c^n = 1` to runs of equal letters until
/// no run reaches `n`; deleting a run can merge its neighbours.
fn reduce_powers(w: &[u8], n: usize) -> Option<Vec<u8>> {
    let mut cur = w.to_vec();
    loop {
        let next = reduce_runs(&cur, n)?;
        if next.len() == cur.len() {
            return Some(next);
        }
        cur = next;
    }
}

fn reduce_runs(w: &[u8], n: usize) -> Option<Vec<u8>> {
    let mut out = Vec::with_capacity(w.len());
    let mut k = 0;
    while k < w.len() {
        let letter = w[k];
        let run = w[k..].iter().take_while(|&&x| x == letter).count();
        if run >= n {
            if letter == A || letter == D {
                return None;
            }
            out.extend(std::iter::repeat_n(letter, run % n));
        } else {
            out.extend(std::iter::repeat_n(letter, run));
        }
        k += run;
    }
    Some(out)
}

fn normalize(order: Order, mut pending: BTreeMap<Vec<u8>, CycloScalar>) -> BTreeMap<Monomial, CycloScalar> {
    let n = order.usize();
    let mut done = BTreeMap::new();
    while let Some((w, c)) = pending.pop_first() {
        if c.is_zero() {
            continue;
        }
        let Some(w) = reduce_powers(&w, n) else {
            continue;
        };
        match w.windows(2).position(|p| p[0] > p[1]) {
            None => {
                let mut e = [0u32; 4];
                for &letter in &w {
                    e[letter as usize] += 1;
                }
                let m = Monomial { i: e[0], j: e[1], r: e[2], s: e[3] };
                accumulate(&mut done, m, c);
            }
            Some(k) => {
                for &(qe, sign, replacement) in swap_rule(w[k], w[k + 1]) {
                    let mut next = Vec::with_capacity(w.len());
                    next.extend_from_slice(&w[..k]);
                    next.extend_from_slice(replacement);
                    next.extend_from_slice(&w[k + 2..]);
                    let mut coef = &c * &CycloScalar::root_pow(order, qe);
                    if sign < 0 {
                        coef = -coef;
                    }
                    accumulate(&mut pending, next, coef);
                }
            }
        }
    }
    done.retain(|_, v: &mut CycloScalar| !v.is_zero());
    done
}

impl fmt::Display for DoubleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let text = c.to_string();
            if text.contains(' ') {
                write!(f, "({text}) * {m}")?;
            } else {
                write!(f, "{text} * {m}")?;
            }
        }
        Ok(())
    }
}

impl Generator {
    pub fn element(self, order: Order) -> DoubleElement {
        DoubleElement::generator(order, self)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = b"abcd"[self.letter() as usize] as char;
        write!(f, "{c}")
    }
}
