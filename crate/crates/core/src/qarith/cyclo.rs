//! Elements of the cyclotomic field `Q(ζ_n)`.
//!
//! An element is stored as its unique representative of degree `< φ(n)` modulo
//! the cyclotomic polynomial `Φ_n`, so equality is coefficient-wise.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{self, cyclotomic_poly};
use super::{Order, Rational};
use crate::error::{Error, Result};

struct FieldTables {
    degree: usize,
    /// `Φ_n`, monic, lowest degree first.
    modulus: Vec<Rational>,
    /// Reduced representatives of `z^k` for `k = 0..n`.
    powers: Vec<Vec<Rational>>,
}

impl FieldTables {
    fn build(order: Order) -> Self {
        let modulus: Vec<Rational> = cyclotomic_poly(order.get() as u64)
            .expect("order is at least 2")
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let degree = modulus.len() - 1;
        let mut tables = FieldTables {
            degree,
            modulus,
            powers: Vec::with_capacity(order.usize()),
        };
        for k in 0..order.usize() {
            let mut mono = vec![Rational::zero(); k + 1];
            mono[k] = Rational::one();
            let reduced = tables.reduce(mono);
            tables.powers.push(reduced);
        }
        tables
    }

    /// Reduces a polynomial of any degree modulo `Φ_n`, returning exactly `degree` coefficients.
    fn reduce(&self, mut p: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree;
        if p.len() > d {
            for k in (d..p.len()).rev() {
                if p[k].is_zero() {
                    continue;
                }
                let c = std::mem::replace(&mut p[k], Rational::zero());
                for t in 0..d {
                    let m = &self.modulus[t];
                    if m.is_zero() {
                        continue;
                    }
                    let slot = &mut p[k - d + t];
                    if m.is_one() {
                        *slot -= &c;
                    } else if (-m).is_one() {
                        *slot += &c;
                    } else {
                        *slot -= &c * m;
                    }
                }
            }
        }
        p.resize(d, Rational::zero());
        p
    }
}

thread_local! {
    static TABLES: RefCell<HashMap<u32, Rc<FieldTables>>> = RefCell::new(HashMap::new());
}

fn tables(order: Order) -> Rc<FieldTables> {
    TABLES.with(|cell| {
        cell.borrow_mut()
            .entry(order.get())
            .or_insert_with(|| Rc::new(FieldTables::build(order)))
            .clone()
    })
}

/// An exact element of `Q(ζ_n)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloScalar {
    order: Order,
    coeffs: Vec<Rational>,
}

impl CycloScalar {
    pub fn zero(order: Order) -> Self {
        let d = tables(order).degree;
        CycloScalar {
            order,
            coeffs: vec![Rational::zero(); d],
        }
    }

    pub fn one(order: Order) -> Self {
        Self::from_integer(order, 1)
    }

    pub fn from_integer(order: Order, k: i64) -> Self {
        Self::from_rational(order, Rational::from_integer(BigInt::from(k)))
    }

    pub fn from_rational(order: Order, r: Rational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = r;
        s
    }

    /// The distinguished primitive root `q = ζ_n`.
    pub fn root(order: Order) -> Self {
        Self::root_pow(order, 1)
    }

    /// `q^k` for any integer `k`.
    pub fn root_pow(order: Order, k: i64) -> Self {
        let t = tables(order);
        CycloScalar {
            order,
            coeffs: t.powers[order.residue(k) as usize].clone(),
        }
    }

    /// Reduces an arbitrary polynomial in `ζ_n` (lowest degree first).
    pub fn from_poly(order: Order, coeffs: Vec<Rational>) -> Self {
        let t = tables(order);
        CycloScalar {
            order,
            coeffs: t.reduce(coeffs),
        }
    }

    #[inline]
    pub fn order(&self) -> Order {
        self.order
    }

    /// Canonical coefficients of `1, z, …, z^{φ(n)-1}`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::IncompatibleOrder {
                left: self.order.get(),
                right: other.order.get(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        out.add_in_place(other);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        out.sub_in_place(other);
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm modulo `Φ_n`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if self.is_rational() {
            return Ok(Self::from_rational(self.order, self.coeffs[0].recip()));
        }
        let t = tables(self.order);
        let inv = poly::inverse_mod(&self.coeffs, &t.modulus).ok_or(Error::ZeroDivisor)?;
        Ok(CycloScalar {
            order: self.order,
            coeffs: t.reduce(inv),
        })
    }

    /// Integer power; negative exponents go through [`CycloScalar::inv`].
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(self.order);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_unchecked(&sq);
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycloScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    fn add_in_place(&mut self, other: &Self) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    fn sub_in_place(&mut self, other: &Self) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_rational() {
            return other.scale(&self.coeffs[0]);
        }
        if other.is_rational() {
            return self.scale(&other.coeffs[0]);
        }
        let t = tables(self.order);
        CycloScalar {
            order: self.order,
            coeffs: t.reduce(poly::mul(&self.coeffs, &other.coeffs)),
        }
    }

    fn assert_same_order(&self, other: &Self) {
        assert_eq!(
            self.order, other.order,
            "mixing scalars of different cyclotomic orders"
        );
    }

    /// Parses the text form written by `Display`, e.g. `3/2*z^2 - 1/5`.
    ///
    /// Any power of `z` is accepted and reduced, so non-canonical input is fine.
    pub fn parse(order: Order, text: &str) -> Result<Self> {
        let mut p = TextParser {
            src: text.as_bytes(),
            pos: 0,
        };
        let mut poly: Vec<Rational> = Vec::new();
        p.skip_ws();
        if p.at_end() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let mut first = true;
        while !p.at_end() {
            let negative = match p.peek() {
                Some(b'+') => {
                    p.pos += 1;
                    false
                }
                Some(b'-') => {
                    p.pos += 1;
                    true
                }
                _ if first => false,
                _ => return Err(p.error("expected '+' or '-'")),
            };
            p.skip_ws();
            let (mut coeff, power) = p.term()?;
            if negative {
                coeff = -coeff;
            }
            let k = (power % order.get() as u64) as usize;
            if poly.len() <= k {
                poly.resize(k + 1, Rational::zero());
            }
            poly[k] += coeff;
            first = false;
            p.skip_ws();
        }
        Ok(Self::from_poly(order, poly))
    }
}

struct TextParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl TextParser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "{msg} at offset {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("ascii digits parse"))
    }

    fn term(&mut self) -> Result<(Rational, u64)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                self.skip_ws();
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let d = self.digits()?;
                    if d.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    d
                } else {
                    BigInt::one()
                };
                let coeff = Rational::new(num, den);
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_ws();
                    Ok((coeff, self.power()?))
                } else {
                    Ok((coeff, 0))
                }
            }
            Some(b'z') => Ok((Rational::one(), self.power()?)),
            _ => Err(self.error("expected a coefficient or 'z'")),
        }
    }

    fn power(&mut self) -> Result<u64> {
        if self.peek() != Some(b'z') {
            return Err(self.error("expected 'z'"));
        }
        self.pos += 1;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.digits()?;
            u64::try_from(e).map_err(|_| self.error("exponent too large"))
        } else {
            Ok(1)
        }
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            match (wrote, negative) {
                (false, true) => f.write_str("-")?,
                (true, true) => f.write_str(" - ")?,
                (true, false) => f.write_str(" + ")?,
                (false, false) => {}
            }
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]_{}", self, self.order)
    }
}

impl Neg for &CycloScalar {
    type Output = CycloScalar;

    fn neg(self) -> CycloScalar {
        CycloScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycloScalar {
    type Output = CycloScalar;

    fn neg(mut self) -> CycloScalar {
        for c in &mut self.coeffs {
            if !c.is_zero() {
                *c = -std::mem::replace(c, Rational::zero());
            }
        }
        self
    }
}

impl AddAssign<&CycloScalar> for CycloScalar {
    fn add_assign(&mut self, rhs: &CycloScalar) {
        self.assert_same_order(rhs);
        self.add_in_place(rhs);
    }
}

impl SubAssign<&CycloScalar> for CycloScalar {
    fn sub_assign(&mut self, rhs: &CycloScalar) {
        self.assert_same_order(rhs);
        self.sub_in_place(rhs);
    }
}

impl MulAssign<&CycloScalar> for CycloScalar {
    fn mul_assign(&mut self, rhs: &CycloScalar) {
        self.assert_same_order(rhs);
        *self = self.mul_unchecked(rhs);
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $assign:ident) => {
        impl $tr<&CycloScalar> for &CycloScalar {
            type Output = CycloScalar;

            fn $method(self, rhs: &CycloScalar) -> CycloScalar {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }

        impl $tr<CycloScalar> for CycloScalar {
            type Output = CycloScalar;

            fn $method(mut self, rhs: CycloScalar) -> CycloScalar {
                self.$assign(&rhs);
                self
            }
        }

        impl $tr<&CycloScalar> for CycloScalar {
            type Output = CycloScalar;

            fn $method(mut self, rhs: &CycloScalar) -> CycloScalar {
                self.$assign(rhs);
                self
            }
        }
    };
}

binop!(Add, add, add_assign);
binop!(Sub, sub, sub_assign);
binop!(Mul, mul, mul_assign);
