use std::fmt;

use super::{DoubleElement, Generator, Monomial};
use crate::error::{Error, Result};
use crate::qarith::{subspace_quotient, CycloMatrix, CycloScalar, Order, SubspaceQuotient};
use crate::taftmod::{q_index, TaftModule};

/// Identifies a basis vector of `Q` as the coset of `c^i d^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CosetTag {
    pub i: u32,
    pub j: u32,
}

impl CosetTag {
    pub fn monomial(&self) -> Monomial {
        Monomial { i: 0, j: 0, r: self.i, s: self.j }
    }
}

impl fmt::Display for CosetTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c^{} d^{}", self.i, self.j)
    }
}

/// Reduced basis of `R⁺D`, spanned by `a·m` and `(1 - b)·m` over all monomials `m`.
pub fn build_rplus_d(order: Order) -> Result<CycloMatrix> {
    let ech = crate::qarith::row_reduce(&rplus_d_spanning_set(order)?);
    let expected = order.usize().pow(4) - order.usize().pow(2);
    if ech.rank != expected {
        return Err(Error::invariant(format!(
            "R+D has rank {} in dimension {}, expected {expected}",
            ech.rank,
            order.usize().pow(4)
        )));
    }
    let keep: Vec<usize> = (0..ech.rank).collect();
    let cols: Vec<usize> = (0..ech.reduced.cols()).collect();
    Ok(ech.reduced.submatrix(&keep, &cols))
}

fn rplus_d_spanning_set(order: Order) -> Result<CycloMatrix> {
    let a = Generator::A.element(order);
    let one_minus_b = DoubleElement::one(order).checked_sub(&Generator::B.element(order))?;
    let mut rows = Vec::with_capacity(2 * order.usize().pow(4));
    for m in Monomial::all(order) {
        let x = DoubleElement::monomial(order, m, CycloScalar::one(order));
        rows.push(a.multiply(&x)?.to_sparse_coordinates());
        rows.push(one_minus_b.multiply(&x)?.to_sparse_coordinates());
    }
    CycloMatrix::from_sparse_rows(order, order.usize().pow(4), rows)
}

/// `Q = D / R⁺D` on the cosets of `c^i d^j`, with the right action of `a` and `b`
/// induced from multiplication in the double.
pub fn quotient_module_from_double(order: Order) -> Result<(TaftModule, Vec<CosetTag>)> {
    let n = order.get();
    let ambient = order.usize().pow(4);
    let rplus = build_rplus_d(order)?;
    let quotient = subspace_quotient(ambient, &rplus)?;
    let mut tags = vec![CosetTag { i: 0, j: 0 }; (n * n) as usize];
    for j in 0..n {
        for i in 0..n {
            tags[q_index(i as i64, j, order)] = CosetTag { i, j };
        }
    }
    let project = |x: &DoubleElement, q: &SubspaceQuotient| -> Result<Vec<CycloScalar>> {
        q.project(&x.to_coordinates())
    };
    let reps: Vec<DoubleElement> = tags
        .iter()
        .map(|t| DoubleElement::monomial(order, t.monomial(), CycloScalar::one(order)))
        .collect();
    let coords = reps
        .iter()
        .map(|x| project(x, &quotient))
        .collect::<Result<Vec<_>>>()?;
    let t = CycloMatrix::from_rows(order, quotient.dim(), coords)?;
    if t.rows() != t.cols() {
        return Err(Error::invariant(format!(
            "quotient has dimension {}, expected {}",
            t.cols(),
            t.rows()
        )));
    }
    let t_inv = t
        .inverse()
        .map_err(|_| Error::invariant("cosets of c^i d^j are linearly dependent"))?;
    let action = |g: Generator| -> Result<CycloMatrix> {
        let rows = reps
            .iter()
            .map(|x| project(&x.right_multiply_generator(g), &quotient))
            .collect::<Result<Vec<_>>>()?;
        CycloMatrix::from_rows(order, quotient.dim(), rows)?.checked_mul(&t_inv)
    };
    let module = TaftModule::new(action(Generator::B)?, action(Generator::A)?)?;
    Ok((module, tags))
}
