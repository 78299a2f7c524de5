//! Explicit right `U_n(q)`-modules.
//!
//! A module is a pair of square matrices: `B` for the grouplike `b` and `A` for
//! the nilpotent `a`. Vectors are rows and the matrix of a product `xy` is
//! `M_x · M_y`, so the relation `ba = q ab` reads `B·A = q·A·B`.

mod decompose;
mod file;
mod quotient;

use crate::error::{Error, Result};
use crate::greenring::{label_to_pj, IndecLabel};
use crate::qarith::{CycloMatrix, CycloScalar, Order};

pub use decompose::{
    calibration_table, decompose, grade_decompose, jordan_signature, CalibrationTable,
    GradedJordanSignature,
};
pub use file::ModuleFile;
pub use quotient::{
    module_of_q_direct, q_index, special_basis_vectors, u_vector, w_vector, SpecialVectors,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaftModule {
    order: Order,
    b: CycloMatrix,
    a: CycloMatrix,
}

impl TaftModule {
    /// Wraps two action matrices after checking every defining relation.
    pub fn new(b: CycloMatrix, a: CycloMatrix) -> Result<Self> {
        let m = TaftModule::new_unchecked(b, a)?;
        m.validate()?;
        Ok(m)
    }

    /// Checks shapes and orders only.
    pub(crate) fn new_unchecked(b: CycloMatrix, a: CycloMatrix) -> Result<Self> {
        if b.order() != a.order() {
            return Err(Error::IncompatibleOrder {
                left: b.order().get(),
                right: a.order().get(),
            });
        }
        if !b.is_square() || !a.is_square() || b.rows() != a.rows() {
            return Err(Error::shape(format!(
                "action matrices are {}x{} and {}x{}",
                b.rows(),
                b.cols(),
                a.rows(),
                a.cols()
            )));
        }
        Ok(TaftModule {
            order: b.order(),
            b,
            a,
        })
    }

    /// The zero module.
    pub fn zero(order: Order) -> Self {
        TaftModule {
            order,
            b: CycloMatrix::zeros(order, 0, 0),
            a: CycloMatrix::zeros(order, 0, 0),
        }
    }

    /// The trivial module `M(1, 0)`: `b` acts as 1 and `a` as 0.
    pub fn trivial(order: Order) -> Self {
        TaftModule {
            order,
            b: CycloMatrix::identity(order, 1),
            a: CycloMatrix::zeros(order, 1, 1),
        }
    }

    /// `B^n = I`, `A^n = 0` and `B·A = q·A·B`.
    pub fn validate(&self) -> Result<()> {
        let n = self.order.get();
        if !self.b.pow(n)?.is_identity() {
            return Err(Error::invariant("B^n is not the identity"));
        }
        if !self.a.pow(n)?.is_zero() {
            return Err(Error::invariant("A^n is not zero"));
        }
        let ba = self.b.checked_mul(&self.a)?;
        let ab = self.a.checked_mul(&self.b)?;
        if ba != ab.scale(&CycloScalar::root(self.order)) {
            return Err(Error::invariant("B·A differs from q·A·B"));
        }
        Ok(())
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.b.rows()
    }

    pub fn b(&self) -> &CycloMatrix {
        &self.b
    }

    pub fn a(&self) -> &CycloMatrix {
        &self.a
    }

    /// The same module written in the basis given by the rows of `t`.
    pub fn change_basis(&self, t: &CycloMatrix) -> Result<TaftModule> {
        let inv = t.inverse()?;
        let b = t.checked_mul(&self.b)?.checked_mul(&inv)?;
        let a = t.checked_mul(&self.a)?.checked_mul(&inv)?;
        TaftModule::new_unchecked(b, a)
    }

    /// The submodule spanned by the (independent) rows of `basis`, in that basis.
    pub fn restrict(&self, basis: &CycloMatrix) -> Result<TaftModule> {
        let images = |m: &CycloMatrix| -> Result<CycloMatrix> {
            basis
                .solve_left(&basis.checked_mul(m)?)?
                .ok_or_else(|| Error::invariant("subspace is not closed under the action"))
        };
        TaftModule::new_unchecked(images(&self.b)?, images(&self.a)?)
    }

    /// The submodule generated by a `b`-eigenvector `v`: span of `v, v·A, v·A², …`.
    pub fn cyclic_submodule(&self, v: &[CycloScalar]) -> Result<TaftModule> {
        let mut rows = Vec::new();
        let mut cur = v.to_vec();
        while cur.iter().any(|x| !x.is_zero()) {
            let next = self.a.apply_row(&cur)?;
            rows.push(cur);
            cur = next;
        }
        let basis = CycloMatrix::from_rows(self.order, self.dim(), rows)?;
        self.restrict(&basis)
    }
}

fn same_order(m: &TaftModule, n: &TaftModule) -> Result<()> {
    if m.order != n.order {
        return Err(Error::domain(format!(
            "modules over different orders {} and {}",
            m.order, n.order
        )));
    }
    Ok(())
}

/// `P_i J^r` on the basis `v_k = e_i a^{r+k}`: `A` shifts `v_k → v_{k+1}` and
/// `b` acts on `v_k` by `q^{n-i+1-(r+k)}`.
pub fn projective_module(i: u32, r: u32, order: Order) -> Result<TaftModule> {
    let n = order.get();
    if !(1..=n).contains(&i) || r >= n {
        return Err(Error::domain(format!(
            "P_{i}J^{r} needs 1 <= i <= {n} and 0 <= r < {n}"
        )));
    }
    let dim = (n - r) as usize;
    let diag: Vec<CycloScalar> = (0..dim)
        .map(|k| CycloScalar::root_pow(order, n as i64 - i as i64 + 1 - (r as i64 + k as i64)))
        .collect();
    let mut a = CycloMatrix::zeros(order, dim, dim);
    for k in 1..dim {
        a.set(k - 1, k, CycloScalar::one(order));
    }
    TaftModule::new(CycloMatrix::diagonal(order, &diag), a)
}

/// The indecomposable with label `M(ℓ, r)`.
pub fn standard_module(label: IndecLabel, order: Order) -> Result<TaftModule> {
    let (i, r) = label_to_pj(label, order)?;
    projective_module(i, r, order)
}

/// `M ⊗ N` through `Δ(b) = b ⊗ b` and `Δ(a) = a ⊗ b + 1 ⊗ a`.
pub fn tensor_module(m: &TaftModule, n: &TaftModule) -> Result<TaftModule> {
    same_order(m, n)?;
    let b = m.b.kron(&n.b)?;
    let id = CycloMatrix::identity(m.order, m.dim());
    let a = m.a.kron(&n.b)?.checked_add(&id.kron(&n.a)?)?;
    TaftModule::new(b, a)
}

pub fn direct_sum(m: &TaftModule, n: &TaftModule) -> Result<TaftModule> {
    same_order(m, n)?;
    TaftModule::new_unchecked(m.b.block_diag(&n.b)?, m.a.block_diag(&n.a)?)
}
