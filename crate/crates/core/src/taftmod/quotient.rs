use super::TaftModule;
use crate::error::{Error, Result};
use crate::qarith::{q_binomial, q_int, CycloMatrix, CycloScalar, Order};

/// Position of `e_{i,j}` in the basis of `Q`: `j` major, `i` minor, `i` taken mod `n`.
pub fn q_index(i: i64, j: u32, order: Order) -> usize {
    j as usize * order.usize() + order.residue(i) as usize
}

/// `Q` from its action formulas: `e_{i,j}.b = q^j e_{i,j}` and
/// `e_{i,j}.a = (j)_q (e_{i,j-1} - q^{j-1} e_{i+1,j-1})`.
pub fn module_of_q_direct(order: Order) -> TaftModule {
    let n = order.get();
    let dim = (n * n) as usize;
    let mut b = CycloMatrix::zeros(order, dim, dim);
    let mut a = CycloMatrix::zeros(order, dim, dim);
    for j in 0..n {
        let qj = CycloScalar::root_pow(order, j as i64);
        let coeff = q_int(j as u64, order);
        for i in 0..n as i64 {
            let row = q_index(i, j, order);
            b.set(row, row, qj.clone());
            if j == 0 {
                continue;
            }
            a.set(row, q_index(i, j - 1, order), coeff.clone());
            let other = -(&coeff * &CycloScalar::root_pow(order, j as i64 - 1));
            a.set(row, q_index(i + 1, j - 1, order), other);
        }
    }
    TaftModule::new_unchecked(b, a).expect("square matrices of equal size")
}

/// `u_ℓ = Σ_{i=1}^{n} q^{i(ℓ-1)} C(i+n-2, n-1)_q e_{i,ℓ-1}` for `1 ≤ ℓ ≤ n`.
pub fn u_vector(l: u32, order: Order) -> Result<Vec<CycloScalar>> {
    let n = order.get();
    if !(1..=n).contains(&l) {
        return Err(Error::domain(format!("u_{l} requested for order {n}")));
    }
    let mut v = vec![CycloScalar::zero(order); (n * n) as usize];
    for i in 1..=n as i64 {
        let c = q_binomial(i + n as i64 - 2, n as i64 - 1, order)?;
        let coeff = CycloScalar::root_pow(order, i * (l as i64 - 1)) * c;
        v[q_index(i, l - 1, order)] += &coeff;
    }
    Ok(v)
}

/// `w_ℓ = Σ_{i=1}^{n} q^{-i(ℓ+1)} C(i+ℓ-2, ℓ-1)_q e_{i,n-1}` for `1 ≤ ℓ ≤ n`.
pub fn w_vector(l: u32, order: Order) -> Result<Vec<CycloScalar>> {
    let n = order.get();
    if !(1..=n).contains(&l) {
        return Err(Error::domain(format!("w_{l} requested for order {n}")));
    }
    let mut v = vec![CycloScalar::zero(order); (n * n) as usize];
    for i in 1..=n as i64 {
        let c = q_binomial(i + l as i64 - 2, l as i64 - 1, order)?;
        let coeff = CycloScalar::root_pow(order, -i * (l as i64 + 1)) * c;
        v[q_index(i, n - 1, order)] += &coeff;
    }
    Ok(v)
}

/// The generating vectors `u_1, …, u_n` and `w_1, …, w_{n-1}` of the summands of `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialVectors {
    /// `u[ℓ-1] = u_ℓ`
    pub u: Vec<Vec<CycloScalar>>,
    /// `w[ℓ-1] = w_ℓ`
    pub w: Vec<Vec<CycloScalar>>,
}

pub fn special_basis_vectors(order: Order) -> Result<SpecialVectors> {
    let n = order.get();
    let u = (1..=n).map(|l| u_vector(l, order)).collect::<Result<Vec<_>>>()?;
    let w = (1..n).map(|l| w_vector(l, order)).collect::<Result<Vec<_>>>()?;
    if u[n as usize - 1] != w_vector(n, order)? {
        return Err(Error::invariant("u_n differs from w_n"));
    }
    for l in 1..=n {
        let mut short = vec![CycloScalar::zero(order); (n * n) as usize];
        short[q_index(1, l - 1, order)] = CycloScalar::root_pow(order, l as i64 - 1);
        if u[l as usize - 1] != short {
            return Err(Error::invariant(format!("u_{l} differs from q^{} e_(1,{})", l - 1, l - 1)));
        }
    }
    Ok(SpecialVectors { u, w })
}
