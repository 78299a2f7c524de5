//! q-integers, q-factorials and Gauss polynomials evaluated at `q = ζ_n`.

use std::cell::RefCell;
use std::collections::HashMap;

use super::{CycloScalar, Order};
use crate::error::{Error, Result};

/// `(j)_q = 1 + q + ⋯ + q^{j-1}`; the empty sum for `j = 0`.
pub fn q_int(j: u64, order: Order) -> CycloScalar {
    // Full periods of n consecutive powers sum to zero.
    let r = j % order.get() as u64;
    let mut acc = CycloScalar::zero(order);
    for t in 0..r {
        acc += &CycloScalar::root_pow(order, t as i64);
    }
    acc
}

/// `(j)!_q = (j)_q ⋯ (1)_q` with `(0)!_q = 1`.
pub fn q_factorial(j: u64, order: Order) -> CycloScalar {
    let mut acc = CycloScalar::one(order);
    for t in 1..=j {
        let f = q_int(t, order);
        if f.is_zero() {
            return CycloScalar::zero(order);
        }
        acc *= &f;
    }
    acc
}

/// Pascal-style table of Gauss polynomials `C(k, j)_q` for one fixed order,
/// filled row by row through `C(k, j) = q^j C(k-1, j) + C(k-1, j-1)`.
#[derive(Debug, Clone)]
pub struct QBinomialTable {
    order: Order,
    rows: Vec<Vec<CycloScalar>>,
}

impl QBinomialTable {
    pub fn new(order: Order) -> Self {
        QBinomialTable {
            order,
            rows: vec![vec![CycloScalar::one(order)]],
        }
    }

    pub fn order(&self) -> Order {
        self.order
    }

    fn extend_to(&mut self, k: usize) {
        while self.rows.len() <= k {
            let prev = self.rows.last().expect("row 0 always present");
            let m = self.rows.len();
            let mut row = Vec::with_capacity(m + 1);
            row.push(CycloScalar::one(self.order));
            for j in 1..m {
                let qj = CycloScalar::root_pow(self.order, j as i64);
                row.push(&qj * &prev[j] + &prev[j - 1]);
            }
            row.push(CycloScalar::one(self.order));
            self.rows.push(row);
        }
    }

    /// `C(k, j)_q` on `k ≥ j ≥ 0`, plus the boundary conventions
    /// `C(k-1, -1) = 0`, `C(k, k+1) = 0` (for `k ≥ 0`) and `C(-1, 0) = 1`.
    pub fn get(&mut self, k: i64, j: i64) -> Result<CycloScalar> {
        if k == -1 && j == 0 {
            return Ok(CycloScalar::one(self.order));
        }
        if j == -1 && k >= -1 {
            return Ok(CycloScalar::zero(self.order));
        }
        if k >= 0 && j == k + 1 {
            return Ok(CycloScalar::zero(self.order));
        }
        if k >= j && j >= 0 {
            self.extend_to(k as usize);
            return Ok(self.rows[k as usize][j as usize].clone());
        }
        Err(Error::domain(format!(
            "q-binomial ({k} choose {j}) is outside the recurrence domain"
        )))
    }
}

thread_local! {
    static TABLES: RefCell<HashMap<u32, QBinomialTable>> = RefCell::new(HashMap::new());
}

/// Memoized `C(k, j)_q`; each worker thread keeps its own table.
pub fn q_binomial(k: i64, j: i64, order: Order) -> Result<CycloScalar> {
    TABLES.with(|cell| {
        cell.borrow_mut()
            .entry(order.get())
            .or_insert_with(|| QBinomialTable::new(order))
            .get(k, j)
    })
}
