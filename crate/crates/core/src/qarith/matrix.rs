//! Sparse matrices over `Q(ζ_n)` and exact Gauss-Jordan elimination.
//!
//! Rows are stored as column-sorted lists of nonzero entries. Module actions,
//! Kronecker products and PBW relation systems are all very sparse, and dense
//! storage of cyclotomic scalars would dominate memory long before arithmetic
//! dominates time.

use std::collections::BTreeMap;
use std::fmt;

use super::{CycloScalar, Order};
use crate::error::{Error, Result};

type SparseRow = Vec<(usize, CycloScalar)>;

#[derive(Clone, PartialEq, Eq)]
pub struct CycloMatrix {
    order: Order,
    rows: usize,
    cols: usize,
    data: Vec<SparseRow>,
    zero: CycloScalar,
}

/// `a - c·b` on sorted sparse rows.
fn sub_scaled(a: &[(usize, CycloScalar)], c: &CycloScalar, b: &[(usize, CycloScalar)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn lookup(row: &[(usize, CycloScalar)], j: usize) -> Option<&CycloScalar> {
    row.binary_search_by_key(&j, |e| e.0).ok().map(|k| &row[k].1)
}

fn collect_row(acc: BTreeMap<usize, CycloScalar>) -> SparseRow {
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

impl CycloMatrix {
    pub fn zeros(order: Order, rows: usize, cols: usize) -> Self {
        CycloMatrix {
            order,
            rows,
            cols,
            data: vec![Vec::new(); rows],
            zero: CycloScalar::zero(order),
        }
    }

    pub fn identity(order: Order, dim: usize) -> Self {
        let mut m = Self::zeros(order, dim, dim);
        for (i, row) in m.data.iter_mut().enumerate() {
            row.push((i, CycloScalar::one(order)));
        }
        m
    }

    pub fn diagonal(order: Order, diag: &[CycloScalar]) -> Self {
        let mut m = Self::zeros(order, diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    /// Builds a matrix from dense row-major entries.
    pub fn from_entries(
        order: Order,
        rows: usize,
        cols: usize,
        entries: Vec<CycloScalar>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.order() != order) {
            return Err(Error::IncompatibleOrder {
                left: order.get(),
                right: bad.order().get(),
            });
        }
        let mut m = Self::zeros(order, rows, cols);
        for (k, e) in entries.into_iter().enumerate() {
            if !e.is_zero() {
                m.data[k / cols.max(1)].push((k % cols.max(1), e));
            }
        }
        Ok(m)
    }

    /// Builds a matrix from dense row vectors; `cols` is needed to shape an empty list.
    pub fn from_rows(order: Order, cols: usize, rows: Vec<Vec<CycloScalar>>) -> Result<Self> {
        let n_rows = rows.len();
        let mut entries = Vec::with_capacity(n_rows * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::shape(format!(
                    "row {i} has length {} but {cols} columns were expected",
                    r.len()
                )));
            }
            entries.extend(r);
        }
        Self::from_entries(order, n_rows, cols, entries)
    }

    /// Builds a matrix from `(column, value)` lists; duplicate columns are summed.
    pub fn from_sparse_rows(
        order: Order,
        cols: usize,
        rows: Vec<Vec<(usize, CycloScalar)>>,
    ) -> Result<Self> {
        let mut m = Self::zeros(order, rows.len(), cols);
        for (i, r) in rows.into_iter().enumerate() {
            let mut acc: BTreeMap<usize, CycloScalar> = BTreeMap::new();
            for (j, v) in r {
                if j >= cols {
                    return Err(Error::shape(format!("column {j} in a matrix with {cols} columns")));
                }
                if v.order() != order {
                    return Err(Error::IncompatibleOrder {
                        left: order.get(),
                        right: v.order().get(),
                    });
                }
                match acc.get_mut(&j) {
                    Some(slot) => *slot += &v,
                    None => {
                        acc.insert(j, v);
                    }
                }
            }
            m.data[i] = collect_row(acc);
        }
        Ok(m)
    }

    #[inline]
    pub fn order(&self) -> Order {
        self.order
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycloScalar {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        lookup(&self.data[i], j).unwrap_or(&self.zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycloScalar) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        debug_assert_eq!(v.order(), self.order);
        let row = &mut self.data[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(k) if v.is_zero() => {
                row.remove(k);
            }
            Ok(k) => row[k].1 = v,
            Err(_) if v.is_zero() => {}
            Err(k) => row.insert(k, (j, v)),
        }
    }

    /// Nonzero entries of row `i`, sorted by column.
    pub fn row_entries(&self, i: usize) -> &[(usize, CycloScalar)] {
        &self.data[i]
    }

    /// Row `i` as a dense vector.
    pub fn row(&self, i: usize) -> Vec<CycloScalar> {
        let mut out = vec![self.zero.clone(); self.cols];
        for (j, v) in &self.data[i] {
            out[*j] = v.clone();
        }
        out
    }

    pub fn to_rows(&self) -> Vec<Vec<CycloScalar>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    /// Number of stored nonzero entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self
                .data
                .iter()
                .enumerate()
                .all(|(i, r)| r.len() == 1 && r[0].0 == i && r[0].1.is_one())
    }

    /// True when every off-diagonal entry vanishes.
    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && self
                .data
                .iter()
                .enumerate()
                .all(|(i, r)| r.iter().all(|(j, _)| *j == i))
    }

    fn check_order(&self, other: &CycloMatrix) -> Result<()> {
        if self.order != other.order {
            return Err(Error::IncompatibleOrder {
                left: self.order.get(),
                right: other.order.get(),
            });
        }
        Ok(())
    }

    fn same_shape(&self, other: &CycloMatrix) -> Result<()> {
        self.check_order(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &CycloMatrix) -> Result<CycloMatrix> {
        self.check_order(other)?;
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = CycloMatrix::zeros(self.order, self.rows, other.cols);
        for (i, row) in self.data.iter().enumerate() {
            let mut acc: BTreeMap<usize, CycloScalar> = BTreeMap::new();
            for (k, x) in row {
                for (j, y) in &other.data[*k] {
                    let prod = x * y;
                    match acc.get_mut(j) {
                        Some(slot) => *slot += &prod,
                        None => {
                            acc.insert(*j, prod);
                        }
                    }
                }
            }
            out.data[i] = collect_row(acc);
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &CycloMatrix) -> Result<CycloMatrix> {
        self.checked_sub(&other.scale(&-CycloScalar::one(self.order)))
    }

    pub fn checked_sub(&self, other: &CycloMatrix) -> Result<CycloMatrix> {
        self.same_shape(other)?;
        let one = CycloScalar::one(self.order);
        let mut out = CycloMatrix::zeros(self.order, self.rows, self.cols);
        for i in 0..self.rows {
            out.data[i] = sub_scaled(&self.data[i], &one, &other.data[i]);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &CycloScalar) -> CycloMatrix {
        let mut out = CycloMatrix::zeros(self.order, self.rows, self.cols);
        if s.is_zero() {
            return out;
        }
        for (i, row) in self.data.iter().enumerate() {
            out.data[i] = row.iter().map(|(j, v)| (*j, v * s)).collect();
        }
        out
    }

    pub fn transpose(&self) -> CycloMatrix {
        let mut out = CycloMatrix::zeros(self.order, self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                out.data[*j].push((i, v.clone()));
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`, with row index `i * other.rows + k`.
    pub fn kron(&self, other: &CycloMatrix) -> Result<CycloMatrix> {
        self.check_order(other)?;
        let mut out =
            CycloMatrix::zeros(self.order, self.rows * other.rows, self.cols * other.cols);
        for (i, row) in self.data.iter().enumerate() {
            for (k, orow) in other.data.iter().enumerate() {
                let target = &mut out.data[i * other.rows + k];
                for (j, x) in row {
                    for (l, y) in orow {
                        target.push((j * other.cols + l, x * y));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn block_diag(&self, other: &CycloMatrix) -> Result<CycloMatrix> {
        self.check_order(other)?;
        let mut out =
            CycloMatrix::zeros(self.order, self.rows + other.rows, self.cols + other.cols);
        out.data[..self.rows].clone_from_slice(&self.data);
        for (i, row) in other.data.iter().enumerate() {
            out.data[self.rows + i] = row.iter().map(|(j, v)| (self.cols + j, v.clone())).collect();
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<CycloMatrix> {
        if !self.is_square() {
            return Err(Error::shape("power of a non-square matrix"));
        }
        let mut acc = CycloMatrix::identity(self.order, self.rows);
        for _ in 0..e {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[CycloScalar]) -> Result<Vec<CycloScalar>> {
        if v.len() != self.rows {
            return Err(Error::shape(format!(
                "vector of length {} against a {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = vec![self.zero.clone(); self.cols];
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in &self.data[k] {
                out[*j] += &(x * y);
            }
        }
        Ok(out)
    }

    /// Selects the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> CycloMatrix {
        let mut position = vec![usize::MAX; self.cols];
        for (b, &j) in cols.iter().enumerate() {
            position[j] = b;
        }
        let mut out = CycloMatrix::zeros(self.order, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            let mut r: SparseRow = self.data[i]
                .iter()
                .filter(|(j, _)| position[*j] != usize::MAX)
                .map(|(j, v)| (position[*j], v.clone()))
                .collect();
            r.sort_by_key(|e| e.0);
            out.data[a] = r;
        }
        out
    }

    pub fn inverse(&self) -> Result<CycloMatrix> {
        if !self.is_square() {
            return Err(Error::shape("inverse of a non-square matrix"));
        }
        let n = self.rows;
        let mut aug = CycloMatrix::zeros(self.order, n, 2 * n);
        for i in 0..n {
            let mut r = self.data[i].clone();
            r.push((n + i, CycloScalar::one(self.order)));
            aug.data[i] = r;
        }
        let ech = row_reduce(&aug);
        if ech.rank < n || ech.pivots[..n].iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::ZeroDivisor);
        }
        let idx: Vec<usize> = (0..n).collect();
        let right: Vec<usize> = (n..2 * n).collect();
        Ok(ech.reduced.submatrix(&idx, &right))
    }

    /// Solves `X · self = targets` for `X`, where the rows of `self` are independent.
    /// Returns `None` when some target row is outside the row space.
    pub fn solve_left(&self, targets: &CycloMatrix) -> Result<Option<CycloMatrix>> {
        if targets.cols != self.cols {
            return Err(Error::shape(format!(
                "targets have {} columns, basis has {}",
                targets.cols, self.cols
            )));
        }
        let k = self.rows;
        let m = targets.rows;
        // Columns of the augmented system are [basis rows | target rows].
        let mut aug = CycloMatrix::zeros(self.order, self.cols, k + m);
        for (i, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                aug.data[*c].push((i, v.clone()));
            }
        }
        for (t, row) in targets.data.iter().enumerate() {
            for (c, v) in row {
                aug.data[*c].push((k + t, v.clone()));
            }
        }
        let ech = row_reduce(&aug);
        let basis_pivots = ech.pivots.iter().take_while(|&&p| p < k).count();
        if basis_pivots < k {
            return Err(Error::invariant("solve_left: basis rows are dependent"));
        }
        if ech.rank > k {
            return Ok(None);
        }
        let mut out = CycloMatrix::zeros(self.order, m, k);
        for i in 0..k {
            for (c, v) in &ech.reduced.data[i] {
                if *c >= k {
                    out.data[c - k].push((i, v.clone()));
                }
            }
        }
        Ok(Some(out))
    }

    /// Basis (as rows) of `{v : v · self = 0}`.
    pub fn left_kernel(&self) -> CycloMatrix {
        let ech = row_reduce(&self.transpose());
        let mut is_pivot = vec![false; self.rows];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for f in (0..self.rows).filter(|&f| !is_pivot[f]) {
            let mut v = vec![(f, CycloScalar::one(self.order))];
            for (i, &p) in ech.pivots.iter().enumerate() {
                if let Some(x) = lookup(&ech.reduced.data[i], f) {
                    v.push((p, -x));
                }
            }
            v.sort_by_key(|e| e.0);
            out.push(v);
        }
        let mut m = CycloMatrix::zeros(self.order, out.len(), self.rows);
        m.data = out;
        m
    }
}

impl fmt::Debug for CycloMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CycloMatrix {}x{} over Q(z_{})", self.rows, self.cols, self.order)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form together with its rank and pivot columns.
#[derive(Debug, Clone)]
pub struct RowEchelon {
    /// Same shape as the input; the first `rank` rows are the reduced basis.
    pub reduced: CycloMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Exact Gauss-Jordan elimination.
///
/// Rows are absorbed one at a time into a fully reduced pivot set, so the
/// result is the unique reduced row-echelon form of the input.
pub fn row_reduce(m: &CycloMatrix) -> RowEchelon {
    let order = m.order;
    // pivot column -> fully reduced row with a leading one there
    let mut basis: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for row in &m.data {
        let mut r = row.clone();
        let hits: Vec<(usize, CycloScalar)> = r
            .iter()
            .filter(|(j, _)| basis.contains_key(j))
            .cloned()
            .collect();
        for (p, c) in hits {
            r = sub_scaled(&r, &c, &basis[&p]);
        }
        let Some((lead, lead_val)) = r.first().cloned() else {
            continue;
        };
        if !lead_val.is_one() {
            let inv = lead_val.inv().expect("leading entry is nonzero");
            for e in r.iter_mut() {
                e.1 *= &inv;
            }
        }
        for other in basis.values_mut() {
            if let Some(c) = lookup(other, lead).cloned() {
                *other = sub_scaled(other, &c, &r);
            }
        }
        basis.insert(lead, r);
    }
    let rank = basis.len();
    let pivots: Vec<usize> = basis.keys().copied().collect();
    let mut reduced = CycloMatrix::zeros(order, m.rows, m.cols);
    for (i, row) in basis.into_values().enumerate() {
        reduced.data[i] = row;
    }
    RowEchelon {
        reduced,
        rank,
        pivots,
    }
}

/// The quotient `F^d / W` of a coordinate space by a row-spanned subspace.
///
/// The coset basis consists of the standard vectors on the non-pivot columns of
/// the reduced basis of `W`.
#[derive(Debug, Clone)]
pub struct SubspaceQuotient {
    ambient_dim: usize,
    basis: RowEchelon,
    free_cols: Vec<usize>,
}

impl SubspaceQuotient {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn subspace_dim(&self) -> usize {
        self.basis.rank
    }

    pub fn dim(&self) -> usize {
        self.free_cols.len()
    }

    /// Ambient coordinates indexing the coset basis.
    pub fn free_cols(&self) -> &[usize] {
        &self.free_cols
    }

    pub fn coset_basis(&self) -> CycloMatrix {
        let order = self.basis.reduced.order();
        let mut m = CycloMatrix::zeros(order, self.free_cols.len(), self.ambient_dim);
        for (i, &c) in self.free_cols.iter().enumerate() {
            m.set(i, c, CycloScalar::one(order));
        }
        m
    }

    /// Coordinates of `v + W` on the coset basis.
    pub fn project(&self, v: &[CycloScalar]) -> Result<Vec<CycloScalar>> {
        if v.len() != self.ambient_dim {
            return Err(Error::shape(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                self.ambient_dim
            )));
        }
        let mut v = v.to_vec();
        for (i, &p) in self.basis.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (j, x) in self.basis.reduced.row_entries(i) {
                let delta = &c * x;
                v[*j] -= &delta;
            }
        }
        Ok(self.free_cols.iter().map(|&c| v[c].clone()).collect())
    }
}

pub fn subspace_quotient(ambient_dim: usize, subspace_rows: &CycloMatrix) -> Result<SubspaceQuotient> {
    if subspace_rows.cols() != ambient_dim {
        return Err(Error::shape(format!(
            "subspace rows have {} columns, ambient dimension is {ambient_dim}",
            subspace_rows.cols()
        )));
    }
    let basis = row_reduce(subspace_rows);
    let mut is_pivot = vec![false; ambient_dim];
    for &p in &basis.pivots {
        is_pivot[p] = true;
    }
    let free_cols = (0..ambient_dim).filter(|&c| !is_pivot[c]).collect();
    Ok(SubspaceQuotient {
        ambient_dim,
        basis,
        free_cols,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ord(n: u32) -> Order {
        Order::new(n).unwrap()
    }

    fn int(o: Order, k: i64) -> CycloScalar {
        CycloScalar::from_integer(o, k)
    }

    #[test]
    fn identity_and_zero_ranks() {
        let o = ord(3);
        assert_eq!(row_reduce(&CycloMatrix::identity(o, 3)).rank, 3);
        assert_eq!(row_reduce(&CycloMatrix::zeros(o, 3, 4)).rank, 0);
    }

    #[test]
    fn sweedler_dependent_rows() {
        let o = ord(2);
        let q = CycloScalar::root(o);
        let m = CycloMatrix::from_rows(o, 2, vec![vec![int(o, 1), q.clone()], vec![q, int(o, 1)]])
            .unwrap();
        let ech = row_reduce(&m);
        assert_eq!(ech.rank, 1);
        assert_eq!(ech.pivots, vec![0]);
    }

    #[test]
    fn quotient_edge_cases() {
        let o = ord(3);
        let full = subspace_quotient(3, &CycloMatrix::identity(o, 3)).unwrap();
        assert_eq!(full.dim(), 0);
        let none = subspace_quotient(3, &CycloMatrix::zeros(o, 0, 3)).unwrap();
        assert_eq!(none.coset_basis(), CycloMatrix::identity(o, 3));
        assert!(subspace_quotient(4, &CycloMatrix::identity(o, 3)).is_err());
    }

    #[test]
    fn quotient_by_diagonal_line() {
        // span{(1,1)}: pivot on column 0, coset basis e_1, and (0,1) ↦ 1, (1,0) ↦ -1.
        let o = ord(3);
        let w = CycloMatrix::from_rows(o, 2, vec![vec![int(o, 1), int(o, 1)]]).unwrap();
        let q = subspace_quotient(2, &w).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.project(&[int(o, 0), int(o, 1)]).unwrap(), vec![int(o, 1)]);
        assert_eq!(q.project(&[int(o, 1), int(o, 0)]).unwrap(), vec![int(o, -1)]);
        assert_eq!(q.project(&[int(o, 2), int(o, 2)]).unwrap(), vec![int(o, 0)]);
        assert!(q.project(&[int(o, 1)]).is_err());
    }

    #[test]
    fn inverse_and_solve() {
        let o = ord(5);
        let q = CycloScalar::root(o);
        let m = CycloMatrix::from_rows(
            o,
            2,
            vec![vec![q.clone(), int(o, 1)], vec![int(o, 2), &q * &q]],
        )
        .unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.checked_mul(&inv).unwrap().is_identity());
        let target = CycloMatrix::from_rows(o, 2, vec![vec![int(o, 3), int(o, 4)]]).unwrap();
        let x = m.solve_left(&target).unwrap().unwrap();
        assert_eq!(x.checked_mul(&m).unwrap(), target);
        let line = CycloMatrix::from_rows(o, 2, vec![vec![int(o, 1), int(o, 0)]]).unwrap();
        assert!(line.solve_left(&target).unwrap().is_none());
        assert!(CycloMatrix::zeros(o, 2, 2).inverse().is_err());
    }

    #[test]
    fn sparse_storage_stays_canonical() {
        let o = ord(4);
        let mut m = CycloMatrix::zeros(o, 2, 3);
        m.set(0, 2, int(o, 5));
        m.set(0, 0, int(o, 1));
        m.set(0, 2, int(o, 0));
        assert_eq!(m.nnz(), 1);
        let built = CycloMatrix::from_sparse_rows(
            o,
            3,
            vec![vec![(0, int(o, 3)), (0, int(o, -2))], vec![(1, int(o, 1)), (1, int(o, -1))]],
        )
        .unwrap();
        assert_eq!(built, m);
        assert!(CycloMatrix::from_sparse_rows(o, 3, vec![vec![(3, int(o, 1))]]).is_err());
        assert_eq!(m.row(0), vec![int(o, 1), int(o, 0), int(o, 0)]);
    }

    #[test]
    fn kron_and_block_diag_against_dense_formulas() {
        let o = ord(3);
        let q = CycloScalar::root(o);
        let a = CycloMatrix::from_rows(o, 2, vec![vec![int(o, 1), q.clone()], vec![int(o, 0), int(o, 2)]])
            .unwrap();
        let b = CycloMatrix::from_rows(o, 2, vec![vec![int(o, 0), int(o, 1)], vec![q.clone(), int(o, 0)]])
            .unwrap();
        let k = a.kron(&b).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for r in 0..2 {
                    for s in 0..2 {
                        assert_eq!(k.get(i * 2 + r, j * 2 + s), &(a.get(i, j) * b.get(r, s)));
                    }
                }
            }
        }
        // (A ⊗ B)(C ⊗ D) = AC ⊗ BD
        let lhs = k.checked_mul(&b.kron(&a).unwrap()).unwrap();
        let rhs = a.checked_mul(&b).unwrap().kron(&b.checked_mul(&a).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let d = a.block_diag(&b).unwrap();
        assert_eq!(d.get(3, 2), &q);
        assert!(d.get(0, 3).is_zero());
        assert_eq!(a.checked_add(&b).unwrap().checked_sub(&b).unwrap(), a);
    }

    #[test]
    fn left_kernel_is_annihilated() {
        let o = ord(5);
        let q = CycloScalar::root(o);
        let m = CycloMatrix::from_rows(
            o,
            2,
            vec![
                vec![int(o, 1), q.clone()],
                vec![q.clone(), &q * &q],
                vec![int(o, 0), int(o, 1)],
            ],
        )
        .unwrap();
        let k = m.left_kernel();
        assert_eq!(k.rows(), 1);
        assert!(k.checked_mul(&m).unwrap().is_zero());
        assert_eq!(CycloMatrix::identity(o, 3).left_kernel().rows(), 0);
        assert_eq!(CycloMatrix::zeros(o, 3, 2).left_kernel().rows(), 3);
    }

    fn small_matrix() -> impl Strategy<Value = (u32, usize, usize, Vec<(i64, u32)>)> {
        (2u32..=6, 1usize..=5, 1usize..=5).prop_flat_map(|(n, r, c)| {
            (
                Just(n),
                Just(r),
                Just(c),
                prop::collection::vec((-2i64..=2, 0u32..6), r * c),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn rref_is_idempotent((n, r, c, raw) in small_matrix()) {
            let o = ord(n);
            let entries = raw
                .iter()
                .map(|&(k, p)| &int(o, k) * &CycloScalar::root_pow(o, p as i64))
                .collect();
            let m = CycloMatrix::from_entries(o, r, c, entries).unwrap();
            let once = row_reduce(&m);
            let twice = row_reduce(&once.reduced);
            prop_assert_eq!(&once.reduced, &twice.reduced);
            prop_assert_eq!(once.rank, twice.rank);
            prop_assert_eq!(once.rank, row_reduce(&m.transpose()).rank);
        }
    }
}
