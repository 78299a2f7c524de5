use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::{standard_module, TaftModule};
use crate::error::{Error, Result};
use crate::greenring::{GreenElement, IndecLabel};
use crate::qarith::{row_reduce, CycloMatrix, CycloScalar, Order};

/// Exponent `j` with `x = q^j`, if any.
fn root_exponent(x: &CycloScalar, powers: &[CycloScalar]) -> Option<usize> {
    powers.iter().position(|p| p == x)
}

fn root_powers(order: Order) -> Vec<CycloScalar> {
    (0..order.get() as i64)
        .map(|j| CycloScalar::root_pow(order, j))
        .collect()
}

/// Bases (as matrix rows) of the eigenspaces of `B` for `q^0, …, q^{n-1}`.
pub fn grade_decompose(m: &TaftModule) -> Result<Vec<CycloMatrix>> {
    let order = m.order();
    let n = order.usize();
    let dim = m.dim();
    let powers = root_powers(order);
    let grades: Vec<CycloMatrix> = if m.b().is_diagonal() {
        let mut by_grade = vec![Vec::new(); n];
        for i in 0..dim {
            let j = root_exponent(m.b().get(i, i), &powers).ok_or_else(|| {
                Error::invariant(format!("B[{i}][{i}] = {} is not a power of q", m.b().get(i, i)))
            })?;
            by_grade[j].push(vec![(i, CycloScalar::one(order))]);
        }
        by_grade
            .into_iter()
            .map(|g| CycloMatrix::from_sparse_rows(order, dim, g))
            .collect::<Result<_>>()?
    } else {
        (0..n)
            .map(|j| {
                let shifted = m
                    .b()
                    .checked_sub(&CycloMatrix::identity(order, dim).scale(&powers[j]))?;
                Ok(shifted.left_kernel())
            })
            .collect::<Result<_>>()?
    };
    let total: usize = grades.iter().map(CycloMatrix::rows).sum();
    if total != dim {
        return Err(Error::invariant(format!(
            "B is not diagonalizable over powers of q: eigenspaces span {total} of {dim} dimensions"
        )));
    }
    // a maps grade j into grade j - 1
    for (j, g) in grades.iter().enumerate() {
        let target = &grades[(j + n - 1) % n];
        if target.solve_left(&g.checked_mul(m.a())?)?.is_none() {
            return Err(Error::invariant(format!("A does not map grade {j} into grade {}", (j + n - 1) % n)));
        }
    }
    Ok(grades)
}

/// Multiplicities of graded Jordan chains, keyed by `(top grade, length)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GradedJordanSignature {
    pub multiplicities: BTreeMap<(u32, u32), u64>,
}

impl GradedJordanSignature {
    pub fn get(&self, top_grade: u32, length: u32) -> u64 {
        self.multiplicities.get(&(top_grade, length)).copied().unwrap_or(0)
    }

    /// `Σ ℓ · mult`.
    pub fn total_dim(&self) -> u64 {
        self.multiplicities
            .iter()
            .map(|(&(_, l), &m)| l as u64 * m)
            .sum()
    }
}

/// For each grade `j`, the ranks `ρ(j, k)` of `A^k` restricted to grade `j`, `k = 0..=n`.
fn restricted_ranks(m: &TaftModule) -> Result<Vec<Vec<usize>>> {
    let order = m.order();
    let n = order.usize();
    let grades = grade_decompose(m)?;
    // A in the grade-adapted basis, cut into blocks grade j -> grade j - 1.
    let stacked_rows: Vec<Vec<(usize, CycloScalar)>> = grades
        .iter()
        .flat_map(|g| (0..g.rows()).map(move |i| g.row_entries(i).to_vec()))
        .collect();
    let t = CycloMatrix::from_sparse_rows(order, m.dim(), stacked_rows)?;
    let adapted = if m.b().is_diagonal() {
        let perm: Vec<usize> = (0..t.rows()).map(|i| t.row_entries(i)[0].0).collect();
        m.a().submatrix(&perm, &perm)
    } else {
        t.checked_mul(m.a())?.checked_mul(&t.inverse()?)?
    };
    let mut offsets = vec![0usize];
    for g in &grades {
        offsets.push(offsets.last().unwrap() + g.rows());
    }
    let range = |j: usize| (offsets[j]..offsets[j + 1]).collect::<Vec<_>>();
    let blocks: Vec<CycloMatrix> = (0..n)
        .map(|j| adapted.submatrix(&range(j), &range((j + n - 1) % n)))
        .collect();
    let mut ranks = vec![vec![0usize; n + 1]; n];
    for j in 0..n {
        let d = grades[j].rows();
        ranks[j][0] = d;
        let mut image = CycloMatrix::identity(order, d);
        for (k, rank) in ranks[j].iter_mut().enumerate().skip(1) {
            if image.rows() == 0 {
                break;
            }
            let grade = (j + n * k - (k - 1)) % n;
            let moved = image.checked_mul(&blocks[grade])?;
            let ech = row_reduce(&moved);
            *rank = ech.rank;
            let keep: Vec<usize> = (0..ech.rank).collect();
            let cols: Vec<usize> = (0..moved.cols()).collect();
            image = ech.reduced.submatrix(&keep, &cols);
        }
        if ranks[j][n] != 0 {
            return Err(Error::invariant("A^n is not zero"));
        }
    }
    Ok(ranks)
}

/// Chain multiplicities from restricted ranks:
/// `m(j, ℓ) = [ρ(j, ℓ-1) - ρ(j, ℓ)] - [ρ(j+1, ℓ) - ρ(j+1, ℓ+1)]`.
pub fn jordan_signature(m: &TaftModule) -> Result<GradedJordanSignature> {
    let n = m.order().usize();
    let ranks = restricted_ranks(m)?;
    let rho = |j: usize, k: usize| -> i64 { if k > n { 0 } else { ranks[j % n][k] as i64 } };
    let mut sig = GradedJordanSignature::default();
    for j in 0..n {
        for l in 1..=n {
            let mult = (rho(j, l - 1) - rho(j, l)) - (rho(j + 1, l) - rho(j + 1, l + 1));
            if mult < 0 {
                return Err(Error::invariant(format!(
                    "negative chain multiplicity {mult} at top grade {j}, length {l}"
                )));
            }
            if mult > 0 {
                sig.multiplicities.insert((j as u32, l as u32), mult as u64);
            }
        }
    }
    if sig.total_dim() != m.dim() as u64 {
        return Err(Error::invariant(format!(
            "chains cover {} of {} dimensions",
            sig.total_dim(),
            m.dim()
        )));
    }
    Ok(sig)
}

/// The frozen dictionary `(top grade, length) → M(ℓ, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CalibrationTable {
    order: Order,
    entries: BTreeMap<(u32, u32), IndecLabel>,
}

impl CalibrationTable {
    fn build(order: Order) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for label in IndecLabel::all(order) {
            let sig = jordan_signature(&standard_module(label, order)?)?;
            let mut keys = sig.multiplicities.iter();
            let (key, mult) = match (keys.next(), keys.next()) {
                (Some((&key, &mult)), None) => (key, mult),
                _ => {
                    return Err(Error::invariant(format!(
                        "standard module {label} is not a single chain"
                    )))
                }
            };
            if mult != 1 || entries.insert(key, label).is_some() {
                return Err(Error::invariant(format!(
                    "calibration is not a bijection at (grade {}, length {})",
                    key.0, key.1
                )));
            }
        }
        Ok(CalibrationTable { order, entries })
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn label(&self, top_grade: u32, length: u32) -> Option<IndecLabel> {
        self.entries.get(&(top_grade, length)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), IndecLabel)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }
}

static CALIBRATION: OnceLock<Mutex<HashMap<u32, Arc<CalibrationTable>>>> = OnceLock::new();

/// The calibration table for `order`, built once per process.
pub fn calibration_table(order: Order) -> Result<Arc<CalibrationTable>> {
    let cache = CALIBRATION.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("calibration cache poisoned").get(&order.get()) {
        return Ok(t.clone());
    }
    let table = Arc::new(CalibrationTable::build(order)?);
    cache
        .lock()
        .expect("calibration cache poisoned")
        .entry(order.get())
        .or_insert_with(|| table.clone());
    Ok(table)
}

/// The Krull-Schmidt decomposition of `m` as a Green-ring element.
pub fn decompose(m: &TaftModule) -> Result<GreenElement> {
    let sig = jordan_signature(m)?;
    let table = calibration_table(m.order())?;
    let mut out = GreenElement::new();
    for (&(j, l), &mult) in &sig.multiplicities {
        let label = table
            .label(j, l)
            .ok_or_else(|| Error::invariant(format!("no calibrated label for grade {j}, length {l}")))?;
        out.add_label(label, mult);
    }
    Ok(out)
}
