use serde::{Deserialize, Serialize};

use super::TaftModule;
use crate::error::{Error, Result};
use crate::qarith::{CycloMatrix, CycloScalar, Order};

/// On-disk form of a module: `{"n", "dim", "B", "A"}` with scalars as text in `z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleFile {
    pub n: u32,
    pub dim: usize,
    #[serde(rename = "B")]
    pub b: Vec<Vec<String>>,
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
}

fn render(m: &CycloMatrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(CycloScalar::to_string).collect())
        .collect()
}

fn parse_matrix(name: &str, rows: &[Vec<String>], dim: usize, order: Order) -> Result<CycloMatrix> {
    if rows.len() != dim {
        return Err(Error::Parse(format!("{name} has {} rows, expected {dim}", rows.len())));
    }
    let mut out = Vec::with_capacity(dim);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(Error::Parse(format!(
                "{name}[{i}] has {} entries, expected {dim}",
                row.len()
            )));
        }
        let mut parsed = Vec::with_capacity(dim);
        for (j, text) in row.iter().enumerate() {
            let x = CycloScalar::parse(order, text)
                .map_err(|e| Error::Parse(format!("{name}[{i}][{j}] = {text:?}: {e}")))?;
            if !x.is_zero() {
                parsed.push((j, x));
            }
        }
        out.push(parsed);
    }
    CycloMatrix::from_sparse_rows(order, dim, out)
}

impl ModuleFile {
    pub fn from_module(m: &TaftModule) -> Self {
        ModuleFile {
            n: m.order().get(),
            dim: m.dim(),
            b: render(m.b()),
            a: render(m.a()),
        }
    }

    /// Parses every entry and re-checks all module relations.
    pub fn to_module(&self) -> Result<TaftModule> {
        let order = Order::new(self.n)?;
        let b = parse_matrix("B", &self.b, self.dim, order)?;
        let a = parse_matrix("A", &self.a, self.dim, order)?;
        TaftModule::new(b, a)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("module file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("module files always serialize")
    }
}

impl TaftModule {
    pub fn to_json(&self) -> String {
        ModuleFile::from_module(self).to_json()
    }

    pub fn from_json(text: &str) -> Result<TaftModule> {
        ModuleFile::from_json(text)?.to_module()
    }
}
