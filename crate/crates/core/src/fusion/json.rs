//! JSON model format. Top-level fields: `labels` (index 0 is the vacuum
//! "0"), `dual`, `N` as `[a, b, c, value]` rows, `F` as records with
//! explicit row/column vertex enumerations and row-major `[re, im]`
//! entries, `R` as diagonal phase lists, and `tol`. Unknown fields are
//! rejected.

use std::collections::{BTreeMap, HashMap};

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::system::{FBlock, FusionSystem};
use crate::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    labels: Vec<String>,
    dual: BTreeMap<String, String>,
    #[serde(rename = "N")]
    n: Vec<(String, String, String, u32)>,
    #[serde(rename = "F")]
    f: Vec<FRecord>,
    #[serde(rename = "R")]
    r: Vec<RRecord>,
    tol: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FRecord {
    a: String,
    b: String,
    c: String,
    d: String,
    rows: Vec<(String, u32, u32)>,
    cols: Vec<(String, u32, u32)>,
    entries: Vec<[f64; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RRecord {
    a: String,
    b: String,
    c: String,
    phases: Vec<[f64; 2]>,
}

/// Parse a fusion system from its JSON description.
pub fn from_json_str(name: &str, text: &str) -> Result<FusionSystem> {
    let file: ModelFile = serde_json::from_str(text)?;
    let labels = file.labels;
    let idx = |s: &str| -> Result<usize> {
        labels
            .iter()
            .position(|l| l == s)
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    };
    let mut dual = Vec::with_capacity(labels.len());
    for l in &labels {
        let d = file
            .dual
            .get(l)
            .ok_or_else(|| Error::ModelData(format!("label {l:?} has no dual entry")))?;
        dual.push(idx(d)?);
    }
    let mut n = HashMap::new();
    for (a, b, c, v) in &file.n {
        n.insert((idx(a)?, idx(b)?, idx(c)?), *v);
    }
    let mut f = HashMap::new();
    for rec in &file.f {
        let key = (idx(&rec.a)?, idx(&rec.b)?, idx(&rec.c)?, idx(&rec.d)?);
        let mut rows = Vec::new();
        for (e, mu, nu) in &rec.rows {
            rows.push((idx(e)?, *mu, *nu));
        }
        let mut cols = Vec::new();
        for (x, rho, delta) in &rec.cols {
            cols.push((idx(x)?, *rho, *delta));
        }
        if rec.entries.len() != rows.len() * cols.len() {
            return Err(Error::ModelData(format!(
                "F-block {}{}{}->{} has {} entries, expected {}",
                rec.a,
                rec.b,
                rec.c,
                rec.d,
                rec.entries.len(),
                rows.len() * cols.len()
            )));
        }
        let mat = DMatrix::from_row_slice(
            rows.len(),
            cols.len(),
            &rec.entries.iter().map(|&[re, im]| Complex64::new(re, im)).collect::<Vec<_>>(),
        );
        f.insert(key, FBlock { rows, cols, mat });
    }
    let mut r = HashMap::new();
    for rec in &file.r {
        let key = (idx(&rec.a)?, idx(&rec.b)?, idx(&rec.c)?);
        r.insert(key, rec.phases.iter().map(|&[re, im]| Complex64::new(re, im)).collect());
    }
    FusionSystem::assemble(name, labels, dual, n, f, r, file.tol)
}

/// Serialize a fusion system to the JSON model format (deterministic field
/// order, keys sorted).
pub fn to_json_string(sys: &FusionSystem) -> Result<String> {
    let name = |q: usize| sys.label_name(q).to_string();
    let mut n: Vec<_> = sys
        .n_map()
        .iter()
        .filter(|(_, &v)| v > 0)
        .map(|(&(a, b, c), &v)| (name(a), name(b), name(c), v))
        .collect();
    n.sort();
    let mut f_keys: Vec<_> = sys.stored_f_keys().copied().collect();
    f_keys.sort();
    let mut f = Vec::new();
    for (a, b, c, d) in f_keys {
        let block = sys.stored_f(a, b, c, d).unwrap();
        f.push(FRecord {
            a: name(a),
            b: name(b),
            c: name(c),
            d: name(d),
            rows: block.rows.iter().map(|&(e, mu, nu)| (name(e), mu, nu)).collect(),
            cols: block.cols.iter().map(|&(x, rho, delta)| (name(x), rho, delta)).collect(),
            entries: block.mat.row_iter().flat_map(|row| {
                row.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>()
            }).collect(),
        });
    }
    let mut r_keys: Vec<_> = sys.stored_r_keys().copied().collect();
    r_keys.sort();
    let mut r = Vec::new();
    for (a, b, c) in r_keys {
        let phases = sys.r_phases(a, b, c)?;
        r.push(RRecord {
            a: name(a),
            b: name(b),
            c: name(c),
            phases: phases.iter().map(|z| [z.re, z.im]).collect(),
        });
    }
    let file = ModelFile {
        labels: sys.labels().to_vec(),
        dual: sys
            .labels()
            .iter()
            .enumerate()
            .map(|(q, l)| (l.clone(), name(sys.dual(q))))
            .collect(),
        n,
        f,
        r,
        tol: sys.tol(),
    };
    Ok(serde_json::to_string_pretty(&file)?)
}
