//! Bundled example models: trivial, Z2 boson, semion, toric code,
//! Fibonacci and Ising. All are multiplicity-free and presented in the
//! symmetric gauge; their F/R entries are verified against the pentagon and
//! hexagon equations by the test suite rather than trusted as constants.

use std::collections::HashMap;
use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::gauge::{apply_gauge, GaugeTransformation};
use super::system::{FBlock, FusionSystem};
use crate::{Error, Result};

/// Canonical names of the bundled models.
pub fn model_names() -> &'static [&'static str] {
    &["trivial", "z2boson", "semion", "toric", "fib", "ising"]
}

/// Look up a bundled model by name (a few aliases are accepted).
pub fn bundled_model(name: &str) -> Result<FusionSystem> {
    match name.to_ascii_lowercase().as_str() {
        "trivial" => trivial(),
        "z2boson" | "z2" => z2boson(),
        "semion" => semion(),
        "toric" | "toriccode" | "toric-code" => toric(),
        "fib" | "fibonacci" => fibonacci(),
        "ising" => ising(),
        other => Err(Error::UnknownModel(other.to_string())),
    }
}

const TOL: f64 = 1e-9;

/// Incremental construction of a multiplicity-free system. Vacuum fusion
/// rules are filled in automatically; 1x1 F-blocks default to 1 unless
/// overridden.
struct MfBuilder {
    labels: Vec<String>,
    dual: Vec<usize>,
    n: HashMap<(usize, usize, usize), u32>,
    f_over: HashMap<(usize, usize, usize, usize), DMatrix<Complex64>>,
    r: HashMap<(usize, usize, usize), Complex64>,
}

impl MfBuilder {
    fn new(labels: &[&str], dual: &[&str]) -> Self {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let idx = |s: &str| labels.iter().position(|l| l == s).expect("dual label");
        let dual = dual.iter().map(|s| idx(s)).collect();
        let mut n = HashMap::new();
        for q in 0..labels.len() {
            n.insert((0, q, q), 1);
            n.insert((q, 0, q), 1);
        }
        Self { labels, dual, n, f_over: HashMap::new(), r: HashMap::new() }
    }

    fn idx(&self, s: &str) -> usize {
        self.labels.iter().position(|l| l == s).expect("known label")
    }

    fn nn(&self, a: usize, b: usize, c: usize) -> u32 {
        self.n.get(&(a, b, c)).copied().unwrap_or(0)
    }

    /// Declare `a x b = c` (and `b x a = c`) with multiplicity 1.
    fn fuse(&mut self, a: &str, b: &str, c: &str) {
        let (a, b, c) = (self.idx(a), self.idx(b), self.idx(c));
        self.n.insert((a, b, c), 1);
        self.n.insert((b, a, c), 1);
    }

    /// Override `F^{abc}_d` with a dense row-major matrix.
    fn f(&mut self, a: &str, b: &str, c: &str, d: &str, entries: &[f64]) {
        let key = (self.idx(a), self.idx(b), self.idx(c), self.idx(d));
        let k = (entries.len() as f64).sqrt() as usize;
        assert_eq!(k * k, entries.len(), "square block expected");
        let mat = DMatrix::from_row_slice(
            k,
            k,
            &entries.iter().map(|&x| Complex64::new(x, 0.0)).collect::<Vec<_>>(),
        );
        self.f_over.insert(key, mat);
    }

    /// Set `r^{ab}_c` for that ordered pair only.
    fn r(&mut self, a: &str, b: &str, c: &str, phase: Complex64) {
        let key = (self.idx(a), self.idx(b), self.idx(c));
        self.r.insert(key, phase);
    }

    /// Set `r^{ab}_c = r^{ba}_c` (symmetric gauge).
    fn r_sym(&mut self, a: &str, b: &str, c: &str, phase: Complex64) {
        self.r(a, b, c, phase);
        self.r(b, a, c, phase);
    }

    fn build(self, name: &str) -> Result<FusionSystem> {
        let rank = self.labels.len();
        let mut f = HashMap::new();
        for a in 1..rank {
            for b in 1..rank {
                for c in 1..rank {
                    for d in 0..rank {
                        let mut rows = Vec::new();
                        for e in 0..rank {
                            if self.nn(a, b, e) > 0 && self.nn(e, c, d) > 0 {
                                rows.push((e, 1, 1));
                            }
                        }
                        let mut cols = Vec::new();
                        for x in 0..rank {
                            if self.nn(b, c, x) > 0 && self.nn(a, x, d) > 0 {
                                cols.push((x, 1, 1));
                            }
                        }
                        if rows.is_empty() {
                            continue;
                        }
                        let k = rows.len();
                        assert_eq!(k, cols.len(), "fusion associativity broken in builder");
                        let mat = match self.f_over.get(&(a, b, c, d)) {
                            Some(m) => {
                                assert_eq!(m.nrows(), k, "override block size");
                                m.clone()
                            }
                            None => {
                                assert_eq!(k, 1, "multi-dimensional F-block needs an override");
                                DMatrix::from_element(1, 1, Complex64::ONE)
                            }
                        };
                        f.insert((a, b, c, d), FBlock { rows, cols, mat });
                    }
                }
            }
        }
        let mut r = HashMap::new();
        for a in 1..rank {
            for b in 1..rank {
                for c in 0..rank {
                    if self.nn(a, b, c) == 0 {
                        continue;
                    }
                    let phase = self.r.get(&(a, b, c)).ok_or_else(|| {
                        Error::ModelData(format!(
                            "missing R phase for {}{} -> {}",
                            self.labels[a], self.labels[b], self.labels[c]
                        ))
                    })?;
                    r.insert((a, b, c), vec![*phase]);
                }
            }
        }
        FusionSystem::assemble(name, self.labels, self.dual, self.n, f, r, TOL)
    }
}

fn trivial() -> Result<FusionSystem> {
    MfBuilder::new(&["0"], &["0"]).build("trivial")
}

fn z2boson() -> Result<FusionSystem> {
    let mut b = MfBuilder::new(&["0", "1"], &["0", "1"]);
    b.fuse("1", "1", "0");
    b.r_sym("1", "1", "0", Complex64::ONE);
    b.build("z2boson")
}

fn semion() -> Result<FusionSystem> {
    let mut b = MfBuilder::new(&["0", "s"], &["0", "s"]);
    b.fuse("s", "s", "0");
    b.f("s", "s", "s", "s", &[-1.0]);
    b.r_sym("s", "s", "0", Complex64::I);
    b.build("semion")
}

/// Toric code, built in its standard presentation (all F-entries +1, R
/// antisymmetric in e/m) and moved to the symmetric gauge by a diagonal
/// gauge transformation.
fn toric() -> Result<FusionSystem> {
    let one = Complex64::ONE;
    let mut b = MfBuilder::new(&["0", "e", "m", "f"], &["0", "e", "m", "f"]);
    b.fuse("e", "e", "0");
    b.fuse("m", "m", "0");
    b.fuse("f", "f", "0");
    b.fuse("e", "m", "f");
    b.fuse("e", "f", "m");
    b.fuse("m", "f", "e");
    b.r_sym("e", "e", "0", one);
    b.r_sym("m", "m", "0", one);
    b.r_sym("f", "f", "0", -one);
    b.r("e", "m", "f", one);
    b.r("m", "e", "f", -one);
    b.r("e", "f", "m", one);
    b.r("f", "e", "m", -one);
    b.r("m", "f", "e", -one);
    b.r("f", "m", "e", one);
    let standard = b.build("toric")?;
    let e = standard.label_index("e")?;
    let m = standard.label_index("m")?;
    let f = standard.label_index("f")?;
    let mut g = GaugeTransformation::identity();
    g.set(m, e, f, vec![Complex64::I])?;
    g.set(f, e, m, vec![-Complex64::I])?;
    g.set(f, m, e, vec![Complex64::I])?;
    apply_gauge(&standard, &g)
}

fn fibonacci() -> Result<FusionSystem> {
    let golden = (1.0 + 5.0f64.sqrt()) / 2.0;
    let mut b = MfBuilder::new(&["0", "tau"], &["0", "tau"]);
    b.fuse("tau", "tau", "0");
    b.fuse("tau", "tau", "tau");
    let ip = 1.0 / golden;
    let is = 1.0 / golden.sqrt();
    b.f("tau", "tau", "tau", "tau", &[ip, is, is, -ip]);
    b.r_sym("tau", "tau", "0", Complex64::cis(-4.0 * PI / 5.0));
    b.r_sym("tau", "tau", "tau", Complex64::cis(3.0 * PI / 5.0));
    b.build("fib")
}

fn ising() -> Result<FusionSystem> {
    let s = 1.0 / 2.0f64.sqrt();
    let mut b = MfBuilder::new(&["0", "sigma", "psi"], &["0", "sigma", "psi"]);
    b.fuse("sigma", "sigma", "0");
    b.fuse("sigma", "sigma", "psi");
    b.fuse("sigma", "psi", "sigma");
    b.fuse("psi", "psi", "0");
    b.f("sigma", "sigma", "sigma", "sigma", &[s, s, s, -s]);
    b.f("sigma", "psi", "sigma", "psi", &[-1.0]);
    b.f("psi", "sigma", "psi", "sigma", &[-1.0]);
    b.r_sym("sigma", "sigma", "0", Complex64::cis(-PI / 8.0));
    b.r_sym("sigma", "sigma", "psi", Complex64::cis(3.0 * PI / 8.0));
    b.r_sym("sigma", "psi", "sigma", -Complex64::I);
    b.r_sym("psi", "psi", "0", -Complex64::ONE);
    b.build("ising")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::validate;

    #[test]
    fn all_models_validate() {
        for name in model_names() {
            let sys = bundled_model(name).unwrap();
            let report = validate(&sys).unwrap();
            assert!(report.passed(), "{name}: {report}");
            assert!(report.worst_residual() < sys.tol(), "{name}");
        }
    }

    #[test]
    fn toric_data_is_symmetric_gauge() {
        let toric = bundled_model("toric").unwrap();
        for a in 0..toric.rank() {
            for b in 0..toric.rank() {
                for c in 0..toric.rank() {
                    if toric.admissible(a, b, c) {
                        let ab = toric.r_phase(a, b, c).unwrap();
                        let ba = toric.r_phase(b, a, c).unwrap();
                        assert!((ab - ba).norm() < 1e-12, "{a}{b}{c}");
                    }
                }
            }
        }
        let e = toric.label_index("e").unwrap();
        let m = toric.label_index("m").unwrap();
        let f = toric.label_index("f").unwrap();
        assert!((toric.r_phase(e, m, f).unwrap() - Complex64::I).norm() < 1e-12);
        assert!((toric.r_phase(e, f, m).unwrap() + Complex64::I).norm() < 1e-12);
        assert!((toric.r_phase(m, f, e).unwrap() + Complex64::I).norm() < 1e-12);
    }

    #[test]
    fn unknown_model_name() {
        assert!(bundled_model("no-such-model").is_err());
    }

    #[test]
    fn packaged_files_match_constructors() {
        let files = [
            ("trivial", include_str!("../../models/trivial.json")),
            ("z2boson", include_str!("../../models/z2boson.json")),
            ("semion", include_str!("../../models/semion.json")),
            ("toric", include_str!("../../models/toric.json")),
            ("fib", include_str!("../../models/fib.json")),
            ("ising", include_str!("../../models/ising.json")),
        ];
        for (name, text) in files {
            let sys = bundled_model(name).unwrap();
            let expect = crate::fusion::to_json_string(&sys).unwrap();
            assert_eq!(text.trim_end(), expect, "packaged file for {name} is stale");
        }
    }
}
