use std::collections::HashMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::{Error, Result};

/// A fusion-vertex index `(channel, mu, nu)`: for an F-block row this is
/// `(e, mu in V^{ab}_e, nu in V^{ec}_d)`, for a column `(f, rho in V^{bc}_f,
/// delta in V^{af}_d)`. Multiplicity indices are 1-based.
pub type VertexPair = (usize, u32, u32);

/// One F-matrix block `F^{abc}_d`, stored with rows indexed by the
/// `(ab)c`-side channels and columns by the `a(bc)`-side channels:
/// `|(ab)c; e,mu,nu; d> = sum_{f,rho,delta} mat[row,col] |a(bc); f,rho,delta; d>`.
#[derive(Debug, Clone, PartialEq)]
pub struct FBlock {
    pub rows: Vec<VertexPair>,
    pub cols: Vec<VertexPair>,
    pub mat: DMatrix<Complex64>,
}

impl FBlock {
    pub fn entry(&self, row: VertexPair, col: VertexPair) -> Complex64 {
        let r = self.rows.iter().position(|&p| p == row);
        let c = self.cols.iter().position(|&p| p == col);
        match (r, c) {
            (Some(r), Some(c)) => self.mat[(r, c)],
            _ => Complex64::ZERO,
        }
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        if self.rows.len() != self.cols.len() {
            return false;
        }
        let n = self.rows.len();
        (0..n).all(|r| {
            (0..n).all(|c| {
                let want = if r == c { Complex64::ONE } else { Complex64::ZERO };
                (self.mat[(r, c)] - want).norm() <= tol
            })
        })
    }

    pub fn unitarity_residual(&self) -> f64 {
        let prod = &self.mat * self.mat.adjoint();
        let id = DMatrix::<Complex64>::identity(prod.nrows(), prod.ncols());
        (prod - id).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// A braided 6j fusion system: finite label set with a vacuum, duals,
/// fusion coefficients `N^{ab}_c`, unitary F-blocks and diagonal unitary
/// R-blocks, all compared within a global tolerance.
///
/// Labels are interned; index 0 is always the vacuum `"0"`. F-blocks with a
/// vacuum in any upper slot are implicit identities and are not stored, and
/// likewise `R^{q0}_q = R^{0q}_q = 1`.
#[derive(Debug, Clone)]
pub struct FusionSystem {
    pub name: String,
    labels: Vec<String>,
    dual: Vec<usize>,
    n: HashMap<(usize, usize, usize), u32>,
    f: HashMap<(usize, usize, usize, usize), FBlock>,
    r: HashMap<(usize, usize, usize), Vec<Complex64>>,
    tol: f64,
}

pub const VACUUM: usize = 0;

impl FusionSystem {
    /// Assemble a system from raw interned data, checking structural
    /// consistency (shape-level only; axiom checks live in `validate`).
    pub fn assemble(
        name: impl Into<String>,
        labels: Vec<String>,
        dual: Vec<usize>,
        n: HashMap<(usize, usize, usize), u32>,
        f: HashMap<(usize, usize, usize, usize), FBlock>,
        r: HashMap<(usize, usize, usize), Vec<Complex64>>,
        tol: f64,
    ) -> Result<Self> {
        if labels.is_empty() || labels[0] != "0" {
            return Err(Error::ModelData("label index 0 must be the vacuum \"0\"".into()));
        }
        if labels.iter().filter(|l| *l == "0").count() != 1 {
            return Err(Error::ModelData("exactly one vacuum label".into()));
        }
        let rank = labels.len();
        if dual.len() != rank || dual.iter().any(|&d| d >= rank) {
            return Err(Error::ModelData("dual map must cover every label".into()));
        }
        if !(tol >= 0.0) {
            return Err(Error::ModelData("tol must be nonnegative".into()));
        }
        let sys = Self { name: name.into(), labels, dual, n, f, r, tol };
        for (&(a, b, c, d), block) in &sys.f {
            if [a, b, c, d].iter().any(|&x| x >= rank) {
                return Err(Error::ModelData("F-block label out of range".into()));
            }
            let rows = sys.f_rows(a, b, c, d);
            let cols = sys.f_cols(a, b, c, d);
            if block.rows != rows || block.cols != cols {
                return Err(Error::ModelData(format!(
                    "F-block {}{}{}->{} rows/cols do not match the canonical enumeration",
                    sys.labels[a], sys.labels[b], sys.labels[c], sys.labels[d]
                )));
            }
            if block.mat.nrows() != rows.len() || block.mat.ncols() != cols.len() {
                return Err(Error::ModelData("F-block entry matrix has wrong shape".into()));
            }
        }
        for (&(a, b, c), phases) in &sys.r {
            if [a, b, c].iter().any(|&x| x >= rank) {
                return Err(Error::ModelData("R-block label out of range".into()));
            }
            if phases.len() != sys.n(a, b, c) as usize {
                return Err(Error::ModelData(format!(
                    "R-block {}{}->{} has {} phases, expected N = {}",
                    sys.labels[a],
                    sys.labels[b],
                    sys.labels[c],
                    phases.len(),
                    sys.n(a, b, c)
                )));
            }
        }
        Ok(sys)
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_name(&self, q: usize) -> &str {
        &self.labels[q]
    }

    pub fn label_index(&self, name: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    pub fn dual(&self, q: usize) -> usize {
        self.dual[q]
    }

    pub fn dual_map(&self) -> &[usize] {
        &self.dual
    }

    /// Fusion coefficient `N^{ab}_c` (absent entries are 0).
    pub fn n(&self, a: usize, b: usize, c: usize) -> u32 {
        self.n.get(&(a, b, c)).copied().unwrap_or(0)
    }

    pub fn admissible(&self, a: usize, b: usize, c: usize) -> bool {
        self.n(a, b, c) > 0
    }

    /// Channels `c` with `N^{ab}_c > 0`, in label order.
    pub fn channels(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.rank()).filter(|&c| self.admissible(a, b, c)).collect()
    }

    /// Canonical row enumeration of `F^{abc}_d`: `(e, mu, nu)` with `e` in
    /// label order, `mu in 1..=N^{ab}_e`, `nu in 1..=N^{ec}_d`.
    pub fn f_rows(&self, a: usize, b: usize, c: usize, d: usize) -> Vec<VertexPair> {
        let mut out = Vec::new();
        for e in 0..self.rank() {
            for mu in 1..=self.n(a, b, e) {
                for nu in 1..=self.n(e, c, d) {
                    out.push((e, mu, nu));
                }
            }
        }
        out
    }

    /// Canonical column enumeration: `(f, rho, delta)` with
    /// `rho in 1..=N^{bc}_f`, `delta in 1..=N^{af}_d`.
    pub fn f_cols(&self, a: usize, b: usize, c: usize, d: usize) -> Vec<VertexPair> {
        let mut out = Vec::new();
        for f in 0..self.rank() {
            for rho in 1..=self.n(b, c, f) {
                for delta in 1..=self.n(a, f, d) {
                    out.push((f, rho, delta));
                }
            }
        }
        out
    }

    /// Whether a block for this tuple is stored (vacuum-slot blocks are
    /// implicit and never stored by the bundled constructors).
    pub fn has_stored_f(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        self.f.contains_key(&(a, b, c, d))
    }

    pub fn stored_f_keys(&self) -> impl Iterator<Item = &(usize, usize, usize, usize)> {
        self.f.keys()
    }

    pub fn stored_f(&self, a: usize, b: usize, c: usize, d: usize) -> Option<&FBlock> {
        self.f.get(&(a, b, c, d))
    }

    pub fn stored_r_keys(&self) -> impl Iterator<Item = &(usize, usize, usize)> {
        self.r.keys()
    }

    /// The block `F^{abc}_d`. Vacuum-slot blocks are synthesized as
    /// identity; otherwise the stored block is returned, or an error if one
    /// is required (nonzero dimension) but missing.
    pub fn f_block(&self, a: usize, b: usize, c: usize, d: usize) -> Result<FBlock> {
        if let Some(block) = self.f.get(&(a, b, c, d)) {
            return Ok(block.clone());
        }
        let rows = self.f_rows(a, b, c, d);
        let cols = self.f_cols(a, b, c, d);
        if a == VACUUM || b == VACUUM || c == VACUUM || rows.is_empty() {
            let k = rows.len();
            if cols.len() != k {
                return Err(Error::ModelData(format!(
                    "vacuum F-block {}{}{}->{} is not square",
                    self.labels[a], self.labels[b], self.labels[c], self.labels[d]
                )));
            }
            return Ok(FBlock { rows, cols, mat: DMatrix::identity(k, k) });
        }
        Err(Error::MissingFBlock {
            a: self.labels[a].clone(),
            b: self.labels[b].clone(),
            c: self.labels[c].clone(),
            d: self.labels[d].clone(),
        })
    }

    /// Single F entry; zero for inadmissible vertex pairs. Avoids cloning
    /// blocks in tight verification loops.
    pub fn f_entry(
        &self,
        (a, b, c, d): (usize, usize, usize, usize),
        row: VertexPair,
        col: VertexPair,
    ) -> Result<Complex64> {
        let (e, mu, nu) = row;
        let (f, rho, delta) = col;
        if mu == 0
            || nu == 0
            || rho == 0
            || delta == 0
            || mu > self.n(a, b, e)
            || nu > self.n(e, c, d)
            || rho > self.n(b, c, f)
            || delta > self.n(a, f, d)
        {
            return Ok(Complex64::ZERO);
        }
        if let Some(block) = self.f.get(&(a, b, c, d)) {
            return Ok(block.entry(row, col));
        }
        if a == VACUUM {
            // rows (b, 1, nu), cols (d, rho, 1); identity pairs nu = rho.
            return Ok(if e == b && f == d && mu == 1 && delta == 1 && nu == rho {
                Complex64::ONE
            } else {
                Complex64::ZERO
            });
        }
        if b == VACUUM {
            return Ok(if e == a && f == c && mu == 1 && rho == 1 && nu == delta {
                Complex64::ONE
            } else {
                Complex64::ZERO
            });
        }
        if c == VACUUM {
            return Ok(if e == d && f == b && nu == 1 && rho == 1 && mu == delta {
                Complex64::ONE
            } else {
                Complex64::ZERO
            });
        }
        Err(Error::MissingFBlock {
            a: self.labels[a].clone(),
            b: self.labels[b].clone(),
            c: self.labels[c].clone(),
            d: self.labels[d].clone(),
        })
    }

    /// Diagonal phases of `R^{ab}_c` (length `N^{ab}_c`). Braiding with the
    /// vacuum is trivial and synthesized as 1.
    pub fn r_phases(&self, a: usize, b: usize, c: usize) -> Result<Vec<Complex64>> {
        let k = self.n(a, b, c) as usize;
        if k == 0 {
            return Err(Error::InadmissibleTriple(
                self.labels[a].clone(),
                self.labels[b].clone(),
                self.labels[c].clone(),
            ));
        }
        if a == VACUUM || b == VACUUM {
            return Ok(vec![Complex64::ONE; k]);
        }
        self.r
            .get(&(a, b, c))
            .cloned()
            .ok_or_else(|| Error::MissingRBlock {
                a: self.labels[a].clone(),
                b: self.labels[b].clone(),
                c: self.labels[c].clone(),
            })
    }

    /// The scalar phase `r^{ab}_c` (first diagonal entry; blocks in the
    /// bundled models are multiplicity-free).
    pub fn r_phase(&self, a: usize, b: usize, c: usize) -> Result<Complex64> {
        Ok(self.r_phases(a, b, c)?[0])
    }

    /// Replace the stored F and R data wholesale (used by gauge
    /// transformations; N, labels and duals are untouched).
    pub(crate) fn with_data(
        &self,
        f: HashMap<(usize, usize, usize, usize), FBlock>,
        r: HashMap<(usize, usize, usize), Vec<Complex64>>,
    ) -> Self {
        Self {
            name: self.name.clone(),
            labels: self.labels.clone(),
            dual: self.dual.clone(),
            n: self.n.clone(),
            f,
            r,
            tol: self.tol,
        }
    }

    pub(crate) fn n_map(&self) -> &HashMap<(usize, usize, usize), u32> {
        &self.n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::bundled_model;

    #[test]
    fn fibonacci_basic_data() {
        let fib = bundled_model("fib").unwrap();
        assert_eq!(fib.rank(), 2);
        let tau = fib.label_index("tau").unwrap();
        assert_eq!(fib.n(tau, tau, VACUUM), 1);
        assert_eq!(fib.n(tau, tau, tau), 1);
        assert_eq!(fib.channels(tau, tau), vec![VACUUM, tau]);
        assert_eq!(fib.dual(tau), tau);
        let block = fib.f_block(tau, tau, tau, tau).unwrap();
        assert_eq!(block.rows.len(), 2);
        assert!(block.unitarity_residual() < fib.tol());
    }

    #[test]
    fn vacuum_blocks_are_identity() {
        let ising = bundled_model("ising").unwrap();
        let sigma = ising.label_index("sigma").unwrap();
        let psi = ising.label_index("psi").unwrap();
        for (a, b, c, d) in [
            (VACUUM, sigma, sigma, VACUUM),
            (sigma, VACUUM, psi, sigma),
            (sigma, psi, VACUUM, sigma),
        ] {
            let block = ising.f_block(a, b, c, d).unwrap();
            assert!(block.is_identity(ising.tol()), "block {a}{b}{c}{d}");
        }
        assert_eq!(ising.r_phases(VACUUM, psi, psi).unwrap(), vec![Complex64::ONE]);
        assert_eq!(ising.r_phases(psi, VACUUM, psi).unwrap(), vec![Complex64::ONE]);
    }

    #[test]
    fn inadmissible_lookups_error() {
        let fib = bundled_model("fib").unwrap();
        let tau = fib.label_index("tau").unwrap();
        assert!(fib.r_phases(VACUUM, tau, VACUUM).is_err());
        assert!(fib.label_index("sigma").is_err());
        assert_eq!(fib.n(tau, VACUUM, VACUUM), 0);
    }
}
