//! Monodromy phases, topological twists, transparency and the
//! fusion-algebra axioms.

use num_complex::Complex64;

use super::system::{FusionSystem, VACUUM};
use crate::{Error, Result};

/// Topological spins `theta_q`, indexed like the system's labels.
#[derive(Debug, Clone, PartialEq)]
pub struct TwistAssignment {
    pub theta: Vec<Complex64>,
}

/// The monodromy phase `m^{ab}_c = r^{ba}_c · r^{ab}_c`.
pub fn monodromy(sys: &FusionSystem, a: usize, b: usize, c: usize) -> Result<Complex64> {
    Ok(sys.r_phase(b, a, c)? * sys.r_phase(a, b, c)?)
}

/// Quantum dimensions `d_q`: the Perron-Frobenius eigenvalue of the fusion
/// matrix `[N_q]_{bc} = N^{qb}_c`, found by power iteration.
pub fn quantum_dimensions(sys: &FusionSystem) -> Vec<f64> {
    let rank = sys.rank();
    (0..rank)
        .map(|q| {
            let mut v = vec![1.0f64; rank];
            let mut eig = 1.0;
            for _ in 0..200 {
                let mut w = vec![0.0f64; rank];
                for b in 0..rank {
                    for c in 0..rank {
                        w[c] += sys.n(q, b, c) as f64 * v[b];
                    }
                }
                let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
                if norm == 0.0 {
                    return 0.0;
                }
                for x in w.iter_mut() {
                    *x /= norm;
                }
                eig = norm;
                v = w;
            }
            eig
        })
        .collect()
}

/// Solve for the topological spins.
///
/// `theta_q` is computed from the R-data and quantum dimensions as
/// `theta_q = (1/d_q) sum_c d_c tr(R^{qq}_c)`, then the ribbon ansatz
/// `m^{ab}_c = theta_c/(theta_a theta_b)` is verified for every admissible
/// triple, and every `theta_q` is confirmed to be a root of unity of order
/// at most `2 · rank · 8` (a configurable desk-scale cap). Any failure
/// signals non-ribbon data.
pub fn solve_twists(sys: &FusionSystem) -> Result<TwistAssignment> {
    solve_twists_capped(sys, 2 * sys.rank() * 8)
}

pub fn solve_twists_capped(sys: &FusionSystem, root_order_cap: usize) -> Result<TwistAssignment> {
    let rank = sys.rank();
    let dims = quantum_dimensions(sys);
    let mut theta = vec![Complex64::ONE; rank];
    for q in 1..rank {
        let mut acc = Complex64::ZERO;
        for c in 0..rank {
            let k = sys.n(q, q, c);
            if k == 0 {
                continue;
            }
            let phases = sys.r_phases(q, q, c)?;
            let trace: Complex64 = phases.iter().sum();
            acc += dims[c] * trace;
        }
        theta[q] = acc / dims[q];
        if (theta[q].norm() - 1.0).abs() > sys.tol().max(1e-9) {
            return Err(Error::InconsistentTwists(format!(
                "theta_{} has modulus {}",
                sys.label_name(q),
                theta[q].norm()
            )));
        }
        let norm = theta[q].norm();
        theta[q] /= norm;
    }
    // Global verification of the ansatz.
    for a in 0..rank {
        for b in 0..rank {
            for c in 0..rank {
                if !sys.admissible(a, b, c) {
                    continue;
                }
                let m = monodromy(sys, a, b, c)?;
                let want = theta[c] / (theta[a] * theta[b]);
                if (m - want).norm() > sys.tol() {
                    return Err(Error::InconsistentTwists(format!(
                        "m^({},{})_{} = {} but twists give {}",
                        sys.label_name(a),
                        sys.label_name(b),
                        sys.label_name(c),
                        m,
                        want
                    )));
                }
            }
        }
    }
    for (q, th) in theta.iter().enumerate() {
        if !is_root_of_unity(*th, root_order_cap, sys.tol()) {
            return Err(Error::InconsistentTwists(format!(
                "theta_{} is not a root of unity of order <= {root_order_cap}",
                sys.label_name(q)
            )));
        }
    }
    Ok(TwistAssignment { theta })
}

fn is_root_of_unity(z: Complex64, cap: usize, tol: f64) -> bool {
    let mut acc = Complex64::ONE;
    for _ in 1..=cap {
        acc *= z;
        if (acc - Complex64::ONE).norm() <= tol.max(1e-9) * 10.0 {
            return true;
        }
    }
    false
}

/// Labels `x` with `m^{xq}_c = 1` for every admissible `(q, c)`.
pub fn transparent_labels(sys: &FusionSystem) -> Result<Vec<usize>> {
    let rank = sys.rank();
    let mut out = Vec::new();
    'label: for x in 0..rank {
        for q in 0..rank {
            for c in 0..rank {
                if sys.admissible(x, q, c)
                    && (monodromy(sys, x, q, c)? - Complex64::ONE).norm() > sys.tol()
                {
                    continue 'label;
                }
            }
        }
        out.push(x);
    }
    Ok(out)
}

/// True iff only the vacuum is transparent (nondegenerate braiding).
pub fn is_modular_candidate(sys: &FusionSystem) -> Result<bool> {
    Ok(transparent_labels(sys)? == vec![VACUUM])
}

/// Check the fusion-algebra axioms for `c^{ij}_k := N^{ij}_k`:
/// (i) vacuum unit, (ii) associativity, (iii) every product is nonzero,
/// (iv) dual involution with unique annihilation, (v) commutativity.
pub fn fusion_algebra_check(sys: &FusionSystem) -> bool {
    let rank = sys.rank();
    // (i)
    for i in 0..rank {
        for j in 0..rank {
            let want = u32::from(i == j);
            if sys.n(i, VACUUM, j) != want || sys.n(VACUUM, i, j) != want {
                return false;
            }
        }
    }
    // (ii)
    for i in 0..rank {
        for j in 0..rank {
            for k in 0..rank {
                for u in 0..rank {
                    let lhs: u32 = (0..rank).map(|p| sys.n(i, j, p) * sys.n(p, k, u)).sum();
                    let rhs: u32 = (0..rank).map(|r| sys.n(i, r, u) * sys.n(j, k, r)).sum();
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    // (iii)
    for i in 0..rank {
        for j in 0..rank {
            if (0..rank).map(|l| sys.n(i, j, l)).sum::<u32>() == 0 {
                return false;
            }
        }
    }
    // (iv)
    for i in 0..rank {
        if sys.dual(sys.dual(i)) != i {
            return false;
        }
        for j in 0..rank {
            let want = u32::from(sys.dual(i) == j);
            if sys.n(i, j, VACUUM) != want || sys.n(j, i, VACUUM) != want {
                return false;
            }
        }
    }
    // (v)
    for i in 0..rank {
        for j in 0..rank {
            for k in 0..rank {
                if sys.n(i, j, k) != sys.n(j, i, k) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::{bundled_model, model_names};
    use std::f64::consts::PI;

    #[test]
    fn monodromy_examples() {
        let toric = bundled_model("toric").unwrap();
        let e = toric.label_index("e").unwrap();
        let m = toric.label_index("m").unwrap();
        let f = toric.label_index("f").unwrap();
        assert!((monodromy(&toric, e, m, f).unwrap() - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        // m^{q0}_q = 1 and symmetry in a,b.
        for sys in model_names().iter().map(|n| bundled_model(n).unwrap()) {
            for q in 0..sys.rank() {
                assert!(
                    (monodromy(&sys, q, VACUUM, q).unwrap() - Complex64::ONE).norm() < 1e-12
                );
            }
            for a in 0..sys.rank() {
                for b in 0..sys.rank() {
                    for c in 0..sys.rank() {
                        if sys.admissible(a, b, c) {
                            let ab = monodromy(&sys, a, b, c).unwrap();
                            let ba = monodromy(&sys, b, a, c).unwrap();
                            assert!((ab - ba).norm() < 1e-12);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn quantum_dimensions_examples() {
        let fib = bundled_model("fib").unwrap();
        let golden = (1.0 + 5.0f64.sqrt()) / 2.0;
        let tau = fib.label_index("tau").unwrap();
        assert!((quantum_dimensions(&fib)[tau] - golden).abs() < 1e-9);
        let ising = bundled_model("ising").unwrap();
        let sigma = ising.label_index("sigma").unwrap();
        assert!((quantum_dimensions(&ising)[sigma] - 2.0f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn twist_values() {
        let toric = bundled_model("toric").unwrap();
        let t = solve_twists(&toric).unwrap();
        let idx = |s: &str| toric.label_index(s).unwrap();
        assert!((t.theta[VACUUM] - Complex64::ONE).norm() < 1e-9);
        assert!((t.theta[idx("e")] - Complex64::ONE).norm() < 1e-9);
        assert!((t.theta[idx("m")] - Complex64::ONE).norm() < 1e-9);
        assert!((t.theta[idx("f")] - Complex64::new(-1.0, 0.0)).norm() < 1e-9);

        let fib = bundled_model("fib").unwrap();
        let t = solve_twists(&fib).unwrap();
        let tau = fib.label_index("tau").unwrap();
        assert!((t.theta[tau] - Complex64::cis(4.0 * PI / 5.0)).norm() < 1e-9);

        let ising = bundled_model("ising").unwrap();
        let t = solve_twists(&ising).unwrap();
        let sigma = ising.label_index("sigma").unwrap();
        let psi = ising.label_index("psi").unwrap();
        assert!((t.theta[sigma] - Complex64::cis(PI / 8.0)).norm() < 1e-9);
        assert!((t.theta[psi] - Complex64::new(-1.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn twists_solve_on_all_models() {
        for name in model_names() {
            let sys = bundled_model(name).unwrap();
            let t = solve_twists(&sys).unwrap();
            assert!((t.theta[VACUUM] - Complex64::ONE).norm() < 1e-12, "{name}");
        }
    }

    #[test]
    fn transparency_and_modularity() {
        let toric = bundled_model("toric").unwrap();
        assert_eq!(transparent_labels(&toric).unwrap(), vec![VACUUM]);
        assert!(is_modular_candidate(&toric).unwrap());
        // Z2 boson: both labels transparent, not modular.
        let z2 = bundled_model("z2boson").unwrap();
        assert_eq!(transparent_labels(&z2).unwrap(), vec![0, 1]);
        assert!(!is_modular_candidate(&z2).unwrap());
        let trivial = bundled_model("trivial").unwrap();
        assert_eq!(transparent_labels(&trivial).unwrap(), vec![VACUUM]);
        assert!(is_modular_candidate(&trivial).unwrap());
    }

    #[test]
    fn fusion_algebra_axioms() {
        for name in model_names() {
            assert!(fusion_algebra_check(&bundled_model(name).unwrap()), "{name}");
        }
    }
}
