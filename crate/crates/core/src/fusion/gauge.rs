//! Gauge freedom: diagonal unitary changes of basis on the fusion-vertex
//! spaces `V^{ab}_c`.
//!
//! Gauges here are diagonal (phase-valued per vertex index) so that stored
//! R-blocks stay diagonal. Arbitrary diagonal gauges are supported by
//! `apply_gauge` (used to move between the standard and symmetric
//! presentations of a model); the random gauges used in the invariance
//! suite are symmetric (`u^{ab}_c = u^{ba}_c`), which keeps the system
//! inside the symmetric-gauge class where the diagonal hexagon form holds.

use std::collections::HashMap;

use num_complex::Complex64;
use rand::Rng;

use super::system::{FBlock, FusionSystem, VACUUM};
use crate::{Error, Result};

/// A diagonal gauge: unit-modulus phases per vertex index of each `V^{ab}_c`.
/// Missing entries are the identity; entries with a vacuum upper label are
/// forced to the identity.
#[derive(Debug, Clone, Default)]
pub struct GaugeTransformation {
    u: HashMap<(usize, usize, usize), Vec<Complex64>>,
}

impl GaugeTransformation {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, phases: Vec<Complex64>) -> Result<()> {
        if a == VACUUM || b == VACUUM {
            return Err(Error::InvalidParameter(
                "gauge blocks with a vacuum upper label must stay trivial".into(),
            ));
        }
        if phases.iter().any(|z| (z.norm() - 1.0).abs() > 1e-12) {
            return Err(Error::InvalidParameter("gauge phases must be unit modulus".into()));
        }
        self.u.insert((a, b, c), phases);
        Ok(())
    }

    pub fn phase(&self, a: usize, b: usize, c: usize, mu: u32) -> Complex64 {
        self.u
            .get(&(a, b, c))
            .and_then(|v| v.get((mu - 1) as usize))
            .copied()
            .unwrap_or(Complex64::ONE)
    }

    /// A random symmetric gauge (`u^{ab}_c = u^{ba}_c`) over every
    /// admissible non-vacuum triple of the system.
    pub fn random_symmetric(sys: &FusionSystem, rng: &mut impl Rng) -> Self {
        let mut g = Self::identity();
        for a in 1..sys.rank() {
            for b in a..sys.rank() {
                for c in 0..sys.rank() {
                    let k = sys.n(a, b, c) as usize;
                    if k == 0 {
                        continue;
                    }
                    let phases: Vec<Complex64> = (0..k)
                        .map(|_| Complex64::cis(rng.gen_range(0.0..std::f64::consts::TAU)))
                        .collect();
                    g.set(a, b, c, phases.clone()).unwrap();
                    if a != b {
                        g.set(b, a, c, phases).unwrap();
                    }
                }
            }
        }
        g
    }
}

/// Transform F- and R-data into the gauged vertex bases; N, labels, duals
/// and tol are unchanged.
///
/// For diagonal gauges the stored F entry picks up
/// `u^{ab}_e[mu] u^{ec}_d[nu] / (u^{bc}_f[rho] u^{af}_d[delta])` and the
/// stored R phase becomes `u^{ba}_c[mu] r^{ab}_c[mu] / u^{ab}_c[mu]`.
pub fn apply_gauge(sys: &FusionSystem, g: &GaugeTransformation) -> Result<FusionSystem> {
    let mut new_f = HashMap::new();
    for &(a, b, c, d) in sys.stored_f_keys() {
        let block = sys.stored_f(a, b, c, d).unwrap();
        let mut mat = block.mat.clone();
        for (ri, &(e, mu, nu)) in block.rows.iter().enumerate() {
            for (ci, &(f, rho, delta)) in block.cols.iter().enumerate() {
                let factor = g.phase(a, b, e, mu)
                    * g.phase(e, c, d, nu)
                    * g.phase(b, c, f, rho).conj()
                    * g.phase(a, f, d, delta).conj();
                mat[(ri, ci)] *= factor;
            }
        }
        new_f.insert(
            (a, b, c, d),
            FBlock { rows: block.rows.clone(), cols: block.cols.clone(), mat },
        );
    }
    let mut new_r = HashMap::new();
    for &(a, b, c) in sys.stored_r_keys() {
        let phases = sys.r_phases(a, b, c)?;
        let gauged: Vec<Complex64> = phases
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mu = (i + 1) as u32;
                g.phase(b, a, c, mu) * r * g.phase(a, b, c, mu).conj()
            })
            .collect();
        new_r.insert((a, b, c), gauged);
    }
    Ok(sys.with_data(new_f, new_r))
}

/// Test helper: add `eps` to one entry of a stored F-block.
#[cfg(test)]
pub(crate) fn perturb_f_entry(
    sys: &mut FusionSystem,
    key: (usize, usize, usize, usize),
    row: usize,
    col: usize,
    eps: f64,
) {
    let mut f: HashMap<_, _> =
        sys.stored_f_keys().map(|&k| (k, sys.stored_f(k.0, k.1, k.2, k.3).unwrap().clone())).collect();
    let mut r = HashMap::new();
    for &k in sys.stored_r_keys() {
        r.insert(k, sys.r_phases(k.0, k.1, k.2).unwrap());
    }
    f.get_mut(&key).expect("block present").mat[(row, col)] += Complex64::new(eps, 0.0);
    *sys = sys.with_data(f, r);
}

/// Test helper: flip the sign of a stored R-block.
#[cfg(test)]
pub(crate) fn negate_r_block(sys: &mut FusionSystem, key: (usize, usize, usize)) {
    let f: HashMap<_, _> =
        sys.stored_f_keys().map(|&k| (k, sys.stored_f(k.0, k.1, k.2, k.3).unwrap().clone())).collect();
    let mut r = HashMap::new();
    for &k in sys.stored_r_keys() {
        r.insert(k, sys.r_phases(k.0, k.1, k.2).unwrap());
    }
    for z in r.get_mut(&key).expect("block present").iter_mut() {
        *z = -*z;
    }
    *sys = sys.with_data(f, r);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::{
        bundled_model, hexagon_residual, model_names, monodromy, pentagon_residual, solve_twists,
        transparent_labels,
    };
    use rand::SeedableRng;

    #[test]
    fn identity_gauge_is_a_no_op() {
        let fib = bundled_model("fib").unwrap();
        let gauged = apply_gauge(&fib, &GaugeTransformation::identity()).unwrap();
        let tau = fib.label_index("tau").unwrap();
        let before = fib.f_block(tau, tau, tau, tau).unwrap();
        let after = gauged.f_block(tau, tau, tau, tau).unwrap();
        assert_eq!(before.mat, after.mat);
        assert_eq!(
            fib.r_phases(tau, tau, tau).unwrap(),
            gauged.r_phases(tau, tau, tau).unwrap()
        );
    }

    #[test]
    fn gauge_invariance_suite() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6a75);
        for name in model_names() {
            let sys = bundled_model(name).unwrap();
            let twists = solve_twists(&sys).unwrap();
            let transparent = transparent_labels(&sys).unwrap();
            // A light sweep; the acceptance suite runs the full 100-gauge
            // version.
            for _ in 0..5 {
                let g = GaugeTransformation::random_symmetric(&sys, &mut rng);
                let gauged = apply_gauge(&sys, &g).unwrap();
                assert!(pentagon_residual(&gauged).unwrap() < sys.tol(), "{name}");
                assert!(hexagon_residual(&gauged, 1).unwrap() < sys.tol(), "{name}");
                assert!(hexagon_residual(&gauged, -1).unwrap() < sys.tol(), "{name}");
                for a in 0..sys.rank() {
                    for b in 0..sys.rank() {
                        for c in 0..sys.rank() {
                            if sys.admissible(a, b, c) {
                                let m0 = monodromy(&sys, a, b, c).unwrap();
                                let m1 = monodromy(&gauged, a, b, c).unwrap();
                                assert!((m0 - m1).norm() < sys.tol());
                            }
                        }
                    }
                }
                let gauged_twists = solve_twists(&gauged).unwrap();
                for q in 0..sys.rank() {
                    assert!((twists.theta[q] - gauged_twists.theta[q]).norm() < sys.tol());
                }
                assert_eq!(transparent, transparent_labels(&gauged).unwrap());
            }
        }
    }

    #[test]
    fn vacuum_gauge_entries_rejected() {
        let mut g = GaugeTransformation::identity();
        assert!(g.set(VACUUM, 1, 1, vec![Complex64::ONE]).is_err());
        assert!(g.set(1, 1, 0, vec![Complex64::new(2.0, 0.0)]).is_err());
    }
}
