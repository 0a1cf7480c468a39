//! Pentagon, hexagon and triangle checks, evaluated entry-wise over all
//! admissible label tuples.

use num_complex::Complex64;

use super::system::FusionSystem;
use crate::Result;

/// Maximum absolute deviation of the entry-wise pentagon identity over all
/// label tuples `(a,b,c,d,e)` and all vertex indices. For the stored
/// convention (rows = `(ab)c` side) the identity reads, with initial state
/// `|ab->p;alpha> |pc->q;beta> |qd->e;lambda>` and terminal state
/// `|as->e;rho> |br->s;delta> |cd->r;gamma>`:
///
/// ```text
/// sum_sigma F^{abr}_e[(p,alpha,sigma),(s,delta,rho)] F^{pcd}_e[(q,beta,lambda),(r,gamma,sigma)]
///   = sum_{t,mu,nu,eta} F^{bcd}_s[(t,mu,eta),(r,gamma,delta)]
///       F^{atd}_e[(q,nu,lambda),(s,eta,rho)] F^{abc}_q[(p,alpha,beta),(t,mu,nu)]
/// ```
pub fn pentagon_residual(sys: &FusionSystem) -> Result<f64> {
    let rank = sys.rank();
    let mut worst = 0.0f64;
    for a in 0..rank {
        for b in 0..rank {
            for c in 0..rank {
                for d in 0..rank {
                    for e in 0..rank {
                        let r = pentagon_instance(sys, a, b, c, d, e)?;
                        worst = worst.max(r);
                    }
                }
            }
        }
    }
    Ok(worst)
}

fn pentagon_instance(
    sys: &FusionSystem,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    e: usize,
) -> Result<f64> {
    let rank = sys.rank();
    let mut worst = 0.0f64;
    for p in 0..rank {
        for q in 0..rank {
            for r in 0..rank {
                for s in 0..rank {
                    for alpha in 1..=sys.n(a, b, p) {
                        for beta in 1..=sys.n(p, c, q) {
                            for lambda in 1..=sys.n(q, d, e) {
                                for gamma in 1..=sys.n(c, d, r) {
                                    for delta in 1..=sys.n(b, r, s) {
                                        for rho in 1..=sys.n(a, s, e) {
                                            let mut lhs = Complex64::ZERO;
                                            for sigma in 1..=sys.n(p, r, e) {
                                                lhs += sys.f_entry(
                                                    (a, b, r, e),
                                                    (p, alpha, sigma),
                                                    (s, delta, rho),
                                                )? * sys.f_entry(
                                                    (p, c, d, e),
                                                    (q, beta, lambda),
                                                    (r, gamma, sigma),
                                                )?;
                                            }
                                            let mut rhs = Complex64::ZERO;
                                            for t in 0..rank {
                                                for mu in 1..=sys.n(b, c, t) {
                                                    for nu in 1..=sys.n(a, t, q) {
                                                        for eta in 1..=sys.n(t, d, s) {
                                                            rhs += sys.f_entry(
                                                                (b, c, d, s),
                                                                (t, mu, eta),
                                                                (r, gamma, delta),
                                                            )? * sys.f_entry(
                                                                (a, t, d, e),
                                                                (q, nu, lambda),
                                                                (s, eta, rho),
                                                            )? * sys.f_entry(
                                                                (a, b, c, q),
                                                                (p, alpha, beta),
                                                                (t, mu, nu),
                                                            )?;
                                                        }
                                                    }
                                                }
                                            }
                                            worst = worst.max((lhs - rhs).norm());
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(worst)
}

/// Maximum absolute deviation of the hexagon identity with diagonal
/// R-blocks, for the given orientation (`+1` uses `R`, `-1` uses `R^{-1}`).
/// With initial state `|ab->x;alpha> |xc->d;lambda>` and terminal state
/// `|bz->d;rho> |ca->z;gamma>`:
///
/// ```text
/// sum_{y,beta,mu} F^{bca}_d[(y,beta,mu),(z,gamma,rho)] r^{ay}_d[mu]
///                 F^{abc}_d[(x,alpha,lambda),(y,beta,mu)]
///   = r^{ac}_z[gamma] F^{bac}_d[(x,alpha,lambda),(z,gamma,rho)] r^{ab}_x[alpha]
/// ```
pub fn hexagon_residual(sys: &FusionSystem, orientation: i8) -> Result<f64> {
    let rank = sys.rank();
    let twist = |z: Complex64| if orientation >= 0 { z } else { z.conj() };
    let mut worst = 0.0f64;
    for a in 0..rank {
        for b in 0..rank {
            for c in 0..rank {
                for d in 0..rank {
                    for x in 0..rank {
                        for z in 0..rank {
                            for alpha in 1..=sys.n(a, b, x) {
                                for lambda in 1..=sys.n(x, c, d) {
                                    for gamma in 1..=sys.n(c, a, z) {
                                        for rho in 1..=sys.n(b, z, d) {
                                            let mut lhs = Complex64::ZERO;
                                            for y in 0..rank {
                                                if !sys.admissible(a, y, d) {
                                                    continue;
                                                }
                                                let r_ay = sys.r_phases(a, y, d)?;
                                                for beta in 1..=sys.n(b, c, y) {
                                                    for mu in 1..=sys.n(a, y, d) {
                                                        lhs += sys.f_entry(
                                                            (b, c, a, d),
                                                            (y, beta, mu),
                                                            (z, gamma, rho),
                                                        )? * twist(r_ay[(mu - 1) as usize])
                                                            * sys.f_entry(
                                                                (a, b, c, d),
                                                                (x, alpha, lambda),
                                                                (y, beta, mu),
                                                            )?;
                                                    }
                                                }
                                            }
                                            let r_ac = sys.r_phases(a, c, z)?;
                                            let r_ab = sys.r_phases(a, b, x)?;
                                            let rhs = twist(r_ac[(gamma - 1) as usize])
                                                * sys.f_entry(
                                                    (b, a, c, d),
                                                    (x, alpha, lambda),
                                                    (z, gamma, rho),
                                                )?
                                                * twist(r_ab[(alpha - 1) as usize]);
                                            worst = worst.max((lhs - rhs).norm());
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(worst)
}

/// True iff every stored F-block with a vacuum in an upper slot equals the
/// identity within tol (the implicit blocks trivially do, which makes the
/// triangle equations hold).
pub fn triangle_check(sys: &FusionSystem) -> bool {
    use super::system::VACUUM;
    sys.stored_f_keys().all(|&(a, b, c, d)| {
        if a != VACUUM && b != VACUUM && c != VACUUM {
            return true;
        }
        sys.stored_f(a, b, c, d).is_some_and(|blk| blk.is_identity(sys.tol()))
    })
}
