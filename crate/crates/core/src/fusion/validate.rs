//! Axiom-by-axiom validation of a fusion system, producing a report rather
//! than a hard error.

use std::fmt;

use num_complex::Complex64;

use super::system::{FusionSystem, VACUUM};
use crate::Result;

#[derive(Debug, Clone)]
pub struct CheckEntry {
    pub name: &'static str,
    pub passed: bool,
    /// Worst residual seen (0 for purely combinatorial checks).
    pub residual: f64,
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub entries: Vec<CheckEntry>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn worst_residual(&self) -> f64 {
        self.entries.iter().map(|e| e.residual).fold(0.0, f64::max)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(
                f,
                "{:<28} {}  (residual {:.3e})",
                e.name,
                if e.passed { "pass" } else { "FAIL" },
                e.residual
            )?;
        }
        Ok(())
    }
}

/// Run every structural invariant of the data model. Failures become report
/// entries; only genuinely missing data (absent R/F blocks referenced by
/// the checks) is an error.
pub fn validate(sys: &FusionSystem) -> Result<ValidationReport> {
    let rank = sys.rank();
    let tol = sys.tol();
    let mut entries = Vec::new();
    let mut push = |name: &'static str, passed: bool, residual: f64| {
        entries.push(CheckEntry { name, passed, residual });
    };

    // Vacuum fusion rule N^{0q}_r = N^{q0}_r = delta_{qr}.
    let mut ok = true;
    for q in 0..rank {
        for r in 0..rank {
            let want = u32::from(q == r);
            if sys.n(VACUUM, q, r) != want || sys.n(q, VACUUM, r) != want {
                ok = false;
            }
        }
    }
    push("vacuum-fusion", ok, 0.0);

    // Commutativity N^{ab}_c = N^{ba}_c.
    let mut ok = true;
    for a in 0..rank {
        for b in 0..rank {
            for c in 0..rank {
                if sys.n(a, b, c) != sys.n(b, a, c) {
                    ok = false;
                }
            }
        }
    }
    push("fusion-symmetry", ok, 0.0);

    // Duality: involution and N^{ab}_0 = delta_{b, dual(a)}.
    let mut ok = true;
    for a in 0..rank {
        if sys.dual(sys.dual(a)) != a {
            ok = false;
        }
        for b in 0..rank {
            if sys.n(a, b, VACUUM) != u32::from(b == sys.dual(a)) {
                ok = false;
            }
        }
    }
    push("duality", ok, 0.0);

    // Associativity of N.
    let mut ok = true;
    for a in 0..rank {
        for b in 0..rank {
            for c in 0..rank {
                for d in 0..rank {
                    let lhs: u32 = (0..rank).map(|e| sys.n(a, b, e) * sys.n(e, c, d)).sum();
                    let rhs: u32 = (0..rank).map(|f| sys.n(a, f, d) * sys.n(b, c, f)).sum();
                    if lhs != rhs {
                        ok = false;
                    }
                }
            }
        }
    }
    push("fusion-associativity", ok, 0.0);

    // Dual symmetry family N^{ab}_c = N^{b cbar}_abar = N^{cbar a}_bbar
    // = N^{bbar abar}_cbar.
    let mut ok = true;
    for a in 0..rank {
        for b in 0..rank {
            for c in 0..rank {
                let v = sys.n(a, b, c);
                if v != sys.n(b, sys.dual(c), sys.dual(a))
                    || v != sys.n(sys.dual(c), a, sys.dual(b))
                    || v != sys.n(sys.dual(b), sys.dual(a), sys.dual(c))
                {
                    ok = false;
                }
            }
        }
    }
    push("dual-symmetries", ok, 0.0);

    // F-block unitarity (stored and implicit vacuum blocks).
    let mut worst = 0.0f64;
    for a in 0..rank {
        for b in 0..rank {
            for c in 0..rank {
                for d in 0..rank {
                    let block = match sys.f_block(a, b, c, d) {
                        Ok(b) => b,
                        Err(_) if sys.f_rows(a, b, c, d).is_empty() => continue,
                        Err(e) => return Err(e),
                    };
                    if block.rows.is_empty() {
                        continue;
                    }
                    worst = worst.max(block.unitarity_residual());
                }
            }
        }
    }
    push("f-unitarity", worst <= tol, worst);

    // R-blocks unit modulus, and trivial against the vacuum.
    let mut worst = 0.0f64;
    for a in 0..rank {
        for b in 0..rank {
            for c in 0..rank {
                if !sys.admissible(a, b, c) {
                    continue;
                }
                for z in sys.r_phases(a, b, c)? {
                    worst = worst.max((z.norm() - 1.0).abs());
                }
            }
        }
    }
    push("r-unitarity", worst <= tol, worst);

    let mut worst = 0.0f64;
    for q in 0..rank {
        for (a, b) in [(q, VACUUM), (VACUUM, q)] {
            for z in sys.r_phases(a, b, q)? {
                worst = worst.max((z - Complex64::ONE).norm());
            }
        }
    }
    push("vacuum-braiding", worst <= tol, worst);

    Ok(ValidationReport { entries })
}
