//! Named algebraic identities of the superselection braid, checked
//! mechanically through the normal-form word problem.
//!
//! Each identity is a strategy object behind the [`IdentityCheck`] trait and
//! is looked up by name at runtime, so callers (and the CLI) can run any
//! subset without knowing the constructions involved.

use super::word::BraidWord;
use super::{equal_in_group, normal_form};
use crate::{Error, Result};

/// A single named identity, verified for a given strand count `n`.
pub trait IdentityCheck: Sync {
    fn name(&self) -> &'static str;
    /// Human-readable statement of what is being checked.
    fn statement(&self) -> &'static str;
    /// Smallest `n` for which the identity is defined.
    fn min_n(&self) -> usize;
    /// Verify the identity in `B_n`; `Ok(true)` means it holds.
    fn check(&self, n: usize) -> Result<bool>;
}

struct Named {
    name: &'static str,
    statement: &'static str,
    min_n: usize,
    run: fn(usize) -> Result<bool>,
}

impl IdentityCheck for Named {
    fn name(&self) -> &'static str {
        self.name
    }
    fn statement(&self) -> &'static str {
        self.statement
    }
    fn min_n(&self) -> usize {
        self.min_n
    }
    fn check(&self, n: usize) -> Result<bool> {
        if n < self.min_n {
            return Err(Error::InvalidParameter(format!(
                "identity {:?} needs n >= {}, got {n}",
                self.name, self.min_n
            )));
        }
        (self.run)(n)
    }
}

fn beta(n: usize) -> BraidWord {
    BraidWord::beta(n).expect("n >= 1")
}

/// β_n σ_i^± β_n^{-1} = σ_{n-i}^± for all i and both signs.
fn beta_conjugation(n: usize) -> Result<bool> {
    let b = beta(n);
    for i in 1..n {
        for sign in [1i8, -1] {
            let lhs = b.compose(&BraidWord::generator(n, i, sign)?)?;
            let rhs = BraidWord::generator(n, n - i, sign)?.compose(&b)?;
            if !equal_in_group(&lhs, &rhs)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// β_n σ_{n-1} = σ_1 β_n.
fn beta_slide_first(n: usize) -> Result<bool> {
    let b = beta(n);
    let lhs = b.compose(&BraidWord::generator(n, n - 1, 1)?)?;
    let rhs = BraidWord::generator(n, 1, 1)?.compose(&b)?;
    equal_in_group(&lhs, &rhs)
}

/// b_m σ_{m+1-i} = σ_{m+2-i} b_m inside B_n, for runs b_m with m <= n-2
/// and 1 <= i <= m.
fn run_slide(n: usize) -> Result<bool> {
    for m in 1..=n.saturating_sub(2) {
        let b = BraidWord::b_run(n, m)?;
        for i in 1..m {
            let lhs = b.compose(&BraidWord::generator(n, i, 1)?)?;
            let rhs = BraidWord::generator(n, i + 1, 1)?.compose(&b)?;
            if !equal_in_group(&lhs, &rhs)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// β_n = r_{n-2}(b_1) r_{n-3}(b_2) ... r_0(b_{n-1}), the shifted-run
/// factorisation dual to the defining product of descending runs.
fn beta_shifted_runs(n: usize) -> Result<bool> {
    let mut w = BraidWord::identity(n)?;
    for j in 1..n {
        let run = BraidWord::b_run(j + 1, j)?;
        w = w.compose(&run.shift(n - 1 - j, n)?)?;
    }
    equal_in_group(&w, &beta(n))
}

/// b~_{m-1} b~_m = b~_m r_1(b~_{m-1}) for reversed runs b~_m = σ_m ... σ_1.
fn reversed_run_slide(n: usize) -> Result<bool> {
    for m in 2..n {
        let rm = BraidWord::b_run(n, m)?.reverse();
        let rm1 = BraidWord::b_run(n, m - 1)?.reverse();
        let lhs = rm1.compose(&rm)?;
        let rhs = rm.compose(&BraidWord::b_run(m, m - 1)?.reverse().shift(1, n)?)?;
        if !equal_in_group(&lhs, &rhs)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// σ_i t_{k,l} = t_{k,l} r_k(σ_i) for 1 <= i <= l-1, with n = k+l.
fn t_slide_left(n: usize) -> Result<bool> {
    for k in 1..n {
        let l = n - k;
        let t = BraidWord::t_exchange(k, l)?;
        for i in 1..l {
            let lhs = BraidWord::generator(n, i, 1)?.compose(&t)?;
            let rhs = t.compose(&BraidWord::generator(n, i + k, 1)?)?;
            if !equal_in_group(&lhs, &rhs)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// t_{k,l} σ_i = r_l(σ_i) t_{k,l} for 1 <= i <= k-1.
fn t_slide_right(n: usize) -> Result<bool> {
    for k in 1..n {
        let l = n - k;
        let t = BraidWord::t_exchange(k, l)?;
        for i in 1..k {
            let lhs = t.compose(&BraidWord::generator(n, i, 1)?)?;
            let rhs = BraidWord::generator(n, i + l, 1)?.compose(&t)?;
            if !equal_in_group(&lhs, &rhs)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For every split n = k + l with k,l >= 1, the four recursive expressions
/// for β_n all agree with the defining word:
///   (i)   [β_l · r_l(β_k)] t_{k,l}
///   (ii)  t_{k,l} [β_k · r_k(β_l)]
///   (iii) β_l · t_{k,l} · β_k
///   (iv)  r_l(β_k) · t_{k,l} · r_k(β_l)
/// where the unshifted β_l acts on the first l strands and r_l(β_k) on the
/// last k, etc.
fn beta_recursion(n: usize) -> Result<bool> {
    let b = beta(n);
    for k in 1..n {
        let l = n - k;
        let t = BraidWord::t_exchange(k, l)?;
        let beta_k_lo = beta(k).embed(n)?;
        let beta_l_lo = beta(l).embed(n)?;
        let beta_k_hi = beta(k).shift(l, n)?;
        let beta_l_hi = beta(l).shift(k, n)?;
        let forms = [
            beta_l_lo.compose(&beta_k_hi)?.compose(&t)?,
            t.compose(&beta_k_lo)?.compose(&beta_l_hi)?,
            beta_l_lo.compose(&t)?.compose(&beta_k_lo)?,
            beta_k_hi.compose(&t)?.compose(&beta_l_hi)?,
        ];
        for f in &forms {
            if !equal_in_group(f, &b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The bracket factors commute: β_l and r_l(β_k) commute, as do β_k and
/// r_k(β_l), since they braid disjoint strand blocks.
fn commuting_brackets(n: usize) -> Result<bool> {
    for k in 1..n {
        let l = n - k;
        let a = beta(l).embed(n)?;
        let b = beta(k).shift(l, n)?;
        if !equal_in_group(&a.compose(&b)?, &b.compose(&a)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// β_n² = t_{l,k} [r_l(β_k²) · β_l²] t_{k,l}: the pure full exchange
/// conjugates the product of block full twists.
fn beta_squared_split(n: usize) -> Result<bool> {
    let b = beta(n);
    let b2 = b.compose(&b)?;
    for k in 1..n {
        let l = n - k;
        let t_kl = BraidWord::t_exchange(k, l)?;
        let t_lk = BraidWord::t_exchange(l, k)?;
        let bk2 = beta(k).compose(&beta(k))?.shift(l, n)?;
        let bl2 = beta(l).compose(&beta(l))?.embed(n)?;
        let rhs = t_lk.compose(&bk2)?.compose(&bl2)?.compose(&t_kl)?;
        if !equal_in_group(&b2, &rhs)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// t_{k,l}^{-1} = u_{l,k}: clockwise and anticlockwise exchanges invert
/// each other.
fn t_u_inverse(n: usize) -> Result<bool> {
    for k in 1..n {
        let l = n - k;
        let prod = BraidWord::t_exchange(k, l)?.compose(&BraidWord::u_exchange(l, k)?)?;
        if !normal_form(&prod).is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// β_n is a palindrome: the reversal anti-automorphism fixes it (generator
/// by generator reversal of the defining word gives an equal element).
fn beta_palindrome(n: usize) -> Result<bool> {
    let b = beta(n);
    equal_in_group(&b, &b.reverse())
}

/// η(β_n) is the order reversal i -> n+1-i.
fn beta_permutation(n: usize) -> Result<bool> {
    Ok(super::permutation(&beta(n)) == super::perm::PermutationImage::reversal(n))
}

const REGISTRY: &[Named] = &[
    Named {
        name: "beta-conjugation",
        statement: "beta_n sigma_i^± beta_n^-1 = sigma_{n-i}^±",
        min_n: 2,
        run: beta_conjugation,
    },
    Named {
        name: "beta-slide-first",
        statement: "beta_n sigma_{n-1} = sigma_1 beta_n",
        min_n: 2,
        run: beta_slide_first,
    },
    Named {
        name: "run-slide",
        statement: "b_m sigma_i = sigma_{i+1} b_m for 1 <= i <= m-1",
        min_n: 3,
        run: run_slide,
    },
    Named {
        name: "beta-shifted-runs",
        statement: "beta_n = r_{n-2}(b_1) r_{n-3}(b_2) ... r_0(b_{n-1})",
        min_n: 2,
        run: beta_shifted_runs,
    },
    Named {
        name: "reversed-run-slide",
        statement: "brev_{m-1} brev_m = brev_m r_1(brev_{m-1})",
        min_n: 3,
        run: reversed_run_slide,
    },
    Named {
        name: "t-slide-left",
        statement: "sigma_i t_{k,l} = t_{k,l} r_k(sigma_i) for i < l",
        min_n: 2,
        run: t_slide_left,
    },
    Named {
        name: "t-slide-right",
        statement: "t_{k,l} sigma_i = r_l(sigma_i) t_{k,l} for i < k",
        min_n: 2,
        run: t_slide_right,
    },
    Named {
        name: "beta-recursion",
        statement: "beta_n equals all four t_{k,l}-recursive forms for every split n=k+l",
        min_n: 2,
        run: beta_recursion,
    },
    Named {
        name: "commuting-brackets",
        statement: "beta_l and r_l(beta_k) commute for every split n=k+l",
        min_n: 2,
        run: commuting_brackets,
    },
    Named {
        name: "beta-squared-split",
        statement: "beta_n^2 = t_{l,k} [r_l(beta_k^2) beta_l^2] t_{k,l}",
        min_n: 2,
        run: beta_squared_split,
    },
    Named {
        name: "t-u-inverse",
        statement: "t_{k,l}^{-1} = u_{l,k}",
        min_n: 2,
        run: t_u_inverse,
    },
    Named {
        name: "beta-palindrome",
        statement: "beta_n is fixed by the reversal anti-automorphism",
        min_n: 1,
        run: beta_palindrome,
    },
    Named {
        name: "beta-permutation",
        statement: "eta(beta_n) is the order reversal",
        min_n: 1,
        run: beta_permutation,
    },
];

/// Names of all registered identities, in registry order.
pub fn identity_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.name).collect()
}

/// Look up an identity by name; `None` if unregistered.
pub fn get_identity(name: &str) -> Option<&'static dyn IdentityCheck> {
    REGISTRY
        .iter()
        .find(|c| c.name == name)
        .map(|c| c as &dyn IdentityCheck)
}

/// Verify the named identity in `B_n`.
pub fn verify_identity(name: &str, n: usize) -> Result<bool> {
    get_identity(name).ok_or_else(|| Error::UnknownIdentity(name.to_string()))?.check(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_identities_hold_up_to_n7() {
        for check in REGISTRY {
            for n in check.min_n..=7 {
                assert!(
                    check.check(n).unwrap(),
                    "identity {} failed at n = {n}",
                    check.name
                );
            }
        }
    }

    #[test]
    fn registry_lookup() {
        assert!(identity_names().contains(&"beta-recursion"));
        assert!(get_identity("beta-recursion").is_some());
        assert!(matches!(
            verify_identity("no-such-identity", 3),
            Err(Error::UnknownIdentity(_))
        ));
        assert!(verify_identity("run-slide", 2).is_err());
    }
}
