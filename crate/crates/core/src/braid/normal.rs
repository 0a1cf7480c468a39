//! Left-greedy (Garside) normal form for braid words.
//!
//! An element of `B_n` is written uniquely as `Δ^inf · F_1 F_2 ... F_k`
//! where `Δ` is the half twist, each factor `F_i` is a simple braid
//! (identified with its permutation) other than `e` and `Δ`, and each
//! adjacent pair is left-weighted. Two words are equal in the group iff
//! their normal forms coincide, which is the word-problem oracle used
//! throughout the crate.

use super::perm::PermutationImage;
use super::word::BraidWord;

/// Canonical form `Δ^inf · factors`. Derives `Eq`/`Hash`, so it doubles as
/// a dictionary key for group elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub strands: usize,
    pub inf: i64,
    pub factors: Vec<PermutationImage>,
}

impl NormalForm {
    /// Canonical length (number of non-Δ simple factors).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }
}

/// Starting set of a simple braid: generators `σ_{i+1}` (0-based `i`) that
/// divide it on the left. For a permutation these are the descents of the
/// inverse.
fn starting_set(p: &PermutationImage) -> Vec<bool> {
    let n = p.size();
    let inv = p.inverse();
    (0..n.saturating_sub(1)).map(|i| inv.apply(i) > inv.apply(i + 1)).collect()
}

/// Finishing set: generators dividing the simple braid on the right, i.e.
/// descents of the permutation itself.
fn finishing_set(p: &PermutationImage) -> Vec<bool> {
    let n = p.size();
    (0..n.saturating_sub(1)).map(|i| p.apply(i) > p.apply(i + 1)).collect()
}

/// The inner automorphism `τ(x) = Δ^{-1} x Δ` on simple factors:
/// conjugation by the reversal permutation.
fn tau(p: &PermutationImage) -> PermutationImage {
    let w0 = PermutationImage::reversal(p.size());
    w0.compose(&p.compose(&w0))
}

/// Compute the left-greedy normal form of `w`.
pub fn normal_form(w: &BraidWord) -> NormalForm {
    let n = w.strands();
    let w0 = PermutationImage::reversal(n);
    let mut inf: i64 = 0;
    let mut factors: Vec<PermutationImage> = Vec::new();

    // Letters act right-to-left, but as a group product the stored order is
    // the product order, so we append factors left-to-right as stored.
    for letter in w.letters() {
        let s = PermutationImage::transposition(n, letter.index - 1);
        if letter.sign > 0 {
            factors.push(s);
        } else {
            // σ_i^{-1} = Δ^{-1} · (Δ σ_i^{-1}), and Δ σ_i^{-1} is the simple
            // braid with permutation w0 ∘ s_i. Pushing the Δ^{-1} through
            // the existing factors τ-twists each of them.
            inf -= 1;
            for f in factors.iter_mut() {
                *f = tau(f);
            }
            factors.push(w0.compose(&s));
        }
    }

    // Local left-weighting passes until stable.
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < factors.len() {
            let fin_a = finishing_set(&factors[i]);
            let start_b = starting_set(&factors[i + 1]);
            if let Some(g) = (0..n - 1).find(|&g| start_b[g] && !fin_a[g]) {
                let s = PermutationImage::transposition(n, g);
                factors[i] = factors[i].compose(&s);
                factors[i + 1] = s.compose(&factors[i + 1]);
                changed = true;
                if i > 0 {
                    i -= 1;
                }
                continue;
            }
            i += 1;
        }
        // Strip identity factors and absorb Δ factors into inf. Any Δ that
        // appears after left-weighting sits at the front of the list.
        let before = factors.len();
        factors.retain(|f| !f.is_identity());
        while factors.first().is_some_and(|f| *f == w0) {
            factors.remove(0);
            inf += 1;
        }
        if factors.iter().any(|f| *f == w0) {
            // A Δ surfaced mid-list; twist everything to its left and retry.
            let pos = factors.iter().position(|f| *f == w0).unwrap();
            factors.remove(pos);
            for f in factors[..pos].iter_mut() {
                *f = tau(f);
            }
            inf += 1;
            changed = true;
        }
        if !changed && factors.len() == before {
            break;
        }
        if !changed {
            // Only removals happened; one more weighting pass to confirm.
            continue;
        }
    }

    NormalForm { strands: n, inf, factors }
}
