//! Brute-force search for braids whose action resolves superselection
//! sectors, bounded in length and model set. Finding only the
//! superselection braid and its inverse is evidence for uniqueness, not a
//! proof: the theorem quantifies over all braids and all systems.

use std::collections::HashMap;

use num_complex::Complex64;

use crate::braid::{normal_form, permutation, BraidWord, PermutationImage};
use crate::fusion::FusionSystem;
use crate::{Error, Result};

use super::basis::comb_basis;
use super::braiding::braid_map;
use super::spectrum::mirror_identified;

/// Enumerate all braid words of length at most `max_len` (modulo group
/// equality) and return those whose action on every fusion system in
/// `systems` is sector-resolving: the underlying permutation is the full
/// order reversal, the mirror-identified map is scalar on each root-charge
/// block, and the per-sector phases do not depend on the leaf ordering.
pub fn uniqueness_search(
    systems: &[FusionSystem],
    n: usize,
    max_len: usize,
) -> Result<Vec<BraidWord>> {
    if n < 2 {
        return Err(Error::InvalidStrandCount(n));
    }
    if systems.is_empty() {
        return Err(Error::InvalidParameter("at least one fusion system required".into()));
    }
    let mut representatives = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut layer = vec![BraidWord::identity(n)?];
    if seen.insert(normal_form(&layer[0])) {
        representatives.push(layer[0].clone());
    }
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for index in 1..n {
                for sign in [1i8, -1] {
                    let ext = w.compose(&BraidWord::generator(n, index, sign)?)?;
                    if seen.insert(normal_form(&ext)) {
                        representatives.push(ext.clone());
                    }
                    next.push(ext);
                }
            }
        }
        layer = next;
    }

    let reversal = PermutationImage::reversal(n);
    let mut out: Vec<BraidWord> = representatives
        .into_iter()
        .filter(|w| permutation(w) == reversal)
        .filter(|w| {
            systems
                .iter()
                .all(|sys| resolves_sectors(sys, w).unwrap_or(false))
        })
        .collect();
    out.sort_by_key(|w| (w.len(), w.to_string()));
    Ok(out)
}

/// Sector resolution on one model: scalar per root charge for every leaf
/// string, with phases depending only on the leaf multiset.
fn resolves_sectors(sys: &FusionSystem, w: &BraidWord) -> Result<bool> {
    let n = w.strands();
    let rank = sys.rank();
    let mut phases: HashMap<(Vec<usize>, usize), Complex64> = HashMap::new();
    let mut leaves = vec![0usize; n];
    loop {
        let basis = comb_basis(sys, &leaves)?;
        if basis.dim() > 0 {
            let m = braid_map(sys, &basis, w)?;
            let Ok(identified) = mirror_identified(sys, &basis, &m) else {
                return Ok(false);
            };
            let Ok(scalars) = identified.block_scalars(sys.tol()) else {
                return Ok(false);
            };
            let mut multiset = leaves.clone();
            multiset.sort_unstable();
            for (q, z) in scalars {
                match phases.entry((multiset.clone(), q)) {
                    std::collections::hash_map::Entry::Occupied(prev) => {
                        if (prev.get() - z).norm() > sys.tol() {
                            return Ok(false);
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(slot) => {
                        slot.insert(z);
                    }
                }
            }
        }
        // Next leaf tuple in lexicographic order.
        let mut pos = n;
        while pos > 0 {
            leaves[pos - 1] += 1;
            if leaves[pos - 1] < rank {
                break;
            }
            leaves[pos - 1] = 0;
            pos -= 1;
        }
        if pos == 0 {
            return Ok(true);
        }
    }
}

/// Convenience: does a word list consist exactly of the superselection
/// braid and its inverse (as group elements)?
pub fn is_beta_pair(words: &[BraidWord], n: usize) -> Result<bool> {
    if words.len() != 2 {
        return Ok(false);
    }
    let beta = BraidWord::beta(n)?;
    let targets = [normal_form(&beta), normal_form(&beta.inverse())];
    let got = [normal_form(&words[0]), normal_form(&words[1])];
    Ok(targets.contains(&got[0]) && targets.contains(&got[1]) && got[0] != got[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::bundled_model;

    #[test]
    fn two_strand_search_finds_the_generator_pair() {
        let systems = vec![bundled_model("ising").unwrap()];
        let found = uniqueness_search(&systems, 2, 2).unwrap();
        assert!(is_beta_pair(&found, 2).unwrap());
    }

    #[test]
    fn short_words_cannot_reverse_three_strands() {
        let systems = vec![bundled_model("fib").unwrap()];
        let found = uniqueness_search(&systems, 3, 2).unwrap();
        assert!(found.is_empty());
    }

}
