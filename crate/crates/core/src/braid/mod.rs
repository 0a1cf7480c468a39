//! Exact braid-word algebra over `B_n`.
//!
//! Words are never auto-reduced: [`BraidWord::compose`] concatenates letters
//! and reduction happens only in [`normal_form`]. Group equality is decided
//! by the Garside left-greedy normal form, which is exact and deterministic.

mod identities;
mod normal;
mod perm;
mod word;

pub use identities::{get_identity, identity_names, verify_identity, IdentityCheck};
pub use normal::{normal_form, NormalForm};
pub use perm::{is_pure, permutation, PermutationImage};
pub use word::{BraidLetter, BraidWord};

use crate::Result;

/// True iff `w1` and `w2` represent the same element of `B_n`.
pub fn equal_in_group(w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
    if w1.strands() != w2.strands() {
        return Err(crate::Error::StrandMismatch(w1.strands(), w2.strands()));
    }
    Ok(normal_form(w1) == normal_form(w2))
}
