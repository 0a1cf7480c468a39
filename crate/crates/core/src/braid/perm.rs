use super::BraidWord;

/// Image of a braid under the epimorphism `B_n -> S_n` whose kernel is the
/// pure braid subgroup.
///
/// Stored as a 0-based mapping `position -> position`: the strand starting
/// at position `p` ends at position `image[p]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationImage {
    image: Vec<usize>,
}

impl PermutationImage {
    pub fn identity(n: usize) -> Self {
        Self { image: (0..n).collect() }
    }

    /// The adjacent transposition swapping 0-based positions `i` and `i+1`.
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut image: Vec<usize> = (0..n).collect();
        image.swap(i, i + 1);
        Self { image }
    }

    /// The order-reversing permutation `i -> n-1-i` (image of the Garside
    /// element and of the superselection braid).
    pub fn reversal(n: usize) -> Self {
        Self { image: (0..n).rev().collect() }
    }

    pub fn from_image(image: Vec<usize>) -> Option<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Self { image })
    }

    pub fn size(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, p: usize) -> usize {
        self.image[p]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Function composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.size(), other.size());
        Self { image: (0..self.size()).map(|p| self.image[other.image[p]]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.size()];
        for (p, &v) in self.image.iter().enumerate() {
            image[v] = p;
        }
        Self { image }
    }

    /// The order of the permutation in `S_n`.
    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = self.compose(&acc);
            k += 1;
        }
        k
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.image
    }
}

/// Image of `w` under `eta: B_n -> S_n`.
///
/// `eta` is a homomorphism for [`BraidWord::compose`]: the right factor acts
/// first, matching the composition rule of the groupoid action.
pub fn permutation(w: &BraidWord) -> PermutationImage {
    let n = w.strands();
    let mut acc = PermutationImage::identity(n);
    // Letters act right-to-left, so fold left-to-right with acc ∘ letter.
    for letter in w.letters() {
        acc = acc.compose(&PermutationImage::transposition(n, letter.index - 1));
    }
    acc
}

/// True iff `w` lies in the pure braid subgroup `PB_n`.
pub fn is_pure(w: &BraidWord) -> bool {
    permutation(w).is_identity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    #[test]
    fn sigma_is_a_transposition() {
        let w = BraidWord::generator(2, 1, 1).unwrap();
        assert_eq!(permutation(&w), PermutationImage::transposition(2, 0));
        assert!(!is_pure(&w));
    }

    #[test]
    fn sigma_squared_is_pure() {
        let s = BraidWord::generator(2, 1, 1).unwrap();
        let w = s.compose(&s).unwrap();
        assert!(is_pure(&w));
    }

    #[test]
    fn beta_reverses_order() {
        for n in 1..=7 {
            let beta = BraidWord::beta(n).unwrap();
            assert_eq!(permutation(&beta), PermutationImage::reversal(n));
        }
    }

    #[test]
    fn permutation_is_a_homomorphism() {
        let a = BraidWord::parse(4, "s1 s3' s2").unwrap();
        let b = BraidWord::parse(4, "s2 s2 s1'").unwrap();
        assert_eq!(
            permutation(&a.compose(&b).unwrap()),
            permutation(&a).compose(&permutation(&b))
        );
    }
}
