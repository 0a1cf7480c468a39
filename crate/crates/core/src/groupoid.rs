//! The coloured braid groupoid: braid words acting on colour strings, and
//! the domain sets on which a braiding is guaranteed diagonal.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::braid::{normal_form, BraidLetter, BraidWord, NormalForm};
use crate::{Error, Result};

/// An ordered string of colour labels, the base points of the groupoid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorString {
    labels: Vec<String>,
}

impl ColorString {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() || labels.iter().any(|l| l.is_empty()) {
            return Err(Error::Parse("colour string needs non-empty labels".into()));
        }
        Ok(Self { labels })
    }

    /// Parse either a comma-separated list (`"a,b,c"`) or, when no comma is
    /// present, one label per character (`"abc"`).
    pub fn parse(text: &str) -> Result<Self> {
        let labels: Vec<String> = if text.contains(',') {
            text.split(',').map(|s| s.trim().to_string()).collect()
        } else {
            text.chars().map(|c| c.to_string()).collect()
        };
        Self::new(labels)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// All distinct rearrangements of this string's labels.
    pub fn rearrangements(&self) -> Vec<ColorString> {
        let mut out: BTreeSet<Vec<String>> = BTreeSet::new();
        let mut labels = self.labels.clone();
        labels.sort();
        permute_into(&mut labels, 0, &mut out);
        out.into_iter().map(|labels| ColorString { labels }).collect()
    }
}

fn permute_into(labels: &mut Vec<String>, k: usize, out: &mut BTreeSet<Vec<String>>) {
    if k == labels.len() {
        out.insert(labels.clone());
        return;
    }
    for i in k..labels.len() {
        labels.swap(k, i);
        permute_into(labels, k + 1, out);
        labels.swap(k, i);
    }
}

impl fmt::Display for ColorString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.labels.iter().all(|l| l.chars().count() == 1) {
            for l in &self.labels {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.labels.join(","))
        }
    }
}

/// A morphism of the coloured braid groupoid: a braid word together with its
/// source colour string. The target is determined by the action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidMorphism {
    pub word: BraidWord,
    pub source: ColorString,
}

impl GroupoidMorphism {
    pub fn new(word: BraidWord, source: ColorString) -> Result<Self> {
        if word.strands() != source.len() {
            return Err(Error::StrandMismatch(word.strands(), source.len()));
        }
        Ok(Self { word, source })
    }

    pub fn target(&self) -> ColorString {
        act(&self.word, &self.source).expect("validated at construction")
    }

    /// Composition `self ∘ other` (apply `other` first). The source of
    /// `self` must be the target of `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let mid = other.target();
        if self.source != mid {
            return Err(Error::BasePointMismatch(self.source.to_string(), mid.to_string()));
        }
        Ok(Self {
            word: self.word.compose(&other.word)?,
            source: other.source.clone(),
        })
    }

    pub fn inverse(&self) -> Self {
        Self { word: self.word.inverse(), source: self.target() }
    }
}

/// Act on a colour string: letters right-to-left, `σ_i^±` transposes the
/// labels in positions `i` and `i+1`.
pub fn act(word: &BraidWord, s: &ColorString) -> Result<ColorString> {
    let labels = word.act_on(s.labels())?;
    ColorString::new(labels)
}

/// A set of colour strings over a fixed multiset of labels, e.g. the domain
/// on which some braiding acts diagonally.
pub type DomainSet = BTreeSet<ColorString>;

/// The generator domain `𝒰_{s,σ_i}`: rearrangements `u` of `s` whose labels
/// contain the adjacent pair `q_i q_{i+1}` of `s` (in either order) at some
/// position other than `i-1` or `i+1` (1-based). Independent of the sign of
/// the generator.
pub fn generator_domain(s: &ColorString, index: usize) -> Result<DomainSet> {
    let n = s.len();
    if index == 0 || index >= n {
        return Err(Error::IndexOutOfRange { index, n });
    }
    let qi = &s.labels()[index - 1];
    let qj = &s.labels()[index];
    let mut out = DomainSet::new();
    for u in s.rearrangements() {
        let ul = u.labels();
        let found = (0..n - 1).any(|p0| {
            let pos = p0 + 1; // 1-based start of the adjacent pair
            if pos + 1 == index || pos == index + 1 {
                return false;
            }
            (&ul[p0] == qi && &ul[p0 + 1] == qj) || (&ul[p0] == qj && &ul[p0 + 1] == qi)
        });
        if found {
            out.insert(u);
        }
    }
    Ok(out)
}

/// How [`word_domain`] combines the minimal-word chains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strictness {
    /// Union over minimal words: `u` is in the domain if some minimal word
    /// certifies it.
    #[default]
    Some,
    /// Intersection: every minimal word must certify `u`.
    All,
}

/// All geodesic (minimal-length) words representing the same group element
/// as `w`, enumerated by breadth-first search over normal-form classes.
pub fn minimal_words(w: &BraidWord) -> Vec<BraidWord> {
    let n = w.strands();
    let target = normal_form(w);
    if target.is_identity() {
        return vec![BraidWord::identity(n).expect("n >= 1")];
    }
    // Layered BFS from the identity; parents[g] holds every (predecessor,
    // letter) pair realising g at its first (= minimal) layer.
    let mut layer: Vec<NormalForm> = vec![normal_form(&BraidWord::identity(n).unwrap())];
    let mut seen: HashSet<NormalForm> = layer.iter().cloned().collect();
    let mut parents: HashMap<NormalForm, Vec<(NormalForm, BraidLetter)>> = HashMap::new();
    let letters: Vec<BraidLetter> = (1..n)
        .flat_map(|i| [BraidLetter { index: i, sign: 1 }, BraidLetter { index: i, sign: -1 }])
        .collect();
    'outer: loop {
        let mut next: Vec<NormalForm> = Vec::new();
        let mut next_set: HashSet<NormalForm> = HashSet::new();
        for g in &layer {
            let g_word = nf_witness(g);
            for &l in &letters {
                let ext = BraidWord::from_letters(n, vec![l]).unwrap();
                let h = normal_form(&ext.compose(&g_word).unwrap());
                if seen.contains(&h) {
                    continue;
                }
                parents.entry(h.clone()).or_default().push((g.clone(), l));
                if next_set.insert(h.clone()) {
                    next.push(h);
                }
            }
        }
        for h in &next {
            seen.insert(h.clone());
        }
        if next_set.contains(&target) {
            break 'outer;
        }
        assert!(!next.is_empty(), "BFS exhausted without reaching target");
        layer = next;
    }
    // Walk all parent chains back from the target, accumulating letters.
    let mut words: Vec<BraidWord> = Vec::new();
    let mut stack: VecDeque<(NormalForm, Vec<BraidLetter>)> = VecDeque::new();
    stack.push_back((target, Vec::new()));
    let id = normal_form(&BraidWord::identity(n).unwrap());
    while let Some((g, suffix)) = stack.pop_front() {
        if g == id {
            words.push(BraidWord::from_letters(n, suffix).unwrap());
            continue;
        }
        for (pred, l) in parents.get(&g).into_iter().flatten() {
            // g = l · pred, so l prepends to the letters accumulated so far
            // ... but we walk target -> identity, peeling leftmost letters.
            let mut s = suffix.clone();
            s.push(*l);
            stack.push_back((pred.clone(), s));
        }
    }
    words.sort_by_key(|w| w.to_string());
    words.dedup();
    words
}

/// Any word representing the normal form (Δ's and factors spelled out).
fn nf_witness(nf: &NormalForm) -> BraidWord {
    let n = nf.strands;
    let mut w = BraidWord::identity(n).unwrap();
    let delta = half_twist(n);
    let reps = nf.inf.unsigned_abs() as usize;
    for _ in 0..reps {
        let d = if nf.inf >= 0 { delta.clone() } else { delta.inverse() };
        w = w.compose(&d).unwrap();
    }
    for f in &nf.factors {
        w = w.compose(&permutation_word(n, f)).unwrap();
    }
    w
}

fn half_twist(n: usize) -> BraidWord {
    // Δ = b_{n-1} b_{n-2} ... b_1 read with descending runs; β_n works.
    BraidWord::beta(n).unwrap()
}

/// A positive word for the simple braid with the given permutation
/// (bubble-sort factorisation).
fn permutation_word(n: usize, p: &crate::braid::PermutationImage) -> BraidWord {
    let mut arr: Vec<usize> = (0..n).map(|i| p.apply(i)).collect();
    let mut letters = Vec::new();
    // Sort arr back to identity with adjacent swaps, recording them; the
    // braid is the reverse of the sorting sequence.
    loop {
        let mut swapped = false;
        for i in 0..n - 1 {
            if arr[i] > arr[i + 1] {
                arr.swap(i, i + 1);
                letters.push(BraidLetter { index: i + 1, sign: 1 });
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    letters.reverse();
    BraidWord::from_letters(n, letters).unwrap()
}

/// The domain `𝒰_{s,w}` of a braid word at base point `s`: chain the
/// generator domains along minimal words for the element of `w`, combining
/// per [`Strictness`].
///
/// For a single minimal word `l_k ... l_1` (letters acting right-to-left)
/// the chained domain is
/// `𝒰 = ⋂_j  (l_1 ... l_{j-1})^{-1} 𝒰_{s_j, l_j}` pulled back to the source,
/// computed here by walking each rearrangement through the word.
pub fn word_domain(s: &ColorString, w: &BraidWord, strictness: Strictness) -> Result<DomainSet> {
    if w.strands() != s.len() {
        return Err(Error::StrandMismatch(w.strands(), s.len()));
    }
    let minimal = minimal_words(w);
    let mut acc: Option<DomainSet> = None;
    for mw in &minimal {
        let dom = single_word_domain(s, &mw)?;
        acc = Some(match (acc, strictness) {
            (None, _) => dom,
            (Some(a), Strictness::Some) => a.union(&dom).cloned().collect(),
            (Some(a), Strictness::All) => a.intersection(&dom).cloned().collect(),
        });
    }
    Ok(acc.unwrap_or_default())
}

/// Chain rule along one concrete word: `u` is in the domain iff at each step
/// the intermediate string lies in the generator domain of the letter being
/// applied, tracked from the base point `s` alongside.
fn single_word_domain(s: &ColorString, w: &BraidWord) -> Result<DomainSet> {
    let mut out = DomainSet::new();
    'cand: for u in s.rearrangements() {
        let mut base = s.clone();
        let mut cur = u.clone();
        for l in w.letters().iter().rev() {
            let gd = generator_domain(&base, l.index)?;
            if !gd.contains(&cur) {
                continue 'cand;
            }
            let step = BraidWord::generator(s.len(), l.index, l.sign)?;
            base = act(&step, &base)?;
            cur = act(&step, &cur)?;
        }
        out.insert(u);
    }
    Ok(out)
}

/// True iff the word's permutation image is trivial, i.e. the morphism is an
/// automorphism at its base point (element of the pure braid group).
pub fn automorphism_is_pure(m: &GroupoidMorphism) -> bool {
    m.source == m.target()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(t: &str) -> ColorString {
        ColorString::parse(t).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(cs("abc").labels(), &["a", "b", "c"]);
        assert_eq!(cs("tau,1,tau").labels(), &["tau", "1", "tau"]);
        assert_eq!(cs("abc").to_string(), "abc");
        assert_eq!(cs("tau,1").to_string(), "tau,1");
    }

    #[test]
    fn generator_domain_examples() {
        // Distinct labels 1,2,3: the pair (q_1,q_2) = (1,2) must appear away
        // from the forbidden positions.
        let s = cs("123");
        let d1 = generator_domain(&s, 1).unwrap();
        let expect1: DomainSet = ["123", "213"].iter().map(|t| cs(t)).collect();
        assert_eq!(d1, expect1);
        let d2 = generator_domain(&s, 2).unwrap();
        let expect2: DomainSet = ["123", "132"].iter().map(|t| cs(t)).collect();
        assert_eq!(d2, expect2);
    }

    #[test]
    fn generator_domain_repeated_labels() {
        // All labels equal: every rearrangement is the string itself and the
        // adjacent pair appears everywhere, in particular at an allowed spot
        // whenever n >= 2 gives one.
        let s = cs("aaa");
        let d = generator_domain(&s, 1).unwrap();
        assert!(d.contains(&s));
    }

    #[test]
    fn act_and_compose() {
        let s = cs("abc");
        let w = BraidWord::parse(3, "s1 s2").unwrap();
        // Rightmost first: s2 -> acb, then s1 -> cab.
        assert_eq!(act(&w, &s).unwrap(), cs("cab"));
        let m1 = GroupoidMorphism::new(BraidWord::parse(3, "s2").unwrap(), s.clone()).unwrap();
        let m2 =
            GroupoidMorphism::new(BraidWord::parse(3, "s1").unwrap(), m1.target()).unwrap();
        let m = m2.compose(&m1).unwrap();
        assert_eq!(m.source, s);
        assert_eq!(m.target(), cs("cab"));
        // Mismatched base points refuse to compose.
        let bad = GroupoidMorphism::new(BraidWord::parse(3, "s1").unwrap(), s).unwrap();
        assert!(bad.compose(&m1.compose(&m1.inverse()).unwrap()).is_err());
    }

    #[test]
    fn inverse_is_automorphism_roundtrip() {
        let m = GroupoidMorphism::new(BraidWord::parse(3, "s1 s2' s1").unwrap(), cs("xyz"))
            .unwrap();
        let round = m.inverse().compose(&m).unwrap();
        assert!(automorphism_is_pure(&round));
    }

    #[test]
    fn minimal_words_examples() {
        let w = BraidWord::parse(3, "s1 s1' s2").unwrap();
        let min = minimal_words(&w);
        assert_eq!(min.len(), 1);
        assert_eq!(min[0].to_string(), "s2");
        // Braid-related words share their geodesic set.
        let a = BraidWord::parse(3, "s1 s2 s1").unwrap();
        let b = BraidWord::parse(3, "s2 s1 s2").unwrap();
        let min_a = minimal_words(&a);
        assert_eq!(min_a, minimal_words(&b));
        assert!(min_a.iter().any(|m| m.to_string() == "s1 s2 s1"));
        assert!(min_a.iter().any(|m| m.to_string() == "s2 s1 s2"));
        assert!(min_a.iter().all(|m| m.len() == 3));
        let id = minimal_words(&BraidWord::parse(3, "s2 s2'").unwrap());
        assert_eq!(id.len(), 1);
        assert!(id[0].is_empty());
    }

    #[test]
    fn word_domain_chain_rule() {
        // For a single letter, the word domain is the generator domain.
        let s = cs("123");
        let w = BraidWord::parse(3, "s1").unwrap();
        assert_eq!(
            word_domain(&s, &w, Strictness::Some).unwrap(),
            generator_domain(&s, 1).unwrap()
        );
        // Sign never matters.
        let wi = BraidWord::parse(3, "s1'").unwrap();
        assert_eq!(
            word_domain(&s, &w, Strictness::Some).unwrap(),
            word_domain(&s, &wi, Strictness::Some).unwrap()
        );
    }
}
