use std::fmt;

use crate::{Error, Result};

/// A single Artin generator or its inverse: `sign = +1` for `σ_i`,
/// `sign = -1` for `σ_i^{-1}`. Indices are 1-based, `1 <= index <= n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub index: usize,
    pub sign: i8,
}

impl BraidLetter {
    pub fn inverse(self) -> Self {
        Self { index: self.index, sign: -self.sign }
    }
}

/// A word in the generators of the braid group `B_n`.
///
/// Composition is concatenation, and products act on ordered data (strand
/// labels, colour strings) right-to-left: in `w1.compose(&w2)` the letters
/// of `w2` act first. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    /// The identity of `B_n`.
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidStrandCount(n));
        }
        Ok(Self { strands: n, letters: Vec::new() })
    }

    /// The one-letter word `σ_index^{sign}` in `B_n`.
    pub fn generator(n: usize, index: usize, sign: i8) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidStrandCount(n));
        }
        if index == 0 || index >= n {
            return Err(Error::IndexOutOfRange { index, n });
        }
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidParameter(format!("sign must be ±1, got {sign}")));
        }
        Ok(Self { strands: n, letters: vec![BraidLetter { index, sign }] })
    }

    pub fn from_letters(n: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidStrandCount(n));
        }
        for l in &letters {
            if l.index == 0 || l.index >= n {
                return Err(Error::IndexOutOfRange { index: l.index, n });
            }
            if l.sign != 1 && l.sign != -1 {
                return Err(Error::InvalidParameter(format!("sign must be ±1, got {}", l.sign)));
            }
        }
        Ok(Self { strands: n, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Product `self · other`: the letters of `other` act first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, letters })
    }

    /// The group inverse: letters reversed with signs flipped.
    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// The reversal anti-automorphism: letters in reverse order, signs kept.
    /// Satisfies `rev(vw) = rev(w) rev(v)` and fixes each generator.
    pub fn reverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Index-shift homomorphism `σ_i -> σ_{i+a}`, landing in `B_{n+a}` (or a
    /// larger group `B_m` with `m >= n+a`).
    pub fn shift(&self, a: usize, m: usize) -> Result<Self> {
        let needed = self
            .letters
            .iter()
            .map(|l| l.index + a + 1)
            .max()
            .unwrap_or(1)
            .max(1);
        if m < needed {
            return Err(Error::InvalidParameter(format!(
                "shift by {a} needs at least {needed} strands, got {m}"
            )));
        }
        let letters = self
            .letters
            .iter()
            .map(|l| BraidLetter { index: l.index + a, sign: l.sign })
            .collect();
        Self::from_letters(m, letters)
    }

    /// Reinterpret the word inside a larger group `B_m` (strand padding on
    /// the right).
    pub fn embed(&self, m: usize) -> Result<Self> {
        self.shift(0, m)
    }

    /// The ascending run `b_j = σ_1 σ_2 ... σ_j` in `B_n`, with `b_0 = e`.
    pub fn b_run(n: usize, j: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidStrandCount(n));
        }
        if j >= n {
            return Err(Error::IndexOutOfRange { index: j, n });
        }
        let letters = (1..=j).map(|i| BraidLetter { index: i, sign: 1 }).collect();
        Self::from_letters(n, letters)
    }

    /// The superselection braid `β_n = b_{n-1} b_{n-2} ... b_1` in `B_n`,
    /// with `β_1 = e`. Its length is `n(n-1)/2` and its permutation image is
    /// the order reversal.
    pub fn beta(n: usize) -> Result<Self> {
        let mut w = Self::identity(n)?;
        for j in (1..n).rev() {
            w = w.compose(&Self::b_run(n, j)?)?;
        }
        Ok(w)
    }

    /// The clockwise exchange `t_{k,l}` of a block of `k` strands past a
    /// block of `l` strands, an element of `B_{k+l}`:
    /// `t_{k,l} = r_0(b_l~) r_1(b_l~) ... r_{k-1}(b_l~)` where `b_l~` is the
    /// reversed run `σ_l σ_{l-1} ... σ_1`.
    pub fn t_exchange(k: usize, l: usize) -> Result<Self> {
        if k == 0 || l == 0 {
            return Err(Error::InvalidParameter("t_{k,l} needs k,l >= 1".into()));
        }
        let n = k + l;
        let rev_run = Self::b_run(n, l)?.reverse();
        let mut w = Self::identity(n)?;
        for a in 0..k {
            w = w.compose(&rev_run.shift(a, n)?)?;
        }
        Ok(w)
    }

    /// The anticlockwise exchange `u_{k,l} = t_{l,k}^{-1}`.
    pub fn u_exchange(k: usize, l: usize) -> Result<Self> {
        Ok(Self::t_exchange(l, k)?.inverse())
    }

    /// Free reduction: cancel adjacent `σ_i σ_i^{-1}` pairs. Not a normal
    /// form, just a word shortening.
    pub fn free_reduce(&self) -> Self {
        let mut stack: Vec<BraidLetter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if let Some(&top) = stack.last() {
                if top.index == l.index && top.sign == -l.sign {
                    stack.pop();
                    continue;
                }
            }
            stack.push(l);
        }
        Self { strands: self.strands, letters: stack }
    }

    /// Apply the braid to an ordered sequence, permuting entries. Letters
    /// act right-to-left; `σ_i` swaps positions `i` and `i+1` (1-based).
    pub fn act_on<T: Clone>(&self, items: &[T]) -> Result<Vec<T>> {
        if items.len() != self.strands {
            return Err(Error::StrandMismatch(self.strands, items.len()));
        }
        let mut v = items.to_vec();
        for l in self.letters.iter().rev() {
            v.swap(l.index - 1, l.index);
        }
        Ok(v)
    }

    /// Parse the text syntax: whitespace-separated tokens `s<i>` (generator)
    /// and `s<i>'` (inverse), or the single token `e` for the identity.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidStrandCount(n));
        }
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens == ["e"] {
            return Self::identity(n);
        }
        let mut letters = Vec::with_capacity(tokens.len());
        for tok in tokens {
            let (body, sign) = match tok.strip_suffix('\'') {
                Some(b) => (b, -1),
                None => (tok, 1),
            };
            let digits = body
                .strip_prefix('s')
                .ok_or_else(|| Error::Parse(format!("bad braid token {tok:?}")))?;
            let index: usize = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad braid token {tok:?}")))?;
            letters.push(BraidLetter { index, sign });
        }
        if letters.is_empty() {
            return Err(Error::Parse("empty braid word (use \"e\")".into()));
        }
        Self::from_letters(n, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{}", l.index)?;
            if l.sign < 0 {
                write!(f, "'")?;
            }
        }
        Ok(())
    }
}
