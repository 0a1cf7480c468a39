//! Fusion-tree bases: admissible labellings of a tree shape.

use std::collections::HashMap;

use crate::fusion::FusionSystem;
use crate::{Error, Result};

use super::tree::Shape;

/// A labelled fusion tree. Internal vertex charges and multiplicity indices
/// are stored in post-order (left subtree, right subtree, vertex); the root
/// vertex is last. A single-leaf tree has no internal vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FusionTree {
    pub labels: Vec<usize>,
    pub mults: Vec<u32>,
}

/// An ordered basis of labelled trees over a fixed shape and leaf string.
/// Vectors are sorted by (root charge, labels, multiplicities), so each
/// root-charge block is contiguous.
#[derive(Clone, Debug, PartialEq)]
pub struct FusionBasis {
    pub shape: Shape,
    pub leaf_labels: Vec<usize>,
    pub vectors: Vec<FusionTree>,
}

impl FusionBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Root charge of the `k`-th basis vector.
    pub fn root(&self, k: usize) -> usize {
        match self.vectors[k].labels.last() {
            Some(&q) => q,
            None => self.leaf_labels[0],
        }
    }

    /// Contiguous index ranges per root charge, ascending in the charge.
    pub fn charge_blocks(&self) -> Vec<(usize, std::ops::Range<usize>)> {
        let mut out: Vec<(usize, std::ops::Range<usize>)> = Vec::new();
        for k in 0..self.dim() {
            let q = self.root(k);
            match out.last_mut() {
                Some((last, range)) if *last == q => range.end = k + 1,
                _ => out.push((q, k..k + 1)),
            }
        }
        out
    }

    pub fn index_map(&self) -> HashMap<&FusionTree, usize> {
        self.vectors.iter().enumerate().map(|(k, v)| (v, k)).collect()
    }
}

/// Enumerate admissible labellings of `shape` over `leaf_labels`,
/// optionally restricted to a root charge.
pub fn build_basis(
    sys: &FusionSystem,
    shape: &Shape,
    leaf_labels: &[usize],
    root_filter: Option<usize>,
) -> Result<FusionBasis> {
    if shape.leaves() != leaf_labels.len() {
        return Err(Error::StrandMismatch(shape.leaves(), leaf_labels.len()));
    }
    for &q in leaf_labels {
        if q >= sys.rank() {
            return Err(Error::UnknownLabel(format!("label index {q}")));
        }
    }
    let mut vectors = Vec::new();
    let mut leaves = leaf_labels.iter().copied();
    for (root, labels, mults) in labellings(sys, shape, &mut leaves) {
        if root_filter.is_none_or(|q| q == root) {
            vectors.push(FusionTree { labels, mults });
        }
    }
    let leaf0 = leaf_labels[0];
    vectors.sort_by(|a, b| {
        let ra = *a.labels.last().unwrap_or(&leaf0);
        let rb = *b.labels.last().unwrap_or(&leaf0);
        (ra, &a.labels, &a.mults).cmp(&(rb, &b.labels, &b.mults))
    });
    Ok(FusionBasis { shape: shape.clone(), leaf_labels: leaf_labels.to_vec(), vectors })
}

/// The canonical full basis over the left comb.
pub fn comb_basis(sys: &FusionSystem, leaf_labels: &[usize]) -> Result<FusionBasis> {
    build_basis(sys, &Shape::left_comb(leaf_labels.len())?, leaf_labels, None)
}

fn labellings(
    sys: &FusionSystem,
    shape: &Shape,
    leaves: &mut impl Iterator<Item = usize>,
) -> Vec<(usize, Vec<usize>, Vec<u32>)> {
    match shape {
        Shape::Leaf => vec![(leaves.next().expect("leaf supply"), Vec::new(), Vec::new())],
        Shape::Node(l, r) => {
            let left = labellings(sys, l, leaves);
            let right = labellings(sys, r, leaves);
            let mut out = Vec::new();
            for (a, la, ma) in &left {
                for (b, lb, mb) in &right {
                    for c in sys.channels(*a, *b) {
                        for mu in 1..=sys.n(*a, *b, c) {
                            let mut labels = la.clone();
                            labels.extend_from_slice(lb);
                            labels.push(c);
                            let mut mults = ma.clone();
                            mults.extend_from_slice(mb);
                            mults.push(mu);
                            out.push((c, labels, mults));
                        }
                    }
                }
            }
            out
        }
    }
}

/// A labelled tree in recursive form, used for local rewrites. Each node
/// carries its fusion charge and vertex multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum LTree {
    Leaf(usize),
    Node(Box<LTree>, Box<LTree>, usize, u32),
}

impl LTree {
    pub fn charge(&self) -> usize {
        match self {
            LTree::Leaf(q) => *q,
            LTree::Node(_, _, q, _) => *q,
        }
    }

    pub fn node(l: LTree, r: LTree, q: usize, mu: u32) -> Self {
        LTree::Node(Box::new(l), Box::new(r), q, mu)
    }

    /// Decode a flat labelled vector against its shape and leaf string.
    pub fn decode(shape: &Shape, leaf_labels: &[usize], tree: &FusionTree) -> Self {
        fn go(
            shape: &Shape,
            leaves: &mut impl Iterator<Item = usize>,
            internals: &mut impl Iterator<Item = (usize, u32)>,
        ) -> LTree {
            match shape {
                Shape::Leaf => LTree::Leaf(leaves.next().expect("leaf supply")),
                Shape::Node(l, r) => {
                    let lt = go(l, leaves, internals);
                    let rt = go(r, leaves, internals);
                    let (q, mu) = internals.next().expect("internal supply");
                    LTree::node(lt, rt, q, mu)
                }
            }
        }
        let mut leaves = leaf_labels.iter().copied();
        let mut internals = tree.labels.iter().copied().zip(tree.mults.iter().copied());
        go(shape, &mut leaves, &mut internals)
    }

    /// Flatten back to (shape-implicit) post-order internal labels.
    pub fn encode(&self) -> FusionTree {
        fn go(t: &LTree, labels: &mut Vec<usize>, mults: &mut Vec<u32>) {
            if let LTree::Node(l, r, q, mu) = t {
                go(l, labels, mults);
                go(r, labels, mults);
                labels.push(*q);
                mults.push(*mu);
            }
        }
        let mut labels = Vec::new();
        let mut mults = Vec::new();
        go(self, &mut labels, &mut mults);
        FusionTree { labels, mults }
    }

    /// Leaf charges in order.
    #[cfg(test)]
    pub fn leaf_labels(&self) -> Vec<usize> {
        fn go(t: &LTree, out: &mut Vec<usize>) {
            match t {
                LTree::Leaf(q) => out.push(*q),
                LTree::Node(l, r, _, _) => {
                    go(l, out);
                    go(r, out);
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }

    /// Mirror image: children swapped at every vertex, charges kept.
    pub fn mirror(&self) -> Self {
        match self {
            LTree::Leaf(q) => LTree::Leaf(*q),
            LTree::Node(l, r, q, mu) => LTree::node(r.mirror(), l.mirror(), *q, *mu),
        }
    }

    pub fn at(&self, path: &[u8]) -> Option<&LTree> {
        let mut cur = self;
        for &step in path {
            match cur {
                LTree::Node(l, r, _, _) => cur = if step == 0 { l } else { r },
                LTree::Leaf(_) => return None,
            }
        }
        Some(cur)
    }

    pub fn replace(&self, path: &[u8], with: LTree) -> Option<Self> {
        if path.is_empty() {
            return Some(with);
        }
        match self {
            LTree::Leaf(_) => None,
            LTree::Node(l, r, q, mu) => {
                let (step, rest) = (path[0], &path[1..]);
                if step == 0 {
                    Some(LTree::node(l.replace(rest, with)?, (**r).clone(), *q, *mu))
                } else {
                    Some(LTree::node((**l).clone(), r.replace(rest, with)?, *q, *mu))
                }
            }
        }
    }
}
