//! Fusion-tree shapes: full rooted binary trees with ordered leaves.

use crate::{Error, Result};

/// A full rooted binary tree shape. Leaves are ordered left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    Leaf,
    Node(Box<Shape>, Box<Shape>),
}

impl Shape {
    pub fn node(left: Shape, right: Shape) -> Self {
        Shape::Node(Box::new(left), Box::new(right))
    }

    /// Number of leaves.
    pub fn leaves(&self) -> usize {
        match self {
            Shape::Leaf => 1,
            Shape::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    /// Number of internal vertices (fusion vertices).
    pub fn internal_count(&self) -> usize {
        self.leaves() - 1
    }

    /// The left comb `((((1 2) 3) 4) ...)` on `n` leaves.
    pub fn left_comb(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidStrandCount(0));
        }
        let mut s = Shape::Leaf;
        for _ in 1..n {
            s = Shape::node(s, Shape::Leaf);
        }
        Ok(s)
    }

    pub fn is_left_comb(&self) -> bool {
        match self {
            Shape::Leaf => true,
            Shape::Node(l, r) => matches!(**r, Shape::Leaf) && l.is_left_comb(),
        }
    }

    /// Mirror image: swap children at every vertex (reverses the leaf order).
    pub fn mirror(&self) -> Self {
        match self {
            Shape::Leaf => Shape::Leaf,
            Shape::Node(l, r) => Shape::node(r.mirror(), l.mirror()),
        }
    }

    /// Subshape at a root path (0 = left child, 1 = right child).
    pub fn at(&self, path: &[u8]) -> Option<&Shape> {
        let mut cur = self;
        for &step in path {
            match cur {
                Shape::Node(l, r) => cur = if step == 0 { l } else { r },
                Shape::Leaf => return None,
            }
        }
        Some(cur)
    }

    /// Replace the subshape at a path.
    pub fn replace(&self, path: &[u8], with: Shape) -> Option<Shape> {
        if path.is_empty() {
            return Some(with);
        }
        match self {
            Shape::Leaf => None,
            Shape::Node(l, r) => {
                let (step, rest) = (path[0], &path[1..]);
                if step == 0 {
                    Some(Shape::node(l.replace(rest, with)?, (**r).clone()))
                } else {
                    Some(Shape::node((**l).clone(), r.replace(rest, with)?))
                }
            }
        }
    }

    /// Parenthesised rendering over 1-based leaf indices, e.g. `((1 2) 3)`.
    pub fn render(&self) -> String {
        fn go(s: &Shape, next: &mut usize, out: &mut String) {
            match s {
                Shape::Leaf => {
                    out.push_str(&next.to_string());
                    *next += 1;
                }
                Shape::Node(l, r) => {
                    out.push('(');
                    go(l, next, out);
                    out.push(' ');
                    go(r, next, out);
                    out.push(')');
                }
            }
        }
        let mut out = String::new();
        let mut next = 1;
        go(self, &mut next, &mut out);
        out
    }
}

/// All tree shapes on `n` leaves, in deterministic order; there are
/// `C_{n-1}` of them (Catalan).
pub fn enumerate_shapes(n: usize) -> Result<Vec<Shape>> {
    if n == 0 {
        return Err(Error::InvalidStrandCount(0));
    }
    fn go(n: usize) -> Vec<Shape> {
        if n == 1 {
            return vec![Shape::Leaf];
        }
        let mut out = Vec::new();
        for k in 1..n {
            for l in go(k) {
                for r in go(n - k) {
                    out.push(Shape::node(l.clone(), r));
                }
            }
        }
        out
    }
    Ok(go(n))
}
