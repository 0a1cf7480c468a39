//! F-moves, block maps, and canonical basis changes between tree shapes.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::fusion::FusionSystem;
use crate::{Error, Result};

use super::basis::{build_basis, FusionBasis, LTree};
use super::tree::Shape;

/// A linear map between two fusion-tree bases, unitary and root-charge
/// preserving. `matrix[t, s]` is the coefficient of target vector `t` in
/// the image of source vector `s`.
#[derive(Clone, Debug)]
pub struct UnitaryBlockMap {
    pub source: FusionBasis,
    pub target: FusionBasis,
    pub matrix: DMatrix<Complex64>,
}

impl UnitaryBlockMap {
    pub fn identity(basis: FusionBasis) -> Self {
        let d = basis.dim();
        UnitaryBlockMap {
            source: basis.clone(),
            target: basis,
            matrix: DMatrix::identity(d, d),
        }
    }

    /// `self ∘ other`: apply `other` first. Bases must match exactly.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.source != other.target {
            return Err(Error::BasisMismatch(
                "composition bases do not line up".into(),
            ));
        }
        Ok(UnitaryBlockMap {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix * &other.matrix,
        })
    }

    /// Adjoint map (inverse, for unitary maps).
    pub fn adjoint(&self) -> Self {
        UnitaryBlockMap {
            source: self.target.clone(),
            target: self.source.clone(),
            matrix: self.matrix.adjoint(),
        }
    }

    pub fn unitarity_residual(&self) -> f64 {
        let d = self.matrix.ncols();
        (self.matrix.adjoint() * &self.matrix - DMatrix::<Complex64>::identity(d, d)).norm()
    }

    /// Largest entry coupling different root charges.
    pub fn cross_block_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for t in 0..self.target.dim() {
            for s in 0..self.source.dim() {
                if self.target.root(t) != self.source.root(s) {
                    worst = worst.max(self.matrix[(t, s)].norm());
                }
            }
        }
        worst
    }

    /// For an endomap (`source == target`), extract the per-root-charge
    /// scalar, requiring each block to be that scalar times the identity.
    pub fn block_scalars(&self, tol: f64) -> Result<Vec<(usize, Complex64)>> {
        if self.source != self.target {
            return Err(Error::BasisMismatch(
                "block scalars need matching source and target bases".into(),
            ));
        }
        let mut out = Vec::new();
        for (q, range) in self.source.charge_blocks() {
            let lambda = self.matrix[(range.start, range.start)];
            for t in 0..self.source.dim() {
                for s in 0..self.source.dim() {
                    let expect = if t == s && range.contains(&s) {
                        lambda
                    } else if range.contains(&s) || range.contains(&t) {
                        Complex64::ZERO
                    } else {
                        continue;
                    };
                    if (self.matrix[(t, s)] - expect).norm() > tol {
                        return Err(Error::NotBlockScalar(format!(
                            "charge block {q} deviates at ({t}, {s})"
                        )));
                    }
                }
            }
            out.push((q, lambda));
        }
        Ok(out)
    }
}

fn require_canonical(sys: &FusionSystem, basis: &FusionBasis) -> Result<()> {
    let canonical = build_basis(sys, &basis.shape, &basis.leaf_labels, None)?;
    if canonical != *basis {
        return Err(Error::BasisMismatch("basis is not a canonical full basis".into()));
    }
    Ok(())
}

/// The F-move at the vertex addressed by `path` (0/1 steps from the root),
/// reassociating `(ab)c -> a(bc)` locally. Returns the unitary map onto the
/// canonical basis of the reassociated shape.
pub fn f_move(sys: &FusionSystem, basis: &FusionBasis, path: &[u8]) -> Result<UnitaryBlockMap> {
    require_canonical(sys, basis)?;
    let local = basis
        .shape
        .at(path)
        .ok_or_else(|| Error::InvalidParameter("no vertex at that path".into()))?;
    let (sub_a, sub_b, sub_c) = match local {
        Shape::Node(l, c) => match &**l {
            Shape::Node(a, b) => ((**a).clone(), (**b).clone(), (**c).clone()),
            Shape::Leaf => {
                return Err(Error::InvalidParameter(
                    "vertex does not admit an (ab)c -> a(bc) move".into(),
                ))
            }
        },
        Shape::Leaf => {
            return Err(Error::InvalidParameter(
                "path addresses a leaf, not a vertex".into(),
            ))
        }
    };
    let new_local = Shape::node(sub_a, Shape::node(sub_b, sub_c));
    let new_shape = basis
        .shape
        .replace(path, new_local)
        .expect("path verified above");
    let target = build_basis(sys, &new_shape, &basis.leaf_labels, None)?;
    let index = target.index_map();

    let mut matrix = DMatrix::<Complex64>::zeros(target.dim(), basis.dim());
    for (s_idx, v) in basis.vectors.iter().enumerate() {
        let lt = LTree::decode(&basis.shape, &basis.leaf_labels, v);
        let sub = lt.at(path).expect("path verified above");
        let (ta, tb, tc, e, mu, vertex_charge, vertex_mu) = match sub {
            LTree::Node(l, c, d, nu) => match &**l {
                LTree::Node(a, b, e, mu) => {
                    ((**a).clone(), (**b).clone(), (**c).clone(), *e, *mu, *d, *nu)
                }
                LTree::Leaf(_) => unreachable!("shape verified above"),
            },
            LTree::Leaf(_) => unreachable!("shape verified above"),
        };
        let (a, b, c) = (ta.charge(), tb.charge(), tc.charge());
        for f in sys.channels(b, c) {
            for rho in 1..=sys.n(b, c, f) {
                for delta in 1..=sys.n(a, f, vertex_charge) {
                    let coeff = sys.f_entry(
                        (a, b, c, vertex_charge),
                        (e, mu, vertex_mu),
                        (f, rho, delta),
                    )?;
                    if coeff.norm() == 0.0 {
                        continue;
                    }
                    let new_sub = LTree::node(
                        ta.clone(),
                        LTree::node(tb.clone(), tc.clone(), f, rho),
                        vertex_charge,
                        delta,
                    );
                    let new_tree = lt.replace(path, new_sub).unwrap().encode();
                    let t_idx = *index.get(&new_tree).expect("admissible target vector");
                    matrix[(t_idx, s_idx)] = coeff;
                }
            }
        }
    }
    Ok(UnitaryBlockMap { source: basis.clone(), target, matrix })
}

/// Route a basis to the left comb over the same leaves by inverse F-moves.
pub fn route_to_left_comb(sys: &FusionSystem, basis: &FusionBasis) -> Result<UnitaryBlockMap> {
    require_canonical(sys, basis)?;
    let mut total = UnitaryBlockMap::identity(basis.clone());
    loop {
        let cur = total.target.clone();
        let Some(path) = find_right_internal(&cur.shape, &mut Vec::new()) else {
            return Ok(total);
        };
        // The node at `path` is a(bc); the inverse F-move lands on (ab)c.
        let local = cur.shape.at(&path).unwrap();
        let (sub_a, sub_b, sub_c) = match local {
            Shape::Node(a, rc) => match &**rc {
                Shape::Node(b, c) => ((**a).clone(), (**b).clone(), (**c).clone()),
                Shape::Leaf => unreachable!("find_right_internal"),
            },
            Shape::Leaf => unreachable!("find_right_internal"),
        };
        let assoc_local = Shape::node(Shape::node(sub_a, sub_b), sub_c);
        let assoc_shape = cur.shape.replace(&path, assoc_local).unwrap();
        let intermediate = build_basis(sys, &assoc_shape, &cur.leaf_labels, None)?;
        let step = f_move(sys, &intermediate, &path)?.adjoint();
        total = step.compose(&total)?;
    }
}

fn find_right_internal(shape: &Shape, path: &mut Vec<u8>) -> Option<Vec<u8>> {
    match shape {
        Shape::Leaf => None,
        Shape::Node(l, r) => {
            if matches!(**r, Shape::Node(_, _)) {
                return Some(path.clone());
            }
            path.push(0);
            let found = find_right_internal(l, path);
            path.pop();
            if found.is_some() {
                return found;
            }
            path.push(1);
            let found = find_right_internal(r, path);
            path.pop();
            found
        }
    }
}

/// Canonical basis change between two shapes over the same leaf string,
/// routed through the left comb.
pub fn basis_change(
    sys: &FusionSystem,
    from: &FusionBasis,
    to: &FusionBasis,
) -> Result<UnitaryBlockMap> {
    if from.leaf_labels != to.leaf_labels {
        return Err(Error::BasisMismatch("leaf strings differ".into()));
    }
    let down = route_to_left_comb(sys, from)?;
    let up = route_to_left_comb(sys, to)?.adjoint();
    up.compose(&down)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::bundled_model;
    use crate::state::enumerate_shapes;

    #[test]
    fn f_move_matches_stored_f_matrix() {
        let sys = bundled_model("fib").unwrap();
        let tau = sys.label_index("tau").unwrap();
        let comb = build_basis(&sys, &Shape::left_comb(3).unwrap(), &[tau; 3], None).unwrap();
        let m = f_move(&sys, &comb, &[]).unwrap();
        assert!(m.unitarity_residual() < 1e-12);
        assert!(m.cross_block_residual() == 0.0);
        // Root-tau block is the 2x2 F^{tau tau tau}_tau, transposed into
        // the target-major layout.
        let block = sys.stored_f(tau, tau, tau, tau).unwrap();
        for (t, row) in m.target.vectors.iter().enumerate() {
            for (s, col) in m.source.vectors.iter().enumerate() {
                if m.target.root(t) != tau || m.source.root(s) != tau {
                    continue;
                }
                let e = col.labels[0];
                let f = row.labels[0];
                let want = block.entry((e, 1, 1), (f, 1, 1));
                assert!((m.matrix[(t, s)] - want).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn f_move_then_adjoint_is_identity() {
        let sys = bundled_model("ising").unwrap();
        let s = sys.label_index("sigma").unwrap();
        let comb = build_basis(&sys, &Shape::left_comb(4).unwrap(), &[s; 4], None).unwrap();
        let m = f_move(&sys, &comb, &[0]).unwrap();
        let round = m.adjoint().compose(&m).unwrap();
        let d = round.matrix.ncols();
        assert!((round.matrix - DMatrix::<Complex64>::identity(d, d)).norm() < 1e-12);
    }

    #[test]
    fn basis_change_path_independence() {
        // All routes between shape pairs agree because the pentagon holds:
        // compare the canonical route with a direct F-move where one exists.
        let sys = bundled_model("fib").unwrap();
        let tau = sys.label_index("tau").unwrap();
        for shape in enumerate_shapes(4).unwrap() {
            let from = build_basis(&sys, &shape, &[tau; 4], None).unwrap();
            for path in [vec![], vec![0u8], vec![1u8]] {
                let Ok(direct) = f_move(&sys, &from, &path) else { continue };
                let routed = basis_change(&sys, &from, &direct.target).unwrap();
                assert!((&routed.matrix - &direct.matrix).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn basis_change_round_trip() {
        let sys = bundled_model("ising").unwrap();
        let s = sys.label_index("sigma").unwrap();
        let p = sys.label_index("psi").unwrap();
        let shapes = enumerate_shapes(4).unwrap();
        let a = build_basis(&sys, &shapes[0], &[s, p, s, s], None).unwrap();
        let b = build_basis(&sys, &shapes[3], &[s, p, s, s], None).unwrap();
        let ab = basis_change(&sys, &a, &b).unwrap();
        let ba = basis_change(&sys, &b, &a).unwrap();
        let round = ba.compose(&ab).unwrap();
        let d = round.matrix.ncols();
        assert!((round.matrix - DMatrix::<Complex64>::identity(d, d)).norm() < 1e-9);
        let same = basis_change(&sys, &a, &a).unwrap();
        let d = same.matrix.ncols();
        assert!((same.matrix - DMatrix::<Complex64>::identity(d, d)).norm() < 1e-12);
    }
}
