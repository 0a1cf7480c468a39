//! Unitary braid actions on fusion-tree bases.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::braid::BraidWord;
use crate::fusion::FusionSystem;
use crate::{Error, Result};

use super::basis::{build_basis, FusionBasis, LTree};
use super::moves::{f_move, route_to_left_comb, UnitaryBlockMap};
use super::tree::Shape;

/// The unitary action of `σ_i^{sign}` on a basis. The target basis lives
/// over the same shape with leaves `i`, `i+1` swapped.
pub fn braid_generator_map(
    sys: &FusionSystem,
    basis: &FusionBasis,
    i: usize,
    sign: i8,
) -> Result<UnitaryBlockMap> {
    let n = basis.leaf_labels.len();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let down = route_to_left_comb(sys, basis)?;
    let comb = down.target.clone();

    let mut swapped = basis.leaf_labels.clone();
    swapped.swap(i - 1, i);

    let exchanged = if i == 1 {
        direct_channel_exchange(sys, &comb, sign)?
    } else {
        // Reassociate so that leaves i, i+1 sit in a direct channel: in the
        // left comb the vertex above leaf i+1 is at path 0^(n-1-i).
        let path = vec![0u8; n - 1 - i];
        let assoc = f_move(sys, &comb, &path)?;
        let r_step = leaf_pair_exchange(sys, &assoc.target, &path, sign)?;
        let swapped_comb = build_basis(sys, &comb.shape, &swapped, None)?;
        let assoc_back = f_move(sys, &swapped_comb, &path)?.adjoint();
        assoc_back.compose(&r_step.compose(&assoc)?)?
    };

    let target = build_basis(sys, &basis.shape, &swapped, None)?;
    let up = route_to_left_comb(sys, &target)?.adjoint();
    up.compose(&exchanged.compose(&down)?)
}

/// Exchange of the first two leaves of a left comb: diagonal R at the
/// innermost vertex.
fn direct_channel_exchange(
    sys: &FusionSystem,
    comb: &FusionBasis,
    sign: i8,
) -> Result<UnitaryBlockMap> {
    let (q1, q2) = (comb.leaf_labels[0], comb.leaf_labels[1]);
    let mut swapped = comb.leaf_labels.clone();
    swapped.swap(0, 1);
    let target = build_basis(sys, &comb.shape, &swapped, None)?;
    let index = target.index_map();
    let mut matrix = DMatrix::<Complex64>::zeros(target.dim(), comb.dim());
    for (s_idx, v) in comb.vectors.iter().enumerate() {
        let x = v.labels[0];
        let phase = exchange_phase(sys, q1, q2, x, v.mults[0], sign)?;
        let t_idx = *index.get(v).expect("same internal labels are admissible");
        matrix[(t_idx, s_idx)] = phase;
    }
    Ok(UnitaryBlockMap { source: comb.clone(), target, matrix })
}

/// Exchange of two adjacent leaves that form the right child `(q q')` of
/// the vertex at `path` (after reassociation).
fn leaf_pair_exchange(
    sys: &FusionSystem,
    basis: &FusionBasis,
    path: &[u8],
    sign: i8,
) -> Result<UnitaryBlockMap> {
    let mut pair_path = path.to_vec();
    pair_path.push(1);
    let mut swapped = basis.leaf_labels.clone();
    let offset = leading_leaves(&basis.shape, &pair_path);
    swapped.swap(offset, offset + 1);
    let target = build_basis(sys, &basis.shape, &swapped, None)?;
    let index = target.index_map();
    let mut matrix = DMatrix::<Complex64>::zeros(target.dim(), basis.dim());
    for (s_idx, v) in basis.vectors.iter().enumerate() {
        let lt = LTree::decode(&basis.shape, &basis.leaf_labels, v);
        let pair = lt.at(&pair_path).expect("pair vertex exists");
        let (qa, qb, y, mu) = match pair {
            LTree::Node(l, r, y, mu) => (l.charge(), r.charge(), *y, *mu),
            LTree::Leaf(_) => {
                return Err(Error::InvalidParameter("no direct pair at that vertex".into()))
            }
        };
        let phase = exchange_phase(sys, qa, qb, y, mu, sign)?;
        let t_idx = *index.get(v).expect("same internal labels are admissible");
        matrix[(t_idx, s_idx)] = phase;
    }
    Ok(UnitaryBlockMap { source: basis.clone(), target, matrix })
}

fn exchange_phase(
    sys: &FusionSystem,
    a: usize,
    b: usize,
    c: usize,
    mu: u32,
    sign: i8,
) -> Result<Complex64> {
    Ok(if sign >= 0 {
        sys.r_phases(a, b, c)?[(mu - 1) as usize]
    } else {
        sys.r_phases(b, a, c)?[(mu - 1) as usize].conj()
    })
}

/// Number of leaves strictly to the left of the subtree at `path`.
fn leading_leaves(shape: &Shape, path: &[u8]) -> usize {
    let mut count = 0;
    let mut cur = shape;
    for &step in path {
        match cur {
            Shape::Node(l, r) => {
                if step == 0 {
                    cur = l;
                } else {
                    count += l.leaves();
                    cur = r;
                }
            }
            Shape::Leaf => break,
        }
    }
    count
}

/// The unitary action of a braid word: letters act right to left.
pub fn braid_map(sys: &FusionSystem, basis: &FusionBasis, w: &BraidWord) -> Result<UnitaryBlockMap> {
    if w.strands() != basis.leaf_labels.len() {
        return Err(Error::StrandMismatch(w.strands(), basis.leaf_labels.len()));
    }
    let mut total = UnitaryBlockMap::identity(basis.clone());
    for letter in w.letters().iter().rev() {
        let step = braid_generator_map(sys, &total.target, letter.index, letter.sign)?;
        total = step.compose(&total)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::fusion::bundled_model;
    use crate::state::basis::comb_basis;

    #[test]
    fn two_leaf_exchange_is_the_r_matrix() {
        let sys = bundled_model("ising").unwrap();
        let s = sys.label_index("sigma").unwrap();
        let basis = comb_basis(&sys, &[s, s]).unwrap();
        let m = braid_generator_map(&sys, &basis, 1, 1).unwrap();
        for (k, v) in basis.vectors.iter().enumerate() {
            let q = v.labels[0];
            let want = sys.r_phase(s, s, q).unwrap();
            assert!((m.matrix[(k, k)] - want).norm() < 1e-12);
        }
        let inv = braid_generator_map(&sys, &m.target, 1, -1).unwrap();
        let round = inv.compose(&m).unwrap();
        assert!(round.block_scalars(1e-12).unwrap().iter().all(|&(_, z)| (z - Complex64::ONE).norm() < 1e-12));
    }

    #[test]
    fn vacuum_braiding_is_trivial() {
        let sys = bundled_model("toric").unwrap();
        let e = sys.label_index("e").unwrap();
        let basis = comb_basis(&sys, &[0, e, e]).unwrap();
        let m = braid_map(&sys, &basis, &BraidWord::parse(3, "s1").unwrap()).unwrap();
        let diag_ok = m
            .matrix
            .iter()
            .enumerate()
            .all(|(k, z)| {
                let (r, c) = (k % m.matrix.nrows(), k / m.matrix.nrows());
                let want = if r == c { Complex64::ONE } else { Complex64::ZERO };
                (z - want).norm() < 1e-12
            });
        assert!(diag_ok);
    }

    #[test]
    fn braid_relation_holds_on_fusion_spaces() {
        let sys = bundled_model("fib").unwrap();
        let tau = sys.label_index("tau").unwrap();
        let basis = comb_basis(&sys, &[tau; 3]).unwrap();
        let lhs = braid_map(&sys, &basis, &BraidWord::parse(3, "s1 s2 s1").unwrap()).unwrap();
        let rhs = braid_map(&sys, &basis, &BraidWord::parse(3, "s2 s1 s2").unwrap()).unwrap();
        assert_eq!(lhs.target.leaf_labels, rhs.target.leaf_labels);
        assert!((&lhs.matrix - &rhs.matrix).norm() < 1e-9);
    }

    #[test]
    fn functor_laws() {
        let sys = bundled_model("ising").unwrap();
        let s = sys.label_index("sigma").unwrap();
        let p = sys.label_index("psi").unwrap();
        let basis = comb_basis(&sys, &[s, p, s]).unwrap();
        let w1 = BraidWord::parse(3, "s2 s1'").unwrap();
        let w2 = BraidWord::parse(3, "s1 s2").unwrap();
        // compose(w1, w2) acts as w2 first.
        let m2 = braid_map(&sys, &basis, &w2).unwrap();
        let m1 = braid_map(&sys, &m2.target, &w1).unwrap();
        let chained = m1.compose(&m2).unwrap();
        let joint = braid_map(&sys, &basis, &w1.compose(&w2).unwrap()).unwrap();
        assert!((&chained.matrix - &joint.matrix).norm() < 1e-9);
        // Inverse word gives the adjoint map.
        let inv = braid_map(&sys, &joint.target, &w1.compose(&w2).unwrap().inverse()).unwrap();
        assert!((&inv.matrix - &joint.adjoint().matrix).norm() < 1e-9);
        assert!(joint.unitarity_residual() < 1e-9);
        assert!(joint.cross_block_residual() < 1e-12);
    }
}
