//! Superselection spectra: phases of the superselection braid, pure-braid
//! squares, and composite (block) exchanges.

use std::collections::HashMap;

use num_complex::Complex64;

use crate::braid::BraidWord;
use crate::fusion::{solve_twists, FusionSystem};
use crate::{Error, Result};

use super::basis::{build_basis, FusionBasis, LTree};
use super::braiding::braid_map;
use super::moves::{basis_change, UnitaryBlockMap};
use super::tree::Shape;

/// Identify the image of an order-reversing braid with the source basis:
/// compose with the canonical change to the mirrored shape, then match
/// labelled trees with their mirror images.
pub(crate) fn mirror_identified(
    sys: &FusionSystem,
    basis: &FusionBasis,
    m: &UnitaryBlockMap,
) -> Result<UnitaryBlockMap> {
    let mirror_shape = basis.shape.mirror();
    let mirror_basis = build_basis(sys, &mirror_shape, &m.target.leaf_labels, None)?;
    let g = basis_change(sys, &m.target, &mirror_basis)?;
    let index = basis.index_map();
    let mut perm = nalgebra::DMatrix::<Complex64>::zeros(basis.dim(), mirror_basis.dim());
    for (k, v) in mirror_basis.vectors.iter().enumerate() {
        let lt = LTree::decode(&mirror_shape, &mirror_basis.leaf_labels, v);
        let back = lt.mirror().encode();
        let t_idx = *index
            .get(&back)
            .ok_or_else(|| Error::BasisMismatch("mirror image is not admissible".into()))?;
        perm[(t_idx, k)] = Complex64::ONE;
    }
    let t = UnitaryBlockMap { source: mirror_basis, target: basis.clone(), matrix: perm };
    t.compose(&g)?.compose(m)
}

/// The per-sector phases `e^{iu_Q}` of the superselection braid on a full
/// basis: block-scalar extraction after mirror identification, cross-checked
/// against the product of vertex phases over every labelled tree.
pub fn superselection_spectrum(
    sys: &FusionSystem,
    basis: &FusionBasis,
) -> Result<Vec<(usize, Complex64)>> {
    let n = basis.leaf_labels.len();
    if n == 1 {
        return Ok(vec![(basis.leaf_labels[0], Complex64::ONE)]);
    }
    let beta = BraidWord::beta(n)?;
    let m = braid_map(sys, basis, &beta)?;
    let total = mirror_identified(sys, basis, &m)?;
    let scalars = total.block_scalars(sys.tol())?;
    // Cross-check: the phase of each sector is the product of r-phases over
    // the vertices of any of its labelled trees.
    let by_charge: HashMap<usize, Complex64> = scalars.iter().copied().collect();
    for (k, v) in basis.vectors.iter().enumerate() {
        let lt = LTree::decode(&basis.shape, &basis.leaf_labels, v);
        let product = vertex_phase_product(sys, &lt)?;
        let expect = by_charge[&basis.root(k)];
        if (product - expect).norm() > sys.tol() {
            return Err(Error::NotBlockScalar(format!(
                "vertex product disagrees with the extracted phase on sector {}",
                sys.label_name(basis.root(k))
            )));
        }
    }
    Ok(scalars)
}

fn vertex_phase_product(sys: &FusionSystem, t: &LTree) -> Result<Complex64> {
    match t {
        LTree::Leaf(_) => Ok(Complex64::ONE),
        LTree::Node(l, r, q, mu) => {
            let here = sys.r_phases(l.charge(), r.charge(), *q)?[(*mu - 1) as usize];
            Ok(here * vertex_phase_product(sys, l)? * vertex_phase_product(sys, r)?)
        }
    }
}

/// Check that the square of the superselection braid acts on each sector as
/// the twist ratio `θ_Q / (θ_{q_1}···θ_{q_n})`.
pub fn verify_pure_square(sys: &FusionSystem, basis: &FusionBasis) -> Result<bool> {
    let n = basis.leaf_labels.len();
    if n == 1 {
        return Ok(true);
    }
    let beta = BraidWord::beta(n)?;
    let m = braid_map(sys, basis, &beta.compose(&beta)?)?;
    let scalars = m.block_scalars(sys.tol())?;
    let twists = solve_twists(sys)?;
    let mut denom = Complex64::ONE;
    for &q in &basis.leaf_labels {
        denom *= twists.theta[q];
    }
    Ok(scalars
        .iter()
        .all(|&(q, z)| (z - twists.theta[q] / denom).norm() <= sys.tol()))
}

/// Check the composite-exchange law: on the coupled basis where the first
/// `k` leaves fuse to `x` and the last `l` to `y`, the block exchange
/// `t_{k,l}` acts as the scalar `e^{i(u_Q - u_x - u_y)}`, its reverse
/// `u_{k,l}` as the conjugate, and the double exchange as the square.
pub fn verify_composite_exchange(
    sys: &FusionSystem,
    leaf_labels: &[usize],
    k: usize,
    l: usize,
) -> Result<bool> {
    if k == 0 || l == 0 || k + l != leaf_labels.len() {
        return Err(Error::InvalidParameter(format!(
            "block sizes {k}+{l} do not fit {} leaves",
            leaf_labels.len()
        )));
    }
    let n = k + l;
    let shape = Shape::node(Shape::left_comb(k)?, Shape::left_comb(l)?);
    let basis = build_basis(sys, &shape, leaf_labels, None)?;
    if basis.dim() == 0 {
        return Ok(true);
    }
    let (block_a, block_b) = leaf_labels.split_at(k);

    // Sub-block superselection phases.
    let u_q: HashMap<usize, Complex64> = superselection_spectrum(
        sys,
        &build_basis(sys, &Shape::left_comb(n)?, leaf_labels, None)?,
    )?
    .into_iter()
    .collect();
    let u_x: HashMap<usize, Complex64> =
        superselection_spectrum(sys, &build_basis(sys, &Shape::left_comb(k)?, block_a, None)?)?
            .into_iter()
            .collect();
    let u_y: HashMap<usize, Complex64> =
        superselection_spectrum(sys, &build_basis(sys, &Shape::left_comb(l)?, block_b, None)?)?
            .into_iter()
            .collect();

    let t_word = BraidWord::t_exchange(k, l)?;
    let u_word = BraidWord::u_exchange(k, l)?;
    let single = block_swap_identified(sys, &basis, &braid_map(sys, &basis, &t_word)?, l)?;
    let reverse = block_swap_identified(sys, &basis, &braid_map(sys, &basis, &u_word)?, l)?;
    let double = braid_map(
        sys,
        &basis,
        &BraidWord::t_exchange(l, k)?.compose(&t_word)?,
    )?;

    let tol = sys.tol();
    let single_scalars = sector_scalars(&single, tol)?;
    let reverse_scalars = sector_scalars(&reverse, tol)?;
    let double_scalars = sector_scalars(&double, tol)?;
    for (&(x, y, q), &lambda) in &single_scalars {
        let expect = u_q[&q] * u_x[&x].conj() * u_y[&y].conj();
        if (lambda - expect).norm() > tol
            || (reverse_scalars[&(x, y, q)] - expect.conj()).norm() > tol
            || (double_scalars[&(x, y, q)] - lambda * lambda).norm() > tol
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Identify the image of a block exchange with the source coupled basis by
/// routing to the child-swapped shape and exchanging the root's children.
fn block_swap_identified(
    sys: &FusionSystem,
    basis: &FusionBasis,
    m: &UnitaryBlockMap,
    l: usize,
) -> Result<UnitaryBlockMap> {
    let (left, right) = match &basis.shape {
        Shape::Node(a, b) => ((**a).clone(), (**b).clone()),
        Shape::Leaf => return Err(Error::InvalidParameter("coupled shape required".into())),
    };
    let swapped_shape = Shape::node(right, left);
    debug_assert_eq!(swapped_shape.at(&[0]).map(Shape::leaves), Some(l));
    let swapped_basis = build_basis(sys, &swapped_shape, &m.target.leaf_labels, None)?;
    let g = basis_change(sys, &m.target, &swapped_basis)?;
    let index = basis.index_map();
    let mut perm = nalgebra::DMatrix::<Complex64>::zeros(basis.dim(), swapped_basis.dim());
    for (kk, v) in swapped_basis.vectors.iter().enumerate() {
        let lt = LTree::decode(&swapped_shape, &swapped_basis.leaf_labels, v);
        let back = match lt {
            LTree::Node(a, b, q, mu) => LTree::Node(b, a, q, mu),
            LTree::Leaf(_) => unreachable!("coupled shape"),
        }
        .encode();
        let t_idx = *index
            .get(&back)
            .ok_or_else(|| Error::BasisMismatch("swapped tree is not admissible".into()))?;
        perm[(t_idx, kk)] = Complex64::ONE;
    }
    let t = UnitaryBlockMap { source: swapped_basis, target: basis.clone(), matrix: perm };
    t.compose(&g)?.compose(m)
}

/// Per-(x, y, Q) sector scalars of an endomap on a coupled basis.
fn sector_scalars(
    m: &UnitaryBlockMap,
    tol: f64,
) -> Result<HashMap<(usize, usize, usize), Complex64>> {
    if m.source != m.target {
        return Err(Error::BasisMismatch("sector scalars need an endomap".into()));
    }
    let sector = |k: usize| -> (usize, usize, usize) {
        let lt = LTree::decode(&m.source.shape, &m.source.leaf_labels, &m.source.vectors[k]);
        match &lt {
            LTree::Node(a, b, q, _) => (a.charge(), b.charge(), *q),
            LTree::Leaf(_) => unreachable!("coupled shape"),
        }
    };
    let mut out = HashMap::new();
    for t in 0..m.source.dim() {
        for s in 0..m.source.dim() {
            let z = m.matrix[(t, s)];
            if sector(t) != sector(s) {
                if z.norm() > tol {
                    return Err(Error::NotBlockScalar(format!(
                        "cross-sector entry at ({t}, {s})"
                    )));
                }
                continue;
            }
            let want = if t == s { *out.entry(sector(s)).or_insert(z) } else { Complex64::ZERO };
            if (z - want).norm() > tol {
                return Err(Error::NotBlockScalar(format!("sector deviates at ({t}, {s})")));
            }
        }
    }
    Ok(out)
}
