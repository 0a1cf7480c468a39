//! Fusion-tree state spaces: tree shapes, labelled bases, F/R moves, the
//! unitary action of braids, superselection spectra, and the bounded
//! uniqueness search for sector-resolving braids.

pub(crate) mod basis;
mod braiding;
mod moves;
mod spectrum;
mod tree;
mod uniqueness;

pub use basis::{build_basis, comb_basis, FusionBasis, FusionTree};
pub use braiding::{braid_generator_map, braid_map};
pub use moves::{basis_change, f_move, route_to_left_comb, UnitaryBlockMap};
pub use spectrum::{superselection_spectrum, verify_composite_exchange, verify_pure_square};
pub use tree::{enumerate_shapes, Shape};
pub use uniqueness::{is_beta_pair, uniqueness_search};
