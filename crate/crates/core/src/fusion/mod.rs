//! Braided 6j fusion systems: label sets, fusion coefficients, F- and
//! R-symbols, their coherence equations, gauge freedom, twists and the
//! bundled example models.

mod coherence;
mod gauge;
mod json;
mod models;
mod system;
mod twists;
mod validate;

pub use coherence::{hexagon_residual, pentagon_residual, triangle_check};
pub use gauge::{apply_gauge, GaugeTransformation};
pub use json::{from_json_str, to_json_string};
pub use models::{bundled_model, model_names};
pub use system::{FBlock, FusionSystem, VertexPair};
pub use twists::{
    fusion_algebra_check, is_modular_candidate, monodromy, quantum_dimensions, solve_twists,
    transparent_labels, TwistAssignment,
};
pub use validate::{validate, CheckEntry, ValidationReport};
