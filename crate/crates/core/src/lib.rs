//! Braid-group calculus, the coloured braid groupoid, and braided 6j fusion
//! systems, together with machinery that verifies braid identities and the
//! coherence axioms (triangle/pentagon/hexagon/ribbon) on concrete anyon
//! models.
//!
//! The crate is organised in four layers:
//!
//! * [`braid`] — exact braid-word algebra over `B_n` with a Garside
//!   left-greedy normal form as the word-problem oracle, plus a registry of
//!   named braid identities.
//! * [`groupoid`] — the braid groupoid on `n` distinctly coloured strands:
//!   colour strings, the action `b(s)`, domain sets and partial composition.
//! * [`fusion`] — the fusion-system data model (labels, fusion coefficients,
//!   F- and R-symbols), validators for every axiom, gauge transformations,
//!   monodromy, twists and the bundled example models.
//! * [`state`] — fusion-tree bases, F/R-move application, the unitary matrix
//!   of any braid on an `n`-anyon fusion space, superselection spectra and
//!   the bounded uniqueness search.

pub mod braid;
pub mod fusion;
pub mod groupoid;
pub mod state;

use thiserror::Error;

/// Errors shared by all layers of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("generator index {index} out of range for {n} strands")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("invalid strand count {0}")]
    InvalidStrandCount(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown identity '{0}'")]
    UnknownIdentity(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("base-point mismatch: alpha(g) = {0}, omega(h) = {1}")]
    BasePointMismatch(String, String),
    #[error("unknown label '{0}'")]
    UnknownLabel(String),
    #[error("inadmissible fusion triple ({0}, {1}) -> {2}")]
    InadmissibleTriple(String, String, String),
    #[error("missing F-block for ({a}, {b}, {c}; {d})")]
    MissingFBlock { a: String, b: String, c: String, d: String },
    #[error("missing R-block for ({a}, {b}) -> {c}")]
    MissingRBlock { a: String, b: String, c: String },
    #[error("unknown model '{0}'")]
    UnknownModel(String),
    #[error("model data error: {0}")]
    ModelData(String),
    #[error("gauge block size mismatch for ({0}, {1}) -> {2}")]
    GaugeSizeMismatch(String, String, String),
    #[error("twist constraint system is inconsistent: {0}")]
    InconsistentTwists(String),
    #[error("block-scalar assertion failed: {0}")]
    NotBlockScalar(String),
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
