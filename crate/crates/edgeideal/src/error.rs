use thiserror::Error;

/// Error taxonomy shared by the whole crate.
///
/// `Input` covers malformed arguments (out-of-range vertices, ambient
/// mismatches), `Domain` covers values outside a theorem's scope (edgeless
/// graphs for `d(G)`, non-weakly-chordal inputs to the co-two-pair suite),
/// `Precondition` covers contract violations between operations (non-minimal
/// complexes where a minimal one is required), `Resource` covers computations
/// refused because they exceed a configured cap, and `Internal` flags
/// conditions that would falsify an invariant the code relies on.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition error: {0}")]
    Precondition(String),
    #[error("resource error: {0}")]
    Resource(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
