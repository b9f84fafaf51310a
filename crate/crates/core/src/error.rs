use thiserror::Error;

use crate::xform::PhaseResiduals;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{op}: incompatible shapes {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("{op}: expected a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("entry count {found} does not match shape {rows}x{cols}")]
    EntryCount {
        rows: usize,
        cols: usize,
        found: usize,
    },

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("matrix is not Hermitian (max |A - A†| = {residual:.3e})")]
    NotHermitian { residual: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (max off-diagonal {off_diagonal:.3e})")]
    NoConvergence { sweeps: usize, off_diagonal: f64 },

    #[error("matrix has eigenvalue {0:.3e} below the PSD tolerance")]
    NegativeEigenvalue(f64),

    #[error("invalid subsystem split: {0}")]
    Subsystems(String),

    #[error("invalid spin label: {0}")]
    InvalidSpin(String),

    #[error("label {label} out of range for spin {spin}")]
    LabelOutOfRange { label: String, spin: String },

    #[error("phase map is missing a value for label {0}")]
    IncompletePhaseMap(String),

    #[error("phase table violates its constraints: {0}")]
    InvalidPhaseTable(PhaseResiduals),

    #[error("phases violate the relation φ₁+φ₄ = φ₂+φ₃ (mismatch {mismatch:.3e} mod 2π)")]
    PhaseRelation { mismatch: f64 },

    #[error("state is not normalized (norm² = {0:.12})")]
    NotNormalized(f64),

    #[error("not a density matrix: {0}")]
    NotDensityMatrix(String),

    #[error("density matrix is not X-form (largest off-pattern entry {0:.3e})")]
    NotXForm(f64),

    #[error("invalid Yangian parameter {name}: modulus must exceed 1e-12")]
    InvalidParameter { name: &'static str },

    #[error("generator {generator} maps {source_label} onto {count} eigenstates")]
    AmbiguousImage {
        generator: String,
        source_label: String,
        count: usize,
    },

    #[error("analytic eigenvector {label} fails H|e⟩ = E|e⟩ (residual {residual:.3e})")]
    EigenpairCheck { label: String, residual: f64 },
}
