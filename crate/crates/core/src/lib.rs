//! X-form unitary Yang-Baxter gates on V^{j₁} ⊗ V^{j₂}, the entanglement they
//! generate, and the Yangian Y(sl(2)) shift operators of the eight-level
//! Yang-Baxter Hamiltonian built from the three-qubit gate.
//!
//! The modules build on each other bottom-up:
//!
//! * [`linalg`]: dense complex matrices, Kronecker embedding, a Jacobi
//!   eigensolver, partial transpose/trace.
//! * [`xform`]: phase tables, X-form involutions M and R̆(θ) = e^{−iθM/2}.
//! * [`ybe`]: numerical residuals of the commutation relations and of the
//!   braided Yang-Baxter equation.
//! * [`entangle`]: negativity, concurrence, three-tangle.
//! * [`hamiltonian`]: H = R̆†H₀R̆ and its analytic eigenpairs.
//! * [`yangian`]: generators, relation checks, transfer graph.

pub mod entangle;
pub mod error;
pub mod hamiltonian;
pub mod linalg;
pub mod xform;
pub mod yangian;
pub mod ybe;

pub use error::{Error, Result};
pub use linalg::{Complex, ComplexMatrix, EigenSystem};
pub use xform::{HalfInt, PhaseResiduals, PhaseTable, RMatrix, XFormM};
