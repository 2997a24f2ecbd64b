//! Exact-diagonalization toolkit for the transverse-field Ising model on
//! small qubit rings.
//!
//! The crate builds the ring Hamiltonian
//! `H = J * sum_i sx_i sx_{i+1} + B * sum_i sz_i` (site `n+1 = 1`) for
//! `3 <= n <= 10` qubits and exposes two independent routes to its physics:
//!
//! * closed forms for the three-qubit ring: the full spectrum, the ground
//!   state, pairwise concurrence, the spin squeezing parameter, and the
//!   two-level Rabi solution that generates the W state;
//! * a brute-force numeric route through a dense Hermitian eigensolver,
//!   used as the oracle every closed form is checked against.
//!
//! # Modules
//!
//! * [`linalg`]: dense complex matrices, Hermitian eigendecomposition,
//!   PSD square root, propagators.
//! * [`state`]: unit-norm state vectors over the computational basis.
//! * [`model`]: Hamiltonian and symmetry operators (parity, translation,
//!   reflection) with a numeric symmetry report.
//! * [`spectrum3`]: closed-form three-qubit spectrum, ground state, and
//!   the translation-adapted basis that block-diagonalizes `H`.
//! * [`entangle`]: partial trace, X-state concurrence, Wootters oracle,
//!   spin squeezing, and the concurrence-squeezing relation.
//! * [`dynamics`]: full-space and two-level time evolution from `|111>`,
//!   Rabi parameters, and the W-state generation schedule.
//!
//! # Conventions
//!
//! * Qubit 1 occupies the most significant bit of a basis index, so the
//!   ket `|m1 m2 m3>` is literally the binary index `m1 m2 m3`.
//! * `sz|0> = +|0>` and `sz|1> = -|1>`.
//! * `hbar = 1`; time carries inverse-energy units.
//! * States are compared through fidelity, never componentwise, because
//!   eigenvector phases are conventional.

pub mod dynamics;
pub mod entangle;
pub mod linalg;
pub mod model;
pub mod spectrum3;
pub mod state;

pub use num_complex::Complex64;

pub use dynamics::{DynamicsError, EvolutionTrace, RabiParams, WSchedule};
pub use entangle::{
    DensityMatrix, EntangleError, EntanglementReport, MixingAngles, RelationCheck, XStateElements,
};
pub use linalg::{ComplexMatrix, EigenDecomposition, LinalgError};
pub use model::{Axis, ModelError, ModelParams, SymmetryReport};
pub use spectrum3::{BlockStructure, GroundAmplitudes, MomentumBasis, Spectrum3, SpectrumError};
pub use state::StateVector;
