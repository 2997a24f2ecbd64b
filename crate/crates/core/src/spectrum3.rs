//! Closed-form analytics for the three-qubit ring: the translation-adapted
//! basis, the eight eigenvalues, and the ground state.
//!
//! The translation-adapted basis splits the 8x8 Hamiltonian into blocks of
//! size at most 2x2, which is what makes the closed forms below exact. The
//! ground state lives in the block spanned by `|111>` and the W state:
//! `|G> = a1|111> + a2|W>` with `a2 < 0` throughout the `j > 0, b > 0`
//! region.

use crate::linalg::{ComplexMatrix, HERMITIAN_TOL};
use crate::model::{self, ModelParams};
use crate::state::StateVector;
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("closed forms cover exactly 3 qubits, got n = {n}")]
    WrongSize { n: usize },
    #[error("ground-state closed form requires j > 0 and b > 0, got j = {j}, b = {b}")]
    OutOfRegion { j: f64, b: f64 },
}

pub type Result<T> = std::result::Result<T, SpectrumError>;

/// The eight closed-form energies; `levels[4] == levels[5]` and
/// `levels[6] == levels[7]` exactly because the formulas coincide.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectrum3 {
    pub levels: [f64; 8],
}

impl Spectrum3 {
    pub fn sorted(&self) -> [f64; 8] {
        let mut s = self.levels;
        s.sort_by(|a, b| a.partial_cmp(b).unwrap());
        s
    }
}

/// Ground-state amplitudes in the `(|111>, |W>)` block; `a1^2 + a2^2 = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroundAmplitudes {
    pub a1: f64,
    pub a2: f64,
}

/// The eight translation eigenvectors: `states[0] = |000>`, indices 1-3
/// are the one-excitation momentum states (index 3 is the W state),
/// indices 4-6 their two-excitation mirrors, `states[7] = |111>`.
#[derive(Debug, Clone)]
pub struct MomentumBasis {
    pub states: [StateVector; 8],
}

/// Invariant-block partition of the Hamiltonian in the momentum basis.
#[derive(Debug, Clone)]
pub struct BlockStructure {
    /// `H` rewritten in the momentum basis, entry `(i, j) = <psi_i|H|psi_j>`.
    pub matrix: ComplexMatrix,
    /// Index sets of the connected blocks, each sorted, ordered by their
    /// smallest member.
    pub blocks: Vec<Vec<usize>>,
    /// Largest coupling magnitude between different blocks; zero up to
    /// rounding for a correct build.
    pub max_off_block: f64,
}

/// Primitive cube root of unity `exp(i 2 pi / 3)` used by the momentum
/// states.
pub fn omega() -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::FRAC_PI_3)
}

fn require_three_qubits(p: &ModelParams) -> Result<()> {
    if p.n() != 3 {
        return Err(SpectrumError::WrongSize { n: p.n() });
    }
    Ok(())
}

/// The eight closed-form eigenvalues of the three-qubit ring.
pub fn eigenvalues(p: &ModelParams) -> Result<Spectrum3> {
    require_three_qubits(p)?;
    let (j, b) = (p.j(), p.b());
    let root_plus = (3.0 * j * j + (j + 2.0 * b) * (j + 2.0 * b)).sqrt();
    let root_minus = (3.0 * j * j + (j - 2.0 * b) * (j - 2.0 * b)).sqrt();
    let pair_lower = b - j;
    let pair_upper = -b - j;
    Ok(Spectrum3 {
        levels: [
            j - b - root_plus,
            j - b + root_plus,
            j + b - root_minus,
            j + b + root_minus,
            pair_lower,
            pair_lower,
            pair_upper,
            pair_upper,
        ],
    })
}

/// Ground-state amplitudes `(a1, a2)` of the `j > 0, b > 0` region, where
/// the lowest level sits in the `(|111>, |W>)` block.
///
/// As `b` grows, `a1 -> 1` and `a2 -> 0` from below, so the ground state
/// tends to `|111>`; as `b -> 0`, `(a1, a2) -> (sqrt(3)/2, -1/2)`.
pub fn ground_amplitudes(p: &ModelParams) -> Result<GroundAmplitudes> {
    require_three_qubits(p)?;
    let (j, b) = (p.j(), p.b());
    if j <= 0.0 || b <= 0.0 {
        return Err(SpectrumError::OutOfRegion { j, b });
    }
    let e0 = eigenvalues(p)?.levels[0];
    let offset = e0 + 3.0 * b;
    let denom = (3.0 * j * j + offset * offset).sqrt();
    Ok(GroundAmplitudes {
        a1: 3.0_f64.sqrt() * j / denom,
        a2: offset / denom,
    })
}

/// The ground state `a1|111> + (a2/sqrt(3)) (|100> + |010> + |001>)`.
pub fn ground_state(p: &ModelParams) -> Result<StateVector> {
    let amps = ground_amplitudes(p)?;
    let w_amp = Complex64::new(amps.a2 / 3.0_f64.sqrt(), 0.0);
    let mut v = vec![Complex64::new(0.0, 0.0); 8];
    v[1] = w_amp;
    v[2] = w_amp;
    v[4] = w_amp;
    v[7] = Complex64::new(amps.a1, 0.0);
    Ok(StateVector::from_unit(v))
}

/// The W state `(|100> + |010> + |001>)/sqrt(3)`.
pub fn w_state() -> StateVector {
    let amp = Complex64::new(1.0 / 3.0_f64.sqrt(), 0.0);
    let mut v = vec![Complex64::new(0.0, 0.0); 8];
    v[1] = amp;
    v[2] = amp;
    v[4] = amp;
    StateVector::from_unit(v)
}

/// One momentum triple `(c0|i0> + c1|i1> + c2|i2>)/sqrt(3)`.
fn momentum_triple(indices: [usize; 3], phases: [Complex64; 3]) -> StateVector {
    let scale = 1.0 / 3.0_f64.sqrt();
    let mut v = vec![Complex64::new(0.0, 0.0); 8];
    for (&idx, &phase) in indices.iter().zip(phases.iter()) {
        v[idx] = phase * scale;
    }
    StateVector::from_unit(v)
}

/// The eight translation eigenvectors of the three-qubit ring.
pub fn momentum_basis() -> MomentumBasis {
    let one = Complex64::new(1.0, 0.0);
    let w1 = omega();
    let w2 = omega() * omega();
    // One-excitation kets |100>, |010>, |001> and their two-excitation
    // mirrors |011>, |101>, |110>.
    let single = [4, 2, 1];
    let double = [3, 5, 6];
    MomentumBasis {
        states: [
            StateVector::basis(8, 0),
            momentum_triple(single, [one, w2, w1]),
            momentum_triple(single, [one, w1, w2]),
            momentum_triple(single, [one, one, one]),
            momentum_triple(double, [one, w2, w1]),
            momentum_triple(double, [one, w1, w2]),
            momentum_triple(double, [one, one, one]),
            StateVector::basis(8, 7),
        ],
    }
}

/// Rewrites `H` in the momentum basis and partitions the indices into
/// invariant blocks by grouping couplings above the Hermitian tolerance.
///
/// For this Hamiltonian the partition is `{0, 6}, {1}, {2}, {3, 7}, {4},
/// {5}`: the symmetric one- and two-excitation states pair with `|111>`
/// and `|000>` respectively, while the four nonzero-momentum states are
/// already eigenvectors.
pub fn block_structure(p: &ModelParams) -> Result<BlockStructure> {
    require_three_qubits(p)?;
    let h = model::hamiltonian(p).expect("n = 3 is always within size limits");
    let basis = momentum_basis();
    let v = ComplexMatrix::from_fn(8, 8, |r, c| basis.states[c].amp(r));
    let matrix = v.adjoint().mul(&h).mul(&v);

    let scale = matrix.fro_norm().max(1.0);
    let coupled = |i: usize, j: usize| matrix[(i, j)].norm() > HERMITIAN_TOL * scale;

    let mut assigned = [usize::MAX; 8];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for start in 0..8 {
        if assigned[start] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        let mut members = vec![start];
        assigned[start] = id;
        let mut frontier = vec![start];
        while let Some(i) = frontier.pop() {
            for (j, slot) in assigned.iter_mut().enumerate() {
                if *slot == usize::MAX && (coupled(i, j) || coupled(j, i)) {
                    *slot = id;
                    members.push(j);
                    frontier.push(j);
                }
            }
        }
        members.sort_unstable();
        blocks.push(members);
    }

    let mut max_off_block: f64 = 0.0;
    for i in 0..8 {
        for j in 0..8 {
            if assigned[i] != assigned[j] {
                max_off_block = max_off_block.max(matrix[(i, j)].norm());
            }
        }
    }
    Ok(BlockStructure {
        matrix,
        blocks,
        max_off_block,
    })
}
