//! Entanglement and spin squeezing analytics.
//!
//! Two routes to the pairwise concurrence are kept deliberately separate:
//! the closed-form X-state shortcut ([`x_elements`] + [`concurrence_x`])
//! and the generic Wootters procedure ([`concurrence_wootters`]) built
//! from Hermitian eigensolves only. Their agreement on reduced ring states
//! is one of the crate's main cross-checks. The same pattern holds for
//! squeezing: [`squeezing_parity`] evaluates the collective-operator
//! definition, [`squeezing_mixing`] the closed form.
//!
//! The mixing family `cos(theta)|111> + sin(theta) e^{i phi}|W>` covers
//! every ground state of the ring (and more); both concurrence and
//! squeezing depend on `theta` alone, which is what makes the relation
//! `C = |xi^2 - 1| / 2` exact.

use crate::linalg::{self, kron, ComplexMatrix, LinalgError, HERMITIAN_TOL, PSD_FLOOR};
use crate::model::{self, Axis, ModelParams};
use crate::spectrum3::{self, SpectrumError};
use crate::state::StateVector;
use num_complex::Complex64;
use thiserror::Error;

/// Trace of a density matrix may deviate from one by at most this much.
pub const TRACE_TOL: f64 = 1e-12;

/// Entries outside the X pattern (diagonal plus anti-diagonal) must stay
/// below this magnitude for the X-state shortcut to apply.
pub const X_FORM_TOL: f64 = 1e-10;

/// A state has definite z-parity when `|<Sz>|` is within this tolerance
/// of one.
pub const PARITY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EntangleError {
    #[error("density matrix is not Hermitian: max |A - A^dagger| entry = {deviation:.3e}")]
    NotHermitian { deviation: f64 },
    #[error("density matrix trace deviates from one by {deviation:.3e}")]
    BadTrace { deviation: f64 },
    #[error("density matrix has eigenvalue {min_eigenvalue:.3e} below the PSD floor")]
    NotPositive { min_eigenvalue: f64 },
    #[error("invalid qubit subset: {detail}")]
    BadSubset { detail: String },
    #[error("matrix is not in X form: off-pattern entry of magnitude {max_violation:.3e}")]
    NotXForm { max_violation: f64 },
    #[error("middle diagonal entries differ by {difference:.3e}, too asymmetric for X form")]
    NotSymmetricMiddle { difference: f64 },
    #[error("state has no definite z-parity: <Sz> = {expectation:.6}")]
    NoDefiniteParity { expectation: f64 },
    #[error("expected dimension {expected}, got {got}")]
    WrongSize { expected: usize, got: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

pub type Result<T> = std::result::Result<T, EntangleError>;

/// Hermitian, unit-trace, PSD matrix. Construction through
/// [`DensityMatrix::new`] enforces all three properties numerically.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace, and positivity (eigenvalues may
    /// dip to the rounding floor of -1e-10) before wrapping the matrix.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        assert!(matrix.is_square(), "density matrix must be square");
        let deviation = matrix.hermitian_deviation();
        if deviation > HERMITIAN_TOL {
            return Err(EntangleError::NotHermitian { deviation });
        }
        let trace_deviation = (matrix.trace() - Complex64::new(1.0, 0.0)).norm();
        if trace_deviation > TRACE_TOL {
            return Err(EntangleError::BadTrace {
                deviation: trace_deviation,
            });
        }
        let eig = linalg::eig_hermitian(&matrix)?;
        let min_eigenvalue = eig.eigenvalues[0];
        if min_eigenvalue < PSD_FLOOR {
            return Err(EntangleError::NotPositive { min_eigenvalue });
        }
        Ok(Self { matrix })
    }

    /// Projector `|psi><psi|` of a unit-norm state; valid by construction,
    /// so no numeric validation is run.
    pub fn from_pure(state: &StateVector) -> Self {
        let dim = state.dim();
        let matrix = ComplexMatrix::from_fn(dim, dim, |r, c| state.amp(r) * state.amp(c).conj());
        Self { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[(row, col)]
    }
}

/// The five independent entries of an X-form two-qubit density matrix in
/// the basis `{|00>, |01>, |10>, |11>}`: diagonal `(u, w, w, v)`,
/// anti-diagonal coherences `y = <00|rho|11>` and `z = <01|rho|10>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XStateElements {
    pub u: f64,
    pub v: f64,
    pub w: f64,
    pub y: Complex64,
    pub z: Complex64,
}

/// Superposition angles of the mixing family
/// `cos(theta)|111> + sin(theta) e^{i phi}|W>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixingAngles {
    pub theta: f64,
    pub phi: f64,
}

impl MixingAngles {
    pub fn new(theta: f64, phi: f64) -> Self {
        Self { theta, phi }
    }

    /// Canonical representative with `theta` in `[0, pi)` and `phi` in
    /// `[0, 2 pi)`; both observables below have period pi in `theta`.
    pub fn normalized(&self) -> Self {
        let pi = std::f64::consts::PI;
        let theta = self.theta.rem_euclid(pi);
        let phi = self.phi.rem_euclid(2.0 * pi);
        Self { theta, phi }
    }
}

/// Concurrence and squeezing parameter of one state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementReport {
    pub concurrence: f64,
    pub xi_squared: f64,
}

/// Closed-form concurrence and squeezing at one mixing angle together
/// with the residual of the relation `C = |xi^2 - 1| / 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelationCheck {
    pub concurrence: f64,
    pub xi_squared: f64,
    pub residual: f64,
}

/// Reduced density matrix on the kept qubits (1-based, qubit 1 is the most
/// significant); register order is preserved regardless of argument order.
pub fn partial_trace(rho: &DensityMatrix, n: usize, keep: &[usize]) -> Result<DensityMatrix> {
    assert_eq!(
        rho.dim(),
        1usize << n,
        "density matrix dimension must be 2^n"
    );
    if keep.is_empty() {
        return Err(EntangleError::BadSubset {
            detail: "keep set is empty".to_string(),
        });
    }
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    if kept.len() != keep.len() {
        return Err(EntangleError::BadSubset {
            detail: "keep set contains duplicates".to_string(),
        });
    }
    if kept[0] < 1 || kept[kept.len() - 1] > n {
        return Err(EntangleError::BadSubset {
            detail: format!("qubit indices must lie in 1..={n}"),
        });
    }

    // Bit position of 1-based qubit q in a basis index is n - q.
    let kept_pos: Vec<usize> = kept.iter().map(|&q| n - q).collect();
    let traced_pos: Vec<usize> = (1..=n)
        .filter(|q| !kept.contains(q))
        .map(|q| n - q)
        .collect();
    let k = kept_pos.len();
    let env_bits = traced_pos.len();

    let assemble = |sub: usize, env: usize| -> usize {
        let mut idx = 0usize;
        for (i, &pos) in kept_pos.iter().enumerate() {
            if sub & (1 << (k - 1 - i)) != 0 {
                idx |= 1 << pos;
            }
        }
        for (i, &pos) in traced_pos.iter().enumerate() {
            if env & (1 << (env_bits - 1 - i)) != 0 {
                idx |= 1 << pos;
            }
        }
        idx
    };

    let dim_out = 1usize << k;
    let reduced = ComplexMatrix::from_fn(dim_out, dim_out, |a, b| {
        (0..1usize << env_bits)
            .map(|e| rho.entry(assemble(a, e), assemble(b, e)))
            .sum()
    });
    DensityMatrix::new(reduced)
}

/// Extracts the X-state elements of a 4x4 density matrix, rejecting
/// matrices with off-pattern entries above [`X_FORM_TOL`] or asymmetric
/// middle diagonals.
pub fn x_elements(rho2: &DensityMatrix) -> Result<XStateElements> {
    if rho2.dim() != 4 {
        return Err(EntangleError::WrongSize {
            expected: 4,
            got: rho2.dim(),
        });
    }
    let off_pattern = [
        (0, 1),
        (0, 2),
        (1, 0),
        (2, 0),
        (1, 3),
        (3, 1),
        (2, 3),
        (3, 2),
    ];
    let max_violation = off_pattern
        .iter()
        .map(|&(r, c)| rho2.entry(r, c).norm())
        .fold(0.0, f64::max);
    if max_violation > X_FORM_TOL {
        return Err(EntangleError::NotXForm { max_violation });
    }
    let difference = (rho2.entry(1, 1).re - rho2.entry(2, 2).re).abs();
    if difference > X_FORM_TOL {
        return Err(EntangleError::NotSymmetricMiddle { difference });
    }
    // Diagonal entries of a PSD matrix are nonnegative up to rounding.
    Ok(XStateElements {
        u: rho2.entry(0, 0).re.max(0.0),
        v: rho2.entry(3, 3).re.max(0.0),
        w: (0.5 * (rho2.entry(1, 1).re + rho2.entry(2, 2).re)).max(0.0),
        y: rho2.entry(0, 3),
        z: rho2.entry(1, 2),
    })
}

/// X-state concurrence `2 max(0, |z| - sqrt(u v), |y| - w)`, clamped to
/// `[0, 1]`.
pub fn concurrence_x(e: &XStateElements) -> f64 {
    let candidate = (e.z.norm() - (e.u * e.v).sqrt()).max(e.y.norm() - e.w);
    (2.0 * candidate.max(0.0)).clamp(0.0, 1.0)
}

/// Generic two-qubit concurrence from Hermitian eigensolves only.
///
/// The Wootters lambdas are the square roots of the eigenvalues of the
/// Hermitian chain `sqrt(rho) * rho_tilde * sqrt(rho)`. That chain
/// factors as `R R^dagger` with `R = sqrt(rho) (sy x sy) conj(sqrt(rho))`,
/// so the lambdas are the singular values of `R`; reading them off the
/// Hermitian block embedding `[[0, R], [R^dagger, 0]]` (eigenvalues
/// `+/- lambda_i`) sidesteps the squaring that would turn formation-time
/// rounding of an exactly-zero lambda into a sqrt-amplified error.
pub fn concurrence_wootters(rho2: &DensityMatrix) -> Result<f64> {
    if rho2.dim() != 4 {
        return Err(EntangleError::WrongSize {
            expected: 4,
            got: rho2.dim(),
        });
    }
    let yy = kron(&model::pauli(Axis::Y), &model::pauli(Axis::Y));
    let root = linalg::sqrt_psd(rho2.matrix())?;
    let root_conj = ComplexMatrix::from_fn(4, 4, |r, c| root[(r, c)].conj());
    let spin_flipped = root.mul(&yy).mul(&root_conj);

    let embedding = ComplexMatrix::from_fn(8, 8, |r, c| {
        if r < 4 && c >= 4 {
            spin_flipped[(r, c - 4)]
        } else if r >= 4 && c < 4 {
            spin_flipped[(c, r - 4)].conj()
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let eig = linalg::eig_hermitian(&embedding)?;
    let lambda = |rank: usize| eig.eigenvalues[7 - rank].max(0.0);
    Ok((lambda(0) - lambda(1) - lambda(2) - lambda(3)).clamp(0.0, 1.0))
}

/// The mixing state `cos(theta)|111> + sin(theta) e^{i phi}|W>`.
pub fn mixing_state(m: &MixingAngles) -> StateVector {
    let a1 = Complex64::new(m.theta.cos(), 0.0);
    let a2 = Complex64::from_polar(m.theta.sin(), m.phi);
    let w_amp = a2 / Complex64::new(3.0_f64.sqrt(), 0.0);
    let mut v = vec![Complex64::new(0.0, 0.0); 8];
    v[1] = w_amp;
    v[2] = w_amp;
    v[4] = w_amp;
    v[7] = a1;
    StateVector::from_unit(v)
}

fn concurrence_from_amplitudes(a1_abs: f64, a2_abs: f64) -> f64 {
    let value = 2.0 * a2_abs / 3.0 * (a2_abs - 3.0_f64.sqrt() * a1_abs).abs();
    value.clamp(0.0, 1.0)
}

fn squeezing_from_amplitudes(a1_abs: f64, a2_abs: f64) -> f64 {
    1.0 + 4.0 / 3.0 * a2_abs * (a2_abs - 3.0_f64.sqrt() * a1_abs)
}

/// Closed-form concurrence of the mixing family; depends on `theta` only.
pub fn concurrence_mixing(m: &MixingAngles) -> f64 {
    concurrence_from_amplitudes(m.theta.cos().abs(), m.theta.sin().abs())
}

/// Closed-form squeezing parameter of the mixing family; depends on
/// `theta` only, with period pi.
pub fn squeezing_mixing(m: &MixingAngles) -> f64 {
    squeezing_from_amplitudes(m.theta.cos().abs(), m.theta.sin().abs())
}

/// Squeezing parameter `5/2 - (2/3)(<Sz^2> + |<S_-^2>|)` evaluated with
/// collective spin operators; valid for definite-z-parity states, which
/// the function enforces.
pub fn squeezing_parity(state: &StateVector) -> Result<f64> {
    if state.dim() != 8 {
        return Err(EntangleError::WrongSize {
            expected: 8,
            got: state.dim(),
        });
    }
    let expect = |op: &ComplexMatrix| -> Complex64 {
        state
            .amps()
            .iter()
            .zip(op.mul_vec(state.amps()))
            .map(|(a, b)| a.conj() * b)
            .sum()
    };

    let parity = expect(&model::parity_op(3, Axis::Z)).re;
    if (parity.abs() - 1.0).abs() > PARITY_TOL {
        return Err(EntangleError::NoDefiniteParity {
            expectation: parity,
        });
    }

    let half = Complex64::new(0.5, 0.0);
    let collective = |axis: Axis| -> ComplexMatrix {
        model::site_operator(3, 1, axis)
            .add(&model::site_operator(3, 2, axis))
            .add(&model::site_operator(3, 3, axis))
            .scale(half)
    };
    let sz = collective(Axis::Z);
    let lowering = collective(Axis::X).sub(&collective(Axis::Y).scale(Complex64::new(0.0, 1.0)));

    let sz2 = expect(&sz.mul(&sz)).re;
    let lowering2 = expect(&lowering.mul(&lowering)).norm();
    Ok(2.5 - 2.0 / 3.0 * (sz2 + lowering2))
}

/// Evaluates both closed forms at one mixing angle and the residual of
/// `C = |xi^2 - 1| / 2`, which vanishes identically.
pub fn relation_check(m: &MixingAngles) -> RelationCheck {
    let concurrence = concurrence_mixing(m);
    let xi_squared = squeezing_mixing(m);
    let residual = (concurrence - (xi_squared - 1.0).abs() / 2.0).abs();
    RelationCheck {
        concurrence,
        xi_squared,
        residual,
    }
}

/// Concurrence and squeezing of the ring ground state via the closed
/// forms; in the `j > 0, b > 0` region the ground state always satisfies
/// `xi^2 <= 1` and `xi^2 = 1 - 2C`.
pub fn ground_report(p: &ModelParams) -> Result<EntanglementReport> {
    let amps = spectrum3::ground_amplitudes(p)?;
    let (a1_abs, a2_abs) = (amps.a1.abs(), amps.a2.abs());
    Ok(EntanglementReport {
        concurrence: concurrence_from_amplitudes(a1_abs, a2_abs),
        xi_squared: squeezing_from_amplitudes(a1_abs, a2_abs),
    })
}
