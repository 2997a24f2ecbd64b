//! Time evolution of the three-qubit ring from the fully excited string.
//!
//! Starting from `|111>`, translation and parity symmetry confine the
//! motion to the plane spanned by `|111>` and `|W>`. The module offers
//! three views of that fact: the exact 2x2 block
//! ([`subspace_hamiltonian`]), the closed-form Rabi solution
//! ([`evolve_closed`], a two-level rotation with angular frequency
//! `omega = sqrt(3 j^2 + (j + 2b)^2)`), and brute-force full-space
//! propagation ([`evolve_full`]) used as the numeric oracle. Setting
//! `b = -j/2` removes the detuning, making the transfer to `|W>`
//! complete at `t* = pi / (2 sqrt(3) |j|)` ([`w_schedule`]).

use crate::linalg::{self, ComplexMatrix, LinalgError};
use crate::model::{self, ModelError, ModelParams};
use crate::state::StateVector;
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DynamicsError {
    #[error("dynamics are frozen: omega = 0, the initial state is stationary")]
    FrozenDynamics,
    #[error("zero coupling: j = 0 admits no transfer to the W state")]
    ZeroCoupling,
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub type Result<T> = std::result::Result<T, DynamicsError>;

/// Angular frequency and mixing angle of the two-level oscillation.
/// The angle is the full two-argument branch with
/// `cos = (j + 2b) / omega` and `sin = -sqrt(3) j / omega`, so the closed
/// form holds for every sign combination including `j + 2b = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RabiParams {
    pub omega: f64,
    pub mixing_angle: f64,
}

/// Field and time that turn `|111>` into `|W>`: `b = -j/2` and
/// `t_star = pi / (2 sqrt(3) |j|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WSchedule {
    pub b: f64,
    pub t_star: f64,
}

/// Sampled two-level evolution; `w_fidelity[i] = |amp_w[i]|^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionTrace {
    pub times: Vec<f64>,
    pub amp111: Vec<Complex64>,
    pub amp_w: Vec<Complex64>,
    pub w_fidelity: Vec<f64>,
}

/// The ring Hamiltonian restricted to basis order `(|111>, |W>)`:
/// `[[-3b, sqrt(3) j], [sqrt(3) j, 2j + b]]`.
pub fn subspace_hamiltonian(j: f64, b: f64) -> ComplexMatrix {
    let coupling = 3.0_f64.sqrt() * j;
    ComplexMatrix::from_real(2, 2, &[-3.0 * b, coupling, coupling, 2.0 * j + b])
}

/// Oscillation frequency and mixing angle; rejects the frozen point
/// `j = 0, b = 0` where the subspace Hamiltonian is a multiple of the
/// identity.
pub fn rabi_params(j: f64, b: f64) -> Result<RabiParams> {
    let detuning = j + 2.0 * b;
    let omega = (3.0 * j * j + detuning * detuning).sqrt();
    if omega == 0.0 {
        return Err(DynamicsError::FrozenDynamics);
    }
    Ok(RabiParams {
        omega,
        mixing_angle: (-3.0_f64.sqrt() * j).atan2(detuning),
    })
}

/// Amplitudes `(c111, cW)` of the state evolved from `|111>` for time
/// `t`, up to the global phase `exp(-i (j - b) t)`:
/// `c111 = cos(omega t) + i cos(mix) sin(omega t)`,
/// `cW = i sin(mix) sin(omega t)`.
pub fn evolve_closed(j: f64, b: f64, t: f64) -> Result<(Complex64, Complex64)> {
    let params = rabi_params(j, b)?;
    // cos/sin of the mixing angle taken from the defining components, not
    // from trig of the stored angle, to avoid an avoidable rounding trip.
    let cos_mix = (j + 2.0 * b) / params.omega;
    let sin_mix = -3.0_f64.sqrt() * j / params.omega;
    let (sin_wt, cos_wt) = (params.omega * t).sin_cos();
    Ok((
        Complex64::new(cos_wt, cos_mix * sin_wt),
        Complex64::new(0.0, sin_mix * sin_wt),
    ))
}

/// Full-space propagation `exp(-i H t) |state0>`; the numeric oracle for
/// [`evolve_closed`].
pub fn evolve_full(p: &ModelParams, state0: &StateVector, t: f64) -> Result<StateVector> {
    let h = model::hamiltonian(p)?;
    assert_eq!(state0.dim(), h.rows(), "state dimension must match 2^n");
    let u = linalg::propagator(&h, t)?;
    Ok(StateVector::from_unit(u.mul_vec(state0.amps())))
}

/// Resonance schedule: the field `b = -j/2` cancels the detuning and the
/// transfer to `|W>` completes at `t_star = pi / (2 sqrt(3) |j|)`.
pub fn w_schedule(j: f64) -> Result<WSchedule> {
    if j == 0.0 {
        return Err(DynamicsError::ZeroCoupling);
    }
    Ok(WSchedule {
        b: -j / 2.0,
        t_star: std::f64::consts::PI / (2.0 * 3.0_f64.sqrt() * j.abs()),
    })
}

/// Samples [`evolve_closed`] on the uniform grid `0 ..= t_max` with
/// `steps` points.
pub fn trace_evolution(j: f64, b: f64, t_max: f64, steps: usize) -> Result<EvolutionTrace> {
    assert!(steps >= 2, "trace needs at least two samples");
    assert!(t_max > 0.0, "t_max must be positive");
    let mut trace = EvolutionTrace {
        times: Vec::with_capacity(steps),
        amp111: Vec::with_capacity(steps),
        amp_w: Vec::with_capacity(steps),
        w_fidelity: Vec::with_capacity(steps),
    };
    for i in 0..steps {
        let t = t_max * i as f64 / (steps - 1) as f64;
        let (c111, c_w) = evolve_closed(j, b, t)?;
        trace.times.push(t);
        trace.amp111.push(c111);
        trace.amp_w.push(c_w);
        trace.w_fidelity.push(c_w.norm_sqr());
    }
    Ok(trace)
}
