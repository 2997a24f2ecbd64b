//! Unit-norm complex state vectors over the computational basis.
//!
//! Basis indices follow the crate convention: qubit 1 is the most
//! significant bit, so `|m1 m2 m3>` lives at binary index `m1 m2 m3`.

use num_complex::Complex64;

/// How far a nominally unit-norm amplitude vector may drift from norm one
/// before [`StateVector::from_unit`] refuses it. Unitary pipelines stay
/// many orders of magnitude inside this bound.
const UNIT_NORM_SLACK: f64 = 1e-6;

/// Unit-norm complex amplitude vector.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Computational basis state `|index>` in a `dim`-dimensional space.
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index out of range");
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Self { amps }
    }

    /// Wraps amplitudes that are already unit norm (within rounding).
    ///
    /// The amplitudes are stored as given, so norm drift introduced by the
    /// caller stays observable; use [`StateVector::normalized`] to rescale.
    pub fn from_unit(amps: Vec<Complex64>) -> Self {
        let state = Self { amps };
        assert!(
            (state.norm() - 1.0).abs() <= UNIT_NORM_SLACK,
            "amplitudes are not unit norm"
        );
        state
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(amps: Vec<Complex64>) -> Self {
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        assert!(norm > 0.0, "cannot normalize the zero vector");
        let amps = amps.iter().map(|a| a / norm).collect();
        Self { amps }
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amp(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Inner product `<self|other>`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Fidelity `|<self|other>|^2`; phase-insensitive state comparison.
    pub fn fidelity(&self, other: &Self) -> f64 {
        self.inner(other).norm_sqr()
    }
}
