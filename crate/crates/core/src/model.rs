//! Transverse-field Ising ring Hamiltonian and its symmetry operators.
//!
//! `H = J * sum_i sx_i sx_{i+1} + B * sum_i sz_i` with periodic site
//! labels (`n+1 = 1`). Everything is built from explicit Kronecker
//! products, and [`symmetry_report`] measures numerically how well the
//! four exact symmetries hold: conservation of z-parity, translation and
//! reflection invariance, and the sign flip `Sx H(j, b) Sx = H(j, -b)`.

use crate::linalg::{kron, ComplexMatrix};
use num_complex::Complex64;
use thiserror::Error;

/// Largest supported ring; the Hamiltonian is dense and 2^n x 2^n.
pub const MAX_QUBITS: usize = 10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("ring needs at least 3 sites, got {n}")]
    ChainTooShort { n: usize },
    #[error("ring of {n} sites exceeds the supported maximum of {MAX_QUBITS}")]
    DimensionTooLarge { n: usize },
    #[error("exchange constant and field must both be finite")]
    NonFinite,
}

pub type Result<T> = std::result::Result<T, ModelError>;

/// Pauli axis selector for single-site and parity operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// Ring parameters: site count `n >= 3`, exchange constant `j`, and
/// transverse field `b`. Signs of `j` and `b` are unconstrained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    n: usize,
    j: f64,
    b: f64,
}

impl ModelParams {
    pub fn new(n: usize, j: f64, b: f64) -> Result<Self> {
        if n < 3 {
            return Err(ModelError::ChainTooShort { n });
        }
        if !j.is_finite() || !b.is_finite() {
            return Err(ModelError::NonFinite);
        }
        Ok(Self { n, j, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn j(&self) -> f64 {
        self.j
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Same ring with the field sign flipped; used by the fourth symmetry.
    pub fn flipped_field(&self) -> Self {
        Self {
            b: -self.b,
            ..*self
        }
    }
}

/// Entrywise max norms of the symmetry defects; all four are zero in exact
/// arithmetic and must stay below 1e-12 in floating point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetryReport {
    /// Max norm of `[H, Sz]` where `Sz` is the all-site z-parity.
    pub commutator_norm_parity: f64,
    /// Max norm of `[H, T]` for the cyclic right shift `T`.
    pub commutator_norm_translation: f64,
    /// Max norm of `[H, R]` for the site-order reflection `R`.
    pub commutator_norm_reflection: f64,
    /// Max norm of `Sx H(j, b) Sx - H(j, -b)`.
    pub field_flip_norm: f64,
}

/// Single-qubit Pauli matrix along the chosen axis.
pub fn pauli(axis: Axis) -> ComplexMatrix {
    match axis {
        Axis::X => ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]),
        Axis::Y => ComplexMatrix::from_entries(
            2,
            2,
            vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, -1.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(0.0, 0.0),
            ],
        ),
        Axis::Z => ComplexMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, -1.0]),
    }
}

/// Kronecker chain placing Pauli factors at the 1-based `sites` (most
/// significant factor is qubit 1) and identities elsewhere.
fn pauli_string(n: usize, sites: &[(usize, Axis)]) -> ComplexMatrix {
    let mut out = ComplexMatrix::identity(1);
    for site in 1..=n {
        let factor = sites
            .iter()
            .find(|(s, _)| *s == site)
            .map(|&(_, axis)| pauli(axis))
            .unwrap_or_else(|| ComplexMatrix::identity(2));
        out = kron(&out, &factor);
    }
    out
}

/// Pauli operator on one site of an `n`-qubit register, identity elsewhere.
pub fn site_operator(n: usize, site: usize, axis: Axis) -> ComplexMatrix {
    assert!((1..=MAX_QUBITS).contains(&n), "unsupported register size");
    assert!((1..=n).contains(&site), "site index out of range");
    pauli_string(n, &[(site, axis)])
}

/// Ring Hamiltonian `J * sum_i sx_i sx_{i+1} + B * sum_i sz_i`, site
/// `n+1 = 1`; real symmetric by construction.
pub fn hamiltonian(p: &ModelParams) -> Result<ComplexMatrix> {
    if p.n > MAX_QUBITS {
        return Err(ModelError::DimensionTooLarge { n: p.n });
    }
    let dim = 1 << p.n;
    let mut h = ComplexMatrix::zeros(dim, dim);
    let j = Complex64::new(p.j, 0.0);
    let b = Complex64::new(p.b, 0.0);
    for site in 1..=p.n {
        let next = site % p.n + 1;
        let bond = pauli_string(p.n, &[(site, Axis::X), (next, Axis::X)]);
        h = h.add(&bond.scale(j));
        let field = pauli_string(p.n, &[(site, Axis::Z)]);
        h = h.add(&field.scale(b));
    }
    Ok(h)
}

/// All-site parity operator: the n-fold Kronecker power of one Pauli.
pub fn parity_op(n: usize, axis: Axis) -> ComplexMatrix {
    assert!((1..=MAX_QUBITS).contains(&n), "unsupported register size");
    let sites: Vec<(usize, Axis)> = (1..=n).map(|s| (s, axis)).collect();
    pauli_string(n, &sites)
}

/// Cyclic right shift of site labels: `T|m1, m2, ..., mn> =
/// |mn, m1, ..., m(n-1)>`; a permutation matrix with `T^n = I`.
pub fn translation_op(n: usize) -> ComplexMatrix {
    assert!((1..=MAX_QUBITS).contains(&n), "unsupported register size");
    let dim = 1usize << n;
    let mut t = ComplexMatrix::zeros(dim, dim);
    for s in 0..dim {
        let shifted = (s >> 1) | ((s & 1) << (n - 1));
        t[(shifted, s)] = Complex64::new(1.0, 0.0);
    }
    t
}

/// Reflection of site order: the product of swaps `(k, n+1-k)` for
/// `k = 1 .. floor(n/2)`, i.e. bit-string reversal; a permutation
/// involution.
pub fn reflection_op(n: usize) -> ComplexMatrix {
    assert!((1..=MAX_QUBITS).contains(&n), "unsupported register size");
    let dim = 1usize << n;
    let mut r = ComplexMatrix::zeros(dim, dim);
    for s in 0..dim {
        let mut reversed = 0usize;
        for bit in 0..n {
            if s & (1 << bit) != 0 {
                reversed |= 1 << (n - 1 - bit);
            }
        }
        r[(reversed, s)] = Complex64::new(1.0, 0.0);
    }
    r
}

fn commutator_norm(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    a.mul(b).sub(&b.mul(a)).max_abs()
}

/// Measures all four symmetry defects of the Hamiltonian at `p`.
pub fn symmetry_report(p: &ModelParams) -> Result<SymmetryReport> {
    let h = hamiltonian(p)?;
    let parity_z = parity_op(p.n, Axis::Z);
    let translation = translation_op(p.n);
    let reflection = reflection_op(p.n);

    let parity_x = parity_op(p.n, Axis::X);
    let flipped = hamiltonian(&p.flipped_field())?;
    let field_flip_norm = parity_x.mul(&h).mul(&parity_x).sub(&flipped).max_abs();

    Ok(SymmetryReport {
        commutator_norm_parity: commutator_norm(&h, &parity_z),
        commutator_norm_translation: commutator_norm(&h, &translation),
        commutator_norm_reflection: commutator_norm(&h, &reflection),
        field_flip_norm,
    })
}
