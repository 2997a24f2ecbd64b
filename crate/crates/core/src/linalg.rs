//! Dense complex linear algebra sized for Hamiltonians of up to ten qubits.
//!
//! Matrices are row-major [`ComplexMatrix`] values; nothing here is sparse
//! or iterative. The centrepiece is [`eig_hermitian`], a cyclic complex
//! Jacobi eigensolver: for dimensions up to 1024 it is simple, numerically
//! robust, and accurate to near machine precision, which is what the
//! closed-form cross-checks in the rest of the crate rely on.
//! [`sqrt_psd`] and [`propagator`] are spectral functions built on top of
//! it.

use num_complex::Complex64;
use thiserror::Error;

/// Maximum allowed entrywise deviation `|A - A^dagger|` for a matrix to be
/// accepted as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Eigenvalues of a nominally PSD matrix may dip this far below zero from
/// rounding before [`sqrt_psd`] rejects the input; anything in
/// `[PSD_FLOOR, 0)` is clamped to zero.
pub const PSD_FLOOR: f64 = -1e-10;

/// Jacobi sweeps stop once the off-diagonal Frobenius norm drops below
/// this fraction of `max(1, ||A||_F)`.
const JACOBI_THRESHOLD: f64 = 1e-14;

/// Hard cap on Jacobi sweeps; quadratic convergence makes hitting this a
/// reliable sign of a malformed input.
const MAX_SWEEPS: usize = 100;

/// Largest matrix dimension the eigensolver accepts (ten qubits).
pub const MAX_EIG_DIM: usize = 1024;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("matrix is not Hermitian: max |A - A^dagger| entry = {deviation:.3e}")]
    NotHermitian { deviation: f64 },
    #[error("Jacobi eigensolver failed to converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("matrix is not positive semidefinite: min eigenvalue = {min_eigenvalue:.3e}")]
    NotPsd { min_eigenvalue: f64 },
}

pub type Result<T> = std::result::Result<T, LinalgError>;

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix by evaluating `f(row, col)` at every position.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    /// Builds a matrix from row-major real entries.
    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Self {
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry count must match dimensions"
        );
        Self::from_fn(rows, cols, |r, c| {
            Complex64::new(entries[r * cols + c], 0.0)
        })
    }

    /// Builds a matrix from row-major complex entries.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Complex64>) -> Self {
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry count must match dimensions"
        );
        Self {
            rows,
            cols,
            data: entries,
        }
    }

    /// Builds a square diagonal matrix from real diagonal entries.
    pub fn diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Self::from_entries(self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Self::from_entries(self.rows, self.cols, data)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let data = self.data.iter().map(|a| a * factor).collect();
        Self::from_entries(self.rows, self.cols, data)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..other.cols {
                    out[(r, c)] += a * other[(k, c)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len(), "vector length must match columns");
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self[(r, c)] * v[c])
                    .sum::<Complex64>()
            })
            .collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// Largest entry magnitude (max norm).
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn fro_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise deviation from `A = A^dagger`; zero for exactly
    /// Hermitian matrices.
    pub fn hermitian_deviation(&self) -> f64 {
        assert!(self.is_square());
        let mut dev: f64 = 0.0;
        for r in 0..self.rows {
            for c in r..self.cols {
                dev = dev.max((self[(r, c)] - self[(c, r)].conj()).norm());
            }
        }
        dev
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.hermitian_deviation() <= tol
    }

    /// True when `U^dagger U = I` within `tol` in the max norm.
    pub fn is_unitary(&self, tol: f64) -> bool {
        if !self.is_square() {
            return false;
        }
        let gram = self.adjoint().mul(self);
        gram.sub(&Self::identity(self.rows)).max_abs() <= tol
    }

    /// True when the matrix is Hermitian and every eigenvalue is at least
    /// `floor` (typically a small negative slack such as [`PSD_FLOOR`]).
    pub fn is_psd(&self, floor: f64) -> bool {
        match eig_hermitian(self) {
            Ok(eig) => eig.eigenvalues.first().is_none_or(|&min| min >= floor),
            Err(_) => false,
        }
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

/// Kronecker product; output dimensions are the entrywise products.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(a.rows * b.rows, a.cols * b.cols);
    for ar in 0..a.rows {
        for ac in 0..a.cols {
            let f = a[(ar, ac)];
            for br in 0..b.rows {
                for bc in 0..b.cols {
                    out[(ar * b.rows + br, ac * b.cols + bc)] = f * b[(br, bc)];
                }
            }
        }
    }
    out
}

/// Eigendecomposition of a Hermitian matrix: real eigenvalues in ascending
/// order and the matching orthonormal eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

/// Full eigendecomposition of a Hermitian matrix via cyclic complex Jacobi
/// rotations.
///
/// Each rotation annihilates one off-diagonal pair `(p, q)`; a sweep visits
/// every pair once. Convergence is declared when the off-diagonal Frobenius
/// norm falls below `1e-14 * max(1, ||A||_F)`, which the quadratically
/// convergent sweep loop reaches in well under [`MAX_SWEEPS`] for any
/// Hermitian input of supported size.
pub fn eig_hermitian(a: &ComplexMatrix) -> Result<EigenDecomposition> {
    assert!(a.is_square(), "eigendecomposition needs a square matrix");
    assert!(a.rows <= MAX_EIG_DIM, "dimension exceeds supported maximum");
    let deviation = a.hermitian_deviation();
    if deviation > HERMITIAN_TOL {
        return Err(LinalgError::NotHermitian { deviation });
    }

    let n = a.rows;
    let mut m = a.clone();
    let mut v = ComplexMatrix::identity(n);
    let threshold = JACOBI_THRESHOLD * a.fro_norm().max(1.0);

    let off_norm = |m: &ComplexMatrix| -> f64 {
        let mut sum = 0.0;
        for r in 0..n {
            for c in (r + 1)..n {
                sum += 2.0 * m[(r, c)].norm_sqr();
            }
        }
        sum.sqrt()
    };

    let mut converged = off_norm(&m) <= threshold;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
        converged = off_norm(&m) <= threshold;
    }
    if !converged {
        return Err(LinalgError::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.partial_cmp(&m[(j, j)].re).unwrap());
    let eigenvalues = order.iter().map(|&i| m[(i, i)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// One complex Jacobi rotation zeroing the `(p, q)` entry of the Hermitian
/// working matrix `m`, accumulated into `v`.
///
/// Writing `m[p][q] = |beta| e^{i phi}`, the unitary is the real Jacobi
/// rotation for `[[a_pp, |beta|], [|beta|, a_qq]]` preceded by the phase
/// `diag(1, e^{-i phi})` that makes the pivot entry real.
fn rotate(m: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let beta = m[(p, q)];
    let b_abs = beta.norm();
    if b_abs <= f64::MIN_POSITIVE {
        return;
    }
    let phase = beta / b_abs;
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    let tau = (aqq - app) / (2.0 * b_abs);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let sp = s * phase;
    let spc = s * phase.conj();
    let cp = c * phase;
    let cpc = c * phase.conj();

    let n = m.rows;
    // Column update m <- m R with R = [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
    // on the (p, q) plane.
    for r in 0..n {
        let mrp = m[(r, p)];
        let mrq = m[(r, q)];
        m[(r, p)] = c * mrp - spc * mrq;
        m[(r, q)] = s * mrp + cpc * mrq;
    }
    // Row update m <- R^dagger m.
    for col in 0..n {
        let mpc = m[(p, col)];
        let mqc = m[(q, col)];
        m[(p, col)] = c * mpc - sp * mqc;
        m[(q, col)] = s * mpc + cp * mqc;
    }
    // The rotation zeroes the pivot pair exactly in exact arithmetic; clear
    // the rounding residue and keep the diagonal real so later pivots see a
    // clean Hermitian matrix.
    m[(p, q)] = Complex64::new(0.0, 0.0);
    m[(q, p)] = Complex64::new(0.0, 0.0);
    m[(p, p)] = Complex64::new(m[(p, p)].re, 0.0);
    m[(q, q)] = Complex64::new(m[(q, q)].re, 0.0);
    for r in 0..n {
        let vrp = v[(r, p)];
        let vrq = v[(r, q)];
        v[(r, p)] = c * vrp - spc * vrq;
        v[(r, q)] = s * vrp + cpc * vrq;
    }
}

/// Hermitian PSD square root `B` with `B * B = A`.
///
/// Eigenvalues in `[PSD_FLOOR, 0)` are treated as rounding noise and
/// clamped to zero; anything below [`PSD_FLOOR`] is an error. The result is
/// explicitly re-symmetrized so chained spectral calls stay within
/// [`HERMITIAN_TOL`].
pub fn sqrt_psd(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = eig_hermitian(a)?;
    let min_eigenvalue = eig.eigenvalues[0];
    if min_eigenvalue < PSD_FLOOR {
        return Err(LinalgError::NotPsd { min_eigenvalue });
    }
    let n = a.rows();
    let v = &eig.eigenvectors;
    let roots: Vec<f64> = eig.eigenvalues.iter().map(|&l| l.max(0.0).sqrt()).collect();
    let mut out = ComplexMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            let mut sum = Complex64::new(0.0, 0.0);
            for k in 0..n {
                sum += v[(r, k)] * roots[k] * v[(c, k)].conj();
            }
            out[(r, c)] = sum;
        }
    }
    Ok(out.add(&out.adjoint()).scale(Complex64::new(0.5, 0.0)))
}

/// Unitary propagator `exp(-i h t)` of a Hermitian generator, computed
/// spectrally as `V exp(-i lambda t) V^dagger`.
pub fn propagator(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    let eig = eig_hermitian(h)?;
    let n = h.rows();
    let v = &eig.eigenvectors;
    let phases: Vec<Complex64> = eig
        .eigenvalues
        .iter()
        .map(|&l| Complex64::from_polar(1.0, -l * t))
        .collect();
    let mut out = ComplexMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            let mut sum = Complex64::new(0.0, 0.0);
            for k in 0..n {
                sum += v[(r, k)] * phases[k] * v[(c, k)].conj();
            }
            out[(r, c)] = sum;
        }
    }
    Ok(out)
}
