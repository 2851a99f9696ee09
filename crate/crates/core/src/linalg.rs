//! Dense complex linear algebra shared by the analysis modules.
//!
//! Everything here works on `nalgebra` dynamic matrices. Vectorization is
//! column-major throughout, so `vec(A X B) = (Bᵀ ⊗ A) vec(X)`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// Dense N×N complex matrix.
pub type ComplexMatrix = DMatrix<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// Builds a complex matrix from row-major real entries.
pub fn real_matrix(n: usize, rows: &[f64]) -> ComplexMatrix {
    assert_eq!(rows.len(), n * n, "expected {} entries", n * n);
    ComplexMatrix::from_fn(n, n, |r, c| Complex64::new(rows[r * n + c], 0.0))
}

/// Diagonal complex matrix with real diagonal.
pub fn real_diag(diag: &[f64]) -> ComplexMatrix {
    let n = diag.len();
    ComplexMatrix::from_fn(n, n, |r, c| {
        if r == c {
            Complex64::new(diag[r], 0.0)
        } else {
            ZERO
        }
    })
}

/// The 2×2 Pauli matrices (σx, σy, σz).
pub fn pauli() -> [ComplexMatrix; 3] {
    let sx = real_matrix(2, &[0.0, 1.0, 1.0, 0.0]);
    let sy = ComplexMatrix::from_row_slice(2, 2, &[ZERO, -I, I, ZERO]);
    let sz = real_diag(&[1.0, -1.0]);
    [sx, sy, sz]
}

pub fn frobenius(m: &ComplexMatrix) -> f64 {
    m.norm()
}

pub(crate) fn check_square(m: &ComplexMatrix) -> Result<usize> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare(m.nrows(), m.ncols()));
    }
    if m.nrows() == 0 {
        return Err(Error::Empty);
    }
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(m.nrows())
}

pub(crate) fn check_same_dim(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<usize> {
    let n = check_square(a)?;
    let m = check_square(b)?;
    if n != m {
        return Err(Error::DimensionMismatch(n, m));
    }
    Ok(n)
}

/// ‖M − M†‖_F / ‖M‖_F, zero for the zero matrix.
pub fn hermitian_deviation(m: &ComplexMatrix) -> f64 {
    relative(&(m - m.adjoint()), m)
}

/// ‖M + M†‖_F / ‖M‖_F, zero for the zero matrix.
pub fn skew_hermitian_deviation(m: &ComplexMatrix) -> f64 {
    relative(&(m + m.adjoint()), m)
}

fn relative(diff: &ComplexMatrix, scale: &ComplexMatrix) -> f64 {
    let s = scale.norm();
    if s == 0.0 {
        0.0
    } else {
        diff.norm() / s
    }
}

/// Matrix trace.
pub fn trace(m: &ComplexMatrix) -> Complex64 {
    m.diagonal().iter().copied().sum()
}

/// The bracket `ab − ba`.
pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    check_same_dim(a, b)?;
    Ok(a * b - b * a)
}

/// Real Hilbert–Schmidt product `Re Tr(A†B)`.
pub fn real_inner(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| x.re * y.re + x.im * y.im)
        .sum()
}

/// Eigen-decomposition of a Hermitian matrix, eigenvalues descending.
pub fn hermitian_eigen(m: &ComplexMatrix) -> (Vec<f64>, ComplexMatrix) {
    let h = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = h.symmetric_eigen();
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors =
        ComplexMatrix::from_fn(m.nrows(), m.ncols(), |r, c| eig.eigenvectors[(r, order[c])]);
    (values, vectors)
}

/// Eigenvalues of a normal matrix.
///
/// The Hermitian and anti-Hermitian parts of a normal matrix commute, so a
/// generic real combination of them shares the eigenvectors; each eigenvalue
/// is then read back as a Rayleigh quotient.
pub fn normal_eigenvalues(m: &ComplexMatrix) -> Vec<Complex64> {
    let half = Complex64::new(0.5, 0.0);
    let herm = (m + m.adjoint()) * half;
    let anti = (m - m.adjoint()) * Complex64::new(0.0, -0.5);
    let mix = herm + anti * Complex64::new(std::f64::consts::FRAC_1_SQRT_2 * 0.913, 0.0);
    let (_, vectors) = hermitian_eigen(&mix);
    (0..m.ncols())
        .map(|k| {
            let v = vectors.column(k);
            (v.adjoint() * m * v)[(0, 0)]
        })
        .collect()
}

/// Column-major vectorization.
pub fn vectorize(m: &ComplexMatrix) -> DVector<Complex64> {
    DVector::from_iterator(m.len(), m.iter().copied())
}

/// Inverse of [`vectorize`].
pub fn unvectorize(v: &DVector<Complex64>, n: usize) -> ComplexMatrix {
    ComplexMatrix::from_iterator(n, n, v.iter().copied())
}

/// Real form of a complex-linear map acting on `[Re z; Im z]`.
pub(crate) fn realify_linear(m: &ComplexMatrix) -> DMatrix<f64> {
    let (r, c) = m.shape();
    DMatrix::from_fn(2 * r, 2 * c, |i, j| {
        let z = m[(i % r, j % c)];
        match (i < r, j < c) {
            (true, true) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
            (false, false) => z.re,
        }
    })
}

/// Real form of the conjugate-linear map `z ↦ K z̄` acting on `[Re z; Im z]`.
pub(crate) fn realify_antilinear(k: &ComplexMatrix) -> DMatrix<f64> {
    let (r, c) = k.shape();
    DMatrix::from_fn(2 * r, 2 * c, |i, j| {
        let z = k[(i % r, j % c)];
        match (i < r, j < c) {
            (true, true) => z.re,
            (true, false) => z.im,
            (false, true) => z.im,
            (false, false) => -z.re,
        }
    })
}

/// Null space of a linear system, decided by a relative singular-value cutoff.
#[derive(Debug, Clone)]
pub struct NullSpace<T: nalgebra::Scalar> {
    /// Orthonormal basis of the numerical null space.
    pub basis: Vec<DVector<T>>,
    /// All singular values, descending, one per unknown.
    pub singular_values: Vec<f64>,
    /// Absolute cutoff below which a singular value counts as zero.
    pub cutoff: f64,
}

impl<T: nalgebra::Scalar> NullSpace<T> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Smallest retained singular value divided by the largest; `None` when
    /// the whole space is null or nothing is retained.
    pub fn smallest_retained_ratio(&self) -> Option<f64> {
        let largest = *self.singular_values.first()?;
        if largest == 0.0 {
            return None;
        }
        self.singular_values
            .iter()
            .copied()
            .rfind(|&s| s > self.cutoff)
            .map(|s| s / largest)
    }

    /// The singular value closest to the cutoff on a log scale.
    pub fn nearest_to_cutoff(&self) -> Option<f64> {
        if self.cutoff <= 0.0 {
            return None;
        }
        self.singular_values
            .iter()
            .copied()
            .filter(|&s| s > 0.0)
            .min_by(|a, b| {
                let da = (a / self.cutoff).ln().abs();
                let db = (b / self.cutoff).ln().abs();
                da.total_cmp(&db)
            })
    }
}

/// Absolute floor used when a system matrix is entirely zero.
const ZERO_SYSTEM: f64 = 1e-14;

/// Complex null space of `a` with cutoff `rel_cutoff × σ_max`.
pub fn complex_null_space(a: &DMatrix<Complex64>, rel_cutoff: f64) -> Result<NullSpace<Complex64>> {
    let cols = a.ncols();
    let padded = pad_rows(a, Complex64::new(0.0, 0.0));
    let svd = padded.svd(false, true);
    let v_t = svd
        .v_t
        .ok_or_else(|| Error::Numerical("SVD did not return right singular vectors".into()))?;
    let mut order: Vec<usize> = (0..cols).collect();
    order.sort_by(|&x, &y| svd.singular_values[y].total_cmp(&svd.singular_values[x]));
    let singular_values: Vec<f64> = order.iter().map(|&k| svd.singular_values[k]).collect();
    let cutoff = cutoff_for(&singular_values, rel_cutoff);
    let basis = order
        .iter()
        .filter(|&&k| svd.singular_values[k] <= cutoff)
        .map(|&k| v_t.row(k).adjoint())
        .collect();
    Ok(NullSpace {
        basis,
        singular_values,
        cutoff,
    })
}

/// Real null space of `a` with cutoff `rel_cutoff × σ_max`.
pub fn real_null_space(a: &DMatrix<f64>, rel_cutoff: f64) -> Result<NullSpace<f64>> {
    let cols = a.ncols();
    let padded = pad_rows(a, 0.0);
    let svd = padded.svd(false, true);
    let v_t = svd
        .v_t
        .ok_or_else(|| Error::Numerical("SVD did not return right singular vectors".into()))?;
    let mut order: Vec<usize> = (0..cols).collect();
    order.sort_by(|&x, &y| svd.singular_values[y].total_cmp(&svd.singular_values[x]));
    let singular_values: Vec<f64> = order.iter().map(|&k| svd.singular_values[k]).collect();
    let cutoff = cutoff_for(&singular_values, rel_cutoff);
    let basis = order
        .iter()
        .filter(|&&k| svd.singular_values[k] <= cutoff)
        .map(|&k| v_t.row(k).transpose())
        .collect();
    Ok(NullSpace {
        basis,
        singular_values,
        cutoff,
    })
}

fn cutoff_for(sorted_desc: &[f64], rel_cutoff: f64) -> f64 {
    let largest = sorted_desc.first().copied().unwrap_or(0.0);
    if largest <= ZERO_SYSTEM {
        ZERO_SYSTEM
    } else {
        rel_cutoff * largest
    }
}

// SVD only yields min(rows, cols) right vectors, so wide systems get zero rows.
fn pad_rows<T: nalgebra::Scalar + Copy>(a: &DMatrix<T>, zero: T) -> DMatrix<T> {
    if a.nrows() >= a.ncols() {
        return a.clone();
    }
    DMatrix::from_fn(a.ncols(), a.ncols(), |r, c| {
        if r < a.nrows() {
            a[(r, c)]
        } else {
            zero
        }
    })
}

/// Closest unitary in Frobenius norm (polar factor), or `None` when the
/// input is numerically singular.
pub fn nearest_unitary(m: &ComplexMatrix) -> Option<ComplexMatrix> {
    let svd = m.clone().svd(true, true);
    let max = svd.singular_values.max();
    let min = svd.singular_values.min();
    if max.is_nan() || max <= 0.0 || min < 1e-10 * max {
        return None;
    }
    Some(svd.u? * svd.v_t?)
}

/// Haar-random unitary via QR of a complex Gaussian matrix.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    let g = random_gaussian(rng, n);
    let qr = g.qr();
    let (q, r) = qr.unpack();
    let phases = ComplexMatrix::from_fn(n, n, |i, j| {
        if i == j {
            let d = r[(i, i)];
            if d.norm() > 0.0 {
                d / d.norm()
            } else {
                ONE
            }
        } else {
            ZERO
        }
    });
    q * phases
}

/// Complex Gaussian matrix with independent standard normal parts.
pub fn random_gaussian<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    })
}

/// Random Hermitian matrix (GUE-like).
pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    let g = random_gaussian(rng, n);
    (&g + g.adjoint()) * Complex64::new(0.5, 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn pauli_commutator() {
        let [sx, sy, sz] = pauli();
        let c = commutator(&(&sx * I), &(&sy * I)).unwrap();
        let expected = &sz * Complex64::new(0.0, -2.0);
        assert!((c - expected).norm() < 1e-14);
    }

    #[test]
    fn commutator_dimension_mismatch() {
        let a = ComplexMatrix::identity(2, 2);
        let b = ComplexMatrix::identity(3, 3);
        assert_eq!(commutator(&a, &b), Err(Error::DimensionMismatch(2, 3)));
    }

    #[test]
    fn commutator_of_diagonals_vanishes() {
        let c = commutator(&real_diag(&[1.0, 2.0, 3.0]), &real_diag(&[-1.0, 0.5, 7.0])).unwrap();
        assert_eq!(c.norm(), 0.0);
    }

    #[test]
    fn vectorization_matches_kronecker_rule() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_gaussian(&mut rng, 3);
        let x = random_gaussian(&mut rng, 3);
        let b = random_gaussian(&mut rng, 3);
        let lhs = vectorize(&(&a * &x * &b));
        let rhs = b.transpose().kronecker(&a) * vectorize(&x);
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn realified_maps_agree_with_complex_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let m = random_gaussian(&mut rng, 3);
        let z = DVector::from_fn(3, |i, _| Complex64::new(i as f64 + 0.5, 1.0 - i as f64));
        let as_real = |v: &DVector<Complex64>| {
            DVector::from_fn(2 * v.len(), |i, _| {
                if i < v.len() {
                    v[i].re
                } else {
                    v[i - v.len()].im
                }
            })
        };
        let lin = realify_linear(&m) * as_real(&z);
        assert!((lin - as_real(&(&m * &z))).norm() < 1e-12);
        let anti = realify_antilinear(&m) * as_real(&z);
        assert!((anti - as_real(&(&m * z.conjugate()))).norm() < 1e-12);
    }

    #[test]
    fn null_space_of_rank_deficient_system() {
        // rows span e1, e2 of C^3
        let a = ComplexMatrix::from_fn(2, 3, |r, c| if r == c { ONE } else { ZERO });
        let ns = complex_null_space(&a, 1e-9).unwrap();
        assert_eq!(ns.dim(), 1);
        let v = &ns.basis[0];
        assert!((v[2].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_system_is_all_null() {
        let a = DMatrix::<f64>::zeros(4, 3);
        assert_eq!(real_null_space(&a, 1e-9).unwrap().dim(), 3);
    }

    #[test]
    fn random_unitary_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let u = random_unitary(&mut rng, 5);
        assert!((u.adjoint() * &u - ComplexMatrix::identity(5, 5)).norm() < 1e-12);
    }

    #[test]
    fn polar_projection_of_scaled_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let u = random_unitary(&mut rng, 4);
        let p = nearest_unitary(&(&u * Complex64::new(3.0, 0.0))).unwrap();
        assert!((p - u).norm() < 1e-12);
        assert!(nearest_unitary(&ComplexMatrix::zeros(3, 3)).is_none());
    }

    #[test]
    fn normal_eigenvalues_of_rotation() {
        let j = real_matrix(2, &[0.0, 1.0, -1.0, 0.0]);
        let mut ev = normal_eigenvalues(&j);
        ev.sort_by(|a, b| a.im.total_cmp(&b.im));
        assert!((ev[0] - Complex64::new(0.0, -1.0)).norm() < 1e-12);
        assert!((ev[1] - Complex64::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn hermitian_eigen_sorted_descending() {
        let (vals, vecs) = hermitian_eigen(&real_diag(&[0.1, 0.7, 0.2]));
        assert_eq!(vals.len(), 3);
        assert!((vals[0] - 0.7).abs() < 1e-14 && (vals[2] - 0.1).abs() < 1e-14);
        assert!((vecs[(1, 0)].norm() - 1.0).abs() < 1e-12);
    }
}
