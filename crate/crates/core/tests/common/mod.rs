//! Shared fixtures and independent oracles for the integration tests.
#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use qreach::group_id::{
    analyze_system, random_form_element, standard_orthogonal_form, standard_symplectic_form,
    SystemAnalysis,
};
use qreach::linalg::{random_hermitian, random_unitary, real_diag};
use qreach::{ComplexMatrix, ControlSystem, DensityMatrix, LieBasis, Tolerances};

pub const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// The five-level ladder: `H₀ = diag(−2, −1, 0, 1, 2)`, `H₁` = nearest-neighbour hopping.
pub fn ladder5() -> ControlSystem {
    let h0 = real_diag(&[-2.0, -1.0, 0.0, 1.0, 2.0]);
    let h1 = ComplexMatrix::from_fn(5, 5, |r, c| {
        if r.abs_diff(c) == 1 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    ControlSystem::new(h0, vec![h1]).unwrap()
}

/// Anti-diagonal `(1, −1, 1, −1, 1)` with ones on the anti-diagonal read top to bottom.
pub fn ladder5_form() -> ComplexMatrix {
    ComplexMatrix::from_fn(5, 5, |r, col| {
        if r + col == 4 {
            Complex64::new(if r % 2 == 0 { 1.0 } else { -1.0 }, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

pub fn projector(v: &nalgebra::DVector<Complex64>) -> ComplexMatrix {
    v * v.adjoint()
}

pub fn unit_vector(n: usize, k: usize) -> nalgebra::DVector<Complex64> {
    let mut v = nalgebra::DVector::zeros(n);
    v[k] = c(1.0);
    v
}

pub fn diag_state(w: &[f64]) -> DensityMatrix {
    DensityMatrix::diagonal(w).unwrap()
}

/// Group families used by the property suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Unitary(usize),
    Special(usize),
    Sp(usize),
    SpU1(usize),
    So(usize),
}

impl Family {
    pub fn dim(self) -> usize {
        match self {
            Family::Unitary(n) | Family::Special(n) | Family::So(n) => n,
            Family::Sp(l) | Family::SpU1(l) => 2 * l,
        }
    }

    /// Form of the family in its standard basis, if any.
    pub fn standard_form(self) -> Option<ComplexMatrix> {
        match self {
            Family::Sp(l) | Family::SpU1(l) => Some(standard_symplectic_form(l)),
            Family::So(n) => Some(standard_orthogonal_form(n)),
            _ => None,
        }
    }
}

/// A random control system generating `family`, written in the basis `B`
/// (every Hamiltonian is `B H B†`). Returns the system and `B`.
pub fn random_system<R: Rng + ?Sized>(
    rng: &mut R,
    family: Family,
) -> (ControlSystem, ComplexMatrix) {
    let n = family.dim();
    let b = random_unitary(rng, n);
    let traceless = |h: ComplexMatrix| {
        let t = h.trace() / c(n as f64);
        h - ComplexMatrix::identity(n, n) * t
    };
    let hs: Vec<ComplexMatrix> = match family {
        Family::Unitary(_) => vec![random_hermitian(rng, n), random_hermitian(rng, n)],
        Family::Special(_) => vec![
            traceless(random_hermitian(rng, n)),
            traceless(random_hermitian(rng, n)),
        ],
        Family::Sp(_) | Family::So(_) | Family::SpU1(_) => {
            let j = family.standard_form().unwrap();
            let mut hs: Vec<ComplexMatrix> = (0..2)
                .map(|_| random_form_element(rng, &j) * (-I))
                .collect();
            if let Family::SpU1(_) = family {
                hs[0] += ComplexMatrix::identity(n, n) * c(0.7);
            }
            hs
        }
    };
    let hs: Vec<ComplexMatrix> = hs
        .into_iter()
        .map(|h| hermitize(&(&b * h * b.adjoint())))
        .collect();
    let mut it = hs.into_iter();
    let h0 = it.next().unwrap();
    (ControlSystem::new(h0, it.collect()).unwrap(), b)
}

pub fn hermitize(h: &ComplexMatrix) -> ComplexMatrix {
    (h + h.adjoint()) * c(0.5)
}

pub fn analysis_for(system: &ControlSystem) -> (LieBasis, SystemAnalysis) {
    analyze_system(system, &Tolerances::default()).unwrap()
}

/// A state with weights `w` in a random eigenbasis.
pub fn random_state<R: Rng + ?Sized>(rng: &mut R, w: &[f64]) -> DensityMatrix {
    let v = random_unitary(rng, w.len());
    DensityMatrix::from_eigen(w, &v).unwrap()
}

pub fn random_unit<R: Rng + ?Sized>(rng: &mut R, n: usize) -> nalgebra::DVector<Complex64> {
    let v = nalgebra::DVector::from_fn(n, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let norm = v.norm();
    v / c(norm)
}

/// Completes `first` (orthonormal columns) to a unitary with random extra columns.
pub fn complete_basis<R: Rng + ?Sized>(
    rng: &mut R,
    first: &[nalgebra::DVector<Complex64>],
) -> ComplexMatrix {
    let n = first[0].len();
    let mut cols: Vec<nalgebra::DVector<Complex64>> = Vec::with_capacity(n);
    for v in first
        .iter()
        .cloned()
        .chain(std::iter::repeat_with(|| random_unit(rng, n)))
    {
        if cols.len() == n {
            break;
        }
        let mut w = v;
        for _ in 0..2 {
            for u in &cols {
                let p = u.dotc(&w);
                w -= u * p;
            }
        }
        let norm = w.norm();
        if norm > 1e-6 {
            cols.push(w / c(norm));
        }
    }
    ComplexMatrix::from_columns(&cols)
}

/// The partner `c = conj(J̃a)` of `a`, orthogonalized against `a` (a no-op
/// for antisymmetric forms).
pub fn partner(
    j: &ComplexMatrix,
    a: &nalgebra::DVector<Complex64>,
) -> nalgebra::DVector<Complex64> {
    let mut cv = (j * a).conjugate();
    let p = a.dotc(&cv);
    cv -= a * p;
    let norm = cv.norm();
    cv / c(norm)
}

/// Pair of states with weights `w` that no element preserving `j` relates.
///
/// `ρ₀` places the eigenvalues `w[0]`, `w[1]` on a linked pair `(a, c)`;
/// `ρ₁` places `w[0]` on a random `b` and `w[1]` on a random vector
/// orthogonal to both `b` and its partner `d`.
pub fn linked_pair<R: Rng + ?Sized>(
    rng: &mut R,
    j: &ComplexMatrix,
    w: &[f64],
) -> (DensityMatrix, DensityMatrix) {
    let n = w.len();
    let a = random_unit(rng, n);
    let cv = partner(j, &a);
    let v0 = complete_basis(rng, &[a, cv]);
    let b = random_unit(rng, n);
    let d = partner(j, &b);
    let full = complete_basis(rng, &[b.clone(), d]);
    // columns 2.. of `full` are orthogonal to b and d
    let e = full.column(2).into_owned();
    let v1 = complete_basis(rng, &[b, e]);
    (
        DensityMatrix::from_eigen(w, &v0).unwrap(),
        DensityMatrix::from_eigen(w, &v1).unwrap(),
    )
}

/// Pure-state-like pair for an orthogonal form: `ρ₀` singles out a vector
/// with `a = conj(J̃a)`, `ρ₁` a generic one.
pub fn real_vs_generic<R: Rng + ?Sized>(
    rng: &mut R,
    j: &ComplexMatrix,
    w: &[f64],
) -> (DensityMatrix, DensityMatrix) {
    let n = w.len();
    let v = random_unit(rng, n);
    let a = &v + (j * &v).conjugate();
    let a = &a / c(a.norm());
    let b = random_unit(rng, n);
    let v0 = complete_basis(rng, &[a]);
    let v1 = complete_basis(rng, &[b]);
    (
        DensityMatrix::from_eigen(w, &v0).unwrap(),
        DensityMatrix::from_eigen(w, &v1).unwrap(),
    )
}

/// Form of the family rewritten in basis `b`: `J' = B̄ J B†`.
pub fn conjugated_form(j: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    b.conjugate() * j * b.adjoint()
}

/// Distance between two matrices modulo a global phase.
pub fn phase_distance(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    let ip: Complex64 = b.iter().zip(a.iter()).map(|(x, y)| x.conj() * y).sum();
    let phase = if ip.norm() > 0.0 {
        ip / ip.norm()
    } else {
        c(1.0)
    };
    (a - b * phase).norm()
}

/// Rank of a real matrix by Gaussian elimination with partial pivoting;
/// pivots at or below `tol` (absolute) count as zero.
pub fn gauss_rank(mut m: DMatrix<f64>, tol: f64) -> usize {
    let (rows, cols) = m.shape();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let (pivot, val) =
            (rank..rows)
                .map(|r| (r, m[(r, col)].abs()))
                .fold(
                    (rank, -1.0),
                    |best, cur| if cur.1 > best.1 { cur } else { best },
                );
        if val <= tol {
            continue;
        }
        m.swap_rows(rank, pivot);
        for r in 0..rows {
            if r != rank {
                let f = m[(r, col)] / m[(rank, col)];
                if f != 0.0 {
                    for k in col..cols {
                        let v = m[(rank, k)];
                        m[(r, k)] -= f * v;
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Real coordinates of a 2×2 skew-Hermitian matrix in the basis `iI, iσx, iσy, iσz`.
pub fn su2_coords(x: &ComplexMatrix) -> [f64; 4] {
    // x = i(t I + a σx + b σy + c σz)
    let h = x * (-I);
    let t = (h[(0, 0)] + h[(1, 1)]).re / 2.0;
    let cz = (h[(0, 0)] - h[(1, 1)]).re / 2.0;
    let ax = (h[(0, 1)] + h[(1, 0)]).re / 2.0;
    let by = (h[(1, 0)] - h[(0, 1)]).im / 2.0;
    [t, ax, by, cz]
}

/// Brute-force dimension of the Lie algebra generated by two 2×2
/// skew-Hermitian matrices: rank of the span of all brackets up to depth 3.
pub fn brute_force_dim_n2(x: &ComplexMatrix, y: &ComplexMatrix) -> usize {
    let br = |a: &ComplexMatrix, b: &ComplexMatrix| a * b - b * a;
    let mut words = vec![x.clone(), y.clone()];
    let mut layer = words.clone();
    for _ in 0..3 {
        let mut next = Vec::new();
        for a in &layer {
            for g in [x, y] {
                next.push(br(g, a));
            }
        }
        words.extend(next.iter().cloned());
        layer = next;
    }
    let rows: Vec<[f64; 4]> = words.iter().map(su2_coords).collect();
    let m = DMatrix::from_fn(rows.len(), 4, |r, k| rows[r][k]);
    gauss_rank(m, 1e-9)
}
