//! Dynamical Lie algebra of a control system.
//!
//! Skew-Hermitian matrices form a real vector space of dimension N² under
//! `⟨A, B⟩ = Re Tr(A†B)`. [`lie_closure`] runs a breadth-first bracket
//! closure in that space, admitting each commutator's component orthogonal
//! to the current basis when it is large enough.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{
    self, check_same_dim, check_square, hermitian_deviation, real_inner, ComplexMatrix, I,
};
use crate::Tolerances;

pub use crate::linalg::commutator;

/// Drift plus control Hamiltonians, `H₀` and `H₁ … H_M` (ħ = 1).
#[derive(Debug, Clone, PartialEq)]
pub struct ControlSystem {
    h0: ComplexMatrix,
    controls: Vec<ComplexMatrix>,
}

impl ControlSystem {
    pub fn new(h0: ComplexMatrix, controls: Vec<ComplexMatrix>) -> Result<Self> {
        Self::with_tolerances(h0, controls, &Tolerances::default())
    }

    pub fn with_tolerances(
        h0: ComplexMatrix,
        controls: Vec<ComplexMatrix>,
        tol: &Tolerances,
    ) -> Result<Self> {
        let n = check_square(&h0)?;
        for h in std::iter::once(&h0).chain(&controls) {
            let m = check_square(h)?;
            if m != n {
                return Err(Error::DimensionMismatch(n, m));
            }
            let dev = hermitian_deviation(h);
            if dev > tol.herm {
                return Err(Error::NotHermitian(dev));
            }
        }
        Ok(Self { h0, controls })
    }

    pub fn dim(&self) -> usize {
        self.h0.nrows()
    }

    pub fn drift(&self) -> &ComplexMatrix {
        &self.h0
    }

    pub fn controls(&self) -> &[ComplexMatrix] {
        &self.controls
    }

    /// `H₀, H₁, …, H_M` in order.
    pub fn hamiltonians(&self) -> impl Iterator<Item = &ComplexMatrix> {
        std::iter::once(&self.h0).chain(self.controls.iter())
    }

    /// The skew-Hermitian generators `iH₀, …, iH_M`.
    pub fn generators(&self) -> Vec<ComplexMatrix> {
        self.hamiltonians().map(|h| h * I).collect()
    }

    /// True when every Hamiltonian has vanishing trace (relative to its norm).
    pub fn all_traceless(&self, tol: &Tolerances) -> bool {
        self.hamiltonians()
            .all(|h| linalg::trace(h).norm() <= tol.herm * h.norm().max(f64::MIN_POSITIVE))
    }
}

/// Orthonormal basis of a real Lie algebra of skew-Hermitian matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct LieBasis {
    pub dim_space: usize,
    pub elements: Vec<ComplexMatrix>,
    pub closed: bool,
}

impl LieBasis {
    /// Real dimension of the algebra.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Coordinates of `x` in the basis and the norm of the orthogonal remainder.
    pub fn project(&self, x: &ComplexMatrix) -> (Vec<f64>, f64) {
        let mut rest = x.clone();
        let mut coords = vec![0.0; self.elements.len()];
        // two passes of modified Gram-Schmidt
        for _ in 0..2 {
            for (k, e) in self.elements.iter().enumerate() {
                let c = real_inner(e, &rest);
                coords[k] += c;
                rest -= e * Complex64::new(c, 0.0);
            }
        }
        let r = rest.norm();
        (coords, r)
    }
}

/// Result of a span membership query.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Membership {
    pub member: bool,
    /// Frobenius norm of the component orthogonal to the span.
    pub residual: f64,
}

/// Tests whether `x` lies in the real span of `basis`.
pub fn membership(basis: &LieBasis, x: &ComplexMatrix, tol: &Tolerances) -> Result<Membership> {
    let n = check_square(x)?;
    if n != basis.dim_space {
        return Err(Error::DimensionMismatch(basis.dim_space, n));
    }
    let (_, residual) = basis.project(x);
    Ok(Membership {
        member: residual <= tol.rank * x.norm(),
        residual,
    })
}

fn check_skew(x: &ComplexMatrix, tol: &Tolerances) -> Result<()> {
    let dev = linalg::skew_hermitian_deviation(x);
    if dev > tol.herm {
        return Err(Error::NotSkewHermitian(dev));
    }
    Ok(())
}

/// Smallest real Lie algebra containing `generators`, as an orthonormal basis.
///
/// Generators are normalized to unit Frobenius norm and admitted in input
/// order; brackets `[Xⱼ, Xᵢ]` are then formed for every `j < i` as `i`
/// sweeps the growing basis, so the result is reproducible.
pub fn lie_closure(generators: &[ComplexMatrix], tol: &Tolerances) -> Result<LieBasis> {
    let first = generators.first().ok_or(Error::NoGenerators)?;
    let n = check_square(first)?;
    for g in generators {
        check_same_dim(first, g)?;
        check_skew(g, tol)?;
    }

    let mut basis = LieBasis {
        dim_space: n,
        elements: Vec::new(),
        closed: false,
    };
    let limit = n * n;
    for g in generators {
        let norm = g.norm();
        if norm > 0.0 {
            admit(&mut basis, &(g / Complex64::new(norm, 0.0)), tol, limit)?;
        }
    }

    let mut i = 0;
    while i < basis.elements.len() {
        for j in 0..i {
            let bracket =
                &basis.elements[j] * &basis.elements[i] - &basis.elements[i] * &basis.elements[j];
            admit(&mut basis, &bracket, tol, limit)?;
        }
        i += 1;
    }
    basis.closed = true;
    Ok(basis)
}

// Candidates come from unit-norm operands, so the scale floor is 1.
fn admit(
    basis: &mut LieBasis,
    candidate: &ComplexMatrix,
    tol: &Tolerances,
    limit: usize,
) -> Result<bool> {
    let scale = candidate.norm().max(1.0);
    let mut rest = candidate.clone();
    for _ in 0..2 {
        for e in &basis.elements {
            let c = real_inner(e, &rest);
            rest -= e * Complex64::new(c, 0.0);
        }
    }
    let r = rest.norm();
    if r <= tol.rank * scale {
        return Ok(false);
    }
    // skew-Hermitian part only, to stop round-off drift
    let mut v = (&rest - rest.adjoint()) * Complex64::new(0.5, 0.0);
    v /= Complex64::new(v.norm(), 0.0);
    basis.elements.push(v);
    if basis.elements.len() > limit {
        return Err(Error::ClosureOverflow {
            size: basis.elements.len(),
            limit,
            dim: basis.dim_space,
        });
    }
    Ok(true)
}

/// Trace-free generators `xₘ = iHₘ − (i/N) Tr(Hₘ) I`.
pub fn traceless_generators(system: &ControlSystem) -> Vec<ComplexMatrix> {
    let n = system.dim();
    let id = ComplexMatrix::identity(n, n);
    system
        .hamiltonians()
        .map(|h| {
            let shift = linalg::trace(h).re / n as f64;
            (h - &id * Complex64::new(shift, 0.0)) * I
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{pauli, real_diag, real_matrix};

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn example4() -> ControlSystem {
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

    #[test]
    fn ladder_system_closes_to_dimension_ten() {
        let basis = lie_closure(&example4().generators(), &tol()).unwrap();
        assert_eq!(basis.len(), 10);
        assert!(basis.closed);
    }

    #[test]
    fn single_generator_is_its_own_closure() {
        let [_, _, sz] = pauli();
        assert_eq!(lie_closure(&[sz * I], &tol()).unwrap().len(), 1);
    }

    #[test]
    fn two_paulis_generate_su2() {
        let [sx, sy, _] = pauli();
        assert_eq!(lie_closure(&[sx * I, sy * I], &tol()).unwrap().len(), 3);
    }

    #[test]
    fn empty_generator_list_rejected() {
        assert_eq!(lie_closure(&[], &tol()), Err(Error::NoGenerators));
    }

    #[test]
    fn hermitian_generator_rejected() {
        let [sx, _, _] = pauli();
        assert!(matches!(
            lie_closure(&[sx], &tol()),
            Err(Error::NotSkewHermitian(_))
        ));
    }

    #[test]
    fn non_hermitian_hamiltonian_rejected() {
        let h = real_matrix(2, &[0.0, 1.0, 0.0, 0.0]);
        assert!(matches!(
            ControlSystem::new(h, vec![]),
            Err(Error::NotHermitian(_))
        ));
    }

    #[test]
    fn mixed_dimensions_rejected() {
        let r = ControlSystem::new(real_diag(&[1.0, 2.0]), vec![real_diag(&[1.0, 2.0, 3.0])]);
        assert_eq!(r, Err(Error::DimensionMismatch(2, 3)));
    }

    #[test]
    fn membership_of_basis_element() {
        let [sx, sy, sz] = pauli();
        let basis = lie_closure(&[&sx * I, &sy * I], &tol()).unwrap();
        let m = membership(&basis, &basis.elements[0], &tol()).unwrap();
        assert!(m.member);
        assert!(m.residual < 1e-14);

        let mixed = (&sx * I + &sy * I) * Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        assert!(membership(&basis, &mixed, &tol()).unwrap().member);

        let only_x = lie_closure(&[&sx * I], &tol()).unwrap();
        let m = membership(&only_x, &(sz * I), &tol()).unwrap();
        assert!(!m.member);
        assert!((m.residual - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn membership_dimension_mismatch() {
        let [sx, _, _] = pauli();
        let basis = lie_closure(&[sx * I], &tol()).unwrap();
        let x = ComplexMatrix::identity(3, 3) * I;
        assert_eq!(
            membership(&basis, &x, &tol()),
            Err(Error::DimensionMismatch(2, 3))
        );
    }

    #[test]
    fn trace_removal() {
        let id = ComplexMatrix::identity(3, 3);
        let sys = ControlSystem::new(id, vec![real_diag(&[2.0, 0.0, -2.0])]).unwrap();
        let xs = traceless_generators(&sys);
        assert_eq!(xs[0].norm(), 0.0);
        assert!((&xs[1] - real_diag(&[2.0, 0.0, -2.0]) * I).norm() < 1e-15);

        let sys = ControlSystem::new(real_diag(&[2.0, 0.0]), vec![]).unwrap();
        let xs = traceless_generators(&sys);
        assert!((&xs[0] - real_diag(&[1.0, -1.0]) * I).norm() < 1e-15);
    }

    #[test]
    fn zero_generator_contributes_nothing() {
        let [sx, _, _] = pauli();
        let z = ComplexMatrix::zeros(2, 2);
        assert_eq!(lie_closure(&[z, sx * I], &tol()).unwrap().len(), 1);
    }
}
