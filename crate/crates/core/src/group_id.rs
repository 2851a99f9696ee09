//! Invariant bilinear forms and dynamical Lie group classification.
//!
//! A group preserving a bilinear form `UᵀJ̃U = J̃` has an algebra satisfying
//! `xᵀJ̃ + J̃x = 0`. Vectorizing, each generator contributes the block
//! `I ⊗ xᵀ + xᵀ ⊗ I`; the joint null space of the stacked blocks holds every
//! invariant form. A unique antisymmetric form means Sp(N/2), a unique
//! symmetric one SO(N).

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie_engine::{lie_closure, traceless_generators, ControlSystem, LieBasis};
use crate::linalg::{
    self, check_same_dim, check_square, complex_null_space, ComplexMatrix, ONE, ZERO,
};
use crate::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormSymmetry {
    Antisymmetric,
    Symmetric,
}

/// The matrix `J̃` preserved by every element of the dynamical group.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantForm {
    /// Unitary, with its largest-magnitude entry real and positive.
    pub j: ComplexMatrix,
    pub symmetry: FormSymmetry,
    /// Complex dimension of the joint null space (always 1 for a returned form).
    pub nullspace_dim: usize,
}

impl InvariantForm {
    /// Wraps a known form without running the null-space search.
    pub fn from_matrix(j: ComplexMatrix, tol: &Tolerances) -> Result<Self> {
        let n = check_square(&j)?;
        let j = normalize_form(j, n, tol)?;
        let symmetry = detect_symmetry(&j, tol)?;
        Ok(Self {
            j,
            symmetry,
            nullspace_dim: 1,
        })
    }

    pub fn dim(&self) -> usize {
        self.j.nrows()
    }

    /// Eigenvalues of the normalized `J̃`.
    pub fn eigenvalues(&self) -> Vec<Complex64> {
        linalg::normal_eigenvalues(&self.j)
    }

    /// `J̃ J̃*`, which is `−I` for symplectic and `+I` for orthogonal forms in
    /// every basis (it transforms by similarity under a change of basis).
    pub fn conjugate_square(&self) -> ComplexMatrix {
        &self.j * self.j.conjugate()
    }

    /// `max ‖xᵀJ̃ + J̃x‖_F` over `xs`.
    pub fn residual(&self, xs: &[ComplexMatrix]) -> f64 {
        xs.iter()
            .map(|x| (x.transpose() * &self.j + &self.j * x).norm())
            .fold(0.0, f64::max)
    }

    /// Whether the raw eigenvalues of `J̃` match those of the standard form
    /// (`±i` each ℓ times, or `±1` with multiplicities ℓ and ℓ or ℓ+1 and ℓ).
    /// Only meaningful in a basis where `J̃` is real up to phase.
    pub fn has_standard_spectrum(&self, tol: &Tolerances) -> bool {
        let n = self.dim();
        let ev = self.eigenvalues();
        let count = |target: Complex64| {
            ev.iter()
                .filter(|z| (*z - target).norm() <= tol.unit.sqrt())
                .count()
        };
        match self.symmetry {
            FormSymmetry::Antisymmetric => {
                n.is_multiple_of(2)
                    && count(Complex64::new(0.0, 1.0)) == n / 2
                    && count(Complex64::new(0.0, -1.0)) == n / 2
            }
            FormSymmetry::Symmetric => {
                let plus = count(ONE);
                let minus = count(-ONE);
                let (big, small) = (plus.max(minus), plus.min(minus));
                plus + minus == n && big == n.div_ceil(2) && small == n / 2
            }
        }
    }
}

/// Joint invariant form of `generators`.
///
/// Fails with [`Error::NoForm`] when only `J = 0` solves the system and with
/// [`Error::AmbiguousForm`] when several independent forms exist.
pub fn find_invariant_form(
    generators: &[ComplexMatrix],
    tol: &Tolerances,
) -> Result<InvariantForm> {
    let first = generators.first().ok_or(Error::NoGenerators)?;
    let n = check_square(first)?;
    for g in generators {
        check_same_dim(first, g)?;
        let dev = linalg::skew_hermitian_deviation(g);
        if dev > tol.herm {
            return Err(Error::NotSkewHermitian(dev));
        }
    }
    let system = stacked_form_system(generators, n);
    let null = complex_null_space(&system, tol.rank)?;
    match null.dim() {
        0 => Err(Error::NoForm),
        1 => {
            let j = linalg::unvectorize(&null.basis[0], n);
            let j = normalize_form(j, n, tol)?;
            let symmetry = detect_symmetry(&j, tol)?;
            Ok(InvariantForm {
                j,
                symmetry,
                nullspace_dim: 1,
            })
        }
        k => Err(Error::AmbiguousForm(k)),
    }
}

fn stacked_form_system(generators: &[ComplexMatrix], n: usize) -> DMatrix<Complex64> {
    let nn = n * n;
    let id = ComplexMatrix::identity(n, n);
    let mut a = DMatrix::<Complex64>::zeros(nn * generators.len(), nn);
    for (k, x) in generators.iter().enumerate() {
        // vec(xᵀJ) = (I ⊗ xᵀ) vec J, vec(Jx) = (xᵀ ⊗ I) vec J
        let xt = x.transpose();
        let block = id.kronecker(&xt) + xt.kronecker(&id);
        a.view_mut((k * nn, 0), (nn, nn)).copy_from(&block);
    }
    a
}

fn normalize_form(j: ComplexMatrix, n: usize, tol: &Tolerances) -> Result<ComplexMatrix> {
    let gram = j.adjoint() * &j;
    let scale = linalg::trace(&gram).re / n as f64;
    if scale.is_nan() || scale <= 0.0 {
        return Err(Error::FormNotUnitary(f64::INFINITY));
    }
    let dev = (&gram - ComplexMatrix::identity(n, n) * Complex64::new(scale, 0.0)).norm()
        / (scale * (n as f64).sqrt());
    if dev > tol.unit {
        return Err(Error::FormNotUnitary(dev));
    }
    let j = j / Complex64::new(scale.sqrt(), 0.0);

    // ties are common (all-unimodular forms): first in row-major order wins
    let max = j.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let mut pivot = ONE;
    'search: for r in 0..n {
        for c in 0..n {
            let z = j[(r, c)];
            if z.norm() >= max * (1.0 - 1e-6) {
                pivot = z / z.norm();
                break 'search;
            }
        }
    }
    Ok(j * pivot.conj())
}

fn detect_symmetry(j: &ComplexMatrix, tol: &Tolerances) -> Result<FormSymmetry> {
    let scale = j.norm();
    let sym = (j.transpose() - j).norm() / scale;
    let anti = (j.transpose() + j).norm() / scale;
    if sym.min(anti) > tol.unit {
        return Err(Error::AmbiguousForm(1));
    }
    Ok(if anti <= sym {
        FormSymmetry::Antisymmetric
    } else {
        FormSymmetry::Symmetric
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "rank", rename_all = "snake_case")]
pub enum GroupKind {
    FullUnitary,
    SpecialUnitary,
    /// Sp(ℓ) acting on dimension 2ℓ.
    Symplectic(usize),
    /// SO(N).
    SpecialOrthogonal(usize),
    Other,
}

impl GroupKind {
    /// Real dimension of the group in dimension `n`.
    pub fn dimension(&self, n: usize) -> Option<usize> {
        match *self {
            GroupKind::FullUnitary => Some(n * n),
            GroupKind::SpecialUnitary => Some(n * n - 1),
            GroupKind::Symplectic(l) => Some(l * (2 * l + 1)),
            GroupKind::SpecialOrthogonal(m) => Some(m * (m.saturating_sub(1)) / 2),
            GroupKind::Other => None,
        }
    }
}

/// Classified dynamical Lie group.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupClass {
    pub kind: GroupKind,
    /// An extra central U(1) factor (phase) is present.
    pub central_u1: bool,
    /// Dimension of the Hilbert space.
    pub dim_space: usize,
    /// Real dimension of the dynamical Lie algebra.
    pub dim_algebra: usize,
    /// Why the group ended up as `Other`, when it did.
    pub diagnostic: Option<String>,
}

impl fmt::Display for GroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim_space;
        match self.kind {
            GroupKind::FullUnitary => write!(f, "U({n})")?,
            GroupKind::SpecialUnitary => write!(f, "SU({n})")?,
            GroupKind::Symplectic(l) => write!(f, "Sp({l})")?,
            GroupKind::SpecialOrthogonal(m) => write!(f, "SO({m})")?,
            GroupKind::Other => write!(f, "other")?,
        }
        if self.central_u1 {
            write!(f, "×U(1)")?;
        }
        Ok(())
    }
}

/// Group label together with the invariant form that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemAnalysis {
    pub group: GroupClass,
    pub form: Option<InvariantForm>,
}

/// Closure, classification and form in one call.
pub fn analyze_system(
    system: &ControlSystem,
    tol: &Tolerances,
) -> Result<(LieBasis, SystemAnalysis)> {
    let basis = lie_closure(&system.generators(), tol)?;
    let analysis = classify_with_form(&basis, system, tol)?;
    Ok((basis, analysis))
}

/// Classifies the dynamical group of `system` given its closed algebra.
pub fn classify_group(
    basis: &LieBasis,
    system: &ControlSystem,
    tol: &Tolerances,
) -> Result<GroupClass> {
    classify_with_form(basis, system, tol).map(|a| a.group)
}

/// [`classify_group`], also returning the invariant form when one decided the class.
pub fn classify_with_form(
    basis: &LieBasis,
    system: &ControlSystem,
    tol: &Tolerances,
) -> Result<SystemAnalysis> {
    if !basis.closed {
        return Err(Error::Numerical(
            "classification needs a closed Lie basis".into(),
        ));
    }
    let n = system.dim();
    if basis.dim_space != n {
        return Err(Error::DimensionMismatch(n, basis.dim_space));
    }
    let d = basis.len();
    let traceless = system.all_traceless(tol);
    let group = |kind, central_u1, diagnostic: Option<String>| GroupClass {
        kind,
        central_u1,
        dim_space: n,
        dim_algebra: d,
        diagnostic,
    };

    if d == n * n {
        return Ok(SystemAnalysis {
            group: group(GroupKind::FullUnitary, false, None),
            form: None,
        });
    }
    // su(2) = sp(1): for N = 2 the form route runs first and labels it Sp(1)
    if d == n * n - 1 && traceless && n != 2 {
        return Ok(SystemAnalysis {
            group: group(GroupKind::SpecialUnitary, false, None),
            form: None,
        });
    }

    let xs: Vec<ComplexMatrix> = traceless_generators(system)
        .into_iter()
        .filter(|x| x.norm() > 0.0)
        .collect();
    if xs.is_empty() {
        return Ok(SystemAnalysis {
            group: group(
                GroupKind::Other,
                false,
                Some("trace-free algebra is trivial".into()),
            ),
            form: None,
        });
    }
    let form = match find_invariant_form(&xs, tol) {
        Ok(f) => f,
        Err(e @ (Error::NoForm | Error::AmbiguousForm(_) | Error::FormNotUnitary(_))) => {
            let kind = if d == n * n - 1 && traceless {
                GroupKind::SpecialUnitary
            } else {
                GroupKind::Other
            };
            let diag = (kind == GroupKind::Other).then(|| e.to_string());
            return Ok(SystemAnalysis {
                group: group(kind, false, diag),
                form: None,
            });
        }
        Err(e) => return Err(e),
    };

    let (kind, square_sign) = match form.symmetry {
        FormSymmetry::Antisymmetric if n.is_multiple_of(2) => (GroupKind::Symplectic(n / 2), -1.0),
        FormSymmetry::Antisymmetric => {
            let diag = format!("antisymmetric invariant form in odd dimension {n}");
            return Ok(SystemAnalysis {
                group: group(GroupKind::Other, false, Some(diag)),
                form: Some(form),
            });
        }
        FormSymmetry::Symmetric => (GroupKind::SpecialOrthogonal(n), 1.0),
    };

    // basis-independent form of the eigenvalue test: J̃J̃* = ∓I
    let square_dev = (form.conjugate_square()
        - ComplexMatrix::identity(n, n) * Complex64::new(square_sign, 0.0))
    .norm();
    if square_dev > tol.unit * (n as f64).sqrt() {
        let diag = format!("J̃J̃* deviates from {square_sign:+}I by {square_dev:.3e}");
        return Ok(SystemAnalysis {
            group: group(GroupKind::Other, false, Some(diag)),
            form: Some(form),
        });
    }

    let sub = kind
        .dimension(n)
        .expect("form-based kinds have a dimension");
    let central_u1 = if d == sub {
        false
    } else if !traceless && d == sub + 1 {
        true
    } else {
        let probe = GroupClass {
            kind,
            central_u1: false,
            dim_space: n,
            dim_algebra: d,
            diagnostic: None,
        };
        let diag = format!("form suggests {probe} (dim {sub}) but the algebra has dim {d}");
        return Ok(SystemAnalysis {
            group: group(GroupKind::Other, false, Some(diag)),
            form: Some(form),
        });
    };
    Ok(SystemAnalysis {
        group: group(kind, central_u1, None),
        form: Some(form),
    })
}

/// Standard symplectic form `[[0, I], [−I, 0]]` of size 2ℓ.
pub fn standard_symplectic_form(l: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(2 * l, 2 * l, |r, c| {
        if c == r + l {
            ONE
        } else if r == c + l {
            -ONE
        } else {
            ZERO
        }
    })
}

/// Standard orthogonal form: `[[0, I], [I, 0]]` for even `n`, with a leading
/// `1` block for odd `n`.
pub fn standard_orthogonal_form(n: usize) -> ComplexMatrix {
    let l = n / 2;
    let off = n % 2;
    ComplexMatrix::from_fn(n, n, |r, c| {
        if off == 1 && r == 0 && c == 0 {
            return ONE;
        }
        if r < off || c < off {
            return ZERO;
        }
        let (r, c) = (r - off, c - off);
        if c == r + l || r == c + l {
            ONE
        } else {
            ZERO
        }
    })
}

/// Projects a skew-Hermitian `x` onto the algebra preserving `j`, using the
/// involution `x ↦ J†x̄J`.
pub fn project_to_form_algebra(x: &ComplexMatrix, j: &ComplexMatrix) -> ComplexMatrix {
    let image = j.adjoint() * x.conjugate() * j;
    (x + image) * Complex64::new(0.5, 0.0)
}

/// Orthonormal basis of `{x ∈ u(N) : xᵀJ + Jx = 0}` for a unitary, symmetric
/// or antisymmetric `j`.
pub fn form_algebra_basis(j: &ComplexMatrix, tol: &Tolerances) -> Result<LieBasis> {
    let n = check_square(j)?;
    let projected: Vec<ComplexMatrix> = unitary_algebra_spanning_set(n)
        .iter()
        .map(|x| project_to_form_algebra(x, j))
        .collect();
    lie_closure(&projected, tol)
}

/// Canonical sp(ℓ) basis, dimension ℓ(2ℓ+1).
pub fn symplectic_algebra(l: usize, tol: &Tolerances) -> Result<LieBasis> {
    form_algebra_basis(&standard_symplectic_form(l), tol)
}

/// Canonical so(N) basis (for the standard form), dimension N(N−1)/2.
pub fn orthogonal_algebra(n: usize, tol: &Tolerances) -> Result<LieBasis> {
    form_algebra_basis(&standard_orthogonal_form(n), tol)
}

/// Full u(N), dimension N².
pub fn unitary_algebra(n: usize, tol: &Tolerances) -> Result<LieBasis> {
    lie_closure(&unitary_algebra_spanning_set(n), tol)
}

/// Real spanning set of u(N): `iEₖₖ`, `Eⱼₖ − Eₖⱼ`, `i(Eⱼₖ + Eₖⱼ)`.
pub fn unitary_algebra_spanning_set(n: usize) -> Vec<ComplexMatrix> {
    let i = Complex64::new(0.0, 1.0);
    let mut out = Vec::with_capacity(n * n);
    for k in 0..n {
        let mut m = ComplexMatrix::zeros(n, n);
        m[(k, k)] = i;
        out.push(m);
    }
    for r in 0..n {
        for c in (r + 1)..n {
            let mut a = ComplexMatrix::zeros(n, n);
            a[(r, c)] = ONE;
            a[(c, r)] = -ONE;
            out.push(a);
            let mut s = ComplexMatrix::zeros(n, n);
            s[(r, c)] = i;
            s[(c, r)] = i;
            out.push(s);
        }
    }
    out
}

/// Random element of the algebra preserving `j`.
pub fn random_form_element<R: Rng + ?Sized>(rng: &mut R, j: &ComplexMatrix) -> ComplexMatrix {
    let h = linalg::random_hermitian(rng, j.nrows());
    project_to_form_algebra(&(h * Complex64::new(0.0, 1.0)), j)
}
