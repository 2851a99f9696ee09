//! Dynamical equivalence of density matrices.
//!
//! Two states with equal spectra are dynamically equivalent when some `U` in
//! the dynamical group maps one onto the other. For groups preserving a form
//! `J̃`, any such `U` also maps `ρ̃₀ = (J̃ρ₀J̃†)*` onto `ρ̃₁`, which yields
//! certificate-producing necessary tests:
//!
//! - word traces `Tr w(ρ, ρ̃)` must agree for every word `w`;
//! - the linear system `ρ₁U = Uρ₀`, `ρ̃₁U = Uρ̃₀` must have a nonzero solution;
//! - with the real-linear constraint `J̃U = ŪJ̃` added, it still must.
//!
//! Solutions of the last system project (polar factor) onto unitaries that
//! still satisfy every constraint, which is how witnesses are found.

use std::cmp::Ordering;
use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group_id::{FormSymmetry, GroupClass, GroupKind, InvariantForm};
use crate::linalg::{
    self, complex_null_space, real_null_space, realify_antilinear, realify_linear, ComplexMatrix,
};
use crate::state_space::{
    classify_state, kinematically_equivalent, spectrum, tilde_transform, Cluster, DensityMatrix,
    StateKind,
};
use crate::{Config, Tolerances};

pub use crate::group_id::SystemAnalysis;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VerdictStatus {
    Equivalent,
    NotEquivalent,
    Inconclusive,
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VerdictStatus::Equivalent => "Equivalent",
            VerdictStatus::NotEquivalent => "NotEquivalent",
            VerdictStatus::Inconclusive => "Inconclusive",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CertificateKind {
    /// The states lie in different kinematical classes (spectra differ).
    TransitivityClass,
    TildeSpectrumMismatch,
    WordTraceMismatch,
    EmptyNullSpace,
}

/// Which linear system an [`CertificateData::NullSpace`] refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LinearSystem {
    /// `ρ₁U − Uρ₀ = 0`, `ρ̃₁U − Uρ̃₀ = 0` over ℂ.
    DualConjugation,
    /// The same plus `J̃U − ŪJ̃ = 0`, over ℝ.
    FormConstrained,
}

/// The violated quantity pair, in the orientation `(ρ₀, ρ₁)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CertificateData {
    Spectra {
        left: Vec<Cluster>,
        right: Vec<Cluster>,
    },
    WordTrace {
        word: String,
        left: [f64; 2],
        right: [f64; 2],
    },
    NullSpace {
        system: LinearSystem,
        smallest_singular_ratio: f64,
    },
}

/// Checkable evidence that two states are not dynamically equivalent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NonEquivalenceCertificate {
    pub kind: CertificateKind,
    pub data: CertificateData,
}

impl NonEquivalenceCertificate {
    /// Recomputes the certified quantity from scratch and returns the size of
    /// the violation (difference of the pair, or the smallest singular-value
    /// ratio for null-space certificates).
    pub fn violation(
        &self,
        rho0: &DensityMatrix,
        rho1: &DensityMatrix,
        form: Option<&InvariantForm>,
        tol: &Tolerances,
    ) -> Result<f64> {
        match &self.data {
            CertificateData::Spectra { .. } => {
                let (a, _) = linalg::hermitian_eigen(rho0.matrix());
                let (b, _) = linalg::hermitian_eigen(rho1.matrix());
                Ok(a.iter()
                    .zip(&b)
                    .map(|(x, y)| (x - y).abs())
                    .fold(0.0, f64::max))
            }
            CertificateData::WordTrace { word, .. } => {
                let form = form.ok_or_else(|| {
                    Error::Numerical("word-trace certificate needs a form".into())
                })?;
                let (t0, t1) = (tilde_transform(rho0, form)?, tilde_transform(rho1, form)?);
                let left = word_trace(word, rho0.matrix(), t0.matrix());
                let right = word_trace(word, rho1.matrix(), t1.matrix());
                Ok((left - right).norm())
            }
            CertificateData::NullSpace { system, .. } => {
                let form = form.ok_or_else(|| {
                    Error::Numerical("null-space certificate needs a form".into())
                })?;
                let ratio = match system {
                    LinearSystem::DualConjugation => {
                        let a = dual_conjugation_system(rho0, rho1, form)?;
                        smallest_ratio(&complex_null_space(&a, tol.rank)?.singular_values)
                    }
                    LinearSystem::FormConstrained => {
                        let a = form_constrained_system(rho0, rho1, form)?;
                        smallest_ratio(&real_null_space(&a, tol.rank)?.singular_values)
                    }
                };
                Ok(ratio)
            }
        }
    }

    fn swapped(self) -> Self {
        let data = match self.data {
            CertificateData::Spectra { left, right } => CertificateData::Spectra {
                left: right,
                right: left,
            },
            CertificateData::WordTrace { word, left, right } => CertificateData::WordTrace {
                word,
                left: right,
                right: left,
            },
            other => other,
        };
        Self {
            kind: self.kind,
            data,
        }
    }
}

fn smallest_ratio(sv: &[f64]) -> f64 {
    match (sv.first(), sv.last()) {
        (Some(&max), Some(&min)) if max > 0.0 => min / max,
        _ => 0.0,
    }
}

/// Outcome of [`decide_reachability`].
#[derive(Debug, Clone, PartialEq)]
pub struct ReachabilityVerdict {
    pub status: VerdictStatus,
    /// Unitary `U` in the group with `ρ₁ = Uρ₀U†`, when one was constructed.
    pub witness: Option<ComplexMatrix>,
    pub certificate: Option<NonEquivalenceCertificate>,
    /// Which criteria ran and which one decided.
    pub narrative: Vec<String>,
}

impl ReachabilityVerdict {
    fn equivalent(witness: Option<ComplexMatrix>, narrative: Vec<String>) -> Self {
        Self {
            status: VerdictStatus::Equivalent,
            witness,
            certificate: None,
            narrative,
        }
    }

    fn not_equivalent(certificate: NonEquivalenceCertificate, narrative: Vec<String>) -> Self {
        Self {
            status: VerdictStatus::NotEquivalent,
            witness: None,
            certificate: Some(certificate),
            narrative,
        }
    }
}

/// Whether `group` acts transitively on every kinematical class of `state`'s type.
///
/// U(N) and SU(N) act transitively on everything; Sp(N/2) (with or without a
/// U(1) factor) on completely random and pure-state-like classes only; every
/// other group on the completely random class only.
pub fn transitive_on_class(group: &GroupKind, state: StateKind) -> bool {
    match group {
        GroupKind::FullUnitary | GroupKind::SpecialUnitary => true,
        GroupKind::Symplectic(_) => matches!(
            state,
            StateKind::CompletelyRandom | StateKind::PureStateLike
        ),
        GroupKind::SpecialOrthogonal(_) | GroupKind::Other => state == StateKind::CompletelyRandom,
    }
}

/// Words over `{A, B}` of length `1..=max_len`, one per cyclic class.
pub fn trace_words(max_len: usize) -> Vec<String> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        for bits in 0..(1u32 << len) {
            let w: String = (0..len)
                .map(|k| {
                    if bits >> (len - 1 - k) & 1 == 0 {
                        'A'
                    } else {
                        'B'
                    }
                })
                .collect();
            let canonical = (0..len)
                .map(|s| format!("{}{}", &w[s..], &w[..s]))
                .min()
                .expect("non-empty word");
            if canonical == w {
                out.push(w);
            }
        }
    }
    out
}

fn word_trace(word: &str, a: &ComplexMatrix, b: &ComplexMatrix) -> Complex64 {
    let n = a.nrows();
    let mut p = ComplexMatrix::identity(n, n);
    for ch in word.chars() {
        p = if ch == 'A' { p * a } else { p * b };
    }
    linalg::trace(&p)
}

fn check_pair(
    rho0: &DensityMatrix,
    rho1: &DensityMatrix,
    form: Option<&InvariantForm>,
) -> Result<()> {
    if rho0.dim() != rho1.dim() {
        return Err(Error::DimensionMismatch(rho0.dim(), rho1.dim()));
    }
    if let Some(f) = form {
        if f.dim() != rho0.dim() {
            return Err(Error::DimensionMismatch(rho0.dim(), f.dim()));
        }
    }
    Ok(())
}

/// Necessary invariants of simultaneous conjugation of `(ρ, ρ̃)`.
///
/// Returns `None` when every check passes. A mismatch is only reported when
/// it exceeds `10 · τ_verdict`.
pub fn de_necessary_test(
    rho0: &DensityMatrix,
    rho1: &DensityMatrix,
    form: &InvariantForm,
    cfg: &Config,
) -> Result<Option<NonEquivalenceCertificate>> {
    check_pair(rho0, rho1, Some(form))?;
    let tol = &cfg.tolerances;
    let t0 = tilde_transform(rho0, form)?;
    let t1 = tilde_transform(rho1, form)?;

    let s0 = spectrum(&t0, tol);
    let s1 = spectrum(&t1, tol);
    if !s0.matches(&s1, tol.cluster) {
        return Ok(Some(NonEquivalenceCertificate {
            kind: CertificateKind::TildeSpectrumMismatch,
            data: CertificateData::Spectra {
                left: s0.clusters,
                right: s1.clusters,
            },
        }));
    }

    let threshold = 10.0 * tol.verdict;
    for word in trace_words(cfg.word_length) {
        let left = word_trace(&word, rho0.matrix(), t0.matrix());
        let right = word_trace(&word, rho1.matrix(), t1.matrix());
        if (left - right).norm() > threshold {
            return Ok(Some(NonEquivalenceCertificate {
                kind: CertificateKind::WordTraceMismatch,
                data: CertificateData::WordTrace {
                    word,
                    left: [left.re, left.im],
                    right: [right.re, right.im],
                },
            }));
        }
    }
    Ok(None)
}

fn dual_conjugation_system(
    rho0: &DensityMatrix,
    rho1: &DensityMatrix,
    form: &InvariantForm,
) -> Result<DMatrix<Complex64>> {
    let n = rho0.dim();
    let nn = n * n;
    let id = ComplexMatrix::identity(n, n);
    let t0 = tilde_transform(rho0, form)?;
    let t1 = tilde_transform(rho1, form)?;
    // vec(ρ₁U) = (I ⊗ ρ₁) vec U, vec(Uρ₀) = (ρ₀ᵀ ⊗ I) vec U
    let first = id.kronecker(rho1.matrix()) - rho0.matrix().transpose().kronecker(&id);
    let second = id.kronecker(t1.matrix()) - t0.matrix().transpose().kronecker(&id);
    let mut a = DMatrix::<Complex64>::zeros(2 * nn, nn);
    a.view_mut((0, 0), (nn, nn)).copy_from(&first);
    a.view_mut((nn, 0), (nn, nn)).copy_from(&second);
    Ok(a)
}

fn form_constrained_system(
    rho0: &DensityMatrix,
    rho1: &DensityMatrix,
    form: &InvariantForm,
) -> Result<DMatrix<f64>> {
    let n = rho0.dim();
    let nn = n * n;
    let id = ComplexMatrix::identity(n, n);
    let conj = realify_linear(&dual_conjugation_system(rho0, rho1, form)?);
    // vec(J̃U) = (I ⊗ J̃) vec U, vec(ŪJ̃) = (J̃ᵀ ⊗ I) conj(vec U)
    let keep = realify_linear(&id.kronecker(&form.j))
        - realify_antilinear(&form.j.transpose().kronecker(&id));
    let mut a = DMatrix::<f64>::zeros(conj.nrows() + keep.nrows(), 2 * nn);
    a.view_mut((0, 0), conj.shape()).copy_from(&conj);
    a.view_mut((conj.nrows(), 0), keep.shape()).copy_from(&keep);
    Ok(a)
}

/// Solutions `U` of `ρ₁U = Uρ₀`, `ρ̃₁U = Uρ̃₀`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearSolutionSpace {
    /// Complex dimension of the solution space.
    pub dim: usize,
    /// Orthonormal basis (Frobenius) of the solutions.
    pub basis: Vec<ComplexMatrix>,
    /// Smallest singular value of the system over the largest.
    pub smallest_singular_ratio: f64,
}

/// Solves the stacked `2N² × N²` system for `U`.
pub fn linear_system_test(
    rho0: &DensityMatrix,
    rho1: &DensityMatrix,
    form: &InvariantForm,
    tol: &Tolerances,
) -> Result<LinearSolutionSpace> {
    check_pair(rho0, rho1, Some(form))?;
    let n = rho0.dim();
    let a = dual_conjugation_system(rho0, rho1, form)?;
    let null = complex_null_space(&a, tol.rank)?;
    Ok(LinearSolutionSpace {
        dim: null.dim(),
        basis: null
            .basis
            .iter()
            .map(|v| linalg::unvectorize(v, n))
            .collect(),
        smallest_singular_ratio: smallest_ratio(&null.singular_values),
    })
}

/// Real solution space of the dual conjugation system with `J̃U = ŪJ̃` added,
/// as `(basis, smallest singular-value ratio)`.
pub fn form_constrained_solutions(
    rho0: &DensityMatrix,
    rho1: &DensityMatrix,
    form: &InvariantForm,
    tol: &Tolerances,
) -> Result<(Vec<ComplexMatrix>, f64)> {
    check_pair(rho0, rho1, Some(form))?;
    let n = rho0.dim();
    let nn = n * n;
    let a = form_constrained_system(rho0, rho1, form)?;
    let null = real_null_space(&a, tol.rank)?;
    let basis = null
        .basis
        .iter()
        .map(|v| {
            ComplexMatrix::from_fn(n, n, |r, c| Complex64::new(v[c * n + r], v[nn + c * n + r]))
        })
        .collect();
    Ok((basis, smallest_ratio(&null.singular_values)))
}

fn conjugation_solutions(
    rho0: &DensityMatrix,
    rho1: &DensityMatrix,
    tol: &Tolerances,
) -> Result<Vec<ComplexMatrix>> {
    let n = rho0.dim();
    let id = ComplexMatrix::identity(n, n);
    let a = id.kronecker(rho1.matrix()) - rho0.matrix().transpose().kronecker(&id);
    let null = complex_null_space(&a, tol.rank)?;
    Ok(null
        .basis
        .iter()
        .map(|v| linalg::unvectorize(v, n))
        .collect())
}

/// Checks a candidate witness, fixing its global phase (and sign, for
/// orthogonal forms in odd dimension) where the group allows it.
fn accept_witness(
    u: ComplexMatrix,
    rho0: &DensityMatrix,
    rho1: &DensityMatrix,
    form: Option<&InvariantForm>,
    tol: &Tolerances,
) -> Option<ComplexMatrix> {
    let n = u.nrows();
    let mut u = u;
    match form {
        Some(f) => {
            let m = u.transpose() * &f.j * &u;
            let lambda: Complex64 =
                f.j.iter()
                    .zip(m.iter())
                    .map(|(a, b)| a.conj() * b)
                    .sum::<Complex64>()
                    / n as f64;
            if (lambda.norm() - 1.0).abs() > 1e-6 {
                return None;
            }
            u *= lambda.sqrt().inv();
            if f.symmetry == FormSymmetry::Symmetric {
                let det = u.determinant();
                if (det + 1.0).norm() < 1e-6 && n % 2 == 1 {
                    u = -u;
                }
                if (u.determinant() - 1.0).norm() > 1e-6 {
                    return None;
                }
            }
            if (u.transpose() * &f.j * &u - &f.j).norm() > tol.verdict {
                return None;
            }
        }
        None => {
            let det = u.determinant();
            if det.norm() == 0.0 {
                return None;
            }
            let phase = (det / det.norm()).powf(1.0 / n as f64);
            u /= phase;
        }
    }
    let residual = (&u * rho0.matrix() * u.adjoint() - rho1.matrix()).norm();
    (residual <= tol.verdict).then_some(u)
}

/// Randomised search for a unitary witness, polar-projecting random
/// combinations of the linear solutions.
///
/// With a form, the form-constrained solutions are sampled and the witness
/// preserves `J̃` (and has unit determinant for orthogonal forms); without
/// one, any special unitary conjugating `ρ₀` to `ρ₁` is returned. `None`
/// does not prove non-equivalence.
pub fn witness_search(
    rho0: &DensityMatrix,
    rho1: &DensityMatrix,
    form: Option<&InvariantForm>,
    cfg: &Config,
) -> Result<Option<ComplexMatrix>> {
    check_pair(rho0, rho1, form)?;
    let tol = &cfg.tolerances;
    if !kinematically_equivalent(rho0, rho1, tol)? {
        return Ok(None);
    }
    let n = rho0.dim();
    let id = ComplexMatrix::identity(n, n);
    if let Some(u) = accept_witness(id, rho0, rho1, form, tol) {
        return Ok(Some(u));
    }
    let (basis, complex) = match form {
        Some(f) => (form_constrained_solutions(rho0, rho1, f, tol)?.0, false),
        None => (conjugation_solutions(rho0, rho1, tol)?, true),
    };
    if basis.is_empty() {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.budget {
        let mut combo = ComplexMatrix::zeros(n, n);
        for b in &basis {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = if complex {
                StandardNormal.sample(&mut rng)
            } else {
                0.0
            };
            combo += b * Complex64::new(re, im);
        }
        let Some(u) = linalg::nearest_unitary(&combo) else {
            continue;
        };
        if let Some(w) = accept_witness(u, rho0, rho1, form, tol) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Special unitary mapping `ρ₀` to `ρ₁` built from matched eigenbases.
pub fn eigenbasis_witness(rho0: &DensityMatrix, rho1: &DensityMatrix) -> ComplexMatrix {
    let (_, v0) = linalg::hermitian_eigen(rho0.matrix());
    let (_, mut v1) = linalg::hermitian_eigen(rho1.matrix());
    let u = &v1 * v0.adjoint();
    let det = u.determinant();
    if det.norm() > 0.0 {
        let fix = (det / det.norm()).conj();
        let mut col = v1.column_mut(0);
        col *= fix;
    }
    &v1 * v0.adjoint()
}

fn lex_cmp(a: &ComplexMatrix, b: &ComplexMatrix) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Full decision pipeline for one pair of states.
///
/// The pair is processed in a canonical order and the result mapped back,
/// so swapping `ρ₀` and `ρ₁` never changes the status.
pub fn decide_reachability(
    analysis: &SystemAnalysis,
    rho0: &DensityMatrix,
    rho1: &DensityMatrix,
    cfg: &Config,
) -> Result<ReachabilityVerdict> {
    check_pair(rho0, rho1, analysis.form.as_ref())?;
    if lex_cmp(rho1.matrix(), rho0.matrix()) == Ordering::Less {
        let mut v = decide_oriented(analysis, rho1, rho0, cfg)?;
        v.narrative.push(if v.witness.is_some() {
            "evaluated with the states swapped; witness inverted".into()
        } else {
            "evaluated with the states swapped".into()
        });
        v.witness = v.witness.map(|u| u.adjoint());
        v.certificate = v.certificate.map(NonEquivalenceCertificate::swapped);
        return Ok(v);
    }
    decide_oriented(analysis, rho0, rho1, cfg)
}

fn decide_oriented(
    analysis: &SystemAnalysis,
    rho0: &DensityMatrix,
    rho1: &DensityMatrix,
    cfg: &Config,
) -> Result<ReachabilityVerdict> {
    let tol = &cfg.tolerances;
    let group: &GroupClass = &analysis.group;
    let form = analysis.form.as_ref();
    let mut story = Vec::new();

    if !kinematically_equivalent(rho0, rho1, tol)? {
        story.push("spectra differ: states are not even kinematically equivalent".into());
        let cert = NonEquivalenceCertificate {
            kind: CertificateKind::TransitivityClass,
            data: CertificateData::Spectra {
                left: spectrum(rho0, tol).clusters,
                right: spectrum(rho1, tol).clusters,
            },
        };
        return Ok(ReachabilityVerdict::not_equivalent(cert, story));
    }

    if (rho0.matrix() - rho1.matrix()).norm() <= tol.verdict {
        story.push("states coincide: identity is a witness".into());
        let n = rho0.dim();
        return Ok(ReachabilityVerdict::equivalent(
            Some(ComplexMatrix::identity(n, n)),
            story,
        ));
    }

    let class = classify_state(rho0, tol);
    if transitive_on_class(&group.kind, class.kind) {
        story.push(format!(
            "{group} acts transitively on {} states",
            class.kind
        ));
        let witness = match group.kind {
            GroupKind::FullUnitary | GroupKind::SpecialUnitary => {
                let u = eigenbasis_witness(rho0, rho1);
                accept_witness(u, rho0, rho1, None, tol)
            }
            _ => witness_search(rho0, rho1, form, cfg)?,
        };
        story.push(if witness.is_some() {
            "witness constructed".into()
        } else {
            "no explicit witness constructed".into()
        });
        return Ok(ReachabilityVerdict::equivalent(witness, story));
    }
    story.push(format!(
        "{group} is not transitive on {} states",
        class.kind
    ));

    let Some(form) = form else {
        story.push("no invariant form available: no further criteria apply".into());
        return Ok(ReachabilityVerdict {
            status: VerdictStatus::Inconclusive,
            witness: None,
            certificate: None,
            narrative: story,
        });
    };

    if let Some(cert) = de_necessary_test(rho0, rho1, form, cfg)? {
        story.push(format!(
            "dual conjugation invariants violated ({:?})",
            cert.kind
        ));
        return Ok(ReachabilityVerdict::not_equivalent(cert, story));
    }
    story.push(format!(
        "word traces up to length {} agree",
        cfg.word_length
    ));

    let margin = 10.0 * tol.verdict;
    let linear = linear_system_test(rho0, rho1, form, tol)?;
    if linear.dim == 0 && linear.smallest_singular_ratio > margin {
        story.push("dual conjugation system has only the zero solution".into());
        let cert = NonEquivalenceCertificate {
            kind: CertificateKind::EmptyNullSpace,
            data: CertificateData::NullSpace {
                system: LinearSystem::DualConjugation,
                smallest_singular_ratio: linear.smallest_singular_ratio,
            },
        };
        return Ok(ReachabilityVerdict::not_equivalent(cert, story));
    }
    story.push(format!(
        "dual conjugation system has {} solution(s)",
        linear.dim
    ));

    let (constrained, ratio) = form_constrained_solutions(rho0, rho1, form, tol)?;
    if constrained.is_empty() && ratio > margin {
        story.push("no solution also preserves J̃".into());
        let cert = NonEquivalenceCertificate {
            kind: CertificateKind::EmptyNullSpace,
            data: CertificateData::NullSpace {
                system: LinearSystem::FormConstrained,
                smallest_singular_ratio: ratio,
            },
        };
        return Ok(ReachabilityVerdict::not_equivalent(cert, story));
    }

    let form_groups = matches!(
        group.kind,
        GroupKind::Symplectic(_) | GroupKind::SpecialOrthogonal(_)
    );
    if form_groups {
        if let Some(u) = witness_search(rho0, rho1, Some(form), cfg)? {
            story.push("form-preserving witness found".into());
            return Ok(ReachabilityVerdict::equivalent(Some(u), story));
        }
        story.push(format!("no witness within {} samples", cfg.budget));
    } else {
        story.push(
            "group is smaller than the form's stabilizer: a witness would not be conclusive".into(),
        );
    }
    Ok(ReachabilityVerdict {
        status: VerdictStatus::Inconclusive,
        witness: None,
        certificate: None,
        narrative: story,
    })
}
