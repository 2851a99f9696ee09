//! Density matrices, clustered spectra and ensemble types.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group_id::InvariantForm;
use crate::linalg::{self, check_square, hermitian_deviation, ComplexMatrix};
use crate::Tolerances;

/// Hermitian, positive semidefinite, trace-one matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    rho: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(rho: ComplexMatrix) -> Result<Self> {
        Self::with_tolerances(rho, &Tolerances::default())
    }

    pub fn with_tolerances(rho: ComplexMatrix, tol: &Tolerances) -> Result<Self> {
        let n = check_square(&rho)?;
        let dev = hermitian_deviation(&rho);
        if dev > tol.herm {
            return Err(Error::NotHermitian(dev));
        }
        let tr = linalg::trace(&rho).re;
        if (tr - 1.0).abs() > tol.trace {
            return Err(Error::InvalidTrace(tr));
        }
        let rho = hermitize(rho);
        let (values, _) = linalg::hermitian_eigen(&rho);
        let min = values[n - 1];
        if min < -tol.eig {
            return Err(Error::NotPositive(min));
        }
        Ok(Self { rho })
    }

    /// `Σ wₖ vₖvₖ†` for the columns `vₖ` of a unitary.
    pub fn from_eigen(weights: &[f64], vectors: &ComplexMatrix) -> Result<Self> {
        let n = weights.len();
        if vectors.nrows() != n || vectors.ncols() != n {
            return Err(Error::DimensionMismatch(n, vectors.nrows()));
        }
        let d = linalg::real_diag(weights);
        Self::new(vectors * d * vectors.adjoint())
    }

    /// Diagonal state.
    pub fn diagonal(weights: &[f64]) -> Result<Self> {
        Self::new(linalg::real_diag(weights))
    }

    /// The maximally mixed state `I/N`.
    pub fn maximally_mixed(n: usize) -> Self {
        Self {
            rho: ComplexMatrix::identity(n, n) / Complex64::new(n as f64, 0.0),
        }
    }

    pub fn dim(&self) -> usize {
        self.rho.nrows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.rho
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.rho
    }

    /// `UρU†`, for `u` unitary.
    pub fn conjugated(&self, u: &ComplexMatrix) -> Self {
        Self {
            rho: hermitize(u * &self.rho * u.adjoint()),
        }
    }
}

fn hermitize(m: ComplexMatrix) -> ComplexMatrix {
    (&m + m.adjoint()) * Complex64::new(0.5, 0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cluster {
    pub value: f64,
    pub multiplicity: usize,
}

/// Eigenvalues grouped into clusters, sorted descending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub clusters: Vec<Cluster>,
    /// A gap close to the clustering threshold, if any; multiplicities near
    /// such a gap are not trustworthy.
    pub ambiguous_gap: Option<f64>,
}

impl Spectrum {
    pub fn multiplicities(&self) -> Vec<usize> {
        self.clusters.iter().map(|c| c.multiplicity).collect()
    }

    pub fn dim(&self) -> usize {
        self.clusters.iter().map(|c| c.multiplicity).sum()
    }

    /// Same cluster count, values within `tol` and identical multiplicities.
    pub fn matches(&self, other: &Spectrum, tol: f64) -> bool {
        self.clusters.len() == other.clusters.len()
            && self
                .clusters
                .iter()
                .zip(&other.clusters)
                .all(|(a, b)| a.multiplicity == b.multiplicity && (a.value - b.value).abs() <= tol)
    }
}

/// Clustered spectrum of `rho`.
pub fn spectrum(rho: &DensityMatrix, tol: &Tolerances) -> Spectrum {
    let (values, _) = linalg::hermitian_eigen(rho.matrix());
    cluster_values(&values, tol.cluster)
}

pub(crate) fn cluster_values(desc: &[f64], gap: f64) -> Spectrum {
    let mut clusters: Vec<(f64, usize)> = Vec::new();
    let mut ambiguous_gap = None;
    let mut prev: Option<f64> = None;
    for &w in desc {
        match prev {
            Some(p) if p - w <= gap => {
                let last = clusters.last_mut().expect("cluster open");
                last.0 += w;
                last.1 += 1;
                if p - w > gap / 2.0 {
                    ambiguous_gap = Some(p - w);
                }
            }
            Some(p) => {
                if p - w <= 2.0 * gap {
                    ambiguous_gap = Some(p - w);
                }
                clusters.push((w, 1));
            }
            None => clusters.push((w, 1)),
        }
        prev = Some(w);
    }
    Spectrum {
        clusters: clusters
            .into_iter()
            .map(|(sum, m)| Cluster {
                value: sum / m as f64,
                multiplicity: m,
            })
            .collect(),
        ambiguous_gap,
    }
}

/// Ensemble types by eigenvalue multiplicity pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StateKind {
    /// `I/N`: a single eigenvalue.
    CompletelyRandom,
    /// Two eigenvalues with multiplicities 1 and N−1.
    PureStateLike,
    General,
}

impl fmt::Display for StateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StateKind::CompletelyRandom => "CompletelyRandom",
            StateKind::PureStateLike => "PureStateLike",
            StateKind::General => "General",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateClass {
    pub kind: StateKind,
    /// The underlying spectrum had a gap near the clustering threshold.
    pub ambiguous: bool,
}

pub fn classify_state(rho: &DensityMatrix, tol: &Tolerances) -> StateClass {
    let spec = spectrum(rho, tol);
    StateClass {
        kind: kind_of(&spec),
        ambiguous: spec.ambiguous_gap.is_some(),
    }
}

pub(crate) fn kind_of(spec: &Spectrum) -> StateKind {
    let n = spec.dim();
    let mult = spec.multiplicities();
    match mult.as_slice() {
        [_] => StateKind::CompletelyRandom,
        // for N = 2 the pattern {1, 1} lands here as well
        [a, b] if (*a == 1 && *b == n - 1) || (*b == 1 && *a == n - 1) => StateKind::PureStateLike,
        _ => StateKind::General,
    }
}

/// Equal clustered spectra: values within the cluster gap, multiplicities exact.
pub fn kinematically_equivalent(
    rho0: &DensityMatrix,
    rho1: &DensityMatrix,
    tol: &Tolerances,
) -> Result<bool> {
    if rho0.dim() != rho1.dim() {
        return Err(Error::DimensionMismatch(rho0.dim(), rho1.dim()));
    }
    Ok(spectrum(rho0, tol).matches(&spectrum(rho1, tol), tol.cluster))
}

/// `ρ̃ = (J̃ ρ J̃†)*`.
pub fn tilde_transform(rho: &DensityMatrix, form: &InvariantForm) -> Result<DensityMatrix> {
    if rho.dim() != form.dim() {
        return Err(Error::DimensionMismatch(rho.dim(), form.dim()));
    }
    let m = (&form.j * rho.matrix() * form.j.adjoint()).conjugate();
    Ok(DensityMatrix { rho: hermitize(m) })
}
