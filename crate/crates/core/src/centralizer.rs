//! Transitivity by dimension count.
//!
//! A subgroup `S ⊂ U(N)` acts transitively on the unitary orbit of `ρ` iff
//! `dim U(N) − dim S = dim C_ρ − dim(C_ρ ∩ S)`, where `C_ρ` is the
//! centralizer of `ρ`. All dimensions are real Lie algebra dimensions.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie_engine::LieBasis;
use crate::linalg::{real_null_space, NullSpace};
use crate::state_space::{spectrum, DensityMatrix};
use crate::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitivityReport {
    pub dim_un: usize,
    pub dim_s: usize,
    pub dim_centralizer: usize,
    pub dim_intersection: usize,
    pub transitive: bool,
}

/// `Σ mᵢ²` over eigenvalue multiplicities.
pub fn centralizer_dim(rho: &DensityMatrix, tol: &Tolerances) -> Result<usize> {
    let spec = spectrum(rho, tol);
    if let Some(gap) = spec.ambiguous_gap {
        return Err(Error::AmbiguousSpectrum(gap));
    }
    Ok(spec
        .clusters
        .iter()
        .map(|c| c.multiplicity * c.multiplicity)
        .sum())
}

/// Real dimension of `{x ∈ span(basis) : [x, ρ] = 0}`.
pub fn intersection_dim(rho: &DensityMatrix, basis: &LieBasis, tol: &Tolerances) -> Result<usize> {
    if !basis.closed {
        return Err(Error::Numerical(
            "intersection needs a closed Lie basis".into(),
        ));
    }
    let n = rho.dim();
    if basis.dim_space != n {
        return Err(Error::DimensionMismatch(n, basis.dim_space));
    }
    if basis.is_empty() {
        return Ok(0);
    }
    let nn = n * n;
    let r = rho.matrix();
    let mut a = DMatrix::<f64>::zeros(2 * nn, basis.len());
    for (k, x) in basis.elements.iter().enumerate() {
        let bracket = x * r - r * x;
        for (i, z) in bracket.iter().enumerate() {
            a[(i, k)] = z.re;
            a[(nn + i, k)] = z.im;
        }
    }
    let null = real_null_space(&a, tol.rank)?;
    check_rank_margin(&null)?;
    Ok(null.dim())
}

fn check_rank_margin<T: nalgebra::Scalar>(null: &NullSpace<T>) -> Result<()> {
    if let Some(value) = null.nearest_to_cutoff() {
        let ratio = value / null.cutoff;
        if (0.1..=10.0).contains(&ratio) {
            return Err(Error::AmbiguousRank {
                value,
                cutoff: null.cutoff,
            });
        }
    }
    Ok(())
}

pub fn transitive_by_dimension(
    rho: &DensityMatrix,
    basis: &LieBasis,
    tol: &Tolerances,
) -> Result<TransitivityReport> {
    let n = rho.dim();
    let dim_un = n * n;
    let dim_s = basis.len();
    let dim_centralizer = centralizer_dim(rho, tol)?;
    let dim_intersection = intersection_dim(rho, basis, tol)?;
    // both sides are non-negative: dim S ≤ N² and C ∩ S ⊂ C
    let transitive =
        dim_un as i64 - dim_s as i64 == dim_centralizer as i64 - dim_intersection as i64;
    Ok(TransitivityReport {
        dim_un,
        dim_s,
        dim_centralizer,
        dim_intersection,
        transitive,
    })
}
