//! # qreach
//!
//! Classification of the dynamical Lie group of a controlled finite-level
//! quantum system, `H = H₀ + Σ fₘ(t) Hₘ`, and decisions on whether two
//! density matrices can be steered into one another by that group.
//!
//! The crate is organised along the analysis pipeline:
//!
//! - [`lie_engine`]: commutator closure of `iH₀, …, iH_M` into an orthonormal
//!   basis of the dynamical Lie algebra.
//! - [`group_id`]: the invariant bilinear form `J̃` (null space of
//!   `x ↦ xᵀJ + Jx`) and the group label U(N), SU(N), Sp(N/2), SO(N).
//! - [`state_space`]: density matrices, clustered spectra, ensemble types and
//!   the tilde transform `ρ̃ = (J̃ρJ̃†)*`.
//! - [`reachability`]: transitivity lookup plus the dual-conjugation tests,
//!   witness search and the combined verdict.
//! - [`centralizer`]: the dimension-count route to transitivity.
//! - [`cli_io`]: JSON analysis documents and the batch commands behind the
//!   `qreach` binary.
//!
//! See `examples/` for one runnable program per capability.

#![forbid(unsafe_code)]

pub mod centralizer;
pub mod cli_io;
pub mod error;
pub mod group_id;
pub mod lie_engine;
pub mod linalg;
pub mod reachability;
pub mod state_space;

pub use centralizer::{
    centralizer_dim, intersection_dim, transitive_by_dimension, TransitivityReport,
};
pub use error::{Error, Result};
pub use group_id::{
    classify_group, find_invariant_form, FormSymmetry, GroupClass, GroupKind, InvariantForm,
};
pub use lie_engine::{
    commutator, lie_closure, membership, traceless_generators, ControlSystem, LieBasis,
};
pub use linalg::ComplexMatrix;
pub use reachability::{
    de_necessary_test, decide_reachability, linear_system_test, transitive_on_class,
    witness_search, CertificateKind, NonEquivalenceCertificate, ReachabilityVerdict,
    SystemAnalysis, VerdictStatus,
};
pub use state_space::{
    classify_state, kinematically_equivalent, spectrum, tilde_transform, DensityMatrix, Spectrum,
    StateClass, StateKind,
};

use serde::{Deserialize, Serialize};

/// Numerical tolerances. All are relative unless noted.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    /// Hermiticity / skew-Hermiticity, relative to ‖H‖_F.
    pub herm: f64,
    /// Orthonormality of Lie bases.
    pub orth: f64,
    /// Rank and membership decisions, relative to the candidate norm or σ_max.
    pub rank: f64,
    /// Unitarity and symmetry of the invariant form.
    pub unit: f64,
    /// Eigenvalue comparisons for the invariant form, and the PSD floor (absolute).
    pub eig: f64,
    /// Eigenvalue clustering gap (absolute, on eigenvalues in [0, 1]).
    pub cluster: f64,
    /// Trace-one check (absolute).
    pub trace: f64,
    /// Frobenius residual accepted for witnesses and verdicts.
    pub verdict: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            herm: 1e-10,
            orth: 1e-10,
            rank: 1e-9,
            unit: 1e-8,
            eig: 1e-10,
            cluster: 1e-8,
            trace: 1e-10,
            verdict: 1e-7,
        }
    }
}

/// Knobs shared by every analysis entry point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Config {
    pub tolerances: Tolerances,
    /// Seed for the witness sampler.
    pub seed: u64,
    /// Number of random null-space samples tried by the witness search.
    pub budget: usize,
    /// Longest word used by the word-trace invariant battery.
    pub word_length: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            tolerances: Tolerances::default(),
            seed: 0x5eed,
            budget: 200,
            word_length: 4,
        }
    }
}
