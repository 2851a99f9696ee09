//! Analysis documents and the batch commands run on them.
//!
//! A document is JSON (grammar in `docs/format.md`):
//!
//! ```json
//! {
//!   "system":  { "H0": [[0, 1], [1, 0]], "controls": [[[1, 0], [0, -1]]] },
//!   "states":  { "up": [[1, 0], [0, 0]], "mixed": [[0.5, 0], [0, 0.5]] },
//!   "options": { "tolerance_rank": 1e-9, "seed": 7, "budget": 200 }
//! }
//! ```
//!
//! Matrices are row-major nested arrays. An entry is either a real number or
//! a `[re, im]` pair.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_complex::Complex64;
use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};
use serde_json::{json, Value};

use crate::centralizer::transitive_by_dimension;
use crate::error::{Error, Result};
use crate::group_id::{analyze_system, find_invariant_form, FormSymmetry, InvariantForm};
use crate::lie_engine::{traceless_generators, ControlSystem};
use crate::linalg::ComplexMatrix;
use crate::reachability::{
    decide_reachability, transitive_on_class, CertificateData, VerdictStatus,
};
use crate::state_space::{classify_state, kinematically_equivalent, spectrum, DensityMatrix};
use crate::{Config, Tolerances};

/// Option overrides stored in a document; command-line flags take precedence.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocumentOptions {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance_rank: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance_verdict: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
}

impl DocumentOptions {
    /// `self` layered over `base`; set fields of `overrides` win over both.
    pub fn apply(&self, base: Config, overrides: &DocumentOptions) -> Config {
        let mut cfg = base;
        for o in [self, overrides] {
            if let Some(v) = o.tolerance_rank {
                cfg.tolerances.rank = v;
            }
            if let Some(v) = o.tolerance_verdict {
                cfg.tolerances.verdict = v;
            }
            if let Some(v) = o.seed {
                cfg.seed = v;
            }
            if let Some(v) = o.budget {
                cfg.budget = v;
            }
        }
        cfg
    }
}

/// A validated analysis document.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisDocument {
    pub system: Option<ControlSystem>,
    pub states: BTreeMap<String, DensityMatrix>,
    pub options: DocumentOptions,
}

impl AnalysisDocument {
    pub fn state(&self, name: &str) -> Result<&DensityMatrix> {
        self.states
            .get(name)
            .ok_or_else(|| Error::UnknownState(name.to_string()))
    }

    pub fn require_system(&self) -> Result<&ControlSystem> {
        self.system.as_ref().ok_or(Error::MissingSystem)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawEntry {
    Real(f64),
    Complex([f64; 2]),
}

type RawMatrix = Vec<Vec<RawEntry>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSystem {
    #[serde(rename = "H0")]
    h0: RawMatrix,
    #[serde(default)]
    controls: Vec<RawMatrix>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(default)]
    system: Option<RawSystem>,
    #[serde(default, deserialize_with = "unique_keys")]
    states: Vec<(String, RawMatrix)>,
    #[serde(default)]
    options: DocumentOptions,
}

fn unique_keys<'de, D>(d: D) -> std::result::Result<Vec<(String, RawMatrix)>, D::Error>
where
    D: Deserializer<'de>,
{
    struct Unique;
    impl<'de> Visitor<'de> for Unique {
        type Value = Vec<(String, RawMatrix)>;
        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("a map from state names to matrices")
        }
        fn visit_map<A: MapAccess<'de>>(
            self,
            mut map: A,
        ) -> std::result::Result<Self::Value, A::Error> {
            let mut out: Vec<(String, RawMatrix)> = Vec::new();
            while let Some((k, v)) = map.next_entry::<String, RawMatrix>()? {
                if out.iter().any(|(name, _)| *name == k) {
                    return Err(serde::de::Error::custom(format!(
                        "duplicate state name `{k}`"
                    )));
                }
                out.push((k, v));
            }
            Ok(out)
        }
    }
    d.deserialize_map(Unique)
}

fn build_matrix(name: &str, raw: &RawMatrix) -> Result<ComplexMatrix> {
    let n = raw.len();
    let invalid = |invariant: String| Error::Validation {
        matrix: name.to_string(),
        invariant,
    };
    if n == 0 {
        return Err(invalid("matrix is empty".into()));
    }
    for (r, row) in raw.iter().enumerate() {
        if row.len() != n {
            return Err(invalid(format!(
                "row {r} has {} entries, expected {n} (square)",
                row.len()
            )));
        }
    }
    let m = ComplexMatrix::from_fn(n, n, |r, c| match raw[r][c] {
        RawEntry::Real(x) => Complex64::new(x, 0.0),
        RawEntry::Complex([re, im]) => Complex64::new(re, im),
    });
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(invalid("entries must be finite".into()));
    }
    Ok(m)
}

/// Parses and validates a document.
pub fn parse_document(text: &str) -> Result<AnalysisDocument> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let tol = raw
        .options
        .apply(Config::default(), &DocumentOptions::default())
        .tolerances;

    let mut dim: Option<(usize, String)> = None;
    let mut check_dim = |name: &str, m: &ComplexMatrix| -> Result<()> {
        match &dim {
            Some((n, first)) if *n != m.nrows() => Err(Error::Validation {
                matrix: name.to_string(),
                invariant: format!("dimension {} differs from `{first}` ({n})", m.nrows()),
            }),
            Some(_) => Ok(()),
            None => {
                dim = Some((m.nrows(), name.to_string()));
                Ok(())
            }
        }
    };

    let system = match &raw.system {
        None => None,
        Some(rs) => {
            let named: Vec<(String, &RawMatrix)> = std::iter::once(("H0".to_string(), &rs.h0))
                .chain(
                    rs.controls
                        .iter()
                        .enumerate()
                        .map(|(k, m)| (format!("H{}", k + 1), m)),
                )
                .collect();
            let mut mats = Vec::with_capacity(named.len());
            for (name, rm) in &named {
                let m = build_matrix(name, rm)?;
                check_dim(name, &m)?;
                ControlSystem::with_tolerances(m.clone(), vec![], &tol).map_err(|e| {
                    Error::Validation {
                        matrix: name.clone(),
                        invariant: e.to_string(),
                    }
                })?;
                mats.push(m);
            }
            let h0 = mats.remove(0);
            Some(ControlSystem::with_tolerances(h0, mats, &tol)?)
        }
    };

    let mut states = BTreeMap::new();
    for (name, rm) in &raw.states {
        let m = build_matrix(name, rm)?;
        check_dim(name, &m)?;
        let rho = DensityMatrix::with_tolerances(m, &tol).map_err(|e| Error::Validation {
            matrix: name.clone(),
            invariant: e.to_string(),
        })?;
        states.insert(name.clone(), rho);
    }
    Ok(AnalysisDocument {
        system,
        states,
        options: raw.options,
    })
}

/// JSON rendering of a matrix as row-major `[re, im]` pairs.
pub fn matrix_json(m: &ComplexMatrix) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|r| {
                Value::Array(
                    (0..m.ncols())
                        .map(|c| json!([m[(r, c)].re, m[(r, c)].im]))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// Serializes a document in the input format.
pub fn serialize_document(doc: &AnalysisDocument) -> String {
    let mut root = serde_json::Map::new();
    if let Some(sys) = &doc.system {
        root.insert(
            "system".into(),
            json!({
                "H0": matrix_json(sys.drift()),
                "controls": sys.controls().iter().map(matrix_json).collect::<Vec<_>>(),
            }),
        );
    }
    let states: serde_json::Map<String, Value> = doc
        .states
        .iter()
        .map(|(k, v)| (k.clone(), matrix_json(v.matrix())))
        .collect();
    root.insert("states".into(), Value::Object(states));
    root.insert(
        "options".into(),
        serde_json::to_value(doc.options).expect("options serialize"),
    );
    serde_json::to_string_pretty(&Value::Object(root)).expect("document serializes")
}

/// One batch command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    AnalyzeGroup,
    FindJ,
    ClassifyState(String),
    Kinematic(String, String),
    Reachable(String, String),
    Transitive(String),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::AnalyzeGroup => "analyze-group",
            Command::FindJ => "find-j",
            Command::ClassifyState(_) => "classify-state",
            Command::Kinematic(..) => "kinematic",
            Command::Reachable(..) => "reachable",
            Command::Transitive(_) => "transitive",
        }
    }
}

/// Structured result, human summary and process exit code of a command.
#[derive(Debug, Clone, PartialEq)]
pub struct CommandOutput {
    pub json: Value,
    pub summary: String,
    /// 0 for definite answers, 2 for an inconclusive verdict, 1 for errors.
    pub exit_code: i32,
}

fn form_json(form: &InvariantForm) -> Value {
    json!({
        "symmetry": form.symmetry,
        "nullspace_dim": form.nullspace_dim,
        "matrix": matrix_json(&form.j),
    })
}

fn format_matrix(m: &ComplexMatrix) -> String {
    let mut s = String::new();
    for r in 0..m.nrows() {
        s.push_str("  [");
        for c in 0..m.ncols() {
            let z = m[(r, c)];
            let clean = |x: f64| if x.abs() < 1e-12 { 0.0 } else { x };
            let (re, im) = (clean(z.re), clean(z.im));
            if c > 0 {
                s.push_str(", ");
            }
            if im == 0.0 {
                let _ = write!(s, "{re:>7.4}");
            } else {
                let _ = write!(s, "{re:.4}{im:+.4}i");
            }
        }
        s.push_str("]\n");
    }
    s
}

/// Runs `command`; errors become an output with exit code 1.
pub fn run_command(command: &Command, doc: &AnalysisDocument, cfg: &Config) -> CommandOutput {
    match execute(command, doc, cfg) {
        Ok(out) => out,
        Err(e) => CommandOutput {
            json: json!({ "command": command.name(), "error": e.to_string() }),
            summary: format!("error: {e}"),
            exit_code: 1,
        },
    }
}

fn execute(command: &Command, doc: &AnalysisDocument, cfg: &Config) -> Result<CommandOutput> {
    let tol: &Tolerances = &cfg.tolerances;
    let name = command.name();
    match command {
        Command::AnalyzeGroup => {
            let system = doc.require_system()?;
            let (_, analysis) = analyze_system(system, tol)?;
            let g = &analysis.group;
            let mut summary = format!("{g}, dim L = {}\n", g.dim_algebra);
            if let Some(d) = &g.diagnostic {
                let _ = writeln!(summary, "note: {d}");
            }
            if let Some(f) = &analysis.form {
                let _ = write!(summary, "J̃ ({:?}):\n{}", f.symmetry, format_matrix(&f.j));
            }
            Ok(CommandOutput {
                json: json!({
                    "command": name,
                    "group": g.to_string(),
                    "kind": g.kind,
                    "central_u1": g.central_u1,
                    "dim_space": g.dim_space,
                    "dim_algebra": g.dim_algebra,
                    "diagnostic": g.diagnostic,
                    "form": analysis.form.as_ref().map(form_json),
                }),
                summary,
                exit_code: 0,
            })
        }
        Command::FindJ => {
            let system = doc.require_system()?;
            let xs: Vec<_> = traceless_generators(system)
                .into_iter()
                .filter(|x| x.norm() > 0.0)
                .collect();
            let result = if xs.is_empty() {
                Err(Error::NoForm)
            } else {
                find_invariant_form(&xs, tol)
            };
            match result {
                Ok(f) => {
                    let kind = match f.symmetry {
                        FormSymmetry::Antisymmetric => "antisymmetric (symplectic type)",
                        FormSymmetry::Symmetric => "symmetric (orthogonal type)",
                    };
                    Ok(CommandOutput {
                        summary: format!("J̃ is {kind}:\n{}", format_matrix(&f.j)),
                        json: json!({ "command": name, "form": form_json(&f), "residual": f.residual(&xs) }),
                        exit_code: 0,
                    })
                }
                Err(e @ (Error::NoForm | Error::AmbiguousForm(_) | Error::FormNotUnitary(_))) => {
                    Ok(CommandOutput {
                        summary: format!("no unique invariant form: {e}"),
                        json: json!({ "command": name, "form": null, "reason": e.to_string() }),
                        exit_code: 0,
                    })
                }
                Err(e) => Err(e),
            }
        }
        Command::ClassifyState(state) => {
            let rho = doc.state(state)?;
            let class = classify_state(rho, tol);
            let spec = spectrum(rho, tol);
            let mut summary = format!("{state}: {}", class.kind);
            if class.ambiguous {
                summary.push_str(" (warning: ambiguous eigenvalue clustering)");
            }
            Ok(CommandOutput {
                json: json!({
                    "command": name,
                    "state": state,
                    "kind": class.kind,
                    "ambiguous": class.ambiguous,
                    "spectrum": spec.clusters,
                }),
                summary,
                exit_code: 0,
            })
        }
        Command::Kinematic(a, b) => {
            let (ra, rb) = (doc.state(a)?, doc.state(b)?);
            let eq = kinematically_equivalent(ra, rb, tol)?;
            Ok(CommandOutput {
                json: json!({
                    "command": name,
                    "states": [a, b],
                    "kinematically_equivalent": eq,
                    "spectra": [spectrum(ra, tol).clusters, spectrum(rb, tol).clusters],
                }),
                summary: format!(
                    "{a} and {b} are {}kinematically equivalent",
                    if eq { "" } else { "not " }
                ),
                exit_code: 0,
            })
        }
        Command::Reachable(a, b) => {
            let system = doc.require_system()?;
            let (ra, rb) = (doc.state(a)?, doc.state(b)?);
            let (_, analysis) = analyze_system(system, tol)?;
            let v = decide_reachability(&analysis, ra, rb, cfg)?;
            let mut summary = format!("{a} -> {b} under {}: {}\n", analysis.group, v.status);
            for line in &v.narrative {
                let _ = writeln!(summary, "  - {line}");
            }
            if let Some(c) = &v.certificate {
                let _ = writeln!(summary, "certificate: {:?}", c.kind);
                if let CertificateData::WordTrace { word, left, right } = &c.data {
                    let _ = writeln!(summary, "  Tr {word}: {left:?} vs {right:?}");
                }
            }
            if let Some(u) = &v.witness {
                let _ = write!(summary, "witness U:\n{}", format_matrix(u));
            }
            Ok(CommandOutput {
                json: json!({
                    "command": name,
                    "states": [a, b],
                    "group": analysis.group.to_string(),
                    "status": v.status,
                    "witness": v.witness.as_ref().map(matrix_json),
                    "certificate": v.certificate,
                    "narrative": v.narrative,
                }),
                summary,
                exit_code: if v.status == VerdictStatus::Inconclusive {
                    2
                } else {
                    0
                },
            })
        }
        Command::Transitive(state) => {
            let system = doc.require_system()?;
            let rho = doc.state(state)?;
            let (basis, analysis) = analyze_system(system, tol)?;
            let class = classify_state(rho, tol);
            let by_class = transitive_on_class(&analysis.group.kind, class.kind);
            let report = transitive_by_dimension(rho, &basis, tol);
            let mut summary = format!(
                "{} on the class of {state} ({}): {}",
                analysis.group,
                class.kind,
                if by_class {
                    "transitive"
                } else {
                    "not transitive"
                }
            );
            let report_json = match &report {
                Ok(r) => {
                    let _ = write!(
                        summary,
                        "\ndimension count: {} - {} vs {} - {} -> {}",
                        r.dim_un,
                        r.dim_s,
                        r.dim_centralizer,
                        r.dim_intersection,
                        if r.transitive {
                            "transitive"
                        } else {
                            "not transitive"
                        }
                    );
                    serde_json::to_value(r).expect("report serializes")
                }
                Err(e) => {
                    let _ = write!(summary, "\ndimension count unavailable: {e}");
                    json!({ "error": e.to_string() })
                }
            };
            Ok(CommandOutput {
                json: json!({
                    "command": name,
                    "state": state,
                    "group": analysis.group.to_string(),
                    "state_kind": class.kind,
                    "transitive": by_class,
                    "dimension_report": report_json,
                }),
                summary,
                exit_code: 0,
            })
        }
    }
}
