//! Serializable report types.
//!
//! The core crate stays serde-free, so every reported structure has a JSON
//! mirror here. Field order is fixed by the struct declarations and no maps
//! are involved, which makes reports byte-stable: the same input, fields,
//! and seed always produce the same bytes.

use bblab_core::bounds::{BoundCheck, BoundReport, Verdict};
use bblab_core::facering::GradedQuotient;
use bblab_core::suites::SuiteReport;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub label: String,
    /// "pass", "fail", or "n/a".
    pub verdict: String,
    /// Exact decimal (or reduced rational) operand strings; no precision
    /// loss for values beyond the integer range of JSON readers.
    pub left: String,
    pub right: String,
    pub slack: String,
    pub tight: bool,
}

impl CheckJson {
    pub fn passed(&self) -> bool {
        self.verdict != "fail"
    }

    fn verdict_str(v: Verdict) -> String {
        match v {
            Verdict::Pass => "pass".to_string(),
            Verdict::Fail => "fail".to_string(),
            Verdict::NotApplicable => "n/a".to_string(),
        }
    }

    /// A `left <= right` comparison over machine integers.
    pub fn le(label: &str, left: i128, right: i128) -> Self {
        CheckJson {
            label: label.to_string(),
            verdict: if left <= right { "pass" } else { "fail" }.to_string(),
            left: left.to_string(),
            right: right.to_string(),
            slack: (right - left).to_string(),
            tight: left == right,
        }
    }

    /// A `left = right` identity over machine integers.
    pub fn eq(label: &str, left: i128, right: i128) -> Self {
        CheckJson {
            label: label.to_string(),
            verdict: if left == right { "pass" } else { "fail" }.to_string(),
            left: left.to_string(),
            right: right.to_string(),
            slack: (right - left).to_string(),
            tight: left == right,
        }
    }
}

impl From<&BoundCheck> for CheckJson {
    fn from(c: &BoundCheck) -> Self {
        CheckJson {
            label: c.label.clone(),
            verdict: CheckJson::verdict_str(c.verdict),
            left: c.left.clone(),
            right: c.right.clone(),
            slack: c.slack.clone(),
            tight: c.tight(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<CheckJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ReportJson {
    pub fn new(name: &str) -> Self {
        ReportJson { name: name.to_string(), passed: true, checks: Vec::new(), notes: Vec::new() }
    }

    pub fn push(&mut self, check: CheckJson) {
        self.passed &= check.passed();
        self.checks.push(check);
    }
}

impl From<&BoundReport> for ReportJson {
    fn from(r: &BoundReport) -> Self {
        ReportJson {
            name: r.name.clone(),
            passed: r.passed(),
            checks: r.checks.iter().map(CheckJson::from).collect(),
            notes: r.notes.clone(),
        }
    }
}

/// Face-ring quotient dimensions with every seed that produced them; the
/// same seeds reproduce the identical object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub p: u64,
    pub seed: u64,
    pub lsop_seed: u64,
    pub omega_seed: u64,
    pub tries: u32,
    pub q: Vec<usize>,
    pub s: Vec<usize>,
    pub k: Vec<usize>,
    pub hpp: Vec<usize>,
}

impl From<&GradedQuotient> for AlgebraJson {
    fn from(g: &GradedQuotient) -> Self {
        AlgebraJson {
            p: g.p,
            seed: g.seed,
            lsop_seed: g.lsop_seed,
            omega_seed: g.omega_seed,
            tries: g.tries,
            q: g.q.clone(),
            s: g.s.clone(),
            k: g.k.clone(),
            hpp: g.hpp.clone(),
        }
    }
}

/// Face-count enumeration of one complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileJson {
    pub n: usize,
    pub d: usize,
    pub dim: i64,
    pub f: Vec<i64>,
    pub h: Vec<i64>,
    pub g: Vec<i64>,
    pub euler_characteristic: i64,
    pub pure: bool,
    pub semi_eulerian: bool,
    /// Largest m such that every m-subset of the vertices is a face.
    pub neighborly: usize,
}

/// Homology, classifier flags, algebra, and bound checks over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSection {
    pub p: u64,
    /// Reduced Betti numbers: entry `i` is `beta_{i-1}`.
    pub betti: Vec<usize>,
    pub cohen_macaulay: bool,
    pub buchsbaum: bool,
    pub homology_manifold: bool,
    pub orientable: bool,
    pub h_prime: Vec<i64>,
    pub h_dprime: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraJson>,
    pub bounds: Vec<ReportJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexSection {
    pub profile: ProfileJson,
    pub per_field: Vec<FieldSection>,
}

/// Rank enumeration of a poset and its order complex, with the socle bound
/// checked through the order-complex path over each field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFieldSection {
    pub p: u64,
    pub betti: Vec<usize>,
    pub h_prime: Vec<i64>,
    pub h_dprime: Vec<i64>,
    pub bounds: Vec<ReportJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetProfileJson {
    pub d: usize,
    pub cells: usize,
    pub f: Vec<i64>,
    pub h: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetSection {
    pub profile: PosetProfileJson,
    pub order_complex: ProfileJson,
    pub per_field: Vec<PosetFieldSection>,
}

/// The full output of `analyze`: input identity, seeds, enumeration,
/// per-field classifiers and bound reports. Self-contained — re-running
/// with the embedded seed and field list reproduces it byte for byte.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: String,
    pub source: String,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub seed: u64,
    pub fields: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complex: Option<ComplexSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poset: Option<PosetSection>,
}

impl AnalysisReport {
    /// True when no bound report in any field section failed.
    pub fn passed(&self) -> bool {
        let complex_ok = self
            .complex
            .iter()
            .all(|s| s.per_field.iter().all(|f| f.bounds.iter().all(|r| r.passed)));
        let poset_ok = self
            .poset
            .iter()
            .all(|s| s.per_field.iter().all(|f| f.bounds.iter().all(|r| r.passed)));
        complex_ok && poset_ok
    }
}

/// JSON mirror of a verification suite run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteJson {
    pub suite: String,
    pub seed: u64,
    pub passed: bool,
    pub reports: Vec<ReportJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl From<&SuiteReport> for SuiteJson {
    fn from(s: &SuiteReport) -> Self {
        SuiteJson {
            suite: s.suite.clone(),
            seed: s.seed,
            passed: s.passed(),
            reports: s.reports.iter().map(ReportJson::from).collect(),
            notes: s.notes.clone(),
        }
    }
}
