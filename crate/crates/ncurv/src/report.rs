//! Machine-readable run reports: the full level-by-level defect sequence,
//! the invariant estimates, and (in verification mode) expected-vs-computed
//! deltas. JSON reports are schema-versioned and round-trip through serde;
//! sweep output is RFC-4180 CSV.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::catalog::EntryVerification;
use crate::cpmap::{defect_sequence, CpConfig};
use crate::error::Result;
use crate::invariants::{hierarchy_report, InvConfig, InvariantEstimate};
use crate::matrix::Backend;
use crate::operators::RowContraction;
use crate::scalar::Scalar;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BackendChoice {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunConfig {
    pub k_max: usize,
    pub backend: BackendChoice,
    /// Float-backend rank threshold.
    pub rank_tolerance: f64,
    /// Convergence threshold on consecutive normalized values.
    pub convergence_gap: f64,
    pub basis_cap: usize,
    pub format: OutputFormat,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            k_max: 12,
            backend: BackendChoice::Exact,
            rank_tolerance: 1e-9,
            convergence_gap: 1e-6,
            basis_cap: 200_000,
            format: OutputFormat::Json,
            seed: 0,
        }
    }
}

impl RunConfig {
    pub fn inv_config(&self) -> InvConfig {
        InvConfig {
            cp: CpConfig {
                basis_cap: self.basis_cap,
                rank_tol: self.rank_tolerance,
                ..CpConfig::default()
            },
            gap_threshold: self.convergence_gap,
        }
    }
}

/// A scalar in a report: exact textual form plus its float approximation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScalarOut {
    pub repr: String,
    pub re: f64,
    pub im: f64,
}

impl ScalarOut {
    pub fn of<S: Scalar>(s: &S) -> Self {
        let (re, im) = s.to_f64();
        ScalarOut { repr: s.to_string(), re, im }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LevelRow {
    pub k: usize,
    pub trace: ScalarOut,
    pub rank: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EstimateOut {
    pub value: ScalarOut,
    pub upper_bound: ScalarOut,
    pub k_used: usize,
    pub cauchy_gap: f64,
    pub converged: bool,
    pub aitken: Option<f64>,
}

impl EstimateOut {
    pub fn of<S: Scalar>(e: &InvariantEstimate<S>) -> Self {
        EstimateOut {
            value: ScalarOut::of(&e.value),
            upper_bound: ScalarOut::of(&e.upper_bound),
            k_used: e.k_used,
            cauchy_gap: e.cauchy_gap,
            converged: e.converged,
            aitken: e.aitken,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InvariantsOut {
    pub curvature: EstimateOut,
    pub euler: EstimateOut,
    pub pure_rank: u64,
    pub hierarchy_ok: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub backend: String,
    pub config: RunConfig,
    /// Echo of the input representation spec.
    pub input: serde_json::Value,
    pub levels: Vec<LevelRow>,
    pub invariants: InvariantsOut,
    pub timing_ms: f64,
}

/// Full compute run: defect sequence to k_max plus invariant estimates.
pub fn compute_report<S: Backend>(
    input: serde_json::Value,
    a: &RowContraction<S>,
    rc: &RunConfig,
) -> Result<Report> {
    let start = Instant::now();
    let cfg = rc.inv_config();
    let seq = defect_sequence(a, rc.k_max, &cfg.cp)?;
    let inv = hierarchy_report(a, rc.k_max, &cfg)?;
    let levels = seq
        .records
        .iter()
        .map(|r| LevelRow { k: r.k, trace: ScalarOut::of(&r.trace), rank: r.rank })
        .collect();
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        backend: S::TAG.to_string(),
        config: rc.clone(),
        input,
        levels,
        invariants: InvariantsOut {
            curvature: EstimateOut::of(&inv.curvature),
            euler: EstimateOut::of(&inv.euler),
            pure_rank: inv.pure_rank,
            hierarchy_ok: inv.hierarchy_ok,
        },
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckOut {
    pub label: String,
    pub expected: f64,
    pub computed: f64,
    pub upper_bound: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyEntryOut {
    pub name: String,
    /// "pass", "fail", or "skipped" (backend cannot realize the entry).
    pub status: String,
    pub checks: Vec<CheckOut>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub suite: String,
    pub backend: String,
    pub entries: Vec<VerifyEntryOut>,
    pub ok: bool,
    pub timing_ms: f64,
}

pub fn verify_entry_out(v: &EntryVerification) -> VerifyEntryOut {
    VerifyEntryOut {
        name: v.name.clone(),
        status: if v.all_pass() { "pass" } else { "fail" }.into(),
        checks: v
            .checks
            .iter()
            .map(|c| CheckOut {
                label: c.label.clone(),
                expected: c.expected,
                computed: c.computed,
                upper_bound: c.upper_bound,
                pass: c.pass,
            })
            .collect(),
    }
}

/// RFC-4180 field quoting: quote when a field contains a comma, quote, or
/// line break; double embedded quotes.
pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') || s.contains('\r') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_rows(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(
        &header.iter().map(|h| csv_field(h)).collect::<Vec<_>>().join(","),
    );
    out.push_str("\r\n");
    for row in rows {
        out.push_str(
            &row.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(","),
        );
        out.push_str("\r\n");
    }
    out
}
