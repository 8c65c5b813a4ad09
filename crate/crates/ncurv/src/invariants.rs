//! From defect sequences to invariant estimates with honest error
//! reporting: K(A), χ(A), pure rank, K̃(M), hierarchy and freeness verdicts.

use std::cmp::Ordering;

use crate::cpmap::{defect_sequence, purity_indicator, CpConfig, DefectSequence};
use crate::error::{Error, Result};
use crate::matrix::Backend;
use crate::operators::{InvariantSubspace, RowContraction};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct InvariantEstimate<S: Scalar> {
    /// (n−1) · (level-k_used quantity) / n^{k_used}.
    pub value: S,
    /// One-sided bound: the limit is ≤ value + pure_rank/n^{k_used}
    /// (generator count in place of pure rank for K̃).
    pub upper_bound: S,
    pub k_used: usize,
    /// |value(k) − value(k−1)| of the normalized sequence.
    pub cauchy_gap: f64,
    pub converged: bool,
    /// Aitken Δ² extrapolation of the normalized tail — a diagnostic only.
    pub aitken: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct InvariantReport<S: Scalar> {
    pub curvature: InvariantEstimate<S>,
    pub euler: InvariantEstimate<S>,
    pub pure_rank: u64,
    pub hierarchy_ok: bool,
}

#[derive(Clone, Debug)]
pub struct InvConfig {
    pub cp: CpConfig,
    /// Convergence threshold on consecutive normalized values.
    pub gap_threshold: f64,
}

impl Default for InvConfig {
    fn default() -> Self {
        InvConfig { cp: CpConfig::default(), gap_threshold: 1e-6 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FreenessVerdict {
    FreeConsistent,
    NotFree,
    Inconclusive,
}

impl std::fmt::Display for FreenessVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FreenessVerdict::FreeConsistent => "free-consistent",
            FreenessVerdict::NotFree => "not-free",
            FreenessVerdict::Inconclusive => "inconclusive",
        })
    }
}

pub fn pure_rank<S: Backend>(a: &RowContraction<S>, cfg: &InvConfig) -> Result<u64> {
    crate::cpmap::defect_rank(a, 1, &cfg.cp)
}

fn n_pow<S: Scalar>(n: u8, k: usize) -> S {
    S::from_int(n as i64).pow(k as u32)
}

fn aitken(seq: &[f64]) -> Option<f64> {
    let m = seq.len();
    if m < 3 {
        return None;
    }
    let (x0, x1, x2) = (seq[m - 3], seq[m - 2], seq[m - 1]);
    let denom = (x2 - x1) - (x1 - x0);
    if denom.abs() < 1e-300 {
        return None;
    }
    Some(x2 - (x2 - x1).powi(2) / denom)
}

/// Builds an estimate from the level-k quantities t_1..t_{k_max}:
/// value = (n−1)·t_k/n^k, with the one-sided tail bound value + head/n^k.
fn estimate_from_levels<S: Scalar>(
    n: u8,
    levels: &[S],
    head: u64,
    gap_threshold: f64,
) -> InvariantEstimate<S> {
    let k_used = levels.len();
    let normalized: Vec<S> = levels
        .iter()
        .enumerate()
        .map(|(idx, t)| {
            let k = idx + 1;
            (S::from_int(n as i64 - 1) * t.clone())
                .div(&n_pow(n, k))
                .expect("n^k is nonzero")
        })
        .collect();
    let value = normalized.last().cloned().unwrap_or_else(S::zero);
    let upper_bound = value.clone()
        + S::from_int(head as i64)
            .div(&n_pow(n, k_used))
            .expect("n^k is nonzero");
    let floats: Vec<f64> = normalized.iter().map(|v| v.re_f64()).collect();
    let cauchy_gap = if floats.len() >= 2 {
        (floats[floats.len() - 1] - floats[floats.len() - 2]).abs()
    } else {
        f64::INFINITY
    };
    InvariantEstimate {
        value,
        upper_bound,
        k_used,
        cauchy_gap,
        converged: cauchy_gap < gap_threshold,
        aitken: aitken(&floats),
    }
}

pub fn curvature_from_sequence<S: Scalar>(
    seq: &DefectSequence<S>,
    pure_rank: u64,
    gap_threshold: f64,
) -> InvariantEstimate<S> {
    let levels: Vec<S> = seq.records.iter().map(|r| r.trace.clone()).collect();
    estimate_from_levels(seq.n, &levels, pure_rank, gap_threshold)
}

pub fn euler_from_sequence<S: Scalar>(
    seq: &DefectSequence<S>,
    pure_rank: u64,
    gap_threshold: f64,
) -> InvariantEstimate<S> {
    let levels: Vec<S> = seq
        .records
        .iter()
        .map(|r| S::from_int(r.rank as i64))
        .collect();
    estimate_from_levels(seq.n, &levels, pure_rank, gap_threshold)
}

pub fn curvature<S: Backend>(
    a: &RowContraction<S>,
    k_max: usize,
    cfg: &InvConfig,
) -> Result<InvariantEstimate<S>> {
    let levels = crate::cpmap::trace_sequence(a, k_max, &cfg.cp)?;
    let p = pure_rank(a, cfg)?;
    Ok(estimate_from_levels(a.n(), &levels, p, cfg.gap_threshold))
}

pub fn euler<S: Backend>(
    a: &RowContraction<S>,
    k_max: usize,
    cfg: &InvConfig,
) -> Result<InvariantEstimate<S>> {
    let ranks = crate::cpmap::rank_sequence(a, k_max, &cfg.cp)?;
    let levels: Vec<S> = ranks.iter().map(|&r| S::from_int(r as i64)).collect();
    let p = pure_rank(a, cfg)?;
    Ok(estimate_from_levels(a.n(), &levels, p, cfg.gap_threshold))
}

/// K̃(M) for an L-invariant subspace given by wandering generators:
/// (n−1)·tr(P_M Q_k P_M)/n^k. The normalized sequence increases, and the
/// tail adds at most one n^{−k}-geometric series per generator, whence the
/// one-sided bound value + J/n^k.
pub fn tilde_curvature<S: Scalar>(
    m: &InvariantSubspace<S>,
    k_max: usize,
    cfg: &InvConfig,
) -> Result<InvariantEstimate<S>> {
    if k_max < 1 {
        return Err(Error::InvalidParameter("k_max must be >= 1".into()));
    }
    let levels: Vec<S> = (1..=k_max)
        .map(|k| m.trace_below(k))
        .collect::<Result<_>>()?;
    Ok(estimate_from_levels(
        m.n,
        &levels,
        m.generator_count() as u64,
        cfg.gap_threshold,
    ))
}

pub fn hierarchy_report<S: Backend>(
    a: &RowContraction<S>,
    k_max: usize,
    cfg: &InvConfig,
) -> Result<InvariantReport<S>> {
    let seq = defect_sequence(a, k_max, &cfg.cp)?;
    let p = pure_rank(a, cfg)?;
    let curvature = curvature_from_sequence(&seq, p, cfg.gap_threshold);
    let euler = euler_from_sequence(&seq, p, cfg.gap_threshold);
    let eps = if S::EXACT { 0.0 } else { cfg.cp.rank_tol };
    // level-wise: defects are positive contractions, so trace ≤ rank
    let levels_ok = seq.records.iter().all(|r| {
        let (t, _) = r.trace.to_f64();
        t <= r.rank as f64 + eps
    });
    let k = curvature.value.re_f64();
    let x = euler.value.re_f64();
    let hierarchy_ok =
        levels_ok && k >= -eps && k <= x + eps && x <= p as f64 + eps;
    Ok(InvariantReport { curvature, euler, pure_rank: p, hierarchy_ok })
}

/// Freeness criterion for pure finite-rank tuples: K(A) = pure rank iff A
/// is unitarily equivalent to L^{(pure rank)}. At finite k we can only
/// check the exact left-regular signature tr_k = p(n^k−1)/(n−1) (verdict
/// free-consistent) or a separating upper bound (verdict not-free).
pub fn freeness_test<S: Backend>(
    a: &RowContraction<S>,
    k_max: usize,
    cfg: &InvConfig,
) -> Result<FreenessVerdict> {
    let p = pure_rank(a, cfg)?;
    if p == 0 {
        return Err(Error::InvalidParameter(
            "freeness criterion needs a non-zero pure contraction (pure rank 0)".into(),
        ));
    }
    let purity = purity_indicator(a, k_max, &cfg.cp)?.re_f64();
    if purity >= 1.0 - 1e-9 {
        return Err(Error::InvalidParameter(format!(
            "freeness criterion needs a pure contraction; probe value {purity} at level {k_max}"
        )));
    }
    let seq = defect_sequence(a, k_max, &cfg.cp)?;
    let eps = if S::EXACT { 0.0 } else { cfg.cp.rank_tol };
    let signature = seq.records.iter().all(|r| {
        let expect = S::from_int(p as i64)
            * (n_pow::<S>(seq.n, r.k) - S::one())
                .div(&S::from_int(seq.n as i64 - 1))
                .expect("n ≥ 2");
        match r.trace.cmp_real(&expect) {
            Some(Ordering::Equal) => true,
            _ => (r.trace.re_f64() - expect.re_f64()).abs() <= eps * (1.0 + p as f64),
        }
    });
    if signature {
        return Ok(FreenessVerdict::FreeConsistent);
    }
    let est = curvature_from_sequence(&seq, p, cfg.gap_threshold);
    if est.upper_bound.re_f64() < p as f64 - eps {
        return Ok(FreenessVerdict::NotFree);
    }
    Ok(FreenessVerdict::Inconclusive)
}
