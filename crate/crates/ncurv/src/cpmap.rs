//! Defect operators I − Φᵏ(I): traces and ranks, with a specialized exact
//! path per representation variant and a matrix-iteration path for dense
//! tuples.

use crate::error::{Error, Result};
use crate::matrix::{Backend, Mat};
use crate::operators::{CompressionKind, CompressionRep, DenseTuple, RowContraction};
use crate::scalar::Scalar;
use crate::word::basis_dimension;

#[derive(Clone, Debug)]
pub struct CpConfig {
    /// Refuse level k when the conceptual model dimension α(nᵏ−1)/(n−1)
    /// exceeds this many basis vectors.
    pub basis_cap: usize,
    /// Float-backend rank threshold: count singular values above
    /// rank_tol · max(1, σ_max). Ignored by the exact backend.
    pub rank_tol: f64,
    /// Largest Gram matrix the compression rank path will build.
    pub gram_cap: usize,
}

impl Default for CpConfig {
    fn default() -> Self {
        CpConfig { basis_cap: 200_000, rank_tol: 1e-9, gram_cap: 512 }
    }
}

#[derive(Clone, Debug)]
pub struct DefectRecord<S: Scalar> {
    pub k: usize,
    pub trace: S,
    pub rank: u64,
}

#[derive(Clone, Debug)]
pub struct DefectSequence<S: Scalar> {
    pub n: u8,
    pub records: Vec<DefectRecord<S>>,
    pub backend: &'static str,
    pub tol: f64,
}

/// Φ(X) = Σᵢ AᵢXAᵢ*.
pub fn phi_apply<S: Backend>(a: &DenseTuple<S>, x: &Mat<S>) -> Result<Mat<S>> {
    if x.rows != a.dim || x.cols != a.dim {
        return Err(Error::ShapeMismatch(format!(
            "phi input must be {0}x{0}",
            a.dim
        )));
    }
    let mut acc = Mat::zeros(a.dim, a.dim);
    for m in &a.mats {
        acc = acc.add(&m.mul(x)?.mul(&m.adjoint())?)?;
    }
    Ok(acc)
}

/// I − Φᵏ(I) as an explicit matrix.
pub fn dense_defect<S: Backend>(a: &DenseTuple<S>, k: usize) -> Result<Mat<S>> {
    let mut x = Mat::identity(a.dim);
    for _ in 0..k {
        x = phi_apply(a, &x)?;
    }
    Mat::identity(a.dim).sub(&x)
}

fn dim128(n: u8, k: usize) -> Option<u128> {
    let mut total: u128 = 0;
    let mut term: u128 = 1;
    for _ in 0..k {
        total = total.checked_add(term)?;
        term = term.checked_mul(n as u128)?;
    }
    Some(total)
}

fn conceptual_dim<S: Backend>(a: &RowContraction<S>, k: usize) -> Option<u128> {
    match a {
        RowContraction::Dense(d) => Some(d.dim as u128),
        RowContraction::LeftRegular { n, alpha } => {
            dim128(*n, k)?.checked_mul(*alpha as u128)
        }
        RowContraction::LeftRegularRestricted { n, min_len } => dim128(*n, k + min_len),
        RowContraction::DecayingAtomic(rep) => {
            dim128(rep.n, k)?.checked_mul(rep.d() as u128)
        }
        RowContraction::Compression(c) => dim128(c.n, k),
        RowContraction::DirectSum(a, b) => {
            conceptual_dim(a, k)?.checked_add(conceptual_dim(b, k)?)
        }
        RowContraction::UnitaryMix { inner, .. } => conceptual_dim(inner, k),
    }
}

fn check_cap<S: Backend>(a: &RowContraction<S>, k: usize, cfg: &CpConfig) -> Result<()> {
    let needed = conceptual_dim(a, k).unwrap_or(u128::MAX);
    if needed > cfg.basis_cap as u128 {
        Err(Error::ResourceCap { k, needed, cap: cfg.basis_cap })
    } else {
        Ok(())
    }
}

/// Trace of the restricted left-regular defect: the projection onto words
/// with min_len ≤ |w| < k + min_len, so Σ_{j=min_len}^{k+min_len−1} n^j.
fn restricted_count(n: u8, min_len: usize, k: usize) -> Result<u64> {
    let mut total: u64 = 0;
    for j in min_len..(k + min_len) {
        let p = (n as u64)
            .checked_pow(j as u32)
            .ok_or_else(|| Error::Overflow("restricted defect count".into()))?;
        total = total
            .checked_add(p)
            .ok_or_else(|| Error::Overflow("restricted defect count".into()))?;
    }
    Ok(total)
}

pub fn defect_trace<S: Backend>(
    a: &RowContraction<S>,
    k: usize,
    cfg: &CpConfig,
) -> Result<S> {
    if k < 1 {
        return Err(Error::InvalidParameter("defect level k must be >= 1".into()));
    }
    check_cap(a, k, cfg)?;
    match a {
        RowContraction::Dense(d) => Ok(dense_defect(d, k)?.trace()),
        RowContraction::LeftRegular { n, alpha } => {
            let per_copy = basis_dimension(*n, k)?;
            Ok(S::from_int((per_copy * *alpha as u64) as i64))
        }
        RowContraction::LeftRegularRestricted { n, min_len } => {
            Ok(S::from_int(restricted_count(*n, *min_len, k)? as i64))
        }
        RowContraction::DecayingAtomic(rep) => Ok(rep.defect_trace(k)),
        RowContraction::Compression(c) => c.defect_trace(k),
        RowContraction::DirectSum(x, y) => {
            Ok(defect_trace(x, k, cfg)? + defect_trace(y, k, cfg)?)
        }
        // level-wise invariance under unitary mixing: Φ_AU^k(I) = Φ_A^k(I)
        RowContraction::UnitaryMix { inner, .. } => defect_trace(inner, k, cfg),
    }
}

pub fn defect_rank<S: Backend>(
    a: &RowContraction<S>,
    k: usize,
    cfg: &CpConfig,
) -> Result<u64> {
    if k < 1 {
        return Err(Error::InvalidParameter("defect level k must be >= 1".into()));
    }
    check_cap(a, k, cfg)?;
    match a {
        RowContraction::Dense(d) => {
            Ok(S::mat_rank(&dense_defect(d, k)?, cfg.rank_tol) as u64)
        }
        RowContraction::LeftRegular { n, alpha } => {
            Ok(basis_dimension(*n, k)? * *alpha as u64)
        }
        RowContraction::LeftRegularRestricted { n, min_len } => {
            restricted_count(*n, *min_len, k)
        }
        RowContraction::DecayingAtomic(rep) => rep.defect_rank(k),
        RowContraction::Compression(c) => c.defect_rank(k, cfg.rank_tol, cfg.gram_cap),
        RowContraction::DirectSum(x, y) => {
            Ok(defect_rank(x, k, cfg)? + defect_rank(y, k, cfg)?)
        }
        RowContraction::UnitaryMix { inner, .. } => defect_rank(inner, k, cfg),
    }
}

/// Level traces t_1..t_{k_max} only; the dense path iterates Φ once per
/// level instead of from scratch.
pub fn trace_sequence<S: Backend>(
    a: &RowContraction<S>,
    k_max: usize,
    cfg: &CpConfig,
) -> Result<Vec<S>> {
    if k_max < 1 {
        return Err(Error::InvalidParameter("k_max must be >= 1".into()));
    }
    check_cap(a, k_max, cfg)?;
    match a {
        RowContraction::Dense(d) => {
            let mut x = Mat::identity(d.dim);
            let mut out = Vec::with_capacity(k_max);
            for _ in 1..=k_max {
                x = phi_apply(d, &x)?;
                out.push(Mat::identity(d.dim).sub(&x)?.trace());
            }
            Ok(out)
        }
        _ => (1..=k_max).map(|k| defect_trace(a, k, cfg)).collect(),
    }
}

/// Level ranks rk_1..rk_{k_max} only.
pub fn rank_sequence<S: Backend>(
    a: &RowContraction<S>,
    k_max: usize,
    cfg: &CpConfig,
) -> Result<Vec<u64>> {
    if k_max < 1 {
        return Err(Error::InvalidParameter("k_max must be >= 1".into()));
    }
    check_cap(a, k_max, cfg)?;
    match a {
        RowContraction::Dense(d) => {
            let mut x = Mat::identity(d.dim);
            let mut out = Vec::with_capacity(k_max);
            for _ in 1..=k_max {
                x = phi_apply(d, &x)?;
                let defect = Mat::identity(d.dim).sub(&x)?;
                out.push(S::mat_rank(&defect, cfg.rank_tol) as u64);
            }
            Ok(out)
        }
        _ => (1..=k_max).map(|k| defect_rank(a, k, cfg)).collect(),
    }
}

pub fn defect_sequence<S: Backend>(
    a: &RowContraction<S>,
    k_max: usize,
    cfg: &CpConfig,
) -> Result<DefectSequence<S>> {
    if k_max < 1 {
        return Err(Error::InvalidParameter("k_max must be >= 1".into()));
    }
    check_cap(a, k_max, cfg)?;
    let mut records = Vec::with_capacity(k_max);
    match a {
        RowContraction::Dense(d) => {
            // iterate Φ once per level instead of from scratch
            let mut x = Mat::identity(d.dim);
            for k in 1..=k_max {
                x = phi_apply(d, &x)?;
                let defect = Mat::identity(d.dim).sub(&x)?;
                records.push(DefectRecord {
                    k,
                    trace: defect.trace(),
                    rank: S::mat_rank(&defect, cfg.rank_tol) as u64,
                });
            }
        }
        _ => {
            for k in 1..=k_max {
                records.push(DefectRecord {
                    k,
                    trace: defect_trace(a, k, cfg)?,
                    rank: defect_rank(a, k, cfg)?,
                });
            }
        }
    }
    // the defects increase, so their traces must
    for w in records.windows(2) {
        if w[1].trace.cmp_real(&w[0].trace) == Some(std::cmp::Ordering::Less) {
            return Err(Error::InvalidParameter(format!(
                "non-monotone defect trace between levels {} and {}",
                w[0].k, w[1].k
            )));
        }
    }
    Ok(DefectSequence { n: a.n(), records, backend: S::TAG, tol: cfg.rank_tol })
}

/// max ⟨Φᵏ(I)x, x⟩ over a per-variant probe set of unit vectors:
/// basis words of length < k (dense coordinates / left-regular / monomial
/// compressions), ring vectors (atomic), or the generators and extras of a
/// generator-described compression. Tends to 0 in k exactly for pure
/// contractions.
pub fn purity_indicator<S: Backend>(
    a: &RowContraction<S>,
    k: usize,
    cfg: &CpConfig,
) -> Result<S> {
    if k < 1 {
        return Err(Error::InvalidParameter("purity level k must be >= 1".into()));
    }
    check_cap(a, k, cfg)?;
    match a {
        RowContraction::Dense(d) => {
            let mut x = Mat::identity(d.dim);
            for _ in 0..k {
                x = phi_apply(d, &x)?;
            }
            let mut best = S::zero();
            for i in 0..d.dim {
                let v = x[(i, i)].clone();
                if v.cmp_real(&best) == Some(std::cmp::Ordering::Greater) {
                    best = v;
                }
            }
            Ok(best)
        }
        RowContraction::LeftRegular { .. } => Ok(S::zero()),
        RowContraction::LeftRegularRestricted { .. } => Ok(S::zero()),
        RowContraction::DecayingAtomic(rep) => Ok(rep.purity_indicator(k)),
        RowContraction::Compression(c) => compression_purity(c, k),
        RowContraction::DirectSum(x, y) => {
            let px = purity_indicator(x, k, cfg)?;
            let py = purity_indicator(y, k, cfg)?;
            Ok(if py.cmp_real(&px) == Some(std::cmp::Ordering::Greater) {
                py
            } else {
                px
            })
        }
        RowContraction::UnitaryMix { inner, .. } => purity_indicator(inner, k, cfg),
    }
}

fn compression_purity<S: Scalar>(c: &CompressionRep<S>, k: usize) -> Result<S> {
    // ⟨Φᵏ(I)x, x⟩ = ‖(I − Q_k)x‖² for any unit x in the domain, by
    // co-invariance; probe with each orbit generator and extra vector.
    match &c.kind {
        CompressionKind::Monomial { .. } => Ok(S::zero()),
        CompressionKind::ComplementOfOrbits { .. } => Ok(S::zero()),
        CompressionKind::SpannedDomain { extras, gens, .. } => {
            let mut best = S::zero();
            for e in extras {
                let v = e.norm_sq() - e.truncate(k).norm_sq();
                if v.cmp_real(&best) == Some(std::cmp::Ordering::Greater) {
                    best = v;
                }
            }
            for g in gens {
                let v = g.norm_sq() - g.norm_sq_below(k);
                if v.cmp_real(&best) == Some(std::cmp::Ordering::Greater) {
                    best = v;
                }
            }
            Ok(best)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{DecayingAtomicRep, WordSet};
    use crate::scalar::{Exact, F64};
    use crate::word::Word;

    fn cfg() -> CpConfig {
        CpConfig::default()
    }

    fn truncated_left_regular(n: u8, depth: usize) -> DenseTuple<Exact> {
        // Q_depth L Q_depth as explicit 0/1 matrices on words of length < depth
        let basis = crate::fock::TruncatedBasis::new(n, depth, 1).unwrap();
        let dim = basis.dim();
        let mats = (1..=n)
            .map(|i| {
                Mat::from_fn(dim, dim, |row, col| {
                    let (_, w) = basis.at(col);
                    let target = w.prepend(i);
                    match basis.index_of(0, &target) {
                        Some(r) if r == row => Exact::one(),
                        _ => Exact::zero(),
                    }
                })
            })
            .collect();
        DenseTuple::new(mats).unwrap()
    }

    #[test]
    fn left_regular_sequence_counts() {
        let l = RowContraction::<Exact>::LeftRegular { n: 2, alpha: 1 };
        let seq = defect_sequence(&l, 4, &cfg()).unwrap();
        let traces: Vec<i64> = seq
            .records
            .iter()
            .map(|r| {
                let (re, _) = r.trace.to_f64();
                re as i64
            })
            .collect();
        assert_eq!(traces, vec![1, 3, 7, 15]);
        assert!(seq.records.iter().all(|r| {
            let (re, _) = r.trace.to_f64();
            re as u64 == r.rank
        }));
    }

    #[test]
    fn zero_tuple_defect_is_identity() {
        let z = Mat::<F64>::zeros(3, 3);
        let a = RowContraction::Dense(DenseTuple::new(vec![z.clone(), z]).unwrap());
        let seq = defect_sequence(&a, 3, &cfg()).unwrap();
        for r in &seq.records {
            assert!((r.trace.re - 3.0).abs() < 1e-12);
            assert_eq!(r.rank, 3);
        }
    }

    #[test]
    fn key_identity_on_truncated_left_regular() {
        // I − Φ^{k+1}(I) = (I − Φ(I)) + Φ(I − Φᵏ(I)), exactly
        let a = truncated_left_regular(2, 3);
        for k in 1..5usize {
            let lhs = dense_defect(&a, k + 1).unwrap();
            let d1 = dense_defect(&a, 1).unwrap();
            let dk = dense_defect(&a, k).unwrap();
            let rhs = d1.add(&phi_apply(&a, &dk).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn truncation_tuple_rank_settles_at_three() {
        // n=2, depth l=2: the defect rank is (n^l−1)/(n−1) = 3 for all k ≥ 2
        let a = RowContraction::Dense(truncated_left_regular(2, 2));
        for k in 2..7usize {
            assert_eq!(defect_rank(&a, k, &cfg()).unwrap(), 3);
        }
        // and its normalized trace tends to zero
        let t6 = defect_trace(&a, 6, &cfg()).unwrap();
        let (re, _) = t6.to_f64();
        assert!(re / 64.0 < 0.06);
    }

    #[test]
    fn atomic_trace_example() {
        let rep = DecayingAtomicRep::<Exact>::from_r(
            2,
            Word::letter(1),
            vec![Exact::from_ratio(1, 2)],
        )
        .unwrap();
        let a = RowContraction::DecayingAtomic(rep);
        assert_eq!(defect_trace(&a, 2, &cfg()).unwrap(), Exact::from_ratio(5, 4));
        let p = purity_indicator(&a, 5, &cfg()).unwrap();
        assert_eq!(p, Exact::from_ratio(1, 32));
    }

    #[test]
    fn restricted_left_regular_counts() {
        let a = RowContraction::<Exact>::LeftRegularRestricted { n: 2, min_len: 1 };
        assert_eq!(defect_trace(&a, 3, &cfg()).unwrap(), Exact::from_int(14));
        assert_eq!(defect_rank(&a, 3, &cfg()).unwrap(), 14);
    }

    #[test]
    fn direct_sum_additivity() {
        let l = RowContraction::<Exact>::LeftRegular { n: 2, alpha: 1 };
        let both = crate::operators::direct_sum(l.clone(), l.clone()).unwrap();
        for k in 1..6usize {
            let one = defect_trace(&l, k, &cfg()).unwrap();
            let two = defect_trace(&both, k, &cfg()).unwrap();
            assert_eq!(two, one.clone() + one);
        }
    }

    #[test]
    fn resource_cap_enforced() {
        let l = RowContraction::<Exact>::LeftRegular { n: 2, alpha: 1 };
        let tight = CpConfig { basis_cap: 10, ..CpConfig::default() };
        assert!(matches!(
            defect_trace(&l, 5, &tight),
            Err(Error::ResourceCap { .. })
        ));
    }

    #[test]
    fn monomial_compression_purity_is_zero() {
        let c = crate::operators::CompressionRep::<Exact>::monomial(
            2,
            WordSet::Chain { letter: 1 },
        )
        .unwrap();
        let a = RowContraction::Compression(c);
        assert!(purity_indicator(&a, 4, &cfg()).unwrap().is_zero());
    }
}
