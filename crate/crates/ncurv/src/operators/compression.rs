//! Compressions of the left regular representation to co-invariant
//! subspaces, described by generators of the complementary invariant
//! subspace, by an explicit orthonormal spanning family, or by a monomial
//! (suffix-closed) word set.
//!
//! None of these ever materializes the subspace: traces come from truncated
//! generator norms, ranks from structural counts or small Gram matrices.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::fock::{inner_product, FockVector};
use crate::matrix::{Backend, Mat};
use crate::scalar::Scalar;
use crate::word::{basis_dimension, enumerate_words, Word};

/// A cyclic-subspace generator ζ: either finitely supported, or the
/// analytic geometric family √(1−r)·Σ_k λ̄^k ξ_{letter^k} evaluable to any
/// truncation depth.
#[derive(Clone, Debug)]
pub enum Generator<S: Scalar> {
    Finite(FockVector<S>),
    Geometric { letter: u8, lambda: S, r: S },
}

impl<S: Scalar> Generator<S> {
    pub fn geometric(letter: u8, lambda: S) -> Result<Self> {
        let r = lambda.abs_sq();
        if r.cmp_real(&S::one()) != Some(std::cmp::Ordering::Less) {
            return Err(Error::InvalidParameter(
                "geometric generator needs |lambda| < 1".into(),
            ));
        }
        Ok(Generator::Geometric { letter, lambda, r })
    }

    pub fn min_level(&self) -> usize {
        match self {
            Generator::Finite(v) => v.min_support_len().unwrap_or(0),
            Generator::Geometric { .. } => 0,
        }
    }

    /// Largest support length; None for the infinitely supported family.
    pub fn max_level(&self) -> Option<usize> {
        match self {
            Generator::Finite(v) => v.max_support_len(),
            Generator::Geometric { .. } => None,
        }
    }

    pub fn is_single_level(&self) -> bool {
        match self {
            Generator::Finite(v) => v.min_support_len() == v.max_support_len(),
            Generator::Geometric { .. } => false,
        }
    }

    /// ‖Q_m ζ‖²; for the geometric family this is 1 − r^m, rational in r.
    pub fn norm_sq_below(&self, m: usize) -> S {
        match self {
            Generator::Finite(v) => v.truncate(m).norm_sq(),
            Generator::Geometric { r, .. } => {
                if m == 0 {
                    S::zero()
                } else {
                    S::one() - r.pow(m as u32)
                }
            }
        }
    }

    pub fn norm_sq(&self) -> S {
        match self {
            Generator::Finite(v) => v.norm_sq(),
            Generator::Geometric { .. } => S::one(),
        }
    }

    /// Truncated vector Q_depth ζ; the geometric family needs √(1−r) and
    /// fails in the exact backend when that is irrational.
    pub fn materialize(&self, n: u8, depth: usize) -> Result<FockVector<S>> {
        match self {
            Generator::Finite(v) => {
                if v.n != n || v.alpha != 1 {
                    return Err(Error::ModelMismatch(
                        "generator lives in a different model".into(),
                    ));
                }
                Ok(v.truncate(depth))
            }
            Generator::Geometric { letter, lambda, r } => {
                let head = (S::one() - r.clone()).sqrt().ok_or_else(|| {
                    Error::Unsupported(
                        "geometric generator coefficients need sqrt(1-r) \
                         which is not available in this backend"
                            .into(),
                    )
                })?;
                let mut v = FockVector::zero(n, 1);
                let mut coeff = head;
                for k in 0..depth {
                    v.set(0, Word::power(*letter, k), coeff.clone())?;
                    coeff = coeff * lambda.conj();
                }
                Ok(v)
            }
        }
    }
}

/// Which orbit words index the spanning family {L_v ζ}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitSet {
    All,
    /// The empty word plus all words whose last letter differs.
    NotEndingIn(u8),
}

impl OrbitSet {
    pub fn contains(&self, w: &Word) -> bool {
        match self {
            OrbitSet::All => true,
            OrbitSet::NotEndingIn(l) => w.last() != Some(*l),
        }
    }

    pub fn count_at_level(&self, n: u8, l: usize) -> Result<u64> {
        let pow = |e: usize| -> Result<u64> {
            (n as u64)
                .checked_pow(e as u32)
                .ok_or_else(|| Error::Overflow("orbit count".into()))
        };
        match self {
            OrbitSet::All => pow(l),
            OrbitSet::NotEndingIn(_) => {
                if l == 0 {
                    Ok(1)
                } else {
                    Ok((n as u64 - 1) * pow(l - 1)?)
                }
            }
        }
    }
}

/// Suffix-closed monomial word sets: removing leading letters never leaves
/// the set, so span{ξ_w : w ∈ set} is co-invariant for L.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordSet {
    /// n = 2 only. For each set bit ε_m: all words ending in 21^m, plus the
    /// chain 1^j for j up to the highest set bit.
    BinaryExpansion { bits: Vec<bool> },
    /// {e} ∪ {w : last(w) = letter}.
    EndsWith { letter: u8 },
    /// {letter^j : j ≥ 0}.
    Chain { letter: u8 },
}

impl WordSet {
    pub fn validate(&self, n: u8) -> Result<()> {
        match self {
            WordSet::BinaryExpansion { .. } => {
                if n != 2 {
                    return Err(Error::InvalidParameter(
                        "binary-expansion word sets require n = 2".into(),
                    ));
                }
            }
            WordSet::EndsWith { letter } | WordSet::Chain { letter } => {
                if *letter < 1 || *letter > n {
                    return Err(Error::IndexOutOfRange {
                        index: *letter as usize,
                        n: n as usize,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn contains(&self, w: &Word) -> bool {
        match self {
            WordSet::BinaryExpansion { bits } => {
                let trailing = w
                    .letters()
                    .iter()
                    .rev()
                    .take_while(|&&l| l == 1)
                    .count();
                if trailing == w.len() {
                    // the chain 1^j, j up to the highest set bit
                    bits.iter().rposition(|&b| b).map_or(false, |top| w.len() <= top)
                } else {
                    // ends in 21^m with m = trailing
                    trailing < bits.len() && bits[trailing]
                }
            }
            WordSet::EndsWith { letter } => {
                w.is_empty() || w.last() == Some(*letter)
            }
            WordSet::Chain { letter } => w.is_power_of(*letter),
        }
    }

    /// Number of member words of length < k.
    pub fn count_below(&self, n: u8, k: usize) -> Result<u64> {
        let pow = |e: usize| -> Result<u64> {
            (n as u64)
                .checked_pow(e as u32)
                .ok_or_else(|| Error::Overflow("word-set count".into()))
        };
        match self {
            WordSet::BinaryExpansion { bits } => {
                let mut total: u64 = 0;
                let top = bits.iter().rposition(|&b| b);
                if let Some(top) = top {
                    total += (top as u64 + 1).min(k as u64); // chain words 1^j, j ≤ top
                }
                for (m, &bit) in bits.iter().enumerate() {
                    if bit && k >= m + 2 {
                        // words ending in 21^m, lengths m+1 .. k−1
                        total = total
                            .checked_add(pow(k - m - 1)? - 1)
                            .ok_or_else(|| Error::Overflow("word-set count".into()))?;
                    }
                }
                Ok(total)
            }
            WordSet::EndsWith { .. } => {
                if k == 0 {
                    Ok(0)
                } else {
                    Ok(1 + (pow(k - 1)? - 1) / (n as u64 - 1))
                }
            }
            WordSet::Chain { .. } => Ok(k as u64),
        }
    }
}

#[derive(Clone, Debug)]
pub enum CompressionKind<S: Scalar> {
    /// Domain = (⊕_j span{L_v ζ_j : all v})^⊥, the classic co-invariant
    /// complement of an invariant subspace.
    ComplementOfOrbits { gens: Vec<Generator<S>> },
    /// Domain = span of an orthonormal family: `extras` plus the orbit
    /// vectors {L_v g : v ∈ orbit} of each generator.
    SpannedDomain {
        extras: Vec<FockVector<S>>,
        gens: Vec<Generator<S>>,
        orbit: OrbitSet,
    },
    /// Domain = span{ξ_w : w ∈ set} for a suffix-closed monomial set.
    Monomial { set: WordSet },
}

#[derive(Clone, Debug)]
pub struct CompressionRep<S: Scalar> {
    pub n: u8,
    pub kind: CompressionKind<S>,
}

/// Orthonormal-orbit (wandering-family) check for finitely supported
/// generators: ⟨ζ_i, L_t ζ_j⟩ must be δ_{ij}·δ_{t,e}. Only words t with
/// |t| ≤ max_level(ζ_i) − min_level(ζ_j) can give a nonzero pairing, so
/// the check is finite and exact.
pub fn wandering_check<S: Scalar>(n: u8, gens: &[Generator<S>], tol: f64) -> Result<()> {
    let vecs: Vec<FockVector<S>> = gens
        .iter()
        .map(|g| match g {
            Generator::Finite(v) => {
                if v.n != n || v.alpha != 1 {
                    Err(Error::ModelMismatch(
                        "generator lives in a different model".into(),
                    ))
                } else {
                    Ok(v.clone())
                }
            }
            Generator::Geometric { .. } => Err(Error::NotWandering {
                depth: 0,
                deviation: f64::NAN,
            }),
        })
        .collect::<Result<_>>()?;
    let mut worst = 0.0f64;
    let mut depth = 0usize;
    let bad = |d: &S, expect_one: bool| -> f64 {
        let (re, im) = d.to_f64();
        let target = if expect_one { 1.0 } else { 0.0 };
        ((re - target).powi(2) + im * im).sqrt()
    };
    for (i, zi) in vecs.iter().enumerate() {
        let max_i = zi.max_support_len().unwrap_or(0);
        for (j, zj) in vecs.iter().enumerate() {
            let min_j = zj.min_support_len().unwrap_or(0);
            let t_max = max_i.saturating_sub(min_j);
            for t_len in 0..=t_max {
                if t_len == 0 && i == j {
                    let d = bad(&inner_product(zi, zj)?, true);
                    if d > worst {
                        worst = d;
                        depth = 0;
                    }
                    continue;
                }
                for t in enumerate_words(n, t_len) {
                    let shifted = zj.shift_word(&t);
                    let d = bad(&inner_product(zi, &shifted)?, false);
                    if d > worst {
                        worst = d;
                        depth = t_len;
                    }
                }
            }
        }
    }
    let threshold = if S::EXACT { 0.0 } else { tol };
    if worst > threshold {
        Err(Error::NotWandering { depth, deviation: worst })
    } else {
        Ok(())
    }
}

impl<S: Scalar> CompressionRep<S> {
    pub fn complement_of_orbits(n: u8, gens: Vec<Generator<S>>, tol: f64) -> Result<Self> {
        wandering_check(n, &gens, tol)?;
        Ok(CompressionRep { n, kind: CompressionKind::ComplementOfOrbits { gens } })
    }

    /// A domain given directly by an orthonormal family. Extras and finite
    /// generators must be supported on a single word length each (this is
    /// what makes the structural rank count below exact); a geometric
    /// generator is admitted with the orbit set avoiding its own letter,
    /// where distinct orbit vectors have disjoint supports.
    pub fn spanned_domain(
        n: u8,
        extras: Vec<FockVector<S>>,
        gens: Vec<Generator<S>>,
        orbit: OrbitSet,
        tol: f64,
    ) -> Result<Self> {
        let threshold = if S::EXACT { 0.0 } else { tol };
        for e in &extras {
            if e.n != n || e.alpha != 1 {
                return Err(Error::ModelMismatch("extra vector in wrong model".into()));
            }
            if e.min_support_len() != e.max_support_len() {
                return Err(Error::InvalidParameter(
                    "extra domain vectors must be supported on a single length".into(),
                ));
            }
            let (re, im) = (e.norm_sq() - S::one()).to_f64();
            if re.abs() > threshold || im.abs() > threshold {
                return Err(Error::InvalidParameter("extra vectors must be unit".into()));
            }
        }
        for (a, ea) in extras.iter().enumerate() {
            for eb in extras.iter().skip(a + 1) {
                let (re, im) = inner_product(ea, eb)?.to_f64();
                if re.abs() > threshold || im.abs() > threshold {
                    return Err(Error::InvalidParameter(
                        "extra vectors must be pairwise orthogonal".into(),
                    ));
                }
            }
        }
        let any_geometric = gens
            .iter()
            .any(|g| matches!(g, Generator::Geometric { .. }));
        if any_geometric {
            if !extras.is_empty() || gens.len() != 1 {
                return Err(Error::Unsupported(
                    "a geometric generator must be the only spanning datum".into(),
                ));
            }
            match (&gens[0], orbit) {
                (Generator::Geometric { letter, .. }, OrbitSet::NotEndingIn(l))
                    if *letter == l => {}
                _ => {
                    return Err(Error::NotWandering { depth: 1, deviation: f64::NAN });
                }
            }
        } else {
            for g in &gens {
                if !g.is_single_level() {
                    return Err(Error::InvalidParameter(
                        "finite spanning generators must be supported on a \
                         single word length"
                            .into(),
                    ));
                }
            }
            wandering_check(n, &gens, tol)?;
            // extras ⊥ every orbit vector that could overlap them
            for e in &extras {
                let e_len = e.max_support_len().unwrap_or(0);
                for g in &gens {
                    let g_min = g.min_level();
                    if e_len < g_min {
                        continue;
                    }
                    let gv = g.materialize(n, e_len + 1)?;
                    for v_len in 0..=(e_len - g_min) {
                        for v in enumerate_words(n, v_len) {
                            if !orbit.contains(&v) {
                                continue;
                            }
                            let (re, im) = inner_product(e, &gv.shift_word(&v))?.to_f64();
                            if re.abs() > threshold || im.abs() > threshold {
                                return Err(Error::InvalidParameter(
                                    "extra vectors must be orthogonal to the orbit".into(),
                                ));
                            }
                        }
                    }
                }
            }
        }
        Ok(CompressionRep { n, kind: CompressionKind::SpannedDomain { extras, gens, orbit } })
    }

    pub fn monomial(n: u8, set: WordSet) -> Result<Self> {
        set.validate(n)?;
        Ok(CompressionRep { n, kind: CompressionKind::Monomial { set } })
    }

    /// tr(I − Φᵏ(I)) = tr(P_D Q_k P_D) over the compression domain D, by
    /// co-invariance. Exact for every kind.
    pub fn defect_trace(&self, k: usize) -> Result<S> {
        let n = self.n;
        match &self.kind {
            CompressionKind::Monomial { set } => {
                Ok(S::from_int(set.count_below(n, k)? as i64))
            }
            CompressionKind::SpannedDomain { extras, gens, orbit } => {
                let mut acc = S::zero();
                for e in extras {
                    acc = acc + e.truncate(k).norm_sq();
                }
                for g in gens {
                    for l in 0..k {
                        let c = orbit.count_at_level(n, l)?;
                        acc = acc + S::from_int(c as i64) * g.norm_sq_below(k - l);
                    }
                }
                Ok(acc)
            }
            CompressionKind::ComplementOfOrbits { gens } => {
                let mut acc = S::from_int(basis_dimension(n, k)? as i64);
                for g in gens {
                    for l in 0..k {
                        let c = (n as u64)
                            .checked_pow(l as u32)
                            .ok_or_else(|| Error::Overflow("orbit count".into()))?;
                        acc = acc - S::from_int(c as i64) * g.norm_sq_below(k - l);
                    }
                }
                Ok(acc)
            }
        }
    }

    /// rk(I − Φᵏ(I)). Structural counting where the domain basis truncates
    /// all-or-nothing (monomial sets; single-level or geometric spanning
    /// families; single-level orbit complements); otherwise a Gram-matrix
    /// rank over the level-< k words, guarded by `gram_cap`.
    pub fn defect_rank(&self, k: usize, tol: f64, gram_cap: usize) -> Result<u64>
    where
        S: Backend,
    {
        let n = self.n;
        match &self.kind {
            CompressionKind::Monomial { set } => set.count_below(n, k),
            CompressionKind::SpannedDomain { extras, gens, orbit } => {
                let mut total: u64 = 0;
                for e in extras {
                    if e.min_support_len().unwrap_or(0) < k {
                        total += 1;
                    }
                }
                for g in gens {
                    for l in 0..k {
                        if !g.norm_sq_below(k - l).is_zero() {
                            total = total
                                .checked_add(orbit.count_at_level(n, l)?)
                                .ok_or_else(|| Error::Overflow("rank count".into()))?;
                        }
                    }
                }
                Ok(total)
            }
            CompressionKind::ComplementOfOrbits { gens } => {
                if gens.iter().all(|g| g.is_single_level()) {
                    // Q_k leaves the orbit span invariant, so the defect is a
                    // projection of rank dim Q_k D
                    let mut total = basis_dimension(n, k)?;
                    for g in gens {
                        let k0 = g.min_level();
                        if k > k0 {
                            total -= basis_dimension(n, k - k0)?;
                        }
                    }
                    Ok(total)
                } else {
                    let m = self.complement_gram(k, gram_cap)?;
                    Ok(S::mat_rank(&m, tol) as u64)
                }
            }
        }
    }

    /// Gram matrix G_{uv} = ⟨P_D ξ_u, P_D ξ_v⟩ over words |u|,|v| < k for
    /// the orbit-complement domain.
    pub fn complement_gram(&self, k: usize, gram_cap: usize) -> Result<Mat<S>> {
        let gens = match &self.kind {
            CompressionKind::ComplementOfOrbits { gens } => gens,
            _ => {
                return Err(Error::Unsupported(
                    "Gram path applies to orbit complements".into(),
                ))
            }
        };
        let dim = basis_dimension(self.n, k)? as usize;
        if dim > gram_cap {
            return Err(Error::ResourceCap { k, needed: dim as u128, cap: gram_cap });
        }
        let words: Vec<Word> = crate::word::enumerate_words_below(self.n, k);
        // coefficient table: for each orbit vector L_v ζ_j reaching level <k,
        // its coefficients at the enumerated words
        let mut cols: Vec<Vec<S>> = Vec::new();
        for g in gens {
            let gv = g.materialize(self.n, k)?;
            if gv.is_zero() {
                continue;
            }
            let g_min = g.min_level();
            for v_len in 0..k.saturating_sub(g_min) {
                for v in enumerate_words(self.n, v_len) {
                    let shifted = gv.shift_word(&v).truncate(k);
                    let col = words.iter().map(|w| shifted.get(0, w)).collect();
                    cols.push(col);
                }
            }
        }
        let mut gram: Mat<S> = Mat::identity(dim);
        for col in &cols {
            for u in 0..dim {
                if col[u].is_zero() {
                    continue;
                }
                for v in 0..dim {
                    let t = col[u].clone() * col[v].conj();
                    gram[(u, v)] = gram[(u, v)].clone() - t;
                }
            }
        }
        Ok(gram)
    }

    fn project_domain(&self, y: &FockVector<S>) -> Result<FockVector<S>> {
        match &self.kind {
            CompressionKind::Monomial { set } => {
                let mut out = FockVector::zero(self.n, 1);
                for ((c, w), a) in y.iter() {
                    if set.contains(w) {
                        out.set(*c, w.clone(), a.clone())?;
                    }
                }
                Ok(out)
            }
            CompressionKind::ComplementOfOrbits { gens } => {
                let mut out = y.clone();
                let depth = y.max_support_len().map_or(0, |m| m + 1);
                for g in gens {
                    let gv = g.materialize(self.n, depth)?;
                    let g_min = g.min_level();
                    for v in orbit_candidates(y, g_min, &OrbitSet::All) {
                        let b = gv.shift_word(&v);
                        let c = inner_product(y, &b)?;
                        if !c.is_zero() {
                            out.add_scaled(&b, &(-c));
                        }
                    }
                }
                Ok(out)
            }
            CompressionKind::SpannedDomain { extras, gens, orbit } => {
                let mut out = FockVector::zero(self.n, 1);
                for e in extras {
                    let c = inner_product(y, e)?;
                    if !c.is_zero() {
                        out.add_scaled(e, &c);
                    }
                }
                let depth = y.max_support_len().map_or(0, |m| m + 1);
                for g in gens {
                    let gv = g.materialize(self.n, depth)?;
                    let g_min = g.min_level();
                    for v in orbit_candidates(y, g_min, orbit) {
                        let b = gv.shift_word(&v);
                        let c = inner_product(y, &b)?;
                        if !c.is_zero() {
                            out.add_scaled(&b, &c);
                        }
                    }
                }
                Ok(out)
            }
        }
    }

    fn check_index(&self, i: u8) -> Result<()> {
        if i < 1 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i as usize, n: self.n as usize });
        }
        Ok(())
    }

    /// A_i x = P_D L_i x, for x already in the domain D.
    pub fn apply(&self, i: u8, x: &FockVector<S>) -> Result<FockVector<S>> {
        self.check_index(i)?;
        self.project_domain(&x.shift(i))
    }

    /// A_i* = L_i*|_D: co-invariance keeps the image inside D; the result
    /// is re-projected anyway so near-domain float inputs stay stable.
    pub fn apply_adjoint(&self, i: u8, x: &FockVector<S>) -> Result<FockVector<S>> {
        self.check_index(i)?;
        let y = x.unshift(i);
        match &self.kind {
            CompressionKind::Monomial { .. } => self.project_domain(&y),
            CompressionKind::ComplementOfOrbits { .. } => Ok(y),
            CompressionKind::SpannedDomain { .. } => self.project_domain(&y),
        }
    }
}

/// Orbit words v that could pair with the support of y: prefixes of support
/// words whose remaining suffix has length ≥ the generator's lowest level.
fn orbit_candidates<S: Scalar>(
    y: &FockVector<S>,
    g_min: usize,
    orbit: &OrbitSet,
) -> Vec<Word> {
    let mut set: BTreeSet<Word> = BTreeSet::new();
    for ((_, w), _) in y.iter() {
        for cut in 0..=w.len().saturating_sub(g_min) {
            let v = Word(w.letters()[..cut].to_vec());
            if orbit.contains(&v) {
                set.insert(v);
            }
        }
    }
    set.into_iter().collect()
}

/// An L-invariant subspace M = ⊕_j span{L_v ζ_j}, the carrier of K̃(M).
#[derive(Clone, Debug)]
pub struct InvariantSubspace<S: Scalar> {
    pub n: u8,
    pub gens: Vec<Generator<S>>,
}

impl<S: Scalar> InvariantSubspace<S> {
    pub fn new(n: u8, gens: Vec<Generator<S>>, tol: f64) -> Result<Self> {
        wandering_check(n, &gens, tol)?;
        Ok(InvariantSubspace { n, gens })
    }

    /// tr(P_M Q_k P_M) = Σ_j Σ_{l<k} n^l · ‖Q_{k−l} ζ_j‖².
    pub fn trace_below(&self, k: usize) -> Result<S> {
        let mut acc = S::zero();
        for g in &self.gens {
            for l in 0..k {
                let c = (self.n as u64)
                    .checked_pow(l as u32)
                    .ok_or_else(|| Error::Overflow("orbit count".into()))?;
                acc = acc + S::from_int(c as i64) * g.norm_sq_below(k - l);
            }
        }
        Ok(acc)
    }

    pub fn generator_count(&self) -> usize {
        self.gens.len()
    }
}
