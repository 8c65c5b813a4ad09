//! Materializing a representation as explicit matrices on a truncated model.
//!
//! The matrices come from the generic forward action alone (matrix element
//! ⟨A_i b_c, b_r⟩ over an orthonormal family spanning the truncated model),
//! so iterating Φ on them cross-checks every specialized trace/rank formula:
//! for levels k ≤ depth the truncated defect agrees with the full one
//! because all the models here grow level by level.

use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::matrix::{Backend, Mat};
use crate::operators::{
    model_inner, CompressionKind, DenseTuple, Generator, ModelVector, OrbitSet,
    RowContraction,
};
use crate::word::{enumerate_words, enumerate_words_below};

/// An orthonormal family spanning the truncated model of `a`:
/// words below `depth` in the appropriate shape. Variants without a
/// word-indexed orthonormal basis (orbit complements, direct sums, mixed
/// tuples, geometric spanning families) are refused.
pub fn domain_basis<S: Backend>(
    a: &RowContraction<S>,
    depth: usize,
) -> Result<Vec<ModelVector<S>>> {
    let mut out = Vec::new();
    match a {
        RowContraction::Dense(d) => {
            for i in 0..d.dim {
                let mut v = vec![S::zero(); d.dim];
                v[i] = S::one();
                out.push(ModelVector::Coords(v));
            }
        }
        RowContraction::LeftRegular { n, alpha } => {
            for copy in 0..*alpha {
                for w in enumerate_words_below(*n, depth) {
                    out.push(ModelVector::Fock(FockVector::basis(*n, *alpha, copy, w)?));
                }
            }
        }
        RowContraction::LeftRegularRestricted { n, min_len } => {
            for len in *min_len..(depth + min_len) {
                for w in enumerate_words(*n, len) {
                    out.push(ModelVector::Fock(FockVector::basis(*n, 1, 0, w)?));
                }
            }
        }
        RowContraction::DecayingAtomic(rep) => {
            let d = rep.d() as u32;
            for s in 1..=d {
                let ring_letter = rep.u.letters()[(s - 1) as usize];
                for w in enumerate_words_below(rep.n, depth) {
                    // the tree below ring node s holds words not ending in
                    // the node's own ring letter
                    if w.last() == Some(ring_letter) {
                        continue;
                    }
                    out.push(ModelVector::Fock(FockVector::basis(rep.n, d, s - 1, w)?));
                }
            }
        }
        RowContraction::Compression(c) => match &c.kind {
            CompressionKind::Monomial { set } => {
                for w in enumerate_words_below(c.n, depth) {
                    if set.contains(&w) {
                        out.push(ModelVector::Fock(FockVector::basis(c.n, 1, 0, w)?));
                    }
                }
            }
            CompressionKind::SpannedDomain { extras, gens, orbit } => {
                for e in extras {
                    if e.max_support_len().unwrap_or(0) < depth {
                        out.push(ModelVector::Fock(e.clone()));
                    }
                }
                for g in gens {
                    let lev = match g {
                        Generator::Finite(_) => g.min_level(),
                        Generator::Geometric { .. } => {
                            return Err(Error::Unsupported(
                                "geometric generators have no finite \
                                 orthonormal truncation"
                                    .into(),
                            ))
                        }
                    };
                    let gv = g.materialize(c.n, depth)?;
                    for v_len in 0..depth.saturating_sub(lev) {
                        for v in enumerate_words(c.n, v_len) {
                            if matches!(orbit, OrbitSet::All) || orbit.contains(&v) {
                                out.push(ModelVector::Fock(gv.shift_word(&v)));
                            }
                        }
                    }
                }
            }
            CompressionKind::ComplementOfOrbits { .. } => {
                return Err(Error::Unsupported(
                    "orbit complements have no word-indexed basis; use the \
                     Gram-matrix path instead"
                        .into(),
                ))
            }
        },
        RowContraction::DirectSum(..) | RowContraction::UnitaryMix { .. } => {
            return Err(Error::Unsupported(
                "materialize the summands / the inner tuple instead".into(),
            ))
        }
    }
    Ok(out)
}

/// Matrices of the truncated tuple Q A_i Q over [`domain_basis`]. Forward
/// images landing outside the truncation are cut off, which is exactly the
/// truncated model's action.
pub fn densify<S: Backend>(a: &RowContraction<S>, depth: usize) -> Result<DenseTuple<S>> {
    let basis = domain_basis(a, depth)?;
    let dim = basis.len();
    let mut mats = Vec::with_capacity(a.n() as usize);
    for i in 1..=a.n() {
        let mut m = Mat::zeros(dim, dim);
        for (col, b) in basis.iter().enumerate() {
            let image = a.apply(i, b)?;
            for (row, br) in basis.iter().enumerate() {
                let c = model_inner(&image, br)?;
                if !c.is_zero() {
                    m[(row, col)] = c;
                }
            }
        }
        mats.push(m);
    }
    DenseTuple::new(mats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cpmap::{defect_rank, defect_trace, CpConfig};
    use crate::operators::DecayingAtomicRep;
    use crate::word::Word;
    use crate::scalar::{Exact, Scalar};

    fn cfg() -> CpConfig {
        CpConfig::default()
    }

    #[test]
    fn densified_left_regular_matches_counts() {
        let a = RowContraction::<Exact>::LeftRegular { n: 2, alpha: 1 };
        let dense = RowContraction::Dense(densify(&a, 5).unwrap());
        for k in 1..=4usize {
            assert_eq!(
                defect_trace(&dense, k, &cfg()).unwrap(),
                defect_trace(&a, k, &cfg()).unwrap()
            );
            assert_eq!(
                defect_rank(&dense, k, &cfg()).unwrap(),
                defect_rank(&a, k, &cfg()).unwrap()
            );
        }
    }

    #[test]
    fn densified_atomic_matches_formula_paths() {
        let rep = DecayingAtomicRep::<Exact>::new(
            2,
            Word::letter(1),
            vec![Exact::from_ratio(1, 2)],
        )
        .unwrap();
        let a = RowContraction::DecayingAtomic(rep);
        let dense = RowContraction::Dense(densify(&a, 5).unwrap());
        for k in 1..=4usize {
            assert_eq!(
                defect_trace(&dense, k, &cfg()).unwrap(),
                defect_trace(&a, k, &cfg()).unwrap(),
                "trace at k={k}"
            );
            assert_eq!(
                defect_rank(&dense, k, &cfg()).unwrap(),
                defect_rank(&a, k, &cfg()).unwrap(),
                "rank at k={k}"
            );
        }
    }

    #[test]
    fn densified_monomial_chain_matches() {
        let c = crate::operators::CompressionRep::<Exact>::monomial(
            2,
            crate::operators::WordSet::Chain { letter: 1 },
        )
        .unwrap();
        let a = RowContraction::Compression(c);
        let dense = RowContraction::Dense(densify(&a, 6).unwrap());
        for k in 1..=5usize {
            assert_eq!(
                defect_trace(&dense, k, &cfg()).unwrap(),
                Exact::from_int(k as i64)
            );
            assert_eq!(defect_rank(&dense, k, &cfg()).unwrap(), k as u64);
        }
    }
}
