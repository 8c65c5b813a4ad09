//! Sparse vectors in a multiplicity-α Fock space and the truncated basis.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::word::{basis_dimension, enumerate_words_below, Word};

/// Finitely supported element of H_n^{(α)}; keys are (copy index, word),
/// kept in length-then-lexicographic word order inside each copy so that
/// reductions are deterministic.
#[derive(Clone, PartialEq, Debug)]
pub struct FockVector<S: Scalar> {
    pub n: u8,
    pub alpha: u32,
    entries: BTreeMap<(u32, Word), S>,
}

impl<S: Scalar> FockVector<S> {
    pub fn zero(n: u8, alpha: u32) -> Self {
        FockVector { n, alpha, entries: BTreeMap::new() }
    }

    /// ξ_{copy, w}.
    pub fn basis(n: u8, alpha: u32, copy: u32, word: Word) -> Result<Self> {
        let mut v = FockVector::zero(n, alpha);
        v.set(copy, word, S::one())?;
        Ok(v)
    }

    pub fn set(&mut self, copy: u32, word: Word, value: S) -> Result<()> {
        if copy >= self.alpha {
            return Err(Error::ModelMismatch(format!(
                "copy index {} out of range for multiplicity {}",
                copy, self.alpha
            )));
        }
        if !word.valid_for(self.n) {
            return Err(Error::ModelMismatch(format!(
                "word {} has letters outside 1..={}",
                word, self.n
            )));
        }
        if value.is_zero() {
            self.entries.remove(&(copy, word));
        } else {
            self.entries.insert((copy, word), value);
        }
        Ok(())
    }

    pub fn get(&self, copy: u32, word: &Word) -> S {
        self.entries
            .get(&(copy, word.clone()))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    pub fn add_scaled(&mut self, other: &FockVector<S>, scale: &S) {
        for ((c, w), a) in &other.entries {
            let cur = self.get(*c, w);
            let next = cur + scale.clone() * a.clone();
            if next.is_zero() {
                self.entries.remove(&(*c, w.clone()));
            } else {
                self.entries.insert((*c, w.clone()), next);
            }
        }
    }

    pub fn scale(&mut self, s: &S) {
        if s.is_zero() {
            self.entries.clear();
            return;
        }
        for v in self.entries.values_mut() {
            *v = v.clone() * s.clone();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, Word), &S)> {
        self.entries.iter()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    /// Length of the shortest word in the support, if any.
    pub fn min_support_len(&self) -> Option<usize> {
        self.entries.keys().map(|(_, w)| w.len()).min()
    }

    pub fn max_support_len(&self) -> Option<usize> {
        self.entries.keys().map(|(_, w)| w.len()).max()
    }

    /// Truncation: keep words of length < k (the projection Q_k).
    pub fn truncate(&self, k: usize) -> FockVector<S> {
        let entries = self
            .entries
            .iter()
            .filter(|((_, w), _)| w.len() < k)
            .map(|(key, v)| (key.clone(), v.clone()))
            .collect();
        FockVector { n: self.n, alpha: self.alpha, entries }
    }

    /// Image under L_i^{(α)}: prepend the letter to every word.
    pub fn shift(&self, i: u8) -> FockVector<S> {
        let entries = self
            .entries
            .iter()
            .map(|((c, w), v)| ((*c, w.prepend(i)), v.clone()))
            .collect();
        FockVector { n: self.n, alpha: self.alpha, entries }
    }

    /// Image under L_w^{(α)}.
    pub fn shift_word(&self, w: &Word) -> FockVector<S> {
        let entries = self
            .entries
            .iter()
            .map(|((c, u), v)| ((*c, w.concat(u)), v.clone()))
            .collect();
        FockVector { n: self.n, alpha: self.alpha, entries }
    }

    /// Image under (L_i^{(α)})^*: strip the leading letter.
    pub fn unshift(&self, i: u8) -> FockVector<S> {
        let entries = self
            .entries
            .iter()
            .filter_map(|((c, w), v)| {
                w.strip_prefix_letter(i).map(|w2| ((*c, w2), v.clone()))
            })
            .collect();
        FockVector { n: self.n, alpha: self.alpha, entries }
    }

    pub fn norm_sq(&self) -> S {
        let mut acc = S::zero();
        for v in self.entries.values() {
            acc = acc + v.abs_sq();
        }
        acc
    }
}

/// ℓ² pairing, linear in the first argument and conjugate-linear in the
/// second: ⟨x, y⟩ = Σ x_e · conj(y_e).
pub fn inner_product<S: Scalar>(x: &FockVector<S>, y: &FockVector<S>) -> Result<S> {
    if x.n != y.n || x.alpha != y.alpha {
        return Err(Error::ModelMismatch(format!(
            "inner product between H_{}^({}) and H_{}^({})",
            x.n, x.alpha, y.n, y.alpha
        )));
    }
    // iterate the smaller support, look up in the larger; BTreeMap order
    // keeps float summation deterministic
    let (small, large, conj_small) = if x.support_len() <= y.support_len() {
        (x, y, false)
    } else {
        (y, x, true)
    };
    let mut acc = S::zero();
    for ((c, w), a) in small.iter() {
        let b = large.get(*c, w);
        if b.is_zero() {
            continue;
        }
        let term = if conj_small {
            b * a.conj()
        } else {
            a.clone() * b.conj()
        };
        acc = acc + term;
    }
    Ok(acc)
}

/// Words of length < depth in each of α copies, with word↔ordinal maps.
pub struct TruncatedBasis {
    pub n: u8,
    pub depth: usize,
    pub alpha: u32,
    pub words: Vec<Word>,
}

impl TruncatedBasis {
    pub fn new(n: u8, depth: usize, alpha: u32) -> Result<TruncatedBasis> {
        if n < 2 {
            return Err(Error::InvalidParameter("truncated basis needs n >= 2".into()));
        }
        basis_dimension(n, depth)?; // overflow guard
        Ok(TruncatedBasis { n, depth, alpha, words: enumerate_words_below(n, depth) })
    }

    /// Total dimension α · (n^depth − 1)/(n − 1).
    pub fn dim(&self) -> usize {
        self.words.len() * self.alpha as usize
    }

    /// Ordinal of (copy, word): copies are laid out in blocks.
    pub fn index_of(&self, copy: u32, word: &Word) -> Option<usize> {
        if copy >= self.alpha || word.len() >= self.depth {
            return None;
        }
        self.words
            .binary_search(word)
            .ok()
            .map(|i| copy as usize * self.words.len() + i)
    }

    pub fn at(&self, index: usize) -> (u32, &Word) {
        let per = self.words.len();
        ((index / per) as u32, &self.words[index % per])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Exact, F64};

    #[test]
    fn basis_vectors_orthonormal() {
        let x = FockVector::<Exact>::basis(2, 1, 0, Word(vec![1, 2])).unwrap();
        let y = FockVector::<Exact>::basis(2, 1, 0, Word(vec![2, 1])).unwrap();
        assert_eq!(inner_product(&x, &x).unwrap(), Exact::one());
        assert!(inner_product(&x, &y).unwrap().is_zero());
    }

    #[test]
    fn inner_product_conjugates_second_argument() {
        let mut x = FockVector::<Exact>::zero(2, 1);
        x.set(0, Word::empty(), Exact::i()).unwrap();
        let y = FockVector::<Exact>::basis(2, 1, 0, Word::empty()).unwrap();
        assert_eq!(inner_product(&x, &y).unwrap(), Exact::i());
        assert_eq!(inner_product(&y, &x).unwrap(), -Exact::i());
    }

    #[test]
    fn shift_unshift_are_adjoint() {
        let mut x = FockVector::<F64>::zero(2, 1);
        x.set(0, Word(vec![2]), F64::new(0.5, 0.25)).unwrap();
        x.set(0, Word::empty(), F64::real(0.5)).unwrap();
        let mut y = FockVector::<F64>::zero(2, 1);
        y.set(0, Word(vec![1, 2]), F64::real(0.7)).unwrap();
        y.set(0, Word(vec![1]), F64::new(0.0, -0.3)).unwrap();
        let lhs = inner_product(&x.shift(1), &y).unwrap();
        let rhs = inner_product(&x, &y.unshift(1)).unwrap();
        assert!((lhs.re - rhs.re).abs() < 1e-14 && (lhs.im - rhs.im).abs() < 1e-14);
    }

    #[test]
    fn model_mismatch_is_reported() {
        let x = FockVector::<Exact>::basis(2, 1, 0, Word::empty()).unwrap();
        let y = FockVector::<Exact>::basis(3, 1, 0, Word::empty()).unwrap();
        assert!(inner_product(&x, &y).is_err());
    }

    #[test]
    fn truncated_basis_indexing_round_trips() {
        let b = TruncatedBasis::new(2, 3, 2).unwrap();
        assert_eq!(b.dim(), 14);
        for i in 0..b.dim() {
            let (c, w) = b.at(i);
            assert_eq!(b.index_of(c, &w.clone()), Some(i));
        }
    }
}
