//! Words over the alphabet {1..n} and the combinatorics of the word basis.
//!
//! Ordering is length-then-lexicographic everywhere, so basis indexing and
//! float summation orders are reproducible.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A finite word over {1..n}. The empty word `e` is the identity for
/// concatenation. Letters are 1-based; validity against a given alphabet
/// size is checked where words enter a representation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letter(i: u8) -> Word {
        Word(vec![i])
    }

    /// `letter` repeated `count` times.
    pub fn power(letter: u8, count: usize) -> Word {
        Word(vec![letter; count])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    /// Every letter in [1, n].
    pub fn valid_for(&self, n: u8) -> bool {
        self.0.iter().all(|&l| l >= 1 && l <= n)
    }

    /// Concatenation: self followed by other.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Prepend a letter (the action of the left creation operator L_i).
    pub fn prepend(&self, i: u8) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(i);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    /// Strip a leading letter i (adjoint of L_i); None if the word does not
    /// start with i.
    pub fn strip_prefix_letter(&self, i: u8) -> Option<Word> {
        if self.0.first() == Some(&i) {
            Some(Word(self.0[1..].to_vec()))
        } else {
            None
        }
    }

    /// Strip a leading word; None if `prefix` is not a prefix of self.
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        if self.0.len() >= prefix.0.len() && self.0[..prefix.0.len()] == prefix.0[..] {
            Some(Word(self.0[prefix.0.len()..].to_vec()))
        } else {
            None
        }
    }

    pub fn first(&self) -> Option<u8> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<u8> {
        self.0.last().copied()
    }

    /// True if the word is letter^j for some j >= 0.
    pub fn is_power_of(&self, letter: u8) -> bool {
        self.0.iter().all(|&l| l == letter)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    /// Length-then-lexicographic.
    fn cmp(&self, other: &Word) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "e")
        } else {
            for l in &self.0 {
                write!(f, "{}", l)?;
            }
            Ok(())
        }
    }
}

/// All n^length words of exactly the given length, lexicographic order.
pub fn enumerate_words(n: u8, length: usize) -> Vec<Word> {
    assert!(n >= 1, "alphabet size must be at least 1");
    let mut out = Vec::new();
    let mut current = vec![1u8; length];
    loop {
        out.push(Word(current.clone()));
        // increment like an odometer, most significant digit first
        let mut pos = length;
        while pos > 0 {
            if current[pos - 1] < n {
                current[pos - 1] += 1;
                break;
            }
            current[pos - 1] = 1;
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
    }
    out
}

/// All words of length < k, in length-then-lexicographic order.
pub fn enumerate_words_below(n: u8, k: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for l in 0..k {
        out.extend(enumerate_words(n, l));
    }
    out
}

/// 1 + n + ... + n^{k-1} = (n^k - 1)/(n - 1); 0 when k = 0.
/// Overflow is reported, never wrapped.
pub fn basis_dimension(n: u8, k: usize) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidParameter("basis_dimension needs n >= 2".into()));
    }
    let mut total: u64 = 0;
    let mut term: u64 = 1;
    for _ in 0..k {
        total = total
            .checked_add(term)
            .ok_or_else(|| Error::Overflow("basis_dimension".into()))?;
        term = term
            .checked_mul(n as u64)
            .ok_or_else(|| Error::Overflow("basis_dimension".into()))?;
    }
    Ok(total)
}

/// n^e with overflow detection.
pub fn checked_pow(n: u8, e: usize) -> Result<u64> {
    let mut acc: u64 = 1;
    for _ in 0..e {
        acc = acc
            .checked_mul(n as u64)
            .ok_or_else(|| Error::Overflow("power".into()))?;
    }
    Ok(acc)
}
