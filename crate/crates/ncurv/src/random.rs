//! Seeded generators for property suites: rational dense row contractions,
//! exact unitaries built from Pythagorean rotations, and atomic parameters.
//! Everything is deterministic in the seed and valid on both backends.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::matrix::{Backend, Mat};
use crate::operators::DenseTuple;
use crate::scalar::Scalar;
use crate::word::Word;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random dense row contraction with rational entries: raw entries p/q are
/// scaled by an integer m with m² ≥ tr(ΣAᵢAᵢ*), which dominates the largest
/// eigenvalue, so the scaled tuple is strictly contractive.
pub fn random_contraction<S: Backend, R: Rng>(
    rng: &mut R,
    n: u8,
    dim: usize,
) -> DenseTuple<S> {
    let mut raw: Vec<Vec<(i64, i64)>> = Vec::with_capacity(n as usize);
    let mut trace_bound = 0.0f64;
    for _ in 0..n {
        let mut entries = Vec::with_capacity(dim * dim);
        for _ in 0..dim * dim {
            let p = rng.gen_range(-3i64..=3);
            let q = rng.gen_range(1i64..=4);
            trace_bound += (p as f64 / q as f64).powi(2);
            entries.push((p, q));
        }
        raw.push(entries);
    }
    let m = (trace_bound.sqrt().floor() as i64) + 1;
    let mats = raw
        .into_iter()
        .map(|entries| {
            Mat::from_fn(dim, dim, |r, c| {
                let (p, q) = entries[r * dim + c];
                S::from_ratio(p, q * m)
            })
        })
        .collect();
    DenseTuple::new(mats).expect("matrices share the generated shape")
}

/// Rational points on the unit circle from Pythagorean triples.
const TRIPLES: &[(i64, i64, i64)] = &[
    (3, 4, 5),
    (5, 12, 13),
    (8, 15, 17),
    (7, 24, 25),
    (20, 21, 29),
    (9, 40, 41),
];

/// A random exact unitary: a product of Givens rotations with rational
/// cosine/sine pairs, followed by diagonal phases from {1, -1, i, -i}.
pub fn random_unitary<S: Scalar, R: Rng>(rng: &mut R, dim: usize) -> Mat<S> {
    let mut u = Mat::<S>::identity(dim);
    if dim >= 2 {
        for _ in 0..2 * dim {
            let i = rng.gen_range(0..dim);
            let mut j = rng.gen_range(0..dim - 1);
            if j >= i {
                j += 1;
            }
            let (a, b, h) = TRIPLES[rng.gen_range(0..TRIPLES.len())];
            let sign = if rng.gen::<bool>() { 1 } else { -1 };
            let c = S::from_ratio(a, h);
            let s = S::from_ratio(sign * b, h);
            let mut g = Mat::<S>::identity(dim);
            g[(i, i)] = c.clone();
            g[(j, j)] = c;
            g[(i, j)] = -s.clone();
            g[(j, i)] = s;
            u = g.mul(&u).expect("square matrices of equal size");
        }
    }
    for d in 0..dim {
        let phase = match rng.gen_range(0..4) {
            0 => S::one(),
            1 => -S::one(),
            2 => S::i(),
            _ => -S::i(),
        };
        for c in 0..dim {
            u[(d, c)] = phase.clone() * u[(d, c)].clone();
        }
    }
    u
}

/// Random decaying-atomic parameters: a ring word over n letters and weights
/// r_s ∈ [0, 1] as (num, den) pairs, with at least one weight below 1.
pub fn random_atomic_params<R: Rng>(rng: &mut R, n: u8, max_d: usize) -> (Word, Vec<(i64, i64)>) {
    let d = rng.gen_range(1..=max_d.max(1));
    let letters: Vec<u8> = (0..d).map(|_| rng.gen_range(1..=n)).collect();
    const DECAYS: &[(i64, i64)] = &[(0, 1), (1, 2), (1, 4), (3, 4), (2, 3)];
    let mut r: Vec<(i64, i64)> = (0..d)
        .map(|_| {
            if rng.gen::<bool>() {
                (1, 1)
            } else {
                DECAYS[rng.gen_range(0..DECAYS.len())]
            }
        })
        .collect();
    if r.iter().all(|&(p, q)| p == q) {
        r[rng.gen_range(0..d)] = DECAYS[rng.gen_range(0..DECAYS.len())];
    }
    (Word(letters), r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::is_unitary;
    use crate::scalar::Exact;

    #[test]
    fn random_contractions_validate() {
        let mut rng = seeded_rng(7);
        for _ in 0..5 {
            let t = random_contraction::<Exact, _>(&mut rng, 2, 3);
            assert!(t.validate(0.0).ok);
        }
    }

    #[test]
    fn random_unitaries_are_unitary() {
        let mut rng = seeded_rng(11);
        for dim in [1usize, 2, 3, 5] {
            let u = random_unitary::<Exact, _>(&mut rng, dim);
            assert!(is_unitary(&u, 0.0), "dim {dim}");
        }
    }

    #[test]
    fn deterministic_in_the_seed() {
        let a = random_contraction::<Exact, _>(&mut seeded_rng(3), 2, 4);
        let b = random_contraction::<Exact, _>(&mut seeded_rng(3), 2, 4);
        assert_eq!(a.mats, b.mats);
    }

    #[test]
    fn atomic_params_always_have_a_decaying_node() {
        let mut rng = seeded_rng(5);
        for _ in 0..20 {
            let (u, r) = random_atomic_params(&mut rng, 2, 3);
            assert_eq!(u.len(), r.len());
            assert!(r.iter().any(|&(p, q)| p < q));
        }
    }
}
