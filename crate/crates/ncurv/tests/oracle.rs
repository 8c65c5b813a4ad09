//! Oracle suite: every specialized trace/rank path is checked against an
//! independently constructed model — either matrices densified from the
//! generic forward action alone, or a hand-built combinatorial recursion.

use ncurv::catalog::{entry_binary_expansion, symmetric_fock_tuple};
use ncurv::cpmap::{defect_rank, defect_trace, CpConfig};
use ncurv::densify::densify;
use ncurv::matrix::Mat;
use ncurv::operators::{
    CompressionRep, DecayingAtomicRep, DenseTuple, Generator, RowContraction, WordSet,
};
use ncurv::word::{enumerate_words_below, Word};
use ncurv::{Exact, Scalar, F64};

fn cp() -> CpConfig {
    CpConfig::default()
}

fn assert_paths_agree<S: ncurv::Backend>(
    a: &RowContraction<S>,
    depth: usize,
    label: &str,
) {
    let dense = RowContraction::Dense(densify(a, depth).unwrap());
    for k in 1..depth {
        let tf = defect_trace(a, k, &cp()).unwrap();
        let td = defect_trace(&dense, k, &cp()).unwrap();
        if S::EXACT {
            assert_eq!(tf, td, "{label}: trace at k={k}");
        } else {
            assert!(
                (tf.re_f64() - td.re_f64()).abs() < 1e-9,
                "{label}: trace at k={k}"
            );
        }
        assert_eq!(
            defect_rank(a, k, &cp()).unwrap(),
            defect_rank(&dense, k, &cp()).unwrap(),
            "{label}: rank at k={k}"
        );
    }
}

#[test]
fn left_regular_and_restricted_match_densified() {
    // depth shrinks with n to keep the densified exact models small
    for (n, depth) in [(2u8, 5usize), (3, 4)] {
        assert_paths_agree(
            &RowContraction::<Exact>::LeftRegular { n, alpha: 2 },
            depth,
            "left regular",
        );
        assert_paths_agree(
            &RowContraction::<Exact>::LeftRegularRestricted { n, min_len: 1 },
            depth - 1,
            "restricted",
        );
    }
}

#[test]
fn multi_node_atomic_matches_densified() {
    // two-node ring u = 12 with one decaying node, and a three-node ring
    let reps = vec![
        DecayingAtomicRep::<Exact>::new(
            2,
            Word(vec![1, 2]),
            vec![Exact::from_ratio(1, 2), Exact::one()],
        )
        .unwrap(),
        DecayingAtomicRep::<Exact>::new(
            2,
            Word(vec![1, 1, 2]),
            vec![Exact::from_ratio(1, 3), Exact::one(), Exact::from_ratio(3, 4)],
        )
        .unwrap(),
    ];
    for rep in reps {
        assert_paths_agree(&RowContraction::DecayingAtomic(rep), 5, "atomic ring");
    }
}

#[test]
fn monomial_compressions_match_densified() {
    assert_paths_agree(
        &RowContraction::Compression(
            CompressionRep::<Exact>::monomial(2, WordSet::Chain { letter: 1 }).unwrap(),
        ),
        6,
        "chain",
    );
    assert_paths_agree(
        &RowContraction::Compression(
            CompressionRep::<Exact>::monomial(3, WordSet::EndsWith { letter: 2 })
                .unwrap(),
        ),
        5,
        "ends-with",
    );
    assert_paths_agree(
        &entry_binary_expansion::<Exact>(vec![true, false, true]).unwrap().tuple.unwrap(),
        6,
        "binary expansion",
    );
}

/// Hand-built truncated model of the compression onto the complement of the
/// orbit of ζ = ξ_u: that complement is spanned by the basis words that do
/// not end in u, so P L_i P has an explicit 0/1 matrix. This checks the
/// Gram-based complement path without going through the generic action.
fn complement_dense(n: u8, u: &Word, depth: usize) -> DenseTuple<Exact> {
    let words: Vec<Word> = enumerate_words_below(n, depth)
        .into_iter()
        .filter(|w| {
            w.len() < u.len() || w.letters()[w.len() - u.len()..] != *u.letters()
        })
        .collect();
    let mut mats = Vec::new();
    for i in 1..=n {
        let mut m = Mat::<Exact>::zeros(words.len(), words.len());
        for (col, w) in words.iter().enumerate() {
            let mut shifted = vec![i];
            shifted.extend_from_slice(w.letters());
            if let Some(row) = words.iter().position(|v| v.letters() == shifted) {
                m[(row, col)] = Exact::one();
            }
        }
        mats.push(m);
    }
    DenseTuple::new(mats).unwrap()
}

#[test]
fn orbit_complement_matches_hand_built_model() {
    for (n, u) in [(2u8, Word(vec![1])), (2, Word(vec![1, 1])), (3, Word(vec![1, 2]))] {
        let gen = Generator::Finite(
            ncurv::fock::FockVector::<Exact>::basis(n, 1, 0, u.clone()).unwrap(),
        );
        let a = RowContraction::Compression(
            CompressionRep::complement_of_orbits(n, vec![gen], 0.0).unwrap(),
        );
        let depth = 5usize;
        let dense = RowContraction::Dense(complement_dense(n, &u, depth));
        for k in 1..depth {
            assert_eq!(
                defect_trace(&a, k, &cp()).unwrap(),
                defect_trace(&dense, k, &cp()).unwrap(),
                "trace n={n} u={u} k={k}"
            );
            assert_eq!(
                defect_rank(&a, k, &cp()).unwrap(),
                defect_rank(&dense, k, &cp()).unwrap(),
                "rank n={n} u={u} k={k}"
            );
        }
    }
}

/// Diagonal recursion for the symmetric-Fock tuple: in the monomial basis
/// Φ(X) stays diagonal with Φ(X)_β = Σ_{β_i ≥ 1} (β_i/|β|) X_{β-e_i}, so the
/// defect traces follow from a scalar recursion independent of any matrix.
#[test]
fn symmetric_fock_matches_diagonal_recursion() {
    let n = 2u8;
    let depth = 10usize;
    let a = RowContraction::Dense(symmetric_fock_tuple::<F64>(n, depth).unwrap());
    let indices = ncurv::catalog::multi_indices(n as usize, depth);
    let pos = |beta: &[u32]| indices.iter().position(|b| b == beta).unwrap();
    // X starts as I; iterate the diagonal recursion
    let mut diag = vec![1.0f64; indices.len()];
    for k in 1..depth {
        let mut next = vec![0.0f64; indices.len()];
        for (j, beta) in indices.iter().enumerate() {
            let total: u32 = beta.iter().sum();
            if total == 0 {
                continue;
            }
            for i in 0..n as usize {
                if beta[i] >= 1 {
                    let mut prev = beta.clone();
                    prev[i] -= 1;
                    next[j] += beta[i] as f64 / total as f64 * diag[pos(&prev)];
                }
            }
        }
        diag = next;
        let expected_trace: f64 = diag.iter().map(|x| 1.0 - x).sum();
        let t = defect_trace(&a, k, &cp()).unwrap().re_f64();
        assert!(
            (t - expected_trace).abs() < 1e-9,
            "k={k}: {t} vs {expected_trace}"
        );
    }
}

/// The invariant-subspace masses tr(P_M Q_k P_M) for the cyclic subspace of
/// a wandering vector have the closed combinatorial form Σ_{l<k} #(orbit
/// words of length l-k0 and below); check the library's cumulative-norm path
/// against direct summation of squared truncated norms.
#[test]
fn subspace_masses_match_direct_orbit_sums() {
    let n = 2u8;
    let zeta = ncurv::fock::FockVector::<Exact>::basis(n, 1, 0, Word(vec![2])).unwrap();
    let m = ncurv::operators::InvariantSubspace::new(
        n,
        vec![Generator::Finite(zeta.clone())],
        0.0,
    )
    .unwrap();
    for k in 1..=8usize {
        // direct: Σ_v ‖Q_k L_v ζ‖² over all words v
        let mut direct = Exact::zero();
        for v in enumerate_words_below(n, k) {
            direct = direct + zeta.shift_word(&v).truncate(k).norm_sq();
        }
        assert_eq!(m.trace_below(k).unwrap(), direct, "k={k}");
    }
}
