//! The curvature invariant takes every value in [0, 1] on pure rank-one
//! tuples: the one-node atomic tuple with weight s = (1 − 2r)/(1 − r) has
//! K exactly r for any r ∈ [0, 1/2], and the complementary compressions of
//! the isometry-range family cover (1/2, 1].
//!
//! Run with: cargo run --example curvature_range

use ncurv::catalog::{entry_curvature_range, entry_polynomial_isometry};
use ncurv::invariants::{curvature, InvConfig};
use ncurv::word::Word;
use ncurv::{Exact, Scalar};

fn main() {
    let cfg = InvConfig::default();

    println!("K = r on [0, 1/2] via weighted one-node atomic tuples:");
    for (p, q) in [(0i64, 1i64), (1, 8), (1, 4), (1, 3), (1, 2)] {
        let entry = entry_curvature_range::<Exact>(Exact::from_ratio(p, q)).unwrap();
        let a = entry.tuple.unwrap();
        let k_est = curvature(&a, 14, &cfg).unwrap();
        println!(
            "  target r = {p}/{q}:  K ∈ [{}, {}]",
            k_est.value, k_est.upper_bound
        );
    }

    println!("\nK = 1 - 1/n^k0 > 1/2 via isometry-range complements (n = 2):");
    for k0 in [1usize, 2, 3] {
        let entry = entry_polynomial_isometry::<Exact>(
            2,
            vec![(Word(vec![1; k0]), Exact::one())],
        )
        .unwrap();
        let a = entry.tuple.unwrap();
        let k_est = curvature(&a, 14, &cfg).unwrap();
        println!(
            "  degree k0 = {k0}:  K ∈ [{}, {}]  (target 1 - 1/2^{k0})",
            k_est.value, k_est.upper_bound
        );
    }
}
