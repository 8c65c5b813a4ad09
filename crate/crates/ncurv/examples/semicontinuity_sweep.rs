//! Three demonstrations that the invariants are only semi-continuous:
//!
//! 1. As the decay rate r ↑ 1 the curvature of a two-node ring drops
//!    continuously to 0 while χ stays at 3/4, then both collapse at r = 1.
//! 2. Truncations of the left regular representation all have χ = 0, yet
//!    the limit tuple L has χ = 1: rank is not lower semi-continuous.
//! 3. Over three letters, a family of compressions with χ = 2/3 at every
//!    stage converges to a compression with χ = 1/3.
//!
//! Run with: cargo run --example semicontinuity_sweep

use ncurv::catalog::{
    entry_decay_sweep, entry_three_letter_limit, entry_three_letter_wandering,
    entry_truncation_family,
};
use ncurv::cpmap::defect_rank;
use ncurv::invariants::{curvature, euler, InvConfig};
use ncurv::operators::RowContraction;
use ncurv::{Exact, Scalar, F64};

fn main() {
    let cfg = InvConfig::default();

    println!("1) two-node ring, n = 2, decay r sweeping toward 1:");
    let grid: Vec<Exact> = [(0i64, 1i64), (1, 2), (3, 4), (9, 10), (99, 100), (1, 1)]
        .iter()
        .map(|&(p, q)| Exact::from_ratio(p, q))
        .collect();
    for e in entry_decay_sweep::<Exact>(2, 2, &grid).unwrap() {
        let a = e.tuple.unwrap();
        let k_val = curvature(&a, 12, &cfg).unwrap().value.re_f64();
        let x_val = euler(&a, 12, &cfg).unwrap().value.re_f64();
        println!("   {}  K ≈ {k_val:.6}  χ = {x_val:.4}", e.name);
    }

    println!("\n2) truncation family over 2 letters (limit tuple is L):");
    for l in [1usize, 2, 3] {
        let a = entry_truncation_family::<Exact>(2, l).unwrap().tuple.unwrap();
        let rank = defect_rank(&a, 14, &cfg.cp).unwrap();
        let x_val = euler(&a, 14, &cfg).unwrap().value.re_f64();
        println!(
            "   depth {l}: defect rank saturates at {rank} = dim, χ ≈ {x_val:.5} → 0"
        );
    }
    let full = RowContraction::<Exact>::LeftRegular { n: 2, alpha: 1 };
    println!(
        "   limit L: χ ∈ [{}, 1]",
        euler(&full, 14, &cfg).unwrap().value
    );

    println!("\n3) three letters: wandering-pair stages vs their limit:");
    let stage = entry_three_letter_wandering::<F64>(
        F64::from_f64(0.6, 0.0).unwrap(),
        F64::from_f64(0.8, 0.0).unwrap(),
    )
    .unwrap()
    .tuple
    .unwrap();
    println!(
        "   every stage: χ = {:.6} (= 2/3)",
        euler(&stage, 5, &cfg).unwrap().value.re_f64()
    );
    let limit = entry_three_letter_limit::<Exact>().unwrap().tuple.unwrap();
    println!(
        "   limit:       χ ≈ {:.6} (= 1/3)",
        euler(&limit, 9, &cfg).unwrap().value.re_f64()
    );
}
