//! Two very different-looking constructions with identical invariants: the
//! compression onto the co-invariant cyclic subspace of the geometric
//! eigenvector ν_λ = Σ_m λ^m ξ_{1^m}, and the one-node decaying atomic
//! tuple with the same λ. Their defect sequences agree level by level.
//!
//! Run with: cargo run --example eigenvector_equivalence

use ncurv::catalog::{entry_decaying_lambda, entry_eigenvector};
use ncurv::cpmap::{defect_rank, defect_trace};
use ncurv::invariants::InvConfig;
use ncurv::word::Word;
use ncurv::{Scalar, F64};

fn main() {
    let cfg = InvConfig::default();
    for lambda in [0.0f64, 0.5, std::f64::consts::FRAC_1_SQRT_2] {
        let lam = F64::from_f64(lambda, 0.0).unwrap();
        let eig = entry_eigenvector::<F64>(2, lam.clone()).unwrap().tuple.unwrap();
        let dec = entry_decaying_lambda::<F64>(2, Word::letter(1), vec![lam])
            .unwrap()
            .tuple
            .unwrap();
        println!("λ = {lambda:.6}:");
        println!("  k | eigenvector trace | atomic trace | ranks");
        for k in 1..=6usize {
            let te = defect_trace(&eig, k, &cfg.cp).unwrap().re_f64();
            let ta = defect_trace(&dec, k, &cfg.cp).unwrap().re_f64();
            let re = defect_rank(&eig, k, &cfg.cp).unwrap();
            let ra = defect_rank(&dec, k, &cfg.cp).unwrap();
            println!("  {k} | {te:17.12} | {ta:12.12} | {re} = {ra}");
        }
        println!();
    }
}
