//! Decaying atomic (ring) representations σ_{u,λ}: a cycle of d basis
//! vectors driven by the letters of the word u, with contraction factor λ_s
//! at node s and a free tree hanging below every node.
//!
//! For a single node (d = 1) with r = |λ|² the curvature has the closed
//! form K = (n − 1)(1 − r)/(n − r), while the Euler characteristic of any
//! pure-rank-1 ring is 1 − 1/n^d, independent of the decay rates.
//!
//! Run with: cargo run --example decaying_atomic

use ncurv::invariants::{curvature, euler, pure_rank, InvConfig};
use ncurv::operators::{DecayingAtomicRep, RowContraction};
use ncurv::word::Word;
use ncurv::{Exact, Scalar};

fn main() {
    let cfg = InvConfig::default();

    println!("one node, n = 2, r = |λ|² varying:");
    for (p, q) in [(0i64, 1i64), (1, 4), (1, 2), (3, 4)] {
        let r = Exact::from_ratio(p, q);
        let rep =
            DecayingAtomicRep::from_r(2, Word::letter(1), vec![r.clone()]).unwrap();
        let a = RowContraction::DecayingAtomic(rep);
        let k_est = curvature(&a, 14, &cfg).unwrap();
        let expect = (Exact::one() - r.clone())
            .div(&(Exact::from_int(2) - r.clone()))
            .unwrap();
        println!(
            "  r = {p}/{q}:  K ≈ {:.6}   closed form (n-1)(1-r)/(n-r) = {}",
            k_est.value.re_f64(),
            expect
        );
    }

    println!("\nlonger rings (one decaying node, rest weight 1), n = 2:");
    for d in [1usize, 2, 3] {
        let mut r = vec![Exact::one(); d];
        r[0] = Exact::from_ratio(1, 2);
        let u = Word((0..d).map(|s| (s % 2 + 1) as u8).collect());
        let rep = DecayingAtomicRep::from_r(2, u.clone(), r).unwrap();
        let a = RowContraction::DecayingAtomic(rep);
        let x_est = euler(&a, 14, &cfg).unwrap();
        println!(
            "  u = {u}: pure rank {}  χ = {} (= 1 - 1/2^{d} exactly)",
            pure_rank(&a, &cfg).unwrap(),
            x_est.value
        );
    }
}
