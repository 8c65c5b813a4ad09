//! The left regular representation L = (L₁, …, Lₙ) on Fock space: the
//! benchmark tuple with curvature and Euler characteristic both equal to
//! the multiplicity α.
//!
//! Every level is exact: tr(I − Φᵏ(I)) = rk(I − Φᵏ(I)) = α(nᵏ − 1)/(n − 1),
//! so the normalized estimates form the bracket [α(1 − n⁻ᵏ), α].
//!
//! Run with: cargo run --example left_regular

use ncurv::cpmap::defect_sequence;
use ncurv::invariants::{curvature, euler, InvConfig};
use ncurv::operators::RowContraction;
use ncurv::Exact;

fn main() {
    let cfg = InvConfig::default();
    for (n, alpha) in [(2u8, 1u32), (2, 3), (3, 1)] {
        let a = RowContraction::<Exact>::LeftRegular { n, alpha };
        let k_max = if n == 2 { 14 } else { 9 };
        println!("L^({alpha}) over {n} letters, levels 1..={k_max}:");
        let seq = defect_sequence(&a, k_max, &cfg.cp).unwrap();
        for r in seq.records.iter().take(5) {
            println!("  k={:2}  trace = rank = {}", r.k, r.trace);
        }
        let k_est = curvature(&a, k_max, &cfg).unwrap();
        let x_est = euler(&a, k_max, &cfg).unwrap();
        println!(
            "  K ∈ [{}, {}]   χ ∈ [{}, {}]   (both limits equal α = {alpha})\n",
            k_est.value, k_est.upper_bound, x_est.value, x_est.upper_bound
        );
    }
}
