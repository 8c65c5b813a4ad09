//! Monomial compressions realizing K = χ = r for any dyadic rational
//! r ∈ [0, 1]: the word set is assembled from the binary expansion of r, one
//! block per 1-bit, and both invariants hit r on the nose.
//!
//! Run with: cargo run --example binary_expansion

use ncurv::catalog::entry_binary_expansion;
use ncurv::invariants::{curvature, euler, InvConfig};
use ncurv::{Exact, Scalar};

fn main() {
    let cfg = InvConfig::default();
    let cases: [(&[bool], &str); 4] = [
        (&[true], "1/2"),
        (&[true, true], "3/4"),
        (&[true, false, true], "5/8"),
        (&[false, true, true], "3/8"),
    ];
    for (bits, label) in cases {
        let entry = entry_binary_expansion::<Exact>(bits.to_vec()).unwrap();
        let a = entry.tuple.unwrap();
        let k_est = curvature(&a, 14, &cfg).unwrap();
        let x_est = euler(&a, 14, &cfg).unwrap();
        println!(
            "bits {:?} (r = {label}):  K ≈ {:.6}  χ ≈ {:.6}",
            bits,
            k_est.value.re_f64(),
            x_est.value.re_f64()
        );
    }
    println!("\n(each value approaches its dyadic target with error ≤ 2^-k_max)");
}
