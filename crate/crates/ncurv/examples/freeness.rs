//! Detecting free tuples: for a pure finite-rank row contraction, K(A)
//! equals the pure rank exactly when A is unitarily equivalent to a
//! multiple of the left regular representation. At finite level k the test
//! checks the exact left-regular trace signature p(nᵏ − 1)/(n − 1), or
//! separates with the one-sided upper bound on K.
//!
//! Run with: cargo run --example freeness

use ncurv::invariants::{freeness_test, InvConfig};
use ncurv::operators::{DecayingAtomicRep, RowContraction};
use ncurv::word::Word;
use ncurv::{Exact, Scalar};

fn main() {
    let cfg = InvConfig::default();

    let free = RowContraction::<Exact>::LeftRegular { n: 2, alpha: 2 };
    println!(
        "L^(2) itself:                     {}",
        freeness_test(&free, 12, &cfg).unwrap()
    );

    // pure rank 1 but K = (n-1)(1-r)/(n-r) < 1: not free
    let atomic = RowContraction::DecayingAtomic(
        DecayingAtomicRep::from_r(2, Word::letter(1), vec![Exact::from_ratio(1, 2)])
            .unwrap(),
    );
    println!(
        "one-node atomic, r = 1/2:         {}",
        freeness_test(&atomic, 12, &cfg).unwrap()
    );

    // a Cuntz tuple is not pure, so the criterion refuses to speak
    let cuntz = RowContraction::DecayingAtomic(
        DecayingAtomicRep::from_r(2, Word::letter(1), vec![Exact::one()]).unwrap(),
    );
    match freeness_test(&cuntz, 12, &cfg) {
        Err(e) => println!("Cuntz tuple, r = 1:               rejected ({e})"),
        Ok(v) => println!("Cuntz tuple, r = 1:               {v} (unexpected)"),
    }
}
