//! Walk the whole worked-example catalog: build every entry, verify its
//! closed-form expectations, and print the expected-vs-computed brackets.
//!
//! Run with: cargo run --example catalog_tour

use ncurv::catalog::{self, verify_entry};
use ncurv::invariants::InvConfig;
use ncurv::F64;

fn main() {
    let cfg = InvConfig::default();
    for name in catalog::ENTRY_NAMES {
        let entry = catalog::build_default::<F64>(name).unwrap();
        println!("{name}: {}", entry.description);
        let k_max = entry.default_k_max;
        let v = verify_entry(&entry, k_max, &cfg).unwrap();
        for c in &v.checks {
            println!(
                "  {:<22} expected {:+.6}  computed [{:+.6}, {:+.6}]  {}",
                c.label,
                c.expected,
                c.computed,
                c.upper_bound,
                if c.pass { "ok" } else { "MISMATCH" }
            );
        }
        for note in &entry.notes {
            println!("  note: {note}");
        }
        println!();
    }
}
