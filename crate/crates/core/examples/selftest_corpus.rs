//! Runs the seeded random-corpus property suite, as `quintic selftest` does.
//!
//! cargo run --release --example selftest_corpus -- 500 7

use quintic::selftest::{run_selftest, SelftestConfig};

fn main() {
    let mut args = std::env::args().skip(1);
    let count = args.next().and_then(|s| s.parse().ok()).unwrap_or(50);
    let seed = SelftestConfig::resolve_seed(args.next().and_then(|s| s.parse().ok()));
    let summary = run_selftest(&SelftestConfig { count, seed, ..Default::default() });
    print!("{}", summary.to_text());
    std::process::exit(if summary.all_passed() { 0 } else { 1 });
}
