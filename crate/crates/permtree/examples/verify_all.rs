//! Runs every cross-check suite the crate ships (the same machinery as
//! `permtree verify --suite all`) and prints one line per check.
//!
//!     cargo run --example verify_all --release

use permtree::verify::run_suite;

fn main() -> permtree::Result<()> {
    let max_n = 7;
    let reports = run_suite("all", max_n)?;
    let mut failed = 0;
    for r in &reports {
        let tag = if r.passed { "PASS" } else { "FAIL" };
        println!("{tag} {}: {}", r.name, r.detail);
        if !r.passed {
            failed += 1;
        }
    }
    println!();
    println!(
        "{} of {} checks passed at max n = {max_n}",
        reports.len() - failed,
        reports.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
    Ok(())
}
