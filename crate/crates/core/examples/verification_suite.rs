//! Runs every check and prints the claim table. Pass `--quick` to skip the
//! two largest searches.

use altdiam::verify::{run_suite, SuiteOptions};
use altdiam::DiameterEngine;

fn main() {
    let quick = std::env::args().any(|a| a == "--quick");
    let report = run_suite(
        &DiameterEngine::new(),
        &SuiteOptions {
            quick,
            ..SuiteOptions::default()
        },
    );
    print!("{}", report.to_table());
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
