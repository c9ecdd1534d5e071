//! Runs the acceptance suites AC-1 to AC-9 and prints one pass/fail line per criterion.

use focktiles_cli::verify::{run_suite, SUITES};

fn main() {
    let mut failed = Vec::new();
    for name in SUITES {
        let report = run_suite(name).expect("known suite");
        println!("{report}");
        if !report.passed() {
            failed.push(report.id.clone());
        }
    }
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
