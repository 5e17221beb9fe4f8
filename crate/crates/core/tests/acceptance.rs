//! The ten acceptance criteria, one corpus item each. Prints one line per
//! criterion and exits nonzero if any fails.

use std::process::ExitCode;

use fpure::corpus;

fn main() -> ExitCode {
    let report = match corpus::run(&[]) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("acceptance: {e}");
            return ExitCode::FAILURE;
        }
    };
    println!();
    for (k, r) in report.records.iter().enumerate() {
        let tag = if r.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {tag} {:<24} {} ({} ms)", k + 1, r.id, r.title, r.elapsed_ms);
        for c in r.checks.iter().filter(|c| !c.passed) {
            println!("    failed: {} {}", c.name, c.detail);
        }
    }
    let passed = report.records.iter().filter(|r| r.passed).count();
    println!("acceptance: {passed}/{} criteria passed in {} ms\n", report.records.len(), report.elapsed_ms);
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
