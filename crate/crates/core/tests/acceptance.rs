//! Acceptance suite: one line per criterion, followed by the failing
//! checks. Run with `cargo test -p sgqft --test acceptance`.
//!
//! Some printed reference values are misprints. The checks against them
//! fail and stay failing; the suite exits successfully only when the set
//! of failing checks is exactly `KNOWN_MISPRINTS`.

use std::process::ExitCode;

use sgqft::checks::{run_criterion, triage, KNOWN_MISPRINTS};

fn main() -> ExitCode {
    let verbose = std::env::args().any(|a| a == "--verbose");
    let mut reports = Vec::new();
    for id in 1..=11 {
        let report = run_criterion(id).expect("criterion exists");
        println!("{}", report.render(verbose));
        reports.push(report);
    }
    let t = triage(&reports);
    for &i in &t.known {
        let (id, label, why) = KNOWN_MISPRINTS[i];
        println!("known failure, criterion {}: {} ({})", id, label.trim(), why);
    }
    if t.ok() {
        ExitCode::SUCCESS
    } else {
        for u in &t.unexpected {
            eprintln!("unexpected: {}", u);
        }
        ExitCode::FAILURE
    }
}
