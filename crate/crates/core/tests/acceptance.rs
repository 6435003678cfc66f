//! One PASS/FAIL line per acceptance criterion. Exits nonzero on any failure.

use std::process::ExitCode;
use std::time::Instant;

use schurflex::verify::{self, SuiteReport};

type Criterion = (&'static str, fn() -> SuiteReport);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("LG(5,10) table", verify::check_lg5_table),
        ("S_6 table", verify::check_spinor6_table),
        ("E6/P6 Hasse diagram", verify::check_e6_figure),
        ("E7/P7 Hasse diagram", verify::check_e7_figure),
        ("root-level and partition criteria agree", verify::check_criteria),
        ("partition dictionaries", verify::check_dictionaries),
        ("worked examples", verify::check_examples),
        ("structural properties", verify::check_structure),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let report = run();
        let status = if report.passed() { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {}: {name} ({} checks, {:.1}s)",
            k + 1,
            report.checks,
            t.elapsed().as_secs_f64()
        );
        if !report.passed() {
            failed += 1;
            for f in report.failures.iter().take(10) {
                println!("    {f}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
