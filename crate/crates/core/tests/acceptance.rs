use std::process::ExitCode;

use hyperlag::suite::{run_suite, SuiteOptions};

fn main() -> ExitCode {
    let only: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let report = run_suite(&SuiteOptions { only, seed: 0 });
    for o in &report.results {
        println!("{}", o.line());
    }
    let counted = report.results.iter().filter(|o| !o.informational).count();
    println!(
        "{} of {counted} criteria passed; failing: {:?}",
        counted - report.failures.len(),
        report.failures
    );
    if report.acceptable {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
