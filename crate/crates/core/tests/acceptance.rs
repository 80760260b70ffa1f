//! One line per criterion; exits nonzero if any fails.

use std::process::ExitCode;

use crbc::acceptance::{run, AcceptanceConfig, CRITERIA};

fn main() -> ExitCode {
    let outcomes = run(&AcceptanceConfig::default(), None);
    for o in &outcomes {
        println!("{o}");
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    println!("acceptance: {passed}/{} criteria passed", CRITERIA.len());
    if passed == CRITERIA.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
