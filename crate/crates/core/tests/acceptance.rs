//! Acceptance criteria P1–P12, one line per criterion.
//!
//! Runs at tier 2 unless `BERGER_LAB_TIER=1` is set. Every comparison is
//! exact. The process exits nonzero if any criterion fails, and the failing
//! criterion's computed values are printed under its line.

use std::process::ExitCode;
use std::time::Instant;

use berger_lab::context::Context;
use berger_lab::harness::{run_check, CheckStatus, SuiteOptions, CHECKS};

fn main() -> ExitCode {
    let tier = match std::env::var("BERGER_LAB_TIER").as_deref() {
        Ok("1") => 1,
        _ => 2,
    };
    let opts = SuiteOptions {
        tier,
        ..SuiteOptions::default()
    };
    let mut ctx = Context::new();
    let start = Instant::now();
    println!("\nacceptance criteria (tier {tier}, exact arithmetic)");
    let mut failed = Vec::new();
    for (id, claim) in CHECKS {
        let result = run_check(&mut ctx, id, &opts);
        let label = match result.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Vacuous => "VACUOUS",
            CheckStatus::Skipped => "SKIPPED",
        };
        println!("{id:<4} {label:<7} {claim}");
        if result.status == CheckStatus::Fail {
            println!("     values: {}", result.values);
            failed.push(id);
        }
    }
    println!(
        "{} of {} criteria pass ({:.1} s)",
        CHECKS.len() - failed.len(),
        CHECKS.len(),
        start.elapsed().as_secs_f64()
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failing: {}", failed.join(", "));
        ExitCode::FAILURE
    }
}
