//! Run every verification suite with a fixed seed and print the
//! summary; exits nonzero if any check fails.
//!
//! Run with: `cargo run --example verify_everything`

use kinstatic::verify::{all_passed, run, CheckStatus, Suite, VerifyConfig};

fn main() {
    let cfg = VerifyConfig {
        tol: 1e-9,
        seed: 42,
        trials: 1000,
    };
    let reports = run(Suite::All, &cfg);

    for report in &reports {
        println!("suite {}", report.suite);
        for check in &report.checks {
            println!(
                "  {:<16} {:<34} residual {:.3e} ({} samples)",
                check.status.to_string(),
                check.name,
                check.max_residual,
                check.samples
            );
        }
    }

    let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
    let failures: usize = reports
        .iter()
        .flat_map(|r| &r.checks)
        .filter(|c| c.status == CheckStatus::Fail)
        .count();
    println!(
        "\n{checks} checks, {failures} failures (seed {}, trials {})",
        cfg.seed, cfg.trials
    );

    if !all_passed(&reports) {
        std::process::exit(1);
    }
}
