//! Run every scripted scenario with its default arguments, as the CLI
//! `reproduce all` does, and report a one-line outcome for each.

use hyperdiag::verifier::{default_runs, scenario, VerifyStatus};

fn main() {
    let mut verified = 0usize;
    let runs = default_runs();
    let total = runs.len();
    for (name, args) in runs {
        let report = scenario(name, &args, None).unwrap();
        let outcome = match &report.status {
            VerifyStatus::Verified => {
                verified += 1;
                "verified".to_string()
            }
            VerifyStatus::Mismatch { index, .. } => format!("MISMATCH at {index}"),
            VerifyStatus::Refused { reason } => format!("refused: {reason}"),
            VerifyStatus::Failed { reason } => format!("FAILED: {reason}"),
        };
        let args_text: Vec<String> = args.entries().map(|(k, v)| format!("{k}={v}")).collect();
        println!("{name:<16} {:<24} {outcome}", args_text.join(" "));
    }
    println!("{verified}/{total} scenario runs verified");
    assert_eq!(verified, total);
}
