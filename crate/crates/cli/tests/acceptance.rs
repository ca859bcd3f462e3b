//! Acceptance: repeated `verify` runs over the full required model list are
//! byte-identical and complete within the time budget.

use std::process::Command;
use std::time::Instant;

const REQUIRED_MODELS: [&str; 12] =
    ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "A1xA1"];

#[test]
fn criterion_9_cli_determinism() {
    let start = Instant::now();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_parhopf"))
            .arg("verify")
            .args(REQUIRED_MODELS)
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    let elapsed = start.elapsed();

    assert!(first.status.success(), "verify failed: {}", String::from_utf8_lossy(&first.stdout));
    assert_eq!(first.status.code(), second.status.code());
    assert_eq!(first.stdout, second.stdout, "verify output must be byte-deterministic");

    let doc: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["models"].as_array().unwrap().len(), REQUIRED_MODELS.len());
    for model in doc["models"].as_array().unwrap() {
        assert_eq!(model["pass"], true, "{}", model["model"]);
    }

    assert!(elapsed.as_secs() < 300, "two verify runs took {elapsed:?}");
    println!("ACCEPTANCE 9 cli_determinism: PASS (two runs in {elapsed:?})");
}
