//! Acceptance gate, CLI half: binary-level determinism of the default sweep.

use std::process::Command;

fn verdict(number: u8, name: &str, ok: bool) {
    println!(
        "acceptance {number:02} {name}: {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "acceptance criterion {number:02} ({name}) failed");
}

#[test]
fn a11_default_sweep_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.csv");
    let second = dir.path().join("second.csv");
    let mut ok = true;
    for path in [&first, &second] {
        let status = Command::new(env!("CARGO_BIN_EXE_iongate"))
            .args(["sweep", "--out", path.to_str().unwrap()])
            .status()
            .expect("binary runs");
        ok &= status.code() == Some(0);
    }
    let bytes_first = std::fs::read(&first).unwrap();
    let bytes_second = std::fs::read(&second).unwrap();
    ok &= bytes_first == bytes_second;
    let text = String::from_utf8(bytes_first).unwrap();
    // Header plus 306 data rows.
    ok &= text.lines().count() == 307;
    ok &= text.lines().skip(1).count() == 306;
    verdict(11, "cli sweep determinism", ok);
}
