//! Exit-code and file-handling behaviour of the command-line interface.

use opaque_bounds::barrier::{disc_boundary_barrier, jones_square_barrier};
use opaque_bounds::cli::{run_from, EXIT_BAD_CONFIG, EXIT_INVALID, EXIT_OK};
use std::f64::consts::TAU;
use std::path::PathBuf;

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_barrier(name: &str, b: &opaque_bounds::barrier::Barrier) -> PathBuf {
    let path = tmp(name);
    std::fs::write(&path, serde_json::to_string_pretty(b).unwrap()).unwrap();
    path
}

#[test]
fn table_and_formats() {
    assert_eq!(run_from(["opaque-bounds", "table"]), EXIT_OK);
    assert_eq!(
        run_from(["opaque-bounds", "table", "--format", "csv"]),
        EXIT_OK
    );
    assert_eq!(
        run_from(["opaque-bounds", "table", "--format", "json"]),
        EXIT_OK
    );
    // unknown subcommand is a usage error
    assert_eq!(
        run_from(["opaque-bounds", "no-such-command"]),
        EXIT_BAD_CONFIG
    );
}

#[test]
fn disc_bound_paths() {
    assert_eq!(
        run_from([
            "opaque-bounds",
            "disc-bound",
            "--at",
            "0.001067,0.965763",
            "--format",
            "json",
        ]),
        EXIT_OK
    );
    // feasible parameters whose certificate fails the separation check
    assert_eq!(
        run_from(["opaque-bounds", "disc-bound", "--at", "0.001067,0.93"]),
        EXIT_INVALID
    );
    // infeasible parameters are a configuration error
    assert_eq!(
        run_from(["opaque-bounds", "disc-bound", "--at", "0.05,0.9"]),
        EXIT_BAD_CONFIG
    );
    // malformed values never reach the pipeline
    assert_eq!(
        run_from(["opaque-bounds", "disc-bound", "--at", "zero,one"]),
        EXIT_BAD_CONFIG
    );
    assert_eq!(
        run_from(["opaque-bounds", "disc-bound", "--grid", "axb"]),
        EXIT_BAD_CONFIG
    );
}

#[test]
fn square_bound_paths() {
    assert_eq!(
        run_from(["opaque-bounds", "square-bound", "--samples", "20000"]),
        EXIT_OK
    );
    // below the crossover threshold the bound misses its target
    assert_eq!(
        run_from([
            "opaque-bounds",
            "square-bound",
            "--bout-threshold",
            "0.008",
            "--samples",
            "20000",
        ]),
        EXIT_INVALID
    );
    assert_eq!(
        run_from(["opaque-bounds", "square-bound", "--zeta", "2.0"]),
        EXIT_BAD_CONFIG
    );
    // t beyond the chord range
    assert_eq!(
        run_from(["opaque-bounds", "square-bound", "--t", "0.9"]),
        EXIT_BAD_CONFIG
    );
    // alternate parameters: valid certificate, but short of the target
    assert_eq!(
        run_from([
            "opaque-bounds",
            "square-bound",
            "--zeta",
            "0.1",
            "--t",
            "0.618",
            "--samples",
            "20000",
        ]),
        EXIT_INVALID
    );
}

#[test]
fn certify_combined() {
    assert_eq!(
        run_from([
            "opaque-bounds",
            "certify",
            "--samples",
            "20000",
            "--format",
            "json",
        ]),
        EXIT_OK
    );
    assert_eq!(
        run_from(["opaque-bounds", "certify", "--at", "0.05,0.9"]),
        EXIT_BAD_CONFIG
    );
}

#[test]
fn validate_barrier_paths() {
    let circle = write_barrier("circle.json", &disc_boundary_barrier());
    assert_eq!(
        run_from([
            "opaque-bounds",
            "validate-barrier",
            circle.to_str().unwrap(),
            "--n-alpha",
            "400",
            "--n-offset",
            "400",
        ]),
        EXIT_OK
    );

    let jones = write_barrier("jones.json", &jones_square_barrier());
    assert_eq!(
        run_from([
            "opaque-bounds",
            "validate-barrier",
            jones.to_str().unwrap(),
            "--body",
            "square",
            "--n-alpha",
            "400",
            "--n-offset",
            "400",
            "--format",
            "json",
        ]),
        EXIT_OK
    );

    let mut gapped = disc_boundary_barrier();
    gapped.arcs[0].angle_start = 0.2;
    gapped.arcs[0].angle_sweep = TAU - 0.2;
    let gapped = write_barrier("gapped.json", &gapped);
    assert_eq!(
        run_from([
            "opaque-bounds",
            "validate-barrier",
            gapped.to_str().unwrap(),
        ]),
        EXIT_INVALID
    );

    let malformed = tmp("malformed.json");
    std::fs::write(&malformed, "{ not json").unwrap();
    assert_eq!(
        run_from([
            "opaque-bounds",
            "validate-barrier",
            malformed.to_str().unwrap(),
        ]),
        EXIT_BAD_CONFIG
    );
    assert_eq!(
        run_from(["opaque-bounds", "validate-barrier", "/no/such/file.json"]),
        EXIT_BAD_CONFIG
    );
}

#[test]
fn output_file_option() {
    let out = tmp("disc_cert.json");
    assert_eq!(
        run_from([
            "opaque-bounds",
            "disc-bound",
            "--at",
            "0.001067,0.965763",
            "--format",
            "json",
            "--output",
            out.to_str().unwrap(),
        ]),
        EXIT_OK
    );
    let text = std::fs::read_to_string(&out).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(v["valid"].as_bool().unwrap());
    assert!(v["meets_target"].as_bool().unwrap());
}

#[test]
fn spawned_binary() {
    let bin = env!("CARGO_BIN_EXE_opaque-bounds");
    let out = std::process::Command::new(bin)
        .args(["table", "--format", "csv"])
        .env("OPAQUE_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("disc"));
    assert!(stdout.contains("square"));

    let out = std::process::Command::new(bin)
        .args(["disc-bound", "--at", "0.05,0.9"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
