//! End-to-end checks of the command-line interface: construct/chi/classify
//! pipeline, certificate emission, exit codes.

use std::path::Path;
use std::process::Command;

fn degpart() -> Command {
    Command::new(env!("CARGO_BIN_EXE_degpart"))
}

fn run(args: &[&str]) -> (String, String, i32) {
    let out = degpart().args(args).output().expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

fn write_c5(dir: &Path) -> String {
    let path = dir.join("c5.col");
    std::fs::write(&path, "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n").unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn construct_chi_classify_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let o5 = dir.path().join("o5.col");
    let (_, _, code) =
        run(&["construct", "--family", "O", "--n", "5", "--out", o5.to_str().unwrap()]);
    assert_eq!(code, 0);

    let (stdout, _, code) = run(&["chi", "--input", o5.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "5");

    let (stdout, _, code) = run(&["classify", "--input", o5.to_str().unwrap(), "--p", "1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "IsO5");

    let (stdout, _, code) = run(&["critical", "--input", o5.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "true");
}

#[test]
fn classify_complete_graph() {
    let dir = tempfile::tempdir().unwrap();
    let k7 = dir.path().join("k7.col");
    run(&["construct", "--family", "K", "--n", "7", "--out", k7.to_str().unwrap()]);
    let (stdout, _, code) = run(&["classify", "--input", k7.to_str().unwrap(), "--p", "1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "IsCompleteKChi");
}

#[test]
fn partition_writes_verified_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write_c5(dir.path());
    let cert = dir.path().join("cert.json");
    let (stdout, _, code) = run(&[
        "partition",
        "--input",
        &c5,
        "--r",
        "2,2",
        "--d",
        "4",
        "--out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("obstruction-free partition"));
    let text = std::fs::read_to_string(&cert).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["schema_version"], "degpart/1");
    assert_eq!(doc["verdict"]["passed"], true);
    assert_eq!(doc["outcome"]["kind"], "ObstructionFreePartition");
}

#[test]
fn degen_and_borodin_and_color() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write_c5(dir.path());
    let (stdout, _, code) = run(&["degen", "--input", &c5, "--r", "1,2", "--d", "2"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("degenerate partition"));

    let (stdout, _, code) = run(&["color", "--input", &c5, "--r", "2,2", "--d", "4"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("proper coloring"));

    let (stdout, _, code) = run(&["brooks", "--input", &c5, "--colors", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("proper coloring"));

    // Petersen for borodin.
    let pet = dir.path().join("petersen.txt");
    std::fs::write(
        &pet,
        "0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n9 6\n6 8\n8 5\n",
    )
    .unwrap();
    let (stdout, _, code) = run(&["borodin", "--input", pet.to_str().unwrap(), "--r1", "1", "--r2", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("partition sizes"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write_c5(dir.path());

    // Precondition violation: odd cycle at r = 2.
    let (_, stderr, code) = run(&["brooks", "--input", &c5, "--colors", "2"]);
    assert_eq!(code, 1, "{stderr}");

    // Precondition violation: budgets below 2.
    let (_, _, code) = run(&["partition", "--input", &c5, "--r", "1,1", "--d", "2"]);
    assert_eq!(code, 1);

    // Parse error: malformed file.
    let bad = dir.path().join("bad.col");
    std::fs::write(&bad, "p edge 3 1\ne 1 1\n").unwrap();
    let (_, stderr, code) = run(&["chi", "--input", bad.to_str().unwrap()]);
    assert_eq!(code, 2, "{stderr}");
    assert!(stderr.contains("line 2"));

    // Unknown flag: usage text, exit 2 (clap default).
    let (_, _, code) = run(&["chi", "--definitely-not-a-flag"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_corpus_small() {
    let (stdout, _, code) = run(&[
        "verify-corpus",
        "--max-n",
        "4",
        "--grid",
        "2",
        "--random-samples",
        "6",
        "--seed",
        "11",
    ]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("cases passed"));
    assert!(stdout.contains("find_partition_t1"));
}

#[test]
fn deterministic_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write_c5(dir.path());
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for out in [&a, &b] {
        let (_, _, code) = run(&[
            "partition",
            "--input",
            &c5,
            "--r",
            "2,2",
            "--d",
            "4",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
    }
    assert_eq!(
        std::fs::read_to_string(&a).unwrap(),
        std::fs::read_to_string(&b).unwrap()
    );
}
