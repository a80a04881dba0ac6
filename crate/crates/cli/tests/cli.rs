use std::path::Path;
use std::process::{Command, Output};

fn binmorph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binmorph"))
        .args(args)
        .current_dir(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden"))
        .output()
        .unwrap()
}

#[test]
fn falsify_is_identical_across_execution_modes() {
    let args = ["falsify", "--seed", "99", "--trials", "25", "--length", "1024"];
    let parallel = binmorph(&args);
    let sequential = binmorph(&[&args[..], &["--sequential"]].concat());
    assert_eq!(parallel.status.code(), Some(0));
    assert_eq!(parallel.stdout, sequential.stdout);
    let text = String::from_utf8(parallel.stdout).unwrap();
    assert_eq!(text.lines().count(), 51);
    let summary: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(summary["summary"]["noncommuting_fits"], 0);
    assert_eq!(summary["summary"]["control_matches"], 25);
}

#[test]
fn usage_errors_name_the_flag() {
    for (args, flag) in [
        (&["analyze", "--morphism", "fixtures/missing.json"][..], "--morphism"),
        (&["analyze", "--morphism", "fixtures/malformed.json"][..], "--morphism"),
        (&["generate", "--generator", "nope", "--length", "3"][..], "--generator"),
        (&["apply", "--morphism", "fixtures/ab_a.json", "--generator", "fibonacci"][..], "--length"),
        (&["period", "--input", "abab", "--max-period", "0"][..], "--max-period"),
        (&["falsify", "--seed", "1", "--alphabet", "1"][..], "--alphabet"),
    ] {
        let out = binmorph(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty());
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.contains(flag), "{args:?}: {err}");
    }
}

#[test]
fn input_file_and_generator_sources() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.txt");
    std::fs::write(&path, "abcbcbc\n").unwrap();
    let out = binmorph(&["period", "--input-file", path.to_str().unwrap(), "--max-period", "4", "--min-reps", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains(r#""period":"bc""#));

    let out = binmorph(&["apply", "--morphism", "fixtures/ab_ba.json", "--generator", "thue-morse", "--length", "4"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "{\"image\":\"abbabaab\"}\n");
}

#[test]
fn witness_with_generator_needs_length() {
    let out = binmorph(&["witness", "--morphism", "fixtures/a_ba.json", "--generator", "thue-morse", "--period", "a"]);
    assert_eq!(out.status.code(), Some(1));
}
