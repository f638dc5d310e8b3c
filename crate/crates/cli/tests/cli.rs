use std::process::Command;

fn solubilizer() -> Command {
    Command::new(env!("CARGO_BIN_EXE_solubilizer"))
}

#[test]
fn successful_run_lists_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out = solubilizer()
        .args(["--group", "psl2:4", "--out"])
        .arg(dir.path())
        .args(["sol", "graph", "color", "hamiltonian", "export-adj"])
        .output()
        .unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "{stdout}");
    assert!(stdout.trim_end().ends_with("PASS"));
    for suffix in ["report.json", "cycle.txt", "coloring.csv", "adjacency.txt"] {
        let p = dir.path().join(format!("psl2-4.{suffix}"));
        assert!(p.exists());
        assert!(stdout.contains(&format!("wrote {}", p.display())), "{stdout}");
    }
}

#[test]
fn flags_are_honoured() {
    let dir = tempfile::tempdir().unwrap();
    let out = solubilizer()
        .args(["--group", "psl2:8", "--mode", "both", "--threads", "2", "--seed", "7", "--restarts", "10", "--out"])
        .arg(dir.path())
        .arg("sol")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let json = std::fs::read_to_string(dir.path().join("psl2-8.report.json")).unwrap();
    assert!(json.contains("\"mode_comparison\""));
}

#[test]
fn bad_input_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 5] = [
        &["--group", "psl2:6", "sol"],
        &["--group", "psl2:4", "frobnicate"],
        &["--group", "psl2:11", "--mode", "shortcut", "sol"],
        &["--group", "sz:8", "graph"],
        &["--group", "psl2:4"],
    ];
    for args in cases {
        let out = solubilizer().args(args).arg("--out").arg(dir.path()).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}
