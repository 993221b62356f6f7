use std::process::Command;

use lcsa::cli::run;

fn call(args: &[&str]) -> (i32, String) {
    let mut buf = Vec::new();
    let mut all = vec!["lcsa"];
    all.extend_from_slice(args);
    let code = run(all, &mut buf);
    (code, String::from_utf8(buf).unwrap())
}

fn source(text: &str) -> (tempfile::TempDir, String) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.lcsa");
    std::fs::write(&path, text).unwrap();
    (dir, path.to_string_lossy().into_owned())
}

#[test]
fn family_checks_pass() {
    assert_eq!(
        call(&["family", "--name", "K", "--n", "3", "--check", "axioms"]).0,
        0
    );
    let (code, out) = call(&[
        "family", "--name", "s", "--n", "2", "--a", "a", "--check", "all",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("derived series"));
}

#[test]
fn corrupted_source_fails_with_residual() {
    let (_d, path) = source("algebra Bad\nbasis L even\nbracket L L = (d + 3*l) L\n");
    let (code, out) = call(&["check", &path]);
    assert_eq!(code, 1);
    assert!(out.contains("Skew"), "{out}");
    let (_d, path) = source("algebra Vir\nbasis L even\nbracket L L = (d + 2*l) L\n");
    assert_eq!(call(&["check", &path]).0, 0);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(call(&["family", "--name", "K", "--bogus"]).0, 2);
    assert_eq!(call(&["nonsense"]).0, 2);
    let (_d, path) = source("algebra V\nbasis L even, G odd\nbracket L G = x\n");
    let (code, out) = call(&["check", &path]);
    assert_eq!(code, 2);
    assert!(out.contains("3:15"), "{out}");
    assert_eq!(call(&["catalog-physical", "--max-n", "7"]).0, 2);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn catalog_and_solvers() {
    let (code, out) = call(&["catalog-physical", "--max-n", "6"]);
    assert_eq!(code, 0, "{out}");
    let (code, out) = call(&["cder", "--name", "cur", "--dmax", "1", "--lmax", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("C[d]-rank 4"), "{out}");
    assert_eq!(
        call(&["centroid", "--name", "w", "--n", "1", "--dmax", "1"]).0,
        0
    );
    assert_eq!(call(&["ccentroid", "--name", "k", "--n", "1"]).0, 0);
    let (code, out) = call(&["derived", "--name", "w", "--n", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("not_solvable"));
}

#[test]
fn export_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    assert_eq!(
        call(&[
            "export",
            "--name",
            "k",
            "--n",
            "2",
            "--out",
            a.to_str().unwrap()
        ])
        .0,
        0
    );
    assert_eq!(
        call(&[
            "export",
            "--name",
            "k",
            "--n",
            "2",
            "--out",
            b.to_str().unwrap()
        ])
        .0,
        0
    );
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let back = lcsa::dsl::import_structure(&std::fs::read_to_string(&a).unwrap()).unwrap();
    assert_eq!(back.rank(), 4);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_lcsa");
    let ok = Command::new(bin)
        .args(["family", "--name", "w", "--n", "1"])
        .output()
        .unwrap()
        .status;
    assert_eq!(ok.code(), Some(0));
    let bad = Command::new(bin)
        .args(["family", "--nope"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
