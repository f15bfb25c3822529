use std::process::{Command, Output};

fn klcells(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klcells"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = klcells(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn first_line(args: &[&str]) -> String {
    stdout(args).lines().next().unwrap_or_default().to_string()
}

#[test]
fn tableau_examples() {
    assert_eq!(
        first_line(&["tableau", "--weight", "1,4,9,0"]),
        "[[0,4,9],[1]]"
    );
    assert_eq!(
        first_line(&["tableau", "--perm", "2,3,4,1"]),
        "[[1,3,4],[2]]"
    );
    assert_eq!(
        first_line(&["tableau", "--weight", "3,2,1"]),
        "[[1],[2],[3]]"
    );
    assert_eq!(
        first_line(&["tableau", "--weight", "3/2,1/2,5/2"]),
        "[[1/2,5/2],[3/2]]"
    );
}

#[test]
fn gkdim_examples() {
    assert_eq!(first_line(&["gkdim", "--weight", "1,4,9,0"]), "5");
    assert_eq!(first_line(&["gkdim", "--perm", "4,3,2,1"]), "0");
    assert_eq!(first_line(&["gkdim", "--perm", "5,4,2,1,3"]), "4");
    let json = stdout(&["gkdim", "--weight", "1,4,9,0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["gkdim"], 5);
    assert_eq!(v["a"], 1);
    assert_eq!(v["weight"], "1,4,9,0");
    assert_eq!(v["columns"], serde_json::json!([2, 1, 1]));
}

#[test]
fn variety_examples() {
    assert_eq!(
        first_line(&["variety", "--weight", "1,0,2,-1,-2"]),
        "Balpha(2)"
    );
    assert_eq!(
        first_line(&["variety", "--perm", "2,1,4,3"]),
        "nilradical(I=1,3)"
    );
    assert_eq!(
        first_line(&["variety", "--perm", "4,3,2,1"]),
        "tableau([[1],[2],[3],[4]])"
    );
}

#[test]
fn cells_examples() {
    let count = |args: &[&str]| -> u64 {
        let json = stdout(&[args, &["--format", "json"]].concat());
        serde_json::from_str::<serde_json::Value>(&json).unwrap()["count"]
            .as_u64()
            .unwrap()
    };
    assert_eq!(
        count(&["cells", "--n", "3", "--side", "right", "--method", "kl"]),
        4
    );
    assert_eq!(
        count(&["cells", "--n", "4", "--side", "right", "--method", "rs"]),
        10
    );
    assert_eq!(
        count(&["cells", "--n", "4", "--side", "two-sided", "--method", "kl"]),
        5
    );
    assert_eq!(count(&["cells", "--dihedral", "6", "--side", "left"]), 4);
    assert_eq!(
        count(&["cells", "--dihedral", "6", "--side", "two-sided"]),
        3
    );
}

#[test]
fn rs_and_kl_listings_agree() {
    for n in ["3", "4", "5"] {
        for side in ["left", "right", "two-sided"] {
            let kl = stdout(&[
                "cells", "--n", n, "--side", side, "--method", "kl", "--format", "json",
            ]);
            let rs = stdout(&[
                "cells", "--n", n, "--side", side, "--method", "rs", "--format", "json",
            ]);
            let cells =
                |s: &str| serde_json::from_str::<serde_json::Value>(s).unwrap()["cells"].clone();
            assert_eq!(cells(&kl), cells(&rs), "n={n} side={side}");
        }
    }
}

#[test]
fn klpoly_examples() {
    assert_eq!(
        first_line(&["klpoly", "--x", "1,3,2,4", "--w", "3,4,1,2"]),
        "1+q"
    );
    assert_eq!(first_line(&["klpoly", "--x", "1,2,3", "--w", "3,2,1"]), "1");
    assert_eq!(
        first_line(&["klpoly", "--dihedral", "5", "--x", "e", "--w", "s1s2s1"]),
        "1"
    );
    let out = klcells(&["klpoly", "--x", "2,3,1", "--w", "3,1,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_examples() {
    assert_eq!(
        first_line(&["verify", "thm2", "--n", "6"]),
        "verify thm2 n=6: checked 720, failures 0"
    );
    assert_eq!(
        first_line(&["verify", "engine", "--n", "4"]),
        "verify engine n=4: checked 24, failures 0"
    );
    assert_eq!(
        first_line(&["verify", "thm3", "--n", "8"]),
        "verify thm3 n=8: checked 128, failures 0"
    );
    assert!(first_line(&["verify", "thm1"]).ends_with("failures 0"));
}

#[test]
fn verify_output_is_reproducible() {
    let args = [
        "verify",
        "corollaries",
        "--n",
        "6",
        "--samples",
        "300",
        "--seed",
        "42",
    ];
    let a = klcells(&args);
    let b = klcells(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = klcells(&[
        "verify",
        "corollaries",
        "--n",
        "6",
        "--samples",
        "300",
        "--seed",
        "42",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&c.stdout).unwrap();
    assert_eq!(v["checked"], 300);
    assert_eq!(v["failure_count"], 0);
}

#[test]
fn exit_codes() {
    assert_eq!(
        klcells(&["verify", "thm2", "--n", "8"]).status.code(),
        Some(2)
    );
    assert_eq!(
        klcells(&["verify", "engine", "--n", "6"]).status.code(),
        Some(2)
    );
    assert_eq!(klcells(&["verify", "thm9"]).status.code(), Some(2));
    assert_eq!(
        klcells(&["tableau", "--weight", "1/2,0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        klcells(&["tableau", "--perm", "1,1,2"]).status.code(),
        Some(2)
    );
    assert_eq!(klcells(&["tableau"]).status.code(), Some(2));
    assert_eq!(
        klcells(&["cells", "--n", "9", "--method", "kl"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        klcells(&["cells", "--dihedral", "5", "--method", "rs"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn cache_build_inspect_and_reuse() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s4.klc");
    let p = path.to_str().unwrap();
    let built = stdout(&["cache", "build", "--n", "4", "--cache", p]);
    assert!(built.starts_with("model: S4\n"));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("KLCACHE 1 S4\n"));
    assert!(text.contains("\n1,3,2,4;3,4,1,2;1,1\n"));
    assert_eq!(stdout(&["cache", "inspect", "--cache", p]), built);
    assert_eq!(
        first_line(&["klpoly", "--x", "1,3,2,4", "--w", "3,4,1,2", "--cache", p]),
        "1+q"
    );
    let cells = first_line(&["cells", "--n", "4", "--cache", p]);
    assert_eq!(cells, "10 right cells of S4 (kl):");

    // a cache for another group is rejected
    assert_eq!(
        klcells(&["cells", "--n", "3", "--cache", p]).status.code(),
        Some(2)
    );

    let dpath = dir.path().join("i26.klc");
    let d = dpath.to_str().unwrap();
    assert!(
        stdout(&["cache", "build", "--dihedral", "6", "--cache", d]).starts_with("model: I2(6)\n")
    );
    assert!(stdout(&["cache", "inspect", "--cache", d]).contains("elements: 12\n"));

    std::fs::write(&path, "KLCACHE 1 S4\n1,2,3,4;1,2,3,4;1\n").unwrap();
    assert_eq!(
        klcells(&["cache", "inspect", "--cache", p]).status.code(),
        Some(2)
    );
}
