//! End-to-end CLI checks. Golden files live in `tests/golden/`; set
//! `UPDATE_GOLDEN=1` to rewrite them after an intended schema change.

use std::path::PathBuf;
use std::process::Command;

use shlab::cli::{run, Output};

fn shlab(args: &[&str]) -> Output {
    run(std::iter::once("shlab").chain(args.iter().copied()))
}

fn data(rel: &str) -> String {
    format!("{}/data/{rel}", env!("CARGO_MANIFEST_DIR"))
}

fn golden(name: &str, args: &[&str], code: i32) {
    let out = shlab(args);
    assert_eq!(out.code, code, "{args:?}: {}{}", out.stdout, out.stderr);
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &out.stdout).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(out.stdout, want, "golden {name} differs");
}

#[test]
fn spec_examples() {
    // the deduction identity with every `=>` written out
    let expanded = "(x -> x & y) -> ((x -> x & y) & (y' -> y' & x'))";
    assert_eq!(
        shlab::parse(expanded).unwrap(),
        shlab::parse("(x => y) => (y' => x')").unwrap()
    );
    let out = shlab(&["identity", "check", "--algebra", "L1dm", "--expr", expanded]);
    assert_eq!(out.code, 1, "{}", out.stderr);
    assert!(out.stdout.contains("fails at x=1, y=a"), "{}", out.stdout);
    let out = shlab(&[
        "identity",
        "check",
        "--algebra",
        "L1dm",
        "--expr",
        "(x => y) => (y' => x')",
    ]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("fails at x=1, y=a"), "{}", out.stdout);

    let out = shlab(&["enumerate", "--order", "3", "--class", "SH"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("order 3: 10 algebras in SH\n"), "{}", out.stdout);
    assert_eq!(out.stdout.lines().filter(|l| l.contains("elements")).count(), 10);

    let out = shlab(&["logic", "decide", "--logic", "DPCSHC3", "x | x'"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "valid\n"));
}

#[test]
fn exit_codes() {
    let neg_join = data("proofs/neg-join.proof");
    let mutant = data("proofs/mutations/scp-on-atom.proof");
    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["algebra", "list"], 0),
        (vec!["algebra", "show", "D1"], 0),
        (vec!["algebra", "check", "L1dm", "--class", "DMSH"], 0),
        (vec!["algebra", "check", "L1dm", "--class", "DPCSH"], 1),
        (vec!["algebra", "show", "Nope"], 2),
        (vec!["enumerate", "--order", "2"], 0),
        (vec!["enumerate", "--order", "9"], 2),
        (vec!["identity", "check", "--algebra", "D2", "--id", "FTT"], 0),
        (vec!["identity", "check", "--algebra", "D1,D2", "--id", "FTT"], 1),
        (vec!["identity", "check", "--algebra", "D2", "--id", "no-such"], 2),
        (vec!["identity", "check", "--algebra", "D2", "--expr", "x &"], 2),
        (vec!["identity", "check", "--algebra", "D2"], 2),
        (vec!["base", "verify", "--key", "rdqd/join-definable"], 0),
        (vec!["base", "verify", "--key", "rdqd/join-absorb+dpc"], 1),
        (vec!["base", "verify", "--key", "nope"], 2),
        (
            vec![
                "base",
                "verify",
                "--generators",
                "D2",
                "--ambient",
                "DQDBSH",
                "--ids",
                "join-definable",
            ],
            0,
        ),
        (
            vec![
                "base",
                "verify",
                "--generators",
                "D2",
                "--ambient",
                "DQDBSH",
                "--ids",
                "FTF",
            ],
            1,
        ),
        (vec!["base", "verify", "--curated"], 0),
        (vec!["base", "verify", "--full"], 0),
        (vec!["logic", "list"], 0),
        (vec!["logic", "decide", "--logic", "DMSHC3", "x | x'"], 1),
        (vec!["logic", "decide", "--logic", "DHMSH", "x"], 2),
        (vec!["logic", "deduction", "--logic", "L(2e)"], 0),
        (vec!["logic", "deduction", "--logic", "L(L1dm)"], 2),
        (vec!["free", "--generators", "2e", "--arity", "1"], 0),
        (vec!["member", "--algebra", "D2", "--generators", "D1,D2,D3"], 0),
        (vec!["member", "--algebra", "L1dm", "--generators", "2e"], 1),
        (vec!["proof", "check", &neg_join], 0),
        (vec!["proof", "check", &mutant], 1),
        (vec!["proof", "check", "/nonexistent.proof"], 2),
        (
            vec!["proof", "search", "--logic", "DHMSH", "--goal", "1", "--depth", "1"],
            0,
        ),
        (
            vec!["proof", "search", "--logic", "DHMSH", "--goal", "0", "--depth", "2"],
            1,
        ),
        (vec!["registry", "dump"], 0),
        (vec!["frobnicate"], 2),
        (vec![], 2),
        (vec!["--help"], 0),
    ];
    for (args, code) in cases {
        let out = shlab(&args);
        assert_eq!(
            out.code, code,
            "{args:?}\nstdout: {}\nstderr: {}",
            out.stdout, out.stderr
        );
        if code == 2 {
            assert!(!out.stderr.is_empty(), "{args:?}");
        }
    }
}

#[test]
fn consequence_reads_premise_file() {
    let dir = std::env::temp_dir().join(format!("shlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("premises.txt");
    std::fs::write(&p, "# modus ponens shape\nx\nx => y\n").unwrap();
    let p = p.to_str().unwrap();
    assert_eq!(
        shlab(&["logic", "consequence", "--logic", "DMSHC3", "--premises", p, "y"]).code,
        0
    );
    assert_eq!(
        shlab(&["logic", "consequence", "--logic", "DMSHC3", "--premises", p, "y'"]).code,
        1
    );
}

#[test]
fn loaded_algebras_are_usable() {
    let dir = std::env::temp_dir().join(format!("shlab-load-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("mine.alg");
    let d1 = shlab(&["algebra", "show", "D1"])
        .stdout
        .replace("algebra D1", "algebra MyD1");
    std::fs::write(&p, d1).unwrap();
    let p = p.to_str().unwrap();
    let out = shlab(&["--load", p, "identity", "check", "--algebra", "MyD1", "--id", "FTF"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let out = shlab(&["--load", p, "member", "--algebra", "MyD1", "--generators", "D1"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(shlab(&["--load", p, "algebra", "list"]).stdout.contains("MyD1"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["--json", "base", "verify", "--curated"],
        vec!["--json", "enumerate", "--order", "3"],
        vec!["--json", "free", "--generators", "L1dm", "--arity", "1"],
        vec!["registry", "dump"],
    ] {
        assert_eq!(shlab(&args), shlab(&args), "{args:?}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_shlab");
    let st = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let o = st(&["logic", "decide", "--logic", "DPCSHC3", "x | x'"]);
    assert_eq!(
        (o.status.code(), String::from_utf8_lossy(&o.stdout).as_ref()),
        (Some(0), "valid\n")
    );
    assert_eq!(
        st(&["identity", "check", "--algebra", "L1dm", "--id", "deduction"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(st(&["nope"]).status.code(), Some(2));
}

#[test]
fn json_error_envelope() {
    let out = shlab(&["--json", "algebra", "show", "Nope"]);
    assert_eq!(out.code, 2);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["version"], 1);
    assert_eq!(v["command"], "algebra show");
    assert!(v["error"].as_str().unwrap().contains("Nope"));
}

#[test]
fn golden_identity_check() {
    golden(
        "identity-check",
        &[
            "--json",
            "identity",
            "check",
            "--algebra",
            "L1dm,2e",
            "--id",
            "deduction",
        ],
        1,
    );
}

#[test]
fn golden_logic_decide() {
    golden(
        "logic-decide",
        &["--json", "logic", "decide", "--logic", "DMSHC3", "x | x'"],
        1,
    );
}

#[test]
fn golden_algebra_show() {
    golden("algebra-show", &["--json", "algebra", "show", "D1"], 0);
}

#[test]
fn golden_member() {
    golden(
        "member",
        &["--json", "member", "--algebra", "L1dm", "--generators", "2e"],
        1,
    );
}

#[test]
fn golden_free() {
    golden("free", &["--json", "free", "--generators", "2e", "--arity", "1"], 0);
}

#[test]
fn golden_base_verify() {
    golden(
        "base-verify",
        &["--json", "base", "verify", "--key", "rdqd/join-definable"],
        0,
    );
}

#[test]
fn golden_proof_check() {
    golden(
        "proof-check",
        &["--json", "proof", "check", &data("proofs/neg-join.proof")],
        0,
    );
}

#[test]
fn golden_enumerate() {
    golden("enumerate", &["--json", "enumerate", "--order", "3"], 0);
}

#[test]
fn golden_registry() {
    golden("registry", &["--json", "registry", "dump"], 0);
}
