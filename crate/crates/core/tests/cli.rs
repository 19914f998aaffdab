use std::path::PathBuf;
use std::process::Command;

use monoideal::text::{format_monomial_file, parse_monomial_file, parse_tgraph};
use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn run_with(args: &[&str], env: Option<(&str, &str)>) -> (i32, Value) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_monoideal"));
    cmd.args(args).env_remove("MONOIDEAL_BUDGET");
    if let Some((k, v)) = env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(stdout.trim()).unwrap_or(Value::String(stdout));
    (out.status.code().unwrap(), json)
}

fn run(args: &[&str]) -> (i32, Value) {
    run_with(args, None)
}

#[test]
fn exit_codes_over_the_corpus() {
    let cases: &[(&[&str], i32)] = &[
        (&["reduce", &data("reducible.mon")], 0),
        (&["check-fg", &data("example.mon")], 1),
        (&["check-fg", &data("example.mon"), "--order", "b a c"], 0),
        (&["check-fg", &data("malformed.mon")], 2),
        (&["check-fg", &data("no_such_file.mon")], 2),
        (&["check-fg", &data("example.mon"), "--order", "a b"], 2),
        (&["generators", &data("example.mon")], 1),
        (&["gb-lift", &data("example.mon"), "--order", "b<a<c"], 0),
        (&["is-cool", &data("example.mon"), "--order", "a,c,b"], 1),
        (&["find-cool", &data("example.mon")], 0),
        (&["find-cool", &data("c5.mon")], 1),
        (&["all-cool", &data("a2bc.mon")], 0),
        (&["all-cool", &data("example.mon")], 1),
        (&["preimage-fg", &data("a2bc.mon")], 1),
        (&["preimage-fg", &data("square.mon"), "--pairs"], 1),
        (
            &[
                "oracle",
                &data("square.mon"),
                "--target",
                "preimage",
                "--cap",
                "6",
            ],
            0,
        ),
        (&["torient", &data("tophat.tgraph")], 0),
        (&["torient", &data("c5.tgraph")], 1),
        (&["torient", &data("example.mon")], 2),
        (&["gen-tophat"], 0),
        (&["gen-gadget"], 0),
        (&["reduce-nae", &data("nae.cnf")], 0),
        (&["poly-member", &data("sum3.json"), "--point", "1,2"], 0),
        (&["poly-member", &data("sum3.json"), "--point", "1,1"], 1),
        (&["poly-member", &data("sum3.json"), "--point", "1"], 2),
        (&["poly-mingens", &data("sum3.json")], 0),
        (&["poly-union", &data("sum3.json"), &data("sum3.json")], 0),
        (&["poly-from-gens", &data("example.mon")], 0),
        (&["poly-cert", &data("cube.json"), "--kind", "support3"], 0),
        (
            &["verify-cert", &data("cube.json"), &data("cube_cert.json")],
            0,
        ),
        (
            &["verify-cert", &data("cube.json"), &data("bad_cert.json")],
            1,
        ),
        (&["reduce-sat", &data("unsat.cnf"), "--target", "imfg"], 0),
        (&["reduce-sat", &data("example.mon"), "--target", "imfg"], 2),
        (&["convexity", &data("square.mon")], 0),
        (&["convexity", &data("squares.mon")], 1),
        (&["crosscheck", "--letters", "2", "--max-degree", "2"], 0),
        (&["no-such-command"], 2),
    ];
    for (args, code) in cases {
        assert_eq!(run(args).0, *code, "{args:?}");
    }
}

#[test]
fn check_fg_reports_the_violator() {
    let (_, v) = run(&["check-fg", &data("example.mon"), "--order", "a c b"]);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["witness"]["monomial"], "a^3 b");
    assert_eq!(v["witness"]["letter"], "c");
    let (_, v) = run(&["check-fg", &data("example.mon"), "--order", "b a c"]);
    assert_eq!(v["verdict"], true);
}

#[test]
fn generators_of_the_worked_example() {
    let (code, v) = run(&["generators", &data("example.mon"), "--order", "b a c"]);
    assert_eq!(code, 0);
    let mut words: Vec<&str> = v["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| w.as_str().unwrap())
        .collect();
    words.sort();
    assert_eq!(words, ["baaa", "bbaac", "bbac"]);
}

#[test]
fn five_cycle_is_not_found() {
    let (_, v) = run(&["find-cool", &data("c5.mon")]);
    assert_eq!(v["found"], false);
    assert!(v["ordering"].is_null());
}

#[test]
fn parse_errors_carry_a_position() {
    let (_, v) = run(&["check-fg", &data("malformed.mon")]);
    assert_eq!(
        (v["line"].as_u64(), v["column"].as_u64()),
        (Some(2), Some(3))
    );
}

#[test]
fn budget_flag_and_environment() {
    let args = [
        "oracle",
        &data("square.mon"),
        "--target",
        "preimage",
        "--cap",
        "8",
    ];
    assert_eq!(run(&args).0, 0);
    assert_eq!(run_with(&args, Some(("MONOIDEAL_BUDGET", "5"))).0, 3);
    let mut flagged = vec!["--budget", "1000000"];
    flagged.extend_from_slice(&args);
    assert_eq!(run_with(&flagged, Some(("MONOIDEAL_BUDGET", "5"))).0, 0);
}

#[test]
fn pretty_output_is_not_json() {
    let (code, v) = run(&[
        "--pretty",
        "check-fg",
        &data("example.mon"),
        "--order",
        "b a c",
    ]);
    assert_eq!(code, 0);
    let text = v.as_str().expect("plain text");
    assert!(text.contains("verdict: true"), "{text}");
}

#[test]
fn graph_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gadget.tgraph");
    let (code, v) = run(&["gen-gadget", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let g = parse_tgraph(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(g.vertex_count() as u64, v["vertices"].as_u64().unwrap());
    assert_eq!((g.edge_count(), g.t_vertices().len()), (30, 9));
}

#[test]
fn monomial_files_round_trip() {
    for name in [
        "example.mon",
        "c5.mon",
        "square.mon",
        "a2bc.mon",
        "reducible.mon",
    ] {
        let text = std::fs::read_to_string(data(name)).unwrap();
        let f = parse_monomial_file(&text).unwrap();
        let again = parse_monomial_file(&format_monomial_file(
            &f.alphabet,
            &f.monomials,
            f.order.as_ref(),
        ))
        .unwrap();
        assert_eq!(again, f, "{name}");
    }
}
