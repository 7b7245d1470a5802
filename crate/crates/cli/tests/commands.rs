use std::path::PathBuf;

use rbgf_cli::run;

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

fn rbgf(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rbgf").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn golden_outputs() {
    let (code, out, _) = rbgf(&["table", "gen-stirling", "--nmax", "3"]);
    assert_eq!((code, out), (0, fixture("table_gen_stirling_nmax_3.csv")));
    let (code, out, _) = rbgf(&["verify", "figurate-pentagonal", "--trunc", "15"]);
    assert_eq!(
        (code, out),
        (0, fixture("verify_figurate_pentagonal_15.json"))
    );
    let (code, out, _) = rbgf(&[
        "eval",
        "one(1)*one(1)",
        "--lambda",
        "1",
        "--trunc",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!((code, out), (0, fixture("eval_one_1_squared.json")));
}

#[test]
fn backends_print_identical_json() {
    for expr in fixture("corpus.txt")
        .lines()
        .filter(|l| !l.trim().is_empty())
    {
        for lambda in ["0", "1", "-5/3"] {
            let base = [
                "eval", expr, "--lambda", lambda, "--trunc", "6", "--format", "json",
            ];
            let (c1, recursive, e1) = rbgf(&[&base[..], &["--backend", "recursive"]].concat());
            let (c2, stuffle, _) = rbgf(&[&base[..], &["--backend", "stuffle"]].concat());
            assert_eq!(c1, 0, "{expr}: {e1}");
            assert_eq!(c2, 0);
            assert_eq!(recursive, stuffle, "{expr} at λ={lambda}");
        }
    }
}

#[test]
fn documented_evaluations() {
    let (_, out, _) = rbgf(&[
        "eval", "one(1)^3", "--lambda", "1", "--trunc", "5", "--format", "json",
    ]);
    assert_eq!(
        out,
        "[{\"word\":[0,0],\"coeff\":\"1\"},{\"word\":[0,0,0],\"coeff\":\"6\"},{\"word\":[0,0,0,0],\"coeff\":\"6\"}]\n"
    );
    let (_, out, _) = rbgf(&["eval", "d(P(one(4)))", "--format", "json"]);
    assert_eq!(out, "[{\"word\":[0,0,0,0,0],\"coeff\":\"1\"}]\n");
    let (code, _, err) = rbgf(&["eval", "geominv(one(2))", "--lambda", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("weight 0"), "{err}");
}

#[test]
fn exit_codes() {
    assert_eq!(rbgf(&["eval", "one(1) +"]).0, 2);
    assert_eq!(rbgf(&["eval", "d(w(0,1))"]).0, 2);
    assert_eq!(rbgf(&["verify", "not-an-identity"]).0, 2);
    assert_eq!(rbgf(&["table", "cover", "--kmax", "2"]).0, 2);
    assert_eq!(rbgf(&["eval", "1", "--lambda", "1/0"]).0, 2);
    assert_eq!(rbgf(&["frobnicate"]).0, 2);
    assert_eq!(rbgf(&["--help"]).0, 0);
    assert_eq!(rbgf(&["verify", "qseries-psi", "--trunc", "30"]).0, 0);
}

#[test]
fn parse_errors_report_position() {
    let (_, _, err) = rbgf(&["eval", "one(1) *\n w(0,"]);
    assert!(err.contains("line 2, column 6"), "{err}");
    assert!(err.contains("unsigned integer"), "{err}");
}

#[test]
fn every_verify_target_passes() {
    for id in rbgf_core::verify::Identity::ALL {
        let (code, out, err) = rbgf(&["verify", id.name(), "--trunc", "6"]);
        assert_eq!(code, 0, "{id}: {out}{err}");
        assert!(out.contains("\"equal\":true"));
    }
}

#[test]
fn egf_commands() {
    let ones = ["--lambda", "1", "--trunc", "4"];
    let (_, out, _) =
        rbgf(&[&["egf", "product", "--f", "ones", "--g", "ones"][..], &ones].concat());
    assert_eq!(out, "[\"1\",\"3\",\"9\",\"27\",\"81\"]\n");
    let (_, out, _) = rbgf(&[&["egf", "kfold", "--f", "ones", "--k", "3"][..], &ones].concat());
    assert_eq!(out, "[\"1\",\"7\",\"49\",\"343\",\"2401\"]\n");
    let (_, out, _) = rbgf(&[
        "egf",
        "divided-power",
        "--f",
        "ones-from-1",
        "--k",
        "2",
        "--trunc",
        "3",
    ]);
    assert_eq!(out, "[\"0\",\"0\",\"2\",\"8\"]\n");
    let (_, out, _) = rbgf(&[
        "egf", "compose", "--g", "delta:2", "--f", "delta:2", "--lambda", "-1/2", "--trunc", "4",
    ]);
    assert_eq!(out, "[\"0\",\"0\",\"0\",\"-1\",\"3\"]\n");
    let (_, out, _) = rbgf(&[
        "egf",
        "compose",
        "--g",
        "list:1,1,1/2",
        "--f",
        "list:0,1",
        "--lambda",
        "0",
        "--trunc",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(out, "n,coeff\n0,1\n1,1\n2,1/2\n");
    assert_eq!(rbgf(&["egf", "compose", "--f", "ones"]).0, 2);
    assert_eq!(
        rbgf(&["egf", "divided-power", "--f", "ones", "--k", "1"]).0,
        2
    );
    assert_eq!(
        rbgf(&["egf", "product", "--f", "bogus", "--g", "ones"]).0,
        2
    );
}

#[test]
fn table_formats() {
    let (_, out, _) = rbgf(&["table", "c-total", "--nmax", "2", "--kmax", "2"]);
    assert_eq!(out, "n,k,c-total\n1,1,1\n1,2,1\n2,1,3\n2,2,13\n");
    let (_, out, _) = rbgf(&[
        "table",
        "cover-distinct-max",
        "--kmax",
        "2",
        "--lmax",
        "2",
        "--format",
        "json",
    ]);
    assert!(
        out.contains("{\"n\":3,\"k\":2,\"l\":2,\"cover-distinct-max\":\"2\"}"),
        "{out}"
    );
    assert!(
        out.contains("{\"n\":4,\"k\":2,\"l\":2,\"cover-distinct-max\":\"3\"}"),
        "{out}"
    );
    let (_, out, _) = rbgf(&["table", "c-of-type", "--n", "2", "--k", "2"]);
    assert!(out.contains("2,2,2 1 1,2\n"), "{out}");
    let (_, out, _) = rbgf(&["table", "bell", "--nmax", "7", "--format", "json"]);
    assert!(out.ends_with("{\"n\":7,\"bell\":\"877\"}]\n"), "{out}");
    let (_, out, _) = rbgf(&["table", "gen-bell", "--nmax", "3"]);
    assert_eq!(out, "n,gen-bell\n1,1\n2,3\n3,17\n");
    let (_, out, _) = rbgf(&["table", "stirling", "--nmax", "3", "--format", "text"]);
    assert!(out.starts_with("n  k  stirling\n"), "{out}");
}
