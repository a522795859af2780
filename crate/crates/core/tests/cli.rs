use avoidance_lab::cli::run;
use avoidance_lab::engine::count_avoiders;
use avoidance_lab::partition::SetPartition;
use avoidance_lab::Limits;
use serde_json::Value;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("avoidance-lab").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn stdout(args: &[&str]) -> String {
    let (code, out, err) = cli(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn json_result(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let v: Value = serde_json::from_str(stdout(&full).trim()).unwrap();
    v["result"].clone()
}

/// Commands with their expected plain-text output.
const GOLDEN: &[(&[&str], &str)] = &[
    (&["standardize", "1635/24"], "1356/24"),
    (&["contains", "136/5/27", "14/23"], "true"),
    (&["contains", "136/5/27", "1/234"], "false"),
    (&["contains-tuple", "132|231", "12|12"], "true"),
    (&["contains-hg", "1,2,3;2,4", "1,2;1,3"], "true"),
    (&["contains-hg", "1,2", "1;2"], "false"),
    (&["permutability", "1/2/3"], "0"),
    (&["permutability", "14/23", "--witness"], "1\n1,2|3,4"),
    (&["pm-dist", "--n", "3"], "0 1\n1 3\n2 1"),
    (&["count", "--pattern", "123", "--n", "6"], "76"),
    (&["count", "--pattern", "123", "--n", "6", "--no-singletons"], "15"),
    (&["seq", "--pattern", "1/2/3", "--nmax", "5"], "1 1\n2 2\n3 4\n4 8\n5 16"),
    (&["count-tuples", "--pattern", "12|21", "--n", "2"], "3"),
    (&["count-tuples", "--pattern", "123", "--n", "4"], "14"),
    (&["contract", "--hg", "1,3;2,4", "--s", "2"], "1,2"),
    (&["project", "--hg", "1,2;1,3;2,3", "--drop", "1"], "2;3"),
    (&["project", "--hg", "1,2;1,4", "--drop", "2"], "1@4"),
    (&["classify", "--basis", "123"], "superexp(2)"),
    (&["classify", "--basis", ""], "bell"),
];

#[test]
fn golden_outputs() {
    for (args, expected) in GOLDEN {
        assert_eq!(stdout(args), format!("{expected}\n"), "{args:?}");
    }
}

#[test]
fn results_match_library_calls() {
    let limits = Limits::default();
    for pattern in ["12", "1/23", "14/23", "13/24"] {
        let p: SetPartition = pattern.parse().unwrap();
        for n in [4, 7] {
            let expected = count_avoiders(&p, n, false, &limits).unwrap().to_string();
            let n_text = n.to_string();
            assert_eq!(stdout(&["count", "--pattern", pattern, "--n", &n_text]).trim(), expected);
            assert_eq!(json_result(&["count", "--pattern", pattern, "--n", &n_text]), Value::String(expected));
        }
    }
}

#[test]
fn json_is_stable() {
    let corpus: &[&[&str]] = &[
        &["count", "--pattern", "123", "--n", "8"],
        &["seq", "--pattern", "14/23", "--nmax", "7"],
        &["antichain-prob", "--d", "2", "--n", "4", "--samples", "5000", "--seed", "3"],
        &["max-weight", "--hg", "1,3;2,4", "--n", "4", "--budget", "100000"],
        &["certify-lower", "--pattern", "123", "--n", "8"],
        &["growth-fit", "--pattern", "123", "--nmax", "8"],
    ];
    for args in corpus {
        let first = json_result(args);
        assert_eq!(first, json_result(args), "{args:?}");
    }
}

#[test]
fn threads_do_not_change_results() {
    let corpus: &[&[&str]] = &[
        &["count", "--pattern", "13/24", "--n", "9"],
        &["count-tuples", "--pattern", "12|12", "--n", "4"],
        &["antichain-prob", "--d", "2", "--n", "5", "--samples", "20000", "--seed", "7"],
    ];
    for args in corpus {
        let mut one = vec!["--threads", "1"];
        one.extend_from_slice(args);
        let mut four = vec!["--threads", "4"];
        four.extend_from_slice(args);
        assert_eq!(stdout(&one), stdout(&four), "{args:?}");
    }
}

#[test]
fn csv_layout() {
    let out = stdout(&["--csv", "seq", "--pattern", "123", "--nmax", "5"]);
    assert_eq!(out, "n,value\n1,1\n2,2\n3,4\n4,10\n5,26\n");
}

#[test]
fn cache_dir_is_used() {
    let dir = tempfile::tempdir().unwrap();
    let dir_text = dir.path().to_str().unwrap();
    let a = stdout(&["--cache-dir", dir_text, "seq", "--pattern", "123", "--nmax", "6"]);
    let cached = std::fs::read_to_string(dir.path().join("counts.jsonl")).unwrap();
    assert_eq!(cached.lines().count(), 6);
    let b = stdout(&["--cache-dir", dir_text, "seq", "--pattern", "123", "--nmax", "6"]);
    assert_eq!(a, b);
}

#[test]
fn errors_and_exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["standardize", "1/x"], 2),
        (&["contains", "12/2", "1"], 2),
        (&["contains-tuple", "12|21", "1"], 2),
        (&["count", "--pattern", "123"], 2),
        (&["count", "--pattern", "123", "--n", "13"], 3),
        (&["pm-dist", "--n", "20"], 3),
        (&["antichain-prob", "--d", "0", "--n", "3", "--samples", "10"], 2),
        (&["project", "--hg", "1,2;1,2,3", "--drop", "1"], 2),
        (&["--threads", "0", "count", "--pattern", "1", "--n", "1"], 2),
    ];
    for (args, code) in cases {
        let (got, out, err) = cli(args);
        assert_eq!(got, *code, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
    assert_eq!(cli(&["--version"]).0, 0);
}
