use std::process::{Command, Output};

fn pshuffle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pshuffle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = pshuffle(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    pshuffle(args).status.code().unwrap()
}

#[test]
fn shuffle_examples() {
    assert_eq!(
        stdout(&["shuffle", "--a", "3", "--b", "2"]),
        "12453 12435 13245 31245\n"
    );
    assert_eq!(stdout(&["shuffle", "--a", "2", "--b", "0"]), "21\n");
    assert_eq!(stdout(&["shuffle", "--a", "3", "--b", "1", "--sigma"]), "1324\n");
}

#[test]
fn smap_examples() {
    let step = stdout(&["smap", "--perm", "582916743", "--a", "3", "--b", "1"]);
    assert_eq!(step.lines().next(), Some("683912754"));
    assert!(step.contains("underline a = 6 at position 6, interval [2,5]"));

    let fixed = stdout(&["smap", "--perm", "1 2 3 4 5 6", "--a", "3", "--b", "1"]);
    assert_eq!(fixed, "123456\nfixed point\n");

    let trace = stdout(&["smap", "--perm", "582916743", "--a", "3", "--b", "1", "--iterate"]);
    let last = trace.lines().last().unwrap();
    assert!(last.ends_with("lies in Av(Pi(2,2))"), "{trace}");
}

#[test]
fn smap_json_has_the_step_fields() {
    let out = stdout(&[
        "smap",
        "--perm",
        "582916743",
        "--a",
        "3",
        "--b",
        "1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["output"], "6 8 3 9 1 2 7 5 4");
    assert_eq!(v["mark"]["underline_a_value"], 6);
    assert_eq!(v["mark"]["assoc_low"], 2);
}

#[test]
fn count_formats() {
    let csv = stdout(&["count", "--a", "2", "--b", "1", "--max-n", "5", "--format", "csv"]);
    assert_eq!(csv, "n,count\n0,1\n1,1\n2,2\n3,4\n4,8\n5,16\n");
    let json = stdout(&[
        "count", "--basis", "231", "--max-n", "4", "--min-n", "3", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["counts"][1]["count"], 14);
    assert_eq!(v["basis"], serde_json::json!(["2 3 1"]));
}

#[test]
fn non_antichain_basis_warns() {
    let out = pshuffle(&["count", "--basis", "21,321", "--max-n", "3"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not an antichain"));
}

#[test]
fn wilf_and_fit_examples() {
    let wilf = stdout(&["wilf", "--size", "3", "--max-n", "9"]);
    assert!(wilf.starts_with("a+b = 3, n <= 9: pass\n"));
    assert!(wilf.contains("\n9      256      256      256\n"), "{wilf}");
    assert_eq!(
        stdout(&["fit", "--a", "3", "--b", "0", "--delta", "3", "--max-n", "10"]),
        "1·C(n,1)\n"
    );
}

#[test]
fn conjecture_table() {
    let out = stdout(&["conjecture", "--sum", "4", "--max-n", "10"]);
    assert!(
        out.starts_with("Pi(4,0) with delta_3, conjectured from n = 5: pass\n2·C(n,2) - 1·C(n,0)\n"),
        "{out}"
    );
    assert!(out.contains("\n10         89          89    yes\n"), "{out}");
}

#[test]
fn conjecture_below_threshold_compares_at_max_n() {
    let out = stdout(&["conjecture", "--sum", "6", "--max-n", "8"]);
    assert!(
        out.starts_with("Pi(6,0) with delta_3, conjectured from n = 9: pass\n"),
        "{out}"
    );
    assert_eq!(out.lines().count(), 4, "{out}");
    let window = stdout(&[
        "conjecture",
        "--a",
        "2",
        "--b",
        "3",
        "--min-n",
        "6",
        "--max-n",
        "11",
        "--format",
        "csv",
    ]);
    assert_eq!(window.lines().count(), 7, "{window}");
}

#[test]
fn checks_pass_with_exit_zero() {
    for args in [
        &["verify-lemmas", "--pair", "2:0,3:1", "--max-n", "6"][..],
        &["bijection", "--a", "3", "--b", "2", "--max-n", "7"],
        &["catalan", "--max-k", "8", "--witnesses", "3"],
        &["degree", "--case", "3:3,4:3", "--max-n", "11"],
        &["extremal", "--p", "2,3", "--q", "3,4"],
        &["oracle", "--size", "3", "--delta", "3", "--basis", "21", "--max-n", "6"],
        &["free-slots", "--a", "3", "--b", "0", "--delta", "4", "--max-n", "10"],
    ] {
        assert_eq!(code(args), 0, "{args:?}");
    }
}

#[test]
fn peg_examples() {
    assert_eq!(
        stdout(&["inflate", "--base", "3412", "--parts", "1,321,12,21"]),
        "58761243\n"
    );
    let out = stdout(&[
        "peg",
        "--peg",
        "7+ 5. 8+ 6. 9+ 3. 10+ 4. 11+ 1. 12+ 2. 13+",
        "--a",
        "4",
        "--b",
        "0",
        "--delta",
        "5",
        "--max-n",
        "14",
    ]);
    assert!(
        out.contains("free slots 7\n") && out.contains("result     pass\n"),
        "{out}"
    );
}

#[test]
fn failed_verification_exits_one() {
    // every member of this class is decreasing, so it contains 21 = Π(2,0)
    let out = pshuffle(&[
        "peg", "--peg", "1-", "--a", "2", "--b", "0", "--delta", "3", "--max-n", "4",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("result     FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&["shuffle", "--a", "2", "--b", "1", "--bogus"]), 2);
    assert_eq!(code(&["shuffle", "--a", "0", "--b", "1"]), 2);
    assert_eq!(code(&["smap", "--perm", "1 1 2", "--a", "2", "--b", "0"]), 2);
    assert_eq!(code(&["smap", "--perm", "21", "--a", "1", "--b", "1"]), 2);
    assert_eq!(code(&["count", "--a", "3", "--b", "0", "--max-n", "30"]), 2);
    assert_eq!(code(&["count", "--max-n", "3"]), 2);
    assert_eq!(code(&["wilf", "--size", "3,4", "--max-n", "5,6,7"]), 2);
    assert_eq!(code(&["inflate", "--base", "21", "--parts", "1", "--format", "csv"]), 2);
    assert_eq!(code(&["count", "--basis", "21", "--max-n", "3", "--workers", "0"]), 2);
}

#[test]
fn force_lifts_the_size_limit() {
    assert_eq!(code(&["catalan", "--max-k", "16"]), 2);
    assert_eq!(code(&["catalan", "--max-k", "16", "--force"]), 0);
}

#[test]
fn output_does_not_depend_on_workers() {
    let cases: [&[&str]; 6] = [
        &["count", "--a", "3", "--b", "1", "--delta", "4", "--max-n", "10"],
        &["wilf", "--size", "4", "--max-n", "8", "--format", "csv"],
        &[
            "verify-lemmas",
            "--a",
            "3",
            "--b",
            "1",
            "--max-n",
            "7",
            "--format",
            "json",
        ],
        &["bijection", "--pair", "2:1,3:2", "--max-n", "8"],
        &["conjecture", "--sum", "3,4", "--max-n", "11", "--format", "json"],
        &["oracle", "--size", "4", "--max-n", "6"],
    ];
    for args in cases {
        let base = stdout(args);
        for workers in ["1", "2", "5"] {
            let mut with: Vec<&str> = args.to_vec();
            with.extend(["--workers", workers]);
            assert_eq!(stdout(&with), base, "{args:?} with --workers {workers}");
        }
        assert_eq!(stdout(args), base, "{args:?} rerun");
    }
}
