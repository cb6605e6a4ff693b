use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_weyl-reduce"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/worked_chain.json")
}

fn verify_text(json: &str) -> Output {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    run(&["verify", f.path().to_str().unwrap()])
}

const WORKED: [&str; 11] = [
    "reduce",
    "--group",
    "SL",
    "--rank",
    "5",
    "--mu",
    "2,1,0,-1,-2",
    "--w",
    "4321234",
    "--kappa",
    "0",
];

#[test]
fn reduce_worked_example() {
    let o = run(&WORKED);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let steps = v["steps"].as_array().unwrap().len();
    assert!((4..=6).contains(&steps), "{steps} steps");
    assert_eq!(v["elliptic"], true);
    assert_eq!(v["group"], "SL5");
}

#[test]
fn reduce_output_is_byte_deterministic() {
    assert_eq!(run(&WORKED).stdout, run(&WORKED).stdout);
}

#[test]
fn reduce_then_verify_roundtrips() {
    let o = run(&WORKED);
    let mut child = bin()
        .args(["verify", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&o.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn reduce_rejects_missing_support() {
    let o = run(&[
        "reduce",
        "--group",
        "SL",
        "--rank",
        "5",
        "--mu",
        "2,1,0,-1,-2",
        "--w",
        "1",
    ]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not Reuman type"));
}

#[test]
fn reduce_kottwitz_mismatch_exits_one() {
    let ok = run(&[
        "reduce", "--group", "GL", "--rank", "3", "--mu", "3,1,0", "--w", "121",
    ]);
    assert_eq!(code(&ok), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&ok)).unwrap();
    assert_eq!(v["kappa"], 4);
    let bad = run(&[
        "reduce", "--group", "GL", "--rank", "3", "--mu", "3,1,0", "--w", "121", "--kappa", "3",
    ]);
    assert_eq!(code(&bad), 1);
}

#[test]
fn reduce_gl3_ends_at_three_cycle() {
    let o = run(&[
        "reduce", "--group", "GL", "--rank", "3", "--mu", "3,1,0", "--w", "121", "--format", "text",
    ]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let terminal = text.lines().find(|l| l.starts_with("terminal")).unwrap();
    // both 3-cycles in one-line notation
    assert!(
        terminal.contains("p[3,1,2]") || terminal.contains("p[2,3,1]"),
        "{terminal}"
    );
}

#[test]
fn reduce_non_additive_exits_two() {
    let o = run(&[
        "reduce", "--group", "GL", "--rank", "3", "--mu", "3,1,0", "--v", "1", "--w", "121",
    ]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not additive"));
}

#[test]
fn lambda_and_parts_are_cross_checked() {
    let base = ["reduce", "--group", "GL", "--rank", "3", "--w", "121"];
    let o = bin().args(base).args(["--lambda", "3,1,0"]).output().unwrap();
    assert_eq!(code(&o), 0);
    let o = bin()
        .args(base)
        .args(["--lambda", "1,3,0", "--mu", "3,1,0"])
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    let o = run(&["reduce", "--group", "GL", "--w", "121", "--mu", "3,1,0"]);
    assert_eq!(code(&o), 2, "rank missing");
    let o = run(&[
        "reduce", "--group", "SL", "--rank", "3", "--mu", "3,1,0", "--w", "121",
    ]);
    assert_eq!(code(&o), 2, "SL needs sum zero");
}

#[test]
fn verify_worked_chain_fixture() {
    let o = run(&["verify", fixture().to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn verify_names_tampered_step() {
    let text = std::fs::read_to_string(fixture()).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["steps"][2]["lengths"][2] = 27.into();
    let o = verify_text(&v.to_string());
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("step 2"), "{}", stdout(&o));
}

#[test]
fn verify_empty_certificate_on_elliptic_element() {
    let json = r#"{"group":"GL4","lambda":[3,2,1,0],"word":[1,2,3],"steps":[],
        "terminal":{"lambda":[3,2,1,0],"word":[1,2,3]},"elliptic":true,"kappa":6}"#;
    let o = verify_text(json);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn verify_malformed_json_exits_two() {
    assert_eq!(code(&verify_text("{\"group\": ")), 2);
    assert_eq!(code(&run(&["verify", "/nonexistent/cert.json"])), 2);
}

fn sweep(args: &[&str]) -> serde_json::Value {
    let o = bin().arg("sweep").args(args).output().unwrap();
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn sweep_lemmas_sl4() {
    let v = sweep(&["--group", "SL", "--rank", "4", "--suite", "lemmas"]);
    for r in v.as_array().unwrap() {
        assert_eq!(r["status"], "pass", "{r}");
    }
}

#[test]
fn sweep_geck_pfeiffer_g2() {
    let v = sweep(&["--group", "G2", "--suite", "geck-pfeiffer"]);
    let reports = v.as_array().unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r["status"] == "pass"));
    assert_eq!(reports[0]["checked"], 12);
}

#[test]
fn sweep_lengths_rank4() {
    let v = sweep(&["--suite", "lengths", "--rank", "4", "--samples", "20"]);
    let two_sided = v
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["lemma"] == "two-sided-length-formula")
        .unwrap();
    assert_eq!(two_sided["status"], "pass");
    assert_eq!(two_sided["checked"], 576 * 20);
}

#[test]
fn sweep_reduction_with_explicit_mu_and_threads() {
    let o = bin()
        .env("WEYL_REDUCE_THREADS", "2")
        .args([
            "sweep",
            "--group",
            "C2",
            "--suite",
            "reduction",
            "--mu",
            "2,1",
            "--mu",
            "1,3",
        ])
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["status"] == "pass"));
}

#[test]
fn sweep_rejects_bad_input() {
    assert_eq!(code(&run(&["sweep", "--rank", "4", "--suite", "nope"])), 2);
    assert_eq!(
        code(&run(&[
            "sweep",
            "--group",
            "C2",
            "--suite",
            "reduction",
            "--mu",
            "1,0"
        ])),
        2
    );
    let o = bin()
        .env("WEYL_REDUCE_THREADS", "zero")
        .args(["sweep", "--rank", "3"])
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn classify_flags() {
    let o = run(&[
        "classify",
        "--group",
        "SL",
        "--rank",
        "5",
        "--mu",
        "2,1,0,-1,-2",
        "--w",
        "4321234",
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["additive"], true);
    assert_eq!(v["reuman_type"], true);
    assert_eq!(v["elliptic"], false);
    assert_eq!(v["length"], 27);

    let o = run(&[
        "classify",
        "--group",
        "GL",
        "--rank",
        "4",
        "--mu",
        "3,2,1,0",
        "--w",
        "[2,3,4,1]",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["elliptic"], true);
}
