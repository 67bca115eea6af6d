use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lissatoric"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn braid_words() {
    let o = run(&["braid", "3", "4", "5", "--method", "symbolic"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).trim(),
        "s2 s1^-1 s2^-1 s1 s2^-1 s1^-1 s2 s1 s2^-1 s1"
    );

    let o = run(&["braid", "3", "5", "10"]);
    assert_eq!(stdout(&o).trim(), ["s2^-1 s1"; 5].join(" "));

    for method in ["exact", "float"] {
        let o = run(&["braid", "3", "5", "4", "--method", method]);
        assert!(o.status.success(), "{method}");
        assert_eq!(stdout(&o).split_whitespace().count(), 10);
    }
}

#[test]
fn braid_json_has_normalization_and_blocks() {
    let o = run(&["braid", "3", "4", "10", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["normalization"]["d"], 2);
    assert_eq!(v["normalization"]["swapped"], true);
    assert_eq!(v["length"], 20);
    assert!(v["blocks"].as_str().unwrap().starts_with('a'));
}

#[test]
fn exact_dump_lines() {
    let o = run(&["braid", "3", "5", "4", "--method", "exact", "--dump"]);
    let text = stdout(&o);
    let events: Vec<_> = text.lines().filter(|l| l.starts_with("t=")).collect();
    assert_eq!(events.len(), 10);
}

#[test]
fn invalid_parameters_exit_2() {
    let o = run(&["braid", "3", "6", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("gcd"));
    // phi = 0 is critical for K(3,5,4)
    let o = run(&["braid", "3", "5", "4", "--method", "exact", "--phase", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[
        "braid", "3", "5", "4", "--method", "exact", "--phase", "nonsense",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_reports() {
    let o = run(&["verify", "3", "4", "5"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(
        text.contains("symbolic vs exact: MirrorEqual")
            || text.contains("symbolic vs exact: Equal")
    );

    let o = run(&["verify", "5", "6", "22", "--phases", "4"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o)
            .lines()
            .filter(|l| l.contains("at phase"))
            .count(),
        4
    );
    assert!(!stdout(&o).contains("Distinct"));

    let o = run(&["verify", "2", "3", "5"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("symbolic vs exact: Equal"));
}

#[test]
fn classify_reports() {
    let t = stdout(&run(&["classify", "3", "5", "7"]));
    assert!(t.contains("quasipositive   yes") && t.contains("exact g4        0"));
    let t = stdout(&run(&["classify", "3", "5", "10"]));
    assert!(
        t.contains("periodic d      5") && t.contains("genus bound     4") && t.contains("unknown")
    );
    let t = stdout(&run(&["classify", "3", "5", "29"]));
    assert!(t.contains("trivial family  2Nq-1") && t.contains("jones trivial   yes"));
    let v: serde_json::Value =
        serde_json::from_slice(&run(&["classify", "3", "5", "31", "--format", "json"]).stdout)
            .unwrap();
    assert_eq!(v["trivial_family"], "2Nq+1");
    assert_eq!(v["jones_trivial"], true);
}

#[test]
fn strand_limit_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_lissatoric"))
        .args(["classify", "3", "5", "29"])
        .env("LISSATORIC_STRAND_LIMIT", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.tsv");
    let b = dir.path().join("b.tsv");
    let base = [
        "sweep", "--N", "3", "--q", "11", "--p-min", "1", "--p-max", "60", "--out",
    ];
    assert!(run(&[&base[..], &[a.to_str().unwrap()]].concat())
        .status
        .success());
    assert!(
        run(&[&base[..], &[b.to_str().unwrap(), "--parallel"]].concat())
            .status
            .success()
    );
    let ta = std::fs::read(&a).unwrap();
    assert_eq!(ta, std::fs::read(&b).unwrap());

    let text = String::from_utf8(ta).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "N\tq\tp\td\tbraid_len\tjones\tflags\tverify_status"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows.len(), 40);
    for r in &rows {
        assert!(r[7] == "Equal" || r[7] == "MirrorEqual", "{r:?}");
        if r[6].contains("trivial:") {
            assert_eq!(r[5], "1", "{r:?}");
        }
    }
}

#[test]
fn sweep_json_and_io_errors() {
    let o = run(&[
        "sweep", "--N", "4", "--q", "5", "--p-min", "1", "--p-max", "9", "--format", "json",
        "--float",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert!(rows
        .iter()
        .all(|r| r["verify_status"].as_str().unwrap().ends_with("/Equal")));

    let o = run(&[
        "sweep",
        "--N",
        "3",
        "--q",
        "5",
        "--p-min",
        "1",
        "--p-max",
        "4",
        "--out",
        "/nonexistent/dir/x.tsv",
    ]);
    assert_eq!(o.status.code(), Some(4));
    let o = run(&[
        "sweep", "--N", "3", "--q", "6", "--p-min", "1", "--p-max", "4",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn render_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("k.csv");
    let svg = dir.path().join("k.svg");
    let o = run(&[
        "render",
        "3",
        "5",
        "4",
        "--coords",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert!(o.status.success());

    let text = std::fs::read_to_string(&csv).unwrap();
    let rows: Vec<Vec<f64>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 1000);
    let (first, last) = (&rows[0], &rows[rows.len() - 1]);
    for (a, b) in [(first[1], 2.0), (first[2], 0.0), (first[3], 1.0)] {
        assert!((a - b).abs() < 1e-9);
    }
    for c in 1..4 {
        assert!((first[c] - last[c]).abs() < 1e-9);
    }

    let drawing = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(drawing.matches("class=\"crossing\"").count(), 10);
    assert_eq!(drawing.matches("class=\"strand\"").count(), 3);
}
