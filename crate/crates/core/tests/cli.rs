use std::path::Path;
use std::process::{Command, Output};

use fermion_chsh::sweep::CSV_HEADER;

const BIN: &str = env!("CARGO_BIN_EXE_fermion-chsh");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn sweep_to(path: &Path, extra: &[&str]) -> Output {
    let path = path.to_str().unwrap();
    let mut args = vec!["sweep", "--qr", "0.85", "--out", path];
    args.extend_from_slice(extra);
    run(&args)
}

#[test]
fn sweep_writes_every_state_at_every_r() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("fig.csv");
    let svg_path = dir.path().join("fig.svg");
    let out = sweep_to(&csv_path, &["--svg", svg_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));

    let mut reader = csv::Reader::from_path(&csv_path).unwrap();
    assert_eq!(reader.headers().unwrap(), CSV_HEADER.as_slice());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 200 * 8);

    let rob: Vec<f64> = rows
        .iter()
        .filter(|r| &r[4] == "plus" && &r[5] == "rob" && &r[6] == "particle")
        .map(|r| r[9].parse().unwrap())
        .collect();
    assert_eq!(rob.len(), 200);
    assert!((rob[0] - 2.404163056034262).abs() < 1e-9);
    assert!((rob[199] - 1.7).abs() < 1e-9);

    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("<polyline"));
}

#[test]
fn sweep_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    assert_eq!(
        code(&sweep_to(&a, &["--points", "37", "--phase", "1.2"])),
        0
    );
    assert_eq!(
        code(&sweep_to(&b, &["--points", "37", "--ql-phase", "1.2"])),
        0
    );
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn state_reports_measures() {
    let out = run(&[
        "state",
        "--r",
        "0.7853981633974483",
        "--qr",
        "1",
        "--initial",
        "plus",
        "--observer",
        "rob",
        "--sector",
        "particle",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("concurrence      0.707107"), "{text}");
    assert!(text.contains("chsh_horodecki   2.000000"), "{text}");
    assert!(text.contains("violation        false"), "{text}");
}

#[test]
fn check_accepts_small_grid_and_rejects_degenerate_one() {
    let ok = run(&["check", "--grid", "2"]);
    assert_eq!(code(&ok), 0, "{}", stdout(&ok));
    assert!(stdout(&ok).contains("all suites passed"));
    assert!(!stdout(&ok).contains("[FAIL]"));
    assert_eq!(code(&run(&["check", "--grid", "1"])), 2);
}

#[test]
fn accel_maps_to_r() {
    let out = run(&["accel", "--omega", "1", "--a", "1", "--c", "1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("r = 0.043187048525"), "{text}");
    assert!(text.contains("(plus,rob,particle)"));

    let extreme = stdout(&run(&["accel", "--omega", "1", "--a", "1e300", "--c", "1"]));
    assert!(
        extreme.contains("chsh_analytic = 2.000000000000  violation = false"),
        "{extreme}"
    );
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&[])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["accel", "--omega", "1", "--a", "-3"])), 2);
    assert_eq!(
        code(&sweep_to(Path::new("/tmp/ignored.csv"), &["--points", "1"])),
        2
    );
    let out = run(&["sweep", "--qr", "1.5", "--out", "/tmp/ignored.csv"]);
    assert_eq!(code(&out), 2);
    let out = sweep_to(Path::new("/nonexistent-dir/fig.csv"), &["--points", "3"]);
    assert_eq!(code(&out), 3);
}
