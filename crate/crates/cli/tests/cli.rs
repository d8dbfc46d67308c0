use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use fdrlab::sim::{generate, ModelId, ModelSpec};
use fdrlab::{make_rng_stream, run_test, Calibration, LambdaMode, RunConfig};
use tempfile::TempDir;

fn fdrlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fdrlab")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn data_rows(report: &str) -> Vec<Vec<String>> {
    report
        .lines()
        .skip(1)
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

fn summary<'a>(report: &'a str, key: &str) -> Option<&'a str> {
    report.lines().find_map(|l| l.strip_prefix(&format!("# {key}=")))
}

#[test]
fn two_rows_one_column() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "x.csv", "1.5\n2.5\n");
    let out = fdrlab(&["test", "--input", &input]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("index,t,p,rejected\n"));
    let rows = data_rows(&text);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][0], "1");
    assert_eq!(rows[0][1], "4");
    assert_eq!(summary(&text, "method"), Some("normal"));
}

#[test]
fn header_row_is_detected() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "x.csv", "gene_a, gene_b\n1,4\n2,-1\n3,0.5\n");
    let out = fdrlab(&["test", "--input", &input, "--method", "t"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(data_rows(&stdout(&out)).len(), 2);
}

#[test]
fn bad_cell_is_located() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "x.csv", "1,2,3\n4,oops,6\n7,8,9\n");
    let out = fdrlab(&["test", "--input", &input]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("line 2, column 2"), "{err}");
    assert!(err.contains("oops"), "{err}");
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn ragged_and_empty_input_rejected() {
    let dir = TempDir::new().unwrap();
    let ragged = write(&dir, "r.csv", "1,2\n3\n");
    let out = fdrlab(&["test", "--input", &ragged]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"));
    let empty = write(&dir, "e.csv", "a,b\n");
    assert_eq!(fdrlab(&["test", "--input", &empty]).status.code(), Some(2));
    let missing = dir.path().join("nope.csv");
    assert_eq!(fdrlab(&["test", "--input", missing.to_str().unwrap()]).status.code(), Some(2));
    let single = write(&dir, "s.csv", "1,2\n");
    assert_eq!(fdrlab(&["test", "--input", &single]).status.code(), Some(2));
    let nan = write(&dir, "n.csv", "1,2\nNaN,3\n");
    assert_eq!(fdrlab(&["test", "--input", &nan]).status.code(), Some(2));
}

#[test]
fn constant_column_is_numeric_failure() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "x.csv", "1,5\n2,5\n3,5\n");
    let out = fdrlab(&["test", "--input", &input]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("column 2"), "{}", stderr(&out));
}

#[test]
fn bad_flags_and_config_exit_two() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "x.csv", "1,2\n2,3\n4,1\n");
    assert_eq!(fdrlab(&["test", "--input", &input, "--alpha", "1.5"]).status.code(), Some(2));
    assert_eq!(fdrlab(&["test", "--input", &input, "--method", "magic"]).status.code(), Some(2));
    assert_eq!(fdrlab(&["test", "--input", &input, "--lambda", "rate:-1"]).status.code(), Some(2));
    let cfg = write(&dir, "c.cfg", "alpah = 0.1\n");
    let out = fdrlab(&["test", "--input", &input, "--config", &cfg]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("alpah"));
    assert_eq!(fdrlab(&["simulate", "--n", "10"]).status.code(), Some(2));
    assert_eq!(fdrlab(&["test", "--input", &input, "--threads", "0"]).status.code(), Some(2));
}

#[test]
fn flags_override_config() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "x.csv", "1,2\n2,3\n4,1\n0.5,2\n");
    let cfg = write(&dir, "c.cfg", &format!("# run\ninput = {input}\nmethod = t\nalpha = 0.3\n"));
    let out = fdrlab(&["test", "--config", &cfg, "--alpha", "0.05"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(summary(&text, "method"), Some("t"));
    assert_eq!(summary(&text, "alpha"), Some("0.05"));
}

#[test]
fn output_file_and_raw_mode() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "x.csv", "1,2\n2,3.3\n4,1\n");
    let path = dir.path().join("out.csv");
    let out = fdrlab(&["test", "--input", &input, "--raw", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = fs::read_to_string(&path).unwrap();
    let t: f64 = data_rows(&text)[1][1].parse().unwrap();
    let col = [2.0f64, 3.3, 1.0];
    let mean = col.iter().sum::<f64>() / 3.0;
    let sd = (col.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / 2.0).sqrt();
    assert!((t - mean / (sd / 3f64.sqrt())).abs() < 1e-14);
}

fn write_matrix(path: &Path, x: &fdrlab::Matrix) {
    let mut text = String::new();
    for row in x.to_rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:?}")).collect();
        text.push_str(&cells.join(","));
        text.push('\n');
    }
    fs::write(path, text).unwrap();
}

// A generated dataset run through the binary reproduces the in-memory result.
#[test]
fn matches_library_on_generated_data() {
    let dir = TempDir::new().unwrap();
    let model = ModelSpec::new(ModelId::Exp1, 30, 200).unwrap();
    let (x, _) = generate(&model, &mut make_rng_stream(17, 0)).unwrap();
    let path = dir.path().join("exp1.csv");
    write_matrix(&path, &x);
    let cases = [
        ("normal", Calibration::Normal, "cv", LambdaMode::CrossValidated),
        ("t", Calibration::StudentT, "cv", LambdaMode::CrossValidated),
        ("boot", Calibration::Bootstrap, "cv", LambdaMode::CrossValidated),
        ("regboot", Calibration::RegularizedBootstrap, "cv", LambdaMode::CrossValidated),
        ("regboot", Calibration::RegularizedBootstrap, "rate:1.5", LambdaMode::FixedRate(1.5)),
    ];
    for (name, calibration, lambda, lambda_mode) in cases {
        let cfg = RunConfig { alpha: 0.1, calibration, bootstrap_resamples: 60, lambda_mode, seed: 9 };
        let lib = run_test(&x, &cfg).unwrap();
        let out = fdrlab(&[
            "test", "--input", path.to_str().unwrap(), "--method", name, "--alpha", "0.1",
            "--resamples", "60", "--lambda", lambda, "--seed", "9", "--raw",
        ]);
        assert!(out.status.success(), "{}", stderr(&out));
        let text = stdout(&out);
        let rows = data_rows(&text);
        assert_eq!(rows.len(), 200);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row[1].parse::<f64>().unwrap().to_bits(), lib.stats.t[i].to_bits());
            assert_eq!(row[2].parse::<f64>().unwrap().to_bits(), lib.pvalues.p[i].to_bits(), "{name} p[{i}]");
            assert_eq!(row[3] == "1", lib.rejections.rejected.contains(&i));
        }
        assert_eq!(summary(&text, "k_hat").unwrap(), lib.rejections.k_hat.to_string());
        if let Some(l) = lib.pvalues.meta.lambda_hat {
            assert_eq!(summary(&text, "lambda_hat").unwrap().parse::<f64>().unwrap(), l);
        }
    }
}

#[test]
fn simulate_minimal_grid_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "g.cfg", "models = exp1\nn = 10\nm = 40\nalpha = 0.1\nmethods = boot\nreps = 2\nresamples = 20\nseed = 5\n");
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let out = fdrlab(&["simulate", "--config", &cfg, "--output", p.to_str().unwrap()]);
        assert!(out.status.success(), "{}", stderr(&out));
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "model,n,m,alpha,method,fdr,power,fdr_se,power_se,reps,seconds");
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("exp1,10,40,0.1,boot,"));
    assert!(lines[1].ends_with(",2,"));
}

#[test]
fn simulate_rows_follow_grid_order() {
    let out = fdrlab(&[
        "simulate", "--models", "gamma05,t4", "--n", "10", "--m", "30,40", "--alpha", "0.1,0.2",
        "--methods", "normal,t", "--reps", "2", "--timing",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let rows = data_rows(&text);
    assert_eq!(rows.len(), 2 * 2 * 2 * 2);
    assert_eq!(&rows[0][..5], ["gamma05", "10", "30", "0.1", "normal"]);
    assert_eq!(&rows[1][..5], ["gamma05", "10", "30", "0.1", "t"]);
    assert_eq!(&rows[2][..5], ["gamma05", "10", "30", "0.2", "normal"]);
    assert_eq!(&rows[15][..5], ["t4", "10", "40", "0.2", "t"]);
    assert!(rows.iter().all(|r| r[10].parse::<f64>().unwrap() >= 0.0));
}

#[test]
fn lambda_curve_hand_example() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "x.csv", "0\n3\n0\n3\n");
    let out = fdrlab(&["lambda", "--input", &input, "--grid", "0.5,10"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("lambda,risk,selected\n"));
    // λ=0.5 zeroes the 3s in both halves; λ=10 is inert and both halves agree
    assert_eq!(data_rows(&text), [["0.5", "inf", "0"], ["10", "0", "1"]]);
    assert_eq!(summary(&text, "lambda_hat"), Some("10"));
}

#[test]
fn lambda_duplicated_halves_have_zero_risk() {
    let dir = TempDir::new().unwrap();
    let half = "1,-2\n4,0.5\n0,3\n-1,1\n";
    let input = write(&dir, "x.csv", &format!("{half}{half}"));
    let out = fdrlab(&["lambda", "--input", &input, "--grid", "0.5,1,100", "--raw"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let rows = data_rows(&stdout(&out));
    assert_eq!(rows[2][1].parse::<f64>().unwrap(), 0.0);
}

#[test]
fn lambda_default_grid_on_generated_data() {
    let dir = TempDir::new().unwrap();
    let model = ModelSpec::new(ModelId::T4, 20, 50).unwrap();
    let (x, _) = generate(&model, &mut make_rng_stream(4, 0)).unwrap();
    let path = dir.path().join("t4.csv");
    write_matrix(&path, &x);
    let out = fdrlab(&["lambda", "--input", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(data_rows(&text).len(), 30);
    assert_eq!(data_rows(&text).iter().filter(|r| r[2] == "1").count(), 1);
}

#[test]
fn lambda_infeasible_grid_is_numeric_failure() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "x.csv", "0\n3\n0\n3\n");
    let out = fdrlab(&["lambda", "--input", &input, "--grid", "0.5"]);
    assert_eq!(out.status.code(), Some(3));
}
