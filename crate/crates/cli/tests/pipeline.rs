mod common;

use std::fs;
use std::process::Command;

use common::{config, input_for, read_column, snapshot, write_series};
use permplane::surrogate::{ar1, white_noise};
use permplane::TimeSeries;
use permplane_cli::{analyze, ingest_csv, run_pipeline, OutputFormat, PipelineError, RunConfig};

fn permplane() -> Command {
    Command::new(env!("CARGO_BIN_EXE_permplane"))
}

#[test]
fn ingests_a_long_dated_file() {
    let dir = tempfile::tempdir().unwrap();
    let series = ar1("rate", 3996, 0.95, 1).unwrap();
    let path = write_series(dir.path(), &series);
    let loaded = ingest_csv(&path, Some("date"), "value", "rate").unwrap();
    assert_eq!(loaded.len(), 3996);
    assert_eq!(loaded.values(), series.values());
    assert_eq!(loaded.label_at(0), "day00001");
}

#[test]
fn noise_and_ramp_land_on_their_corners() {
    let dir = tempfile::tempdir().unwrap();
    let noise = white_noise("noise", 3996, 2).unwrap();
    let ramp = TimeSeries::new("ramp", (0..3996).map(f64::from).collect()).unwrap();
    let inputs = vec![
        input_for(&write_series(dir.path(), &noise), "noise"),
        input_for(&write_series(dir.path(), &ramp), "ramp"),
    ];
    let out = dir.path().join("out");
    let report = run_pipeline(&config(inputs, &out)).unwrap();
    assert!(report.files.iter().any(|f| f.ends_with("summary.csv")));

    let h = read_column(&out.join("noise.cecp.csv"), "H");
    let c = read_column(&out.join("noise.cecp.csv"), "C");
    assert_eq!(h.len(), 185);
    assert!(h.iter().all(|&x| x >= 0.95) && c.iter().all(|&x| x <= 0.07));

    let h = read_column(&out.join("ramp.cecp.csv"), "H");
    let c = read_column(&out.join("ramp.cecp.csv"), "C");
    assert!(h.iter().chain(&c).all(|&x| x == 0.0));

    let scheme = read_column(&out.join("noise.scheme.csv"), "index");
    assert_eq!(scheme.first(), Some(&1.0));
    assert_eq!(scheme.get(1), Some(&5.0));

    let bounds = read_column(&out.join("bounds_max.csv"), "C");
    assert!(bounds.iter().cloned().fold(0.0, f64::max) > 0.3);
}

#[test]
fn window_cap_and_labels() {
    let dir = tempfile::tempdir().unwrap();
    let series = ar1("x", 3996, 0.5, 3).unwrap();
    let inputs = vec![input_for(&write_series(dir.path(), &series), "x")];
    let out = dir.path().join("out");
    let mut cfg = config(inputs, &out);
    cfg.max_windows = Some(184);
    run_pipeline(&cfg).unwrap();
    let mut reader = csv::Reader::from_path(out.join("x.trajectory.csv")).unwrap();
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 184);
    assert_eq!(&rows[0][1], "day00001");
    assert_eq!(&rows[0][2], "day00300");
    assert_eq!(&rows[1][1], "day00021");
}

#[test]
fn reruns_are_byte_identical_and_reproducible_from_metadata() {
    let dir = tempfile::tempdir().unwrap();
    let a = ar1("a", 1500, 0.99, 4).unwrap();
    let b = white_noise("b", 1500, 5).unwrap();
    let inputs = vec![
        input_for(&write_series(dir.path(), &a), "a"),
        input_for(&write_series(dir.path(), &b), "b"),
    ];
    let first = dir.path().join("first");
    let mut cfg = config(inputs, &first);
    cfg.surrogate_seeds = vec![1, 2, 3];
    cfg.reference_series = Some("b".into());
    run_pipeline(&cfg).unwrap();

    let second = dir.path().join("second");
    cfg.output_dir = Some(second.clone());
    run_pipeline(&cfg).unwrap();
    assert_eq!(snapshot(&first), snapshot(&second));

    let mut replay = RunConfig::from_file(&first.join("metadata.json")).unwrap();
    let third = dir.path().join("third");
    replay.output_dir = Some(third.clone());
    run_pipeline(&replay).unwrap();
    assert_eq!(snapshot(&first), snapshot(&third));

    let summary = fs::read_to_string(first.join("summary.csv")).unwrap();
    assert!(summary.starts_with("statistic,a,b\n"));
    let f_row = summary.lines().find(|l| l.starts_with("F,")).unwrap();
    assert!(f_row.ends_with(','), "reference column left blank: {f_row}");
    let surrogate = read_column(&first.join("a.surrogate.csv"), "H");
    assert_eq!(surrogate.len(), 4 * 61);
}

#[test]
fn json_output() {
    let dir = tempfile::tempdir().unwrap();
    let s = white_noise("n", 800, 6).unwrap();
    let out = dir.path().join("out");
    let mut cfg = config(vec![input_for(&write_series(dir.path(), &s), "n")], &out);
    cfg.output_format = OutputFormat::Json;
    run_pipeline(&cfg).unwrap();
    let t: serde_json::Value =
        serde_json::from_slice(&fs::read(out.join("n.trajectory.json")).unwrap()).unwrap();
    assert_eq!(t.as_array().unwrap().len(), 26);
    let summary: serde_json::Value =
        serde_json::from_slice(&fs::read(out.join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary["series"][0], "n");
    assert!(out.join("n.cecp.csv").exists());
}

#[test]
fn first_differences_shorten_the_series() {
    let dir = tempfile::tempdir().unwrap();
    let s = ar1("d", 620, 0.9, 7).unwrap();
    let mut cfg = config(
        vec![input_for(&write_series(dir.path(), &s), "d")],
        dir.path(),
    );
    cfg.difference = true;
    let analysis = analyze(&cfg).unwrap();
    assert_eq!(analysis.series[0].rows, 620);
    assert_eq!(analysis.series[0].trajectory.len(), (619 - 300) / 20 + 1);
}

#[test]
fn errors_carry_context() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    fs::write(&path, "date,value\nd1,1\nd2,NA\n").unwrap();
    let cfg = config(vec![input_for(&path, "bad")], dir.path());
    let err = analyze(&cfg).unwrap_err();
    assert!(matches!(err, PipelineError::Ingest { .. }));
    assert_eq!(err.exit_code(), 3);
    assert!(err.to_string().contains("row 2"), "{err}");

    let short = TimeSeries::new("short", vec![1.0, 2.0, 3.0]).unwrap();
    let cfg = config(
        vec![input_for(&write_series(dir.path(), &short), "short")],
        dir.path(),
    );
    let err = analyze(&cfg).unwrap_err();
    assert_eq!(err.exit_code(), 3, "{err}");
}

#[test]
fn binary_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let s = white_noise("n", 400, 8).unwrap();
    let csv = write_series(dir.path(), &s);
    let out = dir.path().join("out");
    let input = format!("n:{}:value:date", csv.display());

    let ok = permplane()
        .args([
            "run",
            "--input",
            &input,
            "--bounds-grid",
            "200",
            "--output-dir",
        ])
        .arg(&out)
        .output()
        .unwrap();
    assert!(
        ok.status.success(),
        "{}",
        String::from_utf8_lossy(&ok.stderr)
    );
    assert!(out.join("metadata.json").exists());

    let bad_config = permplane()
        .args([
            "run",
            "--input",
            &input,
            "--embedding-dimension",
            "12",
            "--output-dir",
        ])
        .arg(&out)
        .output()
        .unwrap();
    assert_eq!(bad_config.status.code(), Some(2));

    let missing = permplane()
        .args([
            "run",
            "--input",
            "m:/nonexistent/file.csv:value",
            "--output-dir",
        ])
        .arg(&out)
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("nonexistent"));

    let bounds = permplane()
        .args([
            "bounds",
            "--embedding-dimension",
            "3",
            "--bounds-grid",
            "50",
            "--output-dir",
        ])
        .arg(dir.path().join("b"))
        .output()
        .unwrap();
    assert!(bounds.status.success());
    assert!(dir.path().join("b/bounds_min.csv").exists());
}
