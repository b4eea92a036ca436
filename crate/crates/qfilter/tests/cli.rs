//! End-to-end tests of the `qfilter` binary: output contents, golden-file
//! stability, config-file precedence, and exit codes.

use std::fs;
use std::process::Output;

fn qfilter(args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_qfilter"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = text.lines();
    let header: Vec<String> = lines.next().expect("header row").split(',').map(str::to_string).collect();
    let rows = lines
        .map(|line| line.split(',').map(|cell| cell.parse::<f64>().expect("numeric cell")).collect())
        .collect();
    (header, rows)
}

#[test]
fn figure_1_has_expected_endpoints() {
    let out = qfilter(&["figure", "1"]);
    let (header, rows) = parse_csv(&stdout(&out));
    assert_eq!(header, ["k", "c12", "c23"]);
    assert_eq!(rows.len(), 201);
    // k = 0 row reads (0, 0, 1)
    assert_eq!(rows[0][0], 0.0);
    assert_eq!(rows[0][1], 0.0);
    assert!((rows[0][2] - 1.0).abs() <= 1e-10);
    // k = 1 row reads (1, 0, 0)
    assert_eq!(rows[200][0], 1.0);
    assert_eq!(rows[200][1], 0.0);
    assert_eq!(rows[200][2], 0.0);
}

#[test]
fn figure_4_row_at_one_half() {
    let out = qfilter(&["figure", "4"]);
    let (header, rows) = parse_csv(&stdout(&out));
    assert_eq!(header, ["k", "g12", "g23"]);
    let row = rows.iter().find(|r| r[0] == 0.5).expect("k = 0.5 on the default grid");
    assert!((row[1] - 6.5 / 9.0).abs() <= 1e-9, "g12 {}", row[1]);
    assert!((row[2] - 6.5 / 9.0).abs() <= 1e-9, "g23 {}", row[2]);
}

#[test]
fn figure_5_labels_curves_by_k() {
    let out = qfilter(&[
        "figure", "5", "--points", "5", "--gamma-t-max", "2", "--k-list", "0,0.5",
    ]);
    let (header, rows) = parse_csv(&stdout(&out));
    assert_eq!(header, ["gamma_t", "k=0", "k=0.5"]);
    assert_eq!(rows.len(), 5);
    // at gamma_t = 0 the k = 0 curve starts at the Bell value 1,
    // the k = 0.5 curve at the unfiltered 2/3
    assert_eq!(rows[0][0], 0.0);
    assert!((rows[0][1] - 1.0).abs() <= 1e-10);
    assert!((rows[0][2] - 2.0 / 3.0).abs() <= 1e-9);
    assert_eq!(rows[4][0], 2.0);
}

#[test]
fn figure_output_is_byte_stable_and_reparseable() {
    let first = stdout(&qfilter(&["figure", "2", "--points", "31"]));
    let second = stdout(&qfilter(&["figure", "2", "--points", "31"]));
    assert_eq!(first, second);

    // every numeric cell survives a parse/format round trip unchanged
    for line in first.lines().skip(1) {
        for cell in line.split(',') {
            let value: f64 = cell.parse().unwrap();
            assert_eq!(format!("{value:.11e}"), cell);
        }
    }
}

#[test]
fn invalid_figure_number_exits_with_validation_code() {
    let out = qfilter(&["figure", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qfilter(&["figure", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn point_w3_fully_biased_filter() {
    let out = qfilter(&["point", "--state", "w3", "--k", "0", "--gamma-t", "0"]);
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(record["state_name"], "W3");
    assert!((record["c23"].as_f64().unwrap() - 1.0).abs() <= 1e-10);
    assert!((record["success_prob"].as_f64().unwrap() - 2.0 / 3.0).abs() <= 1e-12);
}

#[test]
fn point_ghz_is_disentangled_and_w_neutral_recovers_initial() {
    let out = qfilter(&["point", "--state", "ghz3", "--k", "0.3"]);
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for field in ["c12", "c13", "c23"] {
        assert_eq!(record[field].as_f64().unwrap(), 0.0, "{field}");
    }

    let out = qfilter(&["point", "--state", "w3", "--k", "0.5"]);
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for field in ["c12", "c13", "c23"] {
        assert!((record[field].as_f64().unwrap() - 2.0 / 3.0).abs() <= 1e-10, "{field}");
    }
}

#[test]
fn sweep_k_with_explicit_grid() {
    let out = qfilter(&["sweep-k", "--state", "w3", "--k-list", "0,0.5,1"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "state,k,gamma_t,c12,c13,c23,g12,g13,g23,success_prob"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r[0] == "W3"));
    let c23 = |row: &[&str]| row[5].parse::<f64>().unwrap();
    assert!((c23(&rows[0]) - 1.0).abs() <= 1e-10); // k=0
    assert!((c23(&rows[1]) - 2.0 / 3.0).abs() <= 1e-9); // k=0.5
    assert_eq!(c23(&rows[2]), 0.0); // k=1
}

#[test]
fn sweep_noise_json_output() {
    let out = qfilter(&[
        "sweep-noise", "--state", "w3", "--k", "0.5", "--points", "5", "--gamma-t-max", "2",
        "--format", "json",
    ]);
    let records: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let records = records.as_array().unwrap();
    assert_eq!(records.len(), 5);
    assert_eq!(records[0]["gamma_t"].as_f64().unwrap(), 0.0);
    assert_eq!(records[4]["gamma_t"].as_f64().unwrap(), 2.0);
    // concurrence decays along the grid
    let first = records[0]["c23"].as_f64().unwrap();
    let last = records[4]["c23"].as_f64().unwrap();
    assert!(first > last);
}

#[test]
fn esd_reports_onset_and_orders_by_k() {
    let onset_of = |k: &str| -> f64 {
        let out = qfilter(&["esd", "--state", "w3", "--k", k, "--pair", "23"]);
        let text = stdout(&out);
        let line = text.lines().find(|l| l.starts_with("gamma_t_star")).expect("onset line");
        line.split('=').nth(1).unwrap().trim().parse().unwrap()
    };
    let at_zero = onset_of("0");
    let at_half = onset_of("0.5");
    assert!(at_zero > at_half, "{at_zero} vs {at_half}");
    assert!(at_zero > 0.0);

    let out = qfilter(&["esd", "--state", "w3", "--k", "0", "--pair", "23"]);
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("bracket")));
    assert!(text.lines().any(|l| l.starts_with("tolerance")));
}

#[test]
fn esd_never_entangled_and_validation_exit_codes() {
    let out = qfilter(&["esd", "--state", "ghz3", "--k", "0.2", "--pair", "23"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("never entangled"));

    let out = qfilter(&["point", "--k", "1.5"]);
    assert_eq!(out.status.code(), Some(2));

    let out = qfilter(&["sweep-noise", "--gamma-t-max", "-1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = qfilter(&["point", "--state", "bell"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_file_layers_under_flags() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("qfilter-cli-config-{}.conf", std::process::id()));
    fs::write(&path, "state = ghz3\nk = 0.25\n").unwrap();
    let path_str = path.to_str().unwrap();

    // config supplies both values
    let out = qfilter(&["point", "--config", path_str]);
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(record["state_name"], "GHZ3");
    assert_eq!(record["k"].as_f64().unwrap(), 0.25);

    // a flag overrides the config value, the other key still applies
    let out = qfilter(&["point", "--config", path_str, "--state", "w3"]);
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(record["state_name"], "W3");
    assert_eq!(record["k"].as_f64().unwrap(), 0.25);

    // a missing config file is a validation error
    let out = qfilter(&["point", "--config", "/nonexistent/qfilter.conf"]);
    assert_eq!(out.status.code(), Some(2));

    fs::remove_file(&path).ok();
}

#[test]
fn out_flag_writes_the_file() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("qfilter-cli-out-{}.csv", std::process::id()));
    let path_str = path.to_str().unwrap();
    let out = qfilter(&["figure", "1", "--points", "11", "--out", path_str]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let content = fs::read_to_string(&path).unwrap();
    fs::remove_file(&path).ok();
    let (header, rows) = parse_csv(&content);
    assert_eq!(header, ["k", "c12", "c23"]);
    assert_eq!(rows.len(), 11);
}
