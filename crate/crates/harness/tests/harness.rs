use std::collections::BTreeMap;

use littlewood_harness::report::CSV_HEADER;
use littlewood_harness::{
    emit_report, list_checks, render_report, run_all, run_all_with, run_check, HarnessError,
    IdentityReport, ReportFormat, RunConfig,
};

fn overrides(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

fn zero_times(mut reports: Vec<IdentityReport>) -> Vec<IdentityReport> {
    for r in &mut reports {
        r.wall_time = 0.0;
    }
    reports
}

#[test]
fn exp_shift_at_one() {
    let r = run_check("eq2.9_exp_shift", &overrides(&[("b", "1")])).unwrap();
    let e = std::f64::consts::E;
    assert!(r.pass, "{r:?}");
    assert!(r.abs_diff < 1e-8);
    assert!((r.rhs.re - e / ((1.0 - e) * (1.0 - e))).abs() < 1e-14);
    assert!((r.rhs.re - 0.9206736).abs() < 1e-7);
}

#[test]
fn sqrt_cube_at_i() {
    let r = run_check("eq2.6_sqrt_cube", &overrides(&[("c", "i")])).unwrap();
    assert!(r.pass, "{r:?}");
    assert!((r.lhs.im - 2.253).abs() < 1e-3);
    assert!(r.lhs.re.abs() < 1e-9);
}

#[test]
fn zeta_sum_with_file() {
    let path = format!(
        "{}/../../data/zeta_zeros_100.txt",
        env!("CARGO_MANIFEST_DIR")
    );
    let r = run_check("zeta_zero_sum", &overrides(&[("zeros", &path)])).unwrap();
    assert!(r.pass, "{r:?}");
    assert!(r.abs_diff < 5e-3);
    assert!(r.notes.contains("100 ordinates"));
}

#[test]
fn missing_zeros_file_is_a_failed_report() {
    let r = run_check(
        "zeta_zero_sum",
        &overrides(&[("zeros", "/nonexistent/zeros.txt")]),
    )
    .unwrap();
    assert!(!r.pass);
    assert!(r.abs_diff.is_nan());
}

#[test]
fn excluded_parameter_is_a_failed_report() {
    let r = run_check("eq2.9_exp_shift", &overrides(&[("b", "0")])).unwrap();
    assert!(!r.pass);
    assert!(r.notes.contains("error"), "{}", r.notes);
}

#[test]
fn run_check_errors() {
    assert!(matches!(
        run_check("eq9.9_nothing", &BTreeMap::new()),
        Err(HarnessError::UnknownCheck(_))
    ));
    for bad in [("b", "one"), ("q", "1"), ("tol", "0")] {
        assert!(matches!(
            run_check("eq2.9_exp_shift", &overrides(&[bad])),
            Err(HarnessError::InvalidOverride { .. })
        ));
    }
}

#[test]
fn filter_counts() {
    assert_eq!(run_all("eq2.*", false).unwrap().len(), 7);
    assert!(run_all("no_such_check*", false).unwrap().is_empty());
    assert!(matches!(run_all("[", false), Err(HarnessError::Filter(_))));
}

#[test]
fn config_overrides_apply() {
    let cfg =
        RunConfig::parse("filter = eq2.9*\neq2.9_exp_shift.b = -2\neq2.9_exp_shift.tol = 1e-9\n")
            .unwrap();
    let r = run_all_with(&cfg).unwrap();
    assert_eq!(r.len(), 1);
    assert_eq!(r[0].params["b"], "-2");
    assert_eq!(r[0].tolerance, 1e-9);
    assert!(r[0].pass);
    let bad = RunConfig::parse("nope_check.x = 1").unwrap();
    assert!(matches!(
        run_all_with(&bad),
        Err(HarnessError::UnknownCheck(_))
    ));
}

#[test]
fn full_suite_deterministic_and_parallel_identical() {
    let a = zero_times(run_all("*", false).unwrap());
    let b = zero_times(run_all("*", false).unwrap());
    let c = zero_times(run_all("*", true).unwrap());
    assert_eq!(a.len(), list_checks().len());
    let ja = render_report(&a, ReportFormat::Json).unwrap();
    assert_eq!(ja, render_report(&b, ReportFormat::Json).unwrap());
    assert_eq!(ja, render_report(&c, ReportFormat::Json).unwrap());
    let names: Vec<&str> = a.iter().map(|r| r.name.as_str()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn json_shape() {
    let r = vec![run_check("eq2.6_sqrt_cube", &overrides(&[("c", "i")])).unwrap()];
    let v: serde_json::Value =
        serde_json::from_str(&render_report(&r, ReportFormat::Json).unwrap()).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 1);
    let obj = arr[0].as_object().unwrap();
    let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    let mut expect = vec![
        "name",
        "params",
        "lhs",
        "rhs",
        "abs_diff",
        "tolerance",
        "pass",
        "wall_time",
        "notes",
    ];
    expect.sort();
    let mut got = keys.clone();
    got.sort();
    assert_eq!(got, expect);
    assert_eq!(obj["pass"], serde_json::Value::Bool(true));
    assert_eq!(obj["lhs"]["re"].as_f64().unwrap(), 0.0);
    assert!((obj["lhs"]["im"].as_f64().unwrap() - 2.253).abs() < 1e-3);
    assert_eq!(obj["params"]["c"], "i");
}

#[test]
fn csv_and_text_files() {
    let dir = tempfile::tempdir().unwrap();
    let reports = run_all("eq2.*", false).unwrap();
    let csv_path = dir.path().join("r.csv");
    emit_report(&reports, ReportFormat::Csv, &csv_path).unwrap();
    let mut rd = csv::Reader::from_path(&csv_path).unwrap();
    let header: Vec<String> = rd.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, CSV_HEADER);
    assert_eq!(
        header.join(","),
        "name,param_json,lhs_re,lhs_im,rhs_re,rhs_im,abs_diff,tolerance,pass,wall_time"
    );
    let rows: Vec<csv::StringRecord> = rd.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 7);
    let params: BTreeMap<String, String> = serde_json::from_str(&rows[0][1]).unwrap();
    assert_eq!(params, reports[0].params);
    assert_eq!(rows[0][2].parse::<f64>().unwrap(), reports[0].lhs.re);

    let text_path = dir.path().join("r.txt");
    emit_report(&reports, ReportFormat::Text, &text_path).unwrap();
    let text = std::fs::read_to_string(&text_path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let col = lines[0].find("status").unwrap();
    for line in &lines[2..9] {
        assert!(
            line[col..].starts_with("PASS") || line[col..].starts_with("FAIL"),
            "{line}"
        );
    }
    assert!(text.contains("7/7 passed"));
    assert!(emit_report(
        &reports,
        ReportFormat::Json,
        dir.path().join("missing/r.json")
    )
    .is_err());
}
