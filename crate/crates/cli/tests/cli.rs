use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["metallic"];
    argv.extend_from_slice(args);
    let code = metallic_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "stderr: {err}");
    out
}

#[test]
fn mean_prints_certified_digits() {
    assert_eq!(
        ok(&["mean", "--k", "3", "--m", "1", "--digits", "10"]),
        "1.839286755\n"
    );
    assert_eq!(
        ok(&["mean", "--k", "2", "--m", "2", "--digits", "6"]),
        "2.41421\n"
    );
    let json: serde_json::Value = serde_json::from_str(&ok(&[
        "mean", "--k", "3", "--m", "2", "--digits", "8", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(json["value"], "2.5468182");
    assert!(json["lo"].as_str().unwrap().starts_with("2.5468182"));
}

#[test]
fn seq_bfile_matches_listing() {
    let out = ok(&[
        "seq", "--k", "3", "--m", "2", "--count", "14", "--format", "bfile",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 13);
    assert_eq!(lines[0], "1 1");
    assert_eq!(lines[12], "13 58396");
}

#[test]
fn seq_other_formats() {
    assert_eq!(
        ok(&["seq", "--k", "2", "--m", "1", "--count", "6"]),
        "0, 1, 1, 2, 3, 5\n"
    );
    assert_eq!(
        ok(&["seq", "--k", "2", "--m", "2", "--count", "4", "--format", "csv"]),
        "n,value\n0,0\n1,1\n2,2\n3,5\n"
    );
    let json = ok(&[
        "seq", "--k", "3", "--m", "2", "--count", "100", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 100);
    assert!(v[99].as_str().unwrap().len() > 20);
}

#[test]
fn invert_from_terms_and_file() {
    assert_eq!(
        ok(&["invert", "--terms", "0,1,1,2,3,5"]),
        "0, 1, 2, 5, 12, 29\n"
    );
    assert_eq!(
        ok(&["invert", "--times", "2", "--terms", "0,1,1,2,3,5,8"]),
        "0, 1, 3, 10, 33, 109, 360\n"
    );
    let dir = std::env::temp_dir().join(format!("metallic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("trib.txt");
    std::fs::write(&path, "0\n1\n1\n2\n4\n7\n").unwrap();
    let out = ok(&[
        "invert",
        "--file",
        path.to_str().unwrap(),
        "--format",
        "bfile",
    ]);
    assert_eq!(out, "1 1\n2 2\n3 5\n4 13\n5 33\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn invert_rejects_bad_input() {
    let (code, _, err) = run(&["invert", "--terms", "1,1,2"]);
    assert_eq!(code, 2);
    assert!(err.contains("a(0) = 0"));
    assert_eq!(run(&["invert", "--terms", "0,x"]).0, 2);
    assert_eq!(run(&["invert", "--file", "/nonexistent/metallic"]).0, 2);
    assert_eq!(run(&["invert"]).0, 2);
}

#[test]
fn poly_report() {
    let out = ok(&["poly", "--k", "3", "--m", "2"]);
    assert_eq!(
        out,
        "p(x) = x^3 - 2*x^2 - x - 1\nq(x) = x^4 - 3*x^3 + x^2 + 1\np(2) = -3\np(3) = 5\nsquarefree = true\n"
    );
    let v: serde_json::Value =
        serde_json::from_str(&ok(&["poly", "--k", "2", "--m", "3", "--format", "json"])).unwrap();
    assert_eq!(v["endpoint_values"], serde_json::json!(["-1", "3"]));
    assert_eq!(v["p"], serde_json::json!(["-1", "-3", "1"]));
    assert_eq!(v["sign_changes"], 1);
}

#[test]
fn roots_report_json() {
    let v: serde_json::Value =
        serde_json::from_str(&ok(&["roots", "--k", "3", "--m", "1", "--format", "json"])).unwrap();
    assert_eq!(v["k"], 3);
    assert_eq!(v["m"], 1);
    assert!(v["lo"].as_str().unwrap().starts_with("1.8392867552141"));
    assert_eq!(v["roots"].as_array().unwrap().len(), 3);
    let gap = v["spectral_gap"].as_f64().unwrap();
    assert!((gap - 0.4009).abs() < 1e-4);
}

#[test]
fn ratios_formats() {
    let csv = ok(&[
        "ratios", "--k", "2", "--m", "1", "--count", "12", "--format", "csv",
    ]);
    assert!(csv.starts_with("n,ratio,abs_error\n"));
    assert!(csv.lines().any(|l| l.starts_with("10,1.61818181818181")));
    let plain = ok(&["ratios", "--k", "2", "--m", "1", "--count", "40"]);
    assert!(plain.contains("fitted rate = 0.38"));
    let (code, _, _) = run(&["ratios", "--k", "2", "--m", "1", "--count", "5"]);
    assert_eq!(code, 2);
}

#[test]
fn tilings_count_and_listing() {
    assert_eq!(
        ok(&["tilings", "--length", "3", "--k", "3", "--m", "2"]),
        "13\n"
    );
    let out = ok(&[
        "tilings",
        "--length",
        "2",
        "--k",
        "2",
        "--m",
        "1",
        "--enumerate",
    ]);
    assert_eq!(out, "2\n2\n1(c1),1(c1)\n");
    let v: serde_json::Value = serde_json::from_str(&ok(&[
        "tilings",
        "--length",
        "3",
        "--k",
        "3",
        "--m",
        "2",
        "--enumerate",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(v["count"], "13");
    assert_eq!(v["tilings"].as_array().unwrap().len(), 13);
}

#[test]
fn tilings_cap_is_numeric_failure() {
    let (code, out, err) = run(&[
        "tilings",
        "--length",
        "4",
        "--k",
        "3",
        "--m",
        "2",
        "--enumerate",
        "--cap",
        "10",
    ]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("cap is 10"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["seq", "--k", "1", "--m", "1"]).0, 2);
    assert_eq!(run(&["seq", "--k", "2", "--m", "0"]).0, 2);
    assert_eq!(run(&["seq", "--k", "2", "--m", "1", "--count", "1"]).0, 2);
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&["mean", "--k", "2"]).0, 2);
    assert_eq!(run(&["mean", "--k", "2", "--m", "1", "--digits", "0"]).0, 2);
    assert_eq!(
        run(&["roots", "--k", "3", "--m", "1", "--format", "bfile"]).0,
        2
    );
    assert_eq!(
        run(&["poly", "--k", "3", "--m", "1", "--format", "csv"]).0,
        2
    );
    assert_eq!(run(&["verify", "--kmax", "1"]).0, 2);
}

#[test]
fn verify_small_grid() {
    let out = ok(&["verify", "--kmax", "3", "--mmax", "2"]);
    assert!(out
        .lines()
        .all(|l| l.starts_with("PASS") || l.ends_with("0 failed")));
    assert!(out.ends_with("20 checks, 0 failed\n"));
}

#[test]
fn output_is_byte_stable() {
    for args in [
        &["roots", "--k", "5", "--m", "3", "--format", "json"][..],
        &["ratios", "--k", "3", "--m", "2", "--count", "30"][..],
        &[
            "tilings",
            "--length",
            "5",
            "--k",
            "3",
            "--m",
            "2",
            "--enumerate",
        ][..],
    ] {
        assert_eq!(ok(args), ok(args));
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_metallic");
    let out = Command::new(bin)
        .args(["tilings", "--length", "3", "--k", "3", "--m", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "13\n");
    let out = Command::new(bin)
        .args(["seq", "--k", "1", "--m", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("verify"));
}
