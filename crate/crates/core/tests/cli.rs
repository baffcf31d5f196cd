use std::process::Command;

fn bin(args: &[&str]) -> (i32, String, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_zero-density"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        o.status.code().unwrap_or(-1),
        String::from_utf8(o.stdout).unwrap(),
        String::from_utf8(o.stderr).unwrap(),
    )
}

#[test]
fn eval_and_exit_codes() {
    let (c, out, _) = bin(&["bounds", "eval", "--eta", "1/8", "--ell", "2"]);
    assert_eq!(c, 0);
    assert!(out.starts_with("2/1\n"));
    assert_eq!(bin(&["bounds", "eval", "--eta", "1/3", "--ell", "2"]).0, 1);
    assert_eq!(bin(&["bounds", "eval", "--eta", "0.1", "--ell", "2"]).0, 2);
    assert_eq!(bin(&["nonsense"]).0, 2);
    assert_eq!(bin(&["bounds", "eval", "--eta", "1/8", "--bogus"]).0, 2);
}

#[test]
fn claims_and_gaps() {
    let (c, out, _) = bin(&["claims", "verify", "--format", "json"]);
    assert_eq!(c, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 15);
    let (c, out, _) = bin(&["gaps", "exponent", "--A", "5/2"]);
    assert_eq!(c, 0);
    assert!(out.starts_with("3/5\n"));
    assert_eq!(bin(&["gaps", "exponent", "--A", "3/2"]).0, 1);
}

#[test]
fn bounds_subcommands() {
    let (_, out, _) = bin(&[
        "bounds",
        "crossover",
        "--a",
        "MaxForm-l2",
        "--b",
        "MaxForm-l3",
    ]);
    assert!(out.contains("1/24"));
    let (_, out, _) = bin(&["bounds", "dh-range", "--bound", "MaxForm-l3"]);
    assert!(out.contains("(0/1, 3/40]"));
    let (_, out, _) = bin(&["bounds", "sup", "--bounds", "Ingham,Montgomery"]);
    assert!(out.starts_with("5/2\n"));
    let (_, out, _) = bin(&["bounds", "trivial-range", "--bound", "MaxForm-l1"]);
    assert!(out.contains("2/7"));
    let (_, out, _) = bin(&["bounds", "envelope", "--format", "csv"]);
    assert!(out.starts_with("eta_lo_num,eta_lo_den,eta_hi_num,eta_hi_den,winner_name"));
}

#[test]
fn envelope_svg_to_file_is_deterministic() {
    let dir = std::env::temp_dir();
    let a = dir.join("zd_env_a.svg");
    let b = dir.join("zd_env_b.svg");
    for p in [&a, &b] {
        let (c, _, _) = bin(&[
            "bounds",
            "envelope",
            "--format",
            "svg",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(c, 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn lindelof_and_custom_tables() {
    let (c, out, _) = bin(&[
        "bounds",
        "eval",
        "--eta",
        "1/5",
        "--ell",
        "2",
        "--hypothesis",
        "lh",
    ]);
    assert_eq!(c, 0);
    assert!(out.starts_with("0/1\n"));
    let table = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/mu_three_sixteenths.csv"
    );
    let (c, out, _) = bin(&[
        "bounds",
        "eval",
        "--eta",
        "1/10",
        "--ell",
        "1",
        "--mu-table",
        table,
    ]);
    assert_eq!(c, 0);
    assert!(out.starts_with("15/8\n"));
    assert_eq!(
        bin(&["bounds", "eval", "--eta", "1/10", "--hypothesis", "custom"]).0,
        1
    );
}

#[test]
fn zeta_count_json() {
    let (c, out, _) = bin(&["zeta", "count", "--T", "100"]);
    assert_eq!(c, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], 29);
    assert_eq!(
        bin(&["zeta", "count", "--T", "100", "--grid-step", "0.5"]).0,
        1
    );
}
