//! Black-box tests for the `ringcover` binary: output shape, determinism,
//! and the exit-code contract.

use std::process::{Command, Output};

fn ringcover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringcover"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn sigma_machine_output() {
    let out = ringcover(&["sigma", "--ring", "Prod(F(2),F(2))", "--format", "machine"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("ringcover-report/1\n"));
    assert!(text.contains("sigma=3"));
    assert!(text.contains("coverable=true"));
    assert!(text.contains("exact=true"));
}

#[test]
fn sigma_not_coverable() {
    let out = ringcover(&["sigma", "--ring", "Zmod(4)", "--format", "machine"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("coverable=false"));
    assert!(text.contains("sigma=none"));
    assert!(text.contains("witness_generator=1"));
}

#[test]
fn machine_output_is_byte_identical() {
    let args = ["sigma", "--ring", "T3(F(3))", "--format", "machine"];
    let a = ringcover(&args);
    let b = ringcover(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("sigma=4"));
}

#[test]
fn input_error_exits_one() {
    for args in [
        vec!["sigma", "--ring", "F(6)"],
        vec!["sigma", "--ring", "Wat(3)"],
        vec!["sigma"],
        vec!["ring-info", "--ring", "Prod("],
        vec!["verify", "no-such-id"],
    ] {
        let out = ringcover(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn bound_exceeded_exits_two() {
    // order 1024 is past the default lattice bound
    let out = ringcover(&["subrings", "--ring", "GroupAlg(F(2),C10)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ring_info_fields() {
    let out = ringcover(&["ring-info", "--ring", "Tri(2,F(2))", "--format", "machine"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("order=8"));
    assert!(text.contains("characteristic=2"));
    assert!(text.contains("commutative=false"));
    assert!(text.contains("radical_order=2"));
    assert!(text.contains("complements=2"));
}

#[test]
fn catalog_list_has_at_least_25_entries() {
    let out = ringcover(&["catalog", "list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let count_line = text
        .lines()
        .find(|l| l.trim_start().starts_with("count"))
        .expect("count line");
    let n: usize = count_line.split_whitespace().last().unwrap().parse().unwrap();
    assert!(n >= 25);
}

#[test]
fn radical_reports_complements() {
    let out = ringcover(&["radical", "--ring", "T3(F(2))", "--format", "machine"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("radical_order=4"));
    assert!(text.contains("nilpotency_index=2"));
    assert!(text.contains("complements=1"));
    assert!(text.contains("complement.0=[0,"));
}

#[test]
fn subrings_of_z4() {
    let out = ringcover(&["subrings", "--ring", "Zmod(4)", "--format", "machine"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("count=3"));
    let out = ringcover(&["subrings", "--ring", "Zmod(4)", "--maximal", "--format", "machine"]);
    assert!(stdout(&out).contains("count=1"));
}

#[test]
fn verify_single_suite() {
    let out = ringcover(&["verify", "thm-4.4", "--format", "machine"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("suite.thm-4.4=ok"));
    assert!(text.contains("failures=0"));
}

#[test]
fn spec_file_input() {
    let dir = std::env::temp_dir().join("ringcover-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("z4.json");
    std::fs::write(
        &path,
        r#"{"name":"Z4","generator_orders":[4],"table":[[[1]]],"unity":[1]}"#,
    )
    .unwrap();
    let out = ringcover(&["sigma", "--spec", path.to_str().unwrap(), "--format", "machine"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("coverable=false"));
}
