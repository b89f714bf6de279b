//! End-to-end tests of the binary: flag handling, exit codes, output
//! stability, and the golden-table fault injection.

use std::process::{Command, Output};

fn fibsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibsum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn closed_form_text_matches_published_identity() {
    let out = fibsum(&[
        "closed-form", "--n", "1", "--r", "2", "--w", "1", "--basis", "gk", "--format", "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim(),
        "-5*G_0 - 8*G_1 + (k^2 - 2*k + 5)*G_k + (k^2 - 4*k + 8)*G_{k+1}"
    );
}

#[test]
fn closed_form_w3_has_expected_tail_coefficients() {
    let out = fibsum(&["closed-form", "--n", "1", "--r", "1", "--w", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["head"][0]["coeff"], "-9/121");
    assert_eq!(v["head"][1]["coeff"], "30/121");
    // (3^{k+2}/121)(11k+1) and (3^{k+1}/121)(11k-10)
    assert_eq!(v["tail"][0]["w_exp_offset"], 2);
    assert_eq!(v["tail"][0]["poly_k"][0], "1/121");
    assert_eq!(v["tail"][0]["poly_k"][1], "1/11");
    assert_eq!(v["tail"][1]["poly_k"][0], "-10/121");
}

#[test]
fn singular_weight_exits_3_with_message() {
    let out = fibsum(&["closed-form", "--n", "2", "--r", "0", "--w", "-1"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stderr(&out).trim(), "singular weight");
    let out = fibsum(&["closed-form", "--n", "4", "--r", "0", "--w", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn divergent_genfunc_exits_3_unless_analytic() {
    let out = fibsum(&["genfunc", "--n", "1", "--r", "0", "--w", "2/3"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stderr(&out).trim(), "divergent weight");
    let out = fibsum(&["genfunc", "--n", "1", "--r", "0", "--w", "2/3", "--analytic"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    // Unknown flag.
    let out = fibsum(&["closed-form", "--n", "1", "--r", "0", "--w", "1", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    // Negative sweep bound.
    let out = fibsum(&["verify", "--max-k", "-1"]);
    assert_eq!(out.status.code(), Some(2));
    // Unparsable weight.
    let out = fibsum(&["eval", "--n", "1", "--r", "0", "--w", "zzz", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
    // Standard basis is n = 1 only.
    let out = fibsum(&["closed-form", "--n", "2", "--r", "0", "--w", "1", "--basis", "gk"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_evaluates_and_checks() {
    let out = fibsum(&[
        "eval", "--n", "1", "--r", "1", "--w", "1", "--k", "5", "--seeds", "0,1", "--check",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "46");
    let out = fibsum(&[
        "eval", "--n", "1", "--r", "1", "--w", "-1", "--k", "4", "--seeds", "0,1",
    ]);
    assert_eq!(stdout(&out).trim(), "7");
}

#[test]
fn closed_form_json_round_trips() {
    use fibsum_core::engine::{closed_form_from_json, closed_form_to_json, AnyClosedForm};
    for args in [
        vec!["closed-form", "--n", "2", "--r", "1", "--w", "1/2", "--format", "json"],
        vec!["closed-form", "--n", "1", "--r", "3", "--w", "symbolic", "--format", "json"],
        vec!["closed-form", "--n", "3", "--r", "0", "--w", "i", "--format", "json"],
        vec!["genfunc", "--n", "2", "--r", "0", "--w", "1/16", "--format", "json"],
    ] {
        let out = fibsum(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
        let parsed = closed_form_from_json(&v).unwrap();
        let back = match &parsed {
            AnyClosedForm::Numeric(cf) => closed_form_to_json(cf),
            AnyClosedForm::Symbolic(cf) => closed_form_to_json(cf),
        };
        assert_eq!(back, v, "{args:?}");
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["closed-form", "--n", "2", "--r", "2", "--w", "1/2", "--format", "json"],
        vec!["split", "--n", "3", "--r", "1", "--format", "json"],
        vec!["paper-table"],
        vec!["verify", "--max-n", "1", "--max-r", "1", "--max-k", "4", "--w-grid", "1,2"],
    ] {
        let a = fibsum(&args);
        let b = fibsum(&args);
        assert_eq!(stdout(&a), stdout(&b), "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn paper_table_passes_and_filters() {
    let out = fibsum(&["paper-table"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("0 failures"), "{text}");
    let out = fibsum(&["paper-table", "--only", "j5-sum"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("pass  j5-sum"), "{text}");
    assert!(text.contains("1 identities"), "{text}");
    let out = fibsum(&["paper-table", "--only", "no-such-id"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn corrupted_fixture_fails_with_structured_diff() {
    // Alter one coefficient in one entry; exactly that entry must fail.
    let corpus: serde_json::Value =
        serde_json::from_str(include_str!("../fixtures/golden_identities.json")).unwrap();
    let mut corrupted = corpus.clone();
    corrupted[3]["expected"]["head"][0]["coeff"] = serde_json::json!("32");
    let corrupted_id = corrupted[3]["id"].as_str().unwrap().to_string();
    let dir = std::env::temp_dir().join("fibsum-corrupt-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corrupted.json");
    std::fs::write(&path, corrupted.to_string()).unwrap();

    let out = fibsum(&["paper-table", "--fixtures", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report["failures"], 1);
    let rows = report["rows"].as_array().unwrap();
    for row in rows {
        if row["id"] == serde_json::json!(corrupted_id.as_str()) {
            assert_eq!(row["status"], "fail");
            assert_eq!(row["expected"]["head"][0]["coeff"], "32");
            assert!(row["regenerated"]["head"][0]["coeff"] != row["expected"]["head"][0]["coeff"]);
        } else {
            assert_eq!(row["status"], "pass", "{row}");
        }
    }
}

#[test]
fn verify_gaussian_grid_passes() {
    let out = fibsum(&[
        "verify", "--w-grid", "i,-i", "--max-n", "3", "--max-r", "2", "--max-k", "8",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report["summary"]["fail"], 0);
    assert_eq!(report["summary"]["skipped"], 0);
}

#[test]
fn bench_small_case_agrees() {
    let out = fibsum(&[
        "bench", "--n", "1", "--r", "0", "--w", "1", "--k-list", "0,10", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    for row in v["rows"].as_array().unwrap() {
        assert_eq!(row["equal"], true);
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("fibsum-out-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cf.json");
    let out = fibsum(&[
        "closed-form", "--n", "1", "--r", "0", "--w", "1", "--format", "json", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(v["n"], 1);
}

#[test]
fn split_latex_renders() {
    let out = fibsum(&["split", "--n", "1", "--r", "0", "--format", "latex"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("(-1)^{K}"), "{text}");
    assert!(text.contains("\\frac{3}{5}"), "{text}");
}
