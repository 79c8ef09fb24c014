use degenerate_eulerian::algebra::{MPoly, RatFun};
use degenerate_eulerian::classical::{eulerian_poly, frobenius_euler_poly, stirling1, stirling2};
use degenerate_eulerian::degenerate::{deg_eulerian_number, deg_ordered_bell, deg_unsigned_stirling1};
use degenerate_eulerian::render::{parse_poly, parse_ratfun, poly_from_terms};
use degeul::{run, EXIT_OK, EXIT_POLE, EXIT_USAGE, VARIABLES};
use serde_json::Value;

fn call(args: &[&str]) -> degeul::Output {
    run(std::iter::once("degeul").chain(args.iter().copied()))
}

fn doc(args: &[&str]) -> Value {
    let out = call(args);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn terms(v: &Value) -> MPoly {
    let pairs: Vec<([u32; 5], String)> = serde_json::from_value(v.clone()).unwrap();
    poly_from_terms(&pairs).unwrap()
}

const KINDS: [&str; 6] = ["eulerian", "stirling1", "stirling2", "deg-eulerian", "deg-stirling1", "ordered-bell"];

/// Entry `(n, k)` of a table kind, computed through the library.
fn expected(kind: &str, n: i64, k: i64) -> MPoly {
    match kind {
        "eulerian" => eulerian_poly(n).unwrap().coefficients_in(degenerate_eulerian::algebra::Var::T)[k as usize].clone(),
        "stirling1" => MPoly::from(stirling1(n, k).unwrap()),
        "stirling2" => MPoly::from(stirling2(n, k).unwrap()),
        "deg-eulerian" => deg_eulerian_number(n, k).unwrap(),
        "deg-stirling1" => deg_unsigned_stirling1(n, k).unwrap(),
        "ordered-bell" => deg_ordered_bell(n).unwrap(),
        _ => unreachable!(),
    }
}

#[test]
fn json_envelope() {
    let d = doc(&["table", "stirling2", "--n-max", "4"]);
    assert_eq!(d["command"], "table");
    assert_eq!(d["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(d["params"]["variables"], serde_json::json!(VARIABLES));
    assert_eq!(d["params"]["argv"][1], "table");
    assert_eq!(d["params"]["n_max"], 4);
    assert_eq!(d["results"].as_array().unwrap().len(), 5);
}

#[test]
fn tables_round_trip_and_agree_with_csv() {
    for kind in KINDS {
        let d = doc(&["table", kind, "--n-max", "6"]);
        let csv = call(&["table", kind, "--n-max", "6", "--format", "csv"]);
        assert_eq!(csv.code, EXIT_OK);
        let lines: Vec<&str> = csv.stdout.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(lines.len(), 7, "{kind}");
        for (n, entry) in d["results"].as_array().unwrap().iter().enumerate() {
            assert_eq!(entry["n"], n);
            let (strings, term_lists): (Vec<String>, Vec<Value>) = if let Some(row) = entry.get("row") {
                let s = row.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect();
                (s, entry["terms"].as_array().unwrap().clone())
            } else {
                (vec![entry["value"].as_str().unwrap().to_string()], vec![entry["terms"].clone()])
            };
            assert_eq!(strings.join(","), lines[n], "{kind} row {n}");
            for (k, (s, t)) in strings.iter().zip(&term_lists).enumerate() {
                let want = expected(kind, n as i64, k as i64);
                assert_eq!(parse_poly(s).unwrap(), want, "{kind} ({n},{k})");
                assert_eq!(terms(t), want, "{kind} ({n},{k})");
            }
        }
    }
}

#[test]
fn expansions_round_trip() {
    let d = doc(&["expand", "frobenius-euler", "--order", "4"]);
    for (n, entry) in d["results"].as_array().unwrap().iter().enumerate() {
        let value = parse_ratfun(entry["value"].as_str().unwrap()).unwrap();
        assert_eq!(value, frobenius_euler_poly(n as i64).unwrap());
        let num = terms(&entry["terms"]);
        let den = entry.get("denominator_terms").map(terms).unwrap_or_else(MPoly::one);
        assert_eq!(RatFun::new(num, den).unwrap(), value);
    }
}

#[test]
fn expand_bindings() {
    let d = doc(&["expand", "ordered-bell", "--order", "3", "--bind", "x=0", "--bind", "λ=0"]);
    let vals: Vec<&str> = d["results"].as_array().unwrap().iter().map(|r| r["value"].as_str().unwrap()).collect();
    assert_eq!(vals, ["1", "1", "3", "13"]);
    assert_eq!(d["params"]["bindings"]["λ"], "0");
    let d = doc(&["expand", "deg-eulerian", "--order", "2", "--bind", "lambda=1/2"]);
    assert_eq!(d["results"][2]["value"], "1/2+t");
    let d = doc(&["expand", "eulerian", "--order", "4", "--bind", "t=-1"]);
    assert_eq!(d["results"][3]["value"], "-2");
}

#[test]
fn poles_exit_three() {
    for args in [
        ["expand", "frobenius-euler", "--order", "1", "--bind", "u=1"],
        ["expand", "eulerian", "--order", "2", "--bind", "t=1"],
        ["expand", "deg-eulerian", "--order", "2", "--bind", "t=1"],
    ] {
        let out = call(&args);
        assert_eq!(out.code, EXIT_POLE, "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["table", "eulerian", "--n-max", "-1", "--format", "csv"],
        &["table", "bogus", "--n-max", "3"],
        &["expand", "eulerian", "--order", "-2"],
        &["expand", "eulerian", "--order", "2", "--bind", "q=1"],
        &["expand", "eulerian", "--order", "2", "--bind", "x=1"],
        &["expand", "eulerian", "--order", "2", "--bind", "t"],
        &["expand", "eulerian", "--order", "2", "--bind", "t=1/0"],
        &["verify", "EQ99", "--n-max", "6"],
        &["verify", "EQ11_POWER_SUM", "--n-max", "2"],
        &["verify", "all", "--n-max", "-3"],
        &["frobnicate"],
    ];
    for args in cases {
        assert_eq!(call(args).code, EXIT_USAGE, "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    let out = call(&["--help"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("verify"));
}

#[test]
fn verify_selected_ids() {
    let d = doc(&["verify", "EQ09_WORPITZKY", "--identity", "EQ11_POWER_SUM", "--n-max", "4", "--m-max", "6"]);
    let ids: Vec<&str> = d["results"].as_array().unwrap().iter().map(|r| r["report"]["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["EQ09_WORPITZKY", "EQ11_POWER_SUM"]);
    assert_eq!(d["results"][1]["report"]["range"]["m_max"], 6);
    assert_eq!(d["params"]["status"], "pass");
    let sampled = doc(&["verify", "EQ41_Q_FORM", "--n-max", "4", "--sample-seed", "11"]);
    assert_eq!(sampled["params"]["mode"], "sampled");
    assert_eq!(sampled["results"][0]["report"]["status"], "pass");
}
