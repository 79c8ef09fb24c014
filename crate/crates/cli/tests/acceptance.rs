//! Acceptance criteria, one pass/fail line each, with runtime budgets.
//! Every comparison is exact.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use degenerate_eulerian::algebra::{MPoly, Monomial, RatFun, Rational, Var};
use degenerate_eulerian::classical::{
    eulerian_number, eulerian_poly, factorial, frobenius_euler_number, stirling1, stirling2,
};
use degenerate_eulerian::degenerate::{
    coefficient_of_t, deg_eulerian_egf, deg_eulerian_number, deg_eulerian_number_closed_with,
    deg_eulerian_poly, deg_eulerian_poly_frobenius_with, deg_eulerian_poly_recursive, deg_ordered_bell,
    deg_ordered_bell_frobenius_with, denominator_divides_one_plus_q_pow, fermionic_moment,
    frobenius_euler_numbers_in_t, moment_from_eulerian,
};
use degenerate_eulerian::identities::{verify, IdentityId, Verifier};
use degenerate_eulerian::oracles::{eulerian_bruteforce, ordered_set_partitions_bruteforce};
use degenerate_eulerian::render::{parse_poly, parse_ratfun, poly_from_terms, render_ratfun};
use degenerate_eulerian::Tables;
use num_bigint::BigInt;
use serde_json::Value;

fn p(s: &str) -> MPoly {
    parse_poly(s).unwrap()
}

fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

fn v(x: Var) -> MPoly {
    MPoly::var(x)
}

fn degeul(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_degeul")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out) = degeul(args);
    assert_eq!(code, 0, "degeul {args:?}");
    serde_json::from_str(&out).unwrap()
}

fn c1_eulerian_golden_rows() {
    assert_eq!(eulerian_poly(2).unwrap(), p("1+t"));
    assert_eq!(eulerian_poly(3).unwrap(), p("1+4t+t^2"));
    for n in 0..=12usize {
        let at_one = eulerian_poly(n as i64).unwrap().eval(Var::T, &int(1));
        assert_eq!(at_one, MPoly::from(factorial(n)), "A_{n}(1)");
    }
}

fn c2_brute_force() {
    for n in 0..=8i64 {
        for m in 0..=n {
            assert_eq!(eulerian_number(n, m).unwrap(), BigInt::from(eulerian_bruteforce(n, m).unwrap()), "<{n},{m}>");
        }
    }
}

fn c3_closed_form_vs_recurrence() {
    let tables = Tables::build(12);
    for n in 0..=12usize {
        for m in 0..=n {
            assert_eq!(eulerian_number(n as i64, m as i64).unwrap(), tables.eulerian(n, m), "<{n},{m}>");
        }
    }
}

fn c4_worpitzky() {
    let x = v(Var::X);
    for n in 1..=10usize {
        let mut sum = MPoly::zero();
        for k in 0..n {
            // C(x+k, n) expanded independently
            let mut b = MPoly::one();
            for i in 0..n {
                b = &b * &(&x + &MPoly::from(int(k as i64 - i as i64)));
            }
            let b = b.scale(&Rational::new(BigInt::from(1), factorial(n)));
            sum += &b.scale(&int(eulerian_number(n as i64, k as i64).unwrap()));
        }
        assert!((&sum - &x.pow(n as u32)).is_zero(), "n = {n}");
    }
    assert!(verify(IdentityId::EQ09_WORPITZKY, 10, None).unwrap().passed());
}

fn c5_power_sum() {
    let r = verify(IdentityId::EQ11_POWER_SUM, 4, Some(6)).unwrap();
    assert!(r.passed(), "{:?}", r.counterexample);
    // n = 1, m = 2 by hand: 2t^3/(t-1) - t(t^2-1)(1)/(t-1)^2
    let t = v(Var::T);
    let tm1 = &t - &MPoly::one();
    let first = RatFun::new(t.pow(3).scale(&int(2)), tm1.clone()).unwrap();
    let second = RatFun::new(&t * &(&t.pow(2) - &MPoly::one()), tm1.pow(2)).unwrap();
    let right = &first - &second;
    let left = p("t+2t^2");
    assert_eq!(right, RatFun::from(left.clone()));
    let direct = MPoly::from_terms((1..=2u32).map(|k| (Monomial::var(Var::T, k), int(k))));
    assert_eq!(direct, left);
}

fn c6_degenerate_four_way() {
    let tables = Tables::standard();
    let rec = deg_eulerian_poly_recursive(10).unwrap();
    let series = deg_eulerian_egf(10).unwrap().egf_values();
    let h_t = frobenius_euler_numbers_in_t(10);
    for n in 0..=10usize {
        let stirling = deg_eulerian_poly(n as i64).unwrap();
        assert_eq!(rec[n], stirling, "recursion, n = {n}");
        assert_eq!(series[n], RatFun::from(stirling.clone()), "series, n = {n}");
        assert_eq!(deg_eulerian_poly_frobenius_with(tables, &h_t, n), RatFun::from(stirling.clone()), "frobenius, n = {n}");
        assert_eq!(stirling.eval(Var::Lambda, &int(0)), eulerian_poly(n as i64).unwrap(), "λ = 0, n = {n}");
    }
    assert_eq!(deg_eulerian_poly(2).unwrap(), p("1+t-λ"));
}

fn c7_degenerate_numbers() {
    let tables = Tables::standard();
    let rec = deg_eulerian_poly_recursive(10).unwrap();
    for (n, poly) in rec.iter().enumerate() {
        for l in 0..=n {
            let single = deg_eulerian_number(n as i64, l as i64).unwrap();
            assert_eq!(coefficient_of_t(poly, l), single, "({n},{l})");
            assert_eq!(deg_eulerian_number_closed_with(tables, n, l), single, "({n},{l})");
        }
    }
    assert_eq!(deg_eulerian_number(2, 0).unwrap(), p("1-λ"));
    assert_eq!(deg_eulerian_number(2, 1).unwrap(), p("1"));
}

fn c8_ordered_bell() {
    let tables = Tables::standard();
    let h2: Vec<Rational> = (0..=10)
        .map(|k| frobenius_euler_number(k).unwrap().eval(Var::U, &int(2)).unwrap().as_constant().unwrap())
        .collect();
    for n in 0..=10usize {
        let b = deg_ordered_bell(n as i64).unwrap();
        assert_eq!(b, deg_eulerian_poly(n as i64).unwrap().eval(Var::T, &int(2)), "n = {n}");
        assert_eq!(b, deg_ordered_bell_frobenius_with(tables, &h2, n), "n = {n}");
    }
    assert_eq!(deg_ordered_bell(2).unwrap(), p("3-λ"));
    let fubini = [1, 1, 3, 13, 75];
    for n in 0..=5i64 {
        let at_zero = deg_ordered_bell(n).unwrap().eval(Var::Lambda, &int(0));
        let count = ordered_set_partitions_bruteforce(n).unwrap();
        assert_eq!(at_zero, MPoly::from(int(count)), "n = {n}");
        if n < 5 {
            assert_eq!(count, fubini[n as usize]);
        }
    }
}

fn c9_q_moments() {
    assert!(verify(IdentityId::EQ41_Q_FORM, 8, None).unwrap().passed());
    assert!(verify(IdentityId::EQ44_46_MOMENT, 8, None).unwrap().passed());
    for n in 0..=8usize {
        let m = fermionic_moment(n as i64).unwrap();
        assert_eq!(m, moment_from_eulerian(&deg_eulerian_poly(n as i64).unwrap(), n), "n = {n}");
        assert!(denominator_divides_one_plus_q_pow(&m, n), "n = {n}");
    }
}

fn c10_bridge_and_orthogonality() {
    let tm1 = &v(Var::T) - &MPoly::one();
    for n in 0..=10i64 {
        let h = frobenius_euler_number(n).unwrap().substitute(Var::U, &RatFun::var(Var::T));
        assert_eq!(RatFun::from(eulerian_poly(n).unwrap()), h.mul_poly(&tm1.pow(n as u32)), "n = {n}");
    }
    for n in 0..=10i64 {
        for m in 0..=10i64 {
            let sum: BigInt = (0..=n).filter(|&k| m <= k).map(|k| stirling1(n, k).unwrap() * stirling2(k, m).unwrap()).sum();
            assert_eq!(sum, BigInt::from(u8::from(n == m)), "({n},{m})");
        }
    }
}

fn c11_fault_sensitivity() {
    let bad = Tables::standard().clone().with_stirling1(5, 2, BigInt::from(50));
    let reports = Verifier::with_tables(bad).verify_all(8).unwrap();
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    assert!(!failed.is_empty());
    let cx = failed
        .iter()
        .find(|r| r.id == IdentityId::EQ22_STIRLING_TRANSFORM)
        .and_then(|r| r.counterexample.clone())
        .expect("transform check fails with a counterexample");
    assert_eq!(cx.indices, vec![("n".to_string(), 5)]);
    let (l, r, d) = (parse_ratfun(&cx.left).unwrap(), parse_ratfun(&cx.right).unwrap(), parse_ratfun(&cx.difference).unwrap());
    assert_eq!(&l - &r, d);
    assert!(!d.is_zero());
}

fn c12_cli_contract() {
    let doc = json(&["verify", "all", "--n-max", "8"]);
    for key in ["command", "version", "params", "results"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    let results = doc["results"].as_array().unwrap();
    assert!(results.len() >= 27);
    for r in results {
        assert!(r["n"].is_u64());
        let report = &r["report"];
        assert_eq!(report["status"], "pass", "{}", report["id"]);
        assert!(report["counterexample"].is_null());
    }

    let (code, csv) = degeul(&["table", "eulerian", "--n-max", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = csv.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows, ["1", "1", "1,1", "1,4,1"]);
    let doc = json(&["table", "eulerian", "--n-max", "3"]);
    for (n, row) in rows.iter().enumerate() {
        let from_json: Vec<&str> = doc["results"][n]["row"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
        assert_eq!(from_json.join(","), *row);
    }

    let doc = json(&["table", "deg-eulerian", "--n-max", "2"]);
    let row2 = &doc["results"][2];
    assert_eq!(row2["row"], serde_json::json!(["1-λ", "1"]));
    for (l, terms) in row2["terms"].as_array().unwrap().iter().enumerate() {
        let pairs: Vec<([u32; 5], String)> = serde_json::from_value(terms.clone()).unwrap();
        assert_eq!(poly_from_terms(&pairs).unwrap(), deg_eulerian_number(2, l as i64).unwrap());
    }

    let values = |d: &Value| -> Vec<RatFun> {
        d["results"].as_array().unwrap().iter().map(|r| parse_ratfun(r["value"].as_str().unwrap()).unwrap()).collect()
    };
    let doc = json(&["expand", "deg-eulerian", "--order", "2", "--bind", "t=2"]);
    assert_eq!(values(&doc), vec![RatFun::int(1), RatFun::int(1), p("3-λ").into()]);
    let doc = json(&["expand", "eulerian", "--order", "3"]);
    let expanded = values(&doc);
    assert_eq!(expanded, ["1", "1", "1+t", "1+4t+t^2"].map(|s| RatFun::from(p(s))).to_vec());
    assert_eq!(expanded.iter().map(render_ratfun).collect::<Vec<_>>(), ["1", "1", "1+t", "1+4t+t^2"]);

    assert_eq!(degeul(&["expand", "frobenius-euler", "--order", "1", "--bind", "u=1"]).0, 3);
    assert_eq!(degeul(&["verify", "EQ99", "--n-max", "6"]).0, 2);
    assert_eq!(degeul(&["table", "eulerian", "--n-max", "-1", "--format", "csv"]).0, 2);
    assert_eq!(degeul(&["verify", "--identity", "EQ09_WORPITZKY", "--n-max", "6"]).0, 0);
}

type Criterion = (&'static str, fn(), Duration);

fn main() {
    let secs = Duration::from_secs;
    let criteria: [Criterion; 12] = [
        ("1 Eulerian golden rows and A_n(1) = n!", c1_eulerian_golden_rows, secs(1)),
        ("2 Eulerian numbers vs permutation enumeration", c2_brute_force, secs(5)),
        ("3 closed form vs recurrence triangle", c3_closed_form_vs_recurrence, secs(1)),
        ("4 Worpitzky expansion", c4_worpitzky, secs(2)),
        ("5 power-sum identity", c5_power_sum, secs(2)),
        ("6 degenerate Eulerian four-way agreement", c6_degenerate_four_way, secs(10)),
        ("7 degenerate Eulerian numbers", c7_degenerate_numbers, secs(5)),
        ("8 degenerate ordered Bell chain", c8_ordered_bell, secs(5)),
        ("9 q-moment identities", c9_q_moments, secs(10)),
        ("10 bridge and Stirling orthogonality", c10_bridge_and_orthogonality, secs(2)),
        ("11 fault sensitivity", c11_fault_sensitivity, secs(30)),
        ("12 CLI contract", c12_cli_contract, secs(60)),
    ];
    let suite = Instant::now();
    // warm the shared triangles so the first criterion is not charged for them
    let _ = Tables::standard();
    let mut failures = 0;
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        let verdict = match result {
            Ok(()) if elapsed <= budget => "PASS".to_string(),
            Ok(()) => format!("FAIL (over budget {budget:?})"),
            Err(e) => {
                let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
                format!("FAIL ({})", msg.unwrap_or_default())
            }
        };
        if !verdict.starts_with("PASS") {
            failures += 1;
        }
        println!("criterion {name}: {verdict} [{:.3}s / {}s]", elapsed.as_secs_f64(), budget.as_secs());
    }
    let total = suite.elapsed();
    println!("acceptance total {:.3}s / 60s", total.as_secs_f64());
    if total > secs(60) {
        failures += 1;
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
