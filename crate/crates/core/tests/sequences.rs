//! Sequence values against oracles computed here, independent of the
//! library's formula paths.

use degenerate_eulerian::algebra::{MPoly, RatFun, Rational, Var};
use degenerate_eulerian::classical::{
    eulerian_number, frobenius_euler_number, frobenius_euler_poly, stirling1, stirling2,
};
use degenerate_eulerian::degenerate::{
    deg_eulerian_number, deg_falling, deg_ordered_bell, deg_ordered_bell_poly, deg_unsigned_stirling1,
    fermionic_moment, h_at_minus_q,
};
use degenerate_eulerian::oracles::set_partitions_bruteforce;
use degenerate_eulerian::render::{parse_poly, parse_ratfun, render_ratfun};
use degenerate_eulerian::SequenceError;
use num_bigint::BigInt;

fn p(s: &str) -> MPoly {
    parse_poly(s).unwrap()
}

fn r(s: &str) -> RatFun {
    parse_ratfun(s).unwrap()
}

#[test]
fn stirling_first_kind_from_falling_factorial() {
    // coefficients of x(x-1)...(x-n+1) expanded here
    for n in 0..=9i64 {
        let mut f = MPoly::one();
        for i in 0..n {
            f = &f * &(&MPoly::var(Var::X) - &MPoly::int(i));
        }
        let cs = f.coefficients_in(Var::X);
        for k in 0..=n {
            let want = cs.get(k as usize).cloned().unwrap_or_default();
            assert_eq!(MPoly::from(stirling1(n, k).unwrap()), want, "S1({n},{k})");
        }
    }
}

#[test]
fn stirling_second_kind_counts_partitions() {
    for n in 0..=7i64 {
        for k in 0..=n {
            assert_eq!(stirling2(n, k).unwrap(), BigInt::from(set_partitions_bruteforce(n, k).unwrap()));
        }
    }
}

#[test]
fn index_errors() {
    assert_eq!(eulerian_number(-1, 0), Err(SequenceError::NegativeIndex(-1)));
    assert_eq!(stirling1(3, 4), Err(SequenceError::IndexOutOfTriangle { n: 3, k: 4 }));
    assert_eq!(deg_eulerian_number(2, 3), Err(SequenceError::IndexOutOfRange { n: 2, l: 3 }));
    assert!(eulerian_number(3, 5).unwrap() == BigInt::from(0));
}

#[test]
fn frobenius_euler_small_values() {
    // by hand from (1-u)/(e^t - u) with s = 1/(1-u): 1 - s t + (s^2 - s/2) t^2 + ...
    assert_eq!(frobenius_euler_number(0).unwrap(), RatFun::int(1));
    assert_eq!(frobenius_euler_number(1).unwrap(), r("(1)/(-1+u)"));
    assert_eq!(frobenius_euler_number(2).unwrap(), r("(1+u)/(1-2u+u^2)"));
    assert_eq!(frobenius_euler_poly(1).unwrap(), r("(-1+x-xu)/(1-u)"));
    assert_eq!(render_ratfun(&frobenius_euler_number(2).unwrap()), "(1+u)/(1-2u+u^2)");
}

#[test]
fn degenerate_small_values() {
    assert_eq!(deg_eulerian_number(2, 0).unwrap(), p("1-λ"));
    assert_eq!(deg_eulerian_number(2, 1).unwrap(), p("1"));
    assert_eq!(deg_ordered_bell(2).unwrap(), p("3-λ"));
    // (1+λt)^(x/λ) = 1 + x t + x(x-λ) t^2/2 + ..., times 1/(2 - (1+λt)^(1/λ))
    assert_eq!(deg_ordered_bell_poly(1).unwrap(), p("1+x"));
    assert_eq!(deg_falling(2).unwrap(), p("x^2-xλ"));
    assert_eq!(deg_unsigned_stirling1(3, 1).unwrap(), p("2λ^2"));
    assert_eq!(deg_unsigned_stirling1(3, 2).unwrap(), p("3λ"));
}

#[test]
fn fermionic_moments_by_hand() {
    // H_1(-q) = -1/(1+q); moment of <x>_{1,λ/(1+q)} = x is H_1(-q)
    assert_eq!(h_at_minus_q(1).unwrap(), r("(-1)/(1+q)"));
    assert_eq!(fermionic_moment(1).unwrap(), r("(-1)/(1+q)"));
    // n = 2: H_2(-q) + (λ/(1+q)) H_1(-q), with H_2(-q) = (1-q)/(1+q)^2
    let want = r("(1-q-λ)/(1+2q+q^2)");
    assert_eq!(fermionic_moment(2).unwrap(), want);
    let one = Rational::from_integer(1.into());
    assert_eq!(fermionic_moment(0).unwrap(), RatFun::constant(one));
}
