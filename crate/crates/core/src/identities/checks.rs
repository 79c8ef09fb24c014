use std::cell::RefCell;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{Counterexample, IdentityId, IndexRange, Mode};
use crate::algebra::{AlgebraError, MPoly, Monomial, RatFun, Rational, Series, Var, NVARS};
use crate::classical::{
    binomial, binomial_in_x, eulerian_closed, eulerian_egf, eulerian_poly_closed, eulerian_poly_recursive,
    eulerian_poly_with, factorial, frobenius_euler_egf, frobenius_euler_numbers, frobenius_euler_poly_from,
};
use crate::degenerate::{
    at_minus_q, coefficient_of_t, deg_eulerian_egf, deg_eulerian_number_closed_with, deg_eulerian_number_with,
    deg_eulerian_poly_frobenius_with, deg_eulerian_poly_recursive, deg_eulerian_poly_with, deg_falling_of,
    deg_ordered_bell_double_sum_with, deg_ordered_bell_egf, deg_ordered_bell_frobenius_with,
    deg_ordered_bell_poly_egf, deg_ordered_bell_with, denominator_divides_one_plus_q_pow, fermionic_moment_from,
    frobenius_euler_numbers_in_t, h_at_minus_q_all, moment_from_eulerian, q_form_with,
};
use crate::oracles::ascent_histogram;
use crate::render::render_ratfun;
use crate::tables::Tables;

const SAMPLE_POINTS: usize = 3;
const BRUTE_FORCE_MAX: usize = 8;
const DISPLAY_ORDER: usize = 10;

pub(super) struct Ctx<'a> {
    tables: &'a Tables,
    rng: Option<RefCell<StdRng>>,
    notes: RefCell<Vec<String>>,
}

type Checked = Result<Option<Counterexample>, AlgebraError>;

impl<'a> Ctx<'a> {
    pub(super) fn new(tables: &'a Tables, mode: Mode, id: IdentityId) -> Self {
        let rng = match mode {
            Mode::Symbolic => None,
            Mode::Sampled { seed } => {
                let salt = IdentityId::ALL.iter().position(|&i| i == id).unwrap() as u64;
                Some(RefCell::new(StdRng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))))
            }
        };
        Ctx { tables, rng, notes: RefCell::new(Vec::new()) }
    }

    pub(super) fn into_notes(self) -> Vec<String> {
        self.notes.into_inner()
    }

    fn note(&self, s: impl Into<String>) {
        self.notes.borrow_mut().push(s.into());
    }

    fn equal(&self, l: &RatFun, r: &RatFun) -> bool {
        let Some(rng) = &self.rng else { return l == r };
        let mut rng = rng.borrow_mut();
        let mut hits = 0;
        // points where a denominator vanishes are redrawn
        for _ in 0..SAMPLE_POINTS * 20 {
            let point: [Rational; NVARS] = std::array::from_fn(|_| {
                Rational::new(BigInt::from(rng.random_range(-60i64..=60)), BigInt::from(rng.random_range(1i64..=17)))
            });
            let (ld, rd) = (eval_at(l.den(), &point), eval_at(r.den(), &point));
            if ld.is_zero() || rd.is_zero() {
                continue;
            }
            if eval_at(l.num(), &point) / ld != eval_at(r.num(), &point) / rd {
                return false;
            }
            hits += 1;
            if hits == SAMPLE_POINTS {
                return true;
            }
        }
        l == r
    }

    fn compare(&self, indices: &[(&str, usize)], l: RatFun, r: RatFun) -> Option<Counterexample> {
        if self.equal(&l, &r) {
            return None;
        }
        let difference = &l - &r;
        Some(Counterexample {
            indices: indices.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            left: render_ratfun(&l),
            right: render_ratfun(&r),
            difference: render_ratfun(&difference),
        })
    }
}

fn eval_at(p: &MPoly, point: &[Rational; NVARS]) -> Rational {
    let mut acc = Rational::zero();
    for (m, c) in p.terms() {
        let mut v = c.clone();
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                v *= Pow::pow(&point[i], e);
            }
        }
        acc += v;
    }
    acc
}

macro_rules! expect_eq {
    ($ctx:expr, [$(($k:literal, $v:expr)),* $(,)?], $l:expr, $r:expr) => {
        if let Some(cx) = $ctx.compare(&[$(($k, $v)),*], RatFun::from($l), RatFun::from($r)) {
            return Ok(Some(cx));
        }
    };
    ($ctx:expr, $label:expr, [$(($k:literal, $v:expr)),* $(,)?], $l:expr, $r:expr) => {
        if let Some(cx) = $ctx.compare(&[$(($k, $v)),*], RatFun::from($l), RatFun::from($r)) {
            $ctx.note(format!("mismatch: {}", $label));
            return Ok(Some(cx));
        }
    };
}

fn int(c: impl Into<BigInt>) -> Rational {
    Rational::from_integer(c.into())
}

fn big(c: BigInt) -> MPoly {
    MPoly::from(c)
}

fn t() -> MPoly {
    MPoly::var(Var::T)
}

fn tm1() -> MPoly {
    &t() - &MPoly::one()
}

fn one_minus_t() -> MPoly {
    &MPoly::one() - &t()
}

fn delta(n: usize, m: usize) -> MPoly {
    if n == m {
        MPoly::one()
    } else {
        MPoly::zero()
    }
}

fn signed(sign_odd: bool, c: BigInt) -> Rational {
    if sign_odd {
        -int(c)
    } else {
        int(c)
    }
}

pub(super) fn tables_needed(n_max: usize) -> usize {
    (n_max + 1).max(3)
}

pub(super) fn range_of(id: IdentityId, n_max: usize, m_max: Option<usize>) -> IndexRange {
    use IdentityId as I;
    let (n_min, top) = match id {
        I::EQ09_WORPITZKY => (1, n_max),
        I::EQ05_GF | I::EQ07_COEFFS | I::EQ12_GF | I::EQ13_GF | I::EQ14_GF | I::EQ15_GF | I::EQ16_GF => {
            (0, n_max + 1)
        }
        I::EQ08_TABLE => (0, 3),
        I::BRUTE_FORCE_EULERIAN => (0, n_max.min(BRUTE_FORCE_MAX)),
        _ => (0, n_max),
    };
    let m_max = match id {
        I::EQ11_POWER_SUM => m_max,
        I::EQ01_GF => Some(n_max + 1),
        I::EQ08_TABLE => Some(DISPLAY_ORDER),
        _ => None,
    };
    IndexRange { n_min, n_max: top, m_max }
}

pub(super) fn run(ctx: &Ctx, id: IdentityId, n: usize, m: usize) -> Option<Counterexample> {
    use IdentityId as I;
    let out = match id {
        I::EQ01_GF => eq01(ctx, n),
        I::EQ02_VS_EQ04 => eq02(ctx, n),
        I::EQ05_GF => eq05(ctx, n),
        I::EQ06_UMBRAL => eq06(ctx, n),
        I::EQ07_COEFFS => eq07(ctx, n),
        I::EQ08_TABLE => eq08(ctx),
        I::EQ09_WORPITZKY => eq09(ctx, n),
        I::EQ10_RECURSION => eq10(ctx, n),
        I::EQ11_POWER_SUM => eq11(ctx, n, m),
        I::EQ12_GF => eq12(ctx, n),
        I::EQ13_GF => eq13(ctx, n),
        I::EQ14_GF => eq14(ctx, n),
        I::EQ15_GF => eq15(ctx, n),
        I::EQ16_GF => eq16(ctx, n),
        I::EQ18_UMBRAL_DEG => eq18(ctx, n),
        I::EQ20_RECURSION_DEG => eq20(ctx, n),
        I::EQ22_STIRLING_TRANSFORM => eq22(ctx, n),
        I::EQ23_25_28_NUMBERS => eq23_25_28(ctx, n),
        I::EQ26_27_ORDERED_BELL => eq26_27(ctx, n),
        I::EQ30_FROBENIUS_FORM => eq30(ctx, n),
        I::EQ31_BELL_FROBENIUS => eq31(ctx, n),
        I::EQ41_Q_FORM => eq41(ctx, n),
        I::EQ44_46_MOMENT => eq44_46(ctx, n),
        I::LIMIT_LAMBDA_ZERO => limit_lambda_zero(ctx, n),
        I::BRIDGE_A_EQUALS_H => bridge(ctx, n),
        I::STIRLING_ORTHOGONALITY => orthogonality(ctx, n),
        I::BRUTE_FORCE_EULERIAN => brute_force(ctx, n),
    };
    out.unwrap_or_else(|e| {
        // a failed exact division or inversion means the identity broke
        ctx.note(format!("computation failed: {e}"));
        Some(Counterexample {
            indices: Vec::new(),
            left: format!("error: {e}"),
            right: "-".to_string(),
            difference: "-".to_string(),
        })
    })
}

fn eq01(c: &Ctx, n_max: usize) -> Checked {
    c.note("the right side is read as Σ_{m≥0} <n,m> x^m; the printed Σ_{m≥1} <n,m-1> x^m is this series times x");
    let order = n_max + 1;
    let x = MPoly::var(Var::X);
    for n in 0..=n_max {
        let sums: Vec<RatFun> = (0..=order)
            .map(|k| RatFun::constant(int(BigInt::from(k + 1).pow(n as u32))))
            .collect();
        let factor = Series::from_poly(Var::X, &(&MPoly::one() - &x).pow(n as u32 + 1), order);
        let left = Series::new(Var::X, sums)?.mul(&factor)?;
        for m in 0..=order {
            expect_eq!(c, [("n", n), ("m", m)], left.coeff(m).clone(), big(eulerian_closed(n, m)));
        }
    }
    Ok(None)
}

fn eq02(c: &Ctx, n_max: usize) -> Checked {
    for n in 0..=n_max {
        for m in 0..=n {
            expect_eq!(c, [("n", n), ("m", m)], big(eulerian_closed(n, m)), big(c.tables.eulerian(n, m)));
        }
    }
    Ok(None)
}

fn eq05(c: &Ctx, n_max: usize) -> Checked {
    let order = n_max + 1;
    let values: Vec<RatFun> = (0..=order).map(|n| eulerian_poly_with(c.tables, n).into()).collect();
    let gf = Series::from_egf_values(Var::X, &values)?;
    let denom = Series::variable(Var::X, order)
        .scale(&tm1().into())
        .exp()?
        .sub(&Series::constant(Var::X, RatFun::var(Var::T), order))?;
    let product = gf.mul(&denom)?;
    for j in 0..=order {
        let want = if j == 0 { one_minus_t() } else { MPoly::zero() };
        expect_eq!(c, [("n", j)], product.coeff(j).clone(), want);
    }
    Ok(None)
}

fn eq06(c: &Ctx, n_max: usize) -> Checked {
    for n in 0..=n_max {
        let mut lhs = MPoly::zero();
        for k in 0..=n {
            let a = eulerian_poly_with(c.tables, k);
            lhs += &(&a * &tm1().pow((n - k) as u32)).scale(&int(binomial(n, k)));
        }
        lhs -= &(&t() * &eulerian_poly_with(c.tables, n));
        expect_eq!(c, [("n", n)], lhs, &one_minus_t() * &delta(n, 0));
    }
    Ok(None)
}

fn eq07(c: &Ctx, n_max: usize) -> Checked {
    let values = eulerian_egf(n_max + 1)?.egf_values();
    for (n, v) in values.into_iter().enumerate() {
        expect_eq!(c, [("n", n)], v, eulerian_poly_closed(n));
    }
    Ok(None)
}

fn eq08(c: &Ctx) -> Checked {
    let displayed = [(2, "1+t"), (3, "1+4t+t^2")];
    for (k, s) in displayed {
        let shown = crate::render::parse_poly(s).expect("valid literal");
        expect_eq!(c, "displayed polynomial", [("k", k)], eulerian_poly_with(c.tables, k), shown);
    }
    for k in 0..=3usize {
        let a = Series::from_poly(Var::T, &eulerian_poly_with(c.tables, k), DISPLAY_ORDER);
        let denom = Series::from_poly(Var::T, &one_minus_t().pow(k as u32 + 1), DISPLAY_ORDER);
        let left = a.mul(&denom.inv()?)?;
        for j in 0..=DISPLAY_ORDER {
            let want = MPoly::from(BigInt::from(j + 1).pow(k as u32));
            expect_eq!(c, [("k", k), ("j", j)], left.coeff(j).clone(), want);
        }
    }
    Ok(None)
}

fn eq09(c: &Ctx, n_max: usize) -> Checked {
    let x = MPoly::var(Var::X);
    for n in 1..=n_max {
        let mut sum = MPoly::zero();
        for k in 0..n {
            sum += &binomial_in_x(k as i64, n).scale(&int(c.tables.eulerian(n, k)));
        }
        expect_eq!(c, [("n", n)], sum, x.pow(n as u32));
    }
    Ok(None)
}

fn eq10(c: &Ctx, n_max: usize) -> Checked {
    for (n, a) in eulerian_poly_recursive(n_max)?.into_iter().enumerate() {
        expect_eq!(c, [("n", n)], a, eulerian_poly_with(c.tables, n));
    }
    Ok(None)
}

fn power_sum(exponent: usize, m: usize) -> MPoly {
    MPoly::from_terms(
        (1..=m).map(|k| (Monomial::var(Var::T, k as u32), int(BigInt::from(k).pow(exponent as u32)))),
    )
}

fn power_sum_formula(tables: &Tables, n: usize, m: usize) -> Result<RatFun, AlgebraError> {
    let t_m1 = MPoly::term(Monomial::var(Var::T, m as u32 + 1), Rational::one());
    let mut acc = RatFun::zero();
    for i in 1..=n {
        let coeff = signed((n + i) % 2 == 1, binomial(n, i) * BigInt::from(m).pow(i as u32));
        let num = (&t_m1 * &eulerian_poly_with(tables, n - i)).scale(&coeff);
        acc = &acc + &RatFun::new(num, tm1().pow((n - i + 1) as u32))?;
    }
    let tail_num = (&(&t() * &(&t().pow(m as u32) - &MPoly::one())) * &eulerian_poly_with(tables, n))
        .scale(&signed(n % 2 == 1, BigInt::one()));
    Ok(&acc + &RatFun::new(tail_num, tm1().pow(n as u32 + 1))?)
}

fn eq11(c: &Ctx, n_max: usize, m_max: usize) -> Checked {
    let mut printed_fails: Option<(usize, usize)> = None;
    for n in 0..=n_max {
        for m in 1..=m_max {
            let right = power_sum_formula(c.tables, n, m)?;
            if printed_fails.is_none() && RatFun::from(power_sum(m, m)) != right {
                printed_fails = Some((n, m));
            }
            expect_eq!(c, [("n", n), ("m", m)], power_sum(n, m), right);
        }
    }
    match printed_fails {
        Some((n, m)) => c.note(format!(
            "left side read as Σ k^n t^k; the printed Σ k^m t^k differs first at n = {n}, m = {m}"
        )),
        None => c.note("left side read as Σ k^n t^k; the printed Σ k^m t^k agrees on this range"),
    }
    Ok(None)
}

fn eq12(c: &Ctx, n_max: usize) -> Checked {
    let order = n_max + 1;
    let values = deg_ordered_bell_poly_egf(order)?.egf_values();
    let x = MPoly::var(Var::X);
    let bell: Vec<MPoly> = (0..=order).map(|k| deg_ordered_bell_with(c.tables, k)).collect();
    for (n, v) in values.into_iter().enumerate() {
        let mut right = MPoly::zero();
        for (k, b) in bell.iter().enumerate().take(n + 1) {
            right += &(b * &deg_falling_of(&x, n - k)).scale(&int(binomial(n, k)));
        }
        expect_eq!(c, [("n", n)], v, right);
    }
    Ok(None)
}

fn eq13(c: &Ctx, n_max: usize) -> Checked {
    let order = n_max + 1;
    let values = frobenius_euler_egf(order)?.egf_values();
    let numbers = frobenius_euler_numbers(order);
    for (n, v) in values.into_iter().enumerate() {
        expect_eq!(c, [("n", n)], v, frobenius_euler_poly_from(&numbers, n));
    }
    Ok(None)
}

/// Compares `n! [t^n] base^k / k!` with `entry(n, k)` for `k, n <= order`.
fn stirling_series_check(
    c: &Ctx,
    base: &Series,
    order: usize,
    entry: impl Fn(usize, usize) -> BigInt,
) -> Checked {
    let mut power = Series::one(Var::T, order);
    for k in 0..=order {
        let scaled = power.scale(&RatFun::constant(Rational::new(BigInt::one(), factorial(k))));
        for (n, v) in scaled.egf_values().into_iter().enumerate() {
            expect_eq!(c, [("n", n), ("k", k)], v, big(entry(n, k)));
        }
        power = power.mul(base)?;
    }
    Ok(None)
}

fn eq14(c: &Ctx, n_max: usize) -> Checked {
    let order = n_max + 1;
    stirling_series_check(c, &Series::log1p(Var::T, order), order, |n, k| c.tables.s1(n, k))
}

fn eq15(c: &Ctx, n_max: usize) -> Checked {
    let order = n_max + 1;
    let base = Series::variable(Var::T, order).exp()?.sub(&Series::one(Var::T, order))?;
    stirling_series_check(c, &base, order, |n, k| c.tables.s2(n, k))
}

fn eq16(c: &Ctx, n_max: usize) -> Checked {
    let order = n_max + 1;
    let values = deg_eulerian_egf(order)?.egf_values();
    let rec = deg_eulerian_poly_recursive(order)?;
    for (n, (v, a)) in values.into_iter().zip(rec).enumerate() {
        expect_eq!(c, [("n", n)], v, a);
    }
    Ok(None)
}

fn eq18(c: &Ctx, n_max: usize) -> Checked {
    let a: Vec<MPoly> = (0..=n_max).map(|k| deg_eulerian_poly_with(c.tables, k)).collect();
    for n in 0..=n_max {
        let mut lhs = MPoly::zero();
        for (k, ak) in a.iter().enumerate().take(n + 1) {
            lhs += &(ak * &deg_falling_of(&tm1(), n - k)).scale(&int(binomial(n, k)));
        }
        lhs -= &(&t() * &a[n]);
        expect_eq!(c, [("n", n)], lhs, &one_minus_t() * &delta(n, 0));
    }
    Ok(None)
}

fn eq20(c: &Ctx, n_max: usize) -> Checked {
    for (n, a) in deg_eulerian_poly_recursive(n_max)?.into_iter().enumerate() {
        expect_eq!(c, [("n", n)], a, deg_eulerian_poly_with(c.tables, n));
    }
    Ok(None)
}

fn eq22(c: &Ctx, n_max: usize) -> Checked {
    for (n, v) in deg_eulerian_egf(n_max)?.egf_values().into_iter().enumerate() {
        expect_eq!(c, [("n", n)], deg_eulerian_poly_with(c.tables, n), v);
    }
    Ok(None)
}

fn eq23_25_28(c: &Ctx, n_max: usize) -> Checked {
    let rec = deg_eulerian_poly_recursive(n_max)?;
    for (n, a) in rec.iter().enumerate() {
        for l in 0..=n {
            let single = deg_eulerian_number_with(c.tables, n, l);
            expect_eq!(c, "t-coefficient vs single sum", [("n", n), ("l", l)], coefficient_of_t(a, l), single.clone());
            let double = deg_eulerian_number_closed_with(c.tables, n, l);
            expect_eq!(c, "single sum vs double sum", [("n", n), ("l", l)], single, double);
        }
    }
    Ok(None)
}

fn eq26_27(c: &Ctx, n_max: usize) -> Checked {
    for (n, v) in deg_ordered_bell_egf(n_max)?.egf_values().into_iter().enumerate() {
        let at_two = deg_ordered_bell_with(c.tables, n);
        expect_eq!(c, "series vs A_{n,λ}(2)", [("n", n)], v, at_two.clone());
        expect_eq!(c, "A_{n,λ}(2) vs double sum", [("n", n)], at_two, deg_ordered_bell_double_sum_with(c.tables, n));
    }
    Ok(None)
}

fn eq30(c: &Ctx, n_max: usize) -> Checked {
    let h_t = frobenius_euler_numbers_in_t(n_max);
    for (n, v) in deg_eulerian_egf(n_max)?.egf_values().into_iter().enumerate() {
        expect_eq!(c, [("n", n)], deg_eulerian_poly_frobenius_with(c.tables, &h_t, n), v);
    }
    Ok(None)
}

fn eq31(c: &Ctx, n_max: usize) -> Checked {
    let h2 = frobenius_euler_numbers(n_max)
        .iter()
        .map(|h| {
            h.eval(Var::U, &int(2)).map(|r| r.as_constant().expect("H_k(2) is a number"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    for (n, v) in deg_ordered_bell_egf(n_max)?.egf_values().into_iter().enumerate() {
        expect_eq!(c, [("n", n)], deg_ordered_bell_frobenius_with(c.tables, &h2, n), v);
    }
    Ok(None)
}

fn eq41(c: &Ctx, n_max: usize) -> Checked {
    let h = h_at_minus_q_all(n_max);
    for (n, a) in deg_eulerian_poly_recursive(n_max)?.into_iter().enumerate() {
        expect_eq!(c, [("n", n)], at_minus_q(&a), q_form_with(c.tables, &h, n));
    }
    Ok(None)
}

fn eq44_46(c: &Ctx, n_max: usize) -> Checked {
    let h = h_at_minus_q_all(n_max);
    for n in 0..=n_max {
        let moment = fermionic_moment_from(&h, n);
        let from_eulerian = moment_from_eulerian(&deg_eulerian_poly_with(c.tables, n), n);
        expect_eq!(c, [("n", n)], moment.clone(), from_eulerian);
        if !denominator_divides_one_plus_q_pow(&moment, n) {
            c.note(format!("denominator of the moment does not divide (1+q)^{n}"));
            let bound = (&MPoly::one() + &MPoly::var(Var::Q)).pow(n as u32);
            return Ok(Some(Counterexample {
                indices: vec![("n".to_string(), n)],
                left: crate::render::render_poly(moment.den()),
                right: crate::render::render_poly(&bound),
                difference: "not a divisor".to_string(),
            }));
        }
    }
    Ok(None)
}

fn limit_lambda_zero(c: &Ctx, n_max: usize) -> Checked {
    for (n, a) in deg_eulerian_poly_recursive(n_max)?.into_iter().enumerate() {
        expect_eq!(c, [("n", n)], a.eval(Var::Lambda, &Rational::zero()), eulerian_poly_with(c.tables, n));
    }
    Ok(None)
}

fn bridge(c: &Ctx, n_max: usize) -> Checked {
    for (n, h) in frobenius_euler_numbers_in_t(n_max).into_iter().enumerate() {
        expect_eq!(c, [("n", n)], eulerian_poly_with(c.tables, n), h.mul_poly(&tm1().pow(n as u32)));
    }
    Ok(None)
}

fn orthogonality(c: &Ctx, n_max: usize) -> Checked {
    for n in 0..=n_max {
        for m in 0..=n_max {
            let sum: BigInt = (0..=n).map(|k| c.tables.s1(n, k) * c.tables.s2(k, m)).sum();
            expect_eq!(c, [("n", n), ("m", m)], big(sum), delta(n, m));
        }
    }
    Ok(None)
}

fn brute_force(c: &Ctx, n_max: usize) -> Checked {
    if n_max > BRUTE_FORCE_MAX {
        c.note(format!("enumeration capped at n = {BRUTE_FORCE_MAX}"));
    }
    for n in 0..=n_max.min(BRUTE_FORCE_MAX) {
        let hist = ascent_histogram(n);
        for m in 0..=n {
            let count = hist.get(m).copied().unwrap_or(0);
            expect_eq!(c, [("n", n), ("m", m)], big(BigInt::from(count)), big(c.tables.eulerian(n, m)));
        }
    }
    Ok(None)
}
