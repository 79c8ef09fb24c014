//! λ-degenerate families: degenerate factorials, degenerate Eulerian
//! polynomials and numbers, degenerate ordered Bell numbers and
//! polynomials, degenerate unsigned Stirling numbers of the first kind and
//! the fermionic moment expressions in `q`.
//!
//! λ is a formal variable throughout. The fermionic q-integral is
//! represented only by its moments: the `n`-th moment of `x^n` is the
//! Frobenius–Euler number `H_n(-q)`.

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{poly_div_exact, AlgebraError, MPoly, Monomial, RatFun, Rational, Series, Var};
use crate::classical::{binomial, eulerian_poly_with, frobenius_euler_numbers, t_minus_1};
use crate::error::{index, SequenceError};
use crate::tables::Tables;

fn int(c: impl Into<BigInt>) -> Rational {
    Rational::from_integer(c.into())
}

fn lambda_pow(e: usize) -> MPoly {
    MPoly::term(Monomial::var(Var::Lambda, e as u32), Rational::one())
}

fn one_plus_q() -> MPoly {
    &MPoly::one() + &MPoly::var(Var::Q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorialKind {
    /// `(x)_{n,λ} = x(x-λ)···(x-(n-1)λ)`
    Falling,
    /// `<x>_{n,λ} = x(x+λ)···(x+(n-1)λ)`
    Rising,
}

/// `(α)_{n,λ}` for an arbitrary polynomial argument.
pub fn deg_falling_of(alpha: &MPoly, n: usize) -> MPoly {
    let lam = MPoly::var(Var::Lambda);
    (0..n).fold(MPoly::one(), |acc, i| &acc * &(alpha - &lam.scale(&int(i))))
}

/// `<α>_{n,λ}` for an arbitrary polynomial argument.
pub fn deg_rising_of(alpha: &MPoly, n: usize) -> MPoly {
    let lam = MPoly::var(Var::Lambda);
    (0..n).fold(MPoly::one(), |acc, i| &acc * &(alpha + &lam.scale(&int(i))))
}

/// A degenerate falling or rising factorial of `x`, expanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerateFactorial {
    pub kind: FactorialKind,
    pub n: usize,
    pub value: MPoly,
}

impl DegenerateFactorial {
    pub fn new(kind: FactorialKind, n: usize) -> Self {
        let x = MPoly::var(Var::X);
        let value = match kind {
            FactorialKind::Falling => deg_falling_of(&x, n),
            FactorialKind::Rising => deg_rising_of(&x, n),
        };
        DegenerateFactorial { kind, n, value }
    }
}

pub fn deg_falling(n: i64) -> Result<MPoly, SequenceError> {
    Ok(DegenerateFactorial::new(FactorialKind::Falling, index(n)?).value)
}

pub fn deg_rising(n: i64) -> Result<MPoly, SequenceError> {
    Ok(DegenerateFactorial::new(FactorialKind::Rising, index(n)?).value)
}

/// `A_{n,λ}(t) = Σ_{k=0}^n A_k(t) λ^(n-k) S_1(n,k)`. Division-free, so this
/// is the primary path.
pub fn deg_eulerian_poly_with(tables: &Tables, n: usize) -> MPoly {
    let mut acc = MPoly::zero();
    for k in 0..=n {
        let s = tables.s1(n, k);
        if s == BigInt::ZERO {
            continue;
        }
        acc += &(&eulerian_poly_with(tables, k) * &lambda_pow(n - k)).scale(&int(s));
    }
    acc
}

pub fn deg_eulerian_poly(n: i64) -> Result<MPoly, SequenceError> {
    let n = index(n)?;
    Ok(deg_eulerian_poly_with(&Tables::covering(n), n))
}

/// `A_{0,λ} .. A_{n_max,λ}` from
/// `A_{n,λ}(t) = (1/(t-1)) Σ_{k<n} C(n,k) A_{k,λ}(t) (t-1)_{n-k,λ}`.
/// Each division by `t - 1` must be exact.
pub fn deg_eulerian_poly_recursive(n_max: usize) -> Result<Vec<MPoly>, AlgebraError> {
    let tm1 = t_minus_1();
    let falling: Vec<MPoly> = (0..=n_max).map(|m| deg_falling_of(&tm1, m)).collect();
    let mut out = vec![MPoly::one()];
    for n in 1..=n_max {
        let mut acc = MPoly::zero();
        for (k, a) in out.iter().enumerate() {
            acc += &(a * &falling[n - k]).scale(&int(binomial(n, k)));
        }
        out.push(poly_div_exact(&acc, &tm1, Var::T)?);
    }
    Ok(out)
}

/// Series in `x` of `(1-t) / ((1+λx)^((t-1)/λ) - t)`.
pub fn deg_eulerian_egf(order: usize) -> Result<Series, AlgebraError> {
    let pow = Series::deg_pow(&t_minus_1(), Var::X, order)?;
    let denom = pow.sub(&Series::constant(Var::X, RatFun::var(Var::T), order))?;
    Ok(denom.inv()?.scale(&RatFun::from_poly(-t_minus_1())))
}

/// Frobenius–Euler numbers with their parameter renamed to `t`.
pub fn frobenius_euler_numbers_in_t(n_max: usize) -> Vec<RatFun> {
    let t = RatFun::var(Var::T);
    frobenius_euler_numbers(n_max)
        .into_iter()
        .map(|h| h.substitute(Var::U, &t))
        .collect()
}

/// `Σ_k λ^(n-k) S_1(n,k) H_k(t) (t-1)^k`, with `h_t[k] = H_k(t)`.
pub fn deg_eulerian_poly_frobenius_with(tables: &Tables, h_t: &[RatFun], n: usize) -> RatFun {
    let tm1 = t_minus_1();
    let mut acc = RatFun::zero();
    for (k, h) in h_t.iter().enumerate().take(n + 1) {
        let s = tables.s1(n, k);
        if s == BigInt::ZERO {
            continue;
        }
        let factor = (&tm1.pow(k as u32) * &lambda_pow(n - k)).scale(&int(s));
        acc = &acc + &h.mul_poly(&factor);
    }
    acc
}

/// Coefficient of `t^l` in a polynomial, as a polynomial in the rest.
pub fn coefficient_of_t(p: &MPoly, l: usize) -> MPoly {
    p.coefficients_in(Var::T).into_iter().nth(l).unwrap_or_default()
}

/// `<n,l>_λ = Σ_{k=l}^n <k,l> λ^(n-k) S_1(n,k)`.
pub fn deg_eulerian_number_with(tables: &Tables, n: usize, l: usize) -> MPoly {
    let mut acc = MPoly::zero();
    for k in l..=n {
        let c = tables.eulerian(k, l) * tables.s1(n, k);
        acc += &lambda_pow(n - k).scale(&int(c));
    }
    acc
}

fn range_index(n: i64, l: i64) -> Result<(usize, usize), SequenceError> {
    if n < 0 || l < 0 || l > n {
        return Err(SequenceError::IndexOutOfRange { n, l });
    }
    Ok((n as usize, l as usize))
}

pub fn deg_eulerian_number(n: i64, l: i64) -> Result<MPoly, SequenceError> {
    let (n, l) = range_index(n, l)?;
    Ok(deg_eulerian_number_with(&Tables::covering(n), n, l))
}

/// `<n,l>_λ` as the explicit double sum
/// `Σ_{k=l}^n Σ_{m=0}^{l+1} C(k+1,m) (-1)^m (l+1-m)^k λ^(n-k) S_1(n,k)`.
///
/// The `k = 0` inner sum uses the convention `<0,l> = δ_{0,l}`; the literal
/// sum would give `1 - 0^0 = 0` there.
pub fn deg_eulerian_number_closed_with(tables: &Tables, n: usize, l: usize) -> MPoly {
    let mut acc = MPoly::zero();
    for k in l..=n {
        let inner = if k == 0 {
            BigInt::from(u8::from(l == 0))
        } else {
            let mut s = BigInt::ZERO;
            for m in 0..=(l + 1) {
                let term = binomial(k + 1, m) * BigInt::from(l + 1 - m).pow(k as u32);
                if m % 2 == 0 {
                    s += term;
                } else {
                    s -= term;
                }
            }
            s
        };
        acc += &lambda_pow(n - k).scale(&int(inner * tables.s1(n, k)));
    }
    acc
}

/// `b_{n,λ} = A_{n,λ}(2)`.
pub fn deg_ordered_bell_with(tables: &Tables, n: usize) -> MPoly {
    deg_eulerian_poly_with(tables, n).eval(Var::T, &int(2))
}

pub fn deg_ordered_bell(n: i64) -> Result<MPoly, SequenceError> {
    let n = index(n)?;
    Ok(deg_ordered_bell_with(&Tables::covering(n), n))
}

/// `b_{n,λ} = Σ_l Σ_{k=l}^n <k,l> λ^(n-k) S_1(n,k) 2^l`.
pub fn deg_ordered_bell_double_sum_with(tables: &Tables, n: usize) -> MPoly {
    let mut acc = MPoly::zero();
    for l in 0..=n {
        acc += &deg_eulerian_number_with(tables, n, l).scale(&int(BigInt::from(2).pow(l as u32)));
    }
    acc
}

/// `b_{n,λ} = Σ_k λ^(n-k) S_1(n,k) H_k(2)`, with `h2[k] = H_k(2)`.
pub fn deg_ordered_bell_frobenius_with(tables: &Tables, h2: &[Rational], n: usize) -> MPoly {
    let mut acc = MPoly::zero();
    for (k, h) in h2.iter().enumerate().take(n + 1) {
        acc += &lambda_pow(n - k).scale(&(h * int(tables.s1(n, k))));
    }
    acc
}

/// Series in `t` of `(1+λt)^(x/λ) / (2 - (1+λt)^(1/λ))`, whose
/// coefficients times `n!` are `b_{n,λ}(x)`.
pub fn deg_ordered_bell_poly_egf(order: usize) -> Result<Series, AlgebraError> {
    let base = Series::deg_pow(&MPoly::one(), Var::T, order)?;
    let denom = Series::constant(Var::T, RatFun::int(2), order).sub(&base)?;
    let shift = Series::deg_pow(&MPoly::var(Var::X), Var::T, order)?;
    denom.inv()?.mul(&shift)
}

/// Series in `t` of `1 / (2 - (1+λt)^(1/λ))`.
pub fn deg_ordered_bell_egf(order: usize) -> Result<Series, AlgebraError> {
    let base = Series::deg_pow(&MPoly::one(), Var::T, order)?;
    Series::constant(Var::T, RatFun::int(2), order).sub(&base)?.inv()
}

/// Degenerate ordered Bell polynomial `b_{n,λ}(x)` from its generating
/// function.
pub fn deg_ordered_bell_poly(n: i64) -> Result<MPoly, SequenceError> {
    let n = index(n)?;
    let values = deg_ordered_bell_poly_egf(n)?.egf_values();
    Ok(values[n].as_poly().expect("unit constant term keeps coefficients polynomial").clone())
}

/// `|S_{1,λ}(n,l)|` for `l = 0..=n`: the `x`-coefficients of `<x>_{n,λ}`.
pub fn deg_unsigned_stirling1_row(n: usize) -> Vec<MPoly> {
    let mut row = deg_rising_of(&MPoly::var(Var::X), n).coefficients_in(Var::X);
    row.resize(n + 1, MPoly::zero());
    row
}

pub fn deg_unsigned_stirling1(n: i64, l: i64) -> Result<MPoly, SequenceError> {
    let (n, l) = range_index(n, l)?;
    Ok(deg_unsigned_stirling1_row(n).swap_remove(l))
}

/// `H_0(-q) .. H_{n_max}(-q)`.
pub fn h_at_minus_q_all(n_max: usize) -> Vec<RatFun> {
    let mq = RatFun::from_poly(-MPoly::var(Var::Q));
    frobenius_euler_numbers(n_max)
        .into_iter()
        .map(|h| h.substitute(Var::U, &mq))
        .collect()
}

/// Frobenius–Euler number at `u = -q`; these are the fermionic moments of
/// `x^n`.
pub fn h_at_minus_q(n: i64) -> Result<RatFun, SequenceError> {
    let n = index(n)?;
    Ok(h_at_minus_q_all(n).pop().unwrap())
}

/// `Σ_l |S_{1,λ/(1+q)}(n,l)| H_l(-q)` with `h_mq[l] = H_l(-q)`.
pub fn fermionic_moment_from(h_mq: &[RatFun], n: usize) -> RatFun {
    let scaled = RatFun::new(MPoly::var(Var::Lambda), one_plus_q()).expect("nonzero");
    let mut acc = RatFun::zero();
    for (l, s) in deg_unsigned_stirling1_row(n).into_iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        let s = RatFun::from_poly(s).substitute(Var::Lambda, &scaled);
        acc = &acc + &(&s * &h_mq[l]);
    }
    acc
}

/// The fermionic moment of the degenerate rising factorial
/// `<x>_{n,λ/(1+q)}`.
pub fn fermionic_moment(n: i64) -> Result<RatFun, SequenceError> {
    let n = index(n)?;
    Ok(fermionic_moment_from(&h_at_minus_q_all(n), n))
}

/// `A_{n,λ}(-q)` for a given `A_{n,λ}(t)`.
pub fn at_minus_q(p: &MPoly) -> MPoly {
    p.substitute(Var::T, &-MPoly::var(Var::Q))
}

/// `(-1)^n A_{n,λ}(-q) / (1+q)^n`.
pub fn moment_from_eulerian(a_n: &MPoly, n: usize) -> RatFun {
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    RatFun::new(at_minus_q(a_n).scale(&int(sign)), one_plus_q().pow(n as u32)).expect("nonzero")
}

/// `Σ_k (-1)^k λ^(n-k) (1+q)^k S_1(n,k) H_k(-q)`.
pub fn q_form_with(tables: &Tables, h_mq: &[RatFun], n: usize) -> RatFun {
    let opq = one_plus_q();
    let mut acc = RatFun::zero();
    for (k, h) in h_mq.iter().enumerate().take(n + 1) {
        let s = tables.s1(n, k);
        if s == BigInt::ZERO {
            continue;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let factor = (&opq.pow(k as u32) * &lambda_pow(n - k)).scale(&int(s * sign));
        acc = &acc + &h.mul_poly(&factor);
    }
    acc
}

/// Whether the reduced denominator of `r` divides `(1+q)^n`.
pub fn denominator_divides_one_plus_q_pow(r: &RatFun, n: usize) -> bool {
    one_plus_q().pow(n as u32).div_exact(r.den()).is_ok()
}
