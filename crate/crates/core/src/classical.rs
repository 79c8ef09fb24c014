//! Classical (λ = 0) families: Eulerian numbers and polynomials, Stirling
//! numbers of both kinds, Frobenius–Euler numbers and polynomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{poly_div_exact, AlgebraError, MPoly, Monomial, RatFun, Rational, Series, Var};
use crate::error::{index, SequenceError};
use crate::tables::Tables;

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn t_pow(l: usize) -> Monomial {
    Monomial::var(Var::T, l as u32)
}

fn int(c: impl Into<BigInt>) -> Rational {
    Rational::from_integer(c.into())
}

pub(crate) fn t_minus_1() -> MPoly {
    &MPoly::var(Var::T) - &MPoly::one()
}

/// `<n, m>` from the alternating closed form
/// `Σ_{l=0}^{m+1} C(n+1, l) (-1)^l (m+1-l)^n`, valid for `n >= 1`; row 0 is
/// the convention `<0, 0> = 1`.
pub(crate) fn eulerian_closed(n: usize, m: usize) -> BigInt {
    if n == 0 {
        return if m == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let mut acc = BigInt::zero();
    // C(n+1, l) vanishes past l = n+1
    for l in 0..=(m + 1).min(n + 1) {
        let term = binomial(n + 1, l) * BigInt::from(m + 1 - l).pow(n as u32);
        if l % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Eulerian number `<n, m>`: permutations of `1..=n` with exactly `m`
/// ascents, computed from the closed form.
pub fn eulerian_number(n: i64, m: i64) -> Result<BigInt, SequenceError> {
    Ok(eulerian_closed(index(n)?, index(m)?))
}

/// `A_n(t) = Σ_l <n, l> t^l` from the recurrence-built triangle.
pub fn eulerian_poly_with(tables: &Tables, n: usize) -> MPoly {
    MPoly::from_terms(
        tables
            .eulerian
            .row(n)
            .iter()
            .enumerate()
            .map(|(l, c)| (t_pow(l), int(c.clone()))),
    )
}

pub fn eulerian_poly(n: i64) -> Result<MPoly, SequenceError> {
    let n = index(n)?;
    Ok(eulerian_poly_with(&Tables::covering(n), n))
}

/// `A_n(t)` assembled from closed-form coefficients.
pub fn eulerian_poly_closed(n: usize) -> MPoly {
    MPoly::from_terms((0..n.max(1)).map(|l| (t_pow(l), int(eulerian_closed(n, l)))))
}

/// `A_0 .. A_{n_max}` from `A_n = (1/(t-1)) Σ_{l<n} C(n,l) A_l (t-1)^(n-l)`.
/// Every division by `t - 1` must be exact.
pub fn eulerian_poly_recursive(n_max: usize) -> Result<Vec<MPoly>, AlgebraError> {
    let tm1 = t_minus_1();
    let mut out = vec![MPoly::one()];
    for n in 1..=n_max {
        let mut acc = MPoly::zero();
        for (l, a) in out.iter().enumerate() {
            acc += &(a * &tm1.pow((n - l) as u32)).scale(&int(binomial(n, l)));
        }
        out.push(poly_div_exact(&acc, &tm1, Var::T)?);
    }
    Ok(out)
}

/// Series in `x` of `(1-t) / (e^{x(t-1)} - t)` to the given order.
pub fn eulerian_egf(order: usize) -> Result<Series, AlgebraError> {
    let one_minus_t = RatFun::from_poly(-t_minus_1());
    let exponent = Series::variable(Var::X, order).scale(&RatFun::from_poly(t_minus_1()));
    let denom = exponent
        .exp()?
        .sub(&Series::constant(Var::X, RatFun::var(Var::T), order))?;
    Ok(denom.inv()?.scale(&one_minus_t))
}

fn triangle_index(n: i64, k: i64) -> Result<(usize, usize), SequenceError> {
    if n < 0 || k < 0 || k > n {
        return Err(SequenceError::IndexOutOfTriangle { n, k });
    }
    Ok((n as usize, k as usize))
}

/// Signed Stirling number of the first kind `S_1(n, k)`.
pub fn stirling1(n: i64, k: i64) -> Result<BigInt, SequenceError> {
    let (n, k) = triangle_index(n, k)?;
    Ok(Tables::covering(n).s1(n, k))
}

/// Stirling number of the second kind `S_2(n, k)`.
pub fn stirling2(n: i64, k: i64) -> Result<BigInt, SequenceError> {
    let (n, k) = triangle_index(n, k)?;
    Ok(Tables::covering(n).s2(n, k))
}

/// `H_0(u) .. H_{n_max}(u)` from
/// `Σ_{k=0}^n C(n,k) H_k(u) - u H_n(u) = (1-u) δ_{0,n}`.
///
/// Writing `H_k = P_k / (u-1)^k`, the recurrence becomes polynomial:
/// `P_n = Σ_{k<n} C(n,k) P_k (u-1)^(n-1-k)`.
pub fn frobenius_euler_numbers(n_max: usize) -> Vec<RatFun> {
    let um1 = &MPoly::var(Var::U) - &MPoly::one();
    let mut nums: Vec<MPoly> = vec![MPoly::one()];
    for n in 1..=n_max {
        let mut acc = MPoly::zero();
        for (k, p) in nums.iter().enumerate() {
            acc += &(p * &um1.pow((n - 1 - k) as u32)).scale(&int(binomial(n, k)));
        }
        nums.push(acc);
    }
    nums.into_iter()
        .enumerate()
        .map(|(n, p)| RatFun::new(p, um1.pow(n as u32)).expect("nonzero denominator"))
        .collect()
}

/// Frobenius–Euler number `H_n(u)` as a reduced rational function of `u`.
pub fn frobenius_euler_number(n: i64) -> Result<RatFun, SequenceError> {
    let n = index(n)?;
    Ok(frobenius_euler_numbers(n).pop().unwrap())
}

/// `H_n(x|u) = Σ_k C(n,k) H_k(u) x^(n-k)` from precomputed numbers.
pub fn frobenius_euler_poly_from(numbers: &[RatFun], n: usize) -> RatFun {
    let mut acc = RatFun::zero();
    for (k, h) in numbers.iter().enumerate().take(n + 1) {
        let xk = MPoly::term(Monomial::var(Var::X, (n - k) as u32), int(binomial(n, k)));
        acc = &acc + &h.mul_poly(&xk);
    }
    acc
}

/// Frobenius–Euler polynomial `H_n(x|u)`, a rational function whose
/// denominator is free of `x`.
pub fn frobenius_euler_poly(n: i64) -> Result<RatFun, SequenceError> {
    let n = index(n)?;
    Ok(frobenius_euler_poly_from(&frobenius_euler_numbers(n), n))
}

/// Series in `t` of `(1-u)/(e^t - u) · e^{xt}`.
pub fn frobenius_euler_egf(order: usize) -> Result<Series, AlgebraError> {
    let et = Series::variable(Var::T, order).exp()?;
    let denom = et.sub(&Series::constant(Var::T, RatFun::var(Var::U), order))?;
    let one_minus_u = RatFun::from_poly(&MPoly::one() - &MPoly::var(Var::U));
    let ext = Series::variable(Var::T, order).scale(&RatFun::var(Var::X)).exp()?;
    denom.inv()?.scale(&one_minus_u).mul(&ext)
}

/// Frobenius–Euler numbers and polynomials up to a fixed index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusEulerSequence {
    pub numbers: Vec<RatFun>,
    pub polynomials: Vec<RatFun>,
}

impl FrobeniusEulerSequence {
    pub fn up_to(n_max: usize) -> Self {
        let numbers = frobenius_euler_numbers(n_max);
        let polynomials = (0..=n_max).map(|n| frobenius_euler_poly_from(&numbers, n)).collect();
        FrobeniusEulerSequence { numbers, polynomials }
    }
}

/// The binomial `C(x + shift, n)` as a polynomial in `x`.
pub fn binomial_in_x(shift: i64, n: usize) -> MPoly {
    let x = MPoly::var(Var::X);
    let mut acc = MPoly::one();
    for i in 0..n as i64 {
        acc = &acc * &(&x + &MPoly::int(shift - i));
    }
    acc.scale(&Rational::new(BigInt::one(), factorial(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn t() -> MPoly {
        MPoly::var(Var::T)
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(eulerian_number(3, 1).unwrap(), BigInt::from(4));
        assert_eq!(eulerian_number(1, 0).unwrap(), BigInt::from(1));
        assert_eq!(eulerian_number(4, 2).unwrap(), BigInt::from(11));
        assert_eq!(eulerian_number(2, 2).unwrap(), BigInt::from(0));
        assert_eq!(eulerian_number(0, 0).unwrap(), BigInt::from(1));
        assert_eq!(eulerian_number(0, 3).unwrap(), BigInt::from(0));
        assert_eq!(eulerian_number(-1, 0), Err(SequenceError::NegativeIndex(-1)));
        assert_eq!(eulerian_number(2, -1), Err(SequenceError::NegativeIndex(-1)));
    }

    #[test]
    fn eulerian_poly_examples() {
        assert_eq!(eulerian_poly(0).unwrap(), MPoly::one());
        assert_eq!(eulerian_poly(2).unwrap(), &MPoly::one() + &t());
        let a3 = &(&MPoly::one() + &t().scale(&rat(4))) + &t().pow(2);
        assert_eq!(eulerian_poly(3).unwrap(), a3);
        assert_eq!(eulerian_poly(-2), Err(SequenceError::NegativeIndex(-2)));
    }

    #[test]
    fn recursion_reproduces_table() {
        let rec = eulerian_poly_recursive(8).unwrap();
        for (n, p) in rec.iter().enumerate() {
            assert_eq!(p, &eulerian_poly_with(Tables::standard(), n), "n = {n}");
        }
    }

    #[test]
    fn egf_coefficients() {
        let vals = eulerian_egf(3).unwrap().egf_values();
        assert_eq!(vals[2].as_poly().unwrap(), &(&MPoly::one() + &t()));
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling1(2, 1).unwrap(), BigInt::from(-1));
        assert_eq!(stirling1(3, 2).unwrap(), BigInt::from(-3));
        assert_eq!(stirling1(7, 7).unwrap(), BigInt::from(1));
        assert_eq!(stirling2(3, 2).unwrap(), BigInt::from(3));
        assert_eq!(stirling2(4, 2).unwrap(), BigInt::from(7));
        assert_eq!(stirling2(6, 6).unwrap(), BigInt::from(1));
        assert_eq!(stirling1(2, 3), Err(SequenceError::IndexOutOfTriangle { n: 2, k: 3 }));
        assert_eq!(stirling2(-1, 0), Err(SequenceError::IndexOutOfTriangle { n: -1, k: 0 }));
    }

    #[test]
    fn frobenius_euler_examples() {
        let u = MPoly::var(Var::U);
        let um1 = &u - &MPoly::one();
        assert!(frobenius_euler_number(0).unwrap().is_one());
        assert_eq!(frobenius_euler_number(1).unwrap(), RatFun::new(MPoly::one(), um1.clone()).unwrap());
        assert_eq!(
            frobenius_euler_number(2).unwrap(),
            RatFun::new(&u + &MPoly::one(), um1.pow(2)).unwrap()
        );
        let h1x = frobenius_euler_poly(1).unwrap();
        let expect = &RatFun::var(Var::X) + &RatFun::new(MPoly::one(), um1).unwrap();
        assert_eq!(h1x, expect);
        assert!(frobenius_euler_poly(0).unwrap().is_one());
    }

    #[test]
    fn frobenius_euler_poly_is_monic_in_x() {
        let seq = FrobeniusEulerSequence::up_to(6);
        for (n, p) in seq.polynomials.iter().enumerate() {
            let cs = p.coefficients_in(Var::X).unwrap();
            assert_eq!(cs.len(), n + 1);
            assert!(cs[n].is_one());
            assert_eq!(cs[0], seq.numbers[n]);
        }
    }

    #[test]
    fn binomial_poly() {
        // C(x+1, 2) = (x+1)x/2
        let x = MPoly::var(Var::X);
        let expect = (&(&x * &x) + &x).scale(&Rational::new(1.into(), 2.into()));
        assert_eq!(binomial_in_x(1, 2), expect);
        assert_eq!(binomial_in_x(5, 0), MPoly::one());
    }
}
