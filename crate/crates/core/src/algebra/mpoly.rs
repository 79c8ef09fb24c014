//! Sparse multivariate polynomials over exact rationals.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Monomial, Rational, Var};

/// A polynomial in the fixed universe `(x, t, λ, u, q)`.
///
/// Terms live in a `BTreeMap` keyed by graded-lex monomial, so the last
/// entry is the leading term. Zero coefficients are never stored, which
/// makes derived equality structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v, 1), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut p = MPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The constant value if the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.leading_term().map(|(_, c)| c)
    }

    /// Coefficient of the monomial `m` (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::ONE)
    }

    pub fn mentions(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn vars(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|&v| self.mentions(v)).collect()
    }

    /// Degree in `v`; `None` for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut result = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Divides by the leading coefficient so the result is monic.
    pub fn monic(&self) -> MPoly {
        match self.leading_coeff() {
            None => MPoly::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Scales to integer coefficients with unit content and a positive
    /// leading coefficient.
    pub fn integer_primitive(&self) -> MPoly {
        if self.is_zero() {
            return MPoly::zero();
        }
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            let v = c.numer() * (&lcm / c.denom());
            g = g.gcd(&v);
        }
        if self.leading_coeff().unwrap().is_negative() {
            g = -g;
        }
        self.scale(&Rational::new(lcm, g))
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `v`;
    /// entry `j` multiplies `v^j`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MPoly> {
        let deg = match self.degree_in(v) {
            None => return Vec::new(),
            Some(d) => d as usize,
        };
        let mut out = vec![MPoly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let j = m.exp(v) as usize;
            out[j].terms.insert(m.with_exp(v, 0), c.clone());
        }
        out
    }

    pub fn from_coefficients_in(v: Var, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero();
        for (j, c) in coeffs.iter().enumerate() {
            let vj = Monomial::var(v, j as u32);
            for (m, a) in &c.terms {
                out.add_term(m.mul(&vj), a.clone());
            }
        }
        out
    }

    /// Leading coefficient with respect to `v` (a polynomial free of `v`).
    pub fn leading_coeff_in(&self, v: Var) -> MPoly {
        self.coefficients_in(v).pop().unwrap_or_default()
    }

    /// Replaces `v` by `value`.
    pub fn substitute(&self, v: Var, value: &MPoly) -> MPoly {
        if !self.mentions(v) {
            return self.clone();
        }
        let coeffs = self.coefficients_in(v);
        let mut acc = MPoly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    pub fn eval(&self, v: Var, value: &Rational) -> MPoly {
        self.substitute(v, &MPoly::constant(value.clone()))
    }

    /// `Σ_j c_j · num^j · den^(d-j)` where `d = deg_v(self)`; that is,
    /// `self(v = num/den) · den^d`. Returns the polynomial and `d`.
    pub fn homogenized_substitute(&self, v: Var, num: &MPoly, den: &MPoly) -> (MPoly, u32) {
        let coeffs = self.coefficients_in(v);
        if coeffs.is_empty() {
            return (MPoly::zero(), 0);
        }
        let d = (coeffs.len() - 1) as u32;
        let mut acc = MPoly::zero();
        let mut den_pow = MPoly::one();
        // Horner from the top: acc_j = acc_{j+1}·num + c_j·den^(d-j)
        for c in coeffs.iter().rev() {
            acc = &(&acc * num) + &(c * &den_pow);
            den_pow = &den_pow * den;
        }
        (acc, d)
    }

    /// Exact multivariate division under the graded-lex order.
    pub fn div_exact(&self, b: &MPoly) -> Result<MPoly, AlgebraError> {
        let (lm_b, lc_b) = b.leading_term().ok_or(AlgebraError::DivisionByZero)?;
        if let Some(c) = b.as_constant() {
            return Ok(self.scale(&c.recip()));
        }
        let lc_b_inv = lc_b.recip();
        let mut r = self.clone();
        let mut q = MPoly::zero();
        while let Some((lm, lc)) = r.leading_term() {
            let m = lm.checked_div(lm_b).ok_or(AlgebraError::NonExactDivision)?;
            let c = lc * &lc_b_inv;
            r -= &b.mul_monomial(&m, &c);
            q.add_term(m, c);
        }
        Ok(q)
    }

    /// Pseudo-remainder of `self` by `b` as univariate polynomials in `v`.
    pub fn pseudo_rem(&self, b: &MPoly, v: Var) -> MPoly {
        let db = b.degree_in(v).unwrap_or(0);
        let lc = b.leading_coeff_in(v);
        let mut r = self.clone();
        while let Some(dr) = r.degree_in(v) {
            if dr < db || r.is_zero() {
                break;
            }
            let lr = r.leading_coeff_in(v);
            let shift = MPoly::term(Monomial::var(v, dr - db), Rational::one());
            r = &(&r * &lc) - &(&(&lr * &shift) * b);
        }
        r
    }
}

/// Exact quotient of `a` by `b`, both viewed as univariate in `var` with
/// polynomial coefficients. Fails with `NonExactDivision` if any remainder
/// term survives.
pub fn poly_div_exact(a: &MPoly, b: &MPoly, var: Var) -> Result<MPoly, AlgebraError> {
    if b.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    let db = b.degree_in(var).unwrap();
    let lb = b.leading_coeff_in(var);
    let mut r = a.clone();
    let mut q = MPoly::zero();
    while let Some(dr) = r.degree_in(var) {
        if dr < db {
            return Err(AlgebraError::NonExactDivision);
        }
        let lr = r.leading_coeff_in(var);
        let c = lr.div_exact(&lb)?;
        let step = &c * &MPoly::term(Monomial::var(var, dr - db), Rational::one());
        r -= &(&step * b);
        q += &step;
    }
    Ok(q)
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let e = acc.entry(ma.mul(mb)).or_insert_with(Rational::zero);
                *e += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MPoly { terms: acc }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: &MPoly) -> MPoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<MPoly> for &MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl From<Var> for MPoly {
    fn from(v: Var) -> Self {
        MPoly::var(v)
    }
}

impl From<i64> for MPoly {
    fn from(c: i64) -> Self {
        MPoly::int(c)
    }
}

impl From<BigInt> for MPoly {
    fn from(c: BigInt) -> Self {
        MPoly::constant(Rational::from_integer(c))
    }
}

impl From<Rational> for MPoly {
    fn from(c: Rational) -> Self {
        MPoly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> MPoly {
        MPoly::var(Var::T)
    }
    fn lam() -> MPoly {
        MPoly::var(Var::Lambda)
    }

    #[test]
    fn zero_is_empty_and_cancellation_removes_terms() {
        let p = &t() - &t();
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        assert_eq!(p, MPoly::zero());
    }

    #[test]
    fn div_t_squared_minus_one() {
        let a = &t().pow(2) - &MPoly::one();
        let b = &t() - &MPoly::one();
        assert_eq!(poly_div_exact(&a, &b, Var::T).unwrap(), &t() + &MPoly::one());
    }

    #[test]
    fn div_product_with_lambda() {
        let tm1 = &t() - &MPoly::one();
        let other = &tm1 - &lam();
        let a = &tm1 * &other;
        assert_eq!(poly_div_exact(&a, &tm1, Var::T).unwrap(), other);
    }

    #[test]
    fn div_with_remainder_fails() {
        let a = t().pow(2);
        let b = &t() - &MPoly::one();
        assert_eq!(
            poly_div_exact(&a, &b, Var::T),
            Err(AlgebraError::NonExactDivision)
        );
        assert_eq!(a.div_exact(&b), Err(AlgebraError::NonExactDivision));
    }

    #[test]
    fn substitute_and_eval() {
        // (t + λ)^2 at t = λ - 1
        let p = (&t() + &lam()).pow(2);
        let s = p.substitute(Var::T, &(&lam() - &MPoly::one()));
        let expect = (&lam().scale(&Rational::from_integer(2.into())) - &MPoly::one()).pow(2);
        assert_eq!(s, expect);
        assert_eq!(
            p.eval(Var::T, &Rational::from_integer(1.into())).eval(Var::Lambda, &Rational::from_integer(2.into())),
            MPoly::int(9)
        );
    }

    #[test]
    fn integer_primitive_normalizes() {
        let p = MPoly::from_terms([
            (Monomial::var(Var::T, 1), Rational::new((-2).into(), 3.into())),
            (Monomial::ONE, Rational::new(4.into(), 9.into())),
        ]);
        // -2/3 t + 4/9  ->  3t - 2
        let expect = &t().scale(&Rational::from_integer(3.into())) - &MPoly::int(2);
        assert_eq!(p.integer_primitive(), expect);
    }

    #[test]
    fn homogenized_substitute_matches_rational_substitution() {
        // p = t^2 + 1 at t = λ/(1+q): (λ^2 + (1+q)^2) and degree 2
        let p = &t().pow(2) + &MPoly::one();
        let den = &MPoly::one() + &MPoly::var(Var::Q);
        let (h, d) = p.homogenized_substitute(Var::T, &lam(), &den);
        assert_eq!(d, 2);
        assert_eq!(h, &lam().pow(2) + &den.pow(2));
    }
}
