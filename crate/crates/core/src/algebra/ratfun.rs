//! Reduced quotients of polynomials.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gcd::gcd;
use super::{AlgebraError, MPoly, Rational, Var};

/// `num / den` with `gcd(num, den) = 1` and `den` monic under graded-lex.
///
/// Because the form is canonical, derived `PartialEq` is mathematical
/// equality; [`RatFun::eq_cross`] is the independent cross-multiplication
/// test.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: MPoly,
    den: MPoly,
}

impl RatFun {
    pub fn new(num: MPoly, den: MPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: MPoly, den: MPoly) -> Self {
        if num.is_zero() {
            return RatFun::zero();
        }
        if let Some(c) = den.as_constant() {
            return RatFun {
                num: num.scale(&c.recip()),
                den: MPoly::one(),
            };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading_coeff().expect("nonzero").clone();
        if lc.is_one() {
            RatFun { num, den }
        } else {
            let inv = lc.recip();
            RatFun {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RatFun {
            num: MPoly::zero(),
            den: MPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(MPoly::one())
    }

    pub fn from_poly(p: MPoly) -> Self {
        RatFun { num: p, den: MPoly::one() }
    }

    pub fn int(c: i64) -> Self {
        Self::from_poly(MPoly::int(c))
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(MPoly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(MPoly::var(v))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    /// The numerator when the denominator is 1.
    pub fn as_poly(&self) -> Option<&MPoly> {
        self.is_poly().then_some(&self.num)
    }

    pub fn into_poly(self) -> Option<MPoly> {
        self.den.is_one().then_some(self.num)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn mentions(&self, v: Var) -> bool {
        self.num.mentions(v) || self.den.mentions(v)
    }

    /// Cross-multiplication equality: `a/b = c/d` iff `a·d = c·b`.
    pub fn eq_cross(&self, other: &RatFun) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn inv(&self) -> Result<RatFun, AlgebraError> {
        if self.num.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &Rational) -> RatFun {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &MPoly) -> RatFun {
        if self.den.is_one() {
            return RatFun::from_poly(&self.num * p);
        }
        Self::reduce(&self.num * p, self.den.clone())
    }

    pub fn pow(&self, e: i32) -> RatFun {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        // powers of a reduced fraction stay reduced
        let e = e as u32;
        RatFun {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Replaces `v` by the rational function `value`.
    pub fn substitute(&self, v: Var, value: &RatFun) -> RatFun {
        if !self.mentions(v) {
            return self.clone();
        }
        if value.is_poly() {
            let n = self.num.substitute(v, &value.num);
            let d = self.den.substitute(v, &value.num);
            return Self::reduce(n, d);
        }
        let (n, dn) = self.num.homogenized_substitute(v, &value.num, &value.den);
        let (d, dd) = self.den.homogenized_substitute(v, &value.num, &value.den);
        // num(a/b)/den(a/b) = (N·b^dd) / (D·b^dn)
        let (n, d) = if dd >= dn {
            (&n * &value.den.pow(dd - dn), d)
        } else {
            (n, &d * &value.den.pow(dn - dd))
        };
        Self::reduce(n, d)
    }

    /// Binds `v` to an exact value; `Pole` if the denominator vanishes.
    pub fn eval(&self, v: Var, value: &Rational) -> Result<RatFun, AlgebraError> {
        if !self.mentions(v) {
            return Ok(self.clone());
        }
        let d = self.den.eval(v, value);
        if d.is_zero() {
            return Err(AlgebraError::Pole);
        }
        Ok(Self::reduce(self.num.eval(v, value), d))
    }

    /// Coefficients in `v` when the denominator is free of `v`.
    pub fn coefficients_in(&self, v: Var) -> Option<Vec<RatFun>> {
        if self.den.mentions(v) {
            return None;
        }
        Some(
            self.num
                .coefficients_in(v)
                .into_iter()
                .map(|c| Self::reduce(c, self.den.clone()))
                .collect(),
        )
    }

    /// Degree in `v` of the numerator, when the denominator is free of `v`.
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        if self.den.mentions(v) {
            None
        } else {
            self.num.degree_in(v)
        }
    }
}

impl Default for RatFun {
    fn default() -> Self {
        RatFun::zero()
    }
}

impl From<MPoly> for RatFun {
    fn from(p: MPoly) -> Self {
        RatFun::from_poly(p)
    }
}

impl From<i64> for RatFun {
    fn from(c: i64) -> Self {
        RatFun::int(c)
    }
}

impl From<Rational> for RatFun {
    fn from(c: Rational) -> Self {
        RatFun::constant(c)
    }
}

impl Add<&RatFun> for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFun::from_poly(&self.num + &rhs.num);
            }
            return RatFun::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = gcd(&self.den, &rhs.den);
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &b) + &(&rhs.num * &a);
        RatFun::reduce(num, &self.den * &b)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub<&RatFun> for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul<&RatFun> for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel first so both partial products stay small
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = rhs.den.div_exact(&g1).unwrap();
        let n2 = rhs.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lc = den.leading_coeff().unwrap().clone();
        if lc.is_one() {
            RatFun { num, den }
        } else {
            let inv = lc.recip();
            RatFun {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }
}

impl Div<&RatFun> for &RatFun {
    type Output = RatFun;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RatFun) -> RatFun {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<RatFun> for RatFun {
            type Output = RatFun;
            fn $f(self, rhs: RatFun) -> RatFun {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $f(self, rhs: &RatFun) -> RatFun {
                (&self).$f(rhs)
            }
        }
        impl $tr<RatFun> for &RatFun {
            type Output = RatFun;
            fn $f(self, rhs: RatFun) -> RatFun {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}
