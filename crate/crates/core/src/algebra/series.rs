//! Truncated formal power series in one main variable.
//!
//! A series of order `N` stores the coefficients of `v^0 .. v^N`; every
//! binary operation truncates to the smaller order.

use num_bigint::BigInt;
use num_traits::One;

use super::{AlgebraError, MPoly, Monomial, RatFun, Rational, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    var: Var,
    coeffs: Vec<RatFun>,
}

impl Series {
    /// Builds a series from `order + 1` coefficients. Coefficients must not
    /// mention the main variable.
    pub fn new(var: Var, coeffs: Vec<RatFun>) -> Result<Self, AlgebraError> {
        if coeffs.iter().any(|c| c.mentions(var)) {
            return Err(AlgebraError::CoefficientMentionsMainVariable(var));
        }
        assert!(!coeffs.is_empty(), "a series carries at least one coefficient");
        Ok(Series { var, coeffs })
    }

    pub fn zero(var: Var, order: usize) -> Self {
        Series {
            var,
            coeffs: vec![RatFun::zero(); order + 1],
        }
    }

    pub fn one(var: Var, order: usize) -> Self {
        Self::constant(var, RatFun::one(), order)
    }

    pub fn constant(var: Var, c: RatFun, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = c;
        s
    }

    /// The main variable itself, `v + O(v^(order+1))`.
    pub fn variable(var: Var, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        if order >= 1 {
            s.coeffs[1] = RatFun::one();
        }
        s
    }

    /// Splits a polynomial by powers of `var` and truncates.
    pub fn from_poly(var: Var, p: &MPoly, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        for (j, c) in p.coefficients_in(var).into_iter().enumerate().take(order + 1) {
            s.coeffs[j] = RatFun::from_poly(c);
        }
        s
    }

    pub fn main_var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RatFun] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &RatFun {
        &self.coeffs[j]
    }

    pub fn into_coeffs(self) -> Vec<RatFun> {
        self.coeffs
    }

    /// `j! · [v^j]`, the sequence an exponential generating function encodes.
    pub fn egf_values(&self) -> Vec<RatFun> {
        let mut fact = BigInt::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| {
                if j > 0 {
                    fact *= j;
                }
                c.scale(&Rational::from_integer(fact.clone()))
            })
            .collect()
    }

    /// Builds an exponential generating function from the values `a_j`.
    pub fn from_egf_values(var: Var, values: &[RatFun]) -> Result<Self, AlgebraError> {
        let mut fact = BigInt::one();
        let coeffs = values
            .iter()
            .enumerate()
            .map(|(j, c)| {
                if j > 0 {
                    fact *= j;
                }
                c.scale(&Rational::new(BigInt::one(), fact.clone()))
            })
            .collect();
        Series::new(var, coeffs)
    }

    pub fn truncate(&self, order: usize) -> Series {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        Series { var: self.var, coeffs }
    }

    fn check_var(&self, other: &Series) -> Result<(), AlgebraError> {
        if self.var != other.var {
            Err(AlgebraError::MixedMainVariable(self.var, other.var))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Series) -> Result<Series, AlgebraError> {
        self.check_var(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Series { var: self.var, coeffs })
    }

    pub fn sub(&self, other: &Series) -> Result<Series, AlgebraError> {
        self.check_var(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Series { var: self.var, coeffs })
    }

    pub fn neg(&self) -> Series {
        self.map(|c| -c)
    }

    pub fn scale(&self, c: &RatFun) -> Series {
        self.map(|a| a * c)
    }

    pub fn map<F: FnMut(&RatFun) -> RatFun>(&self, f: F) -> Series {
        Series {
            var: self.var,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Applies a fallible map to every coefficient, e.g. binding a parameter.
    pub fn try_map<F>(&self, f: F) -> Result<Series, AlgebraError>
    where
        F: FnMut(&RatFun) -> Result<RatFun, AlgebraError>,
    {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<_>, _>>()?;
        Series::new(self.var, coeffs)
    }

    /// Substitutes `v ↦ c·v`: coefficient `j` is multiplied by `c^j`.
    pub fn dilate(&self, c: &RatFun) -> Series {
        let mut pow = RatFun::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &pow);
            pow = &pow * c;
        }
        Series { var: self.var, coeffs }
    }

    /// Cauchy product truncated to `min(a.order, b.order)`.
    pub fn mul(&self, other: &Series) -> Result<Series, AlgebraError> {
        self.check_var(other)?;
        let n = self.order().min(other.order());
        let mut coeffs = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let mut acc = RatFun::zero();
            for i in 0..=j {
                let (a, b) = (&self.coeffs[i], &other.coeffs[j - i]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = &acc + &(a * b);
            }
            coeffs.push(acc);
        }
        Ok(Series { var: self.var, coeffs })
    }

    pub fn pow(&self, e: u32) -> Series {
        let mut acc = Series::one(self.var, self.order());
        for _ in 0..e {
            acc = acc.mul(self).expect("same variable");
        }
        acc
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inv(&self) -> Result<Series, AlgebraError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(AlgebraError::NonUnitConstantTerm);
        }
        let inv0 = a0.inv()?;
        let neg_inv0 = -&inv0;
        let n = self.order();
        let mut out: Vec<RatFun> = Vec::with_capacity(n + 1);
        out.push(inv0);
        for j in 1..=n {
            let mut acc = RatFun::zero();
            for i in 1..=j {
                let a = &self.coeffs[i];
                if a.is_zero() || out[j - i].is_zero() {
                    continue;
                }
                acc = &acc + &(a * &out[j - i]);
            }
            out.push(&acc * &neg_inv0);
        }
        Ok(Series { var: self.var, coeffs: out })
    }

    /// `exp(a)` for `a_0 = 0`, via `b' = a'·b`.
    pub fn exp(&self) -> Result<Series, AlgebraError> {
        if !self.coeffs[0].is_zero() {
            return Err(AlgebraError::NonzeroConstantTerm);
        }
        let n = self.order();
        let mut out: Vec<RatFun> = Vec::with_capacity(n + 1);
        out.push(RatFun::one());
        for j in 1..=n {
            let mut acc = RatFun::zero();
            for k in 1..=j {
                let a = &self.coeffs[k];
                if a.is_zero() || out[j - k].is_zero() {
                    continue;
                }
                acc = &acc + &(a * &out[j - k]).scale(&Rational::from_integer(BigInt::from(k)));
            }
            out.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(j))));
        }
        Ok(Series { var: self.var, coeffs: out })
    }

    /// `log(1 + v) = Σ_{j≥1} (-1)^(j-1) v^j / j`, truncated.
    pub fn log1p(var: Var, order: usize) -> Series {
        let mut s = Series::zero(var, order);
        for j in 1..=order {
            let sign = if j % 2 == 1 { 1 } else { -1 };
            s.coeffs[j] = RatFun::constant(Rational::new(BigInt::from(sign), BigInt::from(j)));
        }
        s
    }

    /// `(1 + λv)^(α/λ) = Σ_m (α)_{m,λ} v^m / m!`, with `(α)_{m,λ}` the
    /// degenerate falling factorial.
    pub fn deg_pow(alpha: &MPoly, var: Var, order: usize) -> Result<Series, AlgebraError> {
        if alpha.mentions(var) {
            return Err(AlgebraError::CoefficientMentionsMainVariable(var));
        }
        let lam = MPoly::var(Var::Lambda);
        let mut s = Series::zero(var, order);
        let mut falling = MPoly::one();
        let mut fact = BigInt::one();
        for m in 0..=order {
            if m > 0 {
                let shift = lam.scale(&Rational::from_integer(BigInt::from(m - 1)));
                falling = &falling * &(alpha - &shift);
                fact *= m;
            }
            s.coeffs[m] = RatFun::from_poly(falling.scale(&Rational::new(BigInt::one(), fact.clone())));
        }
        Ok(s)
    }

    /// Collapses the series back to a polynomial in the main variable.
    /// Fails if a coefficient is not a polynomial.
    pub fn to_poly(&self) -> Option<MPoly> {
        let mut out = MPoly::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            let p = c.as_poly()?;
            out += &p.mul_monomial(&Monomial::var(self.var, j as u32), &Rational::one());
        }
        Some(out)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RatFun::is_zero)
    }
}

/// Free-function forms matching the operation names used elsewhere.
pub fn series_mul(a: &Series, b: &Series) -> Result<Series, AlgebraError> {
    a.mul(b)
}

pub fn series_inv(a: &Series) -> Result<Series, AlgebraError> {
    a.inv()
}

pub fn series_exp(a: &Series) -> Result<Series, AlgebraError> {
    a.exp()
}

/// `log(1+v)` in the main variable `var`; `log(1+λx)` is
/// `series_log1p_scaled(x, N).dilate(λ)`.
pub fn series_log1p_scaled(var: Var, order: usize) -> Series {
    Series::log1p(var, order)
}

pub fn series_deg_pow(alpha: &MPoly, var: Var, order: usize) -> Result<Series, AlgebraError> {
    Series::deg_pow(alpha, var, order)
}
