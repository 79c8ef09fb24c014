//! The closed variable universe and exponent vectors over it.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// Number of variables in the universe.
pub const NVARS: usize = 5;

/// One of the five symbols every polynomial in this crate is built from.
///
/// The declaration order `x, t, λ, u, q` is the lexicographic tie-break
/// order inside the graded term order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    T,
    Lambda,
    U,
    Q,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::T, Var::Lambda, Var::U, Var::Q];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::T => "t",
            Var::Lambda => "λ",
            Var::U => "u",
            Var::Q => "q",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownVariable(pub String);

impl fmt::Display for UnknownVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown variable `{}`", self.0)
    }
}

impl std::error::Error for UnknownVariable {}

impl FromStr for Var {
    type Err = UnknownVariable;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "x" => Ok(Var::X),
            "t" => Ok(Var::T),
            "λ" | "lambda" | "l" => Ok(Var::Lambda),
            "u" => Ok(Var::U),
            "q" => Ok(Var::Q),
            other => Err(UnknownVariable(other.to_string())),
        }
    }
}

/// Exponent vector over `(x, t, λ, u, q)`, ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var, exp: u32) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = exp;
        Monomial(e)
    }

    #[inline]
    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(Monomial(e))
    }

    pub fn with_exp(&self, v: Var, exp: u32) -> Monomial {
        let mut e = self.0;
        e[v.index()] = exp;
        Monomial(e)
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = (*a).min(*b);
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let x = Monomial::var(Var::X, 1);
        let t2 = Monomial::var(Var::T, 2);
        let lam = Monomial::var(Var::Lambda, 1);
        // total degree dominates
        assert!(t2 > x);
        // ties broken lexicographically with x first
        assert!(x > lam);
        assert!(Monomial::var(Var::T, 1) > lam);
        assert!(Monomial::ONE < lam);
    }

    #[test]
    fn division_of_monomials() {
        let a = Monomial([2, 1, 0, 0, 3]);
        let b = Monomial([1, 1, 0, 0, 1]);
        assert_eq!(a.checked_div(&b), Some(Monomial([1, 0, 0, 0, 2])));
        assert_eq!(b.checked_div(&a), None);
    }

    #[test]
    fn parse_names() {
        assert_eq!("λ".parse::<Var>().unwrap(), Var::Lambda);
        assert_eq!("lambda".parse::<Var>().unwrap(), Var::Lambda);
        assert!("y".parse::<Var>().is_err());
    }
}
