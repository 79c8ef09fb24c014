//! Lossless text rendering of exact values, and the matching parsers.
//!
//! Polynomials print in ascending graded-lex order with explicit `^`
//! powers and no multiplication signs: `1+4t+t^2`, `1-λ`, `3/2xλ^2`.
//! A coefficient, when present, is always the leading rational of its
//! term. Rational functions print as `(num)/(den)` unless the denominator
//! is 1.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{MPoly, Monomial, RatFun, Rational, Var, NVARS};

pub fn render_rational(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn render_monomial(m: &Monomial, out: &mut String) {
    for v in Var::ALL {
        match m.exp(v) {
            0 => {}
            1 => out.push_str(v.name()),
            e => {
                let _ = write!(out, "{}^{e}", v.name());
            }
        }
    }
}

pub fn render_poly(p: &MPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let negative = c.is_negative();
        if negative {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let abs = c.abs();
        if m.is_one() || !abs.is_one() {
            out.push_str(&render_rational(&abs));
        }
        render_monomial(m, &mut out);
    }
    out
}

pub fn render_ratfun(r: &RatFun) -> String {
    if r.is_poly() {
        render_poly(r.num())
    } else {
        format!("({})/({})", render_poly(r.num()), render_poly(r.den()))
    }
}

/// `(exponent vector over (x, t, λ, u, q), coefficient string)` pairs in
/// ascending graded-lex order.
pub fn poly_terms(p: &MPoly) -> Vec<([u32; NVARS], String)> {
    p.terms().map(|(m, c)| (m.0, render_rational(c))).collect()
}

pub fn poly_from_terms(terms: &[([u32; NVARS], String)]) -> Result<MPoly, ParseError> {
    let mut p = MPoly::zero();
    for (e, c) in terms {
        p.add_term(Monomial(*e), parse_rational(c)?);
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character `{found}` at offset {at} in `{input}`")]
    Unexpected { input: String, at: usize, found: char },
    #[error("unexpected end of input in `{0}`")]
    Eof(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src,
            chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn unexpected(&self) -> ParseError {
        match self.chars.get(self.pos) {
            Some(&(at, found)) => ParseError::Unexpected { input: self.src.to_string(), at, found },
            None => ParseError::Eof(self.src.to_string()),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected())
        }
    }

    fn done(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        s.parse().ok()
    }

    fn rational(&mut self) -> Result<Option<Rational>, ParseError> {
        let Some(n) = self.digits() else { return Ok(None) };
        if self.peek() == Some('/') && self.chars.get(self.pos + 1).is_some_and(|(_, c)| c.is_ascii_digit()) {
            self.pos += 1;
            let d = self.digits().ok_or_else(|| self.unexpected())?;
            if d.is_zero() {
                return Err(ParseError::ZeroDenominator(self.src.to_string()));
            }
            return Ok(Some(Rational::new(n, d)));
        }
        Ok(Some(Rational::from_integer(n)))
    }

    fn var(&mut self) -> Option<Var> {
        let v = match self.peek()? {
            'x' => Var::X,
            't' => Var::T,
            'λ' => Var::Lambda,
            'u' => Var::U,
            'q' => Var::Q,
            _ => return None,
        };
        self.pos += 1;
        Some(v)
    }

    fn term(&mut self) -> Result<(Monomial, Rational), ParseError> {
        let coeff = self.rational()?;
        let mut m = Monomial::ONE;
        let mut any_var = false;
        while let Some(v) = self.var() {
            any_var = true;
            let e = if self.peek() == Some('^') {
                self.pos += 1;
                let d = self.digits().ok_or_else(|| self.unexpected())?;
                u32::try_from(d).map_err(|_| self.unexpected())?
            } else {
                1
            };
            m = m.mul(&Monomial::var(v, e));
        }
        if coeff.is_none() && !any_var {
            return Err(self.unexpected());
        }
        Ok((m, coeff.unwrap_or_else(Rational::one)))
    }

    fn poly(&mut self) -> Result<MPoly, ParseError> {
        let mut p = MPoly::zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some('-') => {
                    self.pos += 1;
                    -1
                }
                Some('+') if !first => {
                    self.pos += 1;
                    1
                }
                _ if first => 1,
                _ => break,
            };
            let (m, c) = self.term()?;
            p.add_term(m, if sign < 0 { -c } else { c });
            first = false;
        }
        Ok(p)
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let mut p = Parser::new(s);
    let neg = if p.peek() == Some('-') {
        p.bump();
        true
    } else {
        false
    };
    let r = p.rational()?.ok_or_else(|| p.unexpected())?;
    if !p.done() {
        return Err(p.unexpected());
    }
    Ok(if neg { -r } else { r })
}

pub fn parse_poly(s: &str) -> Result<MPoly, ParseError> {
    let mut p = Parser::new(s);
    let out = p.poly()?;
    if !p.done() {
        return Err(p.unexpected());
    }
    Ok(out)
}

pub fn parse_ratfun(s: &str) -> Result<RatFun, ParseError> {
    let mut p = Parser::new(s);
    if p.peek() == Some('(') {
        p.bump();
        let num = p.poly()?;
        p.expect(')')?;
        p.expect('/')?;
        p.expect('(')?;
        let den = p.poly()?;
        p.expect(')')?;
        if !p.done() {
            return Err(p.unexpected());
        }
        return RatFun::new(num, den).map_err(|_| ParseError::ZeroDenominator(s.to_string()));
    }
    parse_poly(s).map(RatFun::from_poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};
    use proptest::prelude::*;

    fn v(x: Var) -> MPoly {
        MPoly::var(x)
    }

    #[test]
    fn golden_strings() {
        let t = v(Var::T);
        let l = v(Var::Lambda);
        assert_eq!(render_poly(&(&MPoly::one() - &l)), "1-λ");
        let a3 = &(&MPoly::one() + &t.scale(&rat(4))) + &t.pow(2);
        assert_eq!(render_poly(&a3), "1+4t+t^2");
        assert_eq!(render_poly(&(&MPoly::int(3) - &l)), "3-λ");
        assert_eq!(render_poly(&MPoly::zero()), "0");
        assert_eq!(render_poly(&MPoly::int(-7)), "-7");
        let p = (&v(Var::X) * &l.pow(2)).scale(&ratio(-3, 2));
        assert_eq!(render_poly(&p), "-3/2xλ^2");
    }

    #[test]
    fn ratfun_strings() {
        let u = v(Var::U);
        let h2 = RatFun::new(&u + &MPoly::one(), (&u - &MPoly::one()).pow(2)).unwrap();
        assert_eq!(render_ratfun(&h2), "(1+u)/(1-2u+u^2)");
        assert_eq!(parse_ratfun("(1+u)/(1-2u+u^2)").unwrap(), h2);
        assert_eq!(render_rational(&ratio(-3, 6)), "-1/2");
    }

    #[test]
    fn parse_errors() {
        assert!(parse_poly("1+").is_err());
        assert!(parse_poly("2y").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_ratfun("(1)/(0)").is_err());
        assert_eq!(parse_rational("-4/6").unwrap(), ratio(-2, 3));
    }

    fn arb_poly() -> impl Strategy<Value = MPoly> {
        let term = (prop::array::uniform5(0u32..4), -20i64..20, 1i64..6);
        prop::collection::vec(term, 0..8).prop_map(|ts| {
            MPoly::from_terms(ts.into_iter().map(|(e, n, d)| (Monomial(e), ratio(n, d))))
        })
    }

    proptest! {
        #[test]
        fn poly_render_parse_round_trip(p in arb_poly()) {
            prop_assert_eq!(parse_poly(&render_poly(&p)).unwrap(), p.clone());
            prop_assert_eq!(poly_from_terms(&poly_terms(&p)).unwrap(), p);
        }

        #[test]
        fn ratfun_render_parse_round_trip(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let r = RatFun::new(a, b).unwrap();
            prop_assert_eq!(parse_ratfun(&render_ratfun(&r)).unwrap(), r);
        }
    }
}
