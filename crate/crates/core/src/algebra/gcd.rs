//! Multivariate polynomial gcd over the rationals.
//!
//! Recursive: univariate images bound the gcd's degree in each variable; a
//! zero bound eliminates that variable by taking the gcd of coefficients.
//! Otherwise split off the content in the lowest-degree variable and run a
//! primitive pseudo-remainder sequence on the primitive parts. Results are
//! monic under the graded-lex order, so the gcd is unique.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{MPoly, Monomial, Rational, Var, NVARS};

pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    if a.num_terms() == 1 || b.num_terms() == 1 {
        return monomial_gcd(a, b);
    }
    if a == b {
        return a.monic();
    }
    // split off monomial content so both sides have no common variable factor
    let (ma, mb) = (monomial_content(a), monomial_content(b));
    if !ma.is_one() || !mb.is_one() {
        let a1 = a.div_exact(&MPoly::term(ma, Rational::one())).expect("monomial content divides");
        let b1 = b.div_exact(&MPoly::term(mb, Rational::one())).expect("monomial content divides");
        let m = MPoly::term(ma.gcd(&mb), Rational::one());
        return (&m * &gcd(&a1, &b1)).monic();
    }
    if let Ok(q) = a.div_exact(b) {
        if !q.is_zero() {
            return b.monic();
        }
    }
    if let Ok(q) = b.div_exact(a) {
        if !q.is_zero() {
            return a.monic();
        }
    }
    for v in Var::ALL {
        match (a.mentions(v), b.mentions(v)) {
            (true, false) => return gcd_with_coefficients(a, b, v),
            (false, true) => return gcd_with_coefficients(b, a, v),
            _ => {}
        }
    }
    // both sides now mention exactly the same variables
    let vars = a.vars();
    let mut best: Option<(Var, u32)> = None;
    for &v in &vars {
        if degree_bound(a, b, v) == 0 {
            // the gcd is free of v, so it divides every v-coefficient of both
            let mut g = content_in(a, v);
            for c in b.coefficients_in(v).iter().filter(|c| !c.is_zero()) {
                if g.is_one() {
                    break;
                }
                g = gcd(&g, c);
            }
            return g;
        }
        let d = a.degree_in(v).unwrap().max(b.degree_in(v).unwrap());
        if best.is_none_or(|(_, bd)| d < bd) {
            best = Some((v, d));
        }
    }
    let var = match best {
        Some((v, _)) => v,
        None => return MPoly::one(),
    };
    let ca = content_in(a, var);
    let cb = content_in(b, var);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = gcd(&ca, &cb);
    let g = primitive_prs(pa, pb, var);
    (&c * &g).monic()
}

fn monomial_content(p: &MPoly) -> Monomial {
    let mut it = p.terms().map(|(m, _)| *m);
    let first = it.next().unwrap_or(Monomial::ONE);
    it.fold(first, |acc, m| acc.gcd(&m))
}

/// Upper bound on `deg_v gcd(a, b)` from univariate images: specialising
/// every other variable at a point where neither leading coefficient in `v`
/// vanishes can only raise the degree of the gcd.
fn degree_bound(a: &MPoly, b: &MPoly, v: Var) -> u32 {
    let da = a.degree_in(v).unwrap_or(0);
    let db = b.degree_in(v).unwrap_or(0);
    for attempt in 0..6i64 {
        let point: [Rational; NVARS] = std::array::from_fn(|i| {
            Rational::from_integer(BigInt::from(3 + 7 * i as i64 + 13 * attempt * (i as i64 + 1)))
        });
        let ua = univariate_image(a, v, &point);
        let ub = univariate_image(b, v, &point);
        if ua.len() as u32 != da + 1 || ub.len() as u32 != db + 1 {
            continue;
        }
        return univariate_gcd_degree(ua, ub);
    }
    da.min(db)
}

/// Coefficients (low to high, trailing zeros trimmed) of `p` with every
/// variable except `v` replaced by `point`.
fn univariate_image(p: &MPoly, v: Var, point: &[Rational; NVARS]) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    for (m, c) in p.terms() {
        let mut val = c.clone();
        for w in Var::ALL {
            if w != v && m.exp(w) > 0 {
                val *= num_traits::pow(point[w.index()].clone(), m.exp(w) as usize);
            }
        }
        let j = m.exp(v) as usize;
        if out.len() <= j {
            out.resize(j + 1, Rational::zero());
        }
        out[j] += val;
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn univariate_gcd_degree(mut a: Vec<Rational>, mut b: Vec<Rational>) -> u32 {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        // a <- a mod b
        let lb = b.last().unwrap().clone();
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let f = a.last().unwrap() / &lb;
            for (i, c) in b.iter().enumerate() {
                a[shift + i] -= &f * c;
            }
            a.pop();
            while a.last().is_some_and(|c| c.is_zero()) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    (a.len().max(1) - 1) as u32
}

/// gcd(a, b) where `b` is free of `var`: b must divide every coefficient.
fn gcd_with_coefficients(a: &MPoly, b: &MPoly, var: Var) -> MPoly {
    let mut g = b.monic();
    for c in a.coefficients_in(var).iter().filter(|c| !c.is_zero()) {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// gcd when at least one side is a single term.
fn monomial_gcd(a: &MPoly, b: &MPoly) -> MPoly {
    let mut m: Option<Monomial> = None;
    for (k, _) in a.terms().chain(b.terms()) {
        m = Some(match m {
            None => *k,
            Some(prev) => prev.gcd(k),
        });
    }
    MPoly::term(m.unwrap_or(Monomial::ONE), Rational::one())
}

/// Gcd of the coefficients of `p` as a polynomial in `var`.
pub fn content_in(p: &MPoly, var: Var) -> MPoly {
    let mut g = MPoly::zero();
    for c in p.coefficients_in(var).iter().filter(|c| !c.is_zero()) {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub fn primitive_part_in(p: &MPoly, var: Var) -> MPoly {
    if p.is_zero() {
        return MPoly::zero();
    }
    let c = content_in(p, var);
    p.div_exact(&c).expect("content divides").integer_primitive()
}

/// `lc_v(b)^(deg_v a - deg_v b + 1) · a mod b`, the classical pseudo-remainder.
fn prem(a: &MPoly, b: &MPoly, var: Var) -> MPoly {
    let da = a.degree_in(var).unwrap_or(0);
    let db = b.degree_in(var).unwrap_or(0);
    let lc = b.leading_coeff_in(var);
    let mut r = a.clone();
    let mut steps = 0;
    while let Some(dr) = r.degree_in(var) {
        if dr < db || r.is_zero() {
            break;
        }
        let lr = r.leading_coeff_in(var);
        let shift = MPoly::term(Monomial::var(var, dr - db), Rational::one());
        r = &(&r * &lc) - &(&(&lr * &shift) * b);
        steps += 1;
    }
    // callers guarantee deg a >= deg b; each step used one factor of lc
    let missing = da + 1 - db - steps;
    if missing > 0 {
        r = &r * &lc.pow(missing);
    }
    r
}

/// Primitive gcd of two primitive polynomials by the subresultant
/// remainder sequence, which keeps coefficient growth polynomial without
/// a content computation at every step.
fn primitive_prs(a: MPoly, b: MPoly, var: Var) -> MPoly {
    let (mut p, mut q) = if a.degree_in(var) >= b.degree_in(var) {
        (a, b)
    } else {
        (b, a)
    };
    if let Ok(quot) = p.div_exact(&q) {
        if !quot.is_zero() {
            return q;
        }
    }
    let mut g = MPoly::one();
    let mut h = MPoly::one();
    loop {
        let d = p.degree_in(var).unwrap_or(0) - q.degree_in(var).unwrap_or(0);
        let r = prem(&p, &q, var);
        if r.is_zero() {
            return primitive_part_in(&q, var);
        }
        if !r.mentions(var) {
            return MPoly::one();
        }
        let divisor = &g * &h.pow(d);
        p = q;
        q = r.div_exact(&divisor).expect("subresultant division is exact");
        g = p.leading_coeff_in(var);
        h = if d == 0 {
            h
        } else {
            g.pow(d).div_exact(&h.pow(d - 1)).expect("subresultant division is exact")
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: Var) -> MPoly {
        MPoly::var(x)
    }

    #[test]
    fn univariate_gcd() {
        let t = v(Var::T);
        let one = MPoly::one();
        let a = (&t - &one).pow(3) * (&t + &one);
        let b = (&t - &one).pow(2) * (&t + &MPoly::int(2));
        assert_eq!(gcd(&a, &b), (&t - &one).pow(2));
    }

    #[test]
    fn multivariate_gcd_with_content() {
        let t = v(Var::T);
        let l = v(Var::Lambda);
        let q = v(Var::Q);
        let common = &(&t - &l) * &(&q + &MPoly::one());
        let a = &common * &(&t + &l.pow(2));
        let b = &common * &(&(&t * &q) - &MPoly::int(3));
        assert_eq!(gcd(&a, &b), common.monic());
    }

    #[test]
    fn coprime_gives_one() {
        let t = v(Var::T);
        let u = v(Var::U);
        assert!(gcd(&(&t + &u), &(&t - &u)).is_one());
    }

    #[test]
    fn gcd_with_zero_is_monic_other() {
        let t = v(Var::T);
        let a = t.scale(&Rational::from_integer(5.into())) - MPoly::int(5);
        assert_eq!(gcd(&a, &MPoly::zero()), &t - &MPoly::one());
    }
}
