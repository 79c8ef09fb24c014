//! Integer triangles shared by the classical and degenerate families.
//!
//! A [`Tables`] value is immutable once built. The standard instance is
//! built once per process and shared; callers needing larger indices build
//! their own. Single entries can be overwritten on a copy, which is how
//! the identity catalog's fault-injection tests corrupt a triangle.

use std::borrow::Cow;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Eulerian numbers `<n, m>` built from the recurrence
/// `<n,m> = (n-m)<n-1,m-1> + (m+1)<n-1,m>`.
///
/// Row `n` stores `m = 0 ..= max(0, n-1)`; entries outside read as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianTriangle {
    rows: Vec<Vec<BigInt>>,
}

impl EulerianTriangle {
    pub fn build(n_max: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let get = |m: isize| -> BigInt {
                if m < 0 {
                    return BigInt::zero();
                }
                prev.get(m as usize).cloned().unwrap_or_default()
            };
            // <0,0> = 1 is a convention the recurrence must not feed into row 1
            let row: Vec<BigInt> = if n == 1 {
                vec![BigInt::one()]
            } else {
                (0..n)
                    .map(|m| {
                        let mi = m as isize;
                        get(mi - 1) * (n - m) + get(mi) * (m + 1)
                    })
                    .collect()
            };
            rows.push(row);
        }
        EulerianTriangle { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    pub fn get(&self, n: usize, m: usize) -> BigInt {
        assert!(n <= self.n_max(), "Eulerian triangle built to n = {}, asked for {n}", self.n_max());
        self.rows[n].get(m).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, n: usize, m: usize, value: BigInt) {
        let row = &mut self.rows[n];
        if m >= row.len() {
            row.resize(m + 1, BigInt::zero());
        }
        row[m] = value;
    }
}

/// Signed Stirling numbers of the first kind and Stirling numbers of the
/// second kind, `0 <= k <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingTriangles {
    s1: Vec<Vec<BigInt>>,
    s2: Vec<Vec<BigInt>>,
}

impl StirlingTriangles {
    pub fn build(n_max: usize) -> Self {
        let mut s1 = vec![vec![BigInt::one()]];
        let mut s2 = vec![vec![BigInt::one()]];
        for n in 0..n_max {
            let (p1, p2) = (&s1[n], &s2[n]);
            let at = |row: &Vec<BigInt>, k: usize| row.get(k).cloned().unwrap_or_default();
            let mut r1 = Vec::with_capacity(n + 2);
            let mut r2 = Vec::with_capacity(n + 2);
            for k in 0..=n + 1 {
                let down = if k == 0 { BigInt::zero() } else { at(p1, k - 1) };
                r1.push(down - at(p1, k) * n);
                let down = if k == 0 { BigInt::zero() } else { at(p2, k - 1) };
                r2.push(at(p2, k) * k + down);
            }
            s1.push(r1);
            s2.push(r2);
        }
        StirlingTriangles { s1, s2 }
    }

    pub fn n_max(&self) -> usize {
        self.s1.len() - 1
    }

    pub fn s1(&self, n: usize, k: usize) -> BigInt {
        assert!(n <= self.n_max(), "Stirling triangles built to n = {}, asked for {n}", self.n_max());
        self.s1[n].get(k).cloned().unwrap_or_default()
    }

    pub fn s2(&self, n: usize, k: usize) -> BigInt {
        assert!(n <= self.n_max(), "Stirling triangles built to n = {}, asked for {n}", self.n_max());
        self.s2[n].get(k).cloned().unwrap_or_default()
    }

    pub fn set_s1(&mut self, n: usize, k: usize, value: BigInt) {
        self.s1[n][k] = value;
    }

    pub fn set_s2(&mut self, n: usize, k: usize, value: BigInt) {
        self.s2[n][k] = value;
    }
}

/// The triangles every table-driven formula reads from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tables {
    pub eulerian: EulerianTriangle,
    pub stirling: StirlingTriangles,
}

const STANDARD_N_MAX: usize = 40;

impl Tables {
    pub fn build(n_max: usize) -> Self {
        Tables {
            eulerian: EulerianTriangle::build(n_max),
            stirling: StirlingTriangles::build(n_max),
        }
    }

    /// The shared process-wide instance.
    pub fn standard() -> &'static Tables {
        static STANDARD: OnceLock<Tables> = OnceLock::new();
        STANDARD.get_or_init(|| Tables::build(STANDARD_N_MAX))
    }

    /// The standard instance when it is large enough, else a fresh build.
    pub fn covering(n: usize) -> Cow<'static, Tables> {
        if n <= STANDARD_N_MAX {
            Cow::Borrowed(Tables::standard())
        } else {
            Cow::Owned(Tables::build(n))
        }
    }

    pub fn n_max(&self) -> usize {
        self.eulerian.n_max().min(self.stirling.n_max())
    }

    pub fn eulerian(&self, n: usize, m: usize) -> BigInt {
        self.eulerian.get(n, m)
    }

    pub fn s1(&self, n: usize, k: usize) -> BigInt {
        self.stirling.s1(n, k)
    }

    pub fn s2(&self, n: usize, k: usize) -> BigInt {
        self.stirling.s2(n, k)
    }

    /// Copy with one Stirling-1 entry overwritten.
    pub fn with_stirling1(mut self, n: usize, k: usize, value: BigInt) -> Self {
        self.stirling.set_s1(n, k, value);
        self
    }

    pub fn with_stirling2(mut self, n: usize, k: usize, value: BigInt) -> Self {
        self.stirling.set_s2(n, k, value);
        self
    }

    /// Copy with one Eulerian entry overwritten.
    pub fn with_eulerian(mut self, n: usize, m: usize, value: BigInt) -> Self {
        self.eulerian.set(n, m, value);
        self
    }
}
