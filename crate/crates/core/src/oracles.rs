//! Brute-force combinatorial oracles. These enumerate objects directly and
//! share no code with the formula paths they are used to check.

use crate::error::{index, SequenceError};

/// Largest `n` the permutation enumeration accepts (`9! = 362880`).
pub const PERMUTATION_ORACLE_MAX: i64 = 9;

/// Largest `n` the ordered-set-partition enumeration accepts (`n^n` maps).
pub const PARTITION_ORACLE_MAX: i64 = 7;

/// Rearranges `p` into the next permutation in lexicographic order;
/// returns `false` after the last one.
fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn ascents(p: &[usize]) -> usize {
    p.windows(2).filter(|w| w[1] > w[0]).count()
}

/// Number of permutations of `1..=n` with exactly `m` ascents, by
/// enumerating all `n!` permutations.
pub fn eulerian_bruteforce(n: i64, m: i64) -> Result<u64, SequenceError> {
    let nn = index(n)?;
    let mm = index(m)?;
    if n > PERMUTATION_ORACLE_MAX {
        return Err(SequenceError::OracleBoundExceeded { n, max: PERMUTATION_ORACLE_MAX });
    }
    Ok(ascent_histogram(nn).get(mm).copied().unwrap_or(0))
}

/// Counts of permutations of `1..=n` by number of ascents.
pub fn ascent_histogram(n: usize) -> Vec<u64> {
    let mut hist = vec![0u64; n.max(1)];
    let mut p: Vec<usize> = (1..=n).collect();
    loop {
        hist[ascents(&p)] += 1;
        if !next_permutation(&mut p) {
            break;
        }
    }
    hist
}

/// Whether `f` (a map `[n] -> [n]`) is a surjection onto `{0, .., k-1}`
/// for some `k`; returns that `k`.
fn surjection_size(f: &[usize]) -> Option<usize> {
    let n = f.len();
    let mut seen = vec![false; n];
    for &v in f {
        seen[v] = true;
    }
    let k = seen.iter().take_while(|&&s| s).count();
    seen[k..].iter().all(|&s| !s).then_some(k)
}

/// Visits every map `[n] -> [n]`.
fn for_each_map(n: usize, mut visit: impl FnMut(&[usize])) {
    if n == 0 {
        visit(&[]);
        return;
    }
    let mut f = vec![0usize; n];
    loop {
        visit(&f);
        let mut i = 0;
        loop {
            f[i] += 1;
            if f[i] < n {
                break;
            }
            f[i] = 0;
            i += 1;
            if i == n {
                return;
            }
        }
    }
}

/// Ordered set partitions of an `n`-set (Fubini numbers): each one is a
/// surjection onto an initial segment `{0, .., k-1}` of block labels.
pub fn ordered_set_partitions_bruteforce(n: i64) -> Result<u64, SequenceError> {
    let nn = index(n)?;
    if n > PARTITION_ORACLE_MAX {
        return Err(SequenceError::OracleBoundExceeded { n, max: PARTITION_ORACLE_MAX });
    }
    let mut count = 0;
    for_each_map(nn, |f| {
        if surjection_size(f).is_some() {
            count += 1;
        }
    });
    Ok(count)
}

/// Set partitions of an `n`-set into exactly `k` blocks, counted as
/// restricted growth strings.
pub fn set_partitions_bruteforce(n: i64, k: i64) -> Result<u64, SequenceError> {
    let nn = index(n)?;
    let kk = index(k)?;
    if n > PARTITION_ORACLE_MAX {
        return Err(SequenceError::OracleBoundExceeded { n, max: PARTITION_ORACLE_MAX });
    }
    let mut count = 0;
    for_each_map(nn, |f| {
        // restricted growth: f[0] = 0 and f[i] <= 1 + max(f[..i])
        let mut top: Option<usize> = None;
        let ok = f.iter().all(|&v| {
            let fine = match top {
                None => v == 0,
                Some(t) => v <= t + 1,
            };
            top = Some(top.map_or(v, |t| t.max(v)));
            fine
        });
        if ok && top.map_or(0, |t| t + 1) == kk {
            count += 1;
        }
    });
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_element_ascents() {
        // 123:2, 132:1, 213:1, 231:1, 312:1, 321:0
        assert_eq!(ascent_histogram(3), vec![1, 4, 1]);
        assert_eq!(eulerian_bruteforce(3, 1).unwrap(), 4);
        assert_eq!(eulerian_bruteforce(3, 0).unwrap(), 1);
        assert_eq!(eulerian_bruteforce(3, 2).unwrap(), 1);
    }

    #[test]
    fn small_cases() {
        assert_eq!(eulerian_bruteforce(0, 0).unwrap(), 1);
        assert_eq!(eulerian_bruteforce(1, 0).unwrap(), 1);
        assert_eq!(eulerian_bruteforce(2, 2).unwrap(), 0);
        assert_eq!(eulerian_bruteforce(4, 2).unwrap(), 11);
    }

    #[test]
    fn bound_and_sign_errors() {
        assert_eq!(
            eulerian_bruteforce(10, 0),
            Err(SequenceError::OracleBoundExceeded { n: 10, max: 9 })
        );
        assert_eq!(eulerian_bruteforce(-1, 0), Err(SequenceError::NegativeIndex(-1)));
        assert_eq!(eulerian_bruteforce(3, -2), Err(SequenceError::NegativeIndex(-2)));
    }

    #[test]
    fn fubini_numbers() {
        let got: Vec<u64> = (0..=5).map(|n| ordered_set_partitions_bruteforce(n).unwrap()).collect();
        assert_eq!(got, vec![1, 1, 3, 13, 75, 541]);
    }

    #[test]
    fn set_partition_counts() {
        assert_eq!(set_partitions_bruteforce(3, 2).unwrap(), 3);
        assert_eq!(set_partitions_bruteforce(4, 2).unwrap(), 7);
        assert_eq!(set_partitions_bruteforce(0, 0).unwrap(), 1);
        assert_eq!(set_partitions_bruteforce(4, 4).unwrap(), 1);
    }
}
