//! Brute-force prime oracles: trial division and a plain sieve of
//! Eratosthenes.
//!
//! Nothing here knows about hydras. The sieve answers list/count queries, the
//! trial-division path answers point queries, and the two are coded
//! independently so that each can serve as ground truth for the other and for
//! every hydra-derived quantity.

use alloc::{vec, vec::Vec};

use crate::error::{Error, Result};

/// Ceiling for sieve-backed oracle calls; beyond this the oracle refuses
/// rather than silently degrading.
pub const ORACLE_LIMIT: u64 = 100_000_000;

/// Primality by trial division over 2, 3, and 6m ± 1 candidates.
pub fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    if x < 4 {
        return true;
    }
    if x % 2 == 0 || x % 3 == 0 {
        return false;
    }
    let mut m = 5u64;
    while m * m <= x {
        if x % m == 0 || x % (m + 2) == 0 {
            return false;
        }
        m += 6;
    }
    true
}

/// Smallest prime strictly greater than `x`.
pub fn next_prime_after(x: u64) -> u64 {
    let mut c = x + 1;
    loop {
        if is_prime(c) {
            return c;
        }
        c += 1;
    }
}

/// Boolean sieve of Eratosthenes; `out[i]` tells whether `i` is prime,
/// for `i ≤ n`.
pub fn sieve_upto(n: u64) -> Result<Vec<bool>> {
    if n > ORACLE_LIMIT {
        return Err(Error::OracleLimit(n));
    }
    let n = n as usize;
    let mut flags = vec![true; n + 1];
    flags[0] = false;
    if n >= 1 {
        flags[1] = false;
    }
    let mut p = 2usize;
    while p * p <= n {
        if flags[p] {
            let mut m = p * p;
            while m <= n {
                flags[m] = false;
                m += p;
            }
        }
        p += 1;
    }
    Ok(flags)
}

/// All primes ≤ n, ascending.
pub fn primes_upto(n: u64) -> Result<Vec<u64>> {
    let flags = sieve_upto(n)?;
    Ok(flags
        .iter()
        .enumerate()
        .filter(|(_, &f)| f)
        .map(|(i, _)| i as u64)
        .collect())
}

/// The first `n` primes in natural order.
pub fn primes_first(n: usize) -> Result<Vec<u64>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    // Upper bound for the nth prime: n (ln n + ln ln n) for n ≥ 6.
    let nf = n as f64;
    let bound = if n < 6 {
        13
    } else {
        // Explicit trait call: inherent f64 math is unavailable without std.
        let ln = |x: f64| num_traits::Float::ln(x);
        (nf * (ln(nf) + ln(ln(nf)))) as u64 + 2
    };
    let mut primes = primes_upto(bound)?;
    primes.truncate(n);
    debug_assert_eq!(primes.len(), n);
    Ok(primes)
}

/// π(n): the number of primes ≤ n.
pub fn prime_count(n: u64) -> Result<usize> {
    Ok(sieve_upto(n)?.iter().filter(|&&f| f).count())
}

/// All prime pairs (p, p + d) with p + d ≤ n; with `consecutive` only pairs
/// with no prime strictly between them.
pub fn gap_pairs_upto(n: u64, d: u64, consecutive: bool) -> Result<Vec<(u64, u64)>> {
    if d < 2 || d % 2 != 0 {
        return Err(Error::InvalidDistance(d));
    }
    if n < 3 {
        return Err(Error::InvalidArgument("gap_pairs_upto needs n >= 3"));
    }
    let flags = sieve_upto(n)?;
    let mut pairs = Vec::new();
    for p in 2..=(n.saturating_sub(d)) {
        let q = p + d;
        if !(flags[p as usize] && flags[q as usize]) {
            continue;
        }
        if consecutive && ((p + 1)..q).any(|m| flags[m as usize]) {
            continue;
        }
        pairs.push((p, q));
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn is_prime_basics() {
        assert!(!is_prime(1));
        assert!(is_prime(2));
        assert!(!is_prime(9));
        assert!(is_prime(97));
        assert!(!is_prime(1_000_000));
    }

    #[test]
    fn next_prime_after_examples() {
        assert_eq!(next_prime_after(0), 2);
        assert_eq!(next_prime_after(3), 5);
        assert_eq!(next_prime_after(7), 11);
    }

    #[test]
    fn primes_first_examples() {
        assert_eq!(primes_first(0).unwrap(), Vec::<u64>::new());
        assert_eq!(primes_first(2).unwrap(), vec![2, 3]);
        assert_eq!(primes_first(4).unwrap(), vec![2, 3, 5, 7]);
    }

    #[test]
    fn prime_count_examples() {
        assert_eq!(prime_count(1).unwrap(), 0);
        assert_eq!(prime_count(10).unwrap(), 4);
        assert_eq!(prime_count(30).unwrap(), 10);
    }

    #[test]
    fn gap_pairs_examples() {
        assert_eq!(
            gap_pairs_upto(20, 2, false).unwrap(),
            vec![(3, 5), (5, 7), (11, 13), (17, 19)]
        );
        assert_eq!(gap_pairs_upto(20, 6, true).unwrap(), vec![]);
        assert_eq!(gap_pairs_upto(40, 6, true).unwrap(), vec![(23, 29), (31, 37)]);
    }

    #[test]
    fn gap_pairs_rejects_odd_distance() {
        assert_eq!(gap_pairs_upto(20, 3, false), Err(Error::InvalidDistance(3)));
    }

    #[test]
    fn oracle_limit_enforced() {
        assert_eq!(
            sieve_upto(ORACLE_LIMIT + 1),
            Err(Error::OracleLimit(ORACLE_LIMIT + 1))
        );
    }

    #[test]
    fn nth_prime_matches_marching_chain() {
        // primes_first against a chain of next_prime_after calls.
        let listed = primes_first(10_000).unwrap();
        let mut p = 0;
        for (i, &expect) in listed.iter().enumerate() {
            p = next_prime_after(p);
            assert_eq!(p, expect, "mismatch at index {i}");
        }
    }

    #[test]
    fn prime_count_matches_trial_division() {
        let mut by_trial = 0usize;
        for n in 1..=100_000u64 {
            if is_prime(n) {
                by_trial += 1;
            }
        }
        assert_eq!(prime_count(100_000).unwrap(), by_trial);
    }

    #[test]
    fn twin_pairs_always_consecutive() {
        assert_eq!(
            gap_pairs_upto(10_000, 2, false).unwrap(),
            gap_pairs_upto(10_000, 2, true).unwrap()
        );
    }
}
