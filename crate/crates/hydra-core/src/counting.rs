//! Exact closed-form counts: snakes, alive snakes, twin pairs, and lower
//! bounds for longer progressions — all in big integers, so they apply to
//! hydras far beyond any materialization budget.
//!
//! For a prime set `P` with `k = ∏ p`: the hydra has `k` snakes, `∏ (p−1)`
//! of them alive, and — once 2 and 3 are in `P` — exactly `∏_{p>3} (p−2)`
//! pairs of alive snakes at distance 2. Splitting by a new prime `p`
//! multiplies these three counts by `p`, `p−1`, and `p−2` respectively.

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::hydra::{self, Hydra};

/// Snake and pair counts of a hydra, by closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub primes: Vec<u64>,
    /// Total snakes: the primorial of P.
    pub k: BigUint,
    /// Alive snakes: ∏ (p−1).
    pub k1: BigUint,
    /// Twin pairs (distance 2): present iff {2,3} ⊆ P.
    pub k2_twin: Option<BigUint>,
    /// Optional lower bound from [`pair_lower_bound`].
    pub pair_bound: Option<BigUint>,
}

/// ∏ p over the prime list — the hydra's wavelength.
pub fn primorial(primes: &[u64]) -> BigUint {
    primes.iter().map(|&p| BigUint::from(p)).product()
}

/// ∏ (p−1) — the number of alive snakes (Euler's totient of the primorial).
pub fn alive_count(primes: &[u64]) -> BigUint {
    primes.iter().map(|&p| BigUint::from(p - 1)).product()
}

/// ∏_{p ∈ P∖{2,3}} (p−2) — the exact number of alive pairs at distance 2.
/// The closed form anchors on the base pair of H(2,3), so both 2 and 3
/// must be present.
pub fn twin_count(primes: &[u64]) -> Result<BigUint> {
    if !(primes.contains(&2) && primes.contains(&3)) {
        return Err(Error::MissingBase);
    }
    Ok(primes
        .iter()
        .filter(|&&p| p != 2 && p != 3)
        .map(|&p| BigUint::from(p - 2))
        .product())
}

/// `q_j · ∏_{p ∈ P∖Q} (p−j)`: a lower bound on the number of j-tuples of
/// alive snakes, given that the sub-hydra on `Q ⊆ P` already holds `q_j`
/// such tuples. Every factor must stay positive, i.e. each p outside Q must
/// exceed j.
pub fn pair_lower_bound(
    primes: &[u64],
    q: &[u64],
    q_j: &BigUint,
    j: u32,
) -> Result<BigUint> {
    if j < 2 {
        return Err(Error::InvalidArgument("tuple size j must be at least 2"));
    }
    if let Some(&missing) = q.iter().find(|&&x| !primes.contains(&x)) {
        return Err(Error::NotSubset(missing));
    }
    let mut bound = q_j.clone();
    for &p in primes.iter().filter(|&&p| !q.contains(&p)) {
        if p <= j as u64 {
            return Err(Error::NonpositiveFactor { prime: p, j });
        }
        bound *= BigUint::from(p - j as u64);
    }
    Ok(bound)
}

/// The counts of a hydra by closed form; identical for materialized and
/// count-only hydras.
pub fn report(h: &Hydra) -> CountReport {
    report_for_primes(h.primes())
}

/// The counts determined by a prime list alone.
pub fn report_for_primes(primes: &[u64]) -> CountReport {
    CountReport {
        primes: primes.to_vec(),
        k: primorial(primes),
        k1: alive_count(primes),
        k2_twin: twin_count(primes).ok(),
        pair_bound: None,
    }
}

/// Predicts the counts after splitting by `p`: `k·p`, `k1·(p−1)`,
/// `k2·(p−2)`. The prediction is exact — an odd prime can never kill both
/// snakes of a distance-2 pair. A missing twin count starts at its base
/// value as soon as the split completes {2,3}.
pub fn predict_split(counts: &CountReport, p: u64) -> Result<CountReport> {
    if !crate::primes::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if counts.primes.contains(&p) {
        return Err(Error::DuplicatePrime(p));
    }
    let mut primes = counts.primes.clone();
    primes.push(p);
    let k2_twin = match &counts.k2_twin {
        Some(k2) => Some(k2 * (p - 2)),
        None => twin_count(&primes).ok(),
    };
    Ok(CountReport {
        primes,
        k: &counts.k * p,
        k1: &counts.k1 * (p - 1),
        k2_twin,
        pair_bound: None,
    })
}

/// Counts read off a materialized hydra by actually looking: table length,
/// alive scan, and distance-2 pair enumeration (when {2,3} ⊆ P).
pub fn measured_report(h: &Hydra) -> Result<CountReport> {
    let k = BigUint::from(h.k()?);
    let k1 = BigUint::from(h.alive_len()?);
    // {2,3} ⊆ P forces k ≥ 6, so the pair enumeration below is well-defined.
    let has_base = h.primes().contains(&2) && h.primes().contains(&3);
    let k2_twin = if has_base {
        Some(BigUint::from(
            crate::metrics::count_pairs(h, 2)?.len() as u64
        ))
    } else {
        None
    };
    Ok(CountReport {
        primes: h.primes().to_vec(),
        k,
        k1,
        k2_twin,
        pair_bound: None,
    })
}

/// True when the prime set is small enough that [`report`] and
/// [`measured_report`] can be cross-checked under the budget.
pub fn within_budget(primes: &[u64], budget: &hydra::Budget) -> bool {
    primorial(primes) <= BigUint::from(budget.max_snakes)
}
