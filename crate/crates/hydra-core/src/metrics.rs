//! Distances, gaps, pair counting, and density measures over a hydra's
//! alive snakes.
//!
//! Two snakes with heads `h₁ < h₂` are at *head distance* `h₂ − h₁` and at
//! *wrapped distance* `(h₁ + k) − h₂`; the two always sum to `k`. Pairs at
//! either distance model prime pairs with that gap, and adjacent alive heads
//! (the wheel's spoke gaps) model consecutive primes.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::hydra::{Budget, Hydra};

/// One consecutive alive-head gap, labeled `destination-source` by
/// recursive index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapEntry {
    pub label: String,
    pub value: u64,
}

/// Consecutive distances between alive heads in view, in ascending head
/// order, closed by the wrap-around gap from the last head back to the
/// first. The values sum to `k`. A lone alive snake yields its self-gap `k`.
pub fn wheeldiff(h: &Hydra) -> Result<Vec<GapEntry>> {
    let k = h.k()?;
    let alive: Vec<u64> = h.heads(crate::hydra::Selector::Alive)?;
    if alive.is_empty() {
        return Err(Error::EmptySelection);
    }
    let label = |to: u64, from: u64| format!("{}-{}", h.index_display(to), h.index_display(from));
    let mut out = Vec::with_capacity(alive.len());
    for w in alive.windows(2) {
        out.push(GapEntry {
            label: label(w[1], w[0]),
            value: w[1] - w[0],
        });
    }
    let (first, last) = (alive[0], alive[alive.len() - 1]);
    out.push(GapEntry {
        label: label(first, last),
        value: first + k - last,
    });
    Ok(out)
}

/// Histogram of [`wheeldiff`] values: gap size → occurrence count.
pub fn gap_histogram(h: &Hydra) -> Result<BTreeMap<u64, u64>> {
    let mut hist = BTreeMap::new();
    for entry in wheeldiff(h)? {
        *hist.entry(entry.value).or_insert(0) += 1;
    }
    Ok(hist)
}

/// Full pairwise distance matrix over the alive snakes in view: head
/// distances in the lower triangle, wrapped distances in the upper.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    pub labels: Vec<String>,
    pub matrix: Vec<Vec<u64>>,
}

/// `matrix[i][j] = (hᵢ + k − hⱼ) mod k`, so `matrix[i][j] + matrix[j][i] = k`
/// off the diagonal. Quadratic in the alive count, hence budget-guarded.
pub fn wheeldist(h: &Hydra, budget: &Budget) -> Result<DistanceTable> {
    let k = h.k()?;
    let alive: Vec<u64> = h.heads(crate::hydra::Selector::Alive)?;
    if alive.is_empty() {
        return Err(Error::EmptySelection);
    }
    let m = alive.len() as u64;
    if m.saturating_mul(m) > budget.max_snakes {
        return Err(Error::BudgetExceeded {
            required: BigUint::from(m) * BigUint::from(m),
            max_snakes: budget.max_snakes,
        });
    }
    let labels = alive.iter().map(|&a| h.index_display(a)).collect();
    let matrix = alive
        .iter()
        .map(|&hi| alive.iter().map(|&hj| (hi + k - hj) % k).collect())
        .collect();
    Ok(DistanceTable { labels, matrix })
}

/// Which distance matched for a pair of snakes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    /// The head distance equals the requested d.
    Head,
    /// The wrapped distance equals the requested d.
    Wrapped,
    /// Both distances equal d at once — possible only when `k = 2d`.
    Both,
}

/// An unordered pair of alive snakes identified by its two heads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pair {
    pub low: u64,
    pub high: u64,
    pub kind: PairKind,
}

/// All unordered pairs of alive snakes in view whose head distance or
/// wrapped distance equals `d`, ascending by low head (head-kind first on
/// ties). Each pair is counted once even when both distances match.
///
/// `d` must be even and, for `k > 2`, satisfy `2 ≤ d < k`. At wavelength 1
/// or 2 every even distance stays inside the single alive snake, reported
/// as the degenerate self-pair.
pub fn count_pairs(h: &Hydra, d: u64) -> Result<Vec<Pair>> {
    let k = h.k()?;
    if d < 2 || d % 2 != 0 || (k > 2 && d >= k) {
        return Err(Error::InvalidDistance(d));
    }
    let bits = h.selected_alive_bitmap()?;
    if k <= 2 {
        return Ok(bits
            .iter()
            .enumerate()
            .skip(1)
            .filter(|&(_, &alive)| alive)
            .map(|(head, _)| Pair {
                low: head as u64,
                high: head as u64,
                kind: PairKind::Wrapped,
            })
            .collect());
    }
    let both = k == 2 * d;
    let mut out = Vec::new();
    for h1 in 1..=k {
        if !bits[h1 as usize] {
            continue;
        }
        if h1 + d <= k && bits[(h1 + d) as usize] {
            out.push(Pair {
                low: h1,
                high: h1 + d,
                kind: if both { PairKind::Both } else { PairKind::Head },
            });
        }
        if !both && h1 <= d {
            let h2 = h1 + k - d;
            if bits[h2 as usize] {
                out.push(Pair {
                    low: h1,
                    high: h2,
                    kind: PairKind::Wrapped,
                });
            }
        }
    }
    Ok(out)
}

/// Number of adjacent alive-head gaps (wrap included) equal to `delta`;
/// the [`gap_histogram`] entry at `delta`, or 0 when absent.
pub fn count_consecutive_pairs(h: &Hydra, delta: u64) -> Result<u64> {
    if delta < 2 || delta % 2 != 0 {
        return Err(Error::InvalidDistance(delta));
    }
    Ok(gap_histogram(h)?.get(&delta).copied().unwrap_or(0))
}

/// Exact density products of a hydra next to smooth reference values at a
/// chosen point `n`. The rationals are exact; the references are reported,
/// never asserted against.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityReport {
    pub primes: Vec<u64>,
    pub n: u64,
    /// ∏ (p−1)/p over the odd primes of P: twice the alive-head density.
    pub prime_density: BigRational,
    /// ∏ (p−2)/(p−1) over the odd primes of P: twin pairs relative to
    /// alive snakes.
    pub twin_relative: BigRational,
    /// ∏ (p−2)/p over the odd primes of P: twice-squared twin density scale.
    pub twin_density: BigRational,
    /// 2 / ln n.
    pub ref_prime: f64,
    /// 4 / ln² n.
    pub ref_twin: f64,
    /// ln k = Σ ln p.
    pub p_hat: f64,
    /// k^(1/max P) — the wavelength's average growth rate per prime step.
    pub e_hat: f64,
}

/// Requires `2 ∈ P` (the products run over the odd primes) and `n ≥ 3`.
/// Works on count-only hydras: only the prime list is consulted.
pub fn density_report(h: &Hydra, n: u64) -> Result<DensityReport> {
    let primes = h.primes();
    if !primes.contains(&2) {
        return Err(Error::MissingBase);
    }
    if n < 3 {
        return Err(Error::InvalidArgument("density reference point must be >= 3"));
    }
    let ratio = |num: u64, den: u64| BigRational::new(BigInt::from(num), BigInt::from(den));
    let mut prime_density = BigRational::one();
    let mut twin_relative = BigRational::one();
    let mut twin_density = BigRational::one();
    for &p in primes.iter().filter(|&&p| p != 2) {
        prime_density *= ratio(p - 1, p);
        twin_relative *= ratio(p - 2, p - 1);
        twin_density *= ratio(p - 2, p);
    }
    // Explicit trait calls: inherent f64 math is unavailable without std.
    let ln = |x: f64| num_traits::Float::ln(x);
    let ln_n = ln(n as f64);
    let p_hat: f64 = primes.iter().map(|&p| ln(p as f64)).sum();
    let max_p = primes.iter().copied().max().unwrap_or(2);
    Ok(DensityReport {
        primes: primes.to_vec(),
        n,
        prime_density,
        twin_relative,
        twin_density,
        ref_prime: 2.0 / ln_n,
        ref_twin: 4.0 / (ln_n * ln_n),
        p_hat,
        e_hat: num_traits::Float::exp(p_hat / max_p as f64),
    })
}
