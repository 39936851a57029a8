//! Constructive plans: build a natural hydra guaranteed to contain a pair
//! of alive snakes at a chosen even distance (for prime-pair existence) or
//! a pair of *consecutive* alive snakes at a chosen even gap (for
//! consecutive-prime existence), then locate a concrete witness.
//!
//! Each plan has two stages. The *artificial* stage splits by hand-picked
//! primes that force the wanted configuration; the *natural fill* adds the
//! skipped smaller primes so the final hydra equals a natural one. Later
//! splits can only multiply the number of such pairs, never extinguish
//! them, so the witness survives the fill.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hydra::{Budget, Hydra};
use crate::metrics::{self, Pair, PairKind};
use crate::primes;

/// Which construction produced a plan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Pair at distance d, not necessarily adjacent (Maillet/Kronecker).
    Distance,
    /// Consecutive gap Δ by killing all Δ−1 positions with Δ−1 primes.
    GapBrute,
    /// Consecutive gap Δ with Δ/2−1 primes plus prime 2.
    GapEfficient,
}

/// A two-stage split recipe. `artificial` is in split order; the union of
/// both stages is always the first m primes for some m, so the finished
/// hydra equals a natural hydra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionPlan {
    pub artificial: Vec<u64>,
    pub natural_fill: Vec<u64>,
    pub target: u64,
    pub mode: Mode,
}

impl ConstructionPlan {
    /// Full split order: artificial stage first, then the fill.
    pub fn split_order(&self) -> Vec<u64> {
        let mut order = self.artificial.clone();
        order.extend_from_slice(&self.natural_fill);
        order
    }
}

/// A located pair realizing the plan's target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessPair {
    pub low_head: u64,
    pub high_head: u64,
    pub kind: PairKind,
    /// True when every head strictly between the two is dead.
    pub consecutive: bool,
}

fn check_even_distance(d: u64) -> Result<()> {
    if d < 2 || d % 2 != 0 {
        return Err(Error::InvalidDistance(d));
    }
    Ok(())
}

/// Plan for a pair at even distance `d`: split by 2 and by the first odd
/// prime `p_d ≥ d/2 + 1`. In H(2, p_d) the snakes at heads 1 and 2p_d − 1
/// are alive and d ≤ 2p_d − 2 realizes every even distance up to the
/// wavelength's span. The fill is every prime strictly between 2 and p_d.
pub fn maillet_plan(d: u64) -> Result<ConstructionPlan> {
    check_even_distance(d)?;
    let mut p_d = primes::next_prime_after(d / 2);
    if p_d == 2 {
        p_d = primes::next_prime_after(2);
    }
    Ok(ConstructionPlan {
        artificial: [2, p_d].to_vec(),
        natural_fill: primes::primes_upto(p_d - 1)?
            .into_iter()
            .filter(|&p| p != 2)
            .collect(),
        target: d,
        mode: Mode::Distance,
    })
}

/// Executes [`maillet_plan`]: builds the filled natural hydra and returns
/// it with the first pair at distance `d` (ascending by low head).
pub fn maillet_hydra(d: u64, budget: &Budget) -> Result<(Hydra, WitnessPair)> {
    let plan = maillet_plan(d)?;
    let h = Hydra::natural(&plan.split_order(), budget)?;
    let witness = first_pair_witness(&h, d)?;
    Ok((h, witness))
}

/// Plan for a consecutive gap `delta`.
///
/// Brute mode picks the first `delta − 1` primes ≥ delta; their residue
/// combination 0,1,…,delta−2 kills that many adjacent positions, and no
/// pick can reach the two surrounding positions. Efficient mode picks the
/// first `delta/2 − 1` primes > delta − 2 plus prime 2, killing alternate
/// positions and letting prime 2 fill the even ones in between. The fill
/// stage adds all skipped smaller primes. delta = 2 needs no gap-making
/// primes at all; the efficient plan then names H(2, 3), the smallest
/// hydra with two alive snakes at consecutive distance 2.
pub fn polignac_plan(delta: u64, mode: Mode) -> Result<ConstructionPlan> {
    check_even_distance(delta)?;
    match mode {
        Mode::Distance => Err(Error::InvalidArgument(
            "polignac_plan expects a gap mode; use maillet_plan for plain distances",
        )),
        Mode::GapBrute => {
            let gap_makers = first_primes_above(delta as usize - 1, delta - 1);
            let min = gap_makers.first().copied().unwrap_or(2);
            Ok(ConstructionPlan {
                artificial: gap_makers,
                natural_fill: primes::primes_upto(min.saturating_sub(1))?,
                target: delta,
                mode,
            })
        }
        Mode::GapEfficient => {
            if delta == 2 {
                return Ok(ConstructionPlan {
                    artificial: [2, 3].to_vec(),
                    natural_fill: Vec::new(),
                    target: delta,
                    mode,
                });
            }
            let mut artificial = first_primes_above(delta as usize / 2 - 1, delta - 2);
            let min = artificial[0];
            artificial.push(2);
            Ok(ConstructionPlan {
                artificial,
                natural_fill: primes::primes_upto(min - 1)?
                    .into_iter()
                    .filter(|&p| p != 2)
                    .collect(),
                target: delta,
                mode,
            })
        }
    }
}

/// Executes [`polignac_plan`]: builds the filled natural hydra and returns
/// it with the first adjacent alive pair (wrap last) at gap `delta`.
pub fn polignac_hydra(delta: u64, mode: Mode, budget: &Budget) -> Result<(Hydra, WitnessPair)> {
    let plan = polignac_plan(delta, mode)?;
    let h = Hydra::natural(&plan.split_order(), budget)?;
    let witness = first_gap_witness(&h, delta)?;
    Ok((h, witness))
}

/// The first `n` primes strictly greater than `above`, ascending.
fn first_primes_above(n: usize, above: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(n);
    let mut p = above;
    for _ in 0..n {
        p = primes::next_prime_after(p);
        out.push(p);
    }
    out
}

/// First pair at distance `d` in the hydra, as a witness. The plan lemmas
/// guarantee one exists; an empty result signals an implementation bug.
pub fn first_pair_witness(h: &Hydra, d: u64) -> Result<WitnessPair> {
    let pair = *metrics::count_pairs(h, d)?
        .first()
        .ok_or(Error::LemmaViolation("constructed hydra lacks the promised distance pair"))?;
    Ok(WitnessPair {
        low_head: pair.low,
        high_head: pair.high,
        kind: pair.kind,
        consecutive: false,
    })
}

/// First adjacent alive pair at gap `delta`, scanning ascending head order
/// with the wrap-around pair last.
pub fn first_gap_witness(h: &Hydra, delta: u64) -> Result<WitnessPair> {
    let k = h.k()?;
    let alive = h.heads(crate::hydra::Selector::Alive)?;
    if alive.is_empty() {
        return Err(Error::EmptySelection);
    }
    for w in alive.windows(2) {
        if w[1] - w[0] == delta {
            return Ok(WitnessPair {
                low_head: w[0],
                high_head: w[1],
                kind: PairKind::Head,
                consecutive: true,
            });
        }
    }
    let (first, last) = (alive[0], alive[alive.len() - 1]);
    if first + k - last == delta {
        return Ok(WitnessPair {
            low_head: first,
            high_head: last,
            kind: PairKind::Wrapped,
            consecutive: true,
        });
    }
    Err(Error::LemmaViolation("constructed hydra lacks the promised consecutive gap"))
}

/// Locates the smallest pair at distance `d` that falls inside the
/// primality window (1, next_prime²) and confirms both members against the
/// primality oracle — and, for consecutive witnesses, that they are
/// adjacent primes. Returns `None` when no pair fits the window.
pub fn oracle_confirmation(
    h: &Hydra,
    d: u64,
    consecutive: bool,
) -> Result<Option<(u64, u64)>> {
    let bound = h.next_prime()?.saturating_mul(h.next_prime()?);
    let candidate: Option<Pair> = if consecutive {
        let alive = h.heads(crate::hydra::Selector::Alive)?;
        alive
            .windows(2)
            .find(|w| w[1] - w[0] == d && w[0] > 1 && w[1] < bound)
            .map(|w| Pair { low: w[0], high: w[1], kind: PairKind::Head })
    } else {
        metrics::count_pairs(h, d)?
            .into_iter()
            .find(|p| p.low > 1 && p.high < bound && p.high == p.low + d)
    };
    let Some(pair) = candidate else {
        return Ok(None);
    };
    let good = primes::is_prime(pair.low)
        && primes::is_prime(pair.high)
        && (!consecutive || primes::next_prime_after(pair.low) == pair.high);
    if !good {
        return Err(Error::LemmaViolation("window pair failed the prime oracle"));
    }
    Ok(Some((pair.low, pair.high)))
}
