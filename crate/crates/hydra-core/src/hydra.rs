//! The hydra: a partition of the positive integers into `k = ∏ p` arithmetic
//! progressions ("snakes"), refined one prime at a time.
//!
//! Splitting by a prime `p` turns every snake `s(h, k)` into the `p` snakes
//! `s(h + i·k, p·k)`; a descendant stays alive exactly when its ancestor was
//! alive and its head is not divisible by `p`. The alive snakes of a hydra
//! are the residue classes coprime to the wavelength — the spokes of a
//! factorization wheel.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::primes;

/// Cap on materialized snake tables. Hydras whose wavelength exceeds the
/// budget can still exist as count-only objects (primes plus wavelength).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_snakes: u64,
}

impl Budget {
    pub const fn new(max_snakes: u64) -> Self {
        Budget { max_snakes }
    }

    /// Snake tables are u32-indexed; the effective ceiling respects that.
    fn cap(&self) -> u64 {
        self.max_snakes.min(u32::MAX as u64)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_snakes: 1 << 24 }
    }
}

/// One arithmetic progression `h, h + k, h + 2k, …` out of a partition with
/// shared wavelength `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Snake {
    pub head: u64,
    pub alive: bool,
}

impl Snake {
    /// Smallest member greater than 1. The head itself, except for the snake
    /// with head 1 whose first candidate is `1 + k`.
    pub fn first_candidate(&self, k: u64) -> u64 {
        if self.head == 1 {
            1 + k
        } else {
            self.head
        }
    }
}

/// Which snakes an operation should see.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selector {
    /// Alive snakes only (the default almost everywhere).
    Alive,
    /// Every snake, dead ones included.
    All,
    /// Alive snakes that belong to at least one pair at distance 2
    /// (head or wrapped).
    Twins,
}

/// A hydra: ordered prime list `P` (split order), wavelength `k = ∏ p`, and —
/// when within budget — the full snake table with heads `1 ..= k` ascending.
///
/// A hydra may additionally carry a *selection*: a subscript view onto a
/// subset of its snakes. Metrics and rendering respect the selection while
/// the wavelength and the underlying table stay those of the full hydra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hydra {
    primes: Vec<u64>,
    wavelength: BigUint,
    table: Option<Vec<Snake>>,
    selection: Option<Vec<u32>>,
}

/// Iterator over the snakes an operation should see (selection-aware).
pub struct Selected<'a> {
    table: &'a [Snake],
    selection: Option<&'a [u32]>,
    pos: usize,
}

impl<'a> Iterator for Selected<'a> {
    type Item = Snake;

    fn next(&mut self) -> Option<Snake> {
        let item = match self.selection {
            Some(ids) => ids.get(self.pos).map(|&i| self.table[i as usize]),
            None => self.table.get(self.pos).copied(),
        };
        self.pos += 1;
        item
    }
}

/// Checks that the entries are pairwise distinct primes.
pub fn validate_primes(primes: &[u64]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &p in primes {
        if !primes::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !seen.insert(p) {
            return Err(Error::DuplicatePrime(p));
        }
    }
    Ok(())
}

impl Hydra {
    /// The root hydra: no primes, wavelength 1, the single alive snake
    /// `s(1, 1)` containing every positive integer.
    pub fn root() -> Hydra {
        Hydra {
            primes: Vec::new(),
            wavelength: BigUint::from(1u32),
            table: Some(vec![Snake { head: 1, alive: true }]),
            selection: None,
        }
    }

    /// A hydra that exists only as primes plus wavelength — no snake table.
    /// Counting formulas still apply to it.
    pub fn count_only(primes: &[u64]) -> Result<Hydra> {
        validate_primes(primes)?;
        Ok(Hydra {
            primes: primes.to_vec(),
            wavelength: primes.iter().map(|&p| BigUint::from(p)).product(),
            table: None,
            selection: None,
        })
    }

    /// Splits the root hydra by the given primes in the given order.
    pub fn natural(primes: &[u64], budget: &Budget) -> Result<Hydra> {
        validate_primes(primes)?;
        let required: BigUint = primes.iter().map(|&p| BigUint::from(p)).product();
        if required > BigUint::from(budget.cap()) {
            return Err(Error::BudgetExceeded {
                required,
                max_snakes: budget.max_snakes,
            });
        }
        let mut h = Hydra::root();
        for &p in primes {
            h = h.split(p, budget)?;
        }
        Ok(h)
    }

    /// Splits the root hydra by the first `n` primes.
    pub fn natural_first(n: usize, budget: &Budget) -> Result<Hydra> {
        Hydra::natural(&primes::primes_first(n)?, budget)
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn wavelength(&self) -> &BigUint {
        &self.wavelength
    }

    pub fn is_materialized(&self) -> bool {
        self.table.is_some()
    }

    pub fn is_selection(&self) -> bool {
        self.selection.is_some()
    }

    /// Wavelength as a machine word; available exactly when materialized.
    pub fn k(&self) -> Result<u64> {
        match &self.table {
            Some(t) => Ok(t.len() as u64),
            None => Err(Error::NotMaterialized),
        }
    }

    /// The full snake table, heads `1 ..= k` ascending.
    pub fn snakes(&self) -> Result<&[Snake]> {
        self.table.as_deref().ok_or(Error::NotMaterialized)
    }

    /// Iterator over the snakes in view: the selection if one is present,
    /// otherwise the whole table. Always ascending by head.
    pub fn selected(&self) -> Result<Selected<'_>> {
        Ok(Selected {
            table: self.snakes()?,
            selection: self.selection.as_deref(),
            pos: 0,
        })
    }

    /// Number of alive snakes in the full table (`k1`), selection ignored.
    pub fn alive_len(&self) -> Result<u64> {
        Ok(self.snakes()?.iter().filter(|s| s.alive).count() as u64)
    }

    /// Splits every snake by a new prime `p`. Each old snake `s(h, k)` yields
    /// the `p` snakes with heads `h, h + k, …, h + (p−1)·k`; a new snake is
    /// alive iff its ancestor was alive and `p` does not divide its head.
    ///
    /// The output is produced directly in ascending head order — the outer
    /// loop walks the `p` offsets, the inner loop the old table — so no sort
    /// step exists. Any selection on `self` does not carry over.
    pub fn split(&self, p: u64, budget: &Budget) -> Result<Hydra> {
        if !primes::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if self.primes.contains(&p) {
            return Err(Error::DuplicatePrime(p));
        }
        let old = self.snakes()?;
        let k = old.len() as u64;
        let required = k as u128 * p as u128;
        if required > budget.cap() as u128 {
            return Err(Error::BudgetExceeded {
                required: BigUint::from(required),
                max_snakes: budget.max_snakes,
            });
        }
        let mut snakes = Vec::with_capacity(required as usize);
        for i in 0..p {
            let base = i * k;
            for s in old {
                let head = base + s.head;
                snakes.push(Snake {
                    head,
                    alive: s.alive && head % p != 0,
                });
            }
        }
        let mut primes_out = self.primes.clone();
        primes_out.push(p);
        Ok(Hydra {
            primes: primes_out,
            wavelength: &self.wavelength * p,
            table: Some(snakes),
            selection: None,
        })
    }

    /// One step of the hydra recursion: determine the next prime and split
    /// by it.
    pub fn recurse(&self, budget: &Budget) -> Result<Hydra> {
        let p = self.next_prime()?;
        self.split(p, budget)
    }

    /// The minimum first candidate over all alive snakes. For the root this
    /// is 2; for every natural hydra it is the smallest prime not in `P`.
    pub fn next_prime(&self) -> Result<u64> {
        let k = self.k()?;
        self.snakes()?
            .iter()
            .filter(|s| s.alive)
            .map(|s| s.first_candidate(k))
            .min()
            .ok_or(Error::EmptySelection)
    }

    /// Heads in view, ascending, filtered by the selector.
    pub fn heads(&self, selector: Selector) -> Result<Vec<u64>> {
        match selector {
            Selector::All => Ok(self.selected()?.map(|s| s.head).collect()),
            Selector::Alive => Ok(self
                .selected()?
                .filter(|s| s.alive)
                .map(|s| s.head)
                .collect()),
            Selector::Twins => {
                let members: BTreeSet<u64> = crate::metrics::count_pairs(self, 2)?
                    .iter()
                    .flat_map(|pair| [pair.low, pair.high])
                    .collect();
                Ok(members.into_iter().collect())
            }
        }
    }

    /// `(recursive index, first candidate)` for every alive snake in view,
    /// ascending by candidate. The first entry is the next prime.
    pub fn first_candidates(&self) -> Result<Vec<(String, u64)>> {
        let k = self.k()?;
        let mut out: Vec<(String, u64)> = self
            .selected()?
            .filter(|s| s.alive)
            .map(|s| (self.index_of(s.head), s.first_candidate(k)))
            .collect();
        out.sort_unstable_by_key(|&(_, c)| c);
        Ok(out)
    }

    /// Recursive index of a head: the remainders `head mod p` in split order,
    /// dot-joined. Zero components mark the prime that killed the snake. The
    /// root's single snake has the empty index.
    pub fn index_of(&self, head: u64) -> String {
        let mut parts = Vec::with_capacity(self.primes.len());
        for &p in &self.primes {
            parts.push((head % p).to_string());
        }
        parts.join(".")
    }

    /// Like [`index_of`](Self::index_of) but with the root's empty index
    /// shown as `1`, matching how `s(1, 1)` is written.
    pub fn index_display(&self, head: u64) -> String {
        let s = self.index_of(head);
        if s.is_empty() {
            "1".to_string()
        } else {
            s
        }
    }

    /// Sub-hydra view of the snakes whose recursive index starts with any of
    /// the given dot-joined prefixes (component-wise match). Applied to a
    /// view, it narrows the existing selection.
    pub fn subscript(&self, prefixes: &[&str]) -> Result<Hydra> {
        let parsed: Vec<Vec<u64>> = prefixes
            .iter()
            .map(|s| parse_index(s))
            .collect::<Result<_>>()?;
        let table = self.snakes()?;
        let mut picked: Vec<u32> = Vec::new();
        let positions: Vec<u32> = match &self.selection {
            Some(ids) => ids.clone(),
            None => (0..table.len() as u32).collect(),
        };
        for pos in positions {
            let head = table[pos as usize].head;
            let matches = parsed.iter().any(|prefix| {
                prefix.len() <= self.primes.len()
                    && prefix
                        .iter()
                        .zip(&self.primes)
                        .all(|(&c, &p)| head % p == c)
            });
            if matches {
                picked.push(pos);
            }
        }
        if picked.is_empty() {
            return Err(Error::EmptySelection);
        }
        Ok(Hydra {
            primes: self.primes.clone(),
            wavelength: self.wavelength.clone(),
            table: self.table.clone(),
            selection: Some(picked),
        })
    }

    /// The dot-joined prefixes are not stored; for serialization the selected
    /// snakes' full indices stand in.
    pub fn selection_indices(&self) -> Option<Vec<String>> {
        let (table, ids) = match (&self.table, &self.selection) {
            (Some(t), Some(ids)) => (t, ids),
            _ => return None,
        };
        Some(
            ids.iter()
                .map(|&i| self.index_of(table[i as usize].head))
                .collect(),
        )
    }

    /// True iff the prime *set* equals the first `|P|` primes; split order
    /// does not matter.
    pub fn is_natural(&self) -> bool {
        let mut sorted = self.primes.clone();
        sorted.sort_unstable();
        let mut expect = 0u64;
        for &p in &sorted {
            expect = primes::next_prime_after(expect);
            if p != expect {
                return false;
            }
        }
        true
    }

    /// Hydra equality: the same prime set, regardless of split order.
    pub fn equals(&self, other: &Hydra) -> bool {
        let a: BTreeSet<u64> = self.primes.iter().copied().collect();
        let b: BTreeSet<u64> = other.primes.iter().copied().collect();
        a == b
    }

    /// The unique snake containing `n ≥ 1`: head `((n − 1) mod k) + 1`.
    pub fn snake_of(&self, n: u64) -> Result<Snake> {
        if n == 0 {
            return Err(Error::InvalidArgument("snake_of needs n >= 1"));
        }
        let k = self.k()?;
        let head = ((n - 1) % k) + 1;
        Ok(self.snakes()?[(head - 1) as usize])
    }

    /// `out[h]` is true iff head `h` is alive *and in view*; index 0 unused.
    pub fn selected_alive_bitmap(&self) -> Result<Vec<bool>> {
        let k = self.k()?;
        let mut bits = vec![false; (k + 1) as usize];
        for s in self.selected()? {
            if s.alive {
                bits[s.head as usize] = true;
            }
        }
        Ok(bits)
    }

    /// Rebuilds a hydra from parts (deserialization); validates the table
    /// shape, the aliveness rule, and the selection indices.
    pub fn from_parts(
        primes_in: Vec<u64>,
        table: Option<Vec<Snake>>,
        selection: Option<Vec<u32>>,
    ) -> Result<Hydra> {
        validate_primes(&primes_in)?;
        let wavelength: BigUint = primes_in.iter().map(|&p| BigUint::from(p)).product();
        if let Some(snakes) = &table {
            if BigUint::from(snakes.len() as u64) != wavelength {
                return Err(Error::InvalidArgument("snake table length must equal k"));
            }
            for (i, s) in snakes.iter().enumerate() {
                if s.head != i as u64 + 1 {
                    return Err(Error::InvalidArgument("snake heads must be 1..=k ascending"));
                }
                let expect = primes_in.iter().all(|&p| s.head % p != 0);
                if s.alive != expect {
                    return Err(Error::InvalidArgument("alive flag contradicts the prime set"));
                }
            }
            if let Some(ids) = &selection {
                let len = snakes.len() as u32;
                let mut prev: Option<u32> = None;
                for &i in ids {
                    if i >= len || prev.is_some_and(|p| p >= i) {
                        return Err(Error::InvalidArgument(
                            "selection must be ascending indices into the table",
                        ));
                    }
                    prev = Some(i);
                }
            }
        } else if selection.is_some() {
            return Err(Error::InvalidArgument("selection requires a snake table"));
        }
        Ok(Hydra {
            primes: primes_in,
            wavelength,
            table,
            selection,
        })
    }
}

/// Parses a dot-joined recursive index like `"1.2.4"` into its components.
fn parse_index(s: &str) -> Result<Vec<u64>> {
    if s.is_empty() {
        return Err(Error::BadIndex(String::new()));
    }
    s.split('.')
        .map(|part| {
            part.parse::<u64>()
                .map_err(|_| Error::BadIndex(format!("{s}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget() -> Budget {
        Budget::default()
    }

    fn natural(primes: &[u64]) -> Hydra {
        Hydra::natural(primes, &budget()).unwrap()
    }

    #[test]
    fn root_shape() {
        let r = Hydra::root();
        assert_eq!(r.primes(), &[] as &[u64]);
        assert_eq!(r.k().unwrap(), 1);
        assert_eq!(r.heads(Selector::All).unwrap(), vec![1]);
        assert!(r.snakes().unwrap()[0].alive);
        assert_eq!(r.next_prime().unwrap(), 2);
        assert_eq!(r.first_candidates().unwrap(), vec![(String::new(), 2)]);
    }

    #[test]
    fn split_root_by_two() {
        let h = Hydra::root().split(2, &budget()).unwrap();
        assert_eq!(h.heads(Selector::Alive).unwrap(), vec![1]);
        assert_eq!(h.heads(Selector::All).unwrap(), vec![1, 2]);
        assert_eq!(h.next_prime().unwrap(), 3);
    }

    #[test]
    fn split_h2_by_three_full_table() {
        let h = natural(&[2, 3]);
        assert_eq!(h.heads(Selector::Alive).unwrap(), vec![1, 5]);
        let rows: Vec<(String, u64, bool)> = h
            .snakes()
            .unwrap()
            .iter()
            .map(|s| (h.index_of(s.head), s.head, s.alive))
            .collect();
        assert_eq!(
            rows,
            vec![
                ("1.1".into(), 1, true),
                ("0.2".into(), 2, false),
                ("1.0".into(), 3, false),
                ("0.1".into(), 4, false),
                ("1.2".into(), 5, true),
                ("0.0".into(), 6, false),
            ]
        );
    }

    #[test]
    fn split_rejects_bad_primes() {
        let h = natural(&[2, 3]);
        assert_eq!(h.split(4, &budget()), Err(Error::NotPrime(4)));
        assert_eq!(h.split(3, &budget()), Err(Error::DuplicatePrime(3)));
    }

    #[test]
    fn split_respects_budget() {
        let tight = Budget::new(5);
        let err = Hydra::root().split(2, &tight).unwrap().split(3, &tight);
        assert!(matches!(err, Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn recurse_chain() {
        let b = budget();
        let h = Hydra::root().recurse(&b).unwrap();
        assert_eq!(h.primes(), &[2]);
        let h = natural(&[2, 3]).recurse(&b).unwrap();
        assert_eq!(h.primes(), &[2, 3, 5]);
        assert_eq!(h.next_prime().unwrap(), 7);
        let h = h.recurse(&b).unwrap();
        assert_eq!(h.k().unwrap(), 210);
    }

    #[test]
    fn natural_examples() {
        assert_eq!(natural(&[2, 3]).heads(Selector::Alive).unwrap(), vec![1, 5]);
        let h = natural(&[2, 3, 5]);
        assert_eq!(h.k().unwrap(), 30);
        assert_eq!(h.alive_len().unwrap(), 8);
        assert_eq!(
            h.heads(Selector::Alive).unwrap(),
            vec![1, 7, 11, 13, 17, 19, 23, 29]
        );
        assert!(Hydra::natural(&[], &budget()).unwrap().equals(&Hydra::root()));
    }

    #[test]
    fn next_prime_examples() {
        assert_eq!(natural(&[2]).next_prime().unwrap(), 3);
        assert_eq!(natural(&[2, 3]).next_prime().unwrap(), 5);
        assert_eq!(natural(&[2, 3, 5]).next_prime().unwrap(), 7);
    }

    #[test]
    fn first_candidates_examples() {
        assert_eq!(
            natural(&[2, 3]).first_candidates().unwrap(),
            vec![("1.2".to_string(), 5), ("1.1".to_string(), 7)]
        );
        assert_eq!(
            natural(&[2]).first_candidates().unwrap(),
            vec![("1".to_string(), 3)]
        );
    }

    #[test]
    fn twin_heads() {
        let h = natural(&[2, 3, 5]);
        assert_eq!(h.heads(Selector::Twins).unwrap(), vec![1, 11, 13, 17, 19, 29]);
    }

    #[test]
    fn subscript_views() {
        let h = natural(&[2, 3, 5]);
        let v = h.subscript(&["1.1"]).unwrap();
        assert_eq!(v.heads(Selector::All).unwrap(), vec![1, 7, 13, 19, 25]);
        assert_eq!(v.heads(Selector::Alive).unwrap(), vec![1, 7, 13, 19]);

        let h = natural(&[2, 7, 3]);
        let v = h.subscript(&["1.1", "1.6"]).unwrap();
        assert_eq!(v.heads(Selector::Alive).unwrap(), vec![1, 13, 29, 41]);

        let v = natural(&[2, 3]).subscript(&["1.2"]).unwrap();
        assert_eq!(v.heads(Selector::Alive).unwrap(), vec![5]);

        assert_eq!(h.subscript(&["6.6.6"]), Err(Error::EmptySelection));
        assert!(matches!(h.subscript(&["1.x"]), Err(Error::BadIndex(_))));
    }

    #[test]
    fn subscript_composes() {
        let h = natural(&[2, 3, 5]);
        let v = h.subscript(&["1.1", "1.2"]).unwrap();
        let w = v.subscript(&["1.1"]).unwrap();
        assert_eq!(w.heads(Selector::All).unwrap(), vec![1, 7, 13, 19, 25]);
    }

    #[test]
    fn is_natural_examples() {
        assert!(natural(&[2, 3]).is_natural());
        assert!(!natural(&[2, 7]).is_natural());
        assert!(natural(&[5, 7, 2, 3]).is_natural());
        assert!(Hydra::root().is_natural());
    }

    #[test]
    fn equality_examples() {
        assert!(natural(&[2, 3]).equals(&natural(&[3, 2])));
        assert!(natural(&[5, 7, 2, 3]).equals(&natural(&[2, 3, 5, 7])));
        assert!(!natural(&[2, 3]).equals(&natural(&[2, 3, 5])));
        // Same prime set implies the same alive head set.
        assert_eq!(
            natural(&[5, 7, 2, 3]).heads(Selector::Alive).unwrap(),
            natural(&[2, 3, 5, 7]).heads(Selector::Alive).unwrap()
        );
    }

    #[test]
    fn snake_of_examples() {
        let h = natural(&[2, 3]);
        assert_eq!(h.snake_of(7).unwrap().head, 1);
        let s = h.snake_of(6).unwrap();
        assert_eq!((s.head, s.alive), (6, false));
        assert_eq!(natural(&[2, 3, 5]).snake_of(31).unwrap().head, 1);
    }

    #[test]
    fn count_only_beyond_budget() {
        let p = primes::primes_first(15).unwrap();
        let h = Hydra::count_only(&p).unwrap();
        assert!(!h.is_materialized());
        assert!(matches!(
            Hydra::natural(&p, &budget()),
            Err(Error::BudgetExceeded { .. })
        ));
        assert_eq!(
            h.wavelength().to_string(),
            "614889782588491410"
        );
    }

    #[test]
    fn last_alive_snake() {
        for h in [natural(&[2, 3]), natural(&[2, 3, 5]), natural(&[2, 7])] {
            let k = h.k().unwrap();
            let t = h.snakes().unwrap();
            assert!(t[0].alive);
            assert!(!t[(k - 1) as usize].alive);
            assert!(t[(k - 2) as usize].alive);
        }
    }

    #[test]
    fn from_parts_round_trip_and_validation() {
        let h = natural(&[2, 3, 5]);
        let again = Hydra::from_parts(
            h.primes().to_vec(),
            Some(h.snakes().unwrap().to_vec()),
            None,
        )
        .unwrap();
        assert_eq!(h, again);

        let mut bad = h.snakes().unwrap().to_vec();
        bad[0].alive = false;
        assert!(Hydra::from_parts(h.primes().to_vec(), Some(bad), None).is_err());
    }

    mod properties {
        use super::*;
        use num_integer::Integer;
        use proptest::prelude::*;

        /// A short list of distinct primes whose product stays small, in
        /// random split order.
        fn prime_list() -> impl Strategy<Value = Vec<u64>> {
            proptest::sample::subsequence(vec![2u64, 3, 5, 7, 11, 13], 0..=4)
                .prop_shuffle()
        }

        proptest! {
            #[test]
            fn mece_membership(primes in prime_list(), n in 1u64..5000) {
                let h = Hydra::natural(&primes, &Budget::default()).unwrap();
                let k = h.k().unwrap();
                let s = h.snake_of(n).unwrap();
                prop_assert_eq!(n % k, s.head % k);
                prop_assert!(s.head >= 1 && s.head <= k);
            }

            #[test]
            fn alive_iff_coprime(primes in prime_list()) {
                let h = Hydra::natural(&primes, &Budget::default()).unwrap();
                let k = h.k().unwrap();
                for s in h.snakes().unwrap() {
                    prop_assert_eq!(s.alive, s.head.gcd(&k) == 1);
                }
            }

            #[test]
            fn split_order_ascending_and_aliveness(primes in prime_list(), p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 17])) {
                let h = Hydra::natural(&primes, &Budget::default()).unwrap();
                if primes.contains(&p) {
                    return Ok(());
                }
                let next = h.split(p, &Budget::default()).unwrap();
                let old = h.snakes().unwrap();
                let k = h.k().unwrap();
                let mut prev = 0u64;
                for s in next.snakes().unwrap() {
                    prop_assert!(s.head > prev, "heads must ascend in production order");
                    prev = s.head;
                    let ancestor = old[((s.head - 1) % k) as usize];
                    prop_assert_eq!(s.alive, ancestor.alive && s.head % p != 0);
                }
            }

            #[test]
            fn alive_count_is_totient_product(primes in prime_list()) {
                let h = Hydra::natural(&primes, &Budget::default()).unwrap();
                let expect: u64 = primes.iter().map(|&p| p - 1).product();
                prop_assert_eq!(h.alive_len().unwrap(), expect);
            }
        }
    }

    #[test]
    fn next_prime_matches_oracle_on_small_chain() {
        let mut h = Hydra::root();
        for _ in 0..6 {
            let by_oracle =
                primes::next_prime_after(h.primes().iter().copied().max().unwrap_or(0));
            assert_eq!(h.next_prime().unwrap(), by_oracle);
            h = h.recurse(&budget()).unwrap();
        }
    }

    #[test]
    fn primality_window() {
        for n in 0..=5 {
            let h = Hydra::natural_first(n, &budget()).unwrap();
            let bound = h.next_prime().unwrap().pow(2);
            for head in h.heads(Selector::Alive).unwrap() {
                if head > 1 && head < bound {
                    assert!(primes::is_prime(head), "head {head} must be prime");
                }
            }
        }
    }
}
