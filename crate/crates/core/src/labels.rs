//! Edge labels for vertex labels `1..=n` and their collision classes.
//!
//! The pair `(low, high)` carries the label `P^high_low`. Two pairs collide
//! when their labels are equal; a maximal permutation graph holds exactly one
//! edge from each collision class, so the number of classes `D(n)` is its
//! edge count.

use std::collections::{BTreeSet, HashMap};
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{falling_factorial_unchecked, BigNat};

/// Largest `n` accepted by the pair enumerators.
pub const PAIR_CAP: u32 = 2000;

/// Fixed 64-bit moduli for fingerprint bucketing (the three largest 64-bit primes).
const FINGERPRINT_MODULI: [u64; 3] = [
    18_446_744_073_709_551_557,
    18_446_744_073_709_551_533,
    18_446_744_073_709_551_521,
];

/// A vertex-label pair `low < high`, without its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pair {
    pub low: u32,
    pub high: u32,
}

impl Pair {
    pub fn new(low: u32, high: u32) -> Self {
        debug_assert!(low < high);
        Pair { low, high }
    }

    pub fn value(&self) -> BigNat {
        falling_factorial_unchecked(self.high as u64, self.low as u64)
    }

    /// Ordering key used throughout: `(high, low)` lexicographic.
    pub fn key(&self) -> (u32, u32) {
        (self.high, self.low)
    }
}

/// A pair together with its edge value `P^high_low`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelPair {
    pub low: u32,
    pub high: u32,
    pub value: BigNat,
}

impl LabelPair {
    pub fn pair(&self) -> Pair {
        Pair::new(self.low, self.high)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TableMode {
    #[default]
    Exact,
    Fingerprint,
}

fn check_n(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::TooFewVertices { n: n as u64, min: 2 });
    }
    if n > PAIR_CAP {
        return Err(Error::OracleCap { n: n as u64, cap: PAIR_CAP as u64 });
    }
    Ok(())
}

/// All `n(n-1)/2` pairs ordered by `(high, low)`. Values along each `high`
/// row follow `P^high_low = P^high_(low-1) * (high - low + 1)`.
pub fn enumerate_pairs(n: u32) -> Result<Vec<LabelPair>> {
    check_n(n)?;
    let mut out = Vec::with_capacity(pair_count(n) as usize);
    for high in 2..=n {
        let mut value = BigNat::from(1u32);
        for low in 1..high {
            value *= high - low + 1;
            out.push(LabelPair { low, high, value: value.clone() });
        }
    }
    Ok(out)
}

pub fn pair_count(n: u32) -> u64 {
    n as u64 * (n as u64 - 1) / 2
}

/// One collision class: every pair sharing a single edge value, ordered by
/// `(high, low)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollisionClass {
    pairs: Vec<Pair>,
}

impl CollisionClass {
    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    /// The `(high, low)`-smallest pair, which also has the smallest `high`.
    pub fn first(&self) -> Pair {
        self.pairs[0]
    }

    pub fn value(&self) -> BigNat {
        self.pairs[0].value()
    }
}

/// Partition of all pairs within `1..=n` by equal edge value.
///
/// Classes are stored in order of their first pair, which makes the table
/// independent of the grouping strategy used to build it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollisionTable {
    n: u32,
    classes: Vec<CollisionClass>,
}

impl CollisionTable {
    pub fn build(n: u32, mode: TableMode) -> Result<Self> {
        check_n(n)?;
        let mut groups = match mode {
            TableMode::Exact => group_exact(n),
            TableMode::Fingerprint => group_fingerprint(n),
        };
        for g in &mut groups {
            g.sort_by_key(Pair::key);
        }
        groups.sort_by_key(|g| g[0].key());
        Ok(CollisionTable {
            n,
            classes: groups.into_iter().map(|pairs| CollisionClass { pairs }).collect(),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn classes(&self) -> &[CollisionClass] {
        &self.classes
    }

    /// `D(n)`.
    pub fn distinct_count(&self) -> usize {
        self.classes.len()
    }

    pub fn pair_total(&self) -> usize {
        self.classes.iter().map(CollisionClass::size).sum()
    }

    pub fn non_singletons(&self) -> impl Iterator<Item = &CollisionClass> {
        self.classes.iter().filter(|c| c.size() > 1)
    }

    /// Classes sorted by increasing edge value.
    pub fn classes_by_value(&self) -> Vec<(BigNat, &CollisionClass)> {
        let mut v: Vec<_> = self.classes.iter().map(|c| (c.value(), c)).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    /// `D(m)` for every `m` in `2..=n`, read off this table: a class exists
    /// within `1..=m` exactly when its first pair does. Index `m` of the
    /// returned vector holds `D(m)`; indices 0 and 1 are zero.
    pub fn distinct_counts_prefix(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.n as usize + 1];
        for c in &self.classes {
            counts[c.first().high as usize] += 1;
        }
        for m in 1..counts.len() {
            counts[m] += counts[m - 1];
        }
        counts
    }

    pub fn singleton_values(&self) -> BTreeSet<BigNat> {
        self.classes
            .iter()
            .filter(|c| c.size() == 1)
            .map(CollisionClass::value)
            .collect()
    }

    /// CSV with columns `value_decimal,size,pairs`; pairs are `low-high`
    /// joined by `;`.
    pub fn write_csv<W: Write>(&self, min_size: usize, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["value_decimal", "size", "pairs"])?;
        for c in self.classes.iter().filter(|c| c.size() >= min_size) {
            let pairs = c
                .pairs
                .iter()
                .map(|p| format!("{}-{}", p.low, p.high))
                .collect::<Vec<_>>()
                .join(";");
            w.write_record([c.value().to_string(), c.size().to_string(), pairs])?;
        }
        w.flush()?;
        Ok(())
    }
}

fn group_exact(n: u32) -> Vec<Vec<Pair>> {
    let mut index: HashMap<BigNat, usize> = HashMap::new();
    let mut groups: Vec<Vec<Pair>> = Vec::new();
    for lp in enumerate_pairs(n).expect("n checked") {
        let pair = lp.pair();
        match index.get(&lp.value) {
            Some(&i) => groups[i].push(pair),
            None => {
                index.insert(lp.value, groups.len());
                groups.push(vec![pair]);
            }
        }
    }
    groups
}

fn group_fingerprint(n: u32) -> Vec<Vec<Pair>> {
    let mut buckets: HashMap<[u64; 3], Vec<Pair>> = HashMap::new();
    for high in 2..=n {
        let mut fp = [1u64; 3];
        for low in 1..high {
            let factor = (high - low + 1) as u128;
            for (slot, &modulus) in fp.iter_mut().zip(&FINGERPRINT_MODULI) {
                *slot = ((*slot as u128 * factor) % modulus as u128) as u64;
            }
            buckets.entry(fp).or_default().push(Pair::new(low, high));
        }
    }
    let mut groups = Vec::new();
    for (_, bucket) in buckets {
        if bucket.len() == 1 {
            groups.push(bucket);
            continue;
        }
        // Equal fingerprints are only candidates; confirm by exact value.
        let mut exact: HashMap<BigNat, Vec<Pair>> = HashMap::new();
        for p in bucket {
            exact.entry(p.value()).or_default().push(p);
        }
        groups.extend(exact.into_values());
    }
    groups
}

/// `D(n)`, the number of distinct edge values within `1..=n`.
pub fn distinct_value_count(n: u32) -> Result<usize> {
    Ok(CollisionTable::build(n, TableMode::Exact)?.distinct_count())
}

/// Values realised by exactly one pair within `1..=n`.
pub fn singleton_values(n: u32) -> Result<BTreeSet<BigNat>> {
    Ok(CollisionTable::build(n, TableMode::Exact)?.singleton_values())
}
