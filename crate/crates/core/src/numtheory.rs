//! Exact integer primitives: falling factorials, a cached prime sieve,
//! prime counting, p-adic valuations and the factorial threshold index.

use std::fs;
use std::path::Path;
use std::sync::{Arc, RwLock};

use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision natural number used for every edge value.
pub type BigNat = BigUint;

/// `P^k_r = k (k-1) ... (k-r+1)`.
pub fn falling_factorial(k: u64, r: u64) -> Result<BigNat> {
    if k < 1 || r > k {
        return Err(Error::FallingFactorialDomain { k, r });
    }
    Ok(falling_factorial_unchecked(k, r))
}

pub(crate) fn falling_factorial_unchecked(k: u64, r: u64) -> BigNat {
    let mut acc = BigNat::one();
    for j in 0..r {
        acc *= k - j;
    }
    acc
}

/// Checked machine-word falling factorial; `None` on overflow or `r > k`.
pub fn falling_factorial_u64(k: u64, r: u64) -> Option<u64> {
    if r > k {
        return None;
    }
    (0..r).try_fold(1u64, |acc, j| acc.checked_mul(k - j))
}

/// Falling factorial with a big top argument. Requires `k >= r`.
pub fn falling_factorial_big(k: &BigNat, r: u64) -> BigNat {
    let mut acc = BigNat::one();
    let mut term = k.clone();
    for _ in 0..r {
        acc *= &term;
        term -= 1u32;
    }
    acc
}

/// Sorted table of every prime up to `limit`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    /// Sieve of Eratosthenes over `0..=limit`.
    pub fn new(limit: u64) -> Self {
        let size = limit as usize + 1;
        let mut composite = vec![false; size.max(2)];
        let mut primes = Vec::new();
        for i in 2..size {
            if composite[i] {
                continue;
            }
            primes.push(i as u64);
            let mut j = i * i;
            while j < size {
                composite[j] = true;
                j += i;
            }
        }
        PrimeTable { limit, primes }
    }

    /// Loads a table from `dir/primes.json` when it covers `limit`, otherwise
    /// sieves and rewrites the file.
    pub fn load_or_build(limit: u64, dir: &Path) -> Result<Self> {
        let path = dir.join("primes.json");
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(table) = serde_json::from_str::<PrimeTable>(&text) {
                if table.limit >= limit && table.is_consistent() {
                    return Ok(table);
                }
            }
        }
        let table = PrimeTable::new(limit);
        fs::create_dir_all(dir)?;
        fs::write(&path, serde_json::to_string(&table)?)?;
        Ok(table)
    }

    fn is_consistent(&self) -> bool {
        self.primes.windows(2).all(|w| w[0] < w[1])
            && self.primes.last().is_none_or(|&p| p <= self.limit)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Primes `p <= x`; `x` must not exceed the table limit.
    pub fn upto(&self, x: u64) -> &[u64] {
        assert!(x <= self.limit, "prime table limit {} < {}", self.limit, x);
        &self.primes[..self.primes.partition_point(|&p| p <= x)]
    }

    /// `pi(x)`, the number of primes `<= x`.
    pub fn pi(&self, x: u64) -> usize {
        self.upto(x).len()
    }

    pub fn contains(&self, x: u64) -> bool {
        assert!(x <= self.limit, "prime table limit {} < {}", self.limit, x);
        self.primes.binary_search(&x).is_ok()
    }
}

static PRIMES: RwLock<Option<Arc<PrimeTable>>> = RwLock::new(None);
static FACTORIALS: RwLock<Vec<BigNat>> = RwLock::new(Vec::new());

/// Shared prime table covering at least `limit`. The cache grows on demand.
pub fn primes_upto(limit: u64) -> Arc<PrimeTable> {
    if let Some(table) = PRIMES.read().unwrap().as_ref() {
        if table.limit >= limit {
            return Arc::clone(table);
        }
    }
    let mut slot = PRIMES.write().unwrap();
    if let Some(table) = slot.as_ref() {
        if table.limit >= limit {
            return Arc::clone(table);
        }
    }
    let old = slot.as_ref().map_or(0, |t| t.limit);
    let table = Arc::new(PrimeTable::new(limit.max(old.saturating_mul(2)).max(1024)));
    *slot = Some(Arc::clone(&table));
    table
}

/// Replaces the shared prime table, e.g. with one loaded from disk.
pub fn install_prime_table(table: PrimeTable) {
    let mut slot = PRIMES.write().unwrap();
    if slot.as_ref().is_none_or(|t| t.limit < table.limit) {
        *slot = Some(Arc::new(table));
    }
}

/// Primality by trial division.
pub fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    if x < 4 {
        return true;
    }
    if x % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d <= x / d {
        if x % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Number of primes `<= x`.
pub fn prime_pi(x: u64) -> usize {
    primes_upto(x).pi(x)
}

/// `pi(x)` for a real argument: primes `p <= x`, which is `pi(floor(x))`.
pub fn prime_pi_real(x: f64) -> usize {
    if !(x >= 2.0) {
        return 0;
    }
    prime_pi(x.floor() as u64)
}

/// `floor(s + sqrt(s + 1))`, computed without floating point.
pub fn floor_s_plus_sqrt(s: u64) -> u64 {
    s + (s + 1).sqrt()
}

/// Exact test of `q > s + sqrt(s + 1)`.
pub fn exceeds_s_plus_sqrt(q: u64, s: u64) -> bool {
    q > s && (q - s) * (q - s) > s + 1
}

/// `pi(s + sqrt(s + 1))` with exact boundary handling.
pub fn prime_pi_s_plus_sqrt(s: u64) -> usize {
    prime_pi(floor_s_plus_sqrt(s))
}

/// Largest `e` with `q^e | x`.
pub fn valuation(q: u64, x: &BigNat) -> Result<u32> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if x.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let mut e = 0;
    let mut rest = x.clone();
    let q_big = BigNat::from(q);
    loop {
        let (quot, rem) = num_integer::Integer::div_rem(&rest, &q_big);
        if !rem.is_zero() {
            return Ok(e);
        }
        rest = quot;
        e += 1;
    }
}

/// Machine-word variant of [`valuation`].
pub fn valuation_u64(q: u64, mut x: u64) -> Result<u32> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if x == 0 {
        return Err(Error::ZeroValuation);
    }
    let mut e = 0;
    while x % q == 0 {
        x /= q;
        e += 1;
    }
    Ok(e)
}

/// `v_q(l!)` by Legendre's sum `sum_t floor(l / q^t)`.
pub fn factorial_valuation(q: u64, l: u64) -> Result<u64> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let mut total = 0;
    let mut rest = l / q;
    while rest > 0 {
        total += rest;
        rest /= q;
    }
    Ok(total)
}

/// `n!`, served from a growing cache.
pub fn factorial(n: u64) -> BigNat {
    let idx = n as usize;
    if let Some(v) = FACTORIALS.read().unwrap().get(idx) {
        return v.clone();
    }
    let mut table = FACTORIALS.write().unwrap();
    if table.is_empty() {
        table.push(BigNat::one());
    }
    while table.len() <= idx {
        let next = table.last().unwrap() * BigNat::from(table.len());
        table.push(next);
    }
    table[idx].clone()
}

/// `n!` if it fits in a `u64` (n <= 20).
pub fn factorial_u64(n: u64) -> Option<u64> {
    (1..=n).try_fold(1u64, |acc, j| acc.checked_mul(j))
}

/// The unique `m` with `m! < k <= (m+1)!`.
pub fn m_index(k: u64) -> Result<u32> {
    if k < 2 {
        return Err(Error::MIndexDomain(k));
    }
    // 20! < u64::MAX < 21!, so every k falls in some window with m <= 20.
    let mut m = 1u64;
    loop {
        match factorial_u64(m + 1) {
            Some(next) if k > next => m += 1,
            _ => return Ok(m as u32),
        }
    }
}

/// `(q, h)` with `q^h = x` when `x` is a prime power.
pub fn prime_power_decompose(x: u64) -> Option<(u64, u32)> {
    if x < 2 {
        return None;
    }
    let q = smallest_prime_factor(x);
    let mut rest = x;
    let mut h = 0;
    while rest % q == 0 {
        rest /= q;
        h += 1;
    }
    (rest == 1).then_some((q, h))
}

fn smallest_prime_factor(x: u64) -> u64 {
    if x % 2 == 0 {
        return 2;
    }
    let mut d = 3;
    while d <= x / d {
        if x % d == 0 {
            return d;
        }
        d += 2;
    }
    x
}

/// Largest `h` with `base^h <= x` (`base >= 2`, `x >= 1`).
pub fn floor_log(base: u64, x: u64) -> u32 {
    let mut h = 0;
    let mut power = base;
    while power <= x {
        h += 1;
        match power.checked_mul(base) {
            Some(p) => power = p,
            None => break,
        }
    }
    h
}

/// Converts a small value to `u64`.
pub fn to_u64(x: &BigNat) -> Option<u64> {
    x.to_u64()
}
