//! The six witness families `S1(n)..S6(n)`: edge values known to occupy
//! their own collision classes, each tagged with the parameters that
//! generated it.
//!
//! Every element has a threshold `appears_from`: it belongs to `S_i(n)`
//! exactly when `n >= appears_from`. This lets a [`WitnessFamily`] built
//! once at `n_max` answer for every smaller `n`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{
    exceeds_s_plus_sqrt, factorial_u64, factorial_valuation, falling_factorial_unchecked,
    floor_log, m_index, prime_pi, prime_pi_s_plus_sqrt, prime_power_decompose, primes_upto,
    BigNat,
};

/// Knobs for the parts of the witness definitions that admit two readings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WitnessConfig {
    /// Smallest `s` admitted in `S2`: 2 follows the lemma hypothesis, 3 the
    /// set definition.
    pub s_min: u32,
    /// Use strict `top < n` for `S4`/`S5` instead of `top <= n`.
    pub strict_tops: bool,
}

impl Default for WitnessConfig {
    fn default() -> Self {
        WitnessConfig { s_min: 2, strict_tops: false }
    }
}

impl WitnessConfig {
    pub fn new(s_min: u32, strict_tops: bool) -> Self {
        assert!(s_min == 2 || s_min == 3, "s_min must be 2 or 3");
        WitnessConfig { s_min, strict_tops }
    }

    /// Short stable identifier used in CSV rows.
    pub fn id(&self) -> String {
        format!("smin{}-{}", self.s_min, if self.strict_tops { "strict" } else { "wide" })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SetId {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
}

impl SetId {
    pub const ALL: [SetId; 6] = [SetId::S1, SetId::S2, SetId::S3, SetId::S4, SetId::S5, SetId::S6];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for SetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Generating parameters; only the ones relevant to a family are set.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessElement {
    pub set: SetId,
    pub value: BigNat,
    pub top: u32,
    pub sub: u32,
    pub params: Params,
    pub appears_from: u32,
}

impl WitnessElement {
    /// Re-checks the defining conditions of the element's family at `n`.
    pub fn satisfies_definition(&self, n: u32, cfg: WitnessConfig) -> bool {
        let p = &self.params;
        let limit = if cfg.strict_tops { n.saturating_sub(1) } else { n };
        let shape_ok = self.sub >= 1
            && self.sub < self.top
            && self.value == falling_factorial_unchecked(self.top as u64, self.sub as u64);
        if !shape_ok {
            return false;
        }
        match self.set {
            SetId::S1 => {
                let k = self.top as u64;
                let Ok(mk) = m_index(k) else { return false };
                k >= 3 && self.top <= n && self.sub as u64 >= k - mk as u64
            }
            SetId::S2 => {
                let (Some(q), Some(s)) = (p.q, p.s) else { return false };
                crate::numtheory::is_prime(q)
                    && s >= cfg.s_min
                    && exceeds_s_plus_sqrt(q, s as u64)
                    && q < n as u64
                    && self.top as u64 == q + 1
                    && self.sub == s
            }
            SetId::S3 => {
                let (Some(q), Some(s)) = (p.q, p.s) else { return false };
                crate::numtheory::is_prime(q)
                    && s >= 3
                    && q > 4 * s as u64
                    && q + 1 < n as u64
                    && self.top as u64 == q + 2
                    && self.sub == s
            }
            SetId::S4 | SetId::S5 => {
                let (Some(q), Some(l), Some(k), Some(m)) = (p.q, p.l, p.k, p.m) else {
                    return false;
                };
                let Ok(v) = factorial_valuation(q, l) else { return false };
                let Some(qm) = q.checked_pow(m as u32) else { return false };
                let top = if self.set == SetId::S4 { qm * k + q * l - 1 } else { qm * (k + l) - 1 };
                k >= 1
                    && l >= 1
                    && m == l + v
                    && q * l < n as u64
                    && top <= limit as u64
                    && self.top as u64 == top
                    && self.sub as u64 == q * l - 1
            }
            SetId::S6 => {
                if self.top == 2 && self.sub == 1 {
                    return n >= 2;
                }
                let x = self.top as u64 / 2;
                self.top % 2 == 0
                    && self.sub == 1
                    && self.top <= n
                    && x != 3
                    && prime_power_decompose(x) == p.q.zip(p.h)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSet {
    pub set: SetId,
    pub n: u32,
    pub elements: Vec<WitnessElement>,
    pub values: BTreeSet<BigNat>,
}

impl WitnessSet {
    fn from_elements(set: SetId, n: u32, elements: Vec<WitnessElement>) -> Self {
        let values = elements.iter().map(|e| e.value.clone()).collect();
        WitnessSet { set, n, elements, values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The same family restricted to a smaller `n`.
    pub fn restrict(&self, n: u32) -> WitnessSet {
        let elements = self.elements.iter().filter(|e| e.appears_from <= n).cloned().collect();
        WitnessSet::from_elements(self.set, n, elements)
    }
}

fn need(n: u32, min: u32) -> Result<()> {
    if n < min {
        Err(Error::TooFewVertices { n: n as u64, min: min as u64 })
    } else {
        Ok(())
    }
}

fn element(set: SetId, top: u64, sub: u64, value: BigNat, params: Params, appears_from: u64) -> WitnessElement {
    WitnessElement {
        set,
        value,
        top: top as u32,
        sub: sub as u32,
        params,
        appears_from: appears_from as u32,
    }
}

/// `S1(n) = { P^k_i : k - m_k <= i <= k - 1, 3 <= k <= n }`.
pub fn s1(n: u32) -> Result<WitnessSet> {
    need(n, 3)?;
    let mut out = Vec::new();
    for k in 3..=n as u64 {
        let mk = m_index(k)? as u64;
        let lo = k - mk;
        let mut value = falling_factorial_unchecked(k, lo);
        for i in lo..k {
            if i > lo {
                value *= k - i + 1;
            }
            let params = Params { m: Some(mk), ..Params::default() };
            out.push(element(SetId::S1, k, i, value.clone(), params, k));
        }
    }
    Ok(WitnessSet::from_elements(SetId::S1, n, out))
}

/// `S2(n) = { P^(q+1)_s : q prime, s >= s_min, s + sqrt(s+1) < q < n }`.
pub fn s2(n: u32, s_min: u32) -> Result<WitnessSet> {
    need(n, 3)?;
    let primes = primes_upto(n as u64);
    let mut out = Vec::new();
    for &q in primes.upto(n as u64 - 1) {
        let s0 = s_min as u64;
        if !exceeds_s_plus_sqrt(q, s0) {
            continue;
        }
        let mut value = falling_factorial_unchecked(q + 1, s0);
        let mut s = s0;
        while exceeds_s_plus_sqrt(q, s) {
            let params = Params { q: Some(q), s: Some(s as u32), ..Params::default() };
            out.push(element(SetId::S2, q + 1, s, value.clone(), params, q + 1));
            value *= q + 1 - s;
            s += 1;
        }
    }
    Ok(WitnessSet::from_elements(SetId::S2, n, out))
}

/// `S3(n) = { P^(q+2)_s : q prime, s >= 3, 4s < q < n - 1 }`.
pub fn s3(n: u32) -> Result<WitnessSet> {
    need(n, 3)?;
    let primes = primes_upto(n as u64);
    let mut out = Vec::new();
    for &q in primes.upto(n.saturating_sub(2) as u64) {
        if q <= 12 {
            continue;
        }
        let mut value = falling_factorial_unchecked(q + 2, 3);
        let mut s = 3;
        while 4 * s < q {
            let params = Params { q: Some(q), s: Some(s as u32), ..Params::default() };
            out.push(element(SetId::S3, q + 2, s, value.clone(), params, q + 2));
            value *= q + 2 - s;
            s += 1;
        }
    }
    Ok(WitnessSet::from_elements(SetId::S3, n, out))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ValuationForm {
    /// `top = q^m k + ql - 1`
    Shifted,
    /// `top = q^m (k + l) - 1`
    Scaled,
}

fn valuation_family(n: u32, strict: bool, form: ValuationForm) -> Result<WitnessSet> {
    need(n, 3)?;
    let set = match form {
        ValuationForm::Shifted => SetId::S4,
        ValuationForm::Scaled => SetId::S5,
    };
    let n64 = n as u64;
    let limit = if strict { n64 - 1 } else { n64 };
    let primes = primes_upto(n64);
    let mut out = Vec::new();
    for &q in primes.upto(n64) {
        let mut l = 1u64;
        while q * l < n64 {
            let m = l + factorial_valuation(q, l)?;
            let Some(qm) = u32::try_from(m).ok().and_then(|m| q.checked_pow(m)) else { break };
            let top_of = |k: u64| -> Option<u64> {
                match form {
                    ValuationForm::Shifted => qm.checked_mul(k)?.checked_add(q * l - 1),
                    ValuationForm::Scaled => qm.checked_mul(k + l)?.checked_sub(1),
                }
            };
            // top grows in both k and l, so the first k = 1 overshoot ends the l loop.
            if top_of(1).is_none_or(|t| t > limit) {
                break;
            }
            let sub = q * l - 1;
            let mut k = 1u64;
            while let Some(top) = top_of(k).filter(|&t| t <= limit) {
                let params = Params { q: Some(q), l: Some(l), k: Some(k), m: Some(m), ..Params::default() };
                let from = if strict { top + 1 } else { top };
                out.push(element(set, top, sub, falling_factorial_unchecked(top, sub), params, from));
                k += 1;
            }
            l += 1;
        }
    }
    Ok(WitnessSet::from_elements(set, n, out))
}

/// `S4(n) = { P^(q^m k + ql - 1)_(ql-1) }` with `m = l + v_q(l!)`.
pub fn s4(n: u32, strict_tops: bool) -> Result<WitnessSet> {
    valuation_family(n, strict_tops, ValuationForm::Shifted)
}

/// `S5(n) = { P^(q^m (k+l) - 1)_(ql-1) }` with `m = l + v_q(l!)`.
pub fn s5(n: u32, strict_tops: bool) -> Result<WitnessSet> {
    valuation_family(n, strict_tops, ValuationForm::Scaled)
}

/// `S6(n) = { P^2_1 } ∪ { P^(2q^h)_1 : q^h != 3, 2q^h <= n }`.
pub fn s6(n: u32) -> Result<WitnessSet> {
    need(n, 2)?;
    let mut out = vec![element(SetId::S6, 2, 1, BigNat::from(2u32), Params::default(), 2)];
    for x in 2..=(n / 2) as u64 {
        if x == 3 {
            continue;
        }
        if let Some((q, h)) = prime_power_decompose(x) {
            let params = Params { q: Some(q), h: Some(h), ..Params::default() };
            out.push(element(SetId::S6, 2 * x, 1, BigNat::from(2 * x), params, 2 * x));
        }
    }
    Ok(WitnessSet::from_elements(SetId::S6, n, out))
}

pub fn generate(set: SetId, n: u32, cfg: WitnessConfig) -> Result<WitnessSet> {
    match set {
        SetId::S1 => s1(n),
        SetId::S2 => s2(n, cfg.s_min),
        SetId::S3 => s3(n),
        SetId::S4 => s4(n, cfg.strict_tops),
        SetId::S5 => s5(n, cfg.strict_tops),
        SetId::S6 => s6(n),
    }
}

/// Cardinalities of the five merged groups entering the lower bound.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetCards {
    pub s1: usize,
    pub s2: usize,
    pub s3: usize,
    pub s45: usize,
    pub s6: usize,
}

impl SetCards {
    pub fn total(&self) -> usize {
        self.s1 + self.s2 + self.s3 + self.s45 + self.s6
    }
}

/// Multiplicities of values across `S1, S2, S3, S4 ∪ S5, S6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaReport {
    pub n: u32,
    pub cards: SetCards,
    /// Values lying in two or more of the merged groups, with their multiplicity.
    pub repeated: BTreeMap<BigNat, usize>,
    pub union_size: usize,
    pub delta: usize,
}

fn delta_from_groups(n: u32, groups: [&BTreeSet<BigNat>; 5]) -> DeltaReport {
    let mut mult: HashMap<&BigNat, usize> = HashMap::new();
    for g in groups {
        for v in g {
            *mult.entry(v).or_default() += 1;
        }
    }
    let cards = SetCards {
        s1: groups[0].len(),
        s2: groups[1].len(),
        s3: groups[2].len(),
        s45: groups[3].len(),
        s6: groups[4].len(),
    };
    let repeated: BTreeMap<BigNat, usize> =
        mult.iter().filter(|(_, &c)| c > 1).map(|(v, &c)| ((*v).clone(), c)).collect();
    let delta = repeated.values().map(|c| c - 1).sum();
    DeltaReport { n, cards, repeated, union_size: mult.len(), delta }
}

/// All six sets for one `n`, with `S4 ∪ S5` merged for the bound.
#[derive(Debug, Clone)]
pub struct WitnessSets {
    pub n: u32,
    pub config: WitnessConfig,
    pub sets: [WitnessSet; 6],
}

impl WitnessSets {
    pub fn generate(n: u32, cfg: WitnessConfig) -> Result<Self> {
        need(n, 3)?;
        let sets = [
            s1(n)?,
            s2(n, cfg.s_min)?,
            s3(n)?,
            s4(n, cfg.strict_tops)?,
            s5(n, cfg.strict_tops)?,
            s6(n)?,
        ];
        Ok(WitnessSets { n, config: cfg, sets })
    }

    pub fn get(&self, id: SetId) -> &WitnessSet {
        &self.sets[id.index()]
    }

    pub fn s45_values(&self) -> BTreeSet<BigNat> {
        self.get(SetId::S4).values.union(&self.get(SetId::S5).values).cloned().collect()
    }

    pub fn union_values(&self) -> BTreeSet<BigNat> {
        self.sets.iter().flat_map(|s| s.values.iter().cloned()).collect()
    }

    pub fn delta(&self) -> DeltaReport {
        let s45 = self.s45_values();
        delta_from_groups(
            self.n,
            [
                &self.get(SetId::S1).values,
                &self.get(SetId::S2).values,
                &self.get(SetId::S3).values,
                &s45,
                &self.get(SetId::S6).values,
            ],
        )
    }

    pub fn restrict(&self, n: u32) -> WitnessSets {
        assert!(n <= self.n && n >= 3);
        WitnessSets {
            n,
            config: self.config,
            sets: self.sets.clone().map(|s| s.restrict(n)),
        }
    }

    /// CSV with columns `set_id,value_decimal,top,sub,params_json`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["set_id", "value_decimal", "top", "sub", "params_json"])?;
        for set in &self.sets {
            for e in &set.elements {
                w.write_record([
                    e.set.to_string(),
                    e.value.to_string(),
                    e.top.to_string(),
                    e.sub.to_string(),
                    serde_json::to_string(&e.params)?,
                ])?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

/// Convenience wrapper: merged multiplicities and `delta` at `n`.
pub fn union_and_delta(n: u32, cfg: WitnessConfig) -> Result<DeltaReport> {
    Ok(WitnessSets::generate(n, cfg)?.delta())
}

/// The witness sets generated once at `n_max`, with each value interned so
/// that every `n <= n_max` can be answered by filtering thresholds.
#[derive(Debug, Clone)]
pub struct WitnessFamily {
    n_max: u32,
    /// Per merged group (S1, S2, S3, S4∪S5, S6): value id -> first `n` at which it appears.
    groups: [HashMap<u32, u32>; 5],
    value_count: usize,
}

impl WitnessFamily {
    pub fn new(n_max: u32, cfg: WitnessConfig) -> Result<Self> {
        let all = WitnessSets::generate(n_max, cfg)?;
        let mut ids: HashMap<&BigNat, u32> = HashMap::new();
        let mut groups: [HashMap<u32, u32>; 5] = Default::default();
        for set in &all.sets {
            let g = match set.set {
                SetId::S1 => 0,
                SetId::S2 => 1,
                SetId::S3 => 2,
                SetId::S4 | SetId::S5 => 3,
                SetId::S6 => 4,
            };
            for e in &set.elements {
                let next = ids.len() as u32;
                let id = *ids.entry(&e.value).or_insert(next);
                let from = groups[g].entry(id).or_insert(e.appears_from);
                *from = (*from).min(e.appears_from);
            }
        }
        Ok(WitnessFamily { n_max, groups, value_count: ids.len() })
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    /// `(cards, union_size, delta)` at `n`.
    pub fn summary_at(&self, n: u32) -> (SetCards, usize, usize) {
        assert!(n <= self.n_max);
        let mut seen = vec![0u8; self.value_count];
        let mut cards = [0usize; 5];
        for (g, group) in self.groups.iter().enumerate() {
            for (&id, &from) in group {
                if from <= n {
                    cards[g] += 1;
                    seen[id as usize] += 1;
                }
            }
        }
        let union = seen.iter().filter(|&&c| c > 0).count();
        let total: usize = cards.iter().sum();
        let cards = SetCards { s1: cards[0], s2: cards[1], s3: cards[2], s45: cards[3], s6: cards[4] };
        (cards, union, total - union)
    }
}

/// The printed closed-form summands of the lower bound, evaluated literally.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForms {
    pub s1_formula: i64,
    pub s2_formula: i64,
    /// Upper limit `floor((n-1)/4)`, from `s = 2`.
    pub s3_formula: i64,
    /// Upper limit `floor((n-3)/4)`, from `s = 3`.
    pub s3_formula_alt: i64,
    pub s6_formula: i64,
}

/// `floor((2n + 3 - sqrt(4n + 18)) / 2)` without floating point.
pub fn s2_sum_limit(n: u64) -> i64 {
    let disc = 4 * n + 18;
    let mut s = (2 * n as i64 + 3).div_euclid(2);
    loop {
        let rhs = 2 * n as i64 + 3 - 2 * s;
        if rhs >= 0 && (rhs as u64) * (rhs as u64) >= disc {
            return s;
        }
        s -= 1;
    }
}

pub fn closed_form_cardinalities(n: u32) -> Result<ClosedForms> {
    need(n, 3)?;
    let n64 = n as u64;
    let m = m_index(n64)? as u64;
    let fact = |j: u64| factorial_u64(j).expect("m <= 20") as i64;
    let s1_formula = (n64 * m) as i64 - fact(m) - 4 - (3..m).map(fact).sum::<i64>();

    let pi_top = prime_pi(n64 - 1) as i64;
    let s2_formula = (2..=s2_sum_limit(n64))
        .map(|s| pi_top - prime_pi_s_plus_sqrt(s as u64) as i64)
        .sum();
    let s3_sum = |from: i64, to: i64| -> i64 {
        (from..=to).map(|s| pi_top - prime_pi(4 * s as u64) as i64).sum()
    };
    let s3_formula = s3_sum(2, (n as i64 - 1).div_euclid(4));
    let s3_formula_alt = s3_sum(3, (n as i64 - 3).div_euclid(4));

    let half = n64 / 2;
    let s6_formula = primes_upto(n64)
        .upto(half)
        .iter()
        .map(|&q| floor_log(q, half) as i64)
        .sum();

    Ok(ClosedForms { s1_formula, s2_formula, s3_formula, s3_formula_alt, s6_formula })
}
