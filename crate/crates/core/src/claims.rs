//! Empirical checks of the lemma and theorem statements behind the bounds.
//!
//! Checks return a [`ClaimReport`] instead of panicking; a counterexample
//! carries enough parameters to be re-evaluated on its own.
//!
//! Lemma ids follow the order the statements are usually listed in:
//! `L1` the factorial-threshold ordering, `L2` the `P^(q+1)_s` prime-gap
//! statement, `L3` the `P^(q+2)_s` statement, `L4` the valuation families
//! `S4`/`S5`, and `L5` the `2 q^h` statement.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize, Serializer};
use serde_json::{json, Value};

use crate::bounds::{i_h, sweep, w_h_direct};
use crate::error::{Error, Result};
use crate::numtheory::{
    exceeds_s_plus_sqrt, falling_factorial_unchecked, m_index, prime_power_decompose, primes_upto, BigNat,
};
use crate::witness::{s4, s5, SetId, WitnessConfig, WitnessElement, WitnessSets};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClaimId {
    L1,
    L2,
    L3,
    L4,
    L5,
    T31,
    T32,
    T41,
    T43,
}

impl ClaimId {
    pub const ALL: [ClaimId; 9] = [
        ClaimId::L1,
        ClaimId::L2,
        ClaimId::L3,
        ClaimId::L4,
        ClaimId::L5,
        ClaimId::T31,
        ClaimId::T32,
        ClaimId::T41,
        ClaimId::T43,
    ];
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for ClaimId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown claim id `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    CounterexamplesFound,
}

/// `P^top_sub`; `top` may exceed a machine word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Representation {
    #[serde(serialize_with = "decimal")]
    pub top: BigNat,
    pub sub: u64,
}

impl Representation {
    pub fn value(&self) -> BigNat {
        crate::numtheory::falling_factorial_big(&self.top, self.sub)
    }
}

fn decimal<S: Serializer>(v: &BigNat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub params: Value,
    pub value_decimal: String,
    pub other_representation: Option<Representation>,
}

/// Informational observation that is not a counterexample.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Flag {
    pub n: u32,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimReport {
    pub claim_id: ClaimId,
    pub range: Value,
    pub config: Option<String>,
    pub status: Status,
    /// Number of instances examined.
    pub checked: u64,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<Flag>,
    pub notes: Vec<String>,
}

impl ClaimReport {
    fn new(claim_id: ClaimId, n_max: u32, config: Option<WitnessConfig>) -> Self {
        ClaimReport {
            claim_id,
            range: json!({ "n_max": n_max }),
            config: config.map(|c| c.id()),
            status: Status::Verified,
            checked: 0,
            counterexamples: Vec::new(),
            flags: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn push(&mut self, c: Counterexample) {
        self.status = Status::CounterexamplesFound;
        self.counterexamples.push(c);
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }
}

/// Compares `P^k_r` with `target`, stopping as soon as the partial product
/// exceeds it.
fn cmp_falling(k: &BigNat, r: u64, target: &BigNat) -> Ordering {
    let mut acc = BigNat::one();
    match k.to_u64() {
        Some(k) => {
            for j in 0..r {
                acc *= k - j;
                if &acc > target {
                    return Ordering::Greater;
                }
            }
        }
        None => {
            let mut term = k.clone();
            for _ in 0..r {
                acc *= &term;
                if &acc > target {
                    return Ordering::Greater;
                }
                term -= 1u32;
            }
        }
    }
    acc.cmp(target)
}

/// Every `(top, sub)` with `sub >= min_sub`, `1 <= sub < top` and
/// `P^top_sub = value`, sorted by `sub`.
///
/// The search is complete: `P^k_r >= (r+1)!` bounds `r`, `r! | P^k_r`
/// discards most subscripts, and for each remaining `r` the top lies in
/// `[value^(1/r), value^(1/r) + r - 1]`, where `k -> P^k_r` is increasing.
pub fn representations(value: &BigNat, min_sub: u64) -> Vec<Representation> {
    let mut out = Vec::new();
    let min_sub = min_sub.max(1);
    let mut r_fact = crate::numtheory::factorial(min_sub);
    let mut r = min_sub;
    loop {
        // smallest label with subscript r is P^(r+1)_r = (r+1)!
        let next_fact = &r_fact * (r + 1);
        if &next_fact > value {
            break;
        }
        if (value % &r_fact) == BigNat::ZERO {
            if r == 1 {
                out.push(Representation { top: value.clone(), sub: 1 });
            } else if let Some(top) = solve_top(value, r) {
                out.push(Representation { top, sub: r });
            }
        }
        r_fact = next_fact;
        r += 1;
    }
    out
}

/// The unique `k > r` with `P^k_r = value`, if any.
fn solve_top(value: &BigNat, r: u64) -> Option<BigNat> {
    let root = value.nth_root(r as u32);
    let mut lo = root.clone().max(BigNat::from(r + 1));
    let mut hi = root + (r - 1);
    if lo > hi {
        return None;
    }
    // smallest k in [lo, hi] with P^k_r >= value
    while lo < hi {
        let mid: BigNat = (&lo + &hi) >> 1;
        if cmp_falling(&mid, r, value) == Ordering::Less {
            lo = mid + 1u32;
        } else {
            hi = mid;
        }
    }
    (cmp_falling(&lo, r, value) == Ordering::Equal).then_some(lo)
}

fn require(n_max: u32, min: u32) -> Result<()> {
    if n_max < min {
        return Err(Error::TooFewVertices { n: n_max as u64, min: min as u64 });
    }
    Ok(())
}

/// For every `k <= n_max` and `m` with `m! < k`: every `P^h_r` with
/// `1 <= r <= h < k` is below `P^k_(k-m), ..., P^k_(k-1)`.
pub fn check_l1(n_max: u32) -> Result<ClaimReport> {
    require(n_max, 3)?;
    let mut report = ClaimReport::new(ClaimId::L1, n_max, None);
    report.notes.push("hypothesis taken as m! < k".into());
    // running maximum of P^h_r over 1 <= r <= h < k
    let mut below_max = BigNat::one();
    let mut below_arg = (1u64, 1u64);
    for k in 2..=n_max as u64 {
        if k >= 3 {
            let row: Vec<BigNat> = (0..=k).scan(BigNat::one(), |acc, i| {
                if i > 0 {
                    *acc *= k - i + 1;
                }
                Some(acc.clone())
            })
            .collect();
            let mut m = 1u64;
            while m < k && crate::numtheory::factorial_u64(m).is_some_and(|f| f < k) {
                for i in k - m..k {
                    report.checked += 1;
                    if row[i as usize] <= below_max {
                        report.push(Counterexample {
                            params: json!({ "k": k, "m": m, "i": i, "h": below_arg.0, "r": below_arg.1 }),
                            value_decimal: row[i as usize].to_string(),
                            other_representation: Some(Representation {
                                top: BigNat::from(below_arg.0),
                                sub: below_arg.1,
                            }),
                        });
                    }
                }
                m += 1;
            }
        }
        // fold row h = k into the running maximum before moving to k + 1
        let mut acc = BigNat::one();
        for r in 1..=k {
            acc *= k - r + 1;
            if acc > below_max {
                below_max = acc.clone();
                below_arg = (k, r);
            }
        }
    }
    Ok(report)
}

fn check_no_representation(
    report: &mut ClaimReport,
    value: &BigNat,
    min_sub: u64,
    params: impl Fn() -> Value,
) {
    report.checked += 1;
    for rep in representations(value, min_sub) {
        report.push(Counterexample {
            params: params(),
            value_decimal: value.to_string(),
            other_representation: Some(rep),
        });
    }
}

/// For primes `q <= n_max - 1` and `s >= 2` with `q > s + sqrt(s+1)`:
/// `P^(q+1)_s` is no `P^k_r` with `r > s`.
pub fn check_l2(n_max: u32) -> Result<ClaimReport> {
    require(n_max, 3)?;
    let mut report = ClaimReport::new(ClaimId::L2, n_max, None);
    for &q in primes_upto(n_max as u64).upto(n_max as u64 - 1) {
        let mut s = 2u64;
        let mut value = falling_factorial_unchecked(q + 1, 2);
        while exceeds_s_plus_sqrt(q, s) {
            check_no_representation(&mut report, &value, s + 1, || json!({ "q": q, "s": s }));
            value *= q + 1 - s;
            s += 1;
        }
    }
    Ok(report)
}

/// For primes `q <= n_max - 2` and `s >= 3` with `q > 4s`:
/// `P^(q+2)_s` is no `P^k_r` with `r > s`.
pub fn check_l3(n_max: u32) -> Result<ClaimReport> {
    require(n_max, 3)?;
    let mut report = ClaimReport::new(ClaimId::L3, n_max, None);
    for &q in primes_upto(n_max as u64).upto(n_max.saturating_sub(2) as u64) {
        let mut s = 3u64;
        let mut value = falling_factorial_unchecked(q + 2, 3);
        while 4 * s < q {
            check_no_representation(&mut report, &value, s + 1, || json!({ "q": q, "s": s }));
            value *= q + 2 - s;
            s += 1;
        }
    }
    Ok(report)
}

fn element_params(e: &WitnessElement) -> Value {
    let mut v = serde_json::to_value(e.params).expect("params serialize");
    v["set"] = json!(e.set.to_string());
    v["top"] = json!(e.top);
    v["sub"] = json!(e.sub);
    v
}

/// Every `S4`/`S5` element with top `<= n_max` has no representation with
/// subscript `>= ql`.
pub fn check_l4(n_max: u32) -> Result<ClaimReport> {
    require(n_max, 3)?;
    let mut report = ClaimReport::new(ClaimId::L4, n_max, None);
    for set in [s4(n_max, false)?, s5(n_max, false)?] {
        for e in &set.elements {
            // subscript is ql - 1
            check_no_representation(&mut report, &e.value, e.sub as u64 + 1, || element_params(e));
        }
    }
    Ok(report)
}

/// For prime powers `q^h != 3` with `2 q^h <= n_max`: `2 q^h` is no
/// `P^k_r` with `r >= 2`.
pub fn check_l5(n_max: u32) -> Result<ClaimReport> {
    require(n_max, 3)?;
    let mut report = ClaimReport::new(ClaimId::L5, n_max, None);
    for x in 2..=(n_max / 2) as u64 {
        if x == 3 {
            continue;
        }
        if let Some((q, h)) = prime_power_decompose(x) {
            check_no_representation(&mut report, &BigNat::from(2 * x), 2, || json!({ "q": q, "h": h }));
        }
    }
    Ok(report)
}

/// `S1(n) ∩ S_i(n)` for `i = 2..6` and every `n <= n_max`.
///
/// Membership is monotone in `n`, so each shared value is reported once
/// with the first `n` at which both sets contain it.
pub fn check_t32(n_max: u32, cfg: WitnessConfig) -> Result<ClaimReport> {
    require(n_max, 3)?;
    let mut report = ClaimReport::new(ClaimId::T32, n_max, Some(cfg));
    report.notes.push("S4 and S5 use their literal definitions; shared values are reported, not removed".into());
    let sets = WitnessSets::generate(n_max, cfg)?;
    let mut first_in_s1: BTreeMap<&BigNat, &WitnessElement> = BTreeMap::new();
    for e in &sets.get(SetId::S1).elements {
        let slot = first_in_s1.entry(&e.value).or_insert(e);
        if e.appears_from < slot.appears_from {
            *slot = e;
        }
    }
    for id in [SetId::S2, SetId::S3, SetId::S4, SetId::S5, SetId::S6] {
        let mut hits: BTreeMap<&BigNat, (u32, &WitnessElement, &WitnessElement)> = BTreeMap::new();
        for e in &sets.get(id).elements {
            report.checked += 1;
            if let Some(&s1e) = first_in_s1.get(&e.value) {
                let n_first = e.appears_from.max(s1e.appears_from);
                let slot = hits.entry(&e.value).or_insert((n_first, s1e, e));
                if n_first < slot.0 {
                    *slot = (n_first, s1e, e);
                }
            }
        }
        for (value, (n_first, s1e, other)) in hits {
            report.push(Counterexample {
                params: json!({
                    "intersection": format!("S1∩{id}"),
                    "n_first": n_first,
                    "s1": element_params(s1e),
                    "other": element_params(other),
                }),
                value_decimal: value.to_string(),
                other_representation: Some(Representation { top: BigNat::from(other.top), sub: other.sub as u64 }),
            });
        }
    }
    Ok(report)
}

/// `|W_h(n)| = i_h - h` for `3 <= n <= n_max`, `2 <= h <= m_n - 1`.
pub fn check_t41(n_max: u32) -> Result<ClaimReport> {
    require(n_max, 3)?;
    let mut report = ClaimReport::new(ClaimId::T41, n_max, None);
    for n in 3..=n_max as u64 {
        let m = m_index(n)? as u64;
        for h in 2..m {
            report.checked += 1;
            let direct = w_h_direct(n, h).len() as u64;
            let formula = i_h(n, h) - h;
            if direct != formula {
                report.push(Counterexample {
                    params: json!({ "n": n, "h": h, "direct": direct, "formula": formula }),
                    value_decimal: direct.to_string(),
                    other_representation: None,
                });
            }
        }
    }
    Ok(report)
}

fn sandwich_reports(n_max: u32, cfg: WitnessConfig, oracle_cap: u32) -> Result<Vec<crate::bounds::BoundReport>> {
    require(n_max, 3)?;
    if n_max > oracle_cap {
        return Err(Error::OracleCap { n: n_max as u64, cap: oracle_cap as u64 });
    }
    sweep(3, n_max, cfg, oracle_cap)
}

/// `lower_union(n) < D(n)` for `3 <= n <= n_max`. Only `lower_union > D(n)`
/// is a counterexample; equality is flagged.
pub fn check_t31(n_max: u32, cfg: WitnessConfig, oracle_cap: u32) -> Result<ClaimReport> {
    let rows = sandwich_reports(n_max, cfg, oracle_cap)?;
    let mut report = ClaimReport::new(ClaimId::T31, n_max, Some(cfg));
    report.notes.push("equality lower_union = D(n) is flagged, not counted as a counterexample".into());
    for row in &rows {
        lower_side(&mut report, row);
    }
    Ok(report)
}

/// `D(n) <= upper(n)` for `3 <= n <= n_max`.
pub fn check_t43(n_max: u32, oracle_cap: u32) -> Result<ClaimReport> {
    let rows = sandwich_reports(n_max, WitnessConfig::default(), oracle_cap)?;
    let mut report = ClaimReport::new(ClaimId::T43, n_max, None);
    for row in &rows {
        upper_side(&mut report, row);
    }
    Ok(report)
}

/// Both sides at once: `lower_union(n) <= D(n) <= upper(n)`. Reported under
/// `T31` with `T43` counterexamples tagged by `side`.
pub fn check_sandwich(n_max: u32, cfg: WitnessConfig, oracle_cap: u32) -> Result<ClaimReport> {
    let rows = sandwich_reports(n_max, cfg, oracle_cap)?;
    let mut report = ClaimReport::new(ClaimId::T31, n_max, Some(cfg));
    report.notes.push("sandwich lower_union <= D(n) <= upper(n); equality on the lower side is flagged".into());
    for row in &rows {
        lower_side(&mut report, row);
        upper_side(&mut report, row);
    }
    Ok(report)
}

fn lower_side(report: &mut ClaimReport, row: &crate::bounds::BoundReport) {
    let exact = row.exact.expect("within oracle cap");
    report.checked += 1;
    if row.lower_union > exact {
        report.push(Counterexample {
            params: json!({ "side": "lower", "n": row.n, "lower_union": row.lower_union, "exact": exact }),
            value_decimal: row.lower_union.to_string(),
            other_representation: None,
        });
    } else if row.lower_union == exact {
        report.flags.push(Flag { n: row.n, note: format!("lower_union = D(n) = {exact}; strict inequality fails") });
    }
}

fn upper_side(report: &mut ClaimReport, row: &crate::bounds::BoundReport) {
    let exact = row.exact.expect("within oracle cap");
    report.checked += 1;
    if exact as u64 > row.upper {
        report.push(Counterexample {
            params: json!({ "side": "upper", "n": row.n, "upper": row.upper, "exact": exact }),
            value_decimal: exact.to_string(),
            other_representation: None,
        });
    }
}

/// Runs one claim with the given range and settings.
pub fn run_claim(id: ClaimId, n_max: u32, cfg: WitnessConfig, oracle_cap: u32) -> Result<ClaimReport> {
    match id {
        ClaimId::L1 => check_l1(n_max),
        ClaimId::L2 => check_l2(n_max),
        ClaimId::L3 => check_l3(n_max),
        ClaimId::L4 => check_l4(n_max),
        ClaimId::L5 => check_l5(n_max),
        ClaimId::T31 => check_t31(n_max, cfg, oracle_cap),
        ClaimId::T32 => check_t32(n_max, cfg),
        ClaimId::T41 => check_t41(n_max),
        ClaimId::T43 => check_t43(n_max, oracle_cap),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labels::{CollisionTable, TableMode};
    use crate::numtheory::falling_factorial;
    use std::collections::BTreeSet;

    fn big(x: u64) -> BigNat {
        BigNat::from(x)
    }

    fn reps(v: u64, min_sub: u64) -> Vec<(u64, u64)> {
        representations(&big(v), min_sub).into_iter().map(|r| (r.top.to_u64().unwrap(), r.sub)).collect()
    }

    #[test]
    fn representation_examples() {
        assert_eq!(reps(120, 1), vec![(120, 1), (6, 3), (5, 4)]);
        assert_eq!(reps(6, 2), vec![(3, 2)]);
        assert!(reps(30, 3).is_empty());
        assert!(reps(2730, 4).is_empty());
        assert!(reps(3, 2).is_empty());
        assert!(reps(4, 2).is_empty());
        assert_eq!(reps(20, 2), vec![(5, 2)]);
        assert!(reps(20, 3).is_empty());
        assert_eq!(reps(5040, 2), vec![(10, 4), (7, 6)]);
    }

    #[test]
    fn representation_with_huge_top() {
        let k = (BigNat::one() << 200u32) + 12345u32;
        let v = crate::numtheory::falling_factorial_big(&k, 3);
        let found = representations(&v, 2);
        assert_eq!(found, vec![Representation { top: k, sub: 3 }]);
    }

    /// Integer search vs brute-force scan over all pairs with top <= n.
    #[test]
    fn search_matches_collision_table() {
        let n = 120;
        let table = CollisionTable::build(n, TableMode::Exact).unwrap();
        for class in table.classes() {
            let value = class.value();
            let brute: BTreeSet<(u64, u64)> =
                class.pairs().iter().map(|p| (p.high as u64, p.low as u64)).collect();
            let searched: BTreeSet<(u64, u64)> = representations(&value, 1)
                .into_iter()
                .filter_map(|r| r.top.to_u64().filter(|&t| t <= n as u64).map(|t| (t, r.sub)))
                .collect();
            assert_eq!(searched, brute, "value {value}");
        }
    }

    #[test]
    fn l1_small_instances() {
        assert!(falling_factorial(2, 1).unwrap() < falling_factorial(3, 1).unwrap());
        assert!(falling_factorial(5, 4).unwrap() < falling_factorial(6, 4).unwrap());
        assert_eq!(falling_factorial(6, 4).unwrap(), big(360));
        let r = check_l1(30).unwrap();
        assert!(r.is_verified(), "{r:?}");
        assert!(r.checked > 0);
    }

    #[test]
    fn lemma_checks_small_ranges() {
        for r in [check_l2(80).unwrap(), check_l3(80).unwrap(), check_l4(80).unwrap(), check_l5(200).unwrap()] {
            assert!(r.is_verified(), "{r:?}");
            assert!(r.checked > 0, "{:?}", r.claim_id);
        }
    }

    #[test]
    fn l3_gate_and_instance() {
        assert!(representations(&falling_factorial(15, 3).unwrap(), 4).is_empty());
        assert_eq!(falling_factorial(15, 3).unwrap(), big(2730));
        // (q=11, s=3) is excluded: 11 < 12
        let r = check_l3(13).unwrap();
        assert_eq!(r.checked, 0);
        assert_eq!(check_l3(15).unwrap().checked, 1);
    }

    #[test]
    fn l5_excluded_case() {
        assert_eq!(reps(6, 2), vec![(3, 2)]);
    }

    #[test]
    fn t32_reports_shared_value_3() {
        let r = check_t32(6, WitnessConfig::default()).unwrap();
        assert_eq!(r.status, Status::CounterexamplesFound);
        let s4: Vec<_> = r
            .counterexamples
            .iter()
            .filter(|c| c.params["intersection"] == "S1∩S4")
            .collect();
        assert_eq!(s4.len(), 1);
        assert_eq!(s4[0].value_decimal, "3");
        assert_eq!(s4[0].params["n_first"], 3);
        for c in &r.counterexamples {
            let i = &c.params["intersection"];
            assert!(i == "S1∩S4" || i == "S1∩S5", "{c:?}");
        }
    }

    /// Thresholded intersections vs per-n generation.
    #[test]
    fn t32_matches_per_n_intersections() {
        let cfg = WitnessConfig::default();
        let n_max = 40;
        let report = check_t32(n_max, cfg).unwrap();
        let mut expected = BTreeSet::new();
        for n in 3..=n_max {
            let ws = WitnessSets::generate(n, cfg).unwrap();
            let s1 = &ws.get(SetId::S1).values;
            for id in [SetId::S2, SetId::S3, SetId::S4, SetId::S5, SetId::S6] {
                for v in s1.intersection(&ws.get(id).values) {
                    expected.insert((format!("S1∩{id}"), v.to_string()));
                }
            }
        }
        let got: BTreeSet<_> = report
            .counterexamples
            .iter()
            .map(|c| (c.params["intersection"].as_str().unwrap().to_string(), c.value_decimal.clone()))
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn counterexamples_are_recheckable() {
        let r = check_t32(60, WitnessConfig::default()).unwrap();
        assert!(!r.counterexamples.is_empty());
        for c in &r.counterexamples {
            let s1 = &c.params["s1"];
            let v = falling_factorial(s1["top"].as_u64().unwrap(), s1["sub"].as_u64().unwrap()).unwrap();
            assert_eq!(v.to_string(), c.value_decimal);
            assert_eq!(c.other_representation.as_ref().unwrap().value().to_string(), c.value_decimal);
        }
    }

    #[test]
    fn t41_and_sandwich_small() {
        assert!(check_t41(800).unwrap().is_verified());
        let r = check_sandwich(40, WitnessConfig::default(), 300).unwrap();
        assert!(r.is_verified(), "{r:?}");
        assert!(r.flags.iter().any(|f| f.n == 6));
        assert!(check_sandwich(400, WitnessConfig::default(), 300).is_err());
        assert!(check_t43(40, 300).unwrap().is_verified());
    }

    #[test]
    fn report_json_shape() {
        let r = check_t32(6, WitnessConfig::default()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        for key in ["claim_id", "range", "config", "status", "counterexamples"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["status"], "counterexamples_found");
        assert_eq!(v["claim_id"], "T32");
        let c = &v["counterexamples"][0];
        assert!(c["other_representation"]["top"].is_string());
        assert!(c.get("params").is_some() && c.get("value_decimal").is_some());
    }

    #[test]
    fn claim_id_parsing() {
        assert_eq!("l3".parse::<ClaimId>().unwrap(), ClaimId::L3);
        assert_eq!("T41".parse::<ClaimId>().unwrap(), ClaimId::T41);
        assert!("L9".parse::<ClaimId>().is_err());
    }
}
