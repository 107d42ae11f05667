//! Lower and upper bounds on the edge count of a maximal permutation graph,
//! and per-`n` reports that sandwich the exact count between them.

use std::collections::BTreeSet;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::labels::{CollisionTable, TableMode};
use crate::numtheory::{falling_factorial_u64, m_index};
use crate::witness::{closed_form_cardinalities, ClosedForms, SetCards, WitnessConfig, WitnessFamily, WitnessSets};

/// CSV header of a [`BoundReport`] row.
pub const CSV_HEADER: [&str; 12] =
    ["n", "lower_formula", "lower_union", "delta", "upper", "exact", "s1", "s2", "s3", "s45", "s6", "config_id"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: u32,
    /// The printed closed-form lower bound, evaluated literally.
    pub lower_formula: i64,
    /// `|S1 ∪ ... ∪ S6|`, computed from the generated sets.
    pub lower_union: usize,
    pub delta: usize,
    pub upper: u64,
    /// Upper bound summing `|W_h|` over every `h` with a non-empty `W_h`.
    /// Not the published bound; reported as a diagnostic.
    pub upper_extended: u64,
    pub exact: Option<usize>,
    pub set_cards: SetCards,
    pub closed_forms: ClosedForms,
    pub config: WitnessConfig,
}

impl BoundReport {
    /// `lower_union <= exact <= upper`, or `None` without an exact count.
    pub fn sandwich_holds(&self) -> Option<bool> {
        self.exact.map(|d| self.lower_union <= d && d as u64 <= self.upper)
    }

    /// The lower bound is claimed strict; equality is worth flagging.
    pub fn lower_is_tight(&self) -> bool {
        self.exact == Some(self.lower_union)
    }

    pub fn csv_record(&self) -> [String; 12] {
        let c = &self.set_cards;
        [
            self.n.to_string(),
            self.lower_formula.to_string(),
            self.lower_union.to_string(),
            self.delta.to_string(),
            self.upper.to_string(),
            self.exact.map(|d| d.to_string()).unwrap_or_default(),
            c.s1.to_string(),
            c.s2.to_string(),
            c.s3.to_string(),
            c.s45.to_string(),
            c.s6.to_string(),
            self.config.id(),
        ]
    }
}

/// Writes reports as CSV, followed by an optional `# ...` comment line.
pub fn write_csv<W: Write>(reports: &[BoundReport], footer: Option<&str>, mut out: W) -> Result<()> {
    {
        let mut w = csv::Writer::from_writer(&mut out);
        w.write_record(CSV_HEADER)?;
        for r in reports {
            w.write_record(r.csv_record())?;
        }
        w.flush()?;
    }
    if let Some(line) = footer {
        writeln!(out, "# {line}")?;
    }
    Ok(())
}

/// [`sweep`] written as CSV with a trailing comment recording the settings.
pub fn write_sweep_csv<W: Write>(from: u32, to: u32, cfg: WitnessConfig, oracle_cap: u32, out: W) -> Result<()> {
    let rows = sweep(from, to, cfg, oracle_cap)?;
    let footer = format!(
        "config={} oracle_cap={} permlab={}",
        cfg.id(),
        oracle_cap,
        env!("CARGO_PKG_VERSION")
    );
    write_csv(&rows, Some(&footer), out)
}

fn lower_formula_of(closed: &ClosedForms, cards: &SetCards, delta: usize) -> i64 {
    closed.s1_formula + closed.s2_formula + cards.s45 as i64 + closed.s3_formula + closed.s6_formula
        - delta as i64
}

/// `(lower_formula, lower_union)` at `n`.
pub fn lower_bound(n: u32, cfg: WitnessConfig) -> Result<(i64, usize)> {
    let delta = WitnessSets::generate(n, cfg)?.delta();
    let closed = closed_form_cardinalities(n)?;
    Ok((lower_formula_of(&closed, &delta.cards, delta.delta), delta.union_size))
}

/// Largest `i > h` with `i (i-1) ... (i-h+1) <= n`, or `h` when there is none.
pub fn i_h(n: u64, h: u64) -> u64 {
    let fits = |i: u64| falling_factorial_u64(i, h).is_some_and(|v| v <= n);
    let mut i = h;
    while fits(i + 1) {
        i += 1;
    }
    i
}

/// `W_h(n) = { k in 3..=n : k = P^i_h for some i in 3..=n, i > h }`, by
/// enumerating `i`.
pub fn w_h_direct(n: u64, h: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for i in 3.max(h + 1)..=n {
        match falling_factorial_u64(i, h) {
            Some(k) if k <= n => {
                if k >= 3 {
                    out.insert(k);
                }
            }
            _ => break,
        }
    }
    out
}

/// `n(n-1)/2 - sum_{h=2}^{m_n - 1} (i_h - h)`.
pub fn upper_bound(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    let m = m_index(n)? as u64;
    let removed: u64 = (2..m).map(|h| i_h(n, h) - h).sum();
    Ok(n * (n - 1) / 2 - removed)
}

/// Like [`upper_bound`] but over every `h >= 2` whose `W_h(n)` is non-empty.
pub fn upper_bound_extended(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    let mut removed = 0;
    let mut h = 2;
    // W_h is non-empty iff (h+1)! <= n.
    while falling_factorial_u64(h + 1, h + 1).is_some_and(|f| f <= n) {
        removed += i_h(n, h) - h;
        h += 1;
    }
    Ok(n * (n - 1) / 2 - removed)
}

/// Full report at one `n`. With `with_exact`, `n` must be within `oracle_cap`.
pub fn sandwich_report(n: u32, cfg: WitnessConfig, with_exact: bool, oracle_cap: u32) -> Result<BoundReport> {
    let exact = if with_exact {
        if n > oracle_cap {
            return Err(Error::OracleCap { n: n as u64, cap: oracle_cap as u64 });
        }
        Some(CollisionTable::build(n, TableMode::Exact)?.distinct_count())
    } else {
        None
    };
    let delta = WitnessSets::generate(n, cfg)?.delta();
    let closed = closed_form_cardinalities(n)?;
    Ok(BoundReport {
        n,
        lower_formula: lower_formula_of(&closed, &delta.cards, delta.delta),
        lower_union: delta.union_size,
        delta: delta.delta,
        upper: upper_bound(n as u64)?,
        upper_extended: upper_bound_extended(n as u64)?,
        exact,
        set_cards: delta.cards,
        closed_forms: closed,
        config: cfg,
    })
}

/// Reports for every `n` in `from..=to`, sharing one witness family and one
/// collision table. Exact counts are filled in for `n <= oracle_cap`.
pub fn sweep(from: u32, to: u32, cfg: WitnessConfig, oracle_cap: u32) -> Result<Vec<BoundReport>> {
    if from < 3 {
        return Err(Error::TooFewVertices { n: from as u64, min: 3 });
    }
    if from > to {
        return Ok(Vec::new());
    }
    let family = WitnessFamily::new(to, cfg)?;
    let exact_top = to.min(oracle_cap);
    let exact_counts = if exact_top >= from {
        CollisionTable::build(exact_top, TableMode::Exact)?.distinct_counts_prefix()
    } else {
        Vec::new()
    };
    (from..=to)
        .map(|n| {
            let (cards, union, delta) = family.summary_at(n);
            let closed = closed_form_cardinalities(n)?;
            Ok(BoundReport {
                n,
                lower_formula: lower_formula_of(&closed, &cards, delta),
                lower_union: union,
                delta,
                upper: upper_bound(n as u64)?,
                upper_extended: upper_bound_extended(n as u64)?,
                exact: exact_counts.get(n as usize).copied(),
                set_cards: cards,
                closed_forms: closed,
                config: cfg,
            })
        })
        .collect()
}
