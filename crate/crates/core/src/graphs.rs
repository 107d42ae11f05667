//! Vertex-labeled graphs: permutation-labeling and maximality checks,
//! constructors for maximal permutation graphs, and text export.
//!
//! Maximality is checked against the graph's own labeling: a permutation
//! graph is maximal when each non-edge would repeat the label of an edge
//! already present.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::labels::{CollisionTable, Pair, TableMode};
use crate::numtheory::{falling_factorial_unchecked, BigNat};

/// A graph on vertices `1..=n` with a bijective labeling onto `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLabeledGraph {
    n: u32,
    /// `labeling[v - 1]` is the label of vertex `v`.
    labeling: Vec<u32>,
    /// Unordered edges stored as `(u, v)` with `u < v`.
    edges: BTreeSet<(u32, u32)>,
}

impl VertexLabeledGraph {
    /// Edgeless graph with the identity labeling.
    pub fn new(n: u32) -> Self {
        VertexLabeledGraph { n, labeling: (1..=n).collect(), edges: BTreeSet::new() }
    }

    pub fn with_labeling(labeling: Vec<u32>) -> Result<Self> {
        let n = labeling.len() as u32;
        let mut seen = vec![false; labeling.len()];
        for &l in &labeling {
            if l == 0 || l > n || std::mem::replace(&mut seen[l as usize - 1], true) {
                return Err(Error::InvalidGraph(format!("labeling {labeling:?} is not a bijection onto 1..={n}")));
            }
        }
        Ok(VertexLabeledGraph { n, labeling, edges: BTreeSet::new() })
    }

    pub fn complete(n: u32) -> Self {
        let mut g = Self::new(n);
        for u in 1..=n {
            for v in u + 1..=n {
                g.edges.insert((u, v));
            }
        }
        g
    }

    pub fn from_edges(n: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Reads whitespace-separated vertex pairs (1-based). Blank lines and
    /// lines starting with `#` are skipped. Without `n`, the largest vertex
    /// seen is used.
    pub fn parse_edge_list(text: &str, n: Option<u32>) -> Result<Self> {
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let nums = line
                .split_whitespace()
                .map(u32::from_str)
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse { line: idx + 1, msg: e.to_string() })?;
            if nums.len() % 2 != 0 {
                return Err(Error::Parse { line: idx + 1, msg: "odd number of vertices".into() });
            }
            pairs.extend(nums.chunks(2).map(|c| (c[0], c[1])));
        }
        let n = n.unwrap_or_else(|| pairs.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0));
        Self::from_edges(n, pairs)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn label(&self, v: u32) -> u32 {
        self.labeling[v as usize - 1]
    }

    pub fn labeling(&self) -> &[u32] {
        &self.labeling
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Adds `{u, v}`; returns whether it was new.
    pub fn add_edge(&mut self, u: u32, v: u32) -> Result<bool> {
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at {u}")));
        }
        if u == 0 || v == 0 || u > self.n || v > self.n {
            return Err(Error::InvalidGraph(format!("edge ({u}, {v}) outside 1..={}", self.n)));
        }
        Ok(self.edges.insert((u.min(v), u.max(v))))
    }

    pub fn remove_edge(&mut self, u: u32, v: u32) -> bool {
        self.edges.remove(&(u.min(v), u.max(v)))
    }

    /// The label pair an edge `{u, v}` induces.
    pub fn label_pair(&self, u: u32, v: u32) -> Pair {
        let (a, b) = (self.label(u), self.label(v));
        Pair::new(a.min(b), a.max(b))
    }

    /// `P^max_min` of the vertex labels of `u` and `v`.
    pub fn induced_label(&self, u: u32, v: u32) -> BigNat {
        let p = self.label_pair(u, v);
        falling_factorial_unchecked(p.high as u64, p.low as u64)
    }

    fn non_edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (1..=self.n).flat_map(move |u| (u + 1..=self.n).map(move |v| (u, v))).filter(|e| !self.edges.contains(e))
    }
}

/// True iff all induced edge labels are distinct.
pub fn is_permutation_labeling(g: &VertexLabeledGraph) -> bool {
    let mut seen = HashSet::with_capacity(g.edge_count());
    g.edges().all(|(u, v)| seen.insert(g.induced_label(u, v)))
}

/// True iff no non-edge can be added without repeating a label.
pub fn is_maximal(g: &VertexLabeledGraph) -> Result<bool> {
    if !is_permutation_labeling(g) {
        return Err(Error::NotPermutation("two edges share an induced label".into()));
    }
    let present: HashSet<BigNat> = g.edges().map(|(u, v)| g.induced_label(u, v)).collect();
    Ok(g.non_edges().all(|(u, v)| present.contains(&g.induced_label(u, v))))
}

/// Which pair to keep from each collision class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Policy {
    LexMin,
    LexMax,
    SeededRandom(u64),
}

/// Identity-labeled maximal permutation graph with one edge per collision class.
pub fn maximal_graph(n: u32, policy: Policy) -> Result<VertexLabeledGraph> {
    let table = CollisionTable::build(n, TableMode::Exact)?;
    let mut rng = match policy {
        Policy::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut g = VertexLabeledGraph::new(n);
    for class in table.classes() {
        let pairs = class.pairs();
        let pick = match (&mut rng, policy) {
            (Some(rng), _) => pairs[rng.gen_range(0..pairs.len())],
            (None, Policy::LexMax) => pairs[pairs.len() - 1],
            _ => pairs[0],
        };
        g.add_edge(pick.low, pick.high)?;
    }
    Ok(g)
}

/// Limits for [`enumerate_maximal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationCaps {
    pub max_n: u32,
    pub max_graphs: u128,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps { max_n: 12, max_graphs: 1_000_000 }
    }
}

/// Every identity-labeled maximal permutation graph on `n` vertices: one
/// pair chosen from each collision class. Classes are taken in increasing
/// value order and the last class varies fastest.
pub fn enumerate_maximal(n: u32, caps: EnumerationCaps) -> Result<MaximalGraphs> {
    if n > caps.max_n {
        return Err(Error::EnumerationCap { what: "n", actual: n as u128, cap: caps.max_n as u128 });
    }
    let table = CollisionTable::build(n, TableMode::Exact)?;
    let classes: Vec<Vec<Pair>> =
        table.classes_by_value().into_iter().map(|(_, c)| c.pairs().to_vec()).collect();
    let total = classes.iter().try_fold(1u128, |acc, c| acc.checked_mul(c.len() as u128));
    match total {
        Some(t) if t <= caps.max_graphs => Ok(MaximalGraphs { n, choice: vec![0; classes.len()], classes, remaining: t }),
        _ => Err(Error::EnumerationCap { what: "graph count", actual: total.unwrap_or(u128::MAX), cap: caps.max_graphs }),
    }
}

/// Iterator returned by [`enumerate_maximal`].
#[derive(Debug, Clone)]
pub struct MaximalGraphs {
    n: u32,
    classes: Vec<Vec<Pair>>,
    choice: Vec<usize>,
    remaining: u128,
}

impl MaximalGraphs {
    pub fn total(&self) -> u128 {
        self.remaining
    }
}

impl Iterator for MaximalGraphs {
    type Item = VertexLabeledGraph;

    fn next(&mut self) -> Option<VertexLabeledGraph> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let mut g = VertexLabeledGraph::new(self.n);
        for (class, &c) in self.classes.iter().zip(&self.choice) {
            g.edges.insert((class[c].low, class[c].high));
        }
        for (class, c) in self.classes.iter().zip(self.choice.iter_mut()).rev() {
            *c += 1;
            if *c < class.len() {
                break;
            }
            *c = 0;
        }
        Some(g)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    EdgeList,
    Dot,
}

pub fn export_graph(g: &VertexLabeledGraph, format: ExportFormat) -> String {
    let mut out = String::new();
    match format {
        ExportFormat::EdgeList => {
            for (u, v) in g.edges() {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
        ExportFormat::Dot => {
            out.push_str("graph G {\n");
            for v in 1..=g.n() {
                writeln!(out, "  {v} [label=\"{}\"];", g.label(v)).unwrap();
            }
            for (u, v) in g.edges() {
                writeln!(out, "  {u} -- {v};").unwrap();
            }
            out.push_str("}\n");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_set(g: &VertexLabeledGraph) -> BTreeSet<(u32, u32)> {
        g.edges().collect()
    }

    fn complement_in_k(n: u32, missing: &[(u32, u32)]) -> VertexLabeledGraph {
        let mut g = VertexLabeledGraph::complete(n);
        for &(u, v) in missing {
            assert!(g.remove_edge(u, v));
        }
        g
    }

    fn six_vertex_maximal_graphs() -> [VertexLabeledGraph; 2] {
        [complement_in_k(6, &[(1, 6), (3, 6)]), complement_in_k(6, &[(1, 6), (4, 5)])]
    }

    #[test]
    fn complete_graphs() {
        for n in 2..=5 {
            assert!(is_permutation_labeling(&VertexLabeledGraph::complete(n)));
        }
        for n in 6..=10 {
            assert!(!is_permutation_labeling(&VertexLabeledGraph::complete(n)));
        }
        assert!(is_maximal(&VertexLabeledGraph::complete(5)).unwrap());
        assert!(matches!(is_maximal(&VertexLabeledGraph::complete(6)), Err(Error::NotPermutation(_))));
    }

    #[test]
    fn six_vertex_maximal_graphs_are_maximal() {
        for g in six_vertex_maximal_graphs() {
            assert_eq!(g.edge_count(), 13);
            assert!(is_permutation_labeling(&g));
            assert!(is_maximal(&g).unwrap());
        }
        let mut g = six_vertex_maximal_graphs()[0].clone();
        g.remove_edge(2, 3);
        assert!(is_permutation_labeling(&g));
        assert!(!is_maximal(&g).unwrap());
    }

    #[test]
    fn relabeling_changes_labels() {
        // Swapping labels of vertices 1 and 2 maps edge {1,3} to label pair (2,3).
        let mut g = VertexLabeledGraph::with_labeling(vec![2, 1, 3]).unwrap();
        g.add_edge(1, 3).unwrap();
        assert_eq!(g.induced_label(1, 3), BigNat::from(6u32));
        g.add_edge(2, 3).unwrap();
        assert_eq!(g.induced_label(2, 3), BigNat::from(3u32));
        assert!(is_permutation_labeling(&g));
        assert!(VertexLabeledGraph::with_labeling(vec![1, 1, 3]).is_err());
        assert!(VertexLabeledGraph::with_labeling(vec![1, 4, 3]).is_err());
    }

    #[test]
    fn relabeled_six_vertex_graph_is_still_checked_against_its_labels() {
        // The identity-labeled Fig. 1 graph, with vertex 6 and vertex 1 swapping labels.
        let base = &six_vertex_maximal_graphs()[0];
        let mut g = VertexLabeledGraph::with_labeling(vec![6, 2, 3, 4, 5, 1]).unwrap();
        for (u, v) in base.edges() {
            let map = |x: u32| if x == 1 { 6 } else if x == 6 { 1 } else { x };
            g.add_edge(map(u), map(v)).unwrap();
        }
        assert!(is_permutation_labeling(&g));
        assert!(is_maximal(&g).unwrap());
    }

    #[test]
    fn bad_edges_rejected() {
        let mut g = VertexLabeledGraph::new(3);
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(1, 4).is_err());
        assert!(g.add_edge(2, 1).unwrap());
        assert!(!g.add_edge(1, 2).unwrap());
    }

    #[test]
    fn maximal_graph_policies() {
        let g = maximal_graph(6, Policy::LexMin).unwrap();
        assert_eq!(g.edge_count(), 13);
        assert!(g.has_edge(2, 3) && g.has_edge(4, 5));
        assert!(!g.has_edge(1, 6) && !g.has_edge(3, 6));
        let g = maximal_graph(6, Policy::LexMax).unwrap();
        assert!(g.has_edge(1, 6) && g.has_edge(3, 6));
        for policy in [Policy::LexMin, Policy::LexMax, Policy::SeededRandom(7)] {
            assert_eq!(maximal_graph(5, policy).unwrap(), VertexLabeledGraph::complete(5));
        }
    }

    #[test]
    fn maximal_graphs_have_oracle_edge_count() {
        for n in 2..=40 {
            let d = CollisionTable::build(n, TableMode::Exact).unwrap().distinct_count();
            for policy in [Policy::LexMin, Policy::LexMax, Policy::SeededRandom(0), Policy::SeededRandom(99)] {
                let g = maximal_graph(n, policy).unwrap();
                assert_eq!(g.edge_count(), d, "n={n} {policy:?}");
                assert!(is_maximal(&g).unwrap());
            }
        }
        assert_eq!(
            maximal_graph(30, Policy::SeededRandom(5)).unwrap(),
            maximal_graph(30, Policy::SeededRandom(5)).unwrap()
        );
    }

    #[test]
    fn removing_a_colliding_edge_breaks_maximality() {
        let table = CollisionTable::build(12, TableMode::Exact).unwrap();
        let g = maximal_graph(12, Policy::LexMin).unwrap();
        for class in table.non_singletons() {
            let p = class.first();
            let mut h = g.clone();
            assert!(h.remove_edge(p.low, p.high));
            assert!(is_permutation_labeling(&h));
            assert!(!is_maximal(&h).unwrap());
        }
    }

    #[test]
    fn enumerate_n6() {
        let all: Vec<_> = enumerate_maximal(6, EnumerationCaps::default()).unwrap().collect();
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|g| g.edge_count() == 13));
        let sets: Vec<_> = all.iter().map(edge_set).collect();
        for six in six_vertex_maximal_graphs() {
            assert!(sets.contains(&edge_set(&six)));
        }
        let unique: BTreeSet<_> = sets.into_iter().collect();
        assert_eq!(unique.len(), 4);
        let five: Vec<_> = enumerate_maximal(5, EnumerationCaps::default()).unwrap().collect();
        assert_eq!(five, vec![VertexLabeledGraph::complete(5)]);
    }

    #[test]
    fn enumerate_counts_and_validity() {
        for n in 2..=12 {
            let table = CollisionTable::build(n, TableMode::Exact).unwrap();
            let expected: u128 = table.classes().iter().map(|c| c.size() as u128).product();
            let all: Vec<_> = enumerate_maximal(n, EnumerationCaps::default()).unwrap().collect();
            assert_eq!(all.len() as u128, expected, "n={n}");
            let unique: BTreeSet<_> = all.iter().map(edge_set).collect();
            assert_eq!(unique.len(), all.len());
            for g in &all {
                assert!(is_permutation_labeling(g) && is_maximal(g).unwrap());
            }
        }
    }

    #[test]
    fn enumerate_caps() {
        assert!(matches!(enumerate_maximal(13, EnumerationCaps::default()), Err(Error::EnumerationCap { .. })));
        let tight = EnumerationCaps { max_n: 12, max_graphs: 3 };
        assert!(matches!(enumerate_maximal(6, tight), Err(Error::EnumerationCap { .. })));
    }

    #[test]
    fn export_formats() {
        let k3 = VertexLabeledGraph::complete(3);
        assert_eq!(export_graph(&k3, ExportFormat::EdgeList), "1 2\n1 3\n2 3\n");
        let single = VertexLabeledGraph::from_edges(2, [(2, 1)]).unwrap();
        let dot = export_graph(&single, ExportFormat::Dot);
        assert_eq!(dot.matches("--").count(), 1);
        assert!(dot.starts_with("graph G {") && dot.contains("1 -- 2;"));
        let six = export_graph(&six_vertex_maximal_graphs()[0], ExportFormat::EdgeList);
        let lines: Vec<_> = six.lines().collect();
        assert_eq!(lines.len(), 13);
        let mut sorted = lines.clone();
        sorted.sort_by_key(|l| l.split(' ').map(|x| x.parse::<u32>().unwrap()).collect::<Vec<_>>());
        assert_eq!(lines, sorted);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = maximal_graph(9, Policy::SeededRandom(3)).unwrap();
        let text = export_graph(&g, ExportFormat::EdgeList);
        assert_eq!(VertexLabeledGraph::parse_edge_list(&text, Some(9)).unwrap(), g);
        let parsed = VertexLabeledGraph::parse_edge_list("# comment\n1 2 2 3\n\n3   4\n", None).unwrap();
        assert_eq!(parsed.n(), 4);
        assert_eq!(parsed.edge_count(), 3);
        assert!(matches!(VertexLabeledGraph::parse_edge_list("1 2\n3\n", None), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(VertexLabeledGraph::parse_edge_list("1 x\n", None), Err(Error::Parse { line: 1, .. })));
    }
}
