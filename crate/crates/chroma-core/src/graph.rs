//! Immutable simple-graph value type with set algebra over bitset rows.
//!
//! Vertices are dense labels `0..n-1`. Adjacency is stored as one bit row per
//! vertex (a single machine word up to 64 vertices, growing word-by-word
//! beyond). Graphs are immutable values: every "mutation" builds a new graph
//! and, where labels change, returns the relabeling map alongside.

use crate::error::Error;
use crate::Result;
use sha2::{Digest, Sha256};
use std::fmt;

const WORD_BITS: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A set of vertices backed by bit words.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    /// Empty set sized for a universe of `n` vertices.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            words: vec![0; words_for(n)],
        }
    }

    /// Full set `{0..n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_iter_n<I: IntoIterator<Item = usize>>(n: usize, it: I) -> Self {
        let mut s = Self::empty(n);
        for v in it {
            s.insert(v);
        }
        s
    }

    pub fn insert(&mut self, v: usize) {
        let w = v / WORD_BITS;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1u64 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        let w = v / WORD_BITS;
        if w < self.words.len() {
            self.words[w] &= !(1u64 << (v % WORD_BITS));
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        let w = v / WORD_BITS;
        w < self.words.len() && self.words[w] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Iterates members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            std::iter::successors(Some(w), |&w| Some(w & (w - 1)))
                .take_while(|&w| w != 0)
                .map(move |w| i * WORD_BITS + w.trailing_zeros() as usize)
        })
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_words<'a>(&'a self, other: &'a Self) -> impl Iterator<Item = (u64, u64)> + 'a {
        let len = self.words.len().max(other.words.len());
        (0..len).map(move |i| {
            (
                self.words.get(i).copied().unwrap_or(0),
                other.words.get(i).copied().unwrap_or(0),
            )
        })
    }

    pub fn union(&self, other: &Self) -> Self {
        VertexSet {
            words: self.zip_words(other).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        VertexSet {
            words: self.zip_words(other).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        VertexSet {
            words: self.zip_words(other).map(|(a, b)| a & !b).collect(),
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.zip_words(other).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        self.zip_words(other).all(|(a, b)| a & b == 0)
    }

    /// Low word of the set; only meaningful for universes with n <= 64.
    pub(crate) fn word0(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = VertexSet::default();
        for v in it {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Relabeling produced by vertex deletion / induced subgraphs.
///
/// `old_to_new[u]` is `None` when `u` was dropped; `new_to_old[v]` recovers
/// the original label of the surviving vertex `v`.
#[derive(Debug, Clone)]
pub struct Relabeling {
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

/// How the edge cut `[X, Y]` between two disjoint sets looks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutEdges {
    /// Every pair is an edge.
    Complete,
    /// No pair is an edge.
    Empty,
    /// Both kinds occur; witnesses are the lexicographically least pairs.
    Mixed {
        present: (usize, usize),
        missing: (usize, usize),
    },
}

/// Immutable simple undirected graph over vertices `0..n-1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Graph with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: vec![VertexSet::empty(n); n],
        }
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge_mut(u, v);
            }
        }
        g
    }

    /// Chordless path on `n` vertices in label order.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 1..n {
            g.add_edge_mut(u - 1, u);
        }
        g
    }

    /// Cycle on `n >= 3` vertices in label order.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge_mut(n - 1, 0);
        g
    }

    /// Builds a graph from an edge list. Self-loops are rejected; duplicate
    /// edges are tolerated.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            g.add_edge_mut(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge_mut(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.rows[u].contains(v)
    }

    /// Neighborhood N(v) as a set.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Adjacency rows as single words; available when n <= 64.
    pub(crate) fn rows64(&self) -> Option<Vec<u64>> {
        if self.n > WORD_BITS {
            return None;
        }
        Some(self.rows.iter().map(|r| r.word0()).collect())
    }

    fn check_range(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|&v| v >= self.n) {
            Some(v) => Err(Error::InvalidInput(format!(
                "vertex {v} out of range for n={}",
                self.n
            ))),
            None => Ok(()),
        }
    }

    /// Subgraph induced by `keep`, with the old-to-new relabeling map.
    /// Surviving vertices keep their relative order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<(Graph, Relabeling)> {
        self.check_range(keep)?;
        let new_to_old: Vec<usize> = keep.iter().collect();
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let mut g = Graph::empty(new_to_old.len());
        for (new_u, &old_u) in new_to_old.iter().enumerate() {
            for old_v in self.rows[old_u].intersection(keep).iter() {
                if old_v > old_u {
                    g.add_edge_mut(new_u, old_to_new[old_v].unwrap());
                }
            }
        }
        Ok((
            g,
            Relabeling {
                old_to_new,
                new_to_old,
            },
        ))
    }

    /// Deletes one vertex; shorthand for an induced subgraph on the rest.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Relabeling)> {
        if v >= self.n {
            return Err(Error::InvalidInput(format!("vertex {v} out of range")));
        }
        let mut keep = VertexSet::full(self.n);
        keep.remove(v);
        self.induced_subgraph(&keep)
    }

    /// Inserts a vertex at label `at` (existing labels >= `at` shift up by
    /// one), adjacent to `neighbors` (given in the labels of the new graph).
    /// Inverse of deleting vertex `at`; used to replay reduction traces.
    pub fn insert_vertex(&self, at: usize, neighbors: &VertexSet) -> Result<Graph> {
        if at > self.n {
            return Err(Error::InvalidInput(format!(
                "insertion point {at} out of range"
            )));
        }
        let n = self.n + 1;
        let mut g = Graph::empty(n);
        let lift = |v: usize| if v >= at { v + 1 } else { v };
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if v > u {
                    g.add_edge_mut(lift(u), lift(v));
                }
            }
        }
        for v in neighbors.iter() {
            if v >= n {
                return Err(Error::InvalidInput(format!("neighbor {v} out of range")));
            }
            if v == at {
                return Err(Error::InvalidInput("self-loop on inserted vertex".into()));
            }
            g.add_edge_mut(at, v);
        }
        Ok(g)
    }

    /// Complement graph; an involution.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge_mut(u, v);
                }
            }
        }
        g
    }

    /// Relabels the graph by a permutation: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidInput("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::InvalidInput("not a permutation".into()));
            }
            seen[p] = true;
        }
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if v > u {
                    g.add_edge_mut(perm[u], perm[v]);
                }
            }
        }
        Ok(g)
    }

    /// Connected components as vertex sets, sorted by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            let mut stack = vec![start];
            comp.insert(start);
            seen.insert(start);
            while let Some(u) = stack.pop() {
                for v in self.rows[u].difference(&seen).iter() {
                    seen.insert(v);
                    comp.insert(v);
                    stack.push(v);
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Restriction of components to a vertex subset: components of G[S],
    /// reported in the labels of `self`.
    pub fn components_within(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for start in s.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            let mut stack = vec![start];
            comp.insert(start);
            seen.insert(start);
            while let Some(u) = stack.pop() {
                for v in self.rows[u].intersection(s).difference(&seen).iter() {
                    seen.insert(v);
                    comp.insert(v);
                    stack.push(v);
                }
            }
            out.push(comp);
        }
        out
    }

    /// Classifies the edge cut `[X, Y]` between disjoint sets.
    pub fn cut_edges(&self, x: &VertexSet, y: &VertexSet) -> Result<CutEdges> {
        self.check_range(x)?;
        self.check_range(y)?;
        if !x.is_disjoint_from(y) {
            return Err(Error::InvalidInput("cut sets overlap".into()));
        }
        let mut present = None;
        let mut missing = None;
        for u in x.iter() {
            for v in y.iter() {
                if self.has_edge(u, v) {
                    present.get_or_insert((u, v));
                } else {
                    missing.get_or_insert((u, v));
                }
                if present.is_some() && missing.is_some() {
                    return Ok(CutEdges::Mixed {
                        present: present.unwrap(),
                        missing: missing.unwrap(),
                    });
                }
            }
        }
        Ok(match (present, missing) {
            (Some(_), None) | (None, None) => CutEdges::Complete,
            (None, Some(_)) => CutEdges::Empty,
            (Some(p), Some(m)) => CutEdges::Mixed {
                present: p,
                missing: m,
            },
        })
    }

    /// True when every vertex of `x` is adjacent to every vertex of `y`.
    pub fn is_complete_between(&self, x: &VertexSet, y: &VertexSet) -> bool {
        x.iter()
            .all(|u| y.iter().all(|v| u == v || self.has_edge(u, v)))
    }

    /// True when there is no edge between `x` and `y`.
    pub fn is_anticomplete_between(&self, x: &VertexSet, y: &VertexSet) -> bool {
        x.iter().all(|u| self.rows[u].is_disjoint_from(y))
    }

    /// True when `s` induces a clique.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let vs = s.to_vec();
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// True when `s` induces a stable set.
    pub fn is_stable_set(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| self.rows[u].is_disjoint_from(s))
    }

    /// DOT rendering for reports.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push('}');
        out
    }

    /// JSON adjacency-list form: `{"n": int, "edges": [[u,v],...]}`.
    pub fn to_edge_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "edges": self.edges().iter().map(|&(u, v)| vec![u, v]).collect::<Vec<_>>(),
        })
    }

    /// Content hash of the labeled graph: SHA-256 of the graph6 encoding,
    /// truncated to 16 hex digits. Traces reference graphs by this hash.
    pub fn content_hash(&self) -> String {
        let enc = crate::graph6::encode(self);
        let digest = Sha256::digest(enc.as_bytes());
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::empty(70);
        s.insert(0);
        s.insert(65);
        s.insert(7);
        assert_eq!(s.to_vec(), vec![0, 7, 65]);
        assert_eq!(s.len(), 3);
        s.remove(7);
        assert!(!s.contains(7));
        assert_eq!(s.min(), Some(0));
    }

    #[test]
    fn induced_subgraph_of_cycle_is_path() {
        let c5 = Graph::cycle(5);
        let (g, map) = c5
            .induced_subgraph(&VertexSet::from_iter_n(5, [0, 1, 2]))
            .unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(map.new_to_old, vec![0, 1, 2]);
        assert_eq!(map.old_to_new[3], None);
    }

    #[test]
    fn induced_subgraph_full_is_identity() {
        let g = Graph::from_edges(4, &[(0, 2), (1, 3), (2, 3)]).unwrap();
        let (h, _) = g.induced_subgraph(&VertexSet::full(4)).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn induced_subgraph_range_error() {
        let g = Graph::cycle(4);
        assert!(g
            .induced_subgraph(&VertexSet::from_iter_n(8, [0, 5]))
            .is_err());
    }

    #[test]
    fn complement_examples() {
        let c5 = Graph::cycle(5);
        // C5 is self-complementary up to relabeling: 0-2-4-1-3.
        let comp = c5.complement();
        assert_eq!(comp.edge_count(), 5);
        assert_eq!(comp.complement(), c5);
        let k4 = Graph::complete(4);
        assert_eq!(k4.complement().edge_count(), 0);
    }

    #[test]
    fn components_of_disjoint_union() {
        // 2K2
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0, 1]);
        assert_eq!(comps[1].to_vec(), vec![2, 3]);
        // K1 + C5
        let mut edges = vec![];
        for i in 0..5 {
            edges.push((1 + i, 1 + (i + 1) % 5));
        }
        let g = Graph::from_edges(6, &edges).unwrap();
        let sizes: Vec<usize> = g.components().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 5]);
    }

    #[test]
    fn cut_edges_classification() {
        let c5 = Graph::cycle(5);
        let one = |v| VertexSet::from_iter_n(5, [v]);
        assert_eq!(
            c5.cut_edges(&one(0), &one(1)).unwrap(),
            CutEdges::Complete
        );
        assert_eq!(c5.cut_edges(&one(0), &one(2)).unwrap(), CutEdges::Empty);
        assert_eq!(
            c5.cut_edges(&one(0), &VertexSet::from_iter_n(5, [1, 2]))
                .unwrap(),
            CutEdges::Mixed {
                present: (0, 1),
                missing: (0, 2)
            }
        );
        assert!(c5
            .cut_edges(&VertexSet::from_iter_n(5, [0, 1]), &one(1))
            .is_err());
    }

    #[test]
    fn insert_vertex_inverts_delete() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let (h, map) = g.delete_vertex(2).unwrap();
        let nbrs_new: VertexSet = g
            .neighbors(2)
            .iter()
            .filter_map(|v| map.old_to_new[v])
            .collect();
        let back = h.insert_vertex(2, &nbrs_new).unwrap();
        assert_eq!(back, g);
    }
}
