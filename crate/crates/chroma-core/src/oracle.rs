//! Exact brute-force ground truth at desk scale: clique number, independence
//! number, chromatic number with an optimal coloring, and coloring
//! verification.
//!
//! Clique search is Bron-Kerbosch with pivoting over single-word bitsets
//! (hence the hard 64-vertex cap). The chromatic number is found by
//! iterative deepening from the lower bound max(w, ceil(n/a)): a DFS assigns
//! vertices in max-degree-first order, pins a maximum clique to the first
//! colors, and never opens more than one fresh color per step.

use crate::error::Error;
use crate::graph::{Graph, VertexSet};
use crate::Result;
use serde::Serialize;

/// Vertex count cap for clique/independence search.
pub const CLIQUE_CAP: usize = 64;
/// Vertex count cap for the exact chromatic number.
pub const CHROMATIC_CAP: usize = 24;

/// A proper coloring: `colors[v]` is the 0-based color of vertex `v` and the
/// colors used are exactly `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    /// Wraps a raw assignment, compacting the palette to `0..k`.
    pub fn from_assignment(colors: Vec<usize>) -> Self {
        let mut seen: Vec<usize> = colors.to_vec();
        seen.sort_unstable();
        seen.dedup();
        let compact: Vec<usize> = colors
            .iter()
            .map(|c| seen.binary_search(c).unwrap())
            .collect();
        Coloring {
            k: seen.len(),
            colors: compact,
        }
    }
}

/// Everything the oracle knows about one graph.
#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub omega: usize,
    pub alpha: usize,
    pub chi: usize,
    pub witness_clique: Vec<usize>,
    pub witness_coloring: Coloring,
}

impl OracleReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).unwrap()
    }
}

/// Computes the full report; capped by [`CHROMATIC_CAP`].
pub fn oracle_report(g: &Graph) -> Result<OracleReport> {
    let (omega, clique) = clique_number(g)?;
    let (alpha, _) = independence_number(g)?;
    let (chi, coloring) = chromatic_number(g)?;
    Ok(OracleReport {
        omega,
        alpha,
        chi,
        witness_clique: clique.to_vec(),
        witness_coloring: coloring,
    })
}

fn rows64_checked(g: &Graph, op: &'static str) -> Result<Vec<u64>> {
    g.rows64().ok_or(Error::Capacity {
        op,
        n: g.n(),
        cap: CLIQUE_CAP,
    })
}

/// Clique number with one maximum clique.
pub fn clique_number(g: &Graph) -> Result<(usize, VertexSet)> {
    let adj = rows64_checked(g, "clique_number")?;
    let (size, mask) = max_clique_words(&adj, g.n());
    Ok((size, mask_to_set(mask, g.n())))
}

/// Independence number with one maximum stable set (clique of the complement).
pub fn independence_number(g: &Graph) -> Result<(usize, VertexSet)> {
    let comp = g.complement();
    let adj = rows64_checked(&comp, "independence_number")?;
    let (size, mask) = max_clique_words(&adj, g.n());
    Ok((size, mask_to_set(mask, g.n())))
}

fn mask_to_set(mask: u64, n: usize) -> VertexSet {
    VertexSet::from_iter_n(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

/// Bron-Kerbosch with pivoting and a size bound, tracking the best clique.
pub(crate) fn max_clique_words(adj: &[u64], n: usize) -> (usize, u64) {
    if n == 0 {
        return (0, 0);
    }
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut best = (0usize, 0u64);
    bk(adj, 0, 0, full, 0, &mut best);
    best
}

fn bk(adj: &[u64], r_size: usize, r_mask: u64, p: u64, x: u64, best: &mut (usize, u64)) {
    if p == 0 && x == 0 {
        if r_size > best.0 {
            *best = (r_size, r_mask);
        }
        return;
    }
    if r_size + p.count_ones() as usize <= best.0 {
        return;
    }
    // pivot: vertex of P | X covering the most of P
    let mut pivot = usize::MAX;
    let mut pivot_cover = u64::MAX;
    let mut scan = p | x;
    while scan != 0 {
        let u = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        let cover = p & !adj[u];
        if pivot == usize::MAX || cover.count_ones() < pivot_cover.count_ones() {
            pivot = u;
            pivot_cover = cover;
        }
    }
    let mut cands = p & !adj[pivot];
    let mut p = p;
    let mut x = x;
    while cands != 0 {
        let v = cands.trailing_zeros() as usize;
        let vbit = 1u64 << v;
        cands &= cands - 1;
        bk(
            adj,
            r_size + 1,
            r_mask | vbit,
            p & adj[v],
            x & adj[v],
            best,
        );
        p &= !vbit;
        x |= vbit;
    }
}

/// Exact chromatic number with an optimal proper coloring.
pub fn chromatic_number(g: &Graph) -> Result<(usize, Coloring)> {
    let n = g.n();
    if n > CHROMATIC_CAP {
        return Err(Error::Capacity {
            op: "chromatic_number",
            n,
            cap: CHROMATIC_CAP,
        });
    }
    if n == 0 {
        return Ok((
            0,
            Coloring {
                colors: vec![],
                k: 0,
            },
        ));
    }
    let adj = rows64_checked(g, "chromatic_number")?;
    let (omega, clique_mask) = max_clique_words(&adj, n);
    let comp: Vec<u64> = {
        let cg = g.complement();
        cg.rows64().unwrap()
    };
    let (alpha, _) = max_clique_words(&comp, n);
    let lb = omega.max(n.div_ceil(alpha));

    // vertex order: the pinned clique first, then by decreasing degree
    let mut order: Vec<usize> = (0..n).filter(|&v| clique_mask >> v & 1 == 1).collect();
    let mut rest: Vec<usize> = (0..n).filter(|&v| clique_mask >> v & 1 == 0).collect();
    rest.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));
    order.extend(rest);

    for k in lb..=n {
        if let Some(assignment) = try_color(&adj, n, &order, omega, k) {
            let coloring = Coloring::from_assignment(assignment);
            debug_assert_eq!(coloring.k, k);
            return Ok((k, coloring));
        }
    }
    unreachable!("n colors always suffice");
}

/// DFS for a proper k-coloring; `pinned` leading vertices of `order` get
/// colors 0..pinned. Returns the assignment indexed by vertex.
fn try_color(adj: &[u64], n: usize, order: &[usize], pinned: usize, k: usize) -> Option<Vec<usize>> {
    debug_assert!(k <= 64);
    if pinned > k {
        return None;
    }
    let kmask: u64 = if k == 64 { !0 } else { (1u64 << k) - 1 };
    let mut st = ColorSearch {
        adj,
        order,
        k,
        kmask,
        colors: vec![usize::MAX; n],
        // forbidden[v] = colors already taken by neighbors of v
        forbidden: vec![0u64; n],
        unassigned: vec![true; n],
    };
    for (c, &v) in order.iter().take(pinned).enumerate() {
        st.assign(v, c);
    }
    if st.rec(pinned, pinned.saturating_sub(1) as i64) {
        Some(st.colors)
    } else {
        None
    }
}

struct ColorSearch<'a> {
    adj: &'a [u64],
    order: &'a [usize],
    k: usize,
    kmask: u64,
    colors: Vec<usize>,
    forbidden: Vec<u64>,
    unassigned: Vec<bool>,
}

impl ColorSearch<'_> {
    /// Marks color `c` on `v`; returns the neighbors whose forbidden bit was
    /// newly set (so the exact change can be undone).
    fn assign(&mut self, v: usize, c: usize) -> u64 {
        self.colors[v] = c;
        self.unassigned[v] = false;
        let mut touched = 0u64;
        let mut nb = self.adj[v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if self.forbidden[u] & (1u64 << c) == 0 {
                self.forbidden[u] |= 1u64 << c;
                touched |= 1u64 << u;
            }
        }
        touched
    }

    fn unassign(&mut self, v: usize, c: usize, touched: u64) {
        self.colors[v] = usize::MAX;
        self.unassigned[v] = true;
        let mut t = touched;
        while t != 0 {
            let u = t.trailing_zeros() as usize;
            t &= t - 1;
            self.forbidden[u] &= !(1u64 << c);
        }
    }

    fn rec(&mut self, depth: usize, max_used: i64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        // symmetry break: at most one brand-new color per step
        let cap = ((max_used + 2).min(self.k as i64)) as u32;
        let capmask = if cap >= 64 { !0 } else { (1u64 << cap) - 1 };
        let mut cands = !self.forbidden[v] & self.kmask & capmask;
        while cands != 0 {
            let c = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            let touched = self.assign(v, c);
            // wipeout check: a vertex whose forbidden mask covers all k
            // colors can never be colored (forbidden only grows along the
            // current branch), so prune on such neighbors immediately
            let mut dead = false;
            let mut t = touched;
            while t != 0 {
                let u = t.trailing_zeros() as usize;
                t &= t - 1;
                if self.unassigned[u] && !self.forbidden[u] & self.kmask == 0 {
                    dead = true;
                    break;
                }
            }
            if !dead && self.rec(depth + 1, max_used.max(c as i64)) {
                return true;
            }
            self.unassign(v, c, touched);
        }
        false
    }
}

/// True iff `c` assigns a color to every vertex and no edge is monochromatic.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<bool> {
    if c.colors.len() != g.n() {
        return Err(Error::InvalidInput(format!(
            "coloring covers {} vertices, graph has {}",
            c.colors.len(),
            g.n()
        )));
    }
    Ok(g
        .edges()
        .iter()
        .all(|&(u, v)| c.colors[u] != c.colors[v]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_and_independence_basics() {
        let c5 = Graph::cycle(5);
        assert_eq!(clique_number(&c5).unwrap().0, 2);
        assert_eq!(independence_number(&c5).unwrap().0, 2);
        let k5 = Graph::complete(5);
        assert_eq!(clique_number(&k5).unwrap().0, 5);
        assert_eq!(independence_number(&k5).unwrap().0, 1);
        let (w, witness) = clique_number(&Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()).unwrap();
        assert_eq!(w, 3);
        assert!(witness.len() == 3);
    }

    #[test]
    fn chromatic_basics() {
        let (chi, col) = chromatic_number(&Graph::cycle(5)).unwrap();
        assert_eq!(chi, 3);
        assert!(verify_coloring(&Graph::cycle(5), &col).unwrap());
        assert_eq!(chromatic_number(&Graph::complete(7)).unwrap().0, 7);
        assert_eq!(chromatic_number(&Graph::path(6)).unwrap().0, 2);
        assert_eq!(chromatic_number(&Graph::empty(4)).unwrap().0, 1);
        assert_eq!(chromatic_number(&Graph::empty(0)).unwrap().0, 0);
        // Petersen graph is 3-chromatic
        let petersen = petersen();
        let (chi, col) = chromatic_number(&petersen).unwrap();
        assert_eq!(chi, 3);
        assert!(verify_coloring(&petersen, &col).unwrap());
    }

    fn petersen() -> Graph {
        let mut edges = vec![];
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn verify_coloring_examples() {
        let c5 = Graph::cycle(5);
        let ok = Coloring {
            colors: vec![0, 1, 0, 1, 2],
            k: 3,
        };
        assert!(verify_coloring(&c5, &ok).unwrap());
        let k2 = Graph::complete(2);
        let bad = Coloring {
            colors: vec![0, 0],
            k: 1,
        };
        assert!(!verify_coloring(&k2, &bad).unwrap());
        assert!(verify_coloring(&c5, &bad).is_err());
    }

    #[test]
    fn report_invariants() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (2, 3)]).unwrap();
        let r = oracle_report(&g).unwrap();
        assert!(r.omega <= r.chi && r.chi <= g.n());
        assert!(r.alpha * r.chi >= g.n());
        assert_eq!(r.witness_clique.len(), r.omega);
        assert!(verify_coloring(&g, &r.witness_coloring).unwrap());
        assert_eq!(r.witness_coloring.k, r.chi);
    }

    #[test]
    fn capacity_errors() {
        let g = Graph::empty(30);
        assert!(matches!(
            chromatic_number(&g),
            Err(Error::Capacity { .. })
        ));
        let g = Graph::empty(70);
        assert!(matches!(clique_number(&g), Err(Error::Capacity { .. })));
    }
}
