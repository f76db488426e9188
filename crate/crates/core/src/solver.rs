//! Exact stability numbers.
//!
//! Branch and bound over bitset candidate sets. Vertices of degree at most
//! one inside the candidate set are taken greedily (some maximum stable set
//! contains them); otherwise the search branches on a maximum-degree vertex.
//! A greedy clique cover of the candidates bounds what the subtree can add.
//! Rows are narrowed to the fewest 64-bit words that cover `n`.

use serde::Serialize;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Graph, VertexSet};

/// Largest graph [`all_maximum_stable_sets`] will enumerate.
pub const ENUMERATION_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub alpha: usize,
    /// Lexicographically least maximum stable set.
    pub witness: VertexSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub num_maximum: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub alpha: usize,
    pub critical_edges: Vec<EdgeRef>,
    pub is_alpha_critical: bool,
    pub defect: i64,
    pub tau: usize,
}

/// `α(g)`.
pub fn alpha_number(g: &Graph) -> usize {
    alpha_within_bits(g, &Bits::prefix(g.n()))
}

/// `α(G[s])`, without materializing the induced subgraph.
pub fn alpha_within(g: &Graph, s: &VertexSet) -> Result<usize> {
    g.check_host(s)?;
    Ok(alpha_within_bits(g, s.bits()))
}

pub(crate) fn alpha_within_bits(g: &Graph, s: &Bits) -> usize {
    match s.last() {
        None => 0,
        Some(top) if top < 64 => Search::<1>::new(g, top + 1).alpha(s),
        Some(top) if top < 128 => Search::<2>::new(g, top + 1).alpha(s),
        Some(top) if top < 256 => Search::<4>::new(g, top + 1).alpha(s),
        Some(top) => Search::<8>::new(g, top + 1).alpha(s),
    }
}

/// `α(g)` with the lexicographically least maximum stable set.
pub fn alpha(g: &Graph) -> StabilityReport {
    let a = alpha_number(g);
    StabilityReport {
        alpha: a,
        witness: least_witness(g, a),
        num_maximum: None,
    }
}

/// As [`alpha`], also counting the maximum stable sets.
pub fn alpha_with_count(g: &Graph) -> StabilityReport {
    let mut r = alpha(g);
    r.num_maximum = Some(count_stable_sets_of_size(g, r.alpha));
    r
}

/// Vertex by vertex, keep `v` whenever some maximum stable set extends the
/// current prefix with `v`.
fn least_witness(g: &Graph, a: usize) -> VertexSet {
    let mut chosen = Bits::EMPTY;
    let mut allowed = Bits::prefix(g.n());
    let mut need = a;
    for v in 0..g.n() {
        if need == 0 {
            break;
        }
        if !allowed.contains(v) {
            continue;
        }
        allowed.remove(v);
        let after = allowed.minus(g.row(v));
        if 1 + alpha_within_bits(g, &after) == need {
            chosen.insert(v);
            allowed = after;
            need -= 1;
        }
    }
    debug_assert_eq!(need, 0);
    VertexSet::from_bits(g.n(), chosen)
}

/// Number of stable sets of exactly `k` vertices.
pub fn count_stable_sets_of_size(g: &Graph, k: usize) -> u64 {
    let all = Bits::prefix(g.n());
    match g.n() {
        0 => u64::from(k == 0),
        n if n <= 64 => Search::<1>::new(g, n).count(&all, k),
        n if n <= 128 => Search::<2>::new(g, n).count(&all, k),
        n if n <= 256 => Search::<4>::new(g, n).count(&all, k),
        n => Search::<8>::new(g, n).count(&all, k),
    }
}

/// Every maximum stable set, in lexicographic order.
pub fn all_maximum_stable_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.n() > ENUMERATION_CAP {
        return Err(Error::TooLargeForEnumeration {
            n: g.n(),
            cap: ENUMERATION_CAP,
        });
    }
    let a = alpha_number(g);
    let mut out = Vec::new();
    list_sets(g, Bits::prefix(g.n()), Bits::EMPTY, a, &mut out);
    Ok(out)
}

fn list_sets(g: &Graph, allowed: Bits, chosen: Bits, need: usize, out: &mut Vec<VertexSet>) {
    if need == 0 {
        out.push(VertexSet::from_bits(g.n(), chosen));
        return;
    }
    let mut rest = allowed;
    for v in allowed.iter() {
        rest.remove(v);
        let next = rest.minus(g.row(v));
        if 1 + alpha_within_bits(g, &next) >= need {
            let mut c = chosen;
            c.insert(v);
            list_sets(g, next, c, need - 1, out);
        }
    }
}

/// Whether deleting `e` raises the stability number.
pub fn is_alpha_critical_edge(g: &Graph, e: &EdgeRef) -> Result<bool> {
    let before = alpha_number(g);
    let after = alpha_number(&g.delete_edge(e)?);
    assert!(
        after == before || after == before + 1,
        "edge deletion moved alpha from {before} to {after}"
    );
    Ok(after == before + 1)
}

/// Per-edge criticality plus defect and vertex cover number.
pub fn is_alpha_critical(g: &Graph) -> CriticalityReport {
    let a = alpha_number(g);
    let edges = g.edges();
    let critical_edges: Vec<EdgeRef> = edges
        .iter()
        .copied()
        .filter(|e| edge_is_critical_given(g, e, a))
        .collect();
    CriticalityReport {
        alpha: a,
        is_alpha_critical: critical_edges.len() == edges.len(),
        critical_edges,
        defect: defect_from(g.n(), a),
        tau: g.n() - a,
    }
}

/// Cheaper yes/no form of [`is_alpha_critical`] that stops at the first
/// non-critical edge.
pub fn is_alpha_critical_graph(g: &Graph) -> bool {
    let a = alpha_number(g);
    g.edges().iter().all(|e| edge_is_critical_given(g, e, a))
}

/// `α(G ∖ e) = α + 1` exactly when some stable set of size `α − 1` avoids
/// `N[u] ∪ N[v]`, since adding both endpoints then gives `α + 1`.
pub(crate) fn edge_is_critical_given(g: &Graph, e: &EdgeRef, a: usize) -> bool {
    let rest = Bits::prefix(g.n()).minus(g.row(e.u)).minus(g.row(e.v));
    let mut rest = rest;
    rest.remove(e.u);
    rest.remove(e.v);
    alpha_within_bits(g, &rest) + 1 >= a
}

pub fn defect(g: &Graph) -> i64 {
    defect_from(g.n(), alpha_number(g))
}

fn defect_from(n: usize, a: usize) -> i64 {
    n as i64 - 2 * a as i64
}

/// Exhaustive `α` over all subsets; for cross-checking only.
pub fn alpha_brute_force(g: &Graph) -> usize {
    assert!(g.n() <= 24, "brute force is limited to 24 vertices");
    let n = g.n();
    let rows: Vec<u32> = (0..n).map(|v| g.row(v).0[0] as u32).collect();
    let mut best = 0;
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let stable = (0..n).all(|v| mask >> v & 1 == 0 || rows[v] & mask == 0);
        if stable {
            best = size;
        }
    }
    best
}

struct Search<const W: usize> {
    adj: Vec<[u64; W]>,
    best: usize,
}

impl<const W: usize> Search<W> {
    fn new(g: &Graph, upto: usize) -> Self {
        let adj = (0..upto).map(|v| narrow(g.row(v))).collect();
        Search { adj, best: 0 }
    }

    fn alpha(mut self, s: &Bits) -> usize {
        self.expand(narrow(s), 0);
        self.best
    }

    fn expand(&mut self, mut cand: [u64; W], mut size: usize) {
        loop {
            if is_empty(&cand) {
                self.best = self.best.max(size);
                return;
            }
            if size + self.cover_bound(cand) <= self.best {
                return;
            }
            let mut min = (usize::MAX, 0);
            let mut max = (0, 0);
            for v in members(&cand) {
                let d = count(&and(&self.adj[v], &cand));
                if d < min.0 {
                    min = (d, v);
                }
                if d > max.0 {
                    max = (d, v);
                }
            }
            if min.0 <= 1 {
                let v = min.1;
                cand = minus(&cand, &self.adj[v]);
                clear(&mut cand, v);
                size += 1;
                continue;
            }
            let v = max.1;
            let mut with = minus(&cand, &self.adj[v]);
            clear(&mut with, v);
            self.expand(with, size + 1);
            clear(&mut cand, v);
        }
    }

    /// Number of cliques in a greedy cover of `cand`; bounds `α(G[cand])`.
    fn cover_bound(&self, mut cand: [u64; W]) -> usize {
        let mut cliques = 0;
        while let Some(v) = first(&cand) {
            clear(&mut cand, v);
            let mut common = and(&cand, &self.adj[v]);
            while let Some(u) = first(&common) {
                clear(&mut cand, u);
                clear(&mut common, u);
                common = and(&common, &self.adj[u]);
            }
            cliques += 1;
        }
        cliques
    }

    fn count(&mut self, s: &Bits, k: usize) -> u64 {
        self.count_in(narrow(s), k)
    }

    fn count_in(&self, cand: [u64; W], k: usize) -> u64 {
        if k == 0 {
            return 1;
        }
        if self.cover_bound(cand) < k {
            return 0;
        }
        let v = first(&cand).expect("nonempty when the bound is positive");
        let mut without = cand;
        clear(&mut without, v);
        let with = minus(&without, &self.adj[v]);
        self.count_in(with, k - 1) + self.count_in(without, k)
    }
}

fn narrow<const W: usize>(b: &Bits) -> [u64; W] {
    let mut out = [0u64; W];
    out.copy_from_slice(&b.0[..W]);
    out
}

#[inline]
fn is_empty<const W: usize>(a: &[u64; W]) -> bool {
    a.iter().all(|&w| w == 0)
}

#[inline]
fn and<const W: usize>(a: &[u64; W], b: &[u64; W]) -> [u64; W] {
    std::array::from_fn(|i| a[i] & b[i])
}

#[inline]
fn minus<const W: usize>(a: &[u64; W], b: &[u64; W]) -> [u64; W] {
    std::array::from_fn(|i| a[i] & !b[i])
}

#[inline]
fn count<const W: usize>(a: &[u64; W]) -> usize {
    a.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
fn first<const W: usize>(a: &[u64; W]) -> Option<usize> {
    a.iter()
        .position(|&w| w != 0)
        .map(|i| i * 64 + a[i].trailing_zeros() as usize)
}

#[inline]
fn clear<const W: usize>(a: &mut [u64; W], v: usize) {
    a[v >> 6] &= !(1 << (v & 63));
}

fn members<const W: usize>(a: &[u64; W]) -> impl Iterator<Item = usize> + '_ {
    a.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let t = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * 64 + t)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge(u: usize, v: usize) -> EdgeRef {
        EdgeRef::new(u, v).unwrap()
    }

    #[test]
    fn alpha_examples() {
        let r = alpha(&Graph::cycle(5));
        assert_eq!(r.alpha, 2);
        assert_eq!(r.witness.to_vec(), vec![0, 2]);
        for n in 1..8 {
            assert_eq!(alpha_number(&Graph::complete(n)), 1);
        }
        assert_eq!(alpha_number(&Graph::petersen()), 4);
        assert_eq!(alpha_brute_force(&Graph::petersen()), 4);
        assert_eq!(alpha_number(&Graph::empty(0)), 0);
        assert!(alpha(&Graph::empty(0)).witness.is_empty());
    }

    #[test]
    fn witness_is_lexicographically_least() {
        // Path 0-1-2-3: maximum stable sets {0,2}, {0,3}, {1,3}.
        assert_eq!(alpha(&Graph::path(4)).witness.to_vec(), vec![0, 2]);
        // Star centred at 0 with three leaves.
        let star = Graph::from_pairs(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(alpha(&star).witness.to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn counts_maximum_sets() {
        assert_eq!(alpha_with_count(&Graph::cycle(5)).num_maximum, Some(5));
        assert_eq!(alpha_with_count(&Graph::complete(4)).num_maximum, Some(4));
        assert_eq!(alpha_with_count(&Graph::empty(0)).num_maximum, Some(1));
        assert_eq!(alpha_with_count(&Graph::petersen()).num_maximum, Some(5));
    }

    #[test]
    fn enumerates_maximum_sets() {
        let c5 = all_maximum_stable_sets(&Graph::cycle(5)).unwrap();
        let got: Vec<Vec<usize>> = c5.iter().map(VertexSet::to_vec).collect();
        assert_eq!(
            got,
            vec![vec![0, 2], vec![0, 3], vec![1, 3], vec![1, 4], vec![2, 4]]
        );
        let k3: Vec<Vec<usize>> = all_maximum_stable_sets(&Graph::complete(3))
            .unwrap()
            .iter()
            .map(VertexSet::to_vec)
            .collect();
        assert_eq!(k3, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(all_maximum_stable_sets(&Graph::empty(1)).unwrap().len(), 1);
        assert_eq!(
            all_maximum_stable_sets(&Graph::empty(25)),
            Err(Error::TooLargeForEnumeration { n: 25, cap: 24 })
        );
    }

    #[test]
    fn critical_edges() {
        let c5 = Graph::cycle(5);
        assert!(c5
            .edges()
            .iter()
            .all(|e| is_alpha_critical_edge(&c5, e).unwrap()));
        let p3 = Graph::path(3);
        assert!(!is_alpha_critical_edge(&p3, &edge(0, 1)).unwrap());
        assert!(is_alpha_critical_edge(&Graph::complete(2), &edge(0, 1)).unwrap());
        assert_eq!(
            is_alpha_critical_edge(&p3, &edge(0, 2)),
            Err(Error::NoSuchEdge(0, 2))
        );
    }

    #[test]
    fn criticality_reports() {
        let c7 = is_alpha_critical(&Graph::cycle(7));
        assert!(c7.is_alpha_critical);
        assert_eq!((c7.defect, c7.tau), (1, 4));
        let k4 = is_alpha_critical(&Graph::complete(4));
        assert!(k4.is_alpha_critical);
        assert_eq!(k4.defect, 2);
        let c6 = is_alpha_critical(&Graph::cycle(6));
        assert!(!c6.is_alpha_critical);
        assert!(c6.critical_edges.is_empty());
        assert!(is_alpha_critical(&Graph::empty(3)).is_alpha_critical);
        assert!(is_alpha_critical(&Graph::empty(0)).is_alpha_critical);
    }

    #[test]
    fn fast_edge_test_matches_deletion() {
        for g in [
            Graph::cycle(6),
            Graph::path(5),
            Graph::petersen(),
            Graph::complete(5),
        ] {
            let r = is_alpha_critical(&g);
            for e in g.edges() {
                assert_eq!(
                    r.critical_edges.contains(&e),
                    is_alpha_critical_edge(&g, &e).unwrap()
                );
            }
        }
    }

    #[test]
    fn defects() {
        assert_eq!(defect(&Graph::complete(2)), 0);
        assert_eq!(defect(&Graph::cycle(5)), 1);
        assert_eq!(defect(&Graph::empty(4)), -4);
    }

    #[test]
    fn wide_instances() {
        assert_eq!(alpha_number(&Graph::cycle(101)), 50);
        assert_eq!(alpha_number(&Graph::path(200)), 100);
        assert_eq!(alpha_number(&Graph::empty(512)), 512);
        assert_eq!(alpha(&Graph::cycle(129)).witness.len(), 64);
    }
}
