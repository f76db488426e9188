//! Simple undirected graphs over dense bitset rows.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{Bits, CAPACITY};
use crate::error::{Error, Result};

/// An undirected edge, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeRef {
    pub u: usize,
    pub v: usize,
}

impl EdgeRef {
    pub fn new(a: usize, b: usize) -> Result<EdgeRef> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(EdgeRef { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(EdgeRef { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// A set of vertices of some particular graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: Bits,
    host_n: usize,
}

impl VertexSet {
    pub fn empty(host_n: usize) -> VertexSet {
        VertexSet {
            bits: Bits::EMPTY,
            host_n,
        }
    }

    pub fn full(host_n: usize) -> VertexSet {
        VertexSet {
            bits: Bits::prefix(host_n),
            host_n,
        }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(host_n: usize, vs: I) -> Result<VertexSet> {
        let mut bits = Bits::EMPTY;
        for v in vs {
            if v >= host_n {
                return Err(Error::NoSuchVertex {
                    vertex: v,
                    n: host_n,
                });
            }
            bits.insert(v);
        }
        Ok(VertexSet { bits, host_n })
    }

    /// Wraps raw bits; every member must be below `host_n`.
    pub fn from_bits(host_n: usize, bits: Bits) -> VertexSet {
        debug_assert!(bits.is_subset(&Bits::prefix(host_n)));
        VertexSet { bits, host_n }
    }

    pub fn bits(&self) -> &Bits {
        &self.bits
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.host_n && self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        self.bits.iter()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn with(&self, v: usize) -> VertexSet {
        assert!(
            v < self.host_n,
            "vertex {v} outside host of size {}",
            self.host_n
        );
        let mut s = *self;
        s.bits.insert(v);
        s
    }

    pub fn without(&self, v: usize) -> VertexSet {
        let mut s = *self;
        if v < self.host_n {
            s.bits.remove(v);
        }
        s
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            bits: Bits::prefix(self.host_n).minus(&self.bits),
            host_n: self.host_n,
        }
    }

    pub fn union(&self, o: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.host_n, o.host_n);
        VertexSet {
            bits: self.bits.or(&o.bits),
            host_n: self.host_n,
        }
    }

    pub fn intersection(&self, o: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.host_n, o.host_n);
        VertexSet {
            bits: self.bits.and(&o.bits),
            host_n: self.host_n,
        }
    }

    pub fn difference(&self, o: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.host_n, o.host_n);
        VertexSet {
            bits: self.bits.minus(&o.bits),
            host_n: self.host_n,
        }
    }

    pub fn is_subset(&self, o: &VertexSet) -> bool {
        self.bits.is_subset(&o.bits)
    }

    /// Ascending-sequence comparison, the order used for witnesses and listings.
    pub fn cmp_lex(&self, o: &VertexSet) -> std::cmp::Ordering {
        self.bits.cmp_lex(&o.bits)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Old/new vertex id correspondence produced by induced subgraphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    /// `old_to_new[old]` is the new id, if the vertex survived.
    pub old_to_new: Vec<Option<usize>>,
    /// `new_to_old[new]` is the original id.
    pub new_to_old: Vec<usize>,
}

impl VertexMap {
    /// Lifts a set of the subgraph back into the host graph.
    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        let bits = s.iter().map(|v| self.new_to_old[v]).collect();
        VertexSet::from_bits(self.old_to_new.len(), bits)
    }
}

/// An immutable simple undirected graph on at most 512 vertices.
///
/// Equality compares vertex count and adjacency only; labels are provenance
/// metadata.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<Bits>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, o: &Graph) -> bool {
        self.n == o.n && self.adj == o.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    pub fn new(n: usize, edges: &[EdgeRef]) -> Result<Graph> {
        if n > CAPACITY {
            return Err(Error::CapacityExceeded(n));
        }
        let mut adj = vec![Bits::EMPTY; n];
        for e in edges {
            if e.u == e.v {
                return Err(Error::SelfLoop(e.u));
            }
            for x in [e.u, e.v] {
                if x >= n {
                    return Err(Error::EndpointOutOfRange { vertex: x, n });
                }
            }
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
        Ok(Graph {
            n,
            adj,
            labels: None,
        })
    }

    /// Convenience constructor from endpoint pairs in either order.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        let edges = pairs
            .iter()
            .map(|&(a, b)| EdgeRef::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Graph::new(n, &edges)
    }

    pub(crate) fn from_rows(adj: Vec<Bits>) -> Graph {
        let g = Graph {
            n: adj.len(),
            adj,
            labels: None,
        };
        debug_assert!(g.check_invariants());
        g
    }

    pub fn empty(n: usize) -> Graph {
        Graph::new(n, &[]).expect("empty graph within capacity")
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|v| {
                let mut r = Bits::prefix(n);
                r.remove(v);
                r
            })
            .collect();
        Graph::from_rows(adj)
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_pairs(n, &pairs).expect("valid cycle")
    }

    pub fn path(n: usize) -> Graph {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_pairs(n, &pairs).expect("valid path")
    }

    /// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    pub fn petersen() -> Graph {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((5 + i, 5 + (i + 2) % 5));
            pairs.push((i, i + 5));
        }
        Graph::from_pairs(10, &pairs).expect("valid Petersen graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Bits::len).sum::<usize>() / 2
    }

    /// Edges in ascending `(u, v)` order.
    pub fn edges(&self) -> Vec<EdgeRef> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push(EdgeRef { u, v });
                }
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    pub fn contains_edge(&self, e: &EdgeRef) -> bool {
        self.has_edge(e.u, e.v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Open neighborhood row of `v`.
    pub fn row(&self, v: usize) -> &Bits {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.n, self.adj[v])
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.n, self.adj[v]).with(v)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, vs: I) -> Result<VertexSet> {
        VertexSet::from_vertices(self.n, vs)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::NoSuchVertex {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn check_edge(&self, e: &EdgeRef) -> Result<()> {
        if self.contains_edge(e) {
            Ok(())
        } else {
            Err(Error::NoSuchEdge(e.u, e.v))
        }
    }

    pub fn check_host(&self, s: &VertexSet) -> Result<()> {
        if s.host_n() == self.n {
            Ok(())
        } else {
            Err(Error::HostMismatch {
                set_n: s.host_n(),
                graph_n: self.n,
            })
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Provenance label of `v`, or its id when unlabeled.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    /// `N(s)`: every vertex adjacent to some member of `s` (may meet `s`).
    pub fn neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_host(s)?;
        let bits = s.iter().fold(Bits::EMPTY, |acc, v| acc.or(&self.adj[v]));
        Ok(VertexSet::from_bits(self.n, bits))
    }

    /// `N[s] = s ∪ N(s)`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        Ok(self.neighborhood(s)?.union(s))
    }

    /// `G[s]`, relabeled to `0..|s|` preserving the order of old ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, VertexMap)> {
        self.check_host(s)?;
        Ok(self.induced_bits(s.bits()))
    }

    pub(crate) fn induced_bits(&self, s: &Bits) -> (Graph, VertexMap) {
        let new_to_old: Vec<usize> = s.iter().collect();
        let mut old_to_new = vec![None; self.n];
        for (i, &o) in new_to_old.iter().enumerate() {
            old_to_new[o] = Some(i);
        }
        let adj = new_to_old
            .iter()
            .map(|&o| {
                self.adj[o]
                    .and(s)
                    .iter()
                    .map(|w| old_to_new[w].expect("member of s"))
                    .collect()
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| new_to_old.iter().map(|&o| l[o].clone()).collect());
        let g = Graph {
            n: new_to_old.len(),
            adj,
            labels,
        };
        (
            g,
            VertexMap {
                old_to_new,
                new_to_old,
            },
        )
    }

    pub fn delete_edge(&self, e: &EdgeRef) -> Result<Graph> {
        self.check_edge(e)?;
        let mut g = self.clone();
        g.adj[e.u].remove(e.v);
        g.adj[e.v].remove(e.u);
        Ok(g)
    }

    /// Returns a copy with `e` added; `e` must be a non-edge of this graph.
    pub fn add_edge(&self, e: &EdgeRef) -> Result<Graph> {
        self.check_vertex(e.u)?;
        self.check_vertex(e.v)?;
        let mut g = self.clone();
        g.adj[e.u].insert(e.v);
        g.adj[e.v].insert(e.u);
        Ok(g)
    }

    /// `G ∖ s`.
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<(Graph, VertexMap)> {
        self.check_host(s)?;
        Ok(self.induced_bits(&s.complement().bits))
    }

    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, VertexMap)> {
        self.check_vertex(v)?;
        self.delete_vertices(&VertexSet::empty(self.n).with(v))
    }

    /// `G ⊔ H`: `h`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, h: &Graph) -> Result<Graph> {
        let n = self.n + h.n;
        if n > CAPACITY {
            return Err(Error::CapacityExceeded(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(h.adj.iter().map(|r| shift(r, self.n)));
        Ok(Graph {
            n,
            adj,
            labels: None,
        })
    }

    /// Connected components as vertex sets, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = Bits::prefix(self.n);
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let comp = self.reach(start, &left);
            left = left.minus(&comp);
            out.push(VertexSet::from_bits(self.n, comp));
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: usize, within: &Bits) -> Bits {
        let mut seen = Bits::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = Bits::EMPTY;
            for v in frontier.iter() {
                next = next.or(&self.adj[v]);
            }
            frontier = next.and(within).minus(&seen);
            seen = seen.or(&frontier);
        }
        seen
    }

    /// True iff `s` induces a connected subgraph; the empty set counts as connected.
    pub fn is_connected_set(&self, s: &VertexSet) -> bool {
        match s.bits().first() {
            None => true,
            Some(start) => self.reach(start, s.bits()) == *s.bits(),
        }
    }

    /// The empty graph and `K1` are connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_set(&self.all_vertices())
    }

    /// `n >= 3`, connected, and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        let all = Bits::prefix(self.n);
        (0..self.n).all(|v| {
            let mut rest = all;
            rest.remove(v);
            let start = rest.first().expect("n >= 3");
            self.reach(start, &rest) == rest
        })
    }

    pub(crate) fn check_invariants(&self) -> bool {
        let all = Bits::prefix(self.n);
        (0..self.n).all(|u| {
            !self.adj[u].contains(u)
                && self.adj[u].is_subset(&all)
                && self.adj[u].iter().all(|v| self.adj[v].contains(u))
        })
    }
}

fn shift(r: &Bits, by: usize) -> Bits {
    r.iter().map(|v| v + by).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(g: &Graph, vs: &[usize]) -> VertexSet {
        g.vertex_set(vs.iter().copied()).unwrap()
    }

    #[test]
    fn constructors() {
        let k3 = Graph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(k3.edge_count(), 3);
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        let c5 = Graph::from_pairs(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert_eq!(c5, Graph::cycle(5));
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(
            Graph::from_pairs(3, &[(0, 3)]),
            Err(Error::EndpointOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(EdgeRef::new(2, 2), Err(Error::SelfLoop(2)));
        assert_eq!(
            Graph::new(2, &[EdgeRef { u: 1, v: 1 }]),
            Err(Error::SelfLoop(1))
        );
        assert_eq!(Graph::new(513, &[]), Err(Error::CapacityExceeded(513)));
        assert!(Graph::new(512, &[]).is_ok());
    }

    #[test]
    fn neighborhoods() {
        let c5 = Graph::cycle(5);
        assert_eq!(
            c5.neighborhood(&set(&c5, &[0])).unwrap().to_vec(),
            vec![1, 4]
        );
        assert!(c5.neighborhood(&VertexSet::empty(5)).unwrap().is_empty());
        let k4 = Graph::complete(4);
        assert_eq!(
            k4.neighborhood(&set(&k4, &[0, 1])).unwrap().to_vec(),
            vec![0, 1, 2, 3]
        );

        assert_eq!(
            c5.closed_neighborhood(&set(&c5, &[0])).unwrap().to_vec(),
            vec![0, 1, 4]
        );
        assert!(c5
            .closed_neighborhood(&VertexSet::empty(5))
            .unwrap()
            .is_empty());
        let k1 = Graph::empty(1);
        assert_eq!(
            k1.closed_neighborhood(&set(&k1, &[0])).unwrap().to_vec(),
            vec![0]
        );
    }

    #[test]
    fn host_mismatch() {
        let c5 = Graph::cycle(5);
        let wrong = VertexSet::empty(4);
        assert_eq!(
            c5.neighborhood(&wrong),
            Err(Error::HostMismatch {
                set_n: 4,
                graph_n: 5
            })
        );
        assert!(c5.induced_subgraph(&wrong).is_err());
        assert!(c5.delete_vertices(&wrong).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = Graph::cycle(5);
        let (p, map) = c5.induced_subgraph(&set(&c5, &[0, 1, 2])).unwrap();
        assert_eq!(p, Graph::path(3));
        assert_eq!(map.new_to_old, vec![0, 1, 2]);
        let (same, _) = c5.induced_subgraph(&c5.all_vertices()).unwrap();
        assert_eq!(same, c5);
        let k4 = Graph::complete(4);
        let (k2, map) = k4.induced_subgraph(&set(&k4, &[0, 2])).unwrap();
        assert_eq!(k2, Graph::complete(2));
        assert_eq!(map.old_to_new, vec![Some(0), None, Some(1), None]);
    }

    #[test]
    fn delete_edges() {
        let k3 = Graph::complete(3);
        let p = k3.delete_edge(&EdgeRef::new(0, 2).unwrap()).unwrap();
        assert_eq!(p, Graph::path(3));
        let c5 = Graph::cycle(5);
        let p5 = c5.delete_edge(&EdgeRef::new(0, 4).unwrap()).unwrap();
        assert_eq!(p5, Graph::path(5));
        let k2 = Graph::complete(2);
        assert_eq!(
            k2.delete_edge(&EdgeRef::new(0, 1).unwrap()).unwrap(),
            Graph::empty(2)
        );
        assert_eq!(
            Graph::path(3).delete_edge(&EdgeRef::new(0, 2).unwrap()),
            Err(Error::NoSuchEdge(0, 2))
        );
    }

    #[test]
    fn delete_vertex_sets() {
        let c5 = Graph::cycle(5);
        let (p, _) = c5.delete_vertices(&set(&c5, &[3, 4])).unwrap();
        assert_eq!(p, Graph::path(3));
        let (same, map) = c5.delete_vertices(&VertexSet::empty(5)).unwrap();
        assert_eq!(same, c5);
        assert_eq!(map.new_to_old, vec![0, 1, 2, 3, 4]);
        let k4 = Graph::complete(4);
        let (k2, _) = k4.delete_vertices(&set(&k4, &[1, 3])).unwrap();
        assert_eq!(k2, Graph::complete(2));
    }

    #[test]
    fn disjoint_unions() {
        let k1 = Graph::empty(1);
        assert_eq!(k1.disjoint_union(&k1).unwrap(), Graph::empty(2));
        let k2 = Graph::complete(2);
        let m = k2.disjoint_union(&k2).unwrap();
        assert_eq!(m, Graph::from_pairs(4, &[(0, 1), (2, 3)]).unwrap());
        let u = Graph::cycle(5).disjoint_union(&Graph::complete(3)).unwrap();
        assert_eq!((u.n(), u.edge_count(), u.components().len()), (8, 8, 2));
        let big = Graph::empty(300);
        assert_eq!(big.disjoint_union(&big), Err(Error::CapacityExceeded(600)));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::cycle(5).is_connected());
        let m = Graph::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!m.is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(Graph::empty(0).is_connected());

        assert!(Graph::cycle(5).is_two_connected());
        assert!(!Graph::path(3).is_two_connected());
        assert!(Graph::complete(4).is_two_connected());
        assert!(!Graph::complete(2).is_two_connected());
    }

    #[test]
    fn wide_graphs_use_upper_words() {
        let g = Graph::path(200);
        assert_eq!(g.edge_count(), 199);
        assert!(g.is_connected());
        assert!(g.has_edge(63, 64) && g.has_edge(128, 129));
        let (h, _) = g.delete_vertex(100).unwrap();
        assert_eq!(h.components().len(), 2);
    }
}
