//! Composition operations.
//!
//! Id conventions: a left operand keeps its ids, a right operand is shifted
//! past it, and vertices created by an operation take the highest ids in the
//! order documented on each function. Every result carries provenance labels.

use serde::Serialize;

use crate::bits::{Bits, CAPACITY};
use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Graph, VertexSet};

/// How `N(v)` is shared between the two halves of a split vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SplitPartition {
    pub n_vprime: VertexSet,
    pub n_vdoubleprime: VertexSet,
}

/// How `N_H(v)` is attached to the endpoints of the removed edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EVPartition {
    pub u1: VertexSet,
    pub u2: VertexSet,
}

/// Input to [`one_join`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinQuadruple {
    pub g: Graph,
    pub g0: VertexSet,
    pub h: Graph,
    pub h0: VertexSet,
}

impl JoinQuadruple {
    /// Checks hosts and that each side keeps at least one vertex outside its
    /// distinguished subgraph.
    pub fn new(g: Graph, g0: VertexSet, h: Graph, h0: VertexSet) -> Result<JoinQuadruple> {
        let q = JoinQuadruple { g, g0, h, h0 };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, graph, set) in [("G", &self.g, &self.g0), ("H", &self.h, &self.h0)] {
            if set.host_n() != graph.n() {
                return Err(Error::InvalidQuadruple(format!(
                    "{name}0 indexes {} vertices but {name} has {}",
                    set.host_n(),
                    graph.n()
                )));
            }
            if set.len() == graph.n() {
                return Err(Error::InvalidQuadruple(format!(
                    "{name}0 must leave a vertex of {name} outside it"
                )));
            }
        }
        if self.g.n() + self.h.n() > CAPACITY {
            return Err(Error::CapacityExceeded(self.g.n() + self.h.n()));
        }
        Ok(())
    }

    /// The same join seen from the other side.
    pub fn swapped(&self) -> JoinQuadruple {
        JoinQuadruple {
            g: self.h.clone(),
            g0: self.h0,
            h: self.g.clone(),
            h0: self.g0,
        }
    }

    /// Id of `h`'s vertex `w` inside the join.
    pub fn h_id(&self, w: usize) -> usize {
        self.g.n() + w
    }
}

fn own_labels(g: &Graph) -> Vec<String> {
    (0..g.n()).map(|v| g.label(v)).collect()
}

fn side_labels<'a>(side: &'a str, g: &'a Graph) -> impl Iterator<Item = String> + 'a {
    (0..g.n()).map(move |v| format!("{side}:{}", g.label(v)))
}

fn link(adj: &mut [Bits], a: usize, b: usize) {
    adj[a].insert(b);
    adj[b].insert(a);
}

fn unlink(adj: &mut [Bits], a: usize, b: usize) {
    adj[a].remove(b);
    adj[b].remove(a);
}

fn check_capacity(n: usize) -> Result<()> {
    if n > CAPACITY {
        Err(Error::CapacityExceeded(n))
    } else {
        Ok(())
    }
}

fn rows_of(g: &Graph, extra: usize) -> Vec<Bits> {
    let mut adj: Vec<Bits> = (0..g.n()).map(|v| *g.row(v)).collect();
    adj.resize(g.n() + extra, Bits::EMPTY);
    adj
}

/// `s(G, e)`: replaces `e = {u, v}` by the path `u - u′ - v′ - v` with
/// `u′ = n` and `v′ = n + 1`.
pub fn odd_subdivide(g: &Graph, e: &EdgeRef) -> Result<Graph> {
    g.check_edge(e)?;
    let n = g.n();
    check_capacity(n + 2)?;
    let mut adj = rows_of(g, 2);
    unlink(&mut adj, e.u, e.v);
    link(&mut adj, e.u, n);
    link(&mut adj, n, n + 1);
    link(&mut adj, n + 1, e.v);
    let mut labels = own_labels(g);
    labels.extend(["new:u′".to_owned(), "new:v′".to_owned()]);
    Ok(Graph::from_rows(adj).with_labels(labels))
}

fn check_halves(total: &VertexSet, a: &VertexSet, b: &VertexSet) -> Result<()> {
    if a.host_n() != total.host_n() || b.host_n() != total.host_n() {
        return Err(Error::BadPartition("parts index the wrong graph".into()));
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::BadPartition("both parts must be nonempty".into()));
    }
    if !a.intersection(b).is_empty() {
        return Err(Error::BadPartition(format!(
            "parts overlap in {:?}",
            a.intersection(b)
        )));
    }
    if a.union(b) != *total {
        return Err(Error::BadPartition(format!(
            "parts cover {:?}, neighbourhood is {:?}",
            a.union(b),
            total
        )));
    }
    Ok(())
}

impl SplitPartition {
    pub fn validate(&self, g: &Graph, v: usize) -> Result<()> {
        g.check_vertex(v)?;
        check_halves(&g.neighbors(v), &self.n_vprime, &self.n_vdoubleprime)
    }
}

impl EVPartition {
    pub fn validate(&self, h: &Graph, v: usize) -> Result<()> {
        h.check_vertex(v)?;
        check_halves(&h.neighbors(v), &self.u1, &self.u2)
    }
}

/// Where vertex `w` of a graph lands once vertex `gone` is deleted.
fn after_removal(w: usize, gone: usize) -> usize {
    if w < gone {
        w
    } else {
        w - 1
    }
}

/// `s(G, v)`: removes `v` and appends `v′ = n − 1`, `v″ = n`, `u = n + 1`
/// (ids after deletion), with `v′ ~ N_{v′} + u` and `v″ ~ N_{v″} + u`.
/// Remaining vertices above `v` shift down by one.
pub fn split_vertex(g: &Graph, v: usize, p: &SplitPartition) -> Result<Graph> {
    p.validate(g, v)?;
    let n = g.n();
    check_capacity(n + 2)?;
    let (rest, _) = g.delete_vertex(v)?;
    let base = n - 1;
    let (vp, vpp, u) = (base, base + 1, base + 2);
    let mut adj = rows_of(&rest, 3);
    for w in p.n_vprime.iter() {
        link(&mut adj, vp, after_removal(w, v));
    }
    for w in p.n_vdoubleprime.iter() {
        link(&mut adj, vpp, after_removal(w, v));
    }
    link(&mut adj, vp, u);
    link(&mut adj, vpp, u);
    let mut labels: Vec<String> = (0..n).filter(|&w| w != v).map(|w| g.label(w)).collect();
    labels.extend(["new:v′".to_owned(), "new:v″".to_owned(), "new:u".to_owned()]);
    Ok(Graph::from_rows(adj).with_labels(labels))
}

/// `d(G, v)`: appends `v′ = n` adjacent to exactly `N[v]`.
pub fn duplicate_vertex(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    let n = g.n();
    check_capacity(n + 1)?;
    let mut adj = rows_of(g, 1);
    for w in g.row(v).iter() {
        link(&mut adj, n, w);
    }
    link(&mut adj, n, v);
    let mut labels = own_labels(g);
    labels.push("new:v′".to_owned());
    Ok(Graph::from_rows(adj).with_labels(labels))
}

/// Id of `h`'s vertex `w` inside `c(G, e, H, v)`.
pub fn ev_h_id(g_n: usize, v: usize, w: usize) -> usize {
    debug_assert_ne!(w, v);
    g_n + after_removal(w, v)
}

/// `c(G, e, H, v)`: `G ∖ e` beside `H ∖ v`, with `v1 = e.u` joined to
/// `U1` and `v2 = e.v` joined to `U2`. `G` keeps its ids and the vertices
/// of `H ∖ v` follow in order.
pub fn edge_vertex_compose(
    g: &Graph,
    e: &EdgeRef,
    h: &Graph,
    v: usize,
    p: &EVPartition,
) -> Result<Graph> {
    g.check_edge(e)?;
    p.validate(h, v)?;
    let gn = g.n();
    check_capacity(gn + h.n() - 1)?;
    let (hv, _) = h.delete_vertex(v)?;
    let mut adj = rows_of(g, hv.n());
    unlink(&mut adj, e.u, e.v);
    for a in 0..hv.n() {
        for b in hv.row(a).iter() {
            adj[gn + a].insert(gn + b);
        }
    }
    for w in p.u1.iter() {
        link(&mut adj, e.u, ev_h_id(gn, v, w));
    }
    for w in p.u2.iter() {
        link(&mut adj, e.v, ev_h_id(gn, v, w));
    }
    let labels = side_labels("g", g)
        .chain(
            side_labels("h", h)
                .enumerate()
                .filter(|&(w, _)| w != v)
                .map(|(_, l)| l),
        )
        .collect();
    Ok(Graph::from_rows(adj).with_labels(labels))
}

/// `j(G, G0, H, H0)`: `G ⊔ H` plus every edge between `V(G) ∖ G0` and
/// `V(H) ∖ H0`.
pub fn one_join(q: &JoinQuadruple) -> Result<Graph> {
    q.validate()?;
    let gn = q.g.n();
    let mut adj = rows_of(&q.g, q.h.n());
    for a in 0..q.h.n() {
        for b in q.h.row(a).iter() {
            adj[gn + a].insert(gn + b);
        }
    }
    let outer_h: Vec<usize> = q.h0.complement().iter().map(|w| gn + w).collect();
    for x in q.g0.complement().iter() {
        for &y in &outer_h {
            link(&mut adj, x, y);
        }
    }
    let labels = side_labels("g", &q.g)
        .chain(side_labels("h", &q.h))
        .collect();
    Ok(Graph::from_rows(adj).with_labels(labels))
}

/// All unordered splittings of `N(v)` into two nonempty parts, each listed
/// once with the least neighbour on the `v′` side: `2^(d−1) − 1` of them.
pub fn split_partitions(g: &Graph, v: usize) -> Result<Vec<SplitPartition>> {
    g.check_vertex(v)?;
    let nb = g.neighbors(v).to_vec();
    let n = g.n();
    if nb.len() < 2 {
        return Ok(Vec::new());
    }
    assert!(nb.len() < 32, "partition listing is limited to degree 31");
    let rest = &nb[1..];
    let parts = (1u32..(1 << rest.len()))
        .map(|mask| {
            let mut a = VertexSet::empty(n).with(nb[0]);
            let mut b = VertexSet::empty(n);
            for (i, &w) in rest.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    b = b.with(w);
                } else {
                    a = a.with(w);
                }
            }
            SplitPartition {
                n_vprime: a,
                n_vdoubleprime: b,
            }
        })
        .collect();
    Ok(parts)
}

/// All ordered `(U1, U2)` partitions of `N_H(v)`: `2^d − 2` of them.
pub fn ev_partitions(h: &Graph, v: usize) -> Result<Vec<EVPartition>> {
    h.check_vertex(v)?;
    let nb = h.neighbors(v).to_vec();
    let n = h.n();
    assert!(nb.len() < 32, "partition listing is limited to degree 31");
    let full = (1u32 << nb.len()) - 1;
    let parts = (1..full)
        .map(|mask| {
            let pick = |want: u32| {
                let vs = nb
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == want)
                    .map(|(_, &w)| w);
                VertexSet::from_vertices(n, vs).expect("neighbours are in range")
            };
            EVPartition {
                u1: pick(1),
                u2: pick(0),
            }
        })
        .collect();
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::solver::{alpha_number, is_alpha_critical_graph};

    fn edge(u: usize, v: usize) -> EdgeRef {
        EdgeRef::new(u, v).unwrap()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn subdivision() {
        let s = odd_subdivide(&Graph::complete(3), &edge(0, 1)).unwrap();
        assert!(is_isomorphic(&s, &Graph::cycle(5)));
        assert!(s.has_edge(0, 3) && s.has_edge(3, 4) && s.has_edge(4, 1) && !s.has_edge(0, 1));
        assert_eq!(s.label(3), "new:u′");
        let p = odd_subdivide(&Graph::complete(2), &edge(0, 1)).unwrap();
        assert!(is_isomorphic(&p, &Graph::path(4)));
        let c7 = odd_subdivide(&Graph::cycle(5), &edge(1, 2)).unwrap();
        assert_eq!(alpha_number(&c7), 3);
        assert_eq!(
            odd_subdivide(&Graph::path(3), &edge(0, 2)),
            Err(Error::NoSuchEdge(0, 2))
        );
    }

    #[test]
    fn splitting() {
        let k3 = Graph::complete(3);
        let p = SplitPartition {
            n_vprime: set(3, &[1]),
            n_vdoubleprime: set(3, &[2]),
        };
        let s = split_vertex(&k3, 0, &p).unwrap();
        assert!(is_isomorphic(&s, &Graph::cycle(5)));
        // Old vertices 1, 2 become 0, 1; v′ = 2, v″ = 3, u = 4.
        assert!(s.has_edge(2, 0) && s.has_edge(3, 1) && s.has_edge(2, 4) && s.has_edge(3, 4));
        assert_eq!(s.degree(4), 2);

        let c5 = Graph::cycle(5);
        let p = SplitPartition {
            n_vprime: set(5, &[1]),
            n_vdoubleprime: set(5, &[4]),
        };
        assert!(is_isomorphic(
            &split_vertex(&c5, 0, &p).unwrap(),
            &Graph::cycle(7)
        ));
    }

    #[test]
    fn splitting_off_one_neighbour_subdivides() {
        let g = Graph::petersen();
        let v = 0;
        for w in g.neighbors(v).iter() {
            let p = SplitPartition {
                n_vprime: g.neighbors(v).without(w),
                n_vdoubleprime: set(10, &[w]),
            };
            let s = split_vertex(&g, v, &p).unwrap();
            assert!(is_isomorphic(&s, &odd_subdivide(&g, &edge(v, w)).unwrap()));
        }
    }

    #[test]
    fn bad_partitions() {
        let c5 = Graph::cycle(5);
        let overlap = SplitPartition {
            n_vprime: set(5, &[1, 4]),
            n_vdoubleprime: set(5, &[4]),
        };
        assert!(matches!(
            split_vertex(&c5, 0, &overlap),
            Err(Error::BadPartition(_))
        ));
        let empty = SplitPartition {
            n_vprime: set(5, &[1, 4]),
            n_vdoubleprime: set(5, &[]),
        };
        assert!(matches!(
            split_vertex(&c5, 0, &empty),
            Err(Error::BadPartition(_))
        ));
        let short = SplitPartition {
            n_vprime: set(5, &[1]),
            n_vdoubleprime: set(5, &[2]),
        };
        assert!(matches!(
            split_vertex(&c5, 0, &short),
            Err(Error::BadPartition(_))
        ));
        assert!(matches!(
            split_vertex(&c5, 7, &short),
            Err(Error::NoSuchVertex { vertex: 7, n: 5 })
        ));
    }

    #[test]
    fn duplication() {
        for n in 2..9 {
            let d = duplicate_vertex(&Graph::complete(n - 1), 0).unwrap();
            assert_eq!(d, Graph::complete(n));
        }
        assert_eq!(
            duplicate_vertex(&Graph::empty(1), 0).unwrap(),
            Graph::complete(2)
        );
        let d = duplicate_vertex(&Graph::cycle(5), 2).unwrap();
        assert_eq!(alpha_number(&d), 2);
        assert_eq!(d.closed_neighbors(5).to_vec(), vec![1, 2, 3, 5]);
    }

    #[test]
    fn edge_vertex_composition() {
        let c5 = Graph::cycle(5);
        let k3 = Graph::complete(3);
        let p = EVPartition {
            u1: set(3, &[1]),
            u2: set(3, &[2]),
        };
        let w = edge_vertex_compose(&c5, &edge(0, 1), &k3, 0, &p).unwrap();
        assert!(is_isomorphic(&w, &Graph::cycle(7)));
        assert_eq!(w.label(5), "h:1");

        let p = EVPartition {
            u1: set(5, &[1]),
            u2: set(5, &[4]),
        };
        let w = edge_vertex_compose(&c5, &edge(0, 1), &c5, 0, &p).unwrap();
        assert_eq!(w.n(), 9);
        assert!(is_alpha_critical_graph(&w));
        assert!(w.has_edge(0, ev_h_id(5, 0, 1)) && w.has_edge(1, ev_h_id(5, 0, 4)));
    }

    #[test]
    fn joins() {
        let k1 = Graph::empty(1);
        let q = JoinQuadruple::new(k1.clone(), set(1, &[]), k1.clone(), set(1, &[])).unwrap();
        assert_eq!(one_join(&q).unwrap(), Graph::complete(2));

        let k3 = Graph::complete(3);
        let q = JoinQuadruple::new(k3.clone(), set(3, &[]), k3.clone(), set(3, &[])).unwrap();
        assert_eq!(one_join(&q).unwrap(), Graph::complete(6));

        let c5 = Graph::cycle(5);
        let q =
            JoinQuadruple::new(c5.clone(), set(5, &[2, 3]), c5.clone(), set(5, &[2, 3])).unwrap();
        let j = one_join(&q).unwrap();
        assert_eq!((j.n(), j.edge_count()), (10, 10 + 9));
        assert_eq!(alpha_number(&j), 3);
        assert!(is_alpha_critical_graph(&j));
        assert!(is_isomorphic(&j, &one_join(&q.swapped()).unwrap()));

        assert!(matches!(
            JoinQuadruple::new(k1.clone(), set(1, &[0]), k1.clone(), set(1, &[])),
            Err(Error::InvalidQuadruple(_))
        ));
        assert!(matches!(
            JoinQuadruple::new(k1.clone(), set(2, &[]), k1, set(1, &[])),
            Err(Error::InvalidQuadruple(_))
        ));
    }

    #[test]
    fn partition_counts() {
        let g = Graph::petersen();
        assert_eq!(split_partitions(&g, 0).unwrap().len(), 3);
        assert_eq!(ev_partitions(&g, 0).unwrap().len(), 6);
        let k6 = Graph::complete(6);
        assert_eq!(split_partitions(&k6, 0).unwrap().len(), 15);
        assert_eq!(ev_partitions(&k6, 0).unwrap().len(), 30);
        assert!(split_partitions(&Graph::path(2), 0).unwrap().is_empty());
        for p in split_partitions(&k6, 2).unwrap() {
            p.validate(&k6, 2).unwrap();
        }
        for p in ev_partitions(&k6, 2).unwrap() {
            p.validate(&k6, 2).unwrap();
        }
    }
}
