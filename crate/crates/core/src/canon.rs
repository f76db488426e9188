//! Isomorphism-invariant canonical forms for small graphs.
//!
//! The search is individualization plus colour refinement. Starting from the
//! degree partition, each node refines its ordered partition to an equitable
//! one, picks the first non-singleton cell and branches on its members. Every
//! leaf is a vertex ordering; the canonical form is the least upper-triangle
//! encoding over all leaves. Two members of the target cell that are twins
//! (`N(x) ∖ y = N(y) ∖ x`) are swapped by an automorphism fixing the node, so
//! only one of them is explored.

use crate::graph::Graph;
use crate::graph6::to_graph6;

type Partition = Vec<Vec<usize>>;

/// Canonical byte string: graph6 of the canonically relabeled graph.
///
/// Equal for two graphs exactly when they are isomorphic.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    to_graph6(&canonical_graph(g)).into_bytes()
}

/// [`canonical_form`] as a string.
pub fn canonical_graph6(g: &Graph) -> String {
    to_graph6(&canonical_graph(g))
}

/// The relabeled copy of `g` whose encoding is canonical.
pub fn canonical_graph(g: &Graph) -> Graph {
    let order = canonical_order(g);
    relabel(g, &order)
}

/// `order[i]` is the vertex of `g` placed at position `i`.
pub fn canonical_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let start = refine(g, vec![(0..n).collect()]);
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search(g, start, &mut best);
    best.expect("at least one leaf").1
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

fn relabel(g: &Graph, order: &[usize]) -> Graph {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let pairs: Vec<(usize, usize)> = g.edges().iter().map(|e| (pos[e.u], pos[e.v])).collect();
    Graph::from_pairs(g.n(), &pairs).expect("relabeling keeps edges valid")
}

fn search(g: &Graph, p: Partition, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let Some(target) = p.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = p.into_iter().map(|c| c[0]).collect();
        let code = encode(g, &order);
        if best.as_ref().map_or(true, |(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell = p[target].clone();
    let mut explored: Vec<usize> = Vec::new();
    for &x in &cell {
        if explored.iter().any(|&y| twins(g, x, y)) {
            continue;
        }
        explored.push(x);
        let mut q = p.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != x).collect();
        q.splice(target..=target, [vec![x], rest]);
        search(g, refine(g, q), best);
    }
}

fn twins(g: &Graph, x: usize, y: usize) -> bool {
    let mut nx = *g.row(x);
    let mut ny = *g.row(y);
    nx.remove(y);
    ny.remove(x);
    nx == ny
}

/// Splits cells until every vertex in a cell sees the same number of
/// neighbours in each cell. New cells are ordered by their counts, so the
/// result depends only on the isomorphism type of (graph, partition).
fn refine(g: &Graph, mut p: Partition) -> Partition {
    loop {
        let mut cell_of = vec![0; g.n()];
        for (i, c) in p.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let k = p.len();
        let mut next: Partition = Vec::with_capacity(k);
        for c in &p {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = c
                .iter()
                .map(|&v| {
                    let mut counts = vec![0u32; k];
                    for w in g.row(v).iter() {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut i = 0;
            while i < keyed.len() {
                let mut j = i + 1;
                while j < keyed.len() && keyed[j].0 == keyed[i].0 {
                    j += 1;
                }
                next.push(keyed[i..j].iter().map(|(_, v)| *v).collect());
                i = j;
            }
        }
        if next.len() == k {
            return next;
        }
        p = next;
    }
}

/// Upper-triangle bits in column order, packed most significant bit first.
fn encode(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut words = vec![0u64; nbits.div_ceil(64)];
    let mut k = 0;
    for j in 1..n {
        let row = g.row(order[j]);
        for &oi in &order[..j] {
            if row.contains(oi) {
                words[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    words
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_cycles_agree() {
        let c5 = Graph::cycle(5);
        let other = Graph::from_pairs(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_form(&c5), canonical_form(&other));
        assert_eq!(canonical_form(&c5), canonical_form(&c5));
    }

    #[test]
    fn distinguishes_cycle_from_path() {
        assert_ne!(
            canonical_form(&Graph::cycle(5)),
            canonical_form(&Graph::path(5))
        );
    }

    #[test]
    fn twin_heavy_graphs_are_quick() {
        for n in [0, 1, 9, 20] {
            assert_eq!(canonical_graph(&Graph::empty(n)), Graph::empty(n));
        }
        assert_eq!(canonical_graph(&Graph::complete(20)), Graph::complete(20));
    }

    #[test]
    fn regular_graphs() {
        let p = Graph::petersen();
        let q = crate::graph6::parse_graph6("IheA@GUAo").unwrap();
        assert!(is_isomorphic(&p, &q));
        // Both are 3-regular on 6 vertices but only one is bipartite.
        let prism = Graph::from_pairs(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let k33 = Graph::from_pairs(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert!(!is_isomorphic(&prism, &k33));
        // C6 versus two triangles: same degree sequence, refinement alone cannot tell.
        let two_k3 = Graph::complete(3)
            .disjoint_union(&Graph::complete(3))
            .unwrap();
        assert!(!is_isomorphic(&Graph::cycle(6), &two_k3));
    }
}
