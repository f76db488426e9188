//! Seeded instance generators for the verification suites.
//!
//! All generators are sequential and draw from a ChaCha8 stream, so a seed
//! fixes the instance list exactly.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::census::connected_alpha_critical_on;
use crate::critical::{check_side_conditions, enumerate_maximal_alpha_minus_one, Condition};
use crate::error::Result;
use crate::graph::{EdgeRef, Graph, VertexSet};
use crate::ops::{ev_partitions, EVPartition, JoinQuadruple};
use crate::solver::{alpha_number, alpha_within, is_alpha_critical_graph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut pairs = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_pairs(n, &pairs).expect("valid random graph")
}

/// Connected α-critical graphs on 1 to `max_n` vertices (`max_n ≤ 9`).
pub fn critical_corpus(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(connected_alpha_critical_on(n)?);
    }
    Ok(out)
}

/// One side of a 1-join.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side {
    pub g: Graph,
    pub g0: VertexSet,
}

fn pick_maximal<R: Rng>(rng: &mut R, g: &Graph) -> Result<VertexSet> {
    let all = enumerate_maximal_alpha_minus_one(g)?;
    Ok(all
        .choose(rng)
        .expect("nonempty graphs have a maximal set")
        .0)
}

/// Drops vertices at random while the stability stays `α − 1`.
fn shrink<R: Rng>(rng: &mut R, g: &Graph, s: VertexSet, p: f64) -> VertexSet {
    let target = alpha_number(g) - 1;
    let mut s = s;
    for v in s.to_vec() {
        if rng.gen_bool(p) {
            let t = s.without(v);
            if alpha_within(g, &t).expect("same host") == target {
                s = t;
            }
        }
    }
    s
}

/// A side with `α(G0) = α(G) − 1` and nothing else promised. Half come from
/// the critical corpus, half from `G(n, p)`.
fn gap_side<R: Rng>(rng: &mut R, corpus: &[Graph], max_n: usize) -> Result<Side> {
    let g = if rng.gen_bool(0.5) {
        let small: Vec<&Graph> = corpus.iter().filter(|g| g.n() <= max_n).collect();
        (*small.choose(rng).expect("corpus is nonempty")).clone()
    } else {
        let n = rng.gen_range(1..=max_n);
        let p = rng.gen_range(0.15..0.85);
        random_graph(rng, n, p)
    };
    let m = pick_maximal(rng, &g)?;
    let g0 = if rng.gen_bool(0.5) {
        m
    } else {
        shrink(rng, &g, m, 0.4)
    };
    Ok(Side { g, g0 })
}

fn join(a: Side, b: Side) -> JoinQuadruple {
    JoinQuadruple::new(a.g, a.g0, b.g, b.g0).expect("generated sides are valid")
}

/// Quadruples with `α(G0) = α(G) − 1` and `α(H0) = α(H) − 1`.
pub fn gap_quadruples(
    seed: u64,
    count: usize,
    max_side: usize,
    max_total: usize,
) -> Result<Vec<JoinQuadruple>> {
    let corpus = critical_corpus(max_side.min(8))?;
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let a = gap_side(&mut rng, &corpus, max_side)?;
        let b = gap_side(&mut rng, &corpus, max_side)?;
        if a.g.n() + b.g.n() <= max_total {
            out.push(join(a, b));
        }
    }
    Ok(out)
}

/// Pools of sides used for the condition-targeted generators.
struct SidePools {
    /// All three conditions hold.
    valid: Vec<Side>,
}

impl SidePools {
    /// Valid sides: every maximal `α − 1` set of each corpus graph, plus
    /// sides of non-critical random graphs that still meet all conditions.
    fn build<R: Rng>(rng: &mut R, corpus: &[Graph], max_n: usize) -> Result<SidePools> {
        let mut valid = Vec::new();
        for g in corpus.iter().filter(|g| g.n() <= max_n) {
            for (s, _) in enumerate_maximal_alpha_minus_one(g)? {
                valid.push(Side {
                    g: g.clone(),
                    g0: s,
                });
            }
        }
        let mut extra = 0;
        for _ in 0..4000 {
            if extra >= valid.len() {
                break;
            }
            let n = rng.gen_range(2..=max_n.min(7));
            let p = rng.gen_range(0.3..0.9);
            let g = random_graph(rng, n, p);
            if is_alpha_critical_graph(&g) {
                continue;
            }
            for (s, _) in enumerate_maximal_alpha_minus_one(&g)? {
                if check_side_conditions(&g, &s)? == [true; 3] {
                    valid.push(Side {
                        g: g.clone(),
                        g0: s,
                    });
                    extra += 1;
                }
            }
        }
        Ok(SidePools { valid })
    }

    fn valid<R: Rng>(&self, rng: &mut R) -> Side {
        self.valid.choose(rng).expect("pool is nonempty").clone()
    }
}

/// Quadruples meeting conditions (i)–(iii) on both sides.
pub fn positive_quadruples(seed: u64, count: usize, max_side: usize) -> Result<Vec<JoinQuadruple>> {
    let corpus = critical_corpus(max_side.min(8))?;
    let mut rng = rng(seed);
    let pools = SidePools::build(&mut rng, &corpus, max_side)?;
    Ok((0..count)
        .map(|_| join(pools.valid(&mut rng), pools.valid(&mut rng)))
        .collect())
}

/// Random single edit of a valid side: shrink `G0`, toggle an edge, or add
/// a vertex (inside or outside `G0`) with a random neighbourhood.
fn perturb<R: Rng>(rng: &mut R, side: &Side, max_n: usize) -> Option<Side> {
    let (g, g0) = (&side.g, side.g0);
    let n = g.n();
    match rng.gen_range(0..4) {
        0 => {
            let v = *g0.to_vec().choose(rng)?;
            Some(Side {
                g: g.clone(),
                g0: g0.without(v),
            })
        }
        1 | 2 if n >= 2 => {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            let e = EdgeRef::new(u, v).ok()?;
            let g = if g.contains_edge(&e) {
                g.delete_edge(&e).ok()?
            } else {
                g.add_edge(&e).ok()?
            };
            Some(Side { g, g0 })
        }
        _ if n < max_n => {
            let mut pairs: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
            for u in 0..n {
                if rng.gen_bool(0.4) {
                    pairs.push((u, n));
                }
            }
            let g2 = Graph::from_pairs(n + 1, &pairs).ok()?;
            let mut s = VertexSet::from_bits(n + 1, *g0.bits());
            if rng.gen_bool(0.5) {
                s = s.with(n);
            }
            Some(Side { g: g2, g0: s })
        }
        _ => None,
    }
}

/// For each condition, `per_condition` quadruples where exactly that
/// condition fails on exactly one side (chosen at random) and the stability
/// gap holds. Returned grouped by condition in the order (i), (ii), (iii).
pub fn negative_quadruples(
    seed: u64,
    per_condition: usize,
    max_side: usize,
) -> Result<Vec<(Condition, JoinQuadruple)>> {
    let corpus = critical_corpus(max_side.min(8))?;
    let mut rng = rng(seed);
    let pools = SidePools::build(&mut rng, &corpus, max_side)?;
    let order = [
        Condition::Maximality,
        Condition::OutsideEdgesCritical,
        Condition::InsideEdges,
    ];
    let mut buckets: Vec<Vec<JoinQuadruple>> = vec![Vec::new(); 3];
    let mut attempts = 0usize;
    while buckets.iter().any(|b| b.len() < per_condition) {
        attempts += 1;
        assert!(attempts < 2_000_000, "negative generator stalled");
        let base = pools.valid(&mut rng);
        let Some(bad) = perturb(&mut rng, &base, max_side) else {
            continue;
        };
        if bad.g0.len() == bad.g.n() {
            continue;
        }
        let Ok(flags) = check_side_conditions(&bad.g, &bad.g0) else {
            continue;
        };
        if flags.iter().filter(|&&f| !f).count() != 1 {
            continue;
        }
        let k = flags.iter().position(|&f| !f).expect("one flag is false");
        if buckets[k].len() >= per_condition {
            continue;
        }
        let good = pools.valid(&mut rng);
        let q = if rng.gen_bool(0.5) {
            join(bad, good)
        } else {
            join(good, bad)
        };
        buckets[k].push(q);
    }
    Ok(buckets
        .into_iter()
        .zip(order)
        .flat_map(|(b, c)| b.into_iter().map(move |q| (c, q)))
        .collect())
}

/// Arguments of one edge-vertex composition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvInstance {
    #[serde(serialize_with = "ser_graph6")]
    pub g: Graph,
    pub e: EdgeRef,
    #[serde(serialize_with = "ser_graph6")]
    pub h: Graph,
    pub v: usize,
    pub p: EVPartition,
}

pub(crate) fn ser_graph6<S: serde::Serializer>(
    g: &Graph,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::graph6::to_graph6(g))
}

/// Compositions of connected α-critical graphs with at most `max_total`
/// vertices in the result: random edge, random vertex of degree ≥ 2, random
/// partition.
pub fn ev_instances(seed: u64, count: usize, max_total: usize) -> Result<Vec<EvInstance>> {
    let corpus = critical_corpus(8)?;
    let gs: Vec<&Graph> = corpus.iter().filter(|g| g.edge_count() > 0).collect();
    let hs: Vec<&Graph> = corpus.iter().filter(|h| h.max_degree() >= 2).collect();
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let g = *gs.choose(&mut rng).expect("corpus has edges");
        let h = *hs
            .choose(&mut rng)
            .expect("corpus has a vertex of degree 2");
        if g.n() + h.n() - 1 > max_total {
            continue;
        }
        out.push(random_ev(&mut rng, g, h));
    }
    Ok(out)
}

pub(crate) fn random_ev<R: Rng>(rng: &mut R, g: &Graph, h: &Graph) -> EvInstance {
    let e = *g.edges().choose(rng).expect("g has an edge");
    let vs: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) >= 2).collect();
    let v = *vs.choose(rng).expect("h has a vertex of degree 2");
    let p = *ev_partitions(h, v)
        .expect("valid vertex")
        .choose(rng)
        .expect("degree ≥ 2");
    EvInstance {
        g: g.clone(),
        e,
        h: h.clone(),
        v,
        p,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::critical::{check_join_conditions, check_stability_gap};

    #[test]
    fn seeds_are_reproducible() {
        assert_eq!(
            gap_quadruples(3, 10, 6, 12).unwrap(),
            gap_quadruples(3, 10, 6, 12).unwrap()
        );
        assert_ne!(
            gap_quadruples(3, 10, 6, 12).unwrap(),
            gap_quadruples(4, 10, 6, 12).unwrap()
        );
    }

    #[test]
    fn gap_quadruples_meet_hypothesis() {
        for q in gap_quadruples(1, 30, 7, 12).unwrap() {
            check_stability_gap(&q).unwrap();
            assert!(q.g.n() + q.h.n() <= 12);
        }
    }

    #[test]
    fn positives_meet_all_conditions() {
        for q in positive_quadruples(2, 20, 7).unwrap() {
            assert!(check_join_conditions(&q).unwrap().all_hold);
        }
    }

    #[test]
    fn negatives_fail_exactly_one_condition() {
        let qs = negative_quadruples(5, 4, 7).unwrap();
        assert_eq!(qs.len(), 12);
        for (c, q) in qs {
            let r = check_join_conditions(&q).unwrap();
            assert_eq!(
                r.violations
                    .iter()
                    .map(|v| v.condition)
                    .collect::<std::collections::HashSet<_>>()
                    .len(),
                1
            );
            assert!(r.violations.iter().all(|v| v.condition == c));
        }
    }
}
