//! Maximal induced subgraphs of stability `α − 1`, the 1-join criticality
//! conditions, and generators for the maximal-subgraph families of
//! compositions.

use std::cmp::Ordering;

use serde::{Serialize, Serializer};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Graph, VertexSet};
use crate::ops::{
    edge_vertex_compose, ev_h_id, one_join, EVPartition, JoinQuadruple, SplitPartition,
};
use crate::solver::{
    alpha_number, alpha_within_bits, edge_is_critical_given, is_alpha_critical_graph,
};

/// Largest graph whose maximal `α − 1` subgraphs are enumerated.
pub const MAXIMAL_CAP: usize = 14;

/// `V(G) ∖ N[v]`.
pub fn canonical_subgraph(g: &Graph, v: usize) -> Result<VertexSet> {
    g.check_vertex(v)?;
    Ok(g.closed_neighbors(v).complement())
}

/// Whether every edge at `v` is α-critical.
pub fn check_vertex_star_critical(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    let a = alpha_number(g);
    Ok(g.row(v)
        .iter()
        .all(|w| edge_is_critical_given(g, &EdgeRef::new(v, w).expect("no loops"), a)))
}

/// `α(G[s]) = α(G) − 1` and no single added vertex keeps it there.
///
/// Adding one vertex raises `α` by at most one, so if some strict superset
/// of `s` still had stability `α − 1`, so would a one-vertex extension.
pub fn is_maximal_alpha_minus_one(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_host(s)?;
    let a = alpha_number(g);
    Ok(a >= 1
        && first_extension(g, s.bits(), a - 1).is_none()
        && alpha_within_bits(g, s.bits()) == a - 1)
}

/// A vertex whose addition keeps `α(G[s]) ≤ target`, if any.
fn first_extension(g: &Graph, s: &Bits, target: usize) -> Option<usize> {
    (0..g.n()).filter(|&u| !s.contains(u)).find(|&u| {
        let mut t = *s;
        t.insert(u);
        alpha_within_bits(g, &t) <= target
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MaximalClass {
    /// The set is `V ∖ N[v]`; `v` is the least such vertex.
    Canonical(usize),
    NonCanonical,
}

impl MaximalClass {
    pub fn is_canonical(&self) -> bool {
        matches!(self, MaximalClass::Canonical(_))
    }
}

impl std::fmt::Display for MaximalClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MaximalClass::Canonical(v) => write!(f, "canonical:{v}"),
            MaximalClass::NonCanonical => write!(f, "non-canonical"),
        }
    }
}

impl Serialize for MaximalClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `α(G[S])` for every `S ⊆ V(G)`, indexed by bitmask.
///
/// `α(S) = max(α(S − v), 1 + α(S − N[v]))` for the lowest `v ∈ S`.
pub fn alpha_table(g: &Graph) -> Result<Vec<u8>> {
    let n = g.n();
    if n > MAXIMAL_CAP {
        return Err(Error::TooLargeForEnumeration {
            n,
            cap: MAXIMAL_CAP,
        });
    }
    let closed: Vec<u32> = (0..n).map(|v| g.row(v).0[0] as u32 | 1 << v).collect();
    let mut t = vec![0u8; 1 << n];
    for s in 1usize..(1 << n) {
        let v = s.trailing_zeros() as usize;
        let without = t[s & (s - 1)];
        let with = 1 + t[s & !(closed[v] as usize)];
        t[s] = without.max(with);
    }
    Ok(t)
}

/// Every inclusion-maximal `S` with `α(G[S]) = α(G) − 1`, in lexicographic
/// order, each tagged canonical or not.
pub fn enumerate_maximal_alpha_minus_one(g: &Graph) -> Result<Vec<(VertexSet, MaximalClass)>> {
    let n = g.n();
    let t = alpha_table(g)?;
    let full = (1usize << n) - 1;
    let a = t[full];
    if a == 0 {
        return Ok(Vec::new());
    }
    let target = a - 1;
    let mut out: Vec<VertexSet> = (0..=full)
        .filter(|&s| t[s] == target && (0..n).all(|u| s >> u & 1 == 1 || t[s | 1 << u] > target))
        .map(|s| mask_set(n, s))
        .collect();
    out.sort_by(VertexSet::cmp_lex);
    Ok(out.into_iter().map(|s| (s, classify(g, &s))).collect())
}

fn mask_set(n: usize, mask: usize) -> VertexSet {
    VertexSet::from_bits(n, (0..n).filter(|&v| mask >> v & 1 == 1).collect())
}

pub fn classify(g: &Graph, s: &VertexSet) -> MaximalClass {
    (0..g.n())
        .find(|&v| g.closed_neighbors(v).complement() == *s)
        .map_or(MaximalClass::NonCanonical, MaximalClass::Canonical)
}

fn maximal_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    Ok(enumerate_maximal_alpha_minus_one(g)?
        .into_iter()
        .map(|(s, _)| s)
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    G,
    H,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Condition {
    /// `G0` maximal with stability `α(G) − 1`.
    #[serde(rename = "i")]
    Maximality,
    /// Edges of `G` outside `G0` are α-critical in `G`.
    #[serde(rename = "ii")]
    OutsideEdgesCritical,
    /// Edges of `G0` are α-critical in `G` or in `G0`.
    #[serde(rename = "iii")]
    InsideEdges,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Edge(EdgeRef),
    /// A strict superset of `G0` that keeps stability `α − 1`.
    Extension(VertexSet),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: Condition,
    pub side: Side,
    pub witness: Witness,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PerSide {
    pub g: bool,
    pub h: bool,
}

impl PerSide {
    pub fn both(&self) -> bool {
        self.g && self.h
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinConditionReport {
    pub cond_maximality: PerSide,
    pub cond_outside_edges_critical: PerSide,
    pub cond_inside_edges: PerSide,
    pub all_hold: bool,
    pub violations: Vec<Violation>,
}

/// Fails unless `α(G[g0]) = α(G) − 1` and `α(H[h0]) = α(H) − 1`.
pub fn check_stability_gap(q: &JoinQuadruple) -> Result<()> {
    q.validate()?;
    for (side, g, s) in [("G", &q.g, &q.g0), ("H", &q.h, &q.h0)] {
        let a = alpha_number(g);
        let a0 = alpha_within_bits(g, s.bits());
        if a0 + 1 != a {
            return Err(Error::HypothesisViolated(format!(
                "α({side}0) = {a0} but α({side}) = {a}"
            )));
        }
    }
    Ok(())
}

struct SideConditions {
    maximal: bool,
    outside: bool,
    inside: bool,
    violations: Vec<(Condition, Witness)>,
}

/// The three 1-join conditions for one side, given `α(G[g0]) = α(G) − 1`.
fn side_conditions(g: &Graph, g0: &VertexSet) -> SideConditions {
    let a = alpha_number(g);
    let mut violations = Vec::new();
    let maximal = match first_extension(g, g0.bits(), a - 1) {
        None => true,
        Some(u) => {
            violations.push((Condition::Maximality, Witness::Extension(g0.with(u))));
            false
        }
    };
    let (sub, map) = g.induced_subgraph(g0).expect("same host");
    let a_sub = a - 1;
    let mut outside = true;
    let mut inside = true;
    for e in g.edges() {
        let in_g0 = g0.contains(e.u) && g0.contains(e.v);
        if edge_is_critical_given(g, &e, a) {
            continue;
        }
        if !in_g0 {
            outside = false;
            violations.push((Condition::OutsideEdgesCritical, Witness::Edge(e)));
            continue;
        }
        let (x, y) = (map.old_to_new[e.u].unwrap(), map.old_to_new[e.v].unwrap());
        let local = EdgeRef::new(x, y).expect("distinct endpoints");
        if !edge_is_critical_given(&sub, &local, a_sub) {
            inside = false;
            violations.push((Condition::InsideEdges, Witness::Edge(e)));
        }
    }
    SideConditions {
        maximal,
        outside,
        inside,
        violations,
    }
}

/// Conditions (i), (ii), (iii) for a single side `(G, G0)`.
pub fn check_side_conditions(g: &Graph, g0: &VertexSet) -> Result<[bool; 3]> {
    g.check_host(g0)?;
    if alpha_within_bits(g, g0.bits()) + 1 != alpha_number(g) {
        return Err(Error::HypothesisViolated("α(G0) ≠ α(G) − 1".into()));
    }
    let s = side_conditions(g, g0);
    Ok([s.maximal, s.outside, s.inside])
}

/// Evaluates conditions (i)–(iii) on both sides of a join.
pub fn check_join_conditions(q: &JoinQuadruple) -> Result<JoinConditionReport> {
    check_stability_gap(q)?;
    let gs = side_conditions(&q.g, &q.g0);
    let hs = side_conditions(&q.h, &q.h0);
    let violations = gs
        .violations
        .iter()
        .map(|(c, w)| (Side::G, c, w))
        .chain(hs.violations.iter().map(|(c, w)| (Side::H, c, w)))
        .map(|(side, &condition, witness)| Violation {
            condition,
            side,
            witness: witness.clone(),
        })
        .collect();
    let cond_maximality = PerSide {
        g: gs.maximal,
        h: hs.maximal,
    };
    let cond_outside_edges_critical = PerSide {
        g: gs.outside,
        h: hs.outside,
    };
    let cond_inside_edges = PerSide {
        g: gs.inside,
        h: hs.inside,
    };
    Ok(JoinConditionReport {
        all_hold: cond_maximality.both()
            && cond_outside_edges_critical.both()
            && cond_inside_edges.both(),
        cond_maximality,
        cond_outside_edges_critical,
        cond_inside_edges,
        violations,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaIdentity {
    pub predicted: usize,
    pub actual: usize,
}

/// `α(j(G, G0, H, H0))` against `α(G) + α(H) − 1`.
pub fn join_alpha_identity(q: &JoinQuadruple) -> Result<AlphaIdentity> {
    check_stability_gap(q)?;
    Ok(AlphaIdentity {
        predicted: alpha_number(&q.g) + alpha_number(&q.h) - 1,
        actual: alpha_number(&one_join(q)?),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct K1Reduction {
    pub j_critical: bool,
    pub g1_critical: bool,
    pub h1_critical: bool,
}

impl K1Reduction {
    pub fn consistent(&self) -> bool {
        self.j_critical == (self.g1_critical && self.h1_critical)
    }
}

/// `j(G, G0, K1, ∅)`.
pub fn join_with_k1(g: &Graph, g0: &VertexSet) -> Result<Graph> {
    let k1 = Graph::empty(1);
    one_join(&JoinQuadruple::new(
        g.clone(),
        *g0,
        k1,
        VertexSet::empty(1),
    )?)
}

/// Criticality of `J`, `G1 = j(G, G0, K1, ∅)` and `H1 = j(H, H0, K1, ∅)`.
pub fn corollary_k1_reduction(q: &JoinQuadruple) -> Result<K1Reduction> {
    check_stability_gap(q)?;
    Ok(K1Reduction {
        j_critical: is_alpha_critical_graph(&one_join(q)?),
        g1_critical: is_alpha_critical_graph(&join_with_k1(&q.g, &q.g0)?),
        h1_critical: is_alpha_critical_graph(&join_with_k1(&q.h, &q.h0)?),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VertexDeletedReport {
    /// Brute-force criticality of the join with the chosen vertices removed.
    pub actual: bool,
    /// `G0 = G ∖ u` (and `H0 = H ∖ v` in the two-vertex form).
    pub predicted: bool,
    pub agree: bool,
}

/// Deletes `u ∈ V(G)` and optionally `v ∈ V(H)` from the join and compares
/// criticality with the prediction that `G0 = G ∖ u` (and `H0 = H ∖ v`).
///
/// Requires conditions (i)–(iii). The prediction is often wrong: for
/// `C5` joined to `C5` along canonical subgraphs, deleting any vertex
/// outside `G0` still leaves an α-critical graph.
pub fn corollary_vertex_deleted(
    q: &JoinQuadruple,
    u: usize,
    v: Option<usize>,
) -> Result<VertexDeletedReport> {
    let conds = check_join_conditions(q)?;
    if !conds.all_hold {
        return Err(Error::HypothesisViolated(
            "conditions (i)-(iii) do not all hold".into(),
        ));
    }
    q.g.check_vertex(u)?;
    let mut gone = vec![u];
    let mut predicted = q.g0 == q.g.all_vertices().without(u);
    if let Some(v) = v {
        q.h.check_vertex(v)?;
        gone.push(q.h_id(v));
        predicted &= q.h0 == q.h.all_vertices().without(v);
    }
    let j = one_join(q)?;
    let (rest, _) = j.delete_vertices(&j.vertex_set(gone)?)?;
    let actual = is_alpha_critical_graph(&rest);
    Ok(VertexDeletedReport {
        actual,
        predicted,
        agree: actual == predicted,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseTag {
    #[serde(rename = "EV-i")]
    EvI,
    #[serde(rename = "EV-ii")]
    EvII,
    #[serde(rename = "EV-iii")]
    EvIII,
    #[serde(rename = "EV-iv")]
    EvIV,
    #[serde(rename = "J-i")]
    JI,
    #[serde(rename = "J-ii")]
    JII,
    #[serde(rename = "J-iii")]
    JIII,
}

/// The choices that produced a predicted set.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct Provenance {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g0_prime: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h0_prime: Option<VertexSet>,
    /// The endpoint `v_i` of the composed edge, for the cases that name one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub endpoint: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredictedFamily {
    pub case_tag: CaseTag,
    pub vertex_set: VertexSet,
    pub provenance: Provenance,
}

/// Keeps the first family per vertex set, then sorts by vertex set.
fn dedup(mut fams: Vec<PredictedFamily>) -> Vec<PredictedFamily> {
    let mut seen = std::collections::HashSet::new();
    fams.retain(|f| seen.insert(f.vertex_set));
    fams.sort_by(|a, b| a.vertex_set.cmp_lex(&b.vertex_set));
    fams
}

fn check_composed_size(n: usize) -> Result<()> {
    if n > MAXIMAL_CAP {
        Err(Error::TooLargeForEnumeration {
            n,
            cap: MAXIMAL_CAP,
        })
    } else {
        Ok(())
    }
}

/// Candidate maximal `α − 1` subgraphs of `W = c(G, e, H, v)` in the four
/// shapes below, with `e = {v1, v2}`, `v1 = e.u`, and `G0′`, `H0′` ranging
/// over maximal `α − 1` subgraphs of `G` and `H`:
///
/// * EV-i: `G0′ ∪ (V(H) ∖ v)`
/// * EV-ii: `V(G) ∪ (H0′ ∖ v)` when `v ∈ H0′`
/// * EV-iii: `(V(G) ∖ v_i) ∪ H0′` when `v ∉ H0′`
/// * EV-iv: `G0′ ∪ {v_i} ∪ (V(H) ∖ (N_W(v_j) ∪ v))` when `v_i ∉ G0′`
///
/// These shapes are not the whole story. For `G = C5`, `H = K3` the result
/// is `C7`, and its maximal set `V(G) ∖ {w}` for `w` off the edge fits
/// none of them.
pub fn predict_maximal_in_ev_composition(
    g: &Graph,
    e: &EdgeRef,
    h: &Graph,
    v: usize,
    p: &EVPartition,
) -> Result<Vec<PredictedFamily>> {
    let w = edge_vertex_compose(g, e, h, v, p)?;
    check_composed_size(w.n())?;
    for (name, x) in [("G", g), ("H", h)] {
        if !is_alpha_critical_graph(x) {
            return Err(Error::HypothesisViolated(format!(
                "{name} is not α-critical"
            )));
        }
    }
    let gn = g.n();
    let wn = w.n();
    let lift_g = |s: &VertexSet| VertexSet::from_bits(wn, *s.bits());
    let lift_h = |s: &VertexSet| {
        VertexSet::from_bits(
            wn,
            s.iter()
                .filter(|&x| x != v)
                .map(|x| ev_h_id(gn, v, x))
                .collect(),
        )
    };
    let h_rest = lift_h(&h.all_vertices());
    let all_g = lift_g(&g.all_vertices());
    let gm = maximal_sets(g)?;
    let hm = maximal_sets(h)?;
    let (v1, v2) = (e.u, e.v);
    let mut fams = Vec::new();
    for g0 in &gm {
        fams.push(PredictedFamily {
            case_tag: CaseTag::EvI,
            vertex_set: lift_g(g0).union(&h_rest),
            provenance: Provenance {
                g0_prime: Some(*g0),
                ..Default::default()
            },
        });
    }
    for h0 in &hm {
        if h0.contains(v) {
            fams.push(PredictedFamily {
                case_tag: CaseTag::EvII,
                vertex_set: all_g.union(&lift_h(h0)),
                provenance: Provenance {
                    h0_prime: Some(*h0),
                    ..Default::default()
                },
            });
        } else {
            for vi in [v1, v2] {
                fams.push(PredictedFamily {
                    case_tag: CaseTag::EvIII,
                    vertex_set: all_g.without(vi).union(&lift_h(h0)),
                    provenance: Provenance {
                        h0_prime: Some(*h0),
                        endpoint: Some(vi),
                        ..Default::default()
                    },
                });
            }
        }
    }
    for g0 in &gm {
        for (vi, vj) in [(v1, v2), (v2, v1)] {
            if g0.contains(vi) {
                continue;
            }
            fams.push(PredictedFamily {
                case_tag: CaseTag::EvIV,
                vertex_set: lift_g(g0)
                    .with(vi)
                    .union(&h_rest.difference(&w.neighbors(vj))),
                provenance: Provenance {
                    g0_prime: Some(*g0),
                    endpoint: Some(vi),
                    ..Default::default()
                },
            });
        }
    }
    Ok(dedup(fams))
}

/// Candidate maximal `α − 1` subgraphs of `J = j(G, G0, H, H0)`:
///
/// * J-i: `G0′ ∪ H0′` with `α(G0 ∩ G0′) = α(G) − 1` and `α(H0 ∩ H0′) = α(H) − 1`
/// * J-ii: `G0′ ∪ V(H)` with `α(G0 ∩ G0′) = α(G) − 2`
/// * J-iii: `V(G) ∪ H0′` with `α(H0 ∩ H0′) = α(H) − 2`
///
/// Missing from these: maximal sets whose two sides keep the full
/// stability of `G` and `H`. Two `C5`s joined along the edge `{0, 1}`
/// have `{2, 3, 4}` on both sides as one.
pub fn predict_maximal_in_join(q: &JoinQuadruple) -> Result<Vec<PredictedFamily>> {
    check_stability_gap(q)?;
    check_composed_size(q.g.n() + q.h.n())?;
    let n = q.g.n() + q.h.n();
    let (ag, ah) = (alpha_number(&q.g) as i64, alpha_number(&q.h) as i64);
    let lift_g = |s: &VertexSet| VertexSet::from_bits(n, *s.bits());
    let lift_h = |s: &VertexSet| VertexSet::from_bits(n, s.iter().map(|x| q.h_id(x)).collect());
    let gm = maximal_sets(&q.g)?;
    let hm = maximal_sets(&q.h)?;
    let meet = |g: &Graph, a: &VertexSet, b: &VertexSet| {
        alpha_within_bits(g, &a.bits().and(b.bits())) as i64
    };
    let g_gap: Vec<i64> = gm.iter().map(|s| ag - meet(&q.g, &q.g0, s)).collect();
    let h_gap: Vec<i64> = hm.iter().map(|s| ah - meet(&q.h, &q.h0, s)).collect();
    let mut fams = Vec::new();
    for (g0, &gg) in gm.iter().zip(&g_gap) {
        for (h0, &hg) in hm.iter().zip(&h_gap) {
            if gg == 1 && hg == 1 {
                fams.push(PredictedFamily {
                    case_tag: CaseTag::JI,
                    vertex_set: lift_g(g0).union(&lift_h(h0)),
                    provenance: Provenance {
                        g0_prime: Some(*g0),
                        h0_prime: Some(*h0),
                        endpoint: None,
                    },
                });
            }
        }
    }
    for (g0, &gg) in gm.iter().zip(&g_gap) {
        if gg == 2 {
            fams.push(PredictedFamily {
                case_tag: CaseTag::JII,
                vertex_set: lift_g(g0).union(&lift_h(&q.h.all_vertices())),
                provenance: Provenance {
                    g0_prime: Some(*g0),
                    ..Default::default()
                },
            });
        }
    }
    for (h0, &hg) in hm.iter().zip(&h_gap) {
        if hg == 2 {
            fams.push(PredictedFamily {
                case_tag: CaseTag::JIII,
                vertex_set: lift_g(&q.g.all_vertices()).union(&lift_h(h0)),
                provenance: Provenance {
                    h0_prime: Some(*h0),
                    ..Default::default()
                },
            });
        }
    }
    Ok(dedup(fams))
}

/// The six listed shapes for maximal `α − 1` subgraphs of `s(H, v)`, in the
/// ids of [`crate::ops::split_vertex`]. The two neighbourhood shapes remove
/// closed neighbourhoods of `v′` and `v″`.
pub fn split_corollary_shapes(h: &Graph, v: usize, p: &SplitPartition) -> Result<Vec<VertexSet>> {
    p.validate(h, v)?;
    let s = crate::ops::split_vertex(h, v, p)?;
    let n = h.n();
    let (vp, vpp, u) = (n - 1, n, n + 1);
    let sn = s.n();
    let lift = |x: &VertexSet| {
        VertexSet::from_bits(
            sn,
            x.iter()
                .filter(|&w| w != v)
                .map(|w| if w < v { w } else { w - 1 })
                .collect(),
        )
    };
    let mut out = vec![
        s.all_vertices().without(vp).without(vpp).without(u),
        s.closed_neighbors(vp).complement(),
        s.closed_neighbors(vpp).complement(),
    ];
    for h0 in maximal_sets(h)? {
        let base = lift(&h0);
        if h0.contains(v) {
            out.push(base.with(vp).with(vpp).with(u));
        } else {
            out.push(base.with(u).with(vp));
            out.push(base.with(u).with(vpp));
        }
    }
    Ok(sorted_unique(out))
}

/// The two listed shapes for maximal `α − 1` subgraphs of `d(G, v)`, with
/// the duplicate `v′ = n`: `G0′` when `α(G0′ ∖ N[v]) = α(G) − 1`, and
/// `G0′ ∪ {v′}` when it is `α(G) − 2`.
pub fn duplication_corollary_shapes(g: &Graph, v: usize) -> Result<Vec<VertexSet>> {
    let far = canonical_subgraph(g, v)?;
    let a = alpha_number(g) as i64;
    let n = g.n() + 1;
    let mut out = Vec::new();
    for g0 in maximal_sets(g)? {
        let lifted = VertexSet::from_bits(n, *g0.bits());
        match a - alpha_within_bits(g, &g0.bits().and(far.bits())) as i64 {
            1 => out.push(lifted),
            2 => out.push(lifted.with(g.n())),
            _ => {}
        }
    }
    Ok(sorted_unique(out))
}

fn sorted_unique(mut v: Vec<VertexSet>) -> Vec<VertexSet> {
    v.sort_by(VertexSet::cmp_lex);
    v.dedup();
    v
}

/// Compares predicted sets with the exact enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyComparison {
    /// Exact maximal sets no case produced.
    pub missing: Vec<VertexSet>,
    /// Predicted sets that are not maximal `α − 1` sets.
    pub extra: Vec<VertexSet>,
}

impl FamilyComparison {
    pub fn exact(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

pub fn compare_families(
    composed: &Graph,
    predicted: &[PredictedFamily],
) -> Result<FamilyComparison> {
    let truth = maximal_sets(composed)?;
    let pred: Vec<VertexSet> = predicted.iter().map(|f| f.vertex_set).collect();
    let missing = truth
        .iter()
        .filter(|s| !pred.contains(s))
        .copied()
        .collect();
    let mut extra: Vec<VertexSet> = pred
        .iter()
        .filter(|s| !truth.contains(s))
        .copied()
        .collect();
    extra.sort_by(|a, b| a.cmp_lex(b).then(Ordering::Equal));
    Ok(FamilyComparison { missing, extra })
}
