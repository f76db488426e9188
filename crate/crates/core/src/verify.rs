//! Property suites over generated and enumerated instances.
//!
//! Each suite returns a serializable [`SuiteReport`]: one [`Check`] per
//! property with instance counts and up to [`MAX_COUNTEREXAMPLES`]
//! counterexamples. Instances are evaluated in parallel and collected in
//! input order, so reports are deterministic.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, is_isomorphic};
use crate::census::{census_up_to, graphs_on, Filter};
use crate::critical::{
    canonical_subgraph, check_join_conditions, check_vertex_star_critical, compare_families,
    corollary_k1_reduction, corollary_vertex_deleted, enumerate_maximal_alpha_minus_one,
    is_maximal_alpha_minus_one, join_alpha_identity, predict_maximal_in_ev_composition,
    predict_maximal_in_join, Condition,
};
use crate::error::{Error, Result};
use crate::generate::{self, critical_corpus, random_graph, EvInstance};
use crate::graph::{EdgeRef, Graph, VertexSet};
use crate::graph6::to_graph6;
use crate::ops::{
    duplicate_vertex, edge_vertex_compose, ev_partitions, odd_subdivide, one_join,
    split_partitions, split_vertex, EVPartition, JoinQuadruple,
};
use crate::reduce::{
    check_join_basic_theorem, contract_odd_path, is_duplication_reducible,
    is_odd_subdivision_reducible, is_splitting_reducible_alpha_critical, splitting_gadget,
};
use crate::solver::{alpha_brute_force, alpha_number, defect, is_alpha_critical_graph};

pub const MAX_COUNTEREXAMPLES: usize = 5;

/// Default seed for the randomized suites.
pub const DEFAULT_SEED: u64 = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    GraphCore,
    SolverOracle,
    DefectCensus,
    Hajnal,
    Maxall,
    AlphaIdentity,
    JoinTheorem,
    EvMaximal,
    JoinMaximal,
    BasicTheorem,
    Identities,
    EvCritical,
    NonCanonical,
    Reduction,
    VertexDeleted,
    Ops,
}

impl Suite {
    pub const ALL: [Suite; 16] = [
        Suite::GraphCore,
        Suite::SolverOracle,
        Suite::DefectCensus,
        Suite::Hajnal,
        Suite::Maxall,
        Suite::AlphaIdentity,
        Suite::JoinTheorem,
        Suite::EvMaximal,
        Suite::JoinMaximal,
        Suite::BasicTheorem,
        Suite::Identities,
        Suite::EvCritical,
        Suite::NonCanonical,
        Suite::Reduction,
        Suite::VertexDeleted,
        Suite::Ops,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::GraphCore => "graph-core",
            Suite::SolverOracle => "solver-oracle",
            Suite::DefectCensus => "defect-census",
            Suite::Hajnal => "hajnal",
            Suite::Maxall => "maxall",
            Suite::AlphaIdentity => "alpha-identity",
            Suite::JoinTheorem => "join-theorem",
            Suite::EvMaximal => "ev-maximal",
            Suite::JoinMaximal => "join-maximal",
            Suite::BasicTheorem => "basic-theorem",
            Suite::Identities => "identities",
            Suite::EvCritical => "ev-critical",
            Suite::NonCanonical => "non-canonical",
            Suite::Reduction => "reduction",
            Suite::VertexDeleted => "vertex-deleted",
            Suite::Ops => "ops",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }

    /// `(n, instances)` used when the caller gives none.
    pub fn defaults(&self) -> (usize, usize) {
        match self {
            Suite::GraphCore => (20, 1000),
            Suite::SolverOracle => (7, 1000),
            Suite::DefectCensus | Suite::Hajnal => (8, 0),
            Suite::Maxall => (8, 0),
            Suite::AlphaIdentity => (8, 200),
            Suite::JoinTheorem => (8, 200),
            Suite::EvMaximal | Suite::JoinMaximal => (12, 50),
            Suite::BasicTheorem => (8, 100),
            Suite::Identities => (8, 20),
            Suite::EvCritical => (8, 50),
            Suite::NonCanonical => (9, 0),
            Suite::Reduction => (8, 0),
            Suite::VertexDeleted => (8, 100),
            Suite::Ops => (8, 200),
        }
    }

    /// Largest `n` each suite accepts.
    pub fn n_cap(&self) -> usize {
        match self {
            Suite::GraphCore => 64,
            Suite::SolverOracle => 8,
            Suite::Hajnal | Suite::NonCanonical => 9,
            Suite::EvMaximal | Suite::JoinMaximal => crate::critical::MAXIMAL_CAP,
            Suite::AlphaIdentity
            | Suite::JoinTheorem
            | Suite::BasicTheorem
            | Suite::VertexDeleted => 8,
            _ => 8,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: usize,
    pub instances: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// graph6 strings of the graphs involved, in the order named by `detail`.
    pub graphs: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Reported but not counted towards the suite verdict.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
    pub instances: usize,
    pub failures: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl Check {
    fn from_outcomes(name: &str, outcomes: Vec<Option<Counterexample>>) -> Check {
        let instances = outcomes.len();
        let bad: Vec<Counterexample> = outcomes.into_iter().flatten().collect();
        Check {
            name: name.to_owned(),
            passed: bad.is_empty(),
            informational: false,
            instances,
            failures: bad.len(),
            counterexamples: bad.into_iter().take(MAX_COUNTEREXAMPLES).collect(),
        }
    }

    fn single(name: &str, ok: bool, cex: impl FnOnce() -> Counterexample) -> Check {
        Check::from_outcomes(name, vec![(!ok).then(cex)])
    }

    fn informational(mut self) -> Check {
        self.informational = true;
        self
    }
}

/// A graph in a census listing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Listed {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub alpha: usize,
    pub defect: i64,
    pub max_degree: usize,
}

impl Listed {
    fn of(g: &Graph) -> Listed {
        let a = alpha_number(g);
        Listed {
            graph6: to_graph6(g),
            n: g.n(),
            edges: g.edge_count(),
            alpha: a,
            defect: g.n() as i64 - 2 * a as i64,
            max_degree: g.max_degree(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: Params,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub listing: Vec<Listed>,
}

impl SuiteReport {
    fn new(suite: Suite, params: Params, checks: Vec<Check>) -> SuiteReport {
        SuiteReport {
            suite: suite.name().to_owned(),
            params,
            passed: checks.iter().all(|c| c.passed || c.informational),
            checks,
            listing: Vec::new(),
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs `suite`; `n` and `instances` default per suite.
pub fn run(
    suite: Suite,
    n: Option<usize>,
    instances: Option<usize>,
    seed: u64,
) -> Result<SuiteReport> {
    let (dn, di) = suite.defaults();
    let params = Params {
        n: n.unwrap_or(dn),
        instances: instances.unwrap_or(di),
        seed,
    };
    if params.n > suite.n_cap() {
        return Err(Error::TooLargeForEnumeration {
            n: params.n,
            cap: suite.n_cap(),
        });
    }
    match suite {
        Suite::GraphCore => graph_core(params),
        Suite::SolverOracle => solver_oracle(params),
        Suite::DefectCensus => defect_census(params),
        Suite::Hajnal => hajnal(params),
        Suite::Maxall => maxall(params),
        Suite::AlphaIdentity => alpha_identity(params),
        Suite::JoinTheorem => join_theorem(params),
        Suite::EvMaximal => ev_maximal(params),
        Suite::JoinMaximal => join_maximal(params),
        Suite::BasicTheorem => basic_theorem(params),
        Suite::Identities => identities(params),
        Suite::EvCritical => ev_critical(params),
        Suite::NonCanonical => non_canonical(params),
        Suite::Reduction => reduction(params),
        Suite::VertexDeleted => vertex_deleted(params),
        Suite::Ops => ops_suite(params),
    }
}

fn cex(graphs: &[&Graph], detail: impl Into<String>) -> Counterexample {
    Counterexample {
        graphs: graphs.iter().map(|g| to_graph6(g)).collect(),
        detail: detail.into(),
    }
}

fn quad_cex(q: &JoinQuadruple, detail: impl Into<String>) -> Counterexample {
    Counterexample {
        graphs: vec![to_graph6(&q.g), to_graph6(&q.h)],
        detail: format!("G0 = {:?}, H0 = {:?}: {}", q.g0, q.h0, detail.into()),
    }
}

/// Exhaustive graphs on `0..=n` vertices plus `instances` random graphs on
/// at most 16 vertices, solver against subset enumeration.
fn solver_oracle(p: Params) -> Result<SuiteReport> {
    let mut exhaustive = Vec::new();
    for k in 0..=p.n {
        exhaustive.extend(graphs_on(k)?);
    }
    let ex = Check::from_outcomes(
        "exhaustive",
        exhaustive
            .par_iter()
            .map(|g| {
                let (a, b) = (alpha_number(g), alpha_brute_force(g));
                (a != b).then(|| cex(&[g], format!("branch and bound {a}, subsets {b}")))
            })
            .collect(),
    );
    let mut rng = generate::rng(p.seed);
    let random: Vec<Graph> = (0..p.instances)
        .map(|_| {
            let n = rng.gen_range(0..=16);
            let d = rng.gen_range(0.05..0.95);
            random_graph(&mut rng, n, d)
        })
        .collect();
    let rc = Check::from_outcomes(
        "random",
        random
            .par_iter()
            .map(|g| {
                let (a, b) = (alpha_number(g), alpha_brute_force(g));
                (a != b).then(|| cex(&[g], format!("branch and bound {a}, subsets {b}")))
            })
            .collect(),
    );
    let edge_step = Check::from_outcomes(
        "edge deletion raises alpha by at most one",
        exhaustive
            .par_iter()
            .map(|g| {
                let a = alpha_number(g);
                g.edges().into_iter().find_map(|e| {
                    let b = alpha_number(&g.delete_edge(&e).expect("edge"));
                    (b != a && b != a + 1).then(|| cex(&[g], format!("deleting {e}: {a} -> {b}")))
                })
            })
            .collect(),
    );
    let vertex_step = Check::from_outcomes(
        "vertex deletion bounds",
        exhaustive
            .par_iter()
            .map(|g| {
                let a = alpha_number(g);
                let critical = g.edge_count() > 0 && is_alpha_critical_graph(g);
                (0..g.n()).find_map(|v| {
                    let outside = g.closed_neighbors(v).complement();
                    let an = crate::solver::alpha_within(g, &outside).expect("same host");
                    let av = alpha_number(&g.delete_vertex(v).expect("in range").0);
                    // An isolated vertex lies in every maximum stable set.
                    let ok = an < a
                        && a <= an + g.degree(v).max(1)
                        && (av + 1 == a || av == a)
                        && (!critical || g.degree(v) == 0 || av == a);
                    (!ok).then(|| {
                        cex(
                            &[g],
                            format!("v = {v}: alpha {a}, outside N[v] {an}, without v {av}"),
                        )
                    })
                })
            })
            .collect(),
    );
    let reports = Check::from_outcomes(
        "stability and criticality reports are consistent",
        exhaustive
            .par_iter()
            .map(|g| {
                let st = crate::solver::alpha(g);
                let cr = crate::solver::is_alpha_critical(g);
                let a = st.alpha as i64;
                let ok = st.witness.len() == st.alpha
                    && st
                        .witness
                        .iter()
                        .all(|u| st.witness.iter().all(|v| !g.has_edge(u, v)))
                    && st.num_maximum.map_or(true, |k| k >= 1)
                    && cr.alpha == st.alpha
                    && cr.is_alpha_critical == (cr.critical_edges.len() == g.edge_count())
                    && cr.defect == g.n() as i64 - 2 * a
                    && cr.tau as i64 == g.n() as i64 - a
                    && cr.defect == cr.tau as i64 - a;
                (!ok).then(|| cex(&[g], format!("{st:?} {cr:?}")))
            })
            .collect(),
    );
    Ok(SuiteReport::new(
        Suite::SolverOracle,
        p,
        vec![ex, rc, edge_step, vertex_step, reports],
    ))
}

fn permuted(g: &Graph, perm: &[usize]) -> Graph {
    let pairs: Vec<(usize, usize)> = g.edges().iter().map(|e| (perm[e.u], perm[e.v])).collect();
    Graph::from_pairs(g.n(), &pairs).expect("permutation of a valid graph")
}

fn symmetric_irreflexive(g: &Graph) -> bool {
    (0..g.n())
        .all(|v| !g.has_edge(v, v) && (0..g.n()).all(|u| g.has_edge(u, v) == g.has_edge(v, u)))
}

/// Random graphs on at most `n` vertices: subgraph and neighbourhood
/// algebra, canonical-form invariance and graph6 round trips.
fn graph_core(p: Params) -> Result<SuiteReport> {
    let mut rng = generate::rng(p.seed);
    let mut jobs = Vec::with_capacity(p.instances);
    for _ in 0..p.instances {
        let n = rng.gen_range(0..=p.n);
        let d = rng.gen_range(0.05..0.95);
        let g = random_graph(&mut rng, n, d);
        let s =
            VertexSet::from_vertices(n, (0..n).filter(|_| rng.gen_bool(0.5))).expect("in range");
        let perms: Vec<Vec<usize>> = (0..10)
            .map(|_| {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                perm
            })
            .collect();
        jobs.push((g, s, perms));
    }
    let induced = jobs
        .par_iter()
        .map(|(g, s, _)| {
            let (h, map) = g.induced_subgraph(s).expect("same host");
            let ok = symmetric_irreflexive(&h)
                && map.new_to_old.len() == s.len()
                && h.edges()
                    .iter()
                    .all(|e| g.has_edge(map.new_to_old[e.u], map.new_to_old[e.v]));
            (!ok).then(|| cex(&[g, &h], format!("S = {s:?}")))
        })
        .collect();
    let union = jobs
        .par_iter()
        .map(|(g, s, _)| {
            let whole = g.neighborhood(s).expect("same host");
            let parts = s.iter().fold(VertexSet::empty(g.n()), |acc, v| {
                acc.union(
                    &g.neighborhood(&VertexSet::from_vertices(g.n(), [v]).expect("in range"))
                        .expect("same host"),
                )
            });
            (whole != parts).then(|| cex(&[g], format!("S = {s:?}: {whole:?} vs {parts:?}")))
        })
        .collect();
    let delete_none = jobs
        .par_iter()
        .map(|(g, _, _)| {
            let (h, map) = g
                .delete_vertices(&VertexSet::empty(g.n()))
                .expect("same host");
            let ok = h == *g && map.new_to_old == (0..g.n()).collect::<Vec<_>>();
            (!ok).then(|| cex(&[g, &h], "deleting nothing"))
        })
        .collect();
    let canon = jobs
        .par_iter()
        .map(|(g, _, perms)| {
            let f = canonical_form(g);
            perms
                .iter()
                .find(|perm| canonical_form(&permuted(g, perm)) != f)
                .map(|perm| cex(&[g], format!("permutation {perm:?}")))
        })
        .collect();
    let round_trip = jobs
        .par_iter()
        .map(|(g, _, _)| {
            let s = to_graph6(g);
            let back = crate::graph6::parse_graph6(&s);
            let ok = back.as_ref().is_ok_and(|h| h == g && to_graph6(h) == s);
            (!ok).then(|| cex(&[g], format!("{back:?}")))
        })
        .collect();
    Ok(SuiteReport::new(
        Suite::GraphCore,
        p,
        vec![
            Check::from_outcomes("induced subgraphs are simple", induced),
            Check::from_outcomes("neighbourhood of a set is the union", union),
            Check::from_outcomes("deleting no vertices is the identity", delete_none),
            Check::from_outcomes("canonical form is relabelling invariant", canon),
            Check::from_outcomes("graph6 round trip", round_trip),
        ],
    ))
}

/// Vertex and edge accounting of every operation, simplicity of results and
/// symmetry of the 1-join, on random arguments.
fn ops_suite(p: Params) -> Result<SuiteReport> {
    let mut rng = generate::rng(p.seed);
    let mut accounting = Vec::new();
    let mut symmetry = Vec::new();
    let draw = |rng: &mut rand_chacha::ChaCha8Rng, lo: usize| {
        let n = rng.gen_range(lo..=p.n.max(lo));
        let d = rng.gen_range(0.2..0.8);
        random_graph(rng, n, d)
    };
    for _ in 0..p.instances {
        let g = draw(&mut rng, 2);
        let (n, m) = (g.n(), g.edge_count());
        let fail = |label: String, r: &Graph, dn: usize, dm: usize| {
            let ok = r.n() == n + dn && r.edge_count() == m + dm && symmetric_irreflexive(r);
            (!ok).then(|| {
                cex(
                    &[&g, r],
                    format!("{label}: {} vertices, {} edges", r.n(), r.edge_count()),
                )
            })
        };
        if let Some(e) = g.edges().choose(&mut rng) {
            let r = odd_subdivide(&g, e)?;
            accounting.push(fail(format!("subdivide {e}"), &r, 2, 2));
        }
        let v = rng.gen_range(0..n);
        let r = duplicate_vertex(&g, v)?;
        accounting.push(fail(format!("duplicate {v}"), &r, 1, g.degree(v) + 1));
        if let Some(sp) = split_partitions(&g, v)?.choose(&mut rng) {
            let r = split_vertex(&g, v, sp)?;
            accounting.push(fail(format!("split {v}"), &r, 2, 2));
        }
        let h = draw(&mut rng, 1);
        let mut pick = |k: &Graph| loop {
            let s = VertexSet::from_vertices(k.n(), (0..k.n()).filter(|_| rng.gen_bool(0.4)))
                .expect("in range");
            if s.len() < k.n() {
                return s;
            }
        };
        let (g0, h0) = (pick(&g), pick(&h));
        let q = JoinQuadruple::new(g.clone(), g0, h.clone(), h0)?;
        let j = one_join(&q)?;
        let cross = (n - g0.len()) * (h.n() - h0.len());
        let ok = j.n() == n + h.n()
            && j.edge_count() == m + h.edge_count() + cross
            && symmetric_irreflexive(&j);
        accounting.push((!ok).then(|| quad_cex(&q, format!("join has {} edges", j.edge_count()))));
        let back = one_join(&q.swapped())?;
        symmetry.push((!is_isomorphic(&j, &back)).then(|| quad_cex(&q, "swapped join differs")));
    }
    Ok(SuiteReport::new(
        Suite::Ops,
        p,
        vec![
            Check::from_outcomes("vertex and edge accounting", accounting),
            Check::from_outcomes("1-join is symmetric", symmetry),
        ],
    ))
}

/// Nontrivial (n ≥ 2) connected α-critical graphs on at most `n` vertices.
fn critical_census(n: usize) -> Result<Vec<Graph>> {
    Ok(census_up_to(n, true, Filter::AlphaCritical)?
        .into_iter()
        .filter(|g| g.n() >= 2)
        .collect())
}

fn forms(gs: &[Graph]) -> HashSet<Vec<u8>> {
    gs.iter().map(canonical_form).collect()
}

/// Odd subdivisions of `K4` with at most `n` vertices, built by subdividing.
pub fn odd_subdivisions_of_k4(n: usize) -> Vec<Graph> {
    let mut layer = vec![Graph::complete(4)];
    let mut all = layer.clone();
    let mut seen = forms(&layer);
    while layer[0].n() + 2 <= n {
        let mut next = Vec::new();
        for g in &layer {
            // Subdividing the single edge of K2 yields P4.
            for e in g.edges().into_iter().filter(|_| g.n() > 2) {
                let s = odd_subdivide(g, &e).expect("edge of g");
                if seen.insert(canonical_form(&s)) {
                    next.push(s);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// Contracts odd paths until none is left; returns every graph on the way.
pub fn contraction_chain(g: &Graph) -> Vec<Graph> {
    let mut chain = vec![g.clone()];
    while let (true, Some(w)) = is_odd_subdivision_reducible(chain.last().expect("nonempty")) {
        let next = contract_odd_path(chain.last().expect("nonempty"), w).expect("valid witness");
        chain.push(next);
    }
    chain
}

fn defect_census(p: Params) -> Result<SuiteReport> {
    let corpus = critical_census(p.n)?;
    let by_defect =
        |d: i64| -> Vec<Graph> { corpus.iter().filter(|g| defect(g) == d).cloned().collect() };

    let d1 = by_defect(1);
    let cycles: Vec<Graph> = (3..=p.n).step_by(2).map(Graph::cycle).collect();
    let c1 = Check::single(
        "defect-1 = odd cycles",
        forms(&d1) == forms(&cycles),
        || cex(&d1.iter().collect::<Vec<_>>(), "defect-1 bucket"),
    );

    let d2 = by_defect(2);
    let k4s = odd_subdivisions_of_k4(p.n);
    let c2 = Check::single(
        "defect-2 = odd subdivisions of K4",
        forms(&d2) == forms(&k4s),
        || cex(&d2.iter().collect::<Vec<_>>(), "defect-2 bucket"),
    );
    let k4 = Graph::complete(4);
    let c3 = Check::from_outcomes(
        "defect-2 contracts to K4",
        d2.iter()
            .map(|g| {
                let chain = contraction_chain(g);
                let last = chain.last().expect("nonempty");
                let ok = is_isomorphic(last, &k4) && chain.iter().all(is_alpha_critical_graph);
                (!ok).then(|| cex(&chain.iter().collect::<Vec<_>>(), "contraction chain"))
            })
            .collect(),
    );
    let c4 = Check::from_outcomes(
        "defect non-negative, zero only for K2",
        corpus
            .iter()
            .map(|g| {
                let d = defect(g);
                let ok = d > 0 || (d == 0 && *g == Graph::complete(2));
                (!ok).then(|| cex(&[g], format!("defect {d}")))
            })
            .collect(),
    );
    let mut r = SuiteReport::new(Suite::DefectCensus, p, vec![c1, c2, c3, c4]);
    r.listing = d1.iter().chain(d2.iter()).map(Listed::of).collect();
    Ok(r)
}

fn hajnal(p: Params) -> Result<SuiteReport> {
    let corpus = census_up_to(p.n, true, Filter::AlphaCritical)?;
    let check = Check::from_outcomes(
        "max degree <= defect + 1",
        corpus
            .par_iter()
            .map(|g| {
                let (d, m) = (defect(g), g.max_degree() as i64);
                (m > d + 1).then(|| cex(&[g], format!("max degree {m}, defect {d}")))
            })
            .collect(),
    );
    let mut r = SuiteReport::new(Suite::Hajnal, p, vec![check]);
    r.listing = corpus.iter().map(Listed::of).collect();
    Ok(r)
}

/// Per vertex: every edge at `v` critical iff `V ∖ N[v]` is maximal with
/// stability `α − 1`. Per graph: α-critical iff that holds at every vertex.
fn maxall(p: Params) -> Result<SuiteReport> {
    let corpus = census_up_to(p.n, true, Filter::All)?;
    let corpus: Vec<Graph> = corpus.into_iter().filter(|g| g.n() >= 1).collect();
    let per_vertex: Vec<Option<Counterexample>> = corpus
        .par_iter()
        .flat_map_iter(|g| {
            (0..g.n()).map(move |v| {
                let star = check_vertex_star_critical(g, v).expect("vertex in range");
                let max = is_maximal_alpha_minus_one(
                    g,
                    &canonical_subgraph(g, v).expect("vertex in range"),
                )
                .expect("same host");
                (star != max).then(|| {
                    cex(
                        &[g],
                        format!("vertex {v}: star critical {star}, maximal {max}"),
                    )
                })
            })
        })
        .collect();
    let per_graph: Vec<Option<Counterexample>> = corpus
        .par_iter()
        .map(|g| {
            let crit = is_alpha_critical_graph(g);
            let all = (0..g.n()).all(|v| {
                is_maximal_alpha_minus_one(g, &canonical_subgraph(g, v).expect("in range"))
                    .expect("same host")
            });
            (crit != all).then(|| {
                cex(
                    &[g],
                    format!("critical {crit}, all canonical maximal {all}"),
                )
            })
        })
        .collect();
    Ok(SuiteReport::new(
        Suite::Maxall,
        p,
        vec![
            Check::from_outcomes("star critical iff canonical maximal", per_vertex),
            Check::from_outcomes("critical iff all canonical maximal", per_graph),
        ],
    ))
}

fn alpha_identity(p: Params) -> Result<SuiteReport> {
    let qs = generate::gap_quadruples(p.seed, p.instances, p.n, 2 * p.n)?;
    let outcomes = qs
        .par_iter()
        .map(|q| {
            let r = join_alpha_identity(q).expect("generated with the gap");
            (r.predicted != r.actual)
                .then(|| quad_cex(q, format!("predicted {}, actual {}", r.predicted, r.actual)))
        })
        .collect();
    Ok(SuiteReport::new(
        Suite::AlphaIdentity,
        p,
        vec![Check::from_outcomes(
            "alpha(J) = alpha(G) + alpha(H) - 1",
            outcomes,
        )],
    ))
}

/// Quadruples each failing the named condition.
pub type Negatives = Vec<(Condition, JoinQuadruple)>;

/// The quadruples of the join theorem suite: `instances` positives, then
/// `instances / 4` negatives per condition.
pub fn join_theorem_quadruples(p: Params) -> Result<(Vec<JoinQuadruple>, Negatives)> {
    let pos = generate::positive_quadruples(p.seed, p.instances, p.n)?;
    let neg = generate::negative_quadruples(p.seed.wrapping_add(1), p.instances / 4, p.n)?;
    Ok((pos, neg))
}

fn join_theorem(p: Params) -> Result<SuiteReport> {
    let (pos, neg) = join_theorem_quadruples(p)?;
    let forward = pos
        .par_iter()
        .map(|q| {
            let conds = check_join_conditions(q).expect("gap holds");
            let crit = is_alpha_critical_graph(&one_join(q).expect("valid"));
            (!(conds.all_hold && crit)).then(|| {
                quad_cex(
                    q,
                    format!("conditions {}, join critical {crit}", conds.all_hold),
                )
            })
        })
        .collect();
    let converse: Vec<Option<Counterexample>> = neg
        .par_iter()
        .map(|(c, q)| {
            let conds = check_join_conditions(q).expect("gap holds");
            let crit = is_alpha_critical_graph(&one_join(q).expect("valid"));
            (conds.all_hold || crit)
                .then(|| quad_cex(q, format!("violated {c:?}, join critical {crit}")))
        })
        .collect();
    let all: Vec<&JoinQuadruple> = pos.iter().chain(neg.iter().map(|(_, q)| q)).collect();
    let k1 = all
        .par_iter()
        .map(|q| {
            let r = corollary_k1_reduction(q).expect("gap holds");
            (!r.consistent()).then(|| quad_cex(q, format!("{r:?}")))
        })
        .collect();
    Ok(SuiteReport::new(
        Suite::JoinTheorem,
        p,
        vec![
            Check::from_outcomes("conditions imply critical join", forward),
            Check::from_outcomes("violated condition implies non-critical join", converse),
            Check::from_outcomes("join critical iff both K1 reductions critical", k1),
        ],
    ))
}

fn ev_cex(inst: &EvInstance, w: &Graph, detail: String) -> Counterexample {
    Counterexample {
        graphs: vec![to_graph6(&inst.g), to_graph6(&inst.h), to_graph6(w)],
        detail: format!(
            "e = {}, v = {}, U1 = {:?}, U2 = {:?}: {detail}",
            inst.e, inst.v, inst.p.u1, inst.p.u2
        ),
    }
}

fn ev_maximal(p: Params) -> Result<SuiteReport> {
    let insts = generate::ev_instances(p.seed, p.instances, p.n)?;
    let results: Vec<(Option<Counterexample>, Option<Counterexample>)> = insts
        .par_iter()
        .map(|i| {
            let w = edge_vertex_compose(&i.g, &i.e, &i.h, i.v, &i.p).expect("valid instance");
            let pred = predict_maximal_in_ev_composition(&i.g, &i.e, &i.h, i.v, &i.p)
                .expect("critical inputs");
            let cmp = compare_families(&w, &pred).expect("within cap");
            let fam = (!cmp.exact()).then(|| {
                ev_cex(
                    i,
                    &w,
                    format!("missing {:?}, extra {:?}", cmp.missing, cmp.extra),
                )
            });
            let (aw, bound) = (alpha_number(&w), alpha_number(&i.g) + alpha_number(&i.h));
            let claim = (aw > bound).then(|| ev_cex(i, &w, format!("alpha {aw} above {bound}")));
            (fam, claim)
        })
        .collect();
    let (fam, claim): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    Ok(SuiteReport::new(
        Suite::EvMaximal,
        p,
        vec![
            Check::from_outcomes("predicted families = maximal sets", fam),
            Check::from_outcomes("alpha(W) <= alpha(G) + alpha(H)", claim),
        ],
    ))
}

fn join_maximal(p: Params) -> Result<SuiteReport> {
    let qs = generate::gap_quadruples(p.seed, p.instances, 8.min(p.n), p.n)?;
    let outcomes = qs
        .par_iter()
        .map(|q| {
            let j = one_join(q).expect("valid");
            let cmp = compare_families(&j, &predict_maximal_in_join(q).expect("gap holds"))
                .expect("within cap");
            (!cmp.exact()).then(|| {
                quad_cex(
                    q,
                    format!("missing {:?}, extra {:?}", cmp.missing, cmp.extra),
                )
            })
        })
        .collect();
    Ok(SuiteReport::new(
        Suite::JoinMaximal,
        p,
        vec![Check::from_outcomes(
            "predicted families = maximal sets",
            outcomes,
        )],
    ))
}

/// Half positives, half negatives from the join theorem generators.
pub fn basic_theorem_quadruples(p: Params) -> Result<Vec<JoinQuadruple>> {
    let half = p.instances / 2;
    let mut qs = generate::positive_quadruples(p.seed, p.instances - half, p.n)?;
    let neg = generate::negative_quadruples(p.seed.wrapping_add(1), half.div_ceil(3), p.n)?;
    qs.extend(neg.into_iter().map(|(_, q)| q).take(half));
    Ok(qs)
}

fn basic_theorem(p: Params) -> Result<SuiteReport> {
    let qs = basic_theorem_quadruples(p)?;
    let reports: Vec<_> = qs
        .par_iter()
        .map(|q| (q, check_join_basic_theorem(q).expect("gap holds")))
        .collect();
    let part =
        |name: &str,
         f: &dyn Fn(&crate::reduce::JoinBasicReport) -> crate::reduce::PartAgreement| {
            Check::from_outcomes(
                name,
                reports
                    .iter()
                    .map(|(q, r)| {
                        let a = f(r);
                        (!a.agree).then(|| {
                            quad_cex(
                                q,
                                format!("direct {}, conditions {}", a.direct, a.conditions),
                            )
                        })
                    })
                    .collect(),
            )
        };
    Ok(SuiteReport::new(
        Suite::BasicTheorem,
        p,
        vec![
            part("splitting free", &|r| r.splitting_free),
            part("odd subdivision free", &|r| r.odd_subdivision_free),
            part("duplication free", &|r| r.duplication_free),
            part("odd subdivision free, gadget read in host", &|r| {
                r.odd_subdivision_free_in_host
            })
            .informational(),
        ],
    ))
}

fn identities(p: Params) -> Result<SuiteReport> {
    let mut rng = generate::rng(p.seed);
    let k3 = Graph::complete(3);
    let e01 = EdgeRef::new(0, 1).expect("distinct");
    let random_with = |rng: &mut rand_chacha::ChaCha8Rng, ok: &dyn Fn(&Graph) -> bool| loop {
        let n = rng.gen_range(2..=p.n.max(3));
        let d = rng.gen_range(0.2..0.8);
        let g = random_graph(rng, n, d);
        if ok(&g) {
            return g;
        }
    };

    let mut subdivision = Vec::new();
    for _ in 0..p.instances {
        let g = random_with(&mut rng, &|g| g.edge_count() > 0);
        let e = *g.edges().choose(&mut rng).expect("has an edge");
        let pk3 = EVPartition {
            u1: VertexSet::from_vertices(3, [1]).expect("in range"),
            u2: VertexSet::from_vertices(3, [2]).expect("in range"),
        };
        let c = edge_vertex_compose(&g, &e, &k3, 0, &pk3)?;
        let s = odd_subdivide(&g, &e)?;
        subdivision.push((!is_isomorphic(&c, &s)).then(|| cex(&[&g, &c, &s], format!("e = {e}"))));
    }

    let mut splitting = Vec::new();
    for _ in 0..p.instances {
        let g = random_with(&mut rng, &|g| g.max_degree() >= 2);
        let vs: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 2).collect();
        let v = *vs.choose(&mut rng).expect("degree two vertex");
        let sp = *split_partitions(&g, v)?
            .choose(&mut rng)
            .expect("degree ≥ 2");
        let c = edge_vertex_compose(
            &k3,
            &e01,
            &g,
            v,
            &EVPartition {
                u1: sp.n_vprime,
                u2: sp.n_vdoubleprime,
            },
        )?;
        let s = split_vertex(&g, v, &sp)?;
        splitting
            .push((!is_isomorphic(&c, &s)).then(|| cex(&[&g, &c, &s], format!("v = {v}, {sp:?}"))));
    }

    let mut duplication = Vec::new();
    for _ in 0..p.instances {
        let h = random_with(&mut rng, &|_| true);
        let v = rng.gen_range(0..h.n());
        let q = JoinQuadruple::new(
            Graph::empty(1),
            VertexSet::empty(1),
            h.clone(),
            canonical_subgraph(&h, v)?,
        )?;
        let j = one_join(&q)?;
        let d = duplicate_vertex(&h, v)?;
        duplication.push((!is_isomorphic(&j, &d)).then(|| cex(&[&h, &j, &d], format!("v = {v}"))));
    }

    let complete = (2..=p.n.max(2))
        .flat_map(|n| (0..n - 1).map(move |v| (n, v)))
        .map(|(n, v)| {
            let d = duplicate_vertex(&Graph::complete(n - 1), v).expect("in range");
            (!is_isomorphic(&d, &Graph::complete(n)))
                .then(|| cex(&[&d], format!("n = {n}, v = {v}")))
        })
        .collect();

    Ok(SuiteReport::new(
        Suite::Identities,
        p,
        vec![
            Check::from_outcomes("c(G,e,K3,v) ~ s(G,e)", subdivision),
            Check::from_outcomes("c(K3,e,G,v) ~ s(G,v)", splitting),
            Check::from_outcomes("j(K1,0,H,H-N[v]) ~ d(H,v)", duplication),
            Check::from_outcomes("d(K(n-1),v) ~ K(n)", complete),
        ],
    ))
}

/// Pairs of 2-connected α-critical graphs on at most `n` vertices, one
/// random edge and vertex each, every partition of that vertex.
fn ev_critical(p: Params) -> Result<SuiteReport> {
    let pool: Vec<Graph> = critical_corpus(p.n)?
        .into_iter()
        .filter(Graph::is_two_connected)
        .collect();
    let mut rng = generate::rng(p.seed);
    let mut jobs = Vec::new();
    for _ in 0..p.instances {
        let g = pool.choose(&mut rng).expect("pool nonempty").clone();
        let h = pool.choose(&mut rng).expect("pool nonempty").clone();
        let e = *g
            .edges()
            .choose(&mut rng)
            .expect("2-connected graphs have edges");
        let v = rng.gen_range(0..h.n());
        jobs.push((g, e, h, v));
    }
    let outcomes: Vec<Option<Counterexample>> = jobs
        .par_iter()
        .flat_map_iter(|(g, e, h, v)| {
            ev_partitions(h, *v)
                .expect("in range")
                .into_iter()
                .map(move |part| {
                    let w = edge_vertex_compose(g, e, h, *v, &part).expect("valid");
                    (!is_alpha_critical_graph(&w)).then(|| {
                        cex(
                            &[g, h, &w],
                            format!("e = {e}, v = {v}, U1 = {:?}, U2 = {:?}", part.u1, part.u2),
                        )
                    })
                })
        })
        .collect();
    Ok(SuiteReport::new(
        Suite::EvCritical,
        p,
        vec![Check::from_outcomes(
            "composition is alpha-critical",
            outcomes,
        )],
    ))
}

fn non_canonical(p: Params) -> Result<SuiteReport> {
    let corpus = census_up_to(p.n, true, Filter::AlphaCritical)?;
    let hits: Vec<Graph> = corpus
        .par_iter()
        .filter(|g| {
            g.n() >= 1
                && enumerate_maximal_alpha_minus_one(g)
                    .expect("within cap")
                    .iter()
                    .any(|(_, c)| !c.is_canonical())
        })
        .cloned()
        .collect();
    let check = Check::single(
        "some graph has a non-canonical maximal set",
        !hits.is_empty(),
        || cex(&[], "no corpus graph has one"),
    );
    let mut r = SuiteReport::new(Suite::NonCanonical, p, vec![check]);
    r.listing = hits.iter().map(Listed::of).collect();
    Ok(r)
}

/// Reducibility detectors against their definitions on the critical corpus.
fn reduction(p: Params) -> Result<SuiteReport> {
    let corpus = critical_census(p.n)?;
    let degree_vs_gadget = corpus
        .par_iter()
        .map(|g| {
            let fast = is_splitting_reducible_alpha_critical(g)
                .expect("critical and connected")
                .0;
            let gadget = splitting_gadget(g).is_some();
            (fast != gadget)
                .then(|| cex(&[g], format!("degree test {fast}, gadget search {gadget}")))
        })
        .collect();
    let odd_reversal = corpus
        .par_iter()
        .map(|g| {
            let (yes, w) = is_odd_subdivision_reducible(g);
            if !yes {
                return None;
            }
            let w = w.expect("witness");
            let smaller = contract_odd_path(g, w).expect("valid");
            let [u, a, b, v] = w;
            let shift = |x: usize| x - [a, b].iter().filter(|&&y| y < x).count();
            let back = odd_subdivide(
                &smaller,
                &EdgeRef::new(shift(u), shift(v)).expect("distinct"),
            )
            .expect("edge");
            (!is_isomorphic(&back, g)).then(|| cex(&[g, &smaller], format!("witness {w:?}")))
        })
        .collect();
    let dup_reversal = corpus
        .par_iter()
        .map(|g| {
            let (yes, w) = is_duplication_reducible(g);
            let (u, v) = w?;
            debug_assert!(yes);
            let (rest, map) = g.delete_vertex(v).expect("in range");
            let back = duplicate_vertex(&rest, map.old_to_new[u].expect("kept")).expect("in range");
            let ok = is_isomorphic(&back, g) && is_alpha_critical_graph(&rest);
            (!ok).then(|| cex(&[g, &rest], format!("twins ({u}, {v})")))
        })
        .collect();
    let preserved: Vec<Option<Counterexample>> = corpus
        .par_iter()
        .filter(|g| g.n() + 2 <= 10)
        .flat_map_iter(|g| {
            let mut out = Vec::new();
            // Subdividing the single edge of K2 yields P4.
            for e in g.edges().into_iter().filter(|_| g.n() > 2) {
                let s = odd_subdivide(g, &e).expect("edge");
                out.push(
                    (!is_alpha_critical_graph(&s)).then(|| cex(&[g, &s], format!("s(G, {e})"))),
                );
            }
            for v in 0..g.n() {
                let d = duplicate_vertex(g, v).expect("in range");
                out.push(
                    (!is_alpha_critical_graph(&d)).then(|| cex(&[g, &d], format!("d(G, {v})"))),
                );
                for sp in split_partitions(g, v).expect("in range") {
                    let s = split_vertex(g, v, &sp).expect("valid");
                    out.push(
                        (!is_alpha_critical_graph(&s))
                            .then(|| cex(&[g, &s], format!("s(G, {v}), {sp:?}"))),
                    );
                }
            }
            out
        })
        .collect();
    let implications = corpus
        .par_iter()
        .map(|g| {
            let r = crate::reduce::check_basic(g).expect("critical and connected");
            let ok = r.is_basic == (!r.splitting_reducible && !r.duplication_reducible)
                && (!r.odd_subdivision_reducible || r.splitting_reducible);
            (!ok).then(|| cex(&[g], format!("{r:?}")))
        })
        .collect();
    Ok(SuiteReport::new(
        Suite::Reduction,
        p,
        vec![
            Check::from_outcomes(
                "basic status and subdivision implies splitting",
                implications,
            ),
            Check::from_outcomes("degree test = gadget search", degree_vs_gadget),
            Check::from_outcomes("odd path contraction reverses subdivision", odd_reversal),
            Check::from_outcomes("twin deletion reverses duplication", dup_reversal),
            Check::from_outcomes("operations preserve criticality", preserved),
        ],
    ))
}

/// Deleting one vertex of `G`, or one of each side, from joins meeting all
/// conditions; compares criticality with `G0 = G ∖ u` (and `H0 = H ∖ v`).
fn vertex_deleted(p: Params) -> Result<SuiteReport> {
    let qs = generate::positive_quadruples(p.seed, p.instances, p.n)?;
    let one: Vec<Option<Counterexample>> = qs
        .par_iter()
        .flat_map_iter(|q| {
            (0..q.g.n()).map(move |u| {
                let r = corollary_vertex_deleted(q, u, None).expect("conditions hold");
                (!r.agree).then(|| {
                    quad_cex(
                        q,
                        format!("u = {u}: critical {}, predicted {}", r.actual, r.predicted),
                    )
                })
            })
        })
        .collect();
    let two: Vec<Option<Counterexample>> = qs
        .par_iter()
        .flat_map_iter(|q| {
            (0..q.g.n()).flat_map(move |u| {
                (0..q.h.n()).map(move |v| {
                    let r = corollary_vertex_deleted(q, u, Some(v)).expect("conditions hold");
                    (!r.agree).then(|| {
                        quad_cex(
                            q,
                            format!(
                                "u = {u}, v = {v}: critical {}, predicted {}",
                                r.actual, r.predicted
                            ),
                        )
                    })
                })
            })
        })
        .collect();
    Ok(SuiteReport::new(
        Suite::VertexDeleted,
        p,
        vec![
            Check::from_outcomes("J - u critical iff G0 = G - u", one),
            Check::from_outcomes("J - {u, v} critical iff G0 = G - u and H0 = H - v", two),
        ],
    ))
}
