//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are grown from graphs on `n − 1` vertices by adding
//! one vertex with every possible neighbourhood, then deduplicated by
//! canonical form. Levels are memoized for the life of the process.

use std::collections::HashSet;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::canon::{canonical_graph, canonical_graph6};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reduce::check_basic;
use crate::solver::is_alpha_critical_graph;

/// Largest order for which every graph is listed.
pub const CENSUS_CAP: usize = 8;

/// Largest order for the connected α-critical listing, which filters the
/// one-vertex extensions of the full order-8 census before deduplicating.
pub const CRITICAL_CENSUS_CAP: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    All,
    /// Connected is implied for the two criticality filters.
    AlphaCritical,
    Basic,
}

static LEVELS: Mutex<Vec<Vec<Graph>>> = Mutex::new(Vec::new());

fn extend(parent: &Graph, nbhd: usize) -> Graph {
    let n = parent.n();
    let mut adj: Vec<Bits> = (0..n).map(|v| *parent.row(v)).collect();
    let mut new = Bits::EMPTY;
    for (v, row) in adj.iter_mut().enumerate() {
        if nbhd >> v & 1 == 1 {
            row.insert(n);
            new.insert(v);
        }
    }
    adj.push(new);
    Graph::from_rows(adj)
}

fn dedup_sorted(mut found: Vec<(String, Graph)>) -> Vec<Graph> {
    found.par_sort_unstable_by(|a, b| {
        a.1.edge_count()
            .cmp(&b.1.edge_count())
            .then_with(|| a.0.cmp(&b.0))
    });
    found.dedup_by(|a, b| a.0 == b.0);
    found.into_iter().map(|(_, g)| g).collect()
}

fn grow(prev: &[Graph], keep: impl Fn(&Graph) -> bool + Sync) -> Vec<Graph> {
    let found: Vec<(String, Graph)> = prev
        .par_iter()
        .flat_map_iter(|p| {
            let mut local = HashSet::new();
            let mut out = Vec::new();
            for nbhd in 0..(1usize << p.n()) {
                let g = extend(p, nbhd);
                if !keep(&g) {
                    continue;
                }
                let c = canonical_graph(&g);
                let key = crate::graph6::to_graph6(&c);
                if local.insert(key.clone()) {
                    out.push((key, c));
                }
            }
            out
        })
        .collect();
    dedup_sorted(found)
}

/// Every graph on exactly `n` vertices, one per isomorphism class, ordered
/// by edge count and then canonical graph6.
pub fn graphs_on(n: usize) -> Result<Vec<Graph>> {
    if n > CENSUS_CAP {
        return Err(Error::TooLargeForEnumeration { n, cap: CENSUS_CAP });
    }
    let mut levels = LEVELS.lock().expect("census cache poisoned");
    if levels.is_empty() {
        levels.push(vec![Graph::empty(0)]);
    }
    while levels.len() <= n {
        let next = grow(levels.last().expect("seeded"), |_| true);
        levels.push(next);
    }
    Ok(levels[n].clone())
}

/// Connected α-critical graphs on exactly `n` vertices.
pub fn connected_alpha_critical_on(n: usize) -> Result<Vec<Graph>> {
    if n > CRITICAL_CENSUS_CAP {
        return Err(Error::TooLargeForEnumeration {
            n,
            cap: CRITICAL_CENSUS_CAP,
        });
    }
    let good = |g: &Graph| g.is_connected() && is_alpha_critical_graph(g);
    if n <= CENSUS_CAP {
        return Ok(graphs_on(n)?.into_iter().filter(good).collect());
    }
    Ok(grow(&graphs_on(n - 1)?, good))
}

/// Graphs on exactly `n` vertices passing `filter` (and connected, if asked).
/// Basic graphs are always connected.
pub fn census(n: usize, connected: bool, filter: Filter) -> Result<Vec<Graph>> {
    match filter {
        Filter::All => {
            let all = graphs_on(n)?;
            Ok(if connected {
                all.into_iter().filter(Graph::is_connected).collect()
            } else {
                all
            })
        }
        Filter::AlphaCritical if connected => connected_alpha_critical_on(n),
        Filter::AlphaCritical => Ok(graphs_on(n)?
            .into_iter()
            .filter(is_alpha_critical_graph)
            .collect()),
        Filter::Basic => Ok(connected_alpha_critical_on(n)?
            .into_iter()
            .filter(|g| g.n() >= 2 && check_basic(g).is_ok_and(|r| r.is_basic))
            .collect()),
    }
}

/// [`census`] over every order `0..=n`.
pub fn census_up_to(n: usize, connected: bool, filter: Filter) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(census(k, connected, filter)?);
    }
    Ok(out)
}

/// Canonical graph6 strings of a listing, in order.
pub fn graph6_lines(gs: &[Graph]) -> Vec<String> {
    gs.iter().map(canonical_graph6).collect()
}
