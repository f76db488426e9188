//! α-critical graph machinery: exact stability numbers, composition
//! operations, maximal-subgraph characterizations and reducibility checks.

pub mod bits;
pub mod canon;
pub mod census;
pub mod critical;
pub mod error;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod ops;
pub mod reduce;
pub mod solver;
pub mod verify;

pub use bits::{Bits, CAPACITY};
pub use canon::{canonical_form, canonical_graph, canonical_graph6, is_isomorphic};
pub use census::{census, census_up_to, Filter};
pub use critical::{
    canonical_subgraph, check_join_conditions, check_vertex_star_critical, corollary_k1_reduction,
    corollary_vertex_deleted, enumerate_maximal_alpha_minus_one, is_maximal_alpha_minus_one,
    join_alpha_identity, predict_maximal_in_ev_composition, predict_maximal_in_join, CaseTag,
    Condition, JoinConditionReport, MaximalClass, PredictedFamily,
};
pub use error::{Error, Result};
pub use graph::{EdgeRef, Graph, VertexMap, VertexSet};
pub use graph6::{parse_graph6, to_graph6};
pub use ops::{
    duplicate_vertex, edge_vertex_compose, ev_partitions, odd_subdivide, one_join,
    split_partitions, split_vertex, EVPartition, JoinQuadruple, SplitPartition,
};
pub use reduce::{
    check_basic, check_join_basic_theorem, contract_odd_path, is_duplication_reducible,
    is_odd_subdivision_reducible, is_splitting_reducible_alpha_critical, JoinBasicReport,
    ReducibilityReport,
};
pub use solver::{
    all_maximum_stable_sets, alpha, alpha_number, alpha_within, defect, is_alpha_critical,
    is_alpha_critical_edge, is_alpha_critical_graph, CriticalityReport, StabilityReport,
};
pub use verify::{Suite, SuiteReport};
