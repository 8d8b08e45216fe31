//! Exact-arithmetic toolkit for chromatic polynomials of bicliques
//! (complements of bipartite graphs).
//!
//! A (j,k)-biclique is two cliques joined by bridging edges; its chromatic
//! polynomial is a sum of falling factorials weighted by the matching
//! numbers of the bipartite complement, and factors as (x)_k times a monic
//! degree-j "interesting factor". This crate computes those objects
//! exactly, detects translation/reflection relations between interesting
//! factors, generates the three known (3,k) reflection families, and
//! constructively realizes any monic integer cubic as an integer shift of
//! a chromatic root, with machine-checkable certificates. Naive brute-force
//! oracles back every formula path at desk scale.

pub mod alphan;
pub mod chromatic;
pub mod error;
pub mod graph;
pub mod matchings;
pub mod oracle;
pub mod poly;
pub mod reflect;
pub mod verify;

pub use alphan::{alpha_plus_n, construct_case, reduce_cubic, AlphaNResult, ReducedCubic};
pub use chromatic::{
    acyclic_count, chromatic_polynomial, interesting_factor, interesting_factor_3k,
    reflection_count_identity,
};
pub use error::{Error, Result};
pub use graph::{
    complement_partner, from_params, strip_universal, to_simple_graph, BicliqueSpec,
    SimpleGraph, StripResult, ThreeCliqueParams,
};
pub use matchings::{
    complement_matching_numbers, matching_numbers, theorem2_condition, MatchingNumbers,
};
pub use poly::{
    falling_factorial, from_complete_graph_basis, to_complete_graph_basis, FFSeries, IntPoly,
};
pub use reflect::{
    classify_relation, find_reflection, find_translation, prop5_pair, prop6_pair, prop7_pair,
    verify_family, FamilyReport, RelationKind, RelationReport,
};
