//! Twinless strong connectivity on simple directed graphs.
//!
//! The crate decomposes digraphs into strongly connected and twinless
//! strongly connected components, finds strong and twinless articulation
//! points, and builds 2-vertex-twinless connected spanning subgraphs with
//! at most `4n + a_t (n - 1)` edges. Small instances can be solved exactly
//! for comparison.

pub mod connectivity;
pub mod error;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod instances;
pub mod io;
pub mod sparsify;

pub use connectivity::{
    connectivity_report, is_2_vertex_connected, is_2_vertex_twinless_connected,
    is_strongly_connected, is_twinless_strongly_connected, strong_articulation_points,
    strongly_connected_components, twinless_articulation_points, twinless_sccs, ConnectivityReport,
    SccPartition, TsccPartition,
};
pub use error::{
    ConnectivityError, ExactError, GenerateError, GraphError, ParseError, SparsifyError,
};
pub use exact::{
    approximation_ratio, exact_min_2vcs, exact_min_2vtcs, tsc_oracle, tsc_witness_oracle,
    ExactResult, RatioRecord, SearchBudget,
};
pub use generate::{Family, GeneratorSpec};
pub use graph::{
    collapse_underlying, Digraph, DirectedGraph, Edge, EdgeId, EdgeSet, EdgeSubgraphView, PairKind,
    UndirectedCollapse, VertexDeletedView, VertexId,
};
pub use sparsify::{
    approx_m2vtcs, approx_m2vtcs_with_order, augment_to_2vtc, minimal_2vcs, minimal_2vtcs,
    pick_cross_edge, verify_2vtc, AugmentationStep, Certificate, EdgeOrder, SparsifyResult,
    Verdict,
};
