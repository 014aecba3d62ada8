//! Feedback-arc-set machinery and the two hardness reductions.
//!
//! [`build_reduction_w3plus`] turns any digraph into a string whose minimizer
//! count under an ordering grows linearly with the feedback arc set that
//! ordering induces on the vertices. [`build_reduction_w2`] does the same for
//! Eulerian digraphs with `w = 2`, where the count is exact.
//! [`verify_counting_identity`] checks those counting identities on concrete
//! artifacts.

mod artifact;
mod euler;
mod gadget;
mod graph;
mod verify;

pub use artifact::{build_reduction_w2, build_reduction_w3plus, BlockSpan, ReductionArtifact};
pub use euler::eulerian_circuit;
pub use gadget::{
    closed_form_counts, gadget_block, measured_block_counts, GadgetBlock, GadgetCase, GadgetCounts,
};
pub use graph::{
    fas_from_ordering, min_fas_bruteforce, min_fas_bruteforce_with_budget, ArcSet, DiGraph,
    DEFAULT_MAX_FAS_VERTICES,
};
pub use verify::{verify_counting_identity, IdentityReport};
