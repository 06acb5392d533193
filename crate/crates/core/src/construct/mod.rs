//! Generative constructions: Lawrence extensions, lexicographic liftings,
//! the neighborly search and pipelines, and the `f_m` polynomial family.

pub mod kortenkamp;
pub mod lawrence;
pub mod lifting;
pub mod pipeline;
pub mod polynomial;

pub use lifting::{
    lex_lift, lex_lift_with, lift_invariance_check, lift_projection, replay, verify_lex_lift,
    LiftMode, LiftOptions, LiftingCertificate, SignVector,
};
pub use lawrence::{
    decode_lawrence, inscribe_lawrence, inscribe_step, lawrence_extension, lawrence_pairs,
    lawrence_polytope,
};
pub use polynomial::{fm_polynomial, sturm_root_count, IntPolynomial};
pub use kortenkamp::{
    kortenkamp_lift, lex_lift_ordered, replay_history, KortenkampResult, LiftStep,
    DEFAULT_SEARCH_BUDGET,
};
pub use pipeline::{
    delaunay_instance, delaunay_instance_from, instance_sizes, neighborly_from, neighborly_pipeline,
    phi, psi, verify_delaunay_instance, verify_neighborly_output, DelaunayInstance,
    NeighborlyOutput, Provenance,
};
