//! Analysis of highly-regular graphs.
//!
//! A graph is *highly regular* when every vertex `u` admits a partition of the
//! vertex set into `V_0(u) = {u}, V_1(u), ..., V_{m-1}(u)` such that the number
//! of neighbors a vertex of `V_j(u)` has inside `V_i(u)` depends only on the
//! pair `(i, j)`. The common `m x m` count matrix is the *collapsed adjacency
//! matrix* (CAM), and the least possible `m` is the *index* of the graph.
//!
//! The crate computes rooted coarsest equitable partitions and decides high
//! regularity ([`refine`]), classifies graphs as distance-regular or
//! strongly-regular and evaluates generalized intersection-number bounds
//! ([`classify`]), verifies symmetric association schemes and builds
//! finite-field norm graphs ([`schemes`]), constructs explicit families of
//! highly-regular graphs that are not distance-regular ([`families`]), and
//! checks local spectral regularity through adjacency idempotents
//! ([`spectral`]).
//!
//! The crate is `no_std`-compatible (requires `alloc`). Floating-point math in
//! [`spectral`] uses `std` by default or `libm` with
//! `--no-default-features --features libm`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("hrg-core needs either the `std` or the `libm` feature for floating-point math");

pub mod bitset;
pub mod classify;
pub mod families;
pub mod field;
pub mod graph;
pub mod refine;
pub mod schemes;
pub mod spectral;

pub use classify::{
    bound_profile, classify_distance_regularity, classify_distance_regularity_with,
    index_lower_bound, is_distance_regular, is_strongly_regular, tridiagonal_form, BoundProfile,
    ClassifyError, DrgClassification, IntersectionArray,
};
pub use families::{
    complement_construction, p_family_member, product_construction, torus, torus_is_exception,
    FamilyError,
};
pub use field::{FieldError, FiniteField};
pub use graph::{Distance, DistanceData, Graph, GraphError};
pub use refine::{
    analyze_hrg, partition_structure_checks, quotient_matrix, rooted_coarsest_partition,
    verify_cam, verify_cam_matrix, Cam, CamCheck, HrgError, HrgFailure, HrgReport,
    RefinementError, RootedPartition, StructureCheck,
};
pub use schemes::{
    distance_relations, orbit_cam_check, relation_graph, verify_scheme, wl_graph, wl_scheme,
    AssociationScheme, BoolMatrix, SchemeError,
};
pub use spectral::{
    crossed_multiplicities, eigendecompose, intertwine_check, spectral_regularity_check,
    CrossedTable, SpectralData, SpectralError, SpectralRegularityReport, DEFAULT_SPECTRAL_TOL,
};
