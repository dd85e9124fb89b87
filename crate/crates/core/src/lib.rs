//! Kodaira fibers of elliptic surfaces as combinatorial curve configurations.
//!
//! The crate builds every fiber type, recognizes arbitrary configurations,
//! computes the invariants a derived equivalence must preserve (`G_0`,
//! negative K-groups, the shape of the Picard scheme, singularity counts)
//! and screens pairs of fibers for Fourier–Mukai partnership.
//!
//! ```
//! use kodaira_core::{build, compare, KodairaType, PartnerVerdict};
//!
//! let nodal = build(KodairaType::I(1)).unwrap();
//! let cusp = build(KodairaType::II).unwrap();
//! assert!(matches!(compare(&nodal, &cusp).unwrap(), PartnerVerdict::NotEquivalent { .. }));
//! ```

pub mod canon;
pub mod catalog;
pub mod graphs;
pub mod invariants;
pub mod linalg;
pub mod model;
pub mod partner;

pub use catalog::{
    build, classify, enumerate_types, recognize, subclass, CatalogError, KodairaType, Rejection, Subclass,
};
pub use graphs::{bipartite_graph, dual_graph, first_betti, lambda, GraphError, Multigraph};
pub use invariants::{
    arithmetic_genus, dsg_status, euler_characteristic, grothendieck_group, invariant_profile, is_k_minus_one_regular,
    k0_shape, negative_k, picard_descriptor, singularity_summary, DsgStatus, FreeGroup, InvariantError,
    InvariantProfile, K0Shape, PicardDescriptor, SingularitySummary,
};
pub use model::{
    check_fiber_like, divisor_square, gcd_multiplicity, intersection_matrix, is_fiber_like, reduce, Component,
    CurveConfiguration, FiberCheck, IntersectionMatrix, IntrinsicSingularity, LocalType, ModelError, SingularPoint,
};
pub use partner::{
    compare, compare_profiles, partner_matrix, Invariant, PartnerError, PartnerTable, PartnerVerdict, VerdictKind,
    Witness,
};
