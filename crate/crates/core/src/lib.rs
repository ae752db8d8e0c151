//! Exact symplectic capacities `c_k` of toric domains in `R^2n`.
//!
//! Domains are described by their moment images (see [`geometry`]), values
//! are exact rationals, and every capacity comes from a closed form
//! (ellipsoids, polydisks, cylinder unions) or an exact optimization over
//! lattice vectors (general convex and concave domains).

pub mod capacity;
pub mod domain_file;
pub mod embedding;
pub mod error;
pub mod geometry;
pub mod oracle;
pub mod rational;

pub use capacity::{
    capacity_sequence, capacity_sequence_par, concave_ck, convex_ck, cylinder_union_ck,
    ellipsoid_ck, polydisk_ck, product_capacities, Branch, CapacityResult, CapacitySequence,
};
pub use domain_file::{parse_domain, render_domain, DomainFileError};
pub use embedding::{
    asymptotic_slope, cube_capacity, gromov_width_concave, lagrangian_lower_bound, obstruct,
    ObstructionReport, SlopeReport,
};
pub use error::Error;
pub use geometry::{
    antinorm_value, diagonal_intersection, scale_domain, support_value, ConcaveToricDomain,
    ConvexToricDomain, LatticeVector, ToricDomain,
};
pub use rational::{ExtendedRational, Rational};
