//! Geometry of locally-complex algebras: complex slices, the snail, root
//! bounds, Gauss–Lucas checks and Jensen spheres.

pub mod bounds;
pub mod hull;
pub mod jensen;
pub mod lucas;
pub mod slice;

pub use bounds::{bounds, coefficient_moduli, rho_estimate, Bounds, RhoEstimate};
pub use hull::{convex_hull_2d, point_in_hull, point_in_hull_relative, Membership};
pub use jensen::{jensen_check, jensen_companion_check, jensen_spheres, JensenReport, JensenSphere, JensenVerdict};
pub use lucas::{
    class_point, companion_hull_membership, critical_points, gauss_lucas_spherical_check, ClassVerdict, CriticalPoints,
    GaussLucasReport,
};
pub use slice::{
    default_slice_count, in_snail, sample_directions, slice_project, snail_sample, SliceDirection, SliceProjection,
    SnailMembership, SnailSlice,
};
