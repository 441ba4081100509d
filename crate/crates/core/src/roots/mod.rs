//! Root finding: complex solver, candidate classes from the companion
//! polynomial, spherical detection and deflation, central roots, and the
//! isolated roots of quaternion/octonion polynomials.

pub mod candidates;
pub mod solver;
mod spherical;

pub use candidates::{candidate_classes, class_order, CandidateSet};
pub use solver::{complex_roots, complex_roots_of, ComplexRoot, ComplexRootSet, RootCluster};
pub use spherical::{
    central_roots, division_algebra_roots, is_spherical_root, real_pair_classes, spherical_classes,
    spherical_classes_with, spherical_factorization, DivisionRoots, SphericalFactorization, SphericalReport,
    SphericalVerdict,
};

use crate::scalar::{DEFAULT_MAX_DENOMINATOR, DEFAULT_TOL};

/// Tolerance and rationalization settings shared by the finder.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FinderOptions {
    pub tol: f64,
    /// Denominator bound when turning numeric candidates into exact ones.
    pub max_denominator: u64,
}

impl Default for FinderOptions {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            max_denominator: DEFAULT_MAX_DENOMINATOR,
        }
    }
}

impl FinderOptions {
    pub fn with_tol(tol: f64) -> Self {
        Self { tol, ..Self::default() }
    }
}
