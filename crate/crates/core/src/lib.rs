//! Polynomials over Cayley–Dickson algebras of arbitrary dimension.

pub mod algebra;
pub mod error;
pub mod geometry;
pub mod poly;
pub mod roots;
pub mod scalar;

pub use algebra::{make_params, CDElement, CDParams, Form, Params, QuadraticClass};
pub use error::{CdError, Result};
pub use num_complex::Complex64;
pub use poly::{CDPolynomial, CentralPolynomial};
pub use scalar::{Rational, Scalar, DEFAULT_TOL};
