//! Jensen spheres: center `Re(z)`, radius `|Im(z)|` for each non-real root
//! pair of a real polynomial.

use crate::algebra::QuadraticClass;
use crate::error::{CdError, Result};
use crate::poly::{demote_central, CDPolynomial, CentralPolynomial};
use crate::roots::{candidate_classes, spherical_classes, FinderOptions};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JensenSphere {
    pub center: f64,
    pub radius: f64,
}

impl JensenSphere {
    pub fn from_class(q: &QuadraticClass<f64>) -> Self {
        let (center, radius) = q.center_radius();
        Self { center, radius }
    }

    /// Whether the whole class of `q` lies on or inside the sphere. The class
    /// point at distance `sqrt((T/2 - c)^2 + N - T^2/4)` from the center.
    pub fn contains_class(&self, q: &QuadraticClass<f64>, tol: f64) -> bool {
        let (c, r) = q.center_radius();
        let d2 = (c - self.center).powi(2) + r * r;
        d2 <= self.radius * self.radius + tol * (1.0 + self.radius * self.radius)
    }
}

pub fn jensen_spheres<S: Scalar>(g: &CentralPolynomial<S>, opts: &FinderOptions) -> Result<Vec<JensenSphere>> {
    if g.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let g = CentralPolynomial::new(g.to_f64());
    Ok(candidate_classes(&g, opts)?
        .classes
        .iter()
        .map(|(q, _)| JensenSphere::from_class(q))
        .collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct JensenVerdict {
    pub class: QuadraticClass<f64>,
    /// Index of the first sphere containing the class.
    pub sphere: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JensenReport {
    pub spheres: Vec<JensenSphere>,
    pub classes: Vec<JensenVerdict>,
}

impl JensenReport {
    pub fn passed(&self) -> bool {
        self.classes.iter().all(|c| c.sphere.is_some())
    }
}

fn judge(spheres: Vec<JensenSphere>, classes: Vec<QuadraticClass<f64>>, tol: f64) -> JensenReport {
    let classes = classes
        .into_iter()
        .map(|class| JensenVerdict {
            sphere: spheres.iter().position(|s| s.contains_class(&class, tol)),
            class,
        })
        .collect();
    JensenReport { spheres, classes }
}

fn slack(opts: &FinderOptions) -> f64 {
    (opts.tol * 1e3).max(1e-12)
}

/// Spherical critical classes of a real-coefficient `f` against the Jensen
/// spheres of its spherical roots. With real coefficients every non-real
/// root is spherical, so both sides come from real root finding.
pub fn jensen_check<S: Scalar>(f: &CDPolynomial<S>, opts: &FinderOptions) -> Result<JensenReport> {
    if !f.params().is_locally_complex() {
        return Err(CdError::NotLocallyComplex);
    }
    let f = f.to_f64();
    if !f.has_real_coefficients(0.0) {
        return Err(CdError::NonRealCoefficients);
    }
    let real = demote_central(&f, 0.0)?;
    let spheres = jensen_spheres(&real, opts)?;
    let derivative = real.derivative();
    let classes = if derivative.degree().unwrap_or(0) == 0 {
        Vec::new()
    } else {
        candidate_classes(&derivative, opts)?
            .classes
            .into_iter()
            .map(|(q, _)| q)
            .collect()
    };
    Ok(judge(spheres, classes, slack(opts)))
}

/// Any `f`: spherical critical classes against the Jensen spheres of `C_f`.
pub fn jensen_companion_check<S: Scalar>(f: &CDPolynomial<S>, opts: &FinderOptions) -> Result<JensenReport> {
    if !f.params().is_locally_complex() {
        return Err(CdError::NotLocallyComplex);
    }
    let f = f.to_f64();
    let spheres = jensen_spheres(&f.companion(opts.tol.sqrt())?, opts)?;
    let d = f.derivative();
    let classes = if d.degree().unwrap_or(0) == 0 {
        Vec::new()
    } else {
        spherical_classes(&d, opts)?
            .classes
            .into_iter()
            .map(|(q, _)| q)
            .collect()
    };
    Ok(judge(spheres, classes, slack(opts)))
}
