//! Gauss–Lucas type checks: critical points against the root hulls of the
//! companion polynomial.

use num_complex::Complex64;

use crate::algebra::{CDElement, Params, QuadraticClass};
use crate::error::{CdError, Result};
use crate::geometry::hull::{convex_hull_2d, point_in_hull_relative, Membership};
use crate::geometry::slice::SliceDirection;
use crate::poly::CDPolynomial;
use crate::roots::{complex_roots, division_algebra_roots, spherical_classes, FinderOptions};
use crate::scalar::Scalar;

/// `T/2 + sqrt(N - T^2/4) i`, the upper representative of a class in any slice.
pub fn class_point(q: &QuadraticClass<f64>) -> Complex64 {
    let (c, r) = q.center_radius();
    Complex64::new(c, r)
}

/// Roots of `f'` grouped by kind, over the float backend.
#[derive(Clone, Debug)]
pub struct CriticalPoints {
    pub params: Params<f64>,
    pub spherical: Vec<(QuadraticClass<f64>, usize)>,
    /// Only found over quaternions and octonions.
    pub isolated: Vec<CDElement<f64>>,
    pub central: Vec<f64>,
}

impl CriticalPoints {
    /// One element per critical class; spherical classes are represented on
    /// the slice through `e_1`.
    pub fn representatives(&self) -> Vec<CDElement<f64>> {
        let dir = SliceDirection::first_basis(&self.params).expect("locally complex");
        let mut out: Vec<CDElement<f64>> = self.spherical.iter().map(|(q, _)| dir.lift(class_point(q))).collect();
        out.extend(self.isolated.iter().cloned());
        out.extend(self.central.iter().map(|&r| CDElement::scalar(&self.params, r)));
        out
    }
}

pub fn critical_points<S: Scalar>(f: &CDPolynomial<S>, opts: &FinderOptions) -> Result<CriticalPoints> {
    if !f.params().is_locally_complex() || f.params().level() == 0 {
        return Err(CdError::NotLocallyComplex);
    }
    let f = f.to_f64();
    let d = f.derivative();
    let params = f.params().clone();
    if d.degree().unwrap_or(0) == 0 {
        return Ok(CriticalPoints {
            spherical: Vec::new(),
            isolated: Vec::new(),
            central: Vec::new(),
            params,
        });
    }
    if f.params().is_division_algebra() {
        let roots = division_algebra_roots(&d, opts)?;
        return Ok(CriticalPoints {
            spherical: roots.spherical,
            isolated: roots.isolated,
            central: roots.central,
            params,
        });
    }
    let report = spherical_classes(&d, opts)?;
    Ok(CriticalPoints {
        spherical: report.classes,
        isolated: Vec::new(),
        central: report.central_roots.into_iter().map(|(r, _)| r).collect(),
        params,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassVerdict {
    pub class: QuadraticClass<f64>,
    pub point: Complex64,
    pub verdict: Membership,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GaussLucasReport {
    pub companion_roots: Vec<Complex64>,
    pub hull: Vec<Complex64>,
    pub classes: Vec<ClassVerdict>,
}

impl GaussLucasReport {
    pub fn passed(&self) -> bool {
        self.classes.iter().all(|c| c.verdict.is_member())
    }
}

fn companion_hull<S: Scalar>(f: &CDPolynomial<S>, opts: &FinderOptions) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    let c = f.to_f64().companion(opts.tol.sqrt())?;
    let roots: Vec<Complex64> = complex_roots(&c, opts.tol)?.clusters.iter().map(|c| c.center).collect();
    let hull = convex_hull_2d(&roots);
    Ok((roots, hull))
}

/// Each spherical critical class against the hull of the complex roots of
/// `C_f`. The companion has real coefficients, so every slice sees the same
/// hull and the class point can be placed in any of them.
pub fn gauss_lucas_spherical_check<S: Scalar>(f: &CDPolynomial<S>, opts: &FinderOptions) -> Result<GaussLucasReport> {
    if !f.params().is_locally_complex() {
        return Err(CdError::NotLocallyComplex);
    }
    let (companion_roots, hull) = companion_hull(f, opts)?;
    let d = f.to_f64().derivative();
    let spherical = if d.degree().unwrap_or(0) == 0 {
        Vec::new()
    } else {
        spherical_classes(&d, opts)?.classes
    };
    let tol = opts.tol.sqrt();
    let classes = spherical
        .into_iter()
        .map(|(class, _)| {
            let point = class_point(&class);
            ClassVerdict {
                verdict: point_in_hull_relative(point, &hull, tol),
                class,
                point,
            }
        })
        .collect();
    Ok(GaussLucasReport {
        companion_roots,
        hull,
        classes,
    })
}

/// Membership of `lambda`, placed in its own slice, in the hull of the
/// complex roots of `C_f`.
pub fn companion_hull_membership<S: Scalar>(
    f: &CDPolynomial<S>,
    lambda: &CDElement<S>,
    opts: &FinderOptions,
) -> Result<Membership> {
    if !f.params().is_locally_complex() {
        return Err(CdError::NotLocallyComplex);
    }
    let lambda = lambda.to_f64();
    let point = Complex64::new(lambda.re()?, lambda.im()?.norm().max(0.0).sqrt());
    let (_, hull) = companion_hull(f, opts)?;
    Ok(point_in_hull_relative(point, &hull, opts.tol.sqrt()))
}
