//! Cauchy-type root bounds and the spectral radius.

use crate::error::{CdError, Result};
use crate::poly::CDPolynomial;
use crate::roots::{complex_roots, spherical_classes, FinderOptions};
use crate::scalar::Scalar;

/// Radii of balls around 0 containing every root, every critical point and
/// the whole snail. `r1` and `r2` are strict bounds, `r3` is not.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bounds {
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
    /// Whether the monic formulas applied; otherwise these are the
    /// `|a_n|`-normalized versions.
    pub monic: bool,
}

/// Euclidean length of each coefficient, lowest power first.
pub fn coefficient_moduli<S: Scalar>(f: &CDPolynomial<S>) -> Vec<f64> {
    f.coeffs()
        .iter()
        .map(|a| a.coeffs().iter().map(|x| x.to_f64().powi(2)).sum::<f64>().sqrt())
        .collect()
}

/// Non-monic input is only accepted up to the octonions: past them a
/// leading coefficient can be a zero divisor and no ball contains the roots.
pub fn bounds<S: Scalar>(f: &CDPolynomial<S>, tol: f64) -> Result<Bounds> {
    if !f.params().is_locally_complex() {
        return Err(CdError::NotLocallyComplex);
    }
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(CdError::DegreeZero),
    };
    let monic = f.is_monic(tol);
    if !monic && f.params().level() >= 4 {
        return Err(CdError::NonMonicHighLevel);
    }
    let moduli = coefficient_moduli(f);
    let lead = if monic { 1.0 } else { moduli[n] };
    let lower = &moduli[..n];
    let squares: f64 = lower.iter().map(|m| m * m).sum::<f64>() + lead * lead;
    Ok(Bounds {
        r1: squares.sqrt() / lead,
        r2: 1.0 + lower.iter().copied().fold(0.0, f64::max) / lead,
        r3: (lower.iter().sum::<f64>() / lead).max(1.0),
        monic,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RhoEstimate {
    pub value: f64,
    /// Past the octonions only spherical and central roots are counted.
    pub partial: bool,
}

/// Largest modulus of a root. Up to the octonions every root lies in the
/// class of a companion root and each such class holds a root, so this is
/// the largest modulus among the complex roots of `C_f`.
pub fn rho_estimate<S: Scalar>(f: &CDPolynomial<S>, opts: &FinderOptions) -> Result<RhoEstimate> {
    if !f.params().is_locally_complex() {
        return Err(CdError::NotLocallyComplex);
    }
    if f.degree().unwrap_or(0) == 0 {
        return Err(CdError::DegreeZero);
    }
    if f.params().level() <= 3 {
        let c = f.companion(opts.tol)?;
        let set = complex_roots(&c, opts.tol)?;
        let value = set.clusters.iter().map(|c| c.center.norm()).fold(0.0, f64::max);
        return Ok(RhoEstimate { value, partial: false });
    }
    let report = spherical_classes(&f.to_f64(), opts)?;
    let spherical = report.classes.iter().map(|(q, _)| q.norm.max(0.0).sqrt());
    let central = report.central_roots.iter().map(|(r, _)| r.abs());
    let value = spherical.chain(central).fold(0.0, f64::max);
    Ok(RhoEstimate { value, partial: true })
}
