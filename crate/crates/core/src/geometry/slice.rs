//! Complex slices `C_I = R + R I` of a locally-complex algebra and the snail
//! of a polynomial, the union over `I` of the root hulls of the projections `f_I`.

use num_complex::Complex64;

use crate::algebra::{same_params, CDElement, Params};
use crate::error::{CdError, Result};
use crate::geometry::hull::{convex_hull_2d, point_in_hull_relative, Membership};
use crate::poly::CDPolynomial;
use crate::roots::complex_roots_of;
use crate::scalar::Scalar;

/// A unit imaginary direction `I`: trace 0, norm 1.
#[derive(Clone, Debug, PartialEq)]
pub struct SliceDirection {
    i: CDElement<f64>,
}

impl SliceDirection {
    pub fn new<S: Scalar>(i: &CDElement<S>, tol: f64) -> Result<Self> {
        let i = i.to_f64();
        require_slices(i.params())?;
        if i.trace().abs() > tol || (i.norm() - 1.0).abs() > tol {
            return Err(CdError::BadDirection);
        }
        Ok(Self { i })
    }

    /// `im(x) / |im(x)|`, or `None` for scalars.
    pub fn from_imaginary<S: Scalar>(x: &CDElement<S>) -> Result<Option<Self>> {
        let x = x.to_f64();
        require_slices(x.params())?;
        let mut im = x.im()?;
        let len = im.norm().sqrt();
        if len == 0.0 {
            return Ok(None);
        }
        im = im.scale(&(1.0 / len));
        Ok(Some(Self { i: im }))
    }

    /// The default slice through `e_1`.
    pub fn first_basis(params: &Params<f64>) -> Result<Self> {
        require_slices(params)?;
        Ok(Self {
            i: CDElement::basis(params, 1),
        })
    }

    pub fn element(&self) -> &CDElement<f64> {
        &self.i
    }

    /// Coordinates `(<x, 1>, <x, I>)` of the orthogonal projection onto `C_I`.
    pub fn project<S: Scalar>(&self, x: &CDElement<S>) -> Complex64 {
        let c = x.coeffs();
        let im = c.iter().zip(self.i.coeffs()).skip(1).map(|(a, b)| a.to_f64() * b).sum();
        Complex64::new(c[0].to_f64(), im)
    }

    /// `re + im * I`.
    pub fn lift(&self, z: Complex64) -> CDElement<f64> {
        let mut out = self.i.scale(&z.im);
        let one = CDElement::scalar(self.i.params(), z.re);
        out = &out + &one;
        out
    }
}

fn require_slices<S: Scalar>(params: &Params<S>) -> Result<()> {
    if params.is_locally_complex() && params.level() >= 1 {
        Ok(())
    } else {
        Err(CdError::NotLocallyComplex)
    }
}

/// `f = f_I + f_I^perp`, coefficientwise.
#[derive(Clone, Debug, PartialEq)]
pub struct SliceProjection {
    /// Coefficients of `f_I`, lowest power first, as `re + im I`.
    pub coeffs: Vec<Complex64>,
    /// `|a_k - pi_I(a_k)|` for each coefficient.
    pub perp_norms: Vec<f64>,
}

pub fn slice_project<S: Scalar>(f: &CDPolynomial<S>, dir: &SliceDirection) -> Result<SliceProjection> {
    require_slices(f.params())?;
    let mut coeffs = Vec::with_capacity(f.coeffs().len());
    let mut perp_norms = Vec::with_capacity(f.coeffs().len());
    for a in f.coeffs() {
        let z = dir.project(a);
        let total: f64 = a.coeffs().iter().map(|x| x.to_f64().powi(2)).sum();
        coeffs.push(z);
        perp_norms.push((total - z.norm_sqr()).max(0.0).sqrt());
    }
    Ok(SliceProjection { coeffs, perp_norms })
}

/// One slice of the snail.
#[derive(Clone, Debug, PartialEq)]
pub struct SnailSlice {
    pub direction: SliceDirection,
    pub projected: Vec<Complex64>,
    pub roots: Vec<Complex64>,
    /// Counterclockwise hull of `roots`; empty when `whole_plane`.
    pub hull: Vec<Complex64>,
    /// `f_I` is constant, in which case the slice contributes all of `C_I`.
    pub whole_plane: bool,
}

impl SnailSlice {
    pub fn build<S: Scalar>(f: &CDPolynomial<S>, direction: SliceDirection, tol: f64) -> Result<Self> {
        let mut projected = slice_project(f, &direction)?.coeffs;
        let scale = projected.iter().map(|c| c.norm()).fold(0.0, f64::max);
        // float noise in the projection must not fake a leading coefficient
        while projected
            .last()
            .is_some_and(|c| c.norm() <= 1e-14 * scale || c.norm() == 0.0)
        {
            projected.pop();
        }
        if projected.len() <= 1 {
            return Ok(Self {
                direction,
                projected,
                roots: Vec::new(),
                hull: Vec::new(),
                whole_plane: true,
            });
        }
        let set = complex_roots_of(&projected, tol)?;
        let roots: Vec<Complex64> = set.clusters.iter().map(|c| c.center).collect();
        let hull = convex_hull_2d(&roots);
        Ok(Self {
            direction,
            projected,
            roots,
            hull,
            whole_plane: false,
        })
    }

    pub fn membership(&self, z: Complex64, tol: f64) -> Membership {
        if self.whole_plane {
            Membership::Inside
        } else {
            point_in_hull_relative(z, &self.hull, tol)
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SnailMembership {
    pub verdict: Membership,
    /// The slice through the tested point.
    pub slice: SnailSlice,
    /// The tested point in slice coordinates.
    pub point: Complex64,
}

/// Exact point test for `lambda in sn(f)`: only the slice through `lambda`
/// can contain it. Segment hulls are judged relative to their line, so the
/// open segment is inside.
pub fn in_snail<S: Scalar>(f: &CDPolynomial<S>, lambda: &CDElement<S>, tol: f64) -> Result<SnailMembership> {
    let f = f.to_f64();
    let lambda = lambda.to_f64();
    if !same_params(f.params(), lambda.params()) {
        return Err(CdError::ParamsMismatch);
    }
    let direction = match SliceDirection::from_imaginary(&lambda)? {
        Some(d) => d,
        None => SliceDirection::first_basis(f.params())?,
    };
    let point = direction.project(&lambda);
    let slice = SnailSlice::build(&f, direction, tol)?;
    Ok(SnailMembership {
        verdict: slice.membership(point, tol),
        slice,
        point,
    })
}

/// Number of slices drawn by default: 256 over the quaternions, halved per
/// doubling, at least 16.
pub fn default_slice_count(level: usize) -> usize {
    let shift = level.saturating_sub(2).min(4);
    (256 >> shift).max(16)
}

fn primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n = 2u64;
    while out.len() < count {
        if out.iter().take_while(|&&p| p * p <= n).all(|&p| n % p != 0) {
            out.push(n);
        }
        n += 1;
    }
    out
}

fn radical_inverse(mut index: u64, base: u64) -> f64 {
    let mut result = 0.0;
    let mut f = 1.0 / base as f64;
    while index > 0 {
        result += f * (index % base) as f64;
        index /= base;
        f /= base as f64;
    }
    result
}

/// Quasi-uniform unit imaginary directions: Halton points pushed through
/// Box–Muller, then normalized. The seed offsets the Halton index.
pub fn sample_directions(params: &Params<f64>, count: usize, seed: u64) -> Result<Vec<SliceDirection>> {
    require_slices(params)?;
    let dim = params.dim() - 1;
    let bases = primes(2 * dim.div_ceil(2));
    let mut out = Vec::with_capacity(count);
    let mut index = seed.wrapping_add(1);
    while out.len() < count {
        let u: Vec<f64> = bases.iter().map(|&b| radical_inverse(index, b)).collect();
        index = index.wrapping_add(1);
        let mut g = Vec::with_capacity(dim + 1);
        for pair in u.chunks(2) {
            let r = (-2.0 * (1.0 - pair[0]).ln()).sqrt();
            let theta = 2.0 * std::f64::consts::PI * pair[1];
            g.push(r * theta.cos());
            g.push(r * theta.sin());
        }
        g.truncate(dim);
        let len = g.iter().map(|x| x * x).sum::<f64>().sqrt();
        if len < 1e-12 {
            continue;
        }
        let mut coeffs = vec![0.0];
        coeffs.extend(g.iter().map(|x| x / len));
        let i = CDElement::new(params, coeffs)?;
        out.push(SliceDirection { i });
    }
    Ok(out)
}

/// Deterministic sample of the snail; a picture, not a certificate.
pub fn snail_sample<S: Scalar>(f: &CDPolynomial<S>, num_slices: usize, seed: u64, tol: f64) -> Result<Vec<SnailSlice>> {
    let f = f.to_f64();
    sample_directions(f.params(), num_slices, seed)?
        .into_iter()
        .map(|d| SnailSlice::build(&f, d, tol))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CDParams;

    fn quaternions() -> Params<f64> {
        CDParams::main_sequence(2)
    }

    #[test]
    fn projection_of_real_polynomial_is_itself() {
        let h = quaternions();
        let f = CDPolynomial::from_int_rows(&h, &[&[2, 0, 0, 0], &[-3, 0, 0, 0], &[1, 0, 0, 0]]).unwrap();
        let dir = SliceDirection::new(&CDElement::from_terms(&h, &[(2, 0.6), (3, 0.8)]), 1e-12).unwrap();
        let p = slice_project(&f, &dir).unwrap();
        assert_eq!(
            p.coeffs,
            vec![
                Complex64::new(2.0, 0.0),
                Complex64::new(-3.0, 0.0),
                Complex64::new(1.0, 0.0)
            ]
        );
        assert!(p.perp_norms.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn directions_are_validated() {
        let h = quaternions();
        assert!(matches!(
            SliceDirection::new(&CDElement::from_terms(&h, &[(1, 2.0)]), 1e-9),
            Err(CdError::BadDirection)
        ));
        let split = CDParams::gamma_form(vec![-1.0, 1.0]).unwrap();
        assert!(matches!(
            SliceDirection::new(&CDElement::basis(&split, 1), 1e-9),
            Err(CdError::NotLocallyComplex)
        ));
    }

    #[test]
    fn directions_are_unit_imaginary_and_reproducible() {
        let o: Params<f64> = CDParams::main_sequence(3);
        let a = sample_directions(&o, 50, 7).unwrap();
        let b = sample_directions(&o, 50, 7).unwrap();
        assert_eq!(a, b);
        for d in &a {
            assert!(d.element().trace().abs() < 1e-12);
            assert!((d.element().norm() - 1.0).abs() < 1e-12);
        }
        assert_ne!(a, sample_directions(&o, 50, 8).unwrap());
    }

    #[test]
    fn projected_roots_of_a_linear_polynomial() {
        let h = quaternions();
        // x - (1 + 2i + 2j): on the slice through i + j the root is 1 + 2 sqrt2 I
        let f = CDPolynomial::from_int_rows(&h, &[&[-1, -2, -2, 0], &[1, 0, 0, 0]]).unwrap();
        let lambda = CDElement::from_terms(&h, &[(0, 1.0), (1, 2.0), (2, 2.0)]);
        let m = in_snail(&f, &lambda, 1e-9).unwrap();
        assert_eq!(m.verdict, Membership::Boundary);
        assert!((m.point - Complex64::new(1.0, 8f64.sqrt())).norm() < 1e-12);
    }

    #[test]
    fn default_counts() {
        assert_eq!(default_slice_count(2), 256);
        assert_eq!(default_slice_count(3), 128);
        assert_eq!(default_slice_count(7), 16);
        assert_eq!(default_slice_count(1), 256);
    }
}
