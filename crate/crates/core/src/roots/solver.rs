//! Simultaneous complex root finding (Aberth–Ehrlich) with multiplicity clustering.

use num_complex::Complex64;

use crate::error::{CdError, Result};
use crate::poly::CentralPolynomial;
use crate::scalar::Scalar;

const MAX_ITERATIONS: usize = 800;

/// A single approximate root and the cluster it was merged into.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexRoot {
    pub re: f64,
    pub im: f64,
    pub cluster: usize,
}

impl ComplexRoot {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Roots that coincide up to the clustering radius, treated as one root of
/// the given multiplicity. `center` is the mean of the members.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootCluster {
    pub center: Complex64,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexRootSet {
    pub roots: Vec<ComplexRoot>,
    pub clusters: Vec<RootCluster>,
    pub iterations: usize,
    /// Largest `|p(z)| / sum |a_k| |z|^k` over the listed roots.
    pub max_residual: f64,
}

impl ComplexRootSet {
    pub fn values(&self) -> Vec<Complex64> {
        self.roots.iter().map(ComplexRoot::value).collect()
    }

    pub fn max_modulus(&self) -> f64 {
        self.roots.iter().map(|r| r.value().norm()).fold(0.0, f64::max)
    }
}

/// All roots of a central polynomial with multiplicity. Exact inputs are
/// converted to floats first.
pub fn complex_roots<S: Scalar>(p: &CentralPolynomial<S>, tol: f64) -> Result<ComplexRootSet> {
    let coeffs: Vec<Complex64> = p.coeffs().iter().map(|c| Complex64::new(c.to_f64(), 0.0)).collect();
    complex_roots_of(&coeffs, tol)
}

/// All roots of a complex polynomial given lowest power first.
pub fn complex_roots_of(coeffs: &[Complex64], tol: f64) -> Result<ComplexRootSet> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.last().is_some_and(|c| *c == Complex64::new(0.0, 0.0)) {
        coeffs.pop();
    }
    if coeffs.len() < 2 {
        return Err(CdError::DegreeZero);
    }
    // exact zero roots come off first
    let zeros = coeffs.iter().take_while(|c| c.norm() == 0.0).count();
    let reduced = &coeffs[zeros..];

    let (mut values, iterations, converged) = aberth(reduced);
    values.extend(std::iter::repeat_n(Complex64::new(0.0, 0.0), zeros));

    let max_residual = values
        .iter()
        .map(|z| relative_residual(&coeffs, *z))
        .fold(0.0, f64::max);
    let mut set = cluster(values, tol, iterations, max_residual);
    for c in &mut set.clusters {
        if c.multiplicity > 1 && c.center.norm() > 0.0 {
            c.center = polish_multiple(&coeffs, c.center, c.multiplicity);
        }
    }
    // Multiple roots only converge linearly; accept a stalled run when the
    // backward error is still small.
    if !converged && max_residual > 1e-6 {
        return Err(CdError::NoConvergence {
            iterations,
            partial: Box::new(set),
        });
    }
    Ok(set)
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Newton on the `(m-1)`-th derivative, where a root of multiplicity `m`
/// is simple. Keeps the start point if the iteration wanders off.
fn polish_multiple(coeffs: &[Complex64], start: Complex64, m: usize) -> Complex64 {
    let mut d = coeffs.to_vec();
    for _ in 1..m {
        d = d.iter().enumerate().skip(1).map(|(k, c)| c * k as f64).collect();
    }
    let mut z = start;
    for _ in 0..20 {
        let (p, dp) = horner(&d, z);
        if dp.norm() == 0.0 {
            break;
        }
        let step = p / dp;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        z -= step;
        if step.norm() <= f64::EPSILON * (1.0 + z.norm()) {
            break;
        }
    }
    let tolerance = 1e-3 * (1.0 + start.norm());
    if (z - start).norm() <= tolerance {
        z
    } else {
        start
    }
}

fn relative_residual(coeffs: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    let scale = coeffs.iter().rev().fold(0.0, |acc: f64, c| acc * r + c.norm());
    let (p, _) = horner(coeffs, z);
    if scale == 0.0 {
        0.0
    } else {
        p.norm() / scale
    }
}

/// Returns (roots, iterations, converged). `coeffs` has a nonzero constant term.
fn aberth(coeffs: &[Complex64]) -> (Vec<Complex64>, usize, bool) {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    if n == 1 {
        return (vec![-coeffs[0] / lead], 0, true);
    }
    // Cauchy bound on the root moduli sets the initial circle.
    let radius = 1.0 + coeffs[..n].iter().map(|c| (c / lead).norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();

    let eps = 4.0 * f64::EPSILON;
    for iter in 1..=MAX_ITERATIONS {
        let mut done = true;
        for i in 0..n {
            let (p, dp) = horner(coeffs, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = z[i] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                continue;
            }
            z[i] -= step;
            if step.norm() > eps * (1.0 + z[i].norm()) {
                done = false;
            }
        }
        if done {
            return (z, iter, true);
        }
    }
    (z, MAX_ITERATIONS, false)
}

/// Merge approximations of a multiple root. The radius grows as
/// `tol^(1/(m+1))` with the current multiplicity guess `m`, capped.
fn cluster(values: Vec<Complex64>, tol: f64, iterations: usize, max_residual: f64) -> ComplexRootSet {
    let cap = 1e-2;
    let mut assigned = vec![usize::MAX; values.len()];
    let mut clusters = Vec::new();
    for i in 0..values.len() {
        if assigned[i] != usize::MAX {
            continue;
        }
        let mut members = vec![i];
        let mut center = values[i];
        loop {
            let m = members.len();
            let radius = tol.powf(1.0 / (m as f64 + 1.0)).min(cap) * (1.0 + center.norm());
            let found: Vec<usize> = (0..values.len())
                .filter(|&j| assigned[j] == usize::MAX && (values[j] - center).norm() <= radius)
                .collect();
            if found.len() <= m {
                break;
            }
            center = found.iter().map(|&j| values[j]).sum::<Complex64>() / found.len() as f64;
            members = found;
        }
        for &j in &members {
            assigned[j] = clusters.len();
        }
        clusters.push(RootCluster {
            center,
            multiplicity: members.len(),
        });
    }
    let roots = values
        .iter()
        .zip(&assigned)
        .map(|(z, &c)| ComplexRoot {
            re: z.re,
            im: z.im,
            cluster: c,
        })
        .collect();
    ComplexRootSet {
        roots,
        clusters,
        iterations,
        max_residual,
    }
}
