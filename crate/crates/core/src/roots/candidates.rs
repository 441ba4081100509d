//! Quadratic classes and real root candidates read off a central polynomial.

use std::cmp::Ordering;

use crate::algebra::QuadraticClass;
use crate::error::Result;
use crate::poly::CentralPolynomial;
use crate::roots::solver::{complex_roots, ComplexRootSet};
use crate::roots::FinderOptions;
use crate::scalar::Scalar;

/// Output of [`candidate_classes`].
#[derive(Clone, Debug)]
pub struct CandidateSet<S> {
    /// Non-real conjugate pairs `z, conj(z)` as `(2 Re z, |z|^2)`, with their
    /// multiplicity as a factor of the input.
    pub classes: Vec<(QuadraticClass<S>, usize)>,
    /// Real roots with multiplicity.
    pub real_roots: Vec<(S, usize)>,
    /// Raw solver output the candidates were built from.
    pub roots: ComplexRootSet,
}

/// Pair the complex roots of `c` into quadratic classes. For exact backends
/// the squarefree part is solved and every candidate is rationalized with the
/// configured denominator bound.
pub fn candidate_classes<S: Scalar>(c: &CentralPolynomial<S>, opts: &FinderOptions) -> Result<CandidateSet<S>> {
    let solve_for = if S::EXACT { c.squarefree_part() } else { c.clone() };
    let roots = complex_roots(&solve_for, opts.tol)?;

    let mut classes: Vec<(QuadraticClass<S>, usize)> = Vec::new();
    let mut real_roots: Vec<(S, usize)> = Vec::new();
    for cluster in &roots.clusters {
        let z = cluster.center;
        let real_band = if S::EXACT { opts.tol } else { opts.tol.sqrt() } * (1.0 + z.norm());
        if z.im.abs() <= real_band {
            let r = S::from_f64_approx(z.re, opts.max_denominator);
            if real_roots.iter().any(|(x, _)| x.approx_eq(&r, opts.tol)) {
                continue;
            }
            let m = if S::EXACT {
                linear_multiplicity(c, &r)
            } else {
                cluster.multiplicity
            };
            real_roots.push((r, m));
        } else if z.im > 0.0 {
            let class = QuadraticClass::new(
                S::from_f64_approx(2.0 * z.re, opts.max_denominator),
                S::from_f64_approx(z.norm_sqr(), opts.max_denominator),
            );
            if classes.iter().any(|(q, _)| q.approx_eq(&class, opts.tol)) {
                continue;
            }
            let m = if S::EXACT {
                c.quadratic_multiplicity(&class, opts.tol)
            } else {
                cluster.multiplicity
            };
            classes.push((class, m));
        }
    }
    classes.sort_by(|a, b| class_order(&a.0, &b.0));
    real_roots.sort_by(|a, b| a.0.to_f64().partial_cmp(&b.0.to_f64()).unwrap_or(Ordering::Equal));
    Ok(CandidateSet {
        classes,
        real_roots,
        roots,
    })
}

/// Deflation order: increasing `|N|`, then `|T|`, then `T`, then `N`.
pub fn class_order<S: Scalar>(a: &QuadraticClass<S>, b: &QuadraticClass<S>) -> Ordering {
    let key = |q: &QuadraticClass<S>| (q.norm.abs_f64(), q.trace.abs_f64(), q.trace.to_f64(), q.norm.to_f64());
    key(a).partial_cmp(&key(b)).unwrap_or(Ordering::Equal)
}

fn linear_multiplicity<S: Scalar>(c: &CentralPolynomial<S>, r: &S) -> usize {
    let divisor = CentralPolynomial::new(vec![-r.clone(), S::one()]);
    let mut current = c.clone();
    let mut m = 0;
    while current.degree().unwrap_or(0) >= 1 {
        let (quot, rem) = current.divrem(&divisor);
        if !rem.is_zero() {
            break;
        }
        current = quot;
        m += 1;
    }
    m
}
