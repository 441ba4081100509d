//! Subcommand bodies. Each returns the JSON document printed on stdout.

use cdpoly::geometry::{self, Membership};
use cdpoly::roots::{candidate_classes, spherical_classes_with, FinderOptions};
use cdpoly::{CDPolynomial, CdError, Complex64, QuadraticClass, Scalar};
use serde_json::{json, Value};

use crate::doc::{
    element_values, scalar_value, AnyElement, AnyPoly, CandidatesDocument, ElementDocument, PolynomialDocument,
};
use crate::error::CliResult;
use crate::with_poly;

fn point(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn class_json<S: Scalar>(q: &QuadraticClass<S>) -> Value {
    json!({"trace": scalar_value(&q.trace), "norm": scalar_value(&q.norm)})
}

fn membership(m: Membership) -> &'static str {
    match m {
        Membership::Inside => "inside",
        Membership::Boundary => "boundary",
        Membership::Outside => "outside",
    }
}

fn poly_json<S: Scalar>(f: &CDPolynomial<S>) -> Value {
    json!(f.coeffs().iter().map(element_values).collect::<Vec<_>>())
}

pub fn eval(poly: &PolynomialDocument, at: &ElementDocument, companion: bool, tol: f64) -> CliResult<Value> {
    if poly.scalar != at.scalar {
        return Err(CdError::ParamsMismatch.into());
    }
    macro_rules! body {
        ($f:expr, $x:expr) => {{
            let mut out = json!({"value": element_values(&$f.eval(&$x)?)});
            if companion {
                let c = $f.companion(tol)?;
                out["companion"] = json!(c.coeffs().iter().map(scalar_value).collect::<Vec<_>>());
                out["companion_value"] = json!(element_values(&c.eval_element(&$x)));
            }
            Ok(out)
        }};
    }
    match (poly.build()?, at.build()?) {
        (AnyPoly::Exact(f), AnyElement::Exact(x)) => body!(f, x),
        (AnyPoly::Float(f), AnyElement::Float(x)) => body!(f, x),
        _ => Err(CdError::ParamsMismatch.into()),
    }
}

fn spherical_in<S: Scalar>(
    f: &CDPolynomial<S>,
    candidates: Option<&CandidatesDocument>,
    opts: &FinderOptions,
) -> CliResult<Value> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(CdError::DegreeZero.into());
    }
    let companion = f.companion(opts.tol)?;
    let (classes, reals, listed) = match candidates {
        Some(doc) => {
            let classes = doc.classes::<S>()?;
            let listed = classes.iter().map(class_json).collect::<Vec<_>>();
            (classes, doc.central::<S>()?, listed)
        }
        None => {
            let set = candidate_classes(&companion, opts)?;
            let listed = set
                .classes
                .iter()
                .map(|(q, m)| {
                    let mut v = class_json(q);
                    v["multiplicity"] = json!(m);
                    v
                })
                .collect();
            (
                set.classes.into_iter().map(|(q, _)| q).collect(),
                set.real_roots.into_iter().map(|(r, _)| r).collect(),
                listed,
            )
        }
    };
    let report = spherical_classes_with(f, &classes, &reals, opts)?;
    Ok(json!({
        "classes": report.classes.iter().map(|(q, m)| {
            let mut v = class_json(q);
            v["multiplicity"] = json!(m);
            v
        }).collect::<Vec<_>>(),
        "central_roots": report.central_roots.iter().map(|(r, m)| json!({"value": scalar_value(r), "multiplicity": m})).collect::<Vec<_>>(),
        "deflated": poly_json(&report.deflated),
        "core": poly_json(&report.core),
        "companion": companion.coeffs().iter().map(scalar_value).collect::<Vec<_>>(),
        "candidates": listed,
    }))
}

pub fn spherical(
    poly: &PolynomialDocument,
    candidates: Option<&CandidatesDocument>,
    opts: &FinderOptions,
) -> CliResult<Value> {
    with_poly!(poly.build()?, f => spherical_in(&f, candidates, opts))
}

pub fn bounds(poly: &PolynomialDocument, tol: f64) -> CliResult<Value> {
    let b = with_poly!(poly.build()?, f => geometry::bounds(&f, tol))?;
    Ok(json!({
        "r1": b.r1,
        "r2": b.r2,
        "r3": b.r3,
        "monic": b.monic,
        "strict": {"r1": true, "r2": true, "r3": false},
    }))
}

pub fn rho(poly: &PolynomialDocument, opts: &FinderOptions) -> CliResult<Value> {
    let r = with_poly!(poly.build()?, f => geometry::rho_estimate(&f, opts))?;
    Ok(json!({"rho": r.value, "partial": r.partial}))
}

pub fn glucas(poly: &PolynomialDocument, opts: &FinderOptions) -> CliResult<Value> {
    let report = with_poly!(poly.build()?, f => geometry::gauss_lucas_spherical_check(&f, opts))?;
    Ok(json!({
        "companion_roots": report.companion_roots.iter().copied().map(point).collect::<Vec<_>>(),
        "hull": report.hull.iter().copied().map(point).collect::<Vec<_>>(),
        "classes": report.classes.iter().map(|c| json!({
            "trace": c.class.trace,
            "norm": c.class.norm,
            "point": point(c.point),
            "verdict": membership(c.verdict),
        })).collect::<Vec<_>>(),
        "passed": report.passed(),
    }))
}

pub fn jensen(poly: &PolynomialDocument, companion: bool, opts: &FinderOptions) -> CliResult<Value> {
    let report = if companion {
        with_poly!(poly.build()?, f => geometry::jensen_companion_check(&f, opts))?
    } else {
        with_poly!(poly.build()?, f => geometry::jensen_check(&f, opts))?
    };
    Ok(json!({
        "spheres": report.spheres.iter().map(|s| json!({"center": s.center, "radius": s.radius})).collect::<Vec<_>>(),
        "classes": report.classes.iter().map(|c| json!({
            "trace": c.class.trace,
            "norm": c.class.norm,
            "sphere": c.sphere,
        })).collect::<Vec<_>>(),
        "passed": report.passed(),
    }))
}
