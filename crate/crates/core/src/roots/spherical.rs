use crate::algebra::{CDElement, QuadraticClass};
use crate::error::{CdError, Result};
use crate::poly::{CDPolynomial, CentralPolynomial};
use crate::roots::candidates::{candidate_classes, class_order};
use crate::roots::FinderOptions;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SphericalVerdict {
    pub spherical: bool,
    pub multiplicity: usize,
}

/// Spherical classes of `f`, its central roots, and what is left after
/// dividing the spherical factors out.
#[derive(Clone, Debug)]
pub struct SphericalReport<S> {
    /// Classes in deflation order with the exponent of `x^2 - T x + N` in `f`.
    pub classes: Vec<(QuadraticClass<S>, usize)>,
    /// Central roots with the exponent of `x - r` in `f`.
    pub central_roots: Vec<(S, usize)>,
    /// `f = deflated * prod p_class^multiplicity`.
    pub deflated: CDPolynomial<S>,
    /// `deflated` with the confirmed central linear factors also removed.
    pub core: CDPolynomial<S>,
    pub companion: CentralPolynomial<S>,
}

impl<S: Scalar> SphericalReport<S> {
    /// `prod p_class^multiplicity` as a central polynomial.
    pub fn spherical_factor(&self) -> CentralPolynomial<S> {
        self.classes
            .iter()
            .fold(CentralPolynomial::new(vec![S::one()]), |acc, (q, m)| {
                acc.mul(&CentralPolynomial::quadratic(q).pow(*m))
            })
    }

    /// `deflated * prod p_class^multiplicity`.
    pub fn reconstruct(&self) -> CDPolynomial<S> {
        self.deflated.mul_central(&self.spherical_factor())
    }
}

/// Largest coordinate of an element in absolute value.
fn max_coord<S: Scalar>(a: &CDElement<S>) -> f64 {
    a.coeffs().iter().map(Scalar::abs_f64).fold(0.0, f64::max)
}

/// `sum_k |a_k| r^k` with coordinate maxima standing in for `|a_k|`.
fn poly_scale<S: Scalar>(f: &CDPolynomial<S>, r: f64) -> f64 {
    f.coeffs().iter().rev().fold(0.0, |acc, c| acc * r + max_coord(c))
}

fn remainder_negligible<S: Scalar>(
    f: &CDPolynomial<S>,
    a: &CDElement<S>,
    b: &CDElement<S>,
    q: &QuadraticClass<S>,
    tol: f64,
) -> bool {
    if S::EXACT {
        return a.is_zero() && b.is_zero();
    }
    let r = q.norm.abs_f64().sqrt().max(1.0);
    max_coord(a) * r + max_coord(b) <= tol * poly_scale(f, r)
}

/// Divide by `x^2 - T x + N` while the remainder vanishes.
pub fn is_spherical_root<S: Scalar>(f: &CDPolynomial<S>, q: &QuadraticClass<S>, tol: f64) -> SphericalVerdict {
    let mut current = f.clone();
    let mut multiplicity = 0;
    while current.degree().is_some_and(|d| d >= 2) {
        let (g, a, b) = current.divrem_quadratic(q);
        if !remainder_negligible(&current, &a, &b, q, tol) {
            break;
        }
        current = g;
        multiplicity += 1;
    }
    SphericalVerdict {
        spherical: multiplicity > 0,
        multiplicity,
    }
}

fn remainder_vector(f: &CDPolynomial<f64>, t: f64, n: f64) -> Vec<f64> {
    let (_, a, b) = f.divrem_quadratic(&QuadraticClass::new(t, n));
    a.coeffs().iter().chain(b.coeffs()).copied().collect()
}

/// Gauss–Newton on `(T, N)` to drive the division remainder to zero.
fn refine_class(f: &CDPolynomial<f64>, q: &QuadraticClass<f64>) -> QuadraticClass<f64> {
    let (mut t, mut n) = (q.trace, q.norm);
    let mut res = remainder_vector(f, t, n);
    let mut size: f64 = res.iter().map(|x| x * x).sum();
    for _ in 0..40 {
        if size == 0.0 {
            break;
        }
        let ht = 1e-6 * (1.0 + t.abs());
        let hn = 1e-6 * (1.0 + n.abs());
        let dt: Vec<f64> = remainder_vector(f, t + ht, n)
            .iter()
            .zip(remainder_vector(f, t - ht, n))
            .map(|(p, m)| (p - m) / (2.0 * ht))
            .collect();
        let dn: Vec<f64> = remainder_vector(f, t, n + hn)
            .iter()
            .zip(remainder_vector(f, t, n - hn))
            .map(|(p, m)| (p - m) / (2.0 * hn))
            .collect();
        let dot = |u: &[f64], v: &[f64]| u.iter().zip(v).map(|(x, y)| x * y).sum::<f64>();
        let (a11, a12, a22) = (dot(&dt, &dt), dot(&dt, &dn), dot(&dn, &dn));
        let (g1, g2) = (dot(&dt, &res), dot(&dn, &res));
        let det = a11 * a22 - a12 * a12;
        if det.abs() <= 1e-300 || !det.is_finite() {
            break;
        }
        let step_t = (a22 * g1 - a12 * g2) / det;
        let step_n = (a11 * g2 - a12 * g1) / det;
        let (nt, nn) = (t - step_t, n - step_n);
        let nres = remainder_vector(f, nt, nn);
        let nsize: f64 = nres.iter().map(|x| x * x).sum();
        if !(nsize < size) {
            break;
        }
        t = nt;
        n = nn;
        res = nres;
        size = nsize;
    }
    QuadraticClass::new(t, n)
}

fn refine_generic<S: Scalar>(f: &CDPolynomial<S>, q: &QuadraticClass<S>, opts: &FinderOptions) -> QuadraticClass<S> {
    if S::EXACT {
        return q.clone();
    }
    let refined = refine_class(&f.to_f64(), &QuadraticClass::new(q.trace.to_f64(), q.norm.to_f64()));
    QuadraticClass::new(
        S::from_f64_approx(refined.trace, opts.max_denominator),
        S::from_f64_approx(refined.norm, opts.max_denominator),
    )
}

fn linear_deflate<S: Scalar>(f: &CDPolynomial<S>, r: &S) -> CDPolynomial<S> {
    // f = g (x - r) + f(r); only called once f(r) is known to vanish
    let n = f.coeffs().len();
    if n < 2 {
        return CDPolynomial::zero(f.params());
    }
    let mut quotient = vec![CDElement::zero(f.params()); n - 1];
    let mut carry = CDElement::zero(f.params());
    for k in (1..n).rev() {
        carry = &f.coeffs()[k] + &carry.scale(r);
        quotient[k - 1] = carry.clone();
    }
    CDPolynomial::new(f.params(), quotient).expect("same algebra")
}

fn scalar_root_negligible<S: Scalar>(f: &CDPolynomial<S>, r: &S, tol: f64) -> bool {
    let value = f.eval(&CDElement::scalar(f.params(), r.clone())).expect("same algebra");
    if S::EXACT {
        value.is_zero()
    } else {
        max_coord(&value) <= tol * poly_scale(f, r.abs_f64().max(1.0))
    }
}

/// Candidates `r` with `f(r * 1) = 0`.
pub fn central_roots<S: Scalar>(f: &CDPolynomial<S>, candidates: &[S], tol: f64) -> Vec<S> {
    let mut out: Vec<S> = Vec::new();
    for r in candidates {
        if out.iter().any(|x| x.approx_eq(r, tol)) {
            continue;
        }
        if scalar_root_negligible(f, r, tol) {
            out.push(r.clone());
        }
    }
    out
}

/// Companion roots, candidate classes, division test, deflation.
pub fn spherical_classes<S: Scalar>(f: &CDPolynomial<S>, opts: &FinderOptions) -> Result<SphericalReport<S>> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(CdError::DegreeZero);
    }
    let companion = f.companion(opts.tol)?;
    let candidates = candidate_classes(&companion, opts)?;
    let classes: Vec<QuadraticClass<S>> = candidates.classes.into_iter().map(|(q, _)| q).collect();
    let reals: Vec<S> = candidates.real_roots.into_iter().map(|(r, _)| r).collect();
    let mut report = spherical_classes_with(f, &classes, &reals, opts)?;
    report.companion = companion;
    Ok(report)
}

/// Same pipeline with caller-supplied candidates; nothing numeric happens
/// unless the backend is floating point.
pub fn spherical_classes_with<S: Scalar>(
    f: &CDPolynomial<S>,
    classes: &[QuadraticClass<S>],
    real_candidates: &[S],
    opts: &FinderOptions,
) -> Result<SphericalReport<S>> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(CdError::DegreeZero);
    }
    let mut ordered = classes.to_vec();
    ordered.sort_by(class_order);

    let mut deflated = f.clone();
    let mut found: Vec<(QuadraticClass<S>, usize)> = Vec::new();
    for candidate in ordered {
        if found.iter().any(|(q, _)| q.approx_eq(&candidate, opts.tol)) {
            continue;
        }
        let mut q = refine_generic(&deflated, &candidate, opts);
        let mut multiplicity = 0;
        while deflated.degree().is_some_and(|d| d >= 2) {
            let (g, a, b) = deflated.divrem_quadratic(&q);
            if !remainder_negligible(&deflated, &a, &b, &q, opts.tol) {
                break;
            }
            deflated = if S::EXACT { g } else { g.trimmed(0.0) };
            multiplicity += 1;
            if !S::EXACT && deflated.degree().is_some_and(|d| d >= 2) {
                let next = refine_generic(&deflated, &q, opts);
                let drift = opts.tol.sqrt() * (1.0 + q.norm.abs_f64() + q.trace.abs_f64());
                if next.approx_eq(&q, drift) {
                    q = next;
                }
            }
        }
        if multiplicity > 0 {
            found.push((q, multiplicity));
        }
    }

    let mut central = Vec::new();
    let mut core = deflated.clone();
    for r in central_roots(f, real_candidates, opts.tol) {
        let mut m = 0;
        while core.degree().is_some_and(|d| d >= 1) && scalar_root_negligible(&core, &r, opts.tol) {
            core = linear_deflate(&core, &r);
            m += 1;
        }
        central.push((r, m.max(1)));
    }

    Ok(SphericalReport {
        classes: found,
        central_roots: central,
        deflated,
        core,
        companion: CentralPolynomial::new(Vec::new()),
    })
}

/// Spherical factorization over a division algebra. The quotient `g` has
/// exactly the non-spherical roots of `f`.
#[derive(Clone, Debug)]
pub struct SphericalFactorization<S> {
    pub g: CDPolynomial<S>,
    pub classes: Vec<(QuadraticClass<S>, usize)>,
    /// For `deg f = 2k` with `k` distinct classes, whether `g` is a constant
    /// (so `f = c * central`). `None` when the hypothesis does not apply.
    pub constant_times_central: Option<bool>,
}

pub fn spherical_factorization<S: Scalar>(
    f: &CDPolynomial<S>,
    opts: &FinderOptions,
) -> Result<SphericalFactorization<S>> {
    if !f.params().is_division_algebra() {
        return Err(CdError::NotDivisionAlgebra);
    }
    let report = spherical_classes(f, opts)?;
    let degree = f.degree().unwrap_or(0);
    let constant_times_central =
        (degree % 2 == 0 && report.classes.len() == degree / 2).then(|| report.deflated.degree() == Some(0));
    Ok(SphericalFactorization {
        g: report.deflated,
        classes: report.classes,
        constant_times_central,
    })
}

/// Every root of a quaternion or octonion polynomial, grouped by kind.
#[derive(Clone, Debug)]
pub struct DivisionRoots<S> {
    pub spherical: Vec<(QuadraticClass<S>, usize)>,
    /// Non-spherical, non-central roots; one per remaining companion class.
    pub isolated: Vec<CDElement<S>>,
    pub central: Vec<S>,
}

/// Roots of `f` over a division algebra: within a companion class
/// `f(r) = a r + b`, so a non-spherical class holds at most `r = -a^{-1} b`.
pub fn division_algebra_roots<S: Scalar>(f: &CDPolynomial<S>, opts: &FinderOptions) -> Result<DivisionRoots<S>> {
    if !f.params().is_division_algebra() {
        return Err(CdError::NotDivisionAlgebra);
    }
    if f.degree().unwrap_or(0) == 0 {
        return Err(CdError::DegreeZero);
    }
    let companion = f.companion(opts.tol)?;
    let candidates = candidate_classes(&companion, opts)?;
    let classes: Vec<QuadraticClass<S>> = candidates.classes.iter().map(|(q, _)| q.clone()).collect();
    let reals: Vec<S> = candidates.real_roots.iter().map(|(r, _)| r.clone()).collect();
    let report = spherical_classes_with(f, &classes, &reals, opts)?;

    let loose = if S::EXACT { 0.0 } else { opts.tol.sqrt() };
    let mut isolated = Vec::new();
    for q in &classes {
        if report
            .classes
            .iter()
            .any(|(s, _)| s.approx_eq(q, loose * (1.0 + q.norm.abs_f64())))
        {
            continue;
        }
        let (_, a, b) = f.divrem_quadratic(q);
        let inv = match a.inverse(opts.tol * (1.0 + poly_scale(f, 1.0))) {
            Ok(inv) => inv,
            Err(_) => continue,
        };
        let r = -&(&inv * &b);
        let in_class = r.trace().approx_eq(&q.trace, loose * (1.0 + q.trace.abs_f64()))
            && r.norm().approx_eq(&q.norm, loose * (1.0 + q.norm.abs_f64()));
        if in_class {
            isolated.push(r);
        }
    }
    Ok(DivisionRoots {
        spherical: report.classes,
        isolated,
        central: report.central_roots.into_iter().map(|(r, _)| r).collect(),
    })
}

/// Quadratic factors `(x - r)(x - s)` with distinct real companion roots
/// `r != s`. Only split algebras can have these as spherical classes.
pub fn real_pair_classes<S: Scalar>(f: &CDPolynomial<S>, opts: &FinderOptions) -> Result<Vec<QuadraticClass<S>>> {
    let companion = f.companion(opts.tol)?;
    let reals: Vec<S> = candidate_classes(&companion, opts)?
        .real_roots
        .into_iter()
        .map(|(r, _)| r)
        .collect();
    let mut out = Vec::new();
    for (i, r) in reals.iter().enumerate() {
        for s in &reals[i + 1..] {
            let q = QuadraticClass::new(r.clone() + s.clone(), r.clone() * s.clone());
            if is_spherical_root(f, &q, opts.tol).spherical {
                out.push(q);
            }
        }
    }
    out.sort_by(class_order);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{CDParams, Params};
    use crate::scalar::Rational;

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn sedenions() -> (Params<Q>, CDElement<Q>, CDElement<Q>) {
        let s = CDParams::main_sequence(4);
        let a = CDElement::from_terms(&s, &[(1, q(1)), (10, q(1))]);
        let b = CDElement::from_terms(&s, &[(7, q(1)), (12, q(1))]);
        (s, a, b)
    }

    #[test]
    fn planted_class_is_spherical() {
        let h = CDParams::<Q>::main_sequence(2);
        let g = CDPolynomial::from_int_rows(&h, &[&[1, 2, 0, -1], &[0, 1, 1, 3]]).unwrap();
        let cls = QuadraticClass::new(q(2), q(5));
        let f = g.mul_central(&CentralPolynomial::quadratic(&cls));
        let v = is_spherical_root(&f, &cls, 0.0);
        assert_eq!(
            v,
            SphericalVerdict {
                spherical: true,
                multiplicity: 1
            }
        );
        let x2p1 = CDPolynomial::from_central(&h, &CentralPolynomial::from_ints(&[1, 0, 1]));
        assert_eq!(
            is_spherical_root(&x2p1, &QuadraticClass::new(q(0), q(1)), 0.0).multiplicity,
            1
        );
    }

    #[test]
    fn sedenion_root_escapes_detection() {
        let (s, a, b) = sedenions();
        let g = CDPolynomial::new(&s, vec![CDElement::scalar(&s, q(2)), a, CDElement::one(&s)]).unwrap();
        assert!(!is_spherical_root(&g, &QuadraticClass::new(q(0), q(2)), 0.0).spherical);
        let report = spherical_classes(&g, &FinderOptions::default()).unwrap();
        assert!(report.classes.is_empty());
        assert!(g.eval(&b).unwrap().is_zero());
    }

    #[test]
    fn sedenion_linear_central_root() {
        let (_, a, _) = sedenions();
        let f = CDPolynomial::monomial(a.clone(), 1);
        let report = spherical_classes(&f, &FinderOptions::default()).unwrap();
        assert!(report.classes.is_empty());
        assert_eq!(report.central_roots, vec![(q(0), 1)]);
        assert_eq!(report.deflated, f);
        assert_eq!(report.core, CDPolynomial::constant(a));
    }

    #[test]
    fn quaternion_mixed_factors() {
        let h = CDParams::<Q>::main_sequence(2);
        let f = CDPolynomial::from_central(
            &h,
            &CentralPolynomial::from_ints(&[1, 0, 1]).mul(&CentralPolynomial::from_ints(&[-1, 1])),
        );
        let report = spherical_classes(&f, &FinderOptions::default()).unwrap();
        assert_eq!(report.classes, vec![(QuadraticClass::new(q(0), q(1)), 1)]);
        assert_eq!(report.central_roots, vec![(q(1), 1)]);
        assert_eq!(
            report.deflated,
            CDPolynomial::from_int_rows(&h, &[&[-1, 0, 0, 0], &[1, 0, 0, 0]]).unwrap()
        );
        assert_eq!(report.reconstruct(), f);
    }

    #[test]
    fn central_root_filter() {
        let h = CDParams::<Q>::main_sequence(2);
        let f = CDPolynomial::from_int_rows(&h, &[&[-3, 0, 0, 0], &[1, 0, 0, 0]]).unwrap();
        assert_eq!(central_roots(&f, &[q(1), q(3), q(3)], 0.0), vec![q(3)]);
        let split = CDParams::<Q>::gamma_form(vec![q(-1), q(1)]).unwrap();
        let f = CDPolynomial::from_central(&split, &CentralPolynomial::from_ints(&[0, -1, 0, 1]));
        let report = spherical_classes(&f, &FinderOptions::default()).unwrap();
        let roots: Vec<Q> = report.central_roots.iter().map(|(r, _)| r.clone()).collect();
        assert_eq!(roots, vec![q(-1), q(0), q(1)]);
    }

    #[test]
    fn split_quaternion_triple_factorization() {
        let split = CDParams::<Q>::gamma_form(vec![q(-1), q(1)]).unwrap();
        let f = CDPolynomial::from_central(&split, &CentralPolynomial::from_ints(&[0, -1, 0, 1]));
        let classes = real_pair_classes(&f, &FinderOptions::default()).unwrap();
        assert_eq!(
            classes,
            vec![
                QuadraticClass::new(q(-1), q(0)),
                QuadraticClass::new(q(1), q(0)),
                QuadraticClass::new(q(0), q(-1)),
            ]
        );
    }

    #[test]
    fn factorization_over_quaternions() {
        let h = CDParams::<Q>::main_sequence(2);
        let i = CDElement::basis(&h, 1);
        let f = CDPolynomial::linear_root(&i).mul_central(&CentralPolynomial::from_ints(&[1, -1, 1]));
        let fac = spherical_factorization(&f, &FinderOptions::default()).unwrap();
        assert_eq!(fac.classes, vec![(QuadraticClass::new(q(1), q(1)), 1)]);
        assert_eq!(fac.g, CDPolynomial::linear_root(&i));
        assert!(fac.g.eval(&i).unwrap().is_zero());
        assert!(f.eval(&i).unwrap().is_zero());
        assert_eq!(fac.constant_times_central, None);

        let o = CDParams::<Q>::main_sequence(3);
        let f = CDPolynomial::from_central(&o, &CentralPolynomial::from_ints(&[1, 0, 1]).pow(2));
        let fac = spherical_factorization(&f, &FinderOptions::default()).unwrap();
        assert_eq!(fac.classes, vec![(QuadraticClass::new(q(0), q(1)), 2)]);
        assert_eq!(fac.g, CDPolynomial::constant(CDElement::one(&o)));

        let (s, a, _) = sedenions();
        let f = CDPolynomial::monomial(a, 1);
        assert!(matches!(
            spherical_factorization(&f, &FinderOptions::default()),
            Err(CdError::NotDivisionAlgebra)
        ));
        let _ = s;
    }

    #[test]
    fn two_classes_in_degree_four_means_constant_quotient() {
        let h = CDParams::<Q>::main_sequence(2);
        let c = CDElement::from_ints(&h, &[1, 2, -1, 0]).unwrap();
        let central = CentralPolynomial::from_ints(&[1, 0, 1]).mul(&CentralPolynomial::from_ints(&[5, -2, 1]));
        let f = CDPolynomial::constant(c.clone()).mul_central(&central);
        let fac = spherical_factorization(&f, &FinderOptions::default()).unwrap();
        assert_eq!(fac.classes.len(), 2);
        assert_eq!(fac.constant_times_central, Some(true));
        assert_eq!(fac.g, CDPolynomial::constant(c));
    }

    #[test]
    fn isolated_quaternion_roots() {
        let h = CDParams::<Q>::main_sequence(2);
        let e = |m| CDElement::<Q>::basis(&h, m);
        let f = CDPolynomial::linear_root(&e(1))
            .mul(&CDPolynomial::linear_root(&e(2)))
            .unwrap();
        let roots = division_algebra_roots(&f, &FinderOptions::default()).unwrap();
        assert!(roots.spherical.is_empty());
        assert_eq!(roots.isolated, vec![e(2)]);
        for r in &roots.isolated {
            assert!(f.eval(r).unwrap().is_zero());
        }
    }

    #[test]
    fn float_backend_detects_planted_class() {
        let o = CDParams::<f64>::main_sequence(3);
        let g = CDPolynomial::from_int_rows(&o, &[&[1, 2, 0, -1, 0, 0, 3, 1], &[2, 1, 1, 3, -1, 0, 0, 1]]).unwrap();
        let cls = QuadraticClass::new(0.5, 2.25);
        let f = g.mul_central(&CentralPolynomial::quadratic(&cls));
        let report = spherical_classes(&f, &FinderOptions::default()).unwrap();
        assert_eq!(report.classes.len(), 1);
        assert!(report.classes[0].0.approx_eq(&cls, 1e-10));
        assert!(report.deflated.sub(&g).unwrap().max_coordinate() < 1e-9);
    }
}
