//! Replays the worked examples behind the library as a pass/fail table.
//! Mutants swap one primitive for a broken one; a healthy suite must notice.

use cdpoly::geometry::{
    bounds, companion_hull_membership, critical_points, gauss_lucas_spherical_check, in_snail, jensen_check,
    slice_project, Membership, SliceDirection, SnailSlice,
};
use cdpoly::poly::demote_central;
use cdpoly::roots::{
    candidate_classes, central_roots, complex_roots, is_spherical_root, real_pair_classes, spherical_classes,
    spherical_factorization, FinderOptions,
};
use cdpoly::{
    CDElement, CDParams, CDPolynomial, CdError, CentralPolynomial, Params, QuadraticClass, Rational, Result, Scalar,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mutant {
    /// Flip the sign of the gamma term in the doubling product.
    DoublingSign,
    /// Demote companion products without checking that they are central.
    SkipCentrality,
}

/// The primitives a mutant may replace.
struct Arith {
    mutant: Option<Mutant>,
}

fn conj_slice(x: &[Rational]) -> Vec<Rational> {
    if x.len() == 1 {
        return x.to_vec();
    }
    let h = x.len() / 2;
    let mut out = conj_slice(&x[..h]);
    out.extend(x[h..].iter().map(|c| -c.clone()));
    out
}

/// `(a,b)(c,d) = (ac + sign * gamma * conj(d) b, da + b conj(c))` on coordinates.
fn doubling_product(x: &[Rational], y: &[Rational], gammas: &[Rational], sign: i64) -> Vec<Rational> {
    if x.len() == 1 {
        return vec![x[0].clone() * y[0].clone()];
    }
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let inner = &gammas[..gammas.len() - 1];
    let gamma = gammas[gammas.len() - 1].clone() * Rational::from_i64(sign);
    let ac = doubling_product(a, c, inner, sign);
    let db = doubling_product(&conj_slice(d), b, inner, sign);
    let da = doubling_product(d, a, inner, sign);
    let bc = doubling_product(b, &conj_slice(c), inner, sign);
    let mut out: Vec<Rational> = ac.into_iter().zip(db).map(|(p, q)| p + gamma.clone() * q).collect();
    out.extend(da.into_iter().zip(bc).map(|(p, q)| p + q));
    out
}

impl Arith {
    fn mul(&self, a: &CDElement<Rational>, b: &CDElement<Rational>) -> CDElement<Rational> {
        match self.mutant {
            Some(Mutant::DoublingSign) => {
                let coeffs = doubling_product(a.coeffs(), b.coeffs(), a.params().gammas(), -1);
                CDElement::new(a.params(), coeffs).expect("same algebra")
            }
            _ => a * b,
        }
    }

    fn demote(&self, p: &CDPolynomial<Rational>) -> Result<CentralPolynomial<Rational>> {
        match self.mutant {
            Some(Mutant::SkipCentrality) => Ok(CentralPolynomial::new(
                p.coeffs().iter().map(|c| c.coeffs()[0].clone()).collect(),
            )),
            _ => demote_central(p, 0.0),
        }
    }
}

type Outcome = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

fn e<S: Scalar>(p: &Params<S>, m: usize) -> CDElement<S> {
    CDElement::basis(p, m)
}

fn err(e: CdError) -> String {
    e.to_string()
}

fn sedenion_pair<S: Scalar>() -> (Params<S>, CDElement<S>, CDElement<S>) {
    let s = CDParams::main_sequence(4);
    let a = &e(&s, 1) + &e(&s, 10);
    let b = &e(&s, 7) + &e(&s, 12);
    (s, a, b)
}

fn quaternion_cubic() -> CDPolynomial<Rational> {
    let h = CDParams::main_sequence(2);
    CDPolynomial::linear_root(&e(&h, 1))
        .mul(&CDPolynomial::linear_root(&e(&h, 2)))
        .and_then(|f| f.mul(&CDPolynomial::linear_root(&e(&h, 3))))
        .expect("same algebra")
}

fn quaternions_from_gammas(_: &Arith) -> Outcome {
    let h = CDParams::<Rational>::gamma_form(vec![q(-1), q(-1)]).map_err(err)?;
    ensure!(
        *h == *CDParams::<Rational>::main_sequence(2),
        "(-1,-1) is not the main sequence at level 2"
    );
    let minus_one = CDElement::scalar(&h, q(-1));
    for m in 1..4 {
        ensure!(&e(&h, m) * &e(&h, m) == minus_one, "e_{m}^2 != -1");
    }
    ensure!(&e(&h, 1) * &e(&h, 2) == e(&h, 3), "ij != k");
    ensure!(&e(&h, 2) * &e(&h, 1) == -&e(&h, 3), "ji != -k");
    Ok(())
}

fn split_quaternions(_: &Arith) -> Outcome {
    let p = CDParams::<Rational>::gamma_form(vec![q(-1), q(1)]).map_err(err)?;
    ensure!(&e(&p, 2) * &e(&p, 2) == CDElement::one(&p), "e_2^2 != 1");
    let x = &e(&p, 1) + &e(&p, 2);
    ensure!(
        x.trace() == q(0) && x.norm() == q(0),
        "e_1 + e_2 should have trace = norm = 0"
    );
    ensure!((&x * &x).is_zero(), "e_1 + e_2 should be nilpotent");
    ensure!(
        matches!(x.inverse(0.0), Err(CdError::NotInvertible)),
        "e_1 + e_2 must not invert"
    );
    Ok(())
}

fn sedenion_zero_divisors(arith: &Arith) -> Outcome {
    let (s, a, b) = sedenion_pair::<Rational>();
    ensure!(arith.mul(&a, &b).is_zero(), "ab = {}", arith.mul(&a, &b));
    ensure!(a.norm() == q(2), "norm(a) = {}", a.norm());
    ensure!(
        arith.mul(&b, &b) == CDElement::scalar(&s, q(-2)),
        "b^2 = {}",
        arith.mul(&b, &b)
    );
    ensure!(
        b.char_poly() == QuadraticClass::new(q(0), q(2)),
        "p_b = {}",
        b.char_poly()
    );
    Ok(())
}

fn mu_form_conjugation(_: &Arith) -> Outcome {
    let p = CDParams::<Rational>::mu_form(q(3), vec![]).map_err(err)?;
    let x = CDElement::from_terms(&p, &[(1, q(5))]);
    ensure!(
        x.conj() == CDElement::from_terms(&p, &[(0, q(5)), (1, q(-5))]),
        "conj(5l) = {}",
        x.conj()
    );
    let y = CDElement::from_terms(&p, &[(0, q(2)), (1, q(7))]);
    ensure!(
        y.conj() == CDElement::from_terms(&p, &[(0, q(9)), (1, q(-7))]),
        "conj(2+7l) = {}",
        y.conj()
    );
    Ok(())
}

fn alternative_elements(_: &Arith) -> Outcome {
    for level in [3, 4] {
        let p = CDParams::<Rational>::main_sequence(level);
        for m in 0..p.dim() {
            ensure!(e(&p, m).is_alternative(0.0), "e_{m} at level {level}");
        }
        for k in 0..p.dim() / 2 {
            let x = CDElement::from_terms(&p, &[(2 * k, q(3)), (2 * k + 1, q(-2))]);
            ensure!(x.is_alternative(0.0), "pair {k} at level {level}");
        }
    }
    let s = CDParams::<Rational>::main_sequence(4);
    let dense = CDElement::from_terms(&s, &[(1, q(1)), (2, q(1)), (9, q(1))]);
    ensure!(!dense.is_alternative(0.0), "the sedenions should not be alternative");
    Ok(())
}

fn quadratic_equivalence(_: &Arith) -> Outcome {
    let (s, a, _) = sedenion_pair::<Rational>();
    ensure!(a.quadratically_equivalent(&a.conj(), 0.0).map_err(err)?, "a ~ conj(a)");
    ensure!(
        !a.quadratically_equivalent(&CDElement::zero(&s), 0.0).map_err(err)?,
        "a ~ 0"
    );
    let h = CDParams::<Rational>::main_sequence(2);
    let x = CDElement::from_terms(&h, &[(0, q(1)), (1, q(3)), (2, q(4))]);
    let y = CDElement::from_terms(&h, &[(0, q(1)), (3, q(5))]);
    ensure!(x.quadratically_equivalent(&y, 0.0).map_err(err)?, "1+3i+4j ~ 1+5k");
    ensure!(x.re().map_err(err)? == y.re().map_err(err)?, "real parts");
    ensure!(
        x.im().map_err(err)?.norm() == y.im().map_err(err)?.norm(),
        "imaginary lengths"
    );
    Ok(())
}

fn sedenion_linear(arith: &Arith) -> Outcome {
    let (_, a, b) = sedenion_pair::<Rational>();
    let f = CDPolynomial::monomial(a.clone(), 1);
    ensure!(f.eval(&b).map_err(err)?.is_zero(), "ax at b");
    let c = arith.demote(&f.conj().mul(&f).map_err(err)?).map_err(err)?;
    ensure!(c == CentralPolynomial::from_ints(&[0, 0, 2]), "C_f = {c}");
    let opts = FinderOptions::default();
    ensure!(central_roots(&f, &[q(0), q(1)], 0.0) == vec![q(0)], "central roots");
    let report = spherical_classes(&f, &opts).map_err(err)?;
    ensure!(report.classes.is_empty(), "classes {:?}", report.classes);
    ensure!(
        report.central_roots == vec![(q(0), 1)],
        "central {:?}",
        report.central_roots
    );
    let set = candidate_classes(&c, &opts).map_err(err)?;
    ensure!(
        set.classes.is_empty() && set.real_roots == vec![(q(0), 2)],
        "companion candidates"
    );
    Ok(())
}

fn sedenion_quadratic(arith: &Arith) -> Outcome {
    let (s, a, b) = sedenion_pair::<Rational>();
    let g = CDPolynomial::new(&s, vec![CDElement::scalar(&s, q(2)), a, CDElement::one(&s)]).map_err(err)?;
    ensure!(
        g.eval(&b).map_err(err)?.is_zero(),
        "g(b) = {}",
        g.eval(&b).map_err(err)?
    );
    let c = arith.demote(&g.conj().mul(&g).map_err(err)?).map_err(err)?;
    ensure!(c == CentralPolynomial::from_ints(&[4, 0, 6, 0, 1]), "C_g = {c}");
    ensure!(
        c.eval_element(&b) == CDElement::scalar(&s, q(-4)),
        "C_g(b) = {}",
        c.eval_element(&b)
    );
    let report = spherical_classes(&g, &FinderOptions::default()).map_err(err)?;
    ensure!(report.classes.is_empty(), "classes {:?}", report.classes);
    Ok(())
}

fn quaternion_cubic_expansion(_: &Arith) -> Outcome {
    let f = quaternion_cubic();
    let h = f.params().clone();
    let expected = CDPolynomial::from_int_rows(&h, &[&[1, 0, 0, 0], &[0, 1, -1, 1], &[0, -1, -1, -1], &[1, 0, 0, 0]])
        .map_err(err)?;
    ensure!(f == expected, "f = {f}");
    let d = CDPolynomial::from_int_rows(&h, &[&[0, 1, -1, 1], &[0, -2, -2, -2], &[3, 0, 0, 0]]).map_err(err)?;
    ensure!(f.derivative() == d, "f' = {}", f.derivative());
    ensure!(
        f.companion(0.0).map_err(err)? == CentralPolynomial::from_ints(&[1, 0, 1]).pow(3),
        "C_f"
    );
    let set = candidate_classes(&f.companion(0.0).map_err(err)?, &FinderOptions::default()).map_err(err)?;
    ensure!(
        set.classes == vec![(QuadraticClass::new(q(0), q(1)), 3)],
        "candidates {:?}",
        set.classes
    );
    // the candidate class carries a single root, k, so it is not spherical
    let report = spherical_classes(&f, &FinderOptions::default()).map_err(err)?;
    ensure!(report.classes.is_empty(), "classes {:?}", report.classes);
    ensure!(f.eval(&e(&h, 3)).map_err(err)?.is_zero(), "f(k) != 0");
    Ok(())
}

fn quaternion_cubic_radii(_: &Arith) -> Outcome {
    let f = quaternion_cubic();
    let opts = FinderOptions::default();
    let rho = cdpoly::geometry::rho_estimate(&f, &opts).map_err(err)?;
    ensure!((rho.value - 1.0).abs() <= 1e-9, "rho(f) = {}", rho.value);
    let cd = f.derivative().companion(0.0).map_err(err)?;
    ensure!(cd == CentralPolynomial::from_ints(&[3, -4, 12, 0, 9]), "C_f' = {cd}");
    let rho_d = cdpoly::geometry::rho_estimate(&f.derivative(), &opts).map_err(err)?;
    ensure!(rho_d.value > 1.0 + 1e-6, "rho(f') = {}", rho_d.value);
    // only the outer pair of companion roots leaves the unit disk
    let moduli: Vec<f64> = complex_roots(&cd, 1e-12)
        .map_err(err)?
        .values()
        .iter()
        .map(|z| z.norm())
        .collect();
    ensure!(moduli.iter().filter(|&&m| m > 1.0).count() == 2, "moduli {moduli:?}");
    Ok(())
}

fn divide_cubed_circle(_: &Arith) -> Outcome {
    let h = CDParams::<Rational>::main_sequence(2);
    let f = CDPolynomial::from_central(&h, &CentralPolynomial::from_ints(&[1, 0, 1]).pow(3));
    let cls = QuadraticClass::new(q(0), q(1));
    let (g, a, b) = f.divrem_quadratic(&cls);
    ensure!(a.is_zero() && b.is_zero(), "remainder {a} x + {b}");
    ensure!(
        g.mul_central(&CentralPolynomial::quadratic(&cls)) == f,
        "reconstruction"
    );
    ensure!(is_spherical_root(&f, &cls, 0.0).multiplicity == 3, "multiplicity");
    Ok(())
}

fn planted_spherical_root(_: &Arith) -> Outcome {
    let o = CDParams::<Rational>::main_sequence(3);
    let g = CDPolynomial::from_int_rows(
        &o,
        &[
            &[1, 0, 2, 0, -1, 0, 0, 3],
            &[0, 1, 1, 0, 0, 2, 0, 0],
            &[2, 0, 0, 1, 0, 0, 1, 0],
        ],
    )
    .map_err(err)?;
    let cls = QuadraticClass::new(q(1), q(3));
    let f = g.mul_central(&CentralPolynomial::quadratic(&cls));
    let report = spherical_classes(&f, &FinderOptions::default()).map_err(err)?;
    ensure!(
        report.classes.iter().any(|(c, m)| *c == cls && *m == 1),
        "classes {:?}",
        report.classes
    );
    ensure!(report.reconstruct() == f, "reconstruction");
    Ok(())
}

fn constant_times_central(_: &Arith) -> Outcome {
    let h = CDParams::<Rational>::main_sequence(2);
    let c = CDElement::from_ints(&h, &[1, 2, -1, 0]).map_err(err)?;
    let central = CentralPolynomial::from_ints(&[1, 0, 1]).mul(&CentralPolynomial::from_ints(&[5, -2, 1]));
    let f = CDPolynomial::constant(c.clone()).mul_central(&central);
    let fac = spherical_factorization(&f, &FinderOptions::default()).map_err(err)?;
    ensure!(
        fac.constant_times_central == Some(true),
        "{:?}",
        fac.constant_times_central
    );
    ensure!(fac.g == CDPolynomial::constant(c), "g = {}", fac.g);
    Ok(())
}

fn split_cubic(_: &Arith) -> Outcome {
    let p = CDParams::<Rational>::gamma_form(vec![q(-1), q(1)]).map_err(err)?;
    let f = CDPolynomial::from_central(&p, &CentralPolynomial::from_ints(&[0, -1, 0, 1]));
    let opts = FinderOptions::default();
    let report = spherical_classes(&f, &opts).map_err(err)?;
    let roots: Vec<Rational> = report.central_roots.iter().map(|(r, _)| r.clone()).collect();
    ensure!(roots == vec![q(-1), q(0), q(1)], "central roots {roots:?}");
    let classes = real_pair_classes(&f, &opts).map_err(err)?;
    ensure!(classes.len() == 3, "quadratic factors {classes:?}");
    for cls in &classes {
        ensure!(is_spherical_root(&f, cls, 0.0).spherical, "{cls} does not divide");
    }
    Ok(())
}

fn slice_of_ix2_plus_x(_: &Arith) -> Outcome {
    let h = CDParams::<f64>::main_sequence(2);
    let f = CDPolynomial::new(&h, vec![CDElement::zero(&h), CDElement::one(&h), e(&h, 1)]).map_err(err)?;
    let perp = SliceDirection::new(&e(&h, 2), 1e-12).map_err(err)?;
    let proj = slice_project(&f, &perp).map_err(err)?;
    ensure!(
        proj.coeffs[2].norm() == 0.0 && proj.coeffs[1] == cdpoly::Complex64::new(1.0, 0.0),
        "f_I = {:?}",
        proj.coeffs
    );
    let s = 0.5f64.sqrt();
    let tilted = SliceDirection::new(&CDElement::from_terms(&h, &[(1, s), (2, s)]), 1e-12).map_err(err)?;
    let slice = SnailSlice::build(&f, tilted, 1e-9).map_err(err)?;
    ensure!(slice.hull.len() == 2, "hull {:?}", slice.hull);
    let far = slice.hull.iter().map(|z| z.im).fold(f64::NEG_INFINITY, f64::max);
    ensure!(
        (far - 1.0 / s).abs() < 1e-9,
        "segment ends at {far}, expected {}",
        1.0 / s
    );
    // the snail is unbounded: the segment grows like 1/alpha
    for alpha in [1e-1f64, 1e-2, 1e-3] {
        let beta = (1.0 - alpha * alpha).sqrt();
        let dir = SliceDirection::new(&CDElement::from_terms(&h, &[(1, alpha), (2, beta)]), 1e-12).map_err(err)?;
        let slice = SnailSlice::build(&f, dir, 1e-9).map_err(err)?;
        let len = cdpoly::geometry::hull::diameter(&slice.hull);
        ensure!((len * alpha - 1.0).abs() < 1e-6, "alpha {alpha}: segment length {len}");
    }
    Ok(())
}

fn snail_membership(_: &Arith) -> Outcome {
    let h = CDParams::<f64>::main_sequence(2);
    let i = e(&h, 1);
    let sq = CDPolynomial::linear_root(&i)
        .mul(&CDPolynomial::linear_root(&i))
        .map_err(err)?;
    let f = CDPolynomial::from_central(&h, &CentralPolynomial::from_ints(&[-1, 0, 1]))
        .mul(&sq)
        .and_then(|p| p.add(&CDPolynomial::constant(e(&h, 2))))
        .map_err(err)?;
    ensure!(f.derivative().eval(&i).map_err(err)?.is_negligible(1e-12), "f'(i) != 0");
    let m = in_snail(&f, &i, 1e-7).map_err(err)?;
    ensure!(m.verdict == Membership::Boundary, "i: {:?}", m.verdict);
    let g = CDPolynomial::new(&h, vec![CDElement::zero(&h), CDElement::one(&h), i.clone()]).map_err(err)?;
    ensure!(
        in_snail(&g, &(-&i), 1e-7).map_err(err)?.verdict == Membership::Outside,
        "-i"
    );
    ensure!(
        in_snail(&g, &i.scale(&0.5), 1e-7).map_err(err)?.verdict == Membership::Inside,
        "i/2"
    );
    Ok(())
}

fn root_bounds(_: &Arith) -> Outcome {
    let b = bounds(&quaternion_cubic(), 0.0).map_err(err)?;
    ensure!((b.r3 - (1.0 + 2.0 * 3f64.sqrt())).abs() < 1e-12, "R3 = {}", b.r3);
    let h = CDParams::<Rational>::main_sequence(2);
    let b = bounds(&CDPolynomial::monomial(CDElement::one(&h), 4), 0.0).map_err(err)?;
    ensure!((b.r1, b.r2, b.r3) == (1.0, 1.0, 1.0), "x^4: {b:?}");
    let (s, a, _) = sedenion_pair::<Rational>();
    let f = CDPolynomial::new(&s, vec![CDElement::zero(&s), CDElement::one(&s), a]).map_err(err)?;
    ensure!(
        matches!(bounds(&f, 0.0), Err(CdError::NonMonicHighLevel)),
        "non-monic sedenion bounds accepted"
    );
    Ok(())
}

fn octonion_quadratic_critical_point(_: &Arith) -> Outcome {
    let o = CDParams::<f64>::main_sequence(3);
    let el = |c: [f64; 8]| CDElement::new(&o, c.to_vec()).expect("length 8");
    let a = el([0.3, -1.0, 0.5, 0.0, 0.2, 0.7, -0.4, 0.1]);
    let b = el([-0.6, 0.2, 0.0, 1.1, -0.3, 0.0, 0.5, 0.9]);
    let c = el([1.0, 0.5, -0.5, 0.25, 0.0, -1.0, 0.3, 0.2]);
    let f = CDPolynomial::linear_root(&a)
        .scale(&c)
        .and_then(|p| p.mul(&CDPolynomial::linear_root(&b)))
        .map_err(err)?;
    let mid = (&a + &b).scale(&0.5);
    ensure!(
        f.derivative().eval(&mid).map_err(err)?.is_negligible(1e-12),
        "f'((a+b)/2) != 0"
    );
    let cp = critical_points(&f, &FinderOptions::default())
        .map_err(err)?
        .representatives();
    ensure!(cp.len() == 1 && cp[0].approx_eq(&mid, 1e-9), "critical points {cp:?}");
    let m = companion_hull_membership(&f, &mid, &FinderOptions::default()).map_err(err)?;
    ensure!(m.is_member(), "(a+b)/2 {m:?}");
    Ok(())
}

fn sedenion_gauss_lucas_failure(_: &Arith) -> Outcome {
    let (_, a, b) = sedenion_pair::<f64>();
    let f = CDPolynomial::monomial(a, 2);
    ensure!(
        f.companion(0.0).map_err(err)? == CentralPolynomial::new(vec![0.0, 0.0, 0.0, 0.0, 2.0]),
        "C_f != 2x^4"
    );
    for t in [1.0, -2.5] {
        let r = b.scale(&t);
        ensure!(f.derivative().eval(&r).map_err(err)?.is_zero(), "f'({t} b) != 0");
        let m = companion_hull_membership(&f, &r, &FinderOptions::default()).map_err(err)?;
        ensure!(m == Membership::Outside, "{t} b: {m:?}");
    }
    Ok(())
}

fn jensen_example(_: &Arith) -> Outcome {
    let o = CDParams::<f64>::main_sequence(3);
    let f = CDPolynomial::from_central(&o, &CentralPolynomial::from_ints(&[-1, 1, -1, 1]));
    let report = jensen_check(&f, &FinderOptions::default()).map_err(err)?;
    ensure!(report.passed(), "{report:?}");
    let cls = &report.classes.first().ok_or("no critical class")?.class;
    ensure!(
        cls.approx_eq(&QuadraticClass::new(2.0 / 3.0, 1.0 / 3.0), 1e-12),
        "critical class {cls}"
    );
    Ok(())
}

fn gauss_lucas_planted(_: &Arith) -> Outcome {
    // f' = 4 (x^2 + 1)(x - 1 + e_5) over the octonions
    let o = CDParams::<f64>::main_sequence(3);
    let lin = CDPolynomial::linear_root(&CDElement::from_terms(&o, &[(0, 1.0), (5, -1.0)])).scale_scalar(&4.0);
    let d = lin.mul_central(&CentralPolynomial::from_ints(&[1, 0, 1]));
    let mut coeffs = vec![CDElement::from_terms(&o, &[(0, 0.5), (3, 1.0)])];
    coeffs.extend(
        d.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c.scale(&(1.0 / (k as f64 + 1.0)))),
    );
    let f = CDPolynomial::new(&o, coeffs).map_err(err)?;
    let report = gauss_lucas_spherical_check(&f, &FinderOptions::default()).map_err(err)?;
    ensure!(report.classes.len() == 1 && report.passed(), "{:?}", report.classes);
    for lambda in critical_points(&f, &FinderOptions::default())
        .map_err(err)?
        .representatives()
    {
        ensure!(
            in_snail(&f, &lambda, 1e-7).map_err(err)?.verdict.is_member(),
            "{lambda} outside the snail"
        );
    }
    Ok(())
}

fn centrality_is_checked(arith: &Arith) -> Outcome {
    let h = CDParams::<Rational>::main_sequence(2);
    let f = CDPolynomial::linear_root(&e(&h, 1));
    let square = f.mul(&f).map_err(err)?;
    match arith.demote(&square) {
        Err(CdError::NonCentralResult { .. }) => Ok(()),
        other => Err(format!("demoting (x - i)^2 gave {other:?}")),
    }
}

fn leibniz(_: &Arith) -> Outcome {
    let o = CDParams::<Rational>::main_sequence(3);
    let f = CDPolynomial::from_int_rows(&o, &[&[1, 0, 2, 0, 0, 0, 1, 0], &[0, 3, 0, 0, 1, 0, 0, -1]]).map_err(err)?;
    let g = CDPolynomial::from_int_rows(
        &o,
        &[
            &[0, 1, 0, 0, 0, 2, 0, 0],
            &[1, 0, 0, -1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 1],
        ],
    )
    .map_err(err)?;
    let lhs = f.mul(&g).map_err(err)?.derivative();
    let rhs = f
        .derivative()
        .mul(&g)
        .and_then(|p| p.add(&f.mul(&g.derivative())?))
        .map_err(err)?;
    ensure!(lhs == rhs, "(fg)' = {lhs}, f'g + fg' = {rhs}");
    Ok(())
}

type Case = (&'static str, fn(&Arith) -> Outcome);

const CASES: &[Case] = &[
    ("quaternions as (-1,-1)", quaternions_from_gammas),
    ("split quaternions: nilpotent e1+e2", split_quaternions),
    ("sedenion zero divisors", sedenion_zero_divisors),
    ("mu-form conjugation", mu_form_conjugation),
    ("alternative elements", alternative_elements),
    ("quadratic equivalence", quadratic_equivalence),
    ("sedenion ax: root b, companion 2x^2", sedenion_linear),
    ("sedenion x^2+ax+2: g(b)=0, C_g(b)=-4", sedenion_quadratic),
    ("quaternion cubic: expansion and companion", quaternion_cubic_expansion),
    ("quaternion cubic: rho(f)=1 < rho(f')", quaternion_cubic_radii),
    ("(x^2+1)^3 divides by its class", divide_cubed_circle),
    ("planted octonion spherical root", planted_spherical_root),
    ("k classes in degree 2k: constant times central", constant_times_central),
    ("split quaternion cubic factorizations", split_cubic),
    ("slices of ix^2+x", slice_of_ix2_plus_x),
    ("snail boundary and exterior points", snail_membership),
    ("root bounds", root_bounds),
    ("octonion quadratic critical point", octonion_quadratic_critical_point),
    ("sedenion critical points escape the hull", sedenion_gauss_lucas_failure),
    ("Jensen sphere of (x^2+1)(x-1)", jensen_example),
    ("planted spherical critical class", gauss_lucas_planted),
    ("companion centrality check", centrality_is_checked),
    ("Leibniz rule", leibniz),
];

pub struct CaseResult {
    pub name: &'static str,
    pub outcome: Outcome,
}

pub fn run_suite(mutant: Option<Mutant>) -> Vec<CaseResult> {
    let arith = Arith { mutant };
    CASES
        .iter()
        .map(|(name, case)| CaseResult {
            name,
            outcome: case(&arith),
        })
        .collect()
}

pub fn render(results: &[CaseResult]) -> String {
    let mut out = String::new();
    for r in results {
        match &r.outcome {
            Ok(()) => out.push_str(&format!("PASS  {}\n", r.name)),
            Err(why) => out.push_str(&format!("FAIL  {}: {why}\n", r.name)),
        }
    }
    let passed = results.iter().filter(|r| r.outcome.is_ok()).count();
    out.push_str(&format!("{passed}/{} passed\n", results.len()));
    out
}
