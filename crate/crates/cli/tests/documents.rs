use cdpoly::{CDElement, CDParams, CDPolynomial, Rational, Scalar};
use cdpoly_cli::doc::{AnyPoly, ElementDocument, PolynomialDocument};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..50).prop_map(|(n, d)| Rational::from_i64(n) / Rational::from_i64(d))
}

proptest! {
    #[test]
    fn exact_polynomials_round_trip(level in 1usize..4, degree in 0usize..4, seed in proptest::collection::vec(rational(), 64)) {
        let p = CDParams::<Rational>::main_sequence(level);
        let dim = p.dim();
        let coeffs: Vec<CDElement<Rational>> = (0..=degree)
            .map(|k| {
                let mut c: Vec<Rational> = (0..dim).map(|m| seed[(k * dim + m) % seed.len()].clone()).collect();
                if k == degree && c.iter().all(|x| x == &Rational::from_i64(0)) {
                    c[0] = Rational::from_i64(1);
                }
                CDElement::new(&p, c).unwrap()
            })
            .collect();
        let f = CDPolynomial::new(&p, coeffs).unwrap();
        let doc = PolynomialDocument::from_poly(&f);
        let parsed = PolynomialDocument::parse(&doc.to_json()).unwrap();
        prop_assert_eq!(&parsed, &doc);
        match parsed.build().unwrap() {
            AnyPoly::Exact(g) => prop_assert_eq!(g, f),
            AnyPoly::Float(_) => prop_assert!(false, "scalar mode changed"),
        }
    }

    #[test]
    fn float_elements_round_trip(coords in proptest::collection::vec(-1e6f64..1e6, 8)) {
        let p = CDParams::<f64>::gamma_form(vec![-1.0, 2.0, -0.5]).unwrap();
        let x = CDElement::new(&p, coords).unwrap();
        let doc = ElementDocument::from_element(&x);
        let text = serde_json::to_string(&doc).unwrap();
        let parsed: ElementDocument = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&parsed, &doc);
        match parsed.build().unwrap() {
            cdpoly_cli::doc::AnyElement::Float(y) => prop_assert_eq!(y, x),
            cdpoly_cli::doc::AnyElement::Exact(_) => prop_assert!(false, "scalar mode changed"),
        }
    }
}
