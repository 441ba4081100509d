#![allow(dead_code)]

use cdpoly::{CDElement, CDPolynomial, Params, Rational, Scalar};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

pub fn qr(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int_element(p: &Params<Rational>, rng: &mut impl Rng, bound: i64) -> CDElement<Rational> {
    let coeffs = (0..p.dim()).map(|_| q(rng.gen_range(-bound..=bound))).collect();
    CDElement::new(p, coeffs).unwrap()
}

pub fn nonzero_int_element(p: &Params<Rational>, rng: &mut impl Rng, bound: i64) -> CDElement<Rational> {
    loop {
        let x = int_element(p, rng, bound);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn float_element(p: &Params<f64>, rng: &mut impl Rng) -> CDElement<f64> {
    let coeffs = (0..p.dim()).map(|_| rng.gen_range(-1.0..1.0)).collect();
    CDElement::new(p, coeffs).unwrap()
}

/// Random polynomial of exactly `degree` with a nonzero leading coefficient.
pub fn int_poly(p: &Params<Rational>, degree: usize, rng: &mut impl Rng, bound: i64) -> CDPolynomial<Rational> {
    let mut coeffs: Vec<_> = (0..degree).map(|_| int_element(p, rng, bound)).collect();
    coeffs.push(nonzero_int_element(p, rng, bound));
    CDPolynomial::new(p, coeffs).unwrap()
}

pub fn monic_float_poly(p: &Params<f64>, degree: usize, rng: &mut impl Rng) -> CDPolynomial<f64> {
    let mut coeffs: Vec<_> = (0..degree).map(|_| float_element(p, rng)).collect();
    coeffs.push(CDElement::one(p));
    CDPolynomial::new(p, coeffs).unwrap()
}

/// Real-coefficient polynomial with leading coefficient of modulus at least 1/2.
pub fn real_float_poly(p: &Params<f64>, degree: usize, rng: &mut impl Rng) -> CDPolynomial<f64> {
    let mut coeffs: Vec<_> = (0..degree)
        .map(|_| CDElement::scalar(p, rng.gen_range(-2.0..2.0)))
        .collect();
    let lead: f64 = rng.gen_range(0.5..2.0);
    coeffs.push(CDElement::scalar(p, if rng.gen_bool(0.5) { lead } else { -lead }));
    CDPolynomial::new(p, coeffs).unwrap()
}

/// `F` with `F' = d` and the given constant term.
pub fn antiderivative(d: &CDPolynomial<f64>, constant: CDElement<f64>) -> CDPolynomial<f64> {
    let mut coeffs = vec![constant];
    for (k, c) in d.coeffs().iter().enumerate() {
        coeffs.push(c.scale(&(1.0 / (k as f64 + 1.0))));
    }
    CDPolynomial::new(d.params(), coeffs).unwrap()
}
