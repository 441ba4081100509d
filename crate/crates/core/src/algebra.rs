//! Cayley–Dickson algebras of arbitrary level.
//!
//! An algebra `A_n` has dimension `2^n` and is built by repeated doubling
//! from either a quadratic étale base `F[l : l^2 = l + mu]` ([`Form::Mu`],
//! basis `l_m`) or from the ground field itself ([`Form::Gamma`], basis
//! `e_m`). Elements are dense coefficient vectors in that standard basis and
//! the product is evaluated recursively on halves:
//!
//! ```text
//! (a, b)(c, d) = (ac + gamma * conj(d) b,  d a + b conj(c))
//! conj((a, b)) = (conj(a), -b)
//! ```

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{CdError, Result};
use crate::scalar::Scalar;

/// Which base the doubling tower starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    /// `A_1 = F[l_1 : l_1^2 = l_1 + mu]`, parameters `[mu, gamma_1, ..., gamma_{n-1})`.
    Mu,
    /// `A_0 = F`, parameters `(gamma_0, ..., gamma_{n-1})`.
    Gamma,
}

/// Construction data for `A_n` over a scalar backend.
#[derive(Clone, Debug, PartialEq)]
pub struct CDParams<S> {
    form: Form,
    mu: Option<S>,
    gammas: Vec<S>,
    level: usize,
    nu: Vec<S>,
}

/// Shared handle to the construction data; elements keep one of these.
pub type Params<S> = Arc<CDParams<S>>;

/// Validate construction data and precompute the pair weights.
pub fn make_params<S: Scalar>(form: Form, mu: Option<S>, gammas: Vec<S>, level: usize) -> Result<Params<S>> {
    if level == 0 {
        return Err(CdError::BadLength { expected: 1, got: 0 });
    }
    let expected = match form {
        Form::Mu => level - 1,
        Form::Gamma => level,
    };
    if gammas.len() != expected {
        return Err(CdError::BadLength {
            expected,
            got: gammas.len(),
        });
    }
    if let Some(i) = gammas.iter().position(|g| g.is_zero()) {
        return Err(CdError::ZeroGamma(i));
    }
    let mu = match form {
        Form::Mu => {
            let mu = mu.unwrap_or_else(S::zero);
            if (S::from_i64(4) * mu.clone() + S::one()).is_zero() {
                return Err(CdError::DegenerateMu);
            }
            Some(mu)
        }
        Form::Gamma => None,
    };
    let mut params = CDParams {
        form,
        mu,
        gammas,
        level,
        nu: Vec::new(),
    };
    params.nu = (0..params.pair_count())
        .map(|k| {
            (1..level).fold(S::one(), |acc, l| {
                if (k >> (l - 1)) & 1 == 1 {
                    acc * -params.gamma(l).clone()
                } else {
                    acc
                }
            })
        })
        .collect();
    Ok(Arc::new(params))
}

impl<S: Scalar> CDParams<S> {
    /// Real algebra of the main sequence: all gammas equal to -1.
    pub fn main_sequence(level: usize) -> Params<S> {
        make_params(Form::Gamma, None, vec![-S::one(); level], level).expect("main sequence parameters are valid")
    }

    /// `(gamma_0, ..., gamma_{n-1})_F`.
    pub fn gamma_form(gammas: Vec<S>) -> Result<Params<S>> {
        let level = gammas.len();
        make_params(Form::Gamma, None, gammas, level)
    }

    /// `[mu, gamma_1, ..., gamma_{n-1})_F`.
    pub fn mu_form(mu: S, gammas: Vec<S>) -> Result<Params<S>> {
        let level = gammas.len() + 1;
        make_params(Form::Mu, Some(mu), gammas, level)
    }

    pub fn form(&self) -> Form {
        self.form
    }

    pub fn mu(&self) -> Option<&S> {
        self.mu.as_ref()
    }

    /// The gamma entries as supplied (first entry is `gamma_0` in gamma form).
    pub fn gammas(&self) -> &[S] {
        &self.gammas
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn dim(&self) -> usize {
        1 << self.level
    }

    /// `gamma_k`, the parameter used to double level `k` into level `k + 1`.
    /// In mu form `gamma_0` does not exist.
    pub fn gamma(&self, k: usize) -> &S {
        match self.form {
            Form::Gamma => &self.gammas[k],
            Form::Mu => &self.gammas[k - 1],
        }
    }

    /// Signed pair weights `nu_k`: the norm splits as
    /// `norm(x) = sum_k nu_k * norm_1(x_{2k} + x_{2k+1} l_1)`.
    pub fn nu(&self) -> &[S] {
        &self.nu
    }

    fn pair_count(&self) -> usize {
        1 << (self.level - 1)
    }

    /// Gamma form with every gamma equal to -1, i.e. C, H, O, S, ...
    pub fn is_locally_complex(&self) -> bool {
        self.form == Form::Gamma && self.gammas.iter().all(|g| *g == -S::one())
    }

    /// Main sequence up to the octonions: the norm is anisotropic and multiplicative.
    pub fn is_division_algebra(&self) -> bool {
        self.is_locally_complex() && self.level <= 3
    }

    /// Norm of `alpha + beta * (basis element 1)` inside `A_1`.
    pub fn pair_norm(&self, alpha: &S, beta: &S) -> S {
        match self.form {
            Form::Mu => {
                let mu = self.mu.clone().unwrap_or_else(S::zero);
                alpha.clone() * alpha.clone() + alpha.clone() * beta.clone() - mu * beta.clone() * beta.clone()
            }
            Form::Gamma => alpha.clone() * alpha.clone() - self.gammas[0].clone() * beta.clone() * beta.clone(),
        }
    }

    fn mul_slices(&self, a: &[S], b: &[S]) -> Vec<S> {
        let len = a.len();
        match (self.form, len) {
            (Form::Gamma, 1) => vec![a[0].clone() * b[0].clone()],
            (Form::Mu, 2) => {
                let mu = self.mu.clone().unwrap_or_else(S::zero);
                let bd = a[1].clone() * b[1].clone();
                vec![
                    a[0].clone() * b[0].clone() + mu * bd.clone(),
                    a[0].clone() * b[1].clone() + a[1].clone() * b[0].clone() + bd,
                ]
            }
            _ => {
                let half = len / 2;
                let gamma = self.gamma(half.trailing_zeros() as usize).clone();
                let (x, y) = a.split_at(half);
                let (z, w) = b.split_at(half);
                let xz = self.mul_slices(x, z);
                let wy = self.mul_slices(&self.conj_slices(w), y);
                let wx = self.mul_slices(w, x);
                let yz = self.mul_slices(y, &self.conj_slices(z));
                xz.into_iter()
                    .zip(wy)
                    .map(|(p, q)| p + gamma.clone() * q)
                    .chain(wx.into_iter().zip(yz).map(|(p, q)| p + q))
                    .collect()
            }
        }
    }

    fn conj_slices(&self, a: &[S]) -> Vec<S> {
        match (self.form, a.len()) {
            (Form::Gamma, 1) => vec![a[0].clone()],
            (Form::Mu, 2) => vec![a[0].clone() + a[1].clone(), -a[1].clone()],
            (_, len) => {
                let half = len / 2;
                let mut out = self.conj_slices(&a[..half]);
                out.extend(a[half..].iter().map(|c| -c.clone()));
                out
            }
        }
    }

    fn norm_slices(&self, a: &[S]) -> S {
        match (self.form, a.len()) {
            (Form::Gamma, 1) => a[0].clone() * a[0].clone(),
            (Form::Mu, 2) => self.pair_norm(&a[0], &a[1]),
            (_, len) => {
                let half = len / 2;
                let gamma = self.gamma(half.trailing_zeros() as usize).clone();
                self.norm_slices(&a[..half]) - gamma * self.norm_slices(&a[half..])
            }
        }
    }

    fn trace_slices(&self, a: &[S]) -> S {
        match self.form {
            Form::Gamma => a[0].clone() + a[0].clone(),
            Form::Mu => a[0].clone() + a[0].clone() + a[1].clone(),
        }
    }
}

impl<S: Scalar> fmt::Display for CDParams<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gammas: Vec<String> = self.gammas.iter().map(|g| g.to_string()).collect();
        match self.form {
            Form::Gamma => write!(f, "({})", gammas.join(", ")),
            Form::Mu => {
                let mu = self.mu.clone().unwrap_or_else(S::zero);
                if gammas.is_empty() {
                    write!(f, "[{mu})")
                } else {
                    write!(f, "[{mu}, {})", gammas.join(", "))
                }
            }
        }
    }
}

/// `(T, N)`: the central monic quadratic `x^2 - T x + N`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticClass<S> {
    pub trace: S,
    pub norm: S,
}

impl<S: Scalar> QuadraticClass<S> {
    pub fn new(trace: S, norm: S) -> Self {
        Self { trace, norm }
    }

    /// `T^2 - 4N`.
    pub fn discriminant(&self) -> S {
        self.trace.clone() * self.trace.clone() - S::from_i64(4) * self.norm.clone()
    }

    /// Over the reals, the class contains no scalar element iff the discriminant is negative.
    pub fn is_non_real(&self, tol: f64) -> bool {
        let d = self.discriminant();
        d.to_f64() < 0.0 && !d.is_negligible(tol)
    }

    /// Center `T/2` and radius `sqrt(N - T^2/4)` of the sphere this class
    /// traces in a locally-complex algebra.
    pub fn center_radius(&self) -> (f64, f64) {
        let t = self.trace.to_f64();
        let n = self.norm.to_f64();
        (t / 2.0, (n - t * t / 4.0).max(0.0).sqrt())
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.trace.approx_eq(&other.trace, tol) && self.norm.approx_eq(&other.norm, tol)
    }
}

impl<S: Scalar> fmt::Display for QuadraticClass<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^2 - ({})x + ({})", self.trace, self.norm)
    }
}

/// An element of `A_n`, coefficients in the standard basis.
#[derive(Clone, Debug)]
pub struct CDElement<S> {
    params: Params<S>,
    coeffs: Vec<S>,
}

impl<S: Scalar> PartialEq for CDElement<S> {
    fn eq(&self, other: &Self) -> bool {
        same_params(&self.params, &other.params) && self.coeffs == other.coeffs
    }
}

pub(crate) fn same_params<S: Scalar>(a: &Params<S>, b: &Params<S>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<S: Scalar> CDElement<S> {
    pub fn new(params: &Params<S>, coeffs: Vec<S>) -> Result<Self> {
        if coeffs.len() != params.dim() {
            return Err(CdError::BadLength {
                expected: params.dim(),
                got: coeffs.len(),
            });
        }
        Ok(Self {
            params: params.clone(),
            coeffs,
        })
    }

    /// Small-integer coefficients, handy for tests and examples.
    pub fn from_ints(params: &Params<S>, coeffs: &[i64]) -> Result<Self> {
        Self::new(params, coeffs.iter().map(|&c| S::from_i64(c)).collect())
    }

    pub fn zero(params: &Params<S>) -> Self {
        Self {
            params: params.clone(),
            coeffs: vec![S::zero(); params.dim()],
        }
    }

    pub fn one(params: &Params<S>) -> Self {
        Self::scalar(params, S::one())
    }

    pub fn scalar(params: &Params<S>, value: S) -> Self {
        let mut e = Self::zero(params);
        e.coeffs[0] = value;
        e
    }

    /// The `m`-th standard basis vector.
    pub fn basis(params: &Params<S>, m: usize) -> Self {
        let mut e = Self::zero(params);
        e.coeffs[m] = S::one();
        e
    }

    /// Sum of `(index, coefficient)` terms.
    pub fn from_terms(params: &Params<S>, terms: &[(usize, S)]) -> Self {
        let mut e = Self::zero(params);
        for (m, c) in terms {
            e.coeffs[*m] = e.coeffs[*m].clone() + c.clone();
        }
        e
    }

    pub fn params(&self) -> &Params<S> {
        &self.params
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_negligible(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.is_negligible(tol))
    }

    /// Embedded in `F * 1`: every non-unit coordinate vanishes.
    pub fn is_scalar(&self, tol: f64) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_negligible(tol))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a.approx_eq(b, tol))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_params(&self.params, &other.params) {
            Ok(())
        } else {
            Err(CdError::ParamsMismatch)
        }
    }

    /// Doubling product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            params: self.params.clone(),
            coeffs: self.params.mul_slices(&self.coeffs, &other.coeffs),
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.zip_with(other, |a, b| a.clone() + b.clone()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.zip_with(other, |a, b| a.clone() - b.clone()))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&S, &S) -> S) -> Self {
        Self {
            params: self.params.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| op(a, b)).collect(),
        }
    }

    /// Multiply every coordinate by a central scalar.
    pub fn scale(&self, s: &S) -> Self {
        Self {
            params: self.params.clone(),
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            params: self.params.clone(),
            coeffs: self.params.conj_slices(&self.coeffs),
        }
    }

    /// `a + conj(a)`, read off recursively (it only depends on the `A_1` block).
    pub fn trace(&self) -> S {
        self.params.trace_slices(&self.coeffs)
    }

    /// `conj(a) a`, via `norm((a, b)) = norm(a) - gamma norm(b)`.
    pub fn norm(&self) -> S {
        self.params.norm_slices(&self.coeffs)
    }

    /// The same norm assembled from the weighted `A_1` pair norms.
    pub fn norm_by_pairs(&self) -> S {
        self.params.nu.iter().enumerate().fold(S::zero(), |acc, (k, nu)| {
            acc + nu.clone() * self.params.pair_norm(&self.coeffs[2 * k], &self.coeffs[2 * k + 1])
        })
    }

    pub fn char_poly(&self) -> QuadraticClass<S> {
        QuadraticClass::new(self.trace(), self.norm())
    }

    /// `conj(a) / norm(a)`.
    pub fn inverse(&self, tol: f64) -> Result<Self> {
        let n = self.norm();
        if n.is_negligible(tol) {
            return Err(CdError::NotInvertible);
        }
        let inv = S::one() / n;
        Ok(self.conj().scale(&inv))
    }

    /// Powers by repeated right multiplication, well defined by power-associativity.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(&self.params);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `a(ab) = (aa)b` and `(ba)a = b(aa)` for every basis vector `b`.
    /// Both sides are linear in `b`, so basis probes decide it.
    pub fn is_alternative(&self, tol: f64) -> bool {
        let sq = self * self;
        (0..self.params.dim()).all(|m| {
            let b = Self::basis(&self.params, m);
            let left = &(self * &(self * &b)) - &(&sq * &b);
            let right = &(&(&b * self) * self) - &(&b * &sq);
            left.is_negligible(tol) && right.is_negligible(tol)
        })
    }

    pub fn quadratically_equivalent(&self, other: &Self, tol: f64) -> Result<bool> {
        self.check(other)?;
        Ok(self.char_poly().approx_eq(&other.char_poly(), tol))
    }

    /// Symmetric bilinear form of the norm: `(norm(a+b) - norm(a) - norm(b)) / 2`.
    pub fn inner(&self, other: &Self) -> Result<S> {
        let sum = self.try_add(other)?;
        Ok((sum.norm() - self.norm() - other.norm()) / S::from_i64(2))
    }

    fn require_locally_complex(&self) -> Result<()> {
        if self.params.is_locally_complex() {
            Ok(())
        } else {
            Err(CdError::NotLocallyComplex)
        }
    }

    /// `tr(a) / 2`.
    pub fn re(&self) -> Result<S> {
        self.require_locally_complex()?;
        Ok(self.trace() / S::from_i64(2))
    }

    /// `a - re(a)`.
    pub fn im(&self) -> Result<Self> {
        let re = self.re()?;
        let mut out = self.clone();
        out.coeffs[0] = out.coeffs[0].clone() - re;
        Ok(out)
    }

    /// `sqrt(norm(a))`.
    pub fn abs(&self) -> Result<f64> {
        self.require_locally_complex()?;
        Ok(self.norm().to_f64().max(0.0).sqrt())
    }

    /// Same element over the float backend.
    pub fn to_f64(&self) -> CDElement<f64> {
        let params = params_to_f64(&self.params);
        CDElement {
            params,
            coeffs: self.coeffs.iter().map(Scalar::to_f64).collect(),
        }
    }
}

/// Convert construction data to the float backend.
pub fn params_to_f64<S: Scalar>(p: &Params<S>) -> Params<f64> {
    make_params(
        p.form,
        p.mu.as_ref().map(Scalar::to_f64),
        p.gammas.iter().map(Scalar::to_f64).collect(),
        p.level,
    )
    .expect("converted parameters stay valid")
}

impl<S: Scalar> fmt::Display for CDElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

// Operator sugar for same-algebra arithmetic; mixing algebras panics, use the
// `try_*` methods where operands come from user input.

impl<S: Scalar> Mul for &CDElement<S> {
    type Output = CDElement<S>;
    fn mul(self, rhs: Self) -> CDElement<S> {
        self.try_mul(rhs).expect("multiplying elements of different algebras")
    }
}

impl<S: Scalar> Add for &CDElement<S> {
    type Output = CDElement<S>;
    fn add(self, rhs: Self) -> CDElement<S> {
        self.try_add(rhs).expect("adding elements of different algebras")
    }
}

impl<S: Scalar> Sub for &CDElement<S> {
    type Output = CDElement<S>;
    fn sub(self, rhs: Self) -> CDElement<S> {
        self.try_sub(rhs).expect("subtracting elements of different algebras")
    }
}

impl<S: Scalar> Neg for &CDElement<S> {
    type Output = CDElement<S>;
    fn neg(self) -> CDElement<S> {
        CDElement {
            params: self.params.clone(),
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use num_traits::{One, Zero};

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn quaternions() -> Params<Q> {
        CDParams::main_sequence(2)
    }

    fn split_quaternions() -> Params<Q> {
        CDParams::gamma_form(vec![q(-1), q(1)]).unwrap()
    }

    fn sedenion_pair() -> (CDElement<Q>, CDElement<Q>) {
        let s = CDParams::main_sequence(4);
        (
            CDElement::from_terms(&s, &[(1, q(1)), (10, q(1))]),
            CDElement::from_terms(&s, &[(7, q(1)), (12, q(1))]),
        )
    }

    #[test]
    fn params_validation() {
        let h = quaternions();
        assert_eq!(h.dim(), 4);
        assert!(h.is_locally_complex());
        assert!(!split_quaternions().is_locally_complex());
        assert!(matches!(
            CDParams::<Q>::gamma_form(vec![q(-1), q(0)]),
            Err(CdError::ZeroGamma(1))
        ));
        let quarter = Q::new(1.into(), 4.into());
        assert!(matches!(
            CDParams::mu_form(-quarter, vec![]),
            Err(CdError::DegenerateMu)
        ));
        assert!(matches!(
            make_params(Form::Mu, Some(q(1)), vec![q(1), q(1)], 2),
            Err(CdError::BadLength { expected: 1, got: 2 })
        ));
        assert!(matches!(
            make_params::<Q>(Form::Gamma, None, vec![q(-1)], 2),
            Err(CdError::BadLength { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn quaternion_units() {
        let h = quaternions();
        let e = |m| CDElement::<Q>::basis(&h, m);
        assert_eq!(&e(1) * &e(2), e(3));
        assert_eq!(&e(2) * &e(1), -&e(3));
        assert_eq!(&e(1) * &e(1), -&e(0));
        let x = CDElement::from_ints(&h, &[2, -1, 3, 5]).unwrap();
        assert_eq!(&CDElement::one(&h) * &x, x);
        assert_eq!(&x * &CDElement::one(&h), x);
    }

    #[test]
    fn sedenion_zero_divisors() {
        let (a, b) = sedenion_pair();
        assert!((&a * &b).is_zero());
        assert_eq!(a.norm(), q(2));
        assert_eq!(&b * &b, CDElement::scalar(b.params(), q(-2)));
        assert_eq!(b.char_poly(), QuadraticClass::new(q(0), q(2)));
    }

    #[test]
    fn conjugation() {
        let h = quaternions();
        assert_eq!(CDElement::<Q>::one(&h).conj(), CDElement::one(&h));
        for m in 1..4 {
            assert_eq!(CDElement::<Q>::basis(&h, m).conj(), -&CDElement::basis(&h, m));
        }
        let c = CDParams::<Q>::mu_form(q(3), vec![]).unwrap();
        let beta_l = CDElement::from_ints(&c, &[0, 5]).unwrap();
        assert_eq!(beta_l.conj(), CDElement::from_ints(&c, &[5, -5]).unwrap());
    }

    #[test]
    fn trace_and_norm() {
        let h = quaternions();
        let one = CDElement::<Q>::one(&h);
        assert_eq!(one.trace(), q(2));
        assert_eq!(one.norm(), q(1));
        let x = CDElement::from_ints(&split_quaternions(), &[0, 1, 1, 0]).unwrap();
        assert_eq!(x.trace(), q(0));
        assert_eq!(x.norm(), q(0));
        assert!((&x * &x).is_zero());
        assert!(matches!(x.inverse(0.0), Err(CdError::NotInvertible)));
    }

    #[test]
    fn char_poly_examples() {
        let h = quaternions();
        assert_eq!(
            CDElement::<Q>::basis(&h, 1).char_poly(),
            QuadraticClass::new(q(0), q(1))
        );
        assert_eq!(CDElement::scalar(&h, q(3)).char_poly(), QuadraticClass::new(q(6), q(9)));
    }

    #[test]
    fn inverses() {
        let h = quaternions();
        assert_eq!(CDElement::<Q>::one(&h).inverse(0.0).unwrap(), CDElement::one(&h));
        let i = CDElement::<Q>::basis(&h, 1);
        assert_eq!(i.inverse(0.0).unwrap(), -&i);
        let x = CDElement::from_ints(&CDParams::<Q>::main_sequence(3), &[1, 2, 0, -1, 3, 0, 0, 4]).unwrap();
        let inv = x.inverse(0.0).unwrap();
        assert!((&(&x * &inv) - &CDElement::one(x.params())).is_zero());
        assert!((&(&inv * &x) - &CDElement::one(x.params())).is_zero());
    }

    #[test]
    fn alternativity() {
        let s = CDParams::<Q>::main_sequence(4);
        for m in 0..16 {
            assert!(CDElement::basis(&s, m).is_alternative(0.0), "e_{m}");
        }
        let pair = CDElement::from_terms(&s, &[(4, q(3)), (5, q(-2))]);
        assert!(pair.is_alternative(0.0));
        // first hit of a scan over e_i + e_j + e_k against the basis
        let dense = CDElement::from_terms(&s, &[(1, q(1)), (2, q(1)), (9, q(1))]);
        assert!(!dense.is_alternative(0.0));
        let b = CDElement::basis(&s, 4);
        assert_ne!(&dense * &(&dense * &b), &(&dense * &dense) * &b);
    }

    #[test]
    fn quadratic_equivalence() {
        let (a, b) = sedenion_pair();
        assert!(a.quadratically_equivalent(&a.conj(), 0.0).unwrap());
        assert!(a.quadratically_equivalent(&a, 0.0).unwrap());
        assert!(!a.quadratically_equivalent(&CDElement::zero(a.params()), 0.0).unwrap());
        // both b and conj(b) share a's class
        assert!(a.quadratically_equivalent(&b, 0.0).unwrap());
        let h = quaternions();
        assert!(matches!(
            a.quadratically_equivalent(&CDElement::one(&h), 0.0),
            Err(CdError::ParamsMismatch)
        ));
    }

    #[test]
    fn re_im_abs() {
        let c = CDParams::<Q>::main_sequence(1);
        let one = CDElement::one(&c);
        assert_eq!(one.re().unwrap(), q(1));
        assert!(one.im().unwrap().is_zero());
        assert_eq!(one.abs().unwrap(), 1.0);
        let z = CDElement::from_ints(&c, &[3, 4]).unwrap();
        assert_eq!(z.abs().unwrap(), 5.0);
        let split = CDElement::<Q>::one(&split_quaternions());
        assert!(matches!(split.re(), Err(CdError::NotLocallyComplex)));

        // equivalent iff equal real part and equal |Im|
        let h = quaternions();
        let a = CDElement::from_ints(&h, &[1, 2, 2, 1]).unwrap();
        let b = CDElement::from_ints(&h, &[1, 0, 3, 0]).unwrap();
        assert!(a.quadratically_equivalent(&b, 0.0).unwrap());
        assert_eq!(a.re().unwrap(), b.re().unwrap());
        assert_eq!(a.im().unwrap().abs().unwrap(), b.im().unwrap().abs().unwrap());
    }

    #[test]
    fn nu_weights_and_pair_norms() {
        let p = CDParams::<Q>::mu_form(q(2), vec![q(3), q(-5)]).unwrap();
        assert_eq!(p.nu(), &[q(1), q(-3), q(5), q(-15)]);
        let x = CDElement::from_ints(&p, &[1, -2, 3, 1, 0, 4, -1, 2]).unwrap();
        assert_eq!(x.norm(), x.norm_by_pairs());
        assert_eq!(x.norm(), (&x.conj() * &x).coeffs()[0]);
        assert!(p.nu().iter().all(|n| !n.is_zero()));
        assert!(CDParams::<Q>::main_sequence(3).nu().iter().all(|n| n.is_one()));
    }

    #[test]
    fn mixing_algebras_is_an_error() {
        let a = CDElement::<Q>::one(&quaternions());
        let b = CDElement::<Q>::one(&split_quaternions());
        assert!(matches!(a.try_mul(&b), Err(CdError::ParamsMismatch)));
        assert!(CDElement::<Q>::new(&quaternions(), vec![Q::zero(); 3]).is_err());
    }
}
