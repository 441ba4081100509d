//! Polynomials over a Cayley–Dickson algebra with a central indeterminate.
//!
//! Coefficients sit on the left of each monomial, `f(x) = a_n x^n + ... + a_0`,
//! and substitution is `f(r) = sum a_k (r^k)`. Since `x` is central the
//! product is plain convolution with `c_i d_j` in the algebra.

use std::fmt;

use crate::algebra::{same_params, CDElement, Params, QuadraticClass};
use crate::error::{CdError, Result};
use crate::scalar::Scalar;

/// Dense polynomial in `A[x]`. Trailing zero coefficients are always trimmed,
/// so the zero polynomial has no coefficients and no degree.
#[derive(Clone, Debug)]
pub struct CDPolynomial<S> {
    params: Params<S>,
    coeffs: Vec<CDElement<S>>,
}

impl<S: Scalar> PartialEq for CDPolynomial<S> {
    fn eq(&self, other: &Self) -> bool {
        same_params(&self.params, &other.params) && self.coeffs == other.coeffs
    }
}

impl<S: Scalar> CDPolynomial<S> {
    /// Coefficient `k` is the coefficient of `x^k`.
    pub fn new(params: &Params<S>, coeffs: Vec<CDElement<S>>) -> Result<Self> {
        if coeffs.iter().any(|c| !same_params(c.params(), params)) {
            return Err(CdError::ParamsMismatch);
        }
        Ok(Self::from_parts(params.clone(), coeffs))
    }

    fn from_parts(params: Params<S>, mut coeffs: Vec<CDElement<S>>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { params, coeffs }
    }

    /// Rows of small-integer coordinates, lowest power first.
    pub fn from_int_rows(params: &Params<S>, rows: &[&[i64]]) -> Result<Self> {
        let coeffs = rows
            .iter()
            .map(|r| CDElement::from_ints(params, r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(params, coeffs)
    }

    pub fn zero(params: &Params<S>) -> Self {
        Self {
            params: params.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: CDElement<S>) -> Self {
        Self::from_parts(c.params().clone(), vec![c])
    }

    /// `c x^k`.
    pub fn monomial(c: CDElement<S>, k: usize) -> Self {
        let params = c.params().clone();
        let mut coeffs = vec![CDElement::zero(&params); k];
        coeffs.push(c);
        Self::from_parts(params, coeffs)
    }

    /// `x - r`.
    pub fn linear_root(r: &CDElement<S>) -> Self {
        let params = r.params().clone();
        Self::from_parts(params.clone(), vec![-r, CDElement::one(&params)])
    }

    /// A central polynomial viewed inside `A[x]`.
    pub fn from_central(params: &Params<S>, p: &CentralPolynomial<S>) -> Self {
        Self::from_parts(
            params.clone(),
            p.coeffs.iter().map(|c| CDElement::scalar(params, c.clone())).collect(),
        )
    }

    pub fn params(&self) -> &Params<S> {
        &self.params
    }

    pub fn coeffs(&self) -> &[CDElement<S>] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&CDElement<S>> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> CDElement<S> {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| CDElement::zero(&self.params))
    }

    pub fn is_monic(&self, tol: f64) -> bool {
        self.leading()
            .is_some_and(|a| a.approx_eq(&CDElement::one(&self.params), tol))
    }

    /// Every coefficient is a scalar multiple of 1.
    pub fn has_real_coefficients(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.is_scalar(tol))
    }

    /// Largest absolute coordinate among all coefficients.
    pub fn max_coordinate(&self) -> f64 {
        self.coeffs
            .iter()
            .flat_map(|c| c.coeffs().iter().map(Scalar::abs_f64))
            .fold(0.0, f64::max)
    }

    /// All coefficients with negligible coordinates dropped from the top.
    pub fn trimmed(&self, tol: f64) -> Self {
        let mut coeffs = self.coeffs.clone();
        while coeffs.last().is_some_and(|c| c.is_negligible(tol)) {
            coeffs.pop();
        }
        Self {
            params: self.params.clone(),
            coeffs,
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_params(&self.params, &other.params) {
            Ok(())
        } else {
            Err(CdError::ParamsMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect();
        Ok(Self::from_parts(self.params.clone(), coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            params: self.params.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// `c f(x)`: every coefficient multiplied on the left by `c`.
    pub fn scale(&self, c: &CDElement<S>) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|a| c.try_mul(a)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(self.params.clone(), coeffs))
    }

    /// Multiply every coefficient by a central scalar.
    pub fn scale_scalar(&self, s: &S) -> Self {
        Self::from_parts(self.params.clone(), self.coeffs.iter().map(|a| a.scale(s)).collect())
    }

    /// Convolution with `c_i d_j`, the left factor's coefficient kept on the left.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.params));
        }
        let mut coeffs = vec![CDElement::zero(&self.params); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            for (j, d) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(c * d);
            }
        }
        Ok(Self::from_parts(self.params.clone(), coeffs))
    }

    /// Product with a central polynomial; coordinates are convolved independently.
    pub fn mul_central(&self, p: &CentralPolynomial<S>) -> Self {
        if self.is_zero() || p.is_zero() {
            return Self::zero(&self.params);
        }
        let mut coeffs = vec![CDElement::zero(&self.params); self.coeffs.len() + p.coeffs.len() - 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            for (j, d) in p.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &c.scale(d);
            }
        }
        Self::from_parts(self.params.clone(), coeffs)
    }

    /// Coefficientwise involution.
    pub fn conj(&self) -> Self {
        Self {
            params: self.params.clone(),
            coeffs: self.coeffs.iter().map(CDElement::conj).collect(),
        }
    }

    /// `f(r) = sum a_k (r^k)`; the zero polynomial evaluates to 0.
    pub fn eval(&self, r: &CDElement<S>) -> Result<CDElement<S>> {
        if !same_params(&self.params, r.params()) {
            return Err(CdError::ParamsMismatch);
        }
        let mut acc = CDElement::zero(&self.params);
        let mut power = CDElement::one(&self.params);
        for (k, a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                power = &power * r;
            }
            acc = &acc + &(a * &power);
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| a.scale(&S::from_i64(k as i64)))
            .collect();
        Self::from_parts(self.params.clone(), coeffs)
    }

    /// `C_f = conj(f) f`, checked to be central and returned in `F[x]`.
    pub fn companion(&self, tol: f64) -> Result<CentralPolynomial<S>> {
        demote_central(&self.conj().mul(self)?, tol)
    }

    /// `f = g (x^2 - T x + N) + a x + b`, by the rewrite `x^2 -> T x - N`
    /// applied from the top coefficient down.
    pub fn divrem_quadratic(&self, q: &QuadraticClass<S>) -> (Self, CDElement<S>, CDElement<S>) {
        let zero = CDElement::zero(&self.params);
        let mut rem = self.coeffs.clone();
        if rem.len() < 2 {
            rem.resize(2, zero.clone());
        }
        let n = rem.len();
        let mut quotient = vec![zero; n.saturating_sub(2)];
        for k in (2..n).rev() {
            let c = rem[k].clone();
            rem[k - 1] = &rem[k - 1] + &c.scale(&q.trace);
            rem[k - 2] = &rem[k - 2] - &c.scale(&q.norm);
            quotient[k - 2] = c;
        }
        let b = rem[0].clone();
        let a = rem[1].clone();
        (Self::from_parts(self.params.clone(), quotient), a, b)
    }

    pub fn to_f64(&self) -> CDPolynomial<f64> {
        let coeffs: Vec<_> = self.coeffs.iter().map(CDElement::to_f64).collect();
        let params = match coeffs.first() {
            Some(c) => c.params().clone(),
            None => crate::algebra::params_to_f64(&self.params),
        };
        CDPolynomial::from_parts(params, coeffs)
    }
}

/// Check that every coefficient is central and drop to `F[x]`. A failure here
/// means the algebra arithmetic is broken, not the input.
pub fn demote_central<S: Scalar>(p: &CDPolynomial<S>, tol: f64) -> Result<CentralPolynomial<S>> {
    let scale_tol = tol * (1.0 + p.max_coordinate());
    p.coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| {
            if c.is_scalar(scale_tol) {
                Ok(c.coeffs()[0].clone())
            } else {
                Err(CdError::NonCentralResult { degree: k })
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(CentralPolynomial::new)
}

impl<S: Scalar> fmt::Display for CDPolynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c} x"),
                _ => format!("{c} x^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// A polynomial in `F[x]`, lowest power first, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralPolynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> CentralPolynomial<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| S::from_i64(c)).collect())
    }

    /// `x^2 - T x + N`.
    pub fn quadratic(q: &QuadraticClass<S>) -> Self {
        Self::new(vec![q.norm.clone(), -q.trace.clone(), S::one()])
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    /// Horner evaluation at a scalar.
    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Substitute an algebra element.
    pub fn eval_element(&self, r: &CDElement<S>) -> CDElement<S> {
        CDPolynomial::from_central(r.params(), self)
            .eval(r)
            .expect("central polynomial shares the element's algebra")
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::new(vec![S::one()]), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * S::from_i64(k as i64))
                .collect(),
        )
    }

    /// Long division by a nonzero divisor.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let lead = divisor.leading().expect("division by the zero polynomial").clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::new(Vec::new()), self.clone());
        }
        let mut quot = vec![S::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k].clone() / lead.clone();
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + j] = rem[k - dd + j].clone() - c.clone() * d.clone();
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&(S::one() / l.clone())),
            None => self.clone(),
        }
    }

    /// Monic gcd by the Euclidean algorithm. Meaningful only for exact backends.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: same roots, each simple. Exact backends only.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(Scalar::to_f64).collect()
    }

    /// Multiplicity of `x^2 - T x + N` as a factor, by repeated division.
    pub fn quadratic_multiplicity(&self, q: &QuadraticClass<S>, tol: f64) -> usize {
        let divisor = Self::quadratic(q);
        let mut current = self.clone();
        let mut count = 0;
        while current.degree().unwrap_or(0) >= 2 {
            let (quot, rem) = current.divrem(&divisor);
            let scale = tol * (1.0 + current.coeffs.iter().map(Scalar::abs_f64).fold(0.0, f64::max));
            if !rem.coeffs.iter().all(|c| c.is_negligible(scale)) {
                break;
            }
            current = quot;
            count += 1;
        }
        count
    }
}

impl<S: Scalar> fmt::Display for CentralPolynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
