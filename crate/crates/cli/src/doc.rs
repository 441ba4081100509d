//! JSON documents for algebras, polynomials, elements and candidate classes.
//! Rationals travel as strings so exact data never passes through a float.

use std::path::Path;

use cdpoly::{make_params, CDElement, CDPolynomial, Form, Params, QuadraticClass, Rational, Scalar};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormName {
    Mu,
    Gamma,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarMode {
    Rational,
    Float64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub form: FormName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Value>,
    pub gammas: Vec<Value>,
    pub level: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialDocument {
    pub algebra: AlgebraSpec,
    pub scalar: ScalarMode,
    /// `coeffs[k]` multiplies `x^k`.
    pub coeffs: Vec<Vec<Value>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementDocument {
    pub algebra: AlgebraSpec,
    pub scalar: ScalarMode,
    pub coeffs: Vec<Value>,
}

/// Caller-supplied `(T, N)` pairs and central root candidates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CandidatesDocument {
    pub classes: Vec<(Value, Value)>,
    #[serde(default)]
    pub central: Vec<Value>,
}

pub enum AnyPoly {
    Exact(CDPolynomial<Rational>),
    Float(CDPolynomial<f64>),
}

pub enum AnyElement {
    Exact(CDElement<Rational>),
    Float(CDElement<f64>),
}

/// Run `$body` with `$f` bound to the polynomial in either backend.
#[macro_export]
macro_rules! with_poly {
    ($any:expr, $f:ident => $body:expr) => {
        match $any {
            $crate::doc::AnyPoly::Exact($f) => $body,
            $crate::doc::AnyPoly::Float($f) => $body,
        }
    };
}

pub fn read_text(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("{what}: {e}")))
}

pub fn parse_scalar<S: Scalar>(v: &Value) -> CliResult<S> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        other => {
            return Err(CliError::Parse(format!(
                "expected a number or rational string, got {other}"
            )))
        }
    };
    S::parse_literal(&text).ok_or_else(|| CliError::Parse(format!("bad scalar literal {text:?}")))
}

pub fn scalar_value<S: Scalar>(s: &S) -> Value {
    if S::EXACT {
        return Value::String(s.to_string());
    }
    serde_json::Number::from_f64(s.to_f64()).map_or_else(|| Value::String(s.to_string()), Value::Number)
}

pub fn element_values<S: Scalar>(x: &CDElement<S>) -> Vec<Value> {
    x.coeffs().iter().map(scalar_value).collect()
}

impl AlgebraSpec {
    pub fn params<S: Scalar>(&self) -> CliResult<Params<S>> {
        let gammas = self.gammas.iter().map(parse_scalar).collect::<CliResult<Vec<S>>>()?;
        let (form, mu) = match self.form {
            FormName::Gamma => {
                if self.mu.is_some() {
                    return Err(CliError::Parse("gamma form takes no mu".into()));
                }
                (Form::Gamma, None)
            }
            FormName::Mu => {
                let mu = self
                    .mu
                    .as_ref()
                    .ok_or_else(|| CliError::Parse("mu form needs mu".into()))?;
                (Form::Mu, Some(parse_scalar(mu)?))
            }
        };
        make_params(form, mu, gammas, self.level).map_err(|e| CliError::Parse(format!("algebra: {e}")))
    }

    pub fn from_params<S: Scalar>(p: &Params<S>) -> Self {
        Self {
            form: match p.form() {
                Form::Mu => FormName::Mu,
                Form::Gamma => FormName::Gamma,
            },
            mu: p.mu().map(scalar_value),
            gammas: p.gammas().iter().map(scalar_value).collect(),
            level: p.level(),
        }
    }
}

fn mode<S: Scalar>() -> ScalarMode {
    if S::EXACT {
        ScalarMode::Rational
    } else {
        ScalarMode::Float64
    }
}

fn element_from_values<S: Scalar>(p: &Params<S>, values: &[Value]) -> CliResult<CDElement<S>> {
    if values.len() != p.dim() {
        return Err(CliError::Parse(format!(
            "coefficient vector has {} entries, algebra dimension is {}",
            values.len(),
            p.dim()
        )));
    }
    let coeffs = values.iter().map(parse_scalar).collect::<CliResult<Vec<S>>>()?;
    Ok(CDElement::new(p, coeffs)?)
}

impl PolynomialDocument {
    pub fn parse(text: &str) -> CliResult<Self> {
        from_json(text, "polynomial document")
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        Self::parse(&read_text(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    fn build_in<S: Scalar>(&self) -> CliResult<CDPolynomial<S>> {
        let p = self.algebra.params::<S>()?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|row| element_from_values(&p, row))
            .collect::<CliResult<Vec<_>>>()?;
        Ok(CDPolynomial::new(&p, coeffs)?)
    }

    pub fn build(&self) -> CliResult<AnyPoly> {
        Ok(match self.scalar {
            ScalarMode::Rational => AnyPoly::Exact(self.build_in()?),
            ScalarMode::Float64 => AnyPoly::Float(self.build_in()?),
        })
    }

    pub fn from_poly<S: Scalar>(f: &CDPolynomial<S>) -> Self {
        Self {
            algebra: AlgebraSpec::from_params(f.params()),
            scalar: mode::<S>(),
            coeffs: f.coeffs().iter().map(element_values).collect(),
        }
    }
}

impl ElementDocument {
    pub fn parse(text: &str) -> CliResult<Self> {
        from_json(text, "element document")
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        Self::parse(&read_text(path)?)
    }

    pub fn build(&self) -> CliResult<AnyElement> {
        Ok(match self.scalar {
            ScalarMode::Rational => AnyElement::Exact(element_from_values(&self.algebra.params()?, &self.coeffs)?),
            ScalarMode::Float64 => AnyElement::Float(element_from_values(&self.algebra.params()?, &self.coeffs)?),
        })
    }

    pub fn from_element<S: Scalar>(x: &CDElement<S>) -> Self {
        Self {
            algebra: AlgebraSpec::from_params(x.params()),
            scalar: mode::<S>(),
            coeffs: element_values(x),
        }
    }
}

impl CandidatesDocument {
    pub fn load(path: &Path) -> CliResult<Self> {
        from_json(&read_text(path)?, "candidates document")
    }

    pub fn classes<S: Scalar>(&self) -> CliResult<Vec<QuadraticClass<S>>> {
        self.classes
            .iter()
            .map(|(t, n)| Ok(QuadraticClass::new(parse_scalar(t)?, parse_scalar(n)?)))
            .collect()
    }

    pub fn central<S: Scalar>(&self) -> CliResult<Vec<S>> {
        self.central.iter().map(parse_scalar).collect()
    }
}
