//! Laurent polynomials in `x_1..x_n` with coefficients in a scalar field.

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::eval::EvalPoint;
use super::laurent::{LaurentPoly, Ring};
use super::paramrat::ParamRat;
use super::params::{param_ring, NPARAMS};
use super::poly::{exps_zero, Exps, Poly, Scalar};
use super::text::{format_monomial, format_rational, parse_rational, write_terms};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct PolyX<S> {
    n: usize,
    poly: Poly<S>,
}

pub fn x_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl<S: Scalar> PolyX<S> {
    pub fn zero(n: usize) -> Self {
        PolyX { n, poly: Poly::zero() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, S::one())
    }

    pub fn constant(n: usize, c: S) -> Self {
        PolyX { n, poly: Poly::constant(c, n) }
    }

    /// `c · x^{doubled/2}`.
    pub fn monomial(doubled: Exps, c: S) -> Self {
        PolyX { n: doubled.len(), poly: Poly::monomial(doubled, c) }
    }

    pub fn from_terms(n: usize, terms: Vec<(Exps, S)>) -> Self {
        debug_assert!(terms.iter().all(|t| t.0.len() == n));
        PolyX { n, poly: Poly::from_terms(terms) }
    }

    pub fn from_poly(n: usize, poly: Poly<S>) -> Self {
        PolyX { n, poly }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &Poly<S> {
        &self.poly
    }

    pub fn terms(&self) -> &[(Exps, S)] {
        self.poly.terms()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn coeff(&self, doubled: &[i32]) -> Option<&S> {
        self.poly.coeff(doubled)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        PolyX { n: self.n, poly: self.poly.add(&other.poly) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        PolyX { n: self.n, poly: self.poly.sub(&other.poly) }
    }

    pub fn neg(&self) -> Self {
        PolyX { n: self.n, poly: self.poly.neg() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        PolyX { n: self.n, poly: self.poly.mul(&other.poly) }
    }

    pub fn scale(&self, c: &S) -> Self {
        PolyX { n: self.n, poly: self.poly.mul_term(&exps_zero(self.n), c) }
    }

    pub fn mul_term(&self, doubled: &[i32], c: &S) -> Self {
        PolyX { n: self.n, poly: self.poly.mul_term(doubled, c) }
    }

    /// `g` with `g · (1 − c·x^d) = self`.
    pub fn div_one_minus(&self, c: &S, d: &[i32]) -> Result<Self> {
        Ok(PolyX { n: self.n, poly: self.poly.div_one_minus(c, d)? })
    }

    pub fn map_exps(&self, f: impl FnMut(&Exps) -> Result<Exps>) -> Result<Self> {
        Ok(PolyX { n: self.n, poly: self.poly.map_exps(f)? })
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl FnMut(&S) -> Result<D>) -> Result<PolyX<D>> {
        Ok(PolyX { n: self.n, poly: self.poly.map_coeffs(f)? })
    }
}

impl PolyX<ParamRat> {
    pub fn evaluate(&self, pt: &EvalPoint) -> Result<PolyX<BigRational>> {
        self.map_coeffs(|c| c.evaluate(pt))
    }

    pub fn substitute_params(&self, images: &[Exps]) -> Result<Self> {
        self.map_coeffs(|c| c.substitute(images))
    }

    /// The ring `x1..xn, q, t, ...` used for the flattened text form.
    pub fn flat_ring(&self) -> Ring {
        Ring::new(x_names(self.n).into_iter().chain(param_ring().names().iter().cloned()))
    }

    /// Expands into a single Laurent polynomial in x and the parameters, when every
    /// coefficient has a trivial denominator.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        let ring = self.flat_ring();
        let mut terms = Vec::new();
        for (xe, c) in self.terms() {
            if !c.den_factors().is_empty() {
                return None;
            }
            for (pe, pc) in c.numerator().terms() {
                let e: Exps = xe.iter().chain(pe.iter()).copied().collect();
                terms.push((e, pc.clone()));
            }
        }
        Some(LaurentPoly::from_poly(&ring, Poly::from_terms(terms)))
    }
}

impl fmt::Display for PolyX<ParamRat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.to_laurent() {
            return write!(f, "{l}");
        }
        let xs = x_names(self.n);
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let m = format_monomial(&xs, e);
            if m.is_empty() {
                write!(f, "[{c}]")?;
            } else {
                write!(f, "[{c}] * {m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for PolyX<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xs = x_names(self.n);
        write_terms(f, self.terms().iter().map(|(e, c)| (format_monomial(&xs, e), c)))
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffTerm {
    coeff: String,
    exp: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct RatTermJson {
    exp: Vec<i32>,
    num: Vec<CoeffTerm>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    den: Vec<Vec<CoeffTerm>>,
}

#[derive(Serialize, Deserialize)]
struct PolyXJson {
    vars: Vec<String>,
    params: Vec<String>,
    terms: Vec<RatTermJson>,
}

fn poly_to_json(p: &Poly<BigRational>) -> Vec<CoeffTerm> {
    p.terms()
        .iter()
        .map(|(e, c)| CoeffTerm { coeff: format_rational(c), exp: e.to_vec() })
        .collect()
}

fn poly_from_json(ts: Vec<CoeffTerm>, len: usize) -> std::result::Result<Poly<BigRational>, String> {
    let mut terms = Vec::with_capacity(ts.len());
    for t in ts {
        if t.exp.len() != len {
            return Err("exponent length mismatch".into());
        }
        terms.push((t.exp.into_iter().collect(), parse_rational(&t.coeff)?));
    }
    Ok(Poly::from_terms(terms))
}

impl Serialize for PolyX<ParamRat> {
    fn serialize<Z: serde::Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        PolyXJson {
            vars: x_names(self.n),
            params: param_ring().names().to_vec(),
            terms: self
                .terms()
                .iter()
                .map(|(e, c)| RatTermJson {
                    exp: e.to_vec(),
                    num: poly_to_json(c.numerator()),
                    den: c.den_factors().iter().map(poly_to_json).collect(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolyX<ParamRat> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = PolyXJson::deserialize(d)?;
        if j.params != param_ring().names() {
            return Err(D::Error::custom("unexpected parameter list"));
        }
        let n = j.vars.len();
        if j.vars != x_names(n) {
            return Err(D::Error::custom("x variables must be x1..xn"));
        }
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            if t.exp.len() != n {
                return Err(D::Error::custom("exponent length mismatch"));
            }
            let num = poly_from_json(t.num, NPARAMS).map_err(D::Error::custom)?;
            let dens = t
                .den
                .into_iter()
                .map(|f| poly_from_json(f, NPARAMS))
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(D::Error::custom)?;
            let c = ParamRat::new(num, dens).map_err(D::Error::custom)?;
            terms.push((t.exp.into_iter().collect(), c));
        }
        Ok(PolyX::from_terms(n, terms))
    }
}

impl Serialize for PolyX<BigRational> {
    fn serialize<Z: serde::Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let ring = Ring::new(x_names(self.n));
        LaurentPoly::from_poly(&ring, self.poly.clone()).serialize(s)
    }
}

/// Reads an x-polynomial whose coefficients are parameter rational functions.
pub fn parse_polyx(json: &str) -> Result<PolyX<ParamRat>> {
    serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))
}
