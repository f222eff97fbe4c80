//! Laurent polynomials with rational coefficients over a named variable set.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{exps_zero, Exps, Poly};
use super::text::{format_monomial, format_rational, parse_rational, write_terms};
use crate::error::{Error, Result};

/// An ordered list of variable names; rings compare by their names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring(Arc<[String]>);

impl Ring {
    pub fn new<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Self {
        Ring(names.into_iter().map(|s| s.as_ref().to_owned()).collect())
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    ring: Ring,
    poly: Poly<BigRational>,
}

impl LaurentPoly {
    pub fn zero(ring: &Ring) -> Self {
        LaurentPoly { ring: ring.clone(), poly: Poly::zero() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn constant(ring: &Ring, c: BigRational) -> Self {
        LaurentPoly { ring: ring.clone(), poly: Poly::constant(c, ring.len()) }
    }

    /// `c · Π v_i^{doubled_i / 2}`.
    pub fn monomial(ring: &Ring, doubled: Exps, c: BigRational) -> Self {
        assert_eq!(doubled.len(), ring.len(), "exponent vector length");
        LaurentPoly { ring: ring.clone(), poly: Poly::monomial(doubled, c) }
    }

    /// `name^{doubled/2}`.
    pub fn var(ring: &Ring, name: &str, doubled: i32) -> Result<Self> {
        let i = ring
            .index(name)
            .ok_or_else(|| Error::VariableMismatch(format!("no variable {name} in {ring:?}")))?;
        let mut e = exps_zero(ring.len());
        e[i] = doubled;
        Ok(Self::monomial(ring, e, BigRational::one()))
    }

    pub fn from_poly(ring: &Ring, poly: Poly<BigRational>) -> Self {
        LaurentPoly { ring: ring.clone(), poly }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn poly(&self) -> &Poly<BigRational> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::VariableMismatch(format!("{:?} vs {:?}", self.ring, other.ring)))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_poly(&self.ring, self.poly.add(&other.poly)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_poly(&self.ring, self.poly.sub(&other.poly)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_poly(&self.ring, self.poly.mul(&other.poly)))
    }

    pub fn neg(&self) -> Self {
        Self::from_poly(&self.ring, self.poly.neg())
    }

    /// `g` with `g · (1 − m) = self`, where `m` is a monomial with coefficient 1.
    pub fn exact_div_one_minus_monomial(&self, m: &LaurentPoly) -> Result<Self> {
        self.check(m)?;
        let (e, c) = m
            .poly
            .as_monomial()
            .ok_or_else(|| Error::Domain("divisor must be a single monomial".into()))?;
        if *c != BigRational::one() {
            return Err(Error::Domain("monomial must have coefficient 1".into()));
        }
        Ok(Self::from_poly(&self.ring, self.poly.div_one_minus(c, e)?))
    }

    /// Evaluates at `values[i]` = value of `v_i^{1/2}`.
    pub fn evaluate_half(&self, values: &[BigRational]) -> Result<BigRational> {
        assert_eq!(values.len(), self.ring.len());
        let mut acc = BigRational::zero();
        for (e, c) in self.poly.terms() {
            let mut v = c.clone();
            for (k, x) in e.iter().zip(values) {
                if *k != 0 {
                    if x.is_zero() {
                        return Err(Error::BadEvaluationPoint("zero value".into()));
                    }
                    v *= x.pow(*k);
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Exponent-linear substitution: `images[i]` is the doubled exponent vector (over `target`)
    /// of the image of `v_i^1` together with a sign.
    pub fn substitute(&self, target: &Ring, images: &[(i8, Exps)]) -> Result<Self> {
        assert_eq!(images.len(), self.ring.len());
        let mut terms = Vec::with_capacity(self.poly.len());
        for (e, c) in self.poly.terms() {
            let mut out = exps_zero(target.len());
            let mut sign = 1i32;
            for (k, (s, img)) in e.iter().zip(images) {
                if *k == 0 {
                    continue;
                }
                for (o, v) in out.iter_mut().zip(img) {
                    let prod = k * v;
                    if prod % 2 != 0 {
                        return Err(Error::QuarterExponent(format!("{:?}", self.ring.names())));
                    }
                    *o += prod / 2;
                }
                if *s < 0 {
                    if k % 2 != 0 {
                        return Err(Error::Domain("square root of a negative sign".into()));
                    }
                    if (k / 2) % 2 != 0 {
                        sign = -sign;
                    }
                }
            }
            let c = if sign < 0 { -c.clone() } else { c.clone() };
            terms.push((out, c));
        }
        Ok(Self::from_poly(target, Poly::from_terms(terms)))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.poly.terms().iter().map(|(e, c)| (format_monomial(self.ring.names(), e), c)))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exp: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct LaurentJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LaurentJson {
            vars: self.ring.names().to_vec(),
            terms: self
                .poly
                .terms()
                .iter()
                .map(|(e, c)| TermJson { coeff: format_rational(c), exp: e.to_vec() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = LaurentJson::deserialize(d)?;
        let ring = Ring::new(&j.vars);
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            if t.exp.len() != ring.len() {
                return Err(D::Error::custom("exponent length does not match vars"));
            }
            let c = parse_rational(&t.coeff).map_err(D::Error::custom)?;
            terms.push((t.exp.into_iter().collect(), c));
        }
        Ok(LaurentPoly::from_poly(&ring, Poly::from_terms(terms)))
    }
}
