//! Rational functions in the parameters.
//!
//! The denominator is kept as a product of normalized factors (leading term `1`), so sums
//! use the multiset lcm of the factor lists and equality is cross-multiplication after
//! cancelling shared factors. No polynomial gcd is ever computed; the only cancellation is
//! dividing the numerator by binomial factors `1 − c·m` when that division is exact.

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::eval::EvalPoint;
use super::laurent::LaurentPoly;
use super::params::{param_ring, NPARAMS};
use super::poly::{exps_neg, exps_zero, Exps, Poly, Scalar};
use crate::error::{Error, Result};

type RPoly = Poly<BigRational>;

#[derive(Clone, Debug)]
pub struct ParamRat {
    num: RPoly,
    den: Vec<RPoly>,
}

/// Splits `p` into a unit monomial and a factor with leading term 1 (absent when `p` is a monomial).
fn normalize_factor(p: &RPoly) -> Result<((Exps, BigRational), Option<RPoly>)> {
    let (le, lc) = p
        .leading()
        .ok_or_else(|| Error::BadEvaluationPoint("zero denominator".into()))?;
    let unit = (le.clone(), lc.clone());
    if p.len() == 1 {
        return Ok((unit, None));
    }
    let f = p.mul_term(&exps_neg(le), &lc.recip());
    Ok((unit, Some(f)))
}

/// Multiset union with multiplicities `max`, and what each side is missing.
fn lcm(a: &[RPoly], b: &[RPoly]) -> (Vec<RPoly>, Vec<RPoly>, Vec<RPoly>) {
    let (mut i, mut j) = (0, 0);
    let (mut all, mut miss_a, mut miss_b) = (Vec::new(), Vec::new(), Vec::new());
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.cmp(y),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match ord {
            Ordering::Equal => {
                all.push(a[i].clone());
                i += 1;
                j += 1;
            }
            Ordering::Less => {
                all.push(a[i].clone());
                miss_b.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                all.push(b[j].clone());
                miss_a.push(b[j].clone());
                j += 1;
            }
        }
    }
    (all, miss_a, miss_b)
}

/// The doubled exponents of `Π p^{e_p/2}` after `p ↦ images[p]`.
pub fn substitute_exps(e: &[i32], images: &[Exps]) -> Result<Exps> {
    let mut out = exps_zero(NPARAMS);
    for (k, img) in e.iter().zip(images) {
        if *k == 0 {
            continue;
        }
        for (o, v) in out.iter_mut().zip(img) {
            let prod = k * v;
            if prod % 2 != 0 {
                return Err(Error::QuarterExponent(format!("{e:?}")));
            }
            *o += prod / 2;
        }
    }
    Ok(out)
}

fn product(factors: &[RPoly], num: &RPoly) -> RPoly {
    factors.iter().fold(num.clone(), |acc, f| acc.mul(f))
}

impl ParamRat {
    pub fn from_poly(num: RPoly) -> Self {
        ParamRat { num, den: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(Poly::constant(c, NPARAMS))
    }

    /// `c · Π p^{doubled/2}`.
    pub fn monomial(doubled: Exps, c: BigRational) -> Self {
        Self::from_poly(Poly::monomial(doubled, c))
    }

    pub fn mono(doubled: Exps) -> Self {
        Self::monomial(doubled, <BigRational as One>::one())
    }

    /// `num / Π dens`, normalizing every denominator factor.
    pub fn new(num: RPoly, dens: impl IntoIterator<Item = RPoly>) -> Result<Self> {
        let mut num = num;
        let mut den = Vec::new();
        for d in dens {
            let ((e, c), f) = normalize_factor(&d)?;
            num = num.mul_term(&exps_neg(&e), &c.recip());
            den.extend(f);
        }
        den.sort();
        let mut r = ParamRat { num, den };
        r.trim();
        Ok(r)
    }

    pub fn from_laurent(l: &LaurentPoly) -> Result<Self> {
        if l.ring() != param_ring() {
            return Err(Error::VariableMismatch(format!("{:?}", l.ring())));
        }
        Ok(Self::from_poly(l.poly().clone()))
    }

    pub fn numerator(&self) -> &RPoly {
        &self.num
    }

    pub fn den_factors(&self) -> &[RPoly] {
        &self.den
    }

    /// Removes denominator factors `1 − c·m` that divide the numerator exactly.
    pub fn trim(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let mut kept = Vec::with_capacity(self.den.len());
        for f in std::mem::take(&mut self.den) {
            let cancelled = match f.terms() {
                [(e, c), _] => match self.num.div_one_minus(&-c.clone(), e) {
                    Ok(g) => {
                        self.num = g;
                        true
                    }
                    Err(_) => false,
                },
                _ => false,
            };
            if !cancelled {
                kept.push(f);
            }
        }
        self.den = kept;
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        let inv = other
            .inv()
            .ok_or_else(|| Error::Domain("division by zero".into()))?;
        Ok(Scalar::mul(self, &inv))
    }

    /// Evaluates at a point that gives every parameter's square root.
    pub fn evaluate(&self, pt: &EvalPoint) -> Result<BigRational> {
        let mut d = <BigRational as One>::one();
        for f in &self.den {
            d *= pt.eval_poly(f)?;
        }
        if Zero::is_zero(&d) {
            return Err(Error::BadEvaluationPoint(format!("denominator vanishes: {self}")));
        }
        Ok(pt.eval_poly(&self.num)? / d)
    }

    /// Exponent-linear substitution; `images[p]` is the doubled exponent vector of the image of `p^1`.
    pub fn substitute(&self, images: &[Exps]) -> Result<Self> {
        let sub = |p: &RPoly| -> Result<RPoly> { p.map_exps(|e| substitute_exps(e, images)) };
        let num = sub(&self.num)?;
        let dens = self.den.iter().map(sub).collect::<Result<Vec<_>>>()?;
        if let Some(z) = dens.iter().position(|d| d.is_zero()) {
            return Err(Error::BadEvaluationPoint(format!(
                "denominator factor {} vanishes under substitution",
                LaurentPoly::from_poly(param_ring(), self.den[z].clone())
            )));
        }
        Self::new(num, dens)
    }
}

impl PartialEq for ParamRat {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        let (_, miss_a, miss_b) = lcm(&self.den, &other.den);
        // a/A = b/B  <=>  a·(B∖A) = b·(A∖B)
        product(&miss_a, &self.num) == product(&miss_b, &other.num)
    }
}

impl Scalar for ParamRat {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn one() -> Self {
        Self::constant(<BigRational as One>::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.num.is_zero() {
            return other.clone();
        }
        if other.num.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let mut r = ParamRat { num: self.num.add(&other.num), den: self.den.clone() };
            r.trim();
            return r;
        }
        let (all, miss_a, miss_b) = lcm(&self.den, &other.den);
        let num = product(&miss_a, &self.num).add(&product(&miss_b, &other.num));
        let mut r = ParamRat { num, den: all };
        r.trim();
        r
    }
    fn mul(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.num);
        if num.is_zero() {
            return Self::zero();
        }
        let mut den: Vec<RPoly> = self.den.iter().chain(&other.den).cloned().collect();
        den.sort();
        ParamRat { num, den }
    }
    fn neg(&self) -> Self {
        ParamRat { num: self.num.neg(), den: self.den.clone() }
    }
    fn from_int(k: i64) -> Self {
        Self::constant(BigRational::from_integer(k.into()))
    }
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        let num = product(&self.den, &Poly::constant(<BigRational as One>::one(), NPARAMS));
        Self::new(num, [self.num.clone()]).ok()
    }
}

impl fmt::Display for ParamRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = LaurentPoly::from_poly(param_ring(), self.num.clone());
        if self.den.is_empty() {
            return write!(f, "{num}");
        }
        write!(f, "({num})/(")?;
        for (i, d) in self.den.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(f, "({})", LaurentPoly::from_poly(param_ring(), d.clone()))?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::params::{pmono, Param};

    fn one_minus(e: Exps) -> RPoly {
        Poly::from_terms(vec![
            (exps_zero(NPARAMS), <BigRational as One>::one()),
            (e, -<BigRational as One>::one()),
        ])
    }

    #[test]
    fn sqrt_factorization_equality() {
        let t = pmono(&[(Param::T, 2)]);
        let th = pmono(&[(Param::T, 1)]);
        let lhs = ParamRat::from_poly(one_minus(t));
        let a = ParamRat::from_poly(one_minus(th.clone()));
        let b = ParamRat::from_poly(Poly::from_terms(vec![
            (exps_zero(NPARAMS), <BigRational as One>::one()),
            (th, <BigRational as One>::one()),
        ]));
        assert_eq!(lhs, a.mul(&b));
    }

    #[test]
    fn quotient_cancels_to_one() {
        let t = pmono(&[(Param::T, 2)]);
        let r = ParamRat::new(one_minus(t.clone()), [one_minus(t)]).unwrap();
        assert_eq!(r, ParamRat::one());
        assert!(r.den_factors().is_empty());
    }

    #[test]
    fn normalization_flips_sign_of_factor() {
        // 1/(1 - t) and -t^{-1}/(1 - t^{-1}) are the same function
        let t = pmono(&[(Param::T, 2)]);
        let a = ParamRat::new(Poly::constant(<BigRational as One>::one(), NPARAMS), [one_minus(t.clone())]).unwrap();
        let b = ParamRat::new(
            Poly::monomial(exps_neg(&t), -<BigRational as One>::one()),
            [one_minus(exps_neg(&t))],
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.den_factors(), b.den_factors());
    }
}
