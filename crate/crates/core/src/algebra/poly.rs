//! Sparse Laurent polynomials over an arbitrary coefficient type.
//!
//! Exponents are stored doubled so that the lattice is ½ℤ.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Doubled exponent vector.
pub type Exps = SmallVec<[i32; 10]>;

pub fn exps_zero(len: usize) -> Exps {
    SmallVec::from_elem(0, len)
}

pub fn exps_add(a: &[i32], b: &[i32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn exps_sub(a: &[i32], b: &[i32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn exps_neg(a: &[i32]) -> Exps {
    a.iter().map(|x| -x).collect()
}

pub fn exps_scale(a: &[i32], k: i32) -> Exps {
    a.iter().map(|x| x * k).collect()
}

/// Halves a doubled exponent vector, failing on odd entries.
pub fn exps_half(a: &[i32]) -> Result<Exps> {
    a.iter()
        .map(|&x| {
            if x % 2 == 0 {
                Ok(x / 2)
            } else {
                Err(Error::QuarterExponent(format!("{a:?}")))
            }
        })
        .collect()
}

/// Coefficient arithmetic used by the sparse polynomial and by the walk engine.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn from_int(k: i64) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn from_int(k: i64) -> Self {
        BigRational::from_integer(k.into())
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

/// Terms sorted strictly ascending by exponent vector, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly<C> {
    terms: Vec<(Exps, C)>,
}

impl<C: Scalar> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: C, nvars: usize) -> Self {
        Self::monomial(exps_zero(nvars), c)
    }

    pub fn monomial(exps: Exps, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(exps, c)] }
        }
    }

    /// Builds a polynomial from unsorted terms, merging repeats.
    pub fn from_terms(mut terms: Vec<(Exps, C)>) -> Self {
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Exps, C)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 = last.1.add(&c),
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((e, c));
                }
            }
        }
        if out.last().is_some_and(|t| t.1.is_zero()) {
            out.pop();
        }
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Exps, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Exps, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[i32]) -> Option<&C> {
        self.terms
            .binary_search_by(|t| t.0.as_slice().cmp(exps))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    /// The single term when the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(&Exps, &C)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((e, c)),
            _ => None,
        }
    }

    /// Largest term in the lexicographic order.
    pub fn leading(&self) -> Option<(&Exps, &C)> {
        self.terms.last().map(|(e, c)| (e, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a[i].1.add(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some((e, c)) = other.as_monomial() {
            return self.mul_term(e, c);
        }
        if let Some((e, c)) = self.as_monomial() {
            return other.mul_term(e, c);
        }
        let mut acc: BTreeMap<Exps, C> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = exps_add(ea, eb);
                let c = ca.mul(cb);
                match acc.get_mut(&e) {
                    Some(v) => *v = v.add(&c),
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        Poly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Multiplies by `c · x^e`; the order is preserved because shifts are order automorphisms.
    pub fn mul_term(&self, e: &[i32], c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .filter_map(|(ea, ca)| {
                    let v = ca.mul(c);
                    (!v.is_zero()).then(|| (exps_add(ea, e), v))
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let n = self.terms.first().map_or(0, |t| t.0.len());
        self.mul_term(&exps_zero(n), c)
    }

    pub fn pow(&self, k: u32, nvars: usize) -> Self {
        let mut out = Self::constant(C::one(), nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Applies `f` to every exponent vector; the result is re-sorted and merged.
    pub fn map_exps(&self, mut f: impl FnMut(&Exps) -> Result<Exps>) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| Ok((f(e)?, c.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_terms(terms))
    }

    pub fn map_coeffs<D: Scalar>(&self, mut f: impl FnMut(&C) -> Result<D>) -> Result<Poly<D>> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| Ok((e.clone(), f(c)?)))
            .filter(|r| r.as_ref().map_or(true, |(_, c): &(Exps, D)| !c.is_zero()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly { terms })
    }

    /// Solves `g · (1 − c·x^d) = self` by long division along the `d`-grading.
    pub fn div_one_minus(&self, c: &C, d: &[i32]) -> Result<Self> {
        let Some(j) = d.iter().position(|&v| v != 0) else {
            return Err(Error::NotDivisible);
        };
        let dj = d[j];
        // class representative -> (grade -> coefficient)
        let mut classes: BTreeMap<Exps, BTreeMap<i64, C>> = BTreeMap::new();
        for (e, coef) in &self.terms {
            let k = e[j].div_euclid(dj);
            let rep: Exps = e.iter().zip(d).map(|(x, y)| x - k * y).collect();
            classes.entry(rep).or_default().insert(k as i64, coef.clone());
        }
        let mut out = Vec::new();
        for (rep, grades) in classes {
            let (&kmin, _) = grades.first_key_value().expect("non-empty class");
            let (&kmax, _) = grades.last_key_value().expect("non-empty class");
            let mut prev = C::zero();
            for k in kmin..=kmax {
                let fk = grades.get(&k).cloned().unwrap_or_else(C::zero);
                let gk = fk.add(&c.mul(&prev));
                if k == kmax {
                    if !gk.is_zero() {
                        return Err(Error::NotDivisible);
                    }
                } else if !gk.is_zero() {
                    let e: Exps = rep.iter().zip(d).map(|(x, y)| x + k as i32 * y).collect();
                    out.push((e, gk.clone()));
                }
                prev = gk;
            }
        }
        Ok(Self::from_terms(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use smallvec::smallvec;

    fn q(n: i64) -> BigRational {
        BigRational::from_int(n)
    }

    #[test]
    fn difference_of_squares() {
        let one_plus = Poly::from_terms(vec![(smallvec![0], q(1)), (smallvec![2], q(1))]);
        let one_minus = Poly::from_terms(vec![(smallvec![0], q(1)), (smallvec![2], q(-1))]);
        let expect = Poly::from_terms(vec![(smallvec![0], q(1)), (smallvec![4], q(-1))]);
        assert_eq!(one_plus.mul(&one_minus), expect);
    }

    #[test]
    fn division_examples() {
        // m = x^2 (doubled exps); 1 - m^2 = (1 + m)(1 - m)
        let f = Poly::from_terms(vec![(smallvec![0], q(1)), (smallvec![4], q(-1))]);
        let g = f.div_one_minus(&q(1), &[2]).unwrap();
        assert_eq!(g, Poly::from_terms(vec![(smallvec![0], q(1)), (smallvec![2], q(1))]));

        let f = Poly::from_terms(vec![(smallvec![2], q(1)), (smallvec![-2], q(-1))]);
        let g = f.div_one_minus(&q(1), &[-4]).unwrap();
        assert_eq!(g, Poly::monomial(smallvec![2], q(1)));

        let f = Poly::from_terms(vec![(smallvec![0], q(1)), (smallvec![2], q(1))]);
        assert_eq!(f.div_one_minus(&q(1), &[2]), Err(Error::NotDivisible));
    }

    #[test]
    fn merge_drops_cancelled_terms() {
        let p = Poly::from_terms(vec![
            (smallvec![1], q(2)),
            (smallvec![0], q(1)),
            (smallvec![1], q(-2)),
        ]);
        assert_eq!(p, Poly::constant(q(1), 1));
    }
}
