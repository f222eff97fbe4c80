//! Rational evaluation points for the parameters.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::params::{Param, NPARAMS};
use super::poly::Poly;
use crate::error::{Error, Result};

/// Bound on numerators and denominators of random points.
pub const POINT_BOUND: i64 = 10_000;

/// Values of the square roots `p^{1/2}` of every parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalPoint {
    half: Vec<BigRational>,
}

impl EvalPoint {
    pub fn new(half: Vec<BigRational>) -> Result<Self> {
        if half.len() != NPARAMS {
            return Err(Error::Domain(format!("need {NPARAMS} parameter values")));
        }
        if half.iter().any(Zero::is_zero) {
            return Err(Error::BadEvaluationPoint("parameter value 0".into()));
        }
        Ok(EvalPoint { half })
    }

    /// Seeded random point; values avoid 0 and ±1.
    pub fn random(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let half = (0..NPARAMS)
            .map(|_| loop {
                let n: i64 = rng.gen_range(1..=POINT_BOUND);
                let d: i64 = rng.gen_range(1..=POINT_BOUND);
                let v = BigRational::new(BigInt::from(n), BigInt::from(d));
                if !v.is_one() {
                    break v;
                }
            })
            .collect();
        EvalPoint { half }
    }

    /// The `k`-th point of a seeded family.
    pub fn seeded(seed: u64, k: u64) -> Self {
        Self::random(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(k))
    }

    pub fn half(&self, p: Param) -> &BigRational {
        &self.half[p.index()]
    }

    pub fn eval_poly(&self, p: &Poly<BigRational>) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in p.terms() {
            let mut v = c.clone();
            for (k, x) in e.iter().zip(&self.half) {
                if *k != 0 {
                    v *= x.pow(*k);
                }
            }
            acc += v;
        }
        Ok(acc)
    }
}

impl fmt::Display for EvalPoint {
    /// `q^1/2=3/7, t^1/2=...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, v)) in Param::ALL.iter().zip(&self.half).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}^1/2={v}", p.name())?;
        }
        Ok(())
    }
}
