//! The basic representation of the affine Hecke algebra on Laurent polynomials and the
//! Cherednik operators `Y^{t(ε_j)}`.
//!
//! `T_i = τ_i s_i + b_i (1 − s_i)` with `b_i = (τ_i − τ_i^{-1} + (τ_i' − τ_i'^{-1}) z^{1/2}) / (1 − z)`
//! and `z = x^{α_i}`, where `x^{α_0} = q x_1^{-2}`, `x^{α_j} = x_j/x_{j+1}`, `x^{α_n} = x_n^2`.
//! The inverse uses `(T_i − τ_i)(T_i + τ_i^{-1}) = 0`.

use serde::Serialize;

use crate::algebra::paramrat::substitute_exps;
use crate::algebra::poly::exps_zero;
use crate::algebra::{pmono, EvalPoint, Exps, Param, ParamRat, PolyX, Scalar};
use crate::error::{Error, Result};
use crate::tables::identity_images;

/// Scalars of one generator.
#[derive(Clone, Debug)]
struct GenData<S> {
    tau: S,
    /// `τ − τ^{-1}`
    d: S,
    /// `τ' − τ'^{-1}`, absent when `τ' = 1`
    e: Option<S>,
    /// `z = c·x^{dir}` with `dir` doubled
    c: S,
    c_half: S,
    dir: Exps,
}

#[derive(Clone, Debug)]
pub struct BasicRep<S> {
    n: usize,
    gens: Vec<GenData<S>>,
    q_half: S,
}

fn pow<S: Scalar>(x: &S, k: i32) -> Result<S> {
    let base = if k < 0 {
        x.inv().ok_or_else(|| Error::BadEvaluationPoint("zero parameter".into()))?
    } else {
        x.clone()
    };
    let mut acc = S::one();
    for _ in 0..k.unsigned_abs() {
        acc = acc.mul(&base);
    }
    Ok(acc)
}

impl<S: Scalar> BasicRep<S> {
    /// `images` is a parameter assignment (see [`crate::tables::SpecRule::images`]); `lift`
    /// turns a doubled parameter monomial into a scalar.
    pub fn with(n: usize, images: &[Exps], lift: impl Fn(&Exps) -> Result<S>) -> Result<Self> {
        let m = |p: Param, k: i32| -> Result<S> { lift(&substitute_exps(&pmono(&[(p, k)]), images)?) };
        let is_one = |p: Param| -> Result<bool> {
            Ok(substitute_exps(&pmono(&[(p, 1)]), images)?.iter().all(|&x| x == 0))
        };
        let mut gens = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let (tp, up) = match i {
                0 => (Param::T0, Some(Param::U0)),
                i if i == n => (Param::Tn, Some(Param::Un)),
                _ => (Param::T, None),
            };
            let tau = m(tp, 1)?;
            let d = tau.sub(&m(tp, -1)?);
            let e = match up {
                Some(u) if !is_one(u)? => Some(m(u, 1)?.sub(&m(u, -1)?)),
                _ => None,
            };
            let mut dir = exps_zero(n);
            let (c, c_half) = match i {
                0 => {
                    dir[0] = -4;
                    (m(Param::Q, 2)?, m(Param::Q, 1)?)
                }
                i if i == n => {
                    dir[n - 1] = 4;
                    (S::one(), S::one())
                }
                j => {
                    dir[j - 1] = 2;
                    dir[j] = -2;
                    (S::one(), S::one())
                }
            };
            gens.push(GenData { tau, d, e, c, c_half, dir });
        }
        Ok(BasicRep { n, gens, q_half: m(Param::Q, 1)? })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `s_i` acting on x-monomials (`s_0 x_1 = q x_1^{-1}`).
    pub fn s(&self, i: usize, f: &PolyX<S>) -> Result<PolyX<S>> {
        let n = self.n;
        let mut terms = Vec::with_capacity(f.terms().len());
        for (e, c) in f.terms() {
            let mut e2 = e.clone();
            let coeff = match i {
                0 => {
                    let k = e[0];
                    e2[0] = -k;
                    c.mul(&pow(&self.q_half, k)?)
                }
                i if i == n => {
                    e2[n - 1] = -e[n - 1];
                    c.clone()
                }
                j => {
                    e2.swap(j - 1, j);
                    c.clone()
                }
            };
            terms.push((e2, coeff));
        }
        Ok(PolyX::from_terms(n, terms))
    }

    /// `T_i f`, or `T_i^{-1} f` when `power = -1`.
    pub fn apply_t(&self, i: usize, f: &PolyX<S>, power: i32) -> Result<PolyX<S>> {
        let g = &self.gens[i];
        let sf = self.s(i, f)?;
        let quotient = f.sub(&sf).div_one_minus(&g.c, &g.dir)?;
        let mut out = sf.scale(&g.tau).add(&quotient.scale(&g.d));
        if let Some(e) = &g.e {
            let half: Exps = g.dir.iter().map(|x| x / 2).collect();
            out = out.add(&quotient.mul_term(&half, &g.c_half.mul(e)));
        }
        match power {
            1 => Ok(out),
            -1 => Ok(out.sub(&f.scale(&g.d))),
            _ => Err(Error::Domain(format!("T power {power}"))),
        }
    }

    /// `Y^{t(ε_j)} = T_{j−1}^{-1}⋯T_1^{-1} T_0 T_1⋯T_{n−1} T_n T_{n−1}⋯T_j`.
    pub fn y_word(&self, j: usize) -> Vec<(usize, i32)> {
        let n = self.n;
        let mut w: Vec<(usize, i32)> = (1..j).rev().map(|i| (i, -1)).collect();
        w.push((0, 1));
        w.extend((1..n).map(|i| (i, 1)));
        w.push((n, 1));
        w.extend((j..n).rev().map(|i| (i, 1)));
        w
    }

    pub fn apply_word(&self, word: &[(usize, i32)], f: &PolyX<S>) -> Result<PolyX<S>> {
        let mut g = f.clone();
        for &(i, p) in word.iter().rev() {
            g = self.apply_t(i, &g, p)?;
        }
        Ok(g)
    }

    pub fn apply_y(&self, j: usize, f: &PolyX<S>) -> Result<PolyX<S>> {
        if j == 0 || j > self.n {
            return Err(Error::Domain(format!("Y index {j}")));
        }
        self.apply_word(&self.y_word(j), f)
    }

    /// `λ` with `g = λ f`, if any.
    pub fn proportionality(f: &PolyX<S>, g: &PolyX<S>) -> std::result::Result<S, Option<Exps>> {
        let Some((e0, c0)) = f.terms().first() else {
            return Err(None);
        };
        let lambda = g
            .coeff(e0)
            .cloned()
            .unwrap_or_else(S::zero)
            .mul(&c0.inv().expect("stored coefficients are nonzero"));
        let rest = g.sub(&f.scale(&lambda));
        match rest.terms().first() {
            None => Ok(lambda),
            Some((e, _)) => Err(Some(e.clone())),
        }
    }

    /// Checks that `f` is an eigenvector of every `Y^{t(ε_j)}`; returns the eigenvalues.
    pub fn eigencheck(&self, f: &PolyX<S>) -> Result<EigenOutcome<S>> {
        let mut values = Vec::with_capacity(self.n);
        for j in 1..=self.n {
            let g = self.apply_y(j, f)?;
            match Self::proportionality(f, &g) {
                Ok(l) => values.push(l),
                Err(witness) => return Ok(EigenOutcome::NotEigen { j, witness }),
            }
        }
        Ok(EigenOutcome::Eigen(values))
    }
}

impl BasicRep<ParamRat> {
    pub fn symbolic(n: usize, images: &[Exps]) -> Result<Self> {
        Self::with(n, images, |e| Ok(ParamRat::mono(e.clone())))
    }

    pub fn generic(n: usize) -> Result<Self> {
        Self::symbolic(n, &identity_images())
    }
}

impl BasicRep<num_rational::BigRational> {
    pub fn at_point(n: usize, images: &[Exps], pt: &EvalPoint) -> Result<Self> {
        Self::with(n, images, |e| {
            pt.eval_poly(&crate::algebra::Poly::monomial(e.clone(), <num_rational::BigRational as num_traits::One>::one()))
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum EigenOutcome<S> {
    Eigen(Vec<S>),
    /// `Y^{t(ε_j)} f` is not proportional to `f`; `witness` is an offending monomial.
    NotEigen { j: usize, witness: Option<Exps> },
}

impl<S> EigenOutcome<S> {
    pub fn is_eigen(&self) -> bool {
        matches!(self, EigenOutcome::Eigen(_))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenReport {
    pub system: String,
    pub n: usize,
    pub mu: Vec<i32>,
    pub mode: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigenvalues: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

/// Integer exponent vectors with `Σ|μ_i| ≤ deg`, doubled, in a fixed order.
pub fn monomials_up_to(n: usize, deg: i32) -> Vec<Exps> {
    let mut out: Vec<Vec<i32>> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-deg..=deg).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.into_iter()
        .filter(|v| v.iter().map(|x| x.abs()).sum::<i32>() <= deg)
        .map(|v| v.iter().map(|x| 2 * x).collect())
        .collect()
}

/// The braid relations of the affine Weyl group with `T_i` in place of `s_i`, as pairs of
/// words (applied right to left).
pub fn braid_words(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let alt = |a: usize, b: usize, m: usize| -> Vec<usize> { (0..m).map(|k| if k % 2 == 0 { a } else { b }).collect() };
    let mut out = Vec::new();
    for i in 0..=n {
        for j in i + 2..=n {
            out.push((alt(i, j, 2), alt(j, i, 2)));
        }
    }
    for j in 1..n.saturating_sub(1) {
        out.push((alt(j, j + 1, 3), alt(j + 1, j, 3)));
    }
    out.push((alt(0, 1, 4), alt(1, 0, 4)));
    out.push((alt(n - 1, n, 4), alt(n, n - 1, 4)));
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct OperatorReport {
    pub n: usize,
    pub degree: i32,
    pub monomials: usize,
    pub quadratic_checks: usize,
    pub braid_checks: usize,
    pub status: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl OperatorReport {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Quadratic relation `(T_i − τ_i)(T_i + τ_i^{-1}) = 0` and the braid relations, symbolically
/// on every monomial of degree at most `deg`.
pub fn check_operator_identities(n: usize, deg: i32) -> Result<OperatorReport> {
    let rep = BasicRep::generic(n)?;
    let monos = monomials_up_to(n, deg);
    let braids = braid_words(n);
    let mut failures = Vec::new();
    let (mut quad, mut braid) = (0, 0);
    for e in &monos {
        let f = PolyX::monomial(e.clone(), ParamRat::one());
        for i in 0..=n {
            let tf = rep.apply_t(i, &f, 1)?;
            let ttf = rep.apply_t(i, &tf, 1)?;
            let rest = ttf.sub(&tf.scale(&rep.gens[i].d)).sub(&f);
            quad += 1;
            if !rest.is_zero() {
                failures.push(format!("quadratic T{i} on x^{:?}", e.to_vec()));
            }
        }
        for (l, r) in &braids {
            let word = |w: &[usize]| -> Vec<(usize, i32)> { w.iter().map(|&i| (i, 1)).collect() };
            braid += 1;
            if rep.apply_word(&word(l), &f)? != rep.apply_word(&word(r), &f)? {
                failures.push(format!("braid {l:?} = {r:?} on x^{:?}", e.to_vec()));
            }
        }
    }
    Ok(OperatorReport {
        n,
        degree: deg,
        monomials: monos.len(),
        quadratic_checks: quad,
        braid_checks: braid,
        status: if failures.is_empty() { "pass" } else { "fail" }.to_string(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use num_rational::BigRational;

    fn mono(e: &[i32]) -> PolyX<ParamRat> {
        PolyX::monomial(e.iter().copied().collect(), ParamRat::one())
    }

    #[test]
    fn t_on_one_is_tau() {
        let rep = BasicRep::generic(2).unwrap();
        let one = PolyX::one(2);
        let t0 = rep.apply_t(0, &one, 1).unwrap();
        assert_eq!(t0, PolyX::constant(2, ParamRat::mono(pmono(&[(Param::T0, 1)]))));
    }

    #[test]
    fn inverse_undoes() {
        let rep = BasicRep::generic(2).unwrap();
        let f = mono(&[2, -4]).add(&mono(&[0, 2]));
        for i in 0..=2 {
            let g = rep.apply_t(i, &f, 1).unwrap();
            assert_eq!(rep.apply_t(i, &g, -1).unwrap(), f);
        }
    }

    #[test]
    fn operator_identities_n2_degree1() {
        let r = check_operator_identities(2, 1).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn y_operators_commute() {
        let rep = BasicRep::generic(2).unwrap();
        let f = mono(&[2, 0]).add(&mono(&[-2, 2]));
        let a = rep.apply_y(1, &rep.apply_y(2, &f).unwrap()).unwrap();
        let b = rep.apply_y(2, &rep.apply_y(1, &f).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sum_of_coordinates_is_not_eigen() {
        let pt = EvalPoint::random(7);
        let rep = BasicRep::<BigRational>::at_point(2, &identity_images(), &pt).unwrap();
        let f = PolyX::from_terms(2, vec![([2, 0].into_iter().collect(), rat(1, 1)), ([0, 2].into_iter().collect(), rat(1, 1))]);
        assert!(!rep.eigencheck(&f).unwrap().is_eigen());
    }
}
