//! Comparisons between the specialized Koornwinder polynomial and the Ram-Yip polynomials.

use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::{EvalPoint, ParamRat, PolyX, Scalar};
use crate::error::{Error, Result};
use crate::hecke::{BasicRep, EigenOutcome, EigenReport};
use crate::parallel::Exec;
use crate::ramyip::{SystemKind, DEFAULT_WALK_BUDGET};
use crate::ramyip::RYSystem;
use crate::tables::{table2, RyType};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    /// `points` seeded rational points.
    Eval { points: usize, seed: u64 },
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Eval { .. } => "eval",
        }
    }
}

/// All `μ ∈ {−b..b}^n` in lexicographic order.
pub fn mu_box(n: usize, b: i32) -> Vec<Vec<i32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-b..=b).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Tries per requested point before giving up on a seed family.
const POINT_RETRIES: u64 = 8;

/// The `k`-th admissible point of the family `seed`, retrying past points where `f` hits a
/// vanishing denominator.
pub fn with_point<T>(seed: u64, k: usize, mut f: impl FnMut(&EvalPoint) -> Result<T>) -> Result<T> {
    let mut last = None;
    for attempt in 0..POINT_RETRIES {
        let pt = EvalPoint::seeded(seed, k as u64 * POINT_RETRIES + attempt);
        match f(&pt) {
            Err(Error::BadEvaluationPoint(m)) => last = Some(m),
            other => return other,
        }
    }
    Err(Error::BadEvaluationPoint(last.unwrap_or_default()))
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DiffEntry {
    pub exp: Vec<i32>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RyReport {
    #[serde(rename = "type")]
    pub ty: String,
    pub n: usize,
    pub mu: Vec<i32>,
    pub mode: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diff: Option<Vec<DiffEntry>>,
}

impl RyReport {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Monomials where two x-polynomials differ.
pub fn poly_diff<S: Scalar + std::fmt::Display>(a: &PolyX<S>, b: &PolyX<S>) -> Vec<DiffEntry> {
    let mut out = Vec::new();
    let (ta, tb) = (a.terms(), b.terms());
    let (mut i, mut j) = (0, 0);
    let show = |c: Option<&S>| c.map_or_else(|| "0".to_string(), |c| c.to_string());
    while i < ta.len() || j < tb.len() {
        let ord = match (ta.get(i), tb.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => std::cmp::Ordering::Less,
            _ => std::cmp::Ordering::Greater,
        };
        match ord {
            std::cmp::Ordering::Equal => {
                if ta[i].1 != tb[j].1 {
                    out.push(DiffEntry { exp: ta[i].0.to_vec(), lhs: show(Some(&ta[i].1)), rhs: show(Some(&tb[j].1)) });
                }
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Less => {
                out.push(DiffEntry { exp: ta[i].0.to_vec(), lhs: show(Some(&ta[i].1)), rhs: show(None) });
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(DiffEntry { exp: tb[j].0.to_vec(), lhs: show(None), rhs: show(Some(&tb[j].1)) });
                j += 1;
            }
        }
    }
    out
}

pub fn ry_system_kind(ty: RyType) -> SystemKind {
    match ty {
        RyType::B => SystemKind::BRY,
        RyType::C => SystemKind::CRY,
        RyType::D => SystemKind::DRY,
    }
}

/// Both sides of a Ram-Yip proposition, computed independently.
pub struct RySides {
    pub lhs: RYSystem,
    pub rhs: RYSystem,
}

pub fn ry_sides(ty: RyType, n: usize) -> RySides {
    RySides {
        lhs: RYSystem::specialized(SystemKind::CC, n, &table2(ty)),
        rhs: RYSystem::new(ry_system_kind(ty), n),
    }
}

/// Compares `E_μ` under the Table 2 rule with the type-`ty` Ram-Yip polynomial.
pub fn verify_ry_proposition(ty: RyType, n: usize, mu: &[i32], mode: Mode, exec: &Exec) -> Result<RyReport> {
    let sides = ry_sides(ty, n);
    let diff = match mode {
        Mode::Exact => {
            let l = sides.lhs.nonsymmetric_poly(mu, DEFAULT_WALK_BUDGET, exec)?;
            let r = sides.rhs.nonsymmetric_poly(mu, DEFAULT_WALK_BUDGET, exec)?;
            poly_diff::<ParamRat>(&l.poly, &r.poly)
        }
        Mode::Eval { points, seed } => {
            let mut all = Vec::new();
            for k in 0..points {
                let d = with_point(seed, k, |pt| {
                    let l = sides.lhs.nonsymmetric_poly_eval(mu, pt, DEFAULT_WALK_BUDGET, exec)?;
                    let r = sides.rhs.nonsymmetric_poly_eval(mu, pt, DEFAULT_WALK_BUDGET, exec)?;
                    Ok(poly_diff::<BigRational>(&l, &r))
                })?;
                if !d.is_empty() {
                    all = d;
                    break;
                }
            }
            all
        }
    };
    Ok(RyReport {
        ty: ty.name().to_string(),
        n,
        mu: mu.to_vec(),
        mode: mode.name().to_string(),
        status: if diff.is_empty() { "pass" } else { "fail" }.to_string(),
        diff: (!diff.is_empty()).then_some(diff),
    })
}

/// Eigen-checks `E_μ` of `sys`, recomputing it at each evaluation point in eval mode.
pub fn eigencheck_system(sys: &RYSystem, mu: &[i32], mode: Mode, exec: &Exec) -> Result<EigenReport> {
    match mode {
        Mode::Exact => {
            let e = sys.nonsymmetric_poly(mu, DEFAULT_WALK_BUDGET, exec)?;
            eigencheck_poly(sys, mu, &e.poly, mode)
        }
        Mode::Eval { .. } => eigencheck_with(sys, mu, mode, |pt| {
            sys.nonsymmetric_poly_eval(mu, pt, DEFAULT_WALK_BUDGET, exec)
        }),
    }
}

/// Eigen-checks an already computed polynomial `e` of `sys`.
pub fn eigencheck_poly(sys: &RYSystem, mu: &[i32], e: &PolyX<ParamRat>, mode: Mode) -> Result<EigenReport> {
    match mode {
        Mode::Exact => {
            let rep = BasicRep::symbolic(sys.n(), &rep_images(sys))?;
            let (status, eigenvalues, failure) = outcome(rep.eigencheck(e)?);
            Ok(report(sys, mu, mode, status, eigenvalues, failure))
        }
        Mode::Eval { .. } => eigencheck_with(sys, mu, mode, |pt| e.evaluate(pt)),
    }
}

fn eigencheck_with(
    sys: &RYSystem,
    mu: &[i32],
    mode: Mode,
    poly_at: impl Fn(&EvalPoint) -> Result<PolyX<BigRational>>,
) -> Result<EigenReport> {
    let Mode::Eval { points, seed } = mode else {
        unreachable!("eval mode only")
    };
    let n = sys.n();
    let images = rep_images(sys);
    let mut values = Vec::new();
    for k in 0..points {
        let o = with_point(seed, k, |pt| {
            let e = poly_at(pt)?;
            let rep = BasicRep::<BigRational>::at_point(n, &images, pt)?;
            Ok(outcome(rep.eigencheck(&e)?))
        })?;
        match o {
            (_, Some(vals), None) => values.extend(vals),
            (status, _, failure) => return Ok(report(sys, mu, mode, status, None, failure)),
        }
    }
    Ok(report(sys, mu, mode, "pass".into(), Some(values), None))
}

fn report(
    sys: &RYSystem,
    mu: &[i32],
    mode: Mode,
    status: String,
    eigenvalues: Option<Vec<String>>,
    failure: Option<String>,
) -> EigenReport {
    EigenReport {
        system: sys.kind().name().to_string(),
        n: sys.n(),
        mu: mu.to_vec(),
        mode: mode.name().to_string(),
        status,
        eigenvalues,
        failure,
    }
}

fn outcome<S: std::fmt::Display>(o: EigenOutcome<S>) -> (String, Option<Vec<String>>, Option<String>) {
    match o {
        EigenOutcome::Eigen(v) => ("pass".into(), Some(v.iter().map(|x| x.to_string()).collect()), None),
        EigenOutcome::NotEigen { j, witness } => (
            "fail".into(),
            None,
            Some(format!("Y^t(e{j}) not proportional at x-exponent {:?}", witness.map(|w| w.to_vec()))),
        ),
    }
}

/// The Noumi parameters seen by the basic representation for `sys`: the system's own
/// assignment for the Koornwinder case, the Table 2 rule for a Ram-Yip system.
pub fn rep_images(sys: &RYSystem) -> Vec<crate::algebra::Exps> {
    match sys.kind() {
        SystemKind::CC => sys.images().to_vec(),
        SystemKind::BRY => table2(RyType::B).images(),
        SystemKind::CRY => table2(RyType::C).images(),
        SystemKind::DRY => table2(RyType::D).images(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ry_small_exact() {
        for ty in [RyType::B, RyType::C, RyType::D] {
            for mu in [[0, 0], [1, 0], [0, -1], [-1, 1]] {
                let r = verify_ry_proposition(ty, 2, &mu, Mode::Exact, &Exec::Sequential).unwrap();
                assert!(r.passed(), "{}", serde_json::to_string(&r).unwrap());
            }
        }
    }

    #[test]
    fn koornwinder_is_eigen() {
        let sys = RYSystem::new(SystemKind::CC, 2);
        for mu in [[1, 0], [0, -1]] {
            let r = eigencheck_system(&sys, &mu, Mode::Eval { points: 2, seed: 3 }, &Exec::Sequential).unwrap();
            assert_eq!(r.status, "pass", "{:?}", r);
        }
    }
}
