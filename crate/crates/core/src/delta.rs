//! Factors of the weight function `Δ_{S,k}` up to a cutoff in `c`, and the factor-level check of
//! its specializations to the subsystems of Table 1.
//!
//! A factor is `(1 − q^{k(2a)} e^a) / (1 − q^{k(a)} e^a)` with `e^a = x^{ᾱ} q^r` and
//! `k(2a) = 0` when `2a ∉ S`. The numerator is taken as displayed, with `e^a` (not `e^{2a}`).

use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::algebra::paramrat::substitute_exps;
use crate::algebra::poly::exps_zero;
use crate::algebra::{param_ring, pmono, Exps, Param, Poly, NPARAMS};
use crate::error::{Error, Result};
use crate::parallel::Exec;
use crate::roots::{enumerate_roots, subsystem_contains, AffineFn, AffineRoot, OrbitTag, SizeTag, SubsystemTag};
use crate::tables::{q_power_k, table1_rule};

/// One factor; `num_k` and `den_k` are the parameter monomials `q^{k(2a)}` and `q^{k(a)}`
/// (doubled exponents over the parameters).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaFactor {
    pub root: AffineFn,
    pub num_k: Exps,
    pub den_k: Exps,
}

impl DeltaFactor {
    /// `q^k e^a` over `(x_1..x_n, parameters)`.
    fn term(&self, k: &Exps) -> Exps {
        let mut e: Exps = self.root.alpha.iter().map(|a| 2 * a).collect();
        let mut p = k.clone();
        p[Param::Q.index()] += self.root.r2;
        e.extend(p);
        e
    }

    fn one_minus(&self, k: &Exps) -> Poly<BigRational> {
        let n = self.root.n();
        Poly::constant(<BigRational as One>::one(), n + NPARAMS)
            .sub(&Poly::monomial(self.term(k), <BigRational as One>::one()))
    }

    pub fn numerator(&self) -> Poly<BigRational> {
        self.one_minus(&self.num_k)
    }

    pub fn denominator(&self) -> Poly<BigRational> {
        self.one_minus(&self.den_k)
    }

    /// Applies a parameter substitution to both `k`-monomials.
    pub fn substitute(&self, images: &[Exps]) -> Result<DeltaFactor> {
        Ok(DeltaFactor {
            root: self.root.clone(),
            num_k: substitute_exps(&self.num_k, images)?,
            den_k: substitute_exps(&self.den_k, images)?,
        })
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn same_as(&self, o: &DeltaFactor) -> bool {
        self.numerator().mul(&o.denominator()) == o.numerator().mul(&self.denominator())
    }

    pub fn is_one(&self) -> bool {
        self.num_k == self.den_k
    }
}

impl fmt::Display for DeltaFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut names: Vec<String> = (1..=self.root.n()).map(|i| format!("x{i}")).collect();
        names.extend(param_ring().names().iter().cloned());
        let m = |k: &Exps| {
            let s = crate::algebra::text::format_monomial(&names, &self.term(k));
            if s.is_empty() {
                "1".to_string()
            } else {
                s
            }
        };
        write!(f, "(1 - {})/(1 - {})", m(&self.num_k), m(&self.den_k))
    }
}

/// `q^{k(a)}` for the full system, through the Macdonald/Noumi dictionary.
fn full_k(o: OrbitTag) -> Exps {
    match o {
        OrbitTag::O1 => q_power_k(1),
        OrbitTag::O2 => q_power_k(2),
        OrbitTag::O3 => q_power_k(3),
        OrbitTag::O4 => q_power_k(4),
        OrbitTag::O5 => q_power_k(5),
    }
}

/// `q^{k(a)}` in a subsystem: the parameter attached to the size of `a` there.
fn sub_k(x: SubsystemTag, size: SizeTag) -> Exps {
    let p = match (x, size) {
        (SubsystemTag::D | SubsystemTag::DRY, _) => Param::T,
        (_, SizeTag::S) => Param::Ts,
        (_, SizeTag::M) => Param::Tm,
        (_, SizeTag::L) => Param::Tl,
    };
    pmono(&[(p, 2)])
}

/// Factors for `a ∈ S^+` (`system = None`) or `a ∈ (S^0)^+`, with `c`-coefficient at most
/// `cutoff`, in the order of [`enumerate_roots`].
pub fn delta_factors(system: Option<SubsystemTag>, n: usize, cutoff: u32) -> Vec<DeltaFactor> {
    let bound = 2 * cutoff as i32;
    let zero = exps_zero(NPARAMS);
    enumerate_roots(n, bound)
        .into_iter()
        .filter(|a| a.is_positive())
        .filter_map(|a| {
            let double = a.double();
            let (num_k, den_k) = match system {
                None => (double.map_or(zero.clone(), |d| full_k(d.orbit())), full_k(a.orbit())),
                Some(x) => {
                    let size = subsystem_contains(x, &a)?;
                    let num = double
                        .and_then(|d| subsystem_contains(x, &d))
                        .map_or(zero.clone(), |s| sub_k(x, s));
                    (num, sub_k(x, size))
                }
            };
            Some(DeltaFactor { root: a.into_fn(), num_k, den_k })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DeltaFailure {
    pub root: String,
    pub specialized: String,
    pub expected: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DeltaReport {
    pub subsystem: String,
    pub rule: String,
    pub n: usize,
    pub cutoff: u32,
    pub status: String,
    /// Factors of `S` that collapse to 1.
    pub collapsed: usize,
    /// Factors of `S` matched with a factor of the subsystem.
    pub matched: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<DeltaFailure>,
}

impl DeltaReport {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Specializes each factor of `Δ_{S,k}` by the Table 1 rule of `x` and compares it with
/// `Δ_{S^0,k}` factor by factor.
pub fn check_delta_specialization(x: SubsystemTag, n: usize, cutoff: u32, exec: &Exec) -> Result<DeltaReport> {
    let rule = table1_rule(x).ok_or_else(|| Error::Domain(format!("{x} has no Table 1 row")))?;
    let images = rule.images();
    let full = delta_factors(None, n, cutoff);
    let sub = delta_factors(Some(x), n, cutoff);
    let mut sub_iter = sub.iter();

    let specialized = exec.map_ordered(full.len(), |i| full[i].substitute(&images));
    let (mut collapsed, mut matched, mut failures) = (0, 0, Vec::new());
    let fail = |a: &DeltaFactor, s: &DeltaFactor, e: String| DeltaFailure {
        root: a.root.to_string(),
        specialized: s.to_string(),
        expected: e,
    };
    for (a, s) in full.iter().zip(specialized) {
        let s = s?;
        let root = AffineRoot::new(a.root.clone())?;
        if subsystem_contains(x, &root).is_some() {
            let expected = sub_iter.next().filter(|e| e.root == a.root);
            match expected {
                Some(e) if s.same_as(e) => matched += 1,
                Some(e) => failures.push(fail(a, &s, e.to_string())),
                None => failures.push(fail(a, &s, "missing subsystem factor".into())),
            }
        } else if s.is_one() {
            collapsed += 1;
        } else {
            failures.push(fail(a, &s, "1".into()));
        }
    }
    for e in sub_iter {
        failures.push(DeltaFailure { root: e.root.to_string(), specialized: "absent".into(), expected: e.to_string() });
    }
    Ok(DeltaReport {
        subsystem: x.name().to_string(),
        rule: rule.name.to_string(),
        n,
        cutoff,
        status: if failures.is_empty() { "pass" } else { "fail" }.to_string(),
        collapsed,
        matched,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factor_of(n: usize, s: &str) -> DeltaFactor {
        let mut f: AffineFn = s.parse().unwrap();
        f.alpha.resize(n, 0);
        delta_factors(None, n, 2).into_iter().find(|d| d.root == f).unwrap()
    }

    #[test]
    fn orbit_one_pairs_k2_over_k1() {
        let d = factor_of(2, "+e1");
        assert_eq!(d.num_k, q_power_k(2));
        assert_eq!(d.den_k, q_power_k(1));
    }

    #[test]
    fn middle_root_numerator_is_one_minus_e() {
        let d = factor_of(2, "+e1-e2");
        assert_eq!(d.num_k, exps_zero(NPARAMS));
        assert_eq!(d.den_k, pmono(&[(Param::T, 2)]));
        assert_eq!(d.to_string(), "(1 - x1 x2^-1)/(1 - x1 x2^-1 t)");
    }

    #[test]
    fn all_table_rows_specialize() {
        for x in SubsystemTag::TABLE {
            let r = check_delta_specialization(x, 2, 1, &Exec::Sequential).unwrap();
            assert!(r.passed(), "{}", serde_json::to_string(&r).unwrap());
        }
    }

    #[test]
    fn cutoff_zero_keeps_finite_roots() {
        let f = delta_factors(None, 2, 0);
        assert!(f.iter().all(|d| d.root.r2 == 0));
        // ε1, ε2, 2ε1, 2ε2, ε1 ± ε2
        assert_eq!(f.len(), 6);
    }
}
