//! Ram-Yip alcove-walk sums for `(C∨,C)` and the three Ram-Yip systems of types C, B and D.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;

use crate::algebra::paramrat::substitute_exps;
use crate::algebra::poly::{exps_add, exps_half, exps_neg, exps_zero};
use crate::algebra::{EvalPoint, Exps, Param, ParamRat, Poly, PolyX, Scalar, NPARAMS};
use crate::error::{Error, Result};
use crate::parallel::Exec;
use crate::roots::{AffineFn, Vector};
use crate::tables::{identity_images, SpecRule};
use crate::walks::beta_roots;
use crate::weyl::{Group, GroupElement, GroupTag, Word};

pub const DEFAULT_WALK_BUDGET: usize = 20;

/// Bits fixed per parallel chunk (at most).
const CHUNK_BITS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SystemKind {
    /// `(C∨_n, C_n)`, the Koornwinder case.
    CC,
    CRY,
    BRY,
    DRY,
}

impl SystemKind {
    pub const ALL: [SystemKind; 4] = [SystemKind::CC, SystemKind::CRY, SystemKind::BRY, SystemKind::DRY];

    pub fn name(self) -> &'static str {
        match self {
            SystemKind::CC => "cc",
            SystemKind::CRY => "c-ry",
            SystemKind::BRY => "b-ry",
            SystemKind::DRY => "d-ry",
        }
    }

    pub fn group_tag(self) -> GroupTag {
        match self {
            SystemKind::CC => GroupTag::W,
            SystemKind::CRY => GroupTag::CvRY,
            SystemKind::BRY => GroupTag::BvRY,
            SystemKind::DRY => GroupTag::D,
        }
    }

    /// Parameters the polynomial depends on.
    pub fn params(self) -> &'static [Param] {
        match self {
            SystemKind::CC => &[Param::Q, Param::T, Param::T0, Param::Tn, Param::U0, Param::Un],
            SystemKind::CRY => &[Param::Q, Param::Ts, Param::Tm],
            SystemKind::BRY => &[Param::Q, Param::Tm, Param::Tl],
            SystemKind::DRY => &[Param::Q, Param::T],
        }
    }
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SystemKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let k = s.to_ascii_lowercase().replace('_', "-");
        match k.as_str() {
            "cc" | "koornwinder" => Ok(SystemKind::CC),
            "c-ry" | "cry" | "c" => Ok(SystemKind::CRY),
            "b-ry" | "bry" | "b" => Ok(SystemKind::BRY),
            "d-ry" | "dry" | "d" => Ok(SystemKind::DRY),
            _ => Err(Error::Domain(format!("unknown system {s:?}"))),
        }
    }
}

/// The ψ-function attached to a generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsiKind {
    /// `±(p^{-1/2} − p^{1/2}) / (1 − z^{±1})`
    Single(Param),
    /// `±((a^{-1/2} − a^{1/2}) + z^{±1/2}(b^{-1/2} − b^{1/2})) / (1 − z^{±1})`
    Double(Param, Param),
}

/// A Ram-Yip system together with a parameter assignment applied factor by factor.
#[derive(Clone, Debug)]
pub struct RYSystem {
    kind: SystemKind,
    group: Group,
    images: Vec<Exps>,
    rule: Option<&'static str>,
}

fn rho_pairing(alpha: &[i32]) -> i32 {
    // ⟨Σ (n−i) ε_i, α⟩
    let n = alpha.len() as i32;
    alpha.iter().enumerate().map(|(j, a)| (n - 1 - j as i32) * a).sum()
}

impl RYSystem {
    pub fn new(kind: SystemKind, n: usize) -> Self {
        RYSystem { kind, group: Group::new(kind.group_tag(), n), images: identity_images(), rule: None }
    }

    /// The system with its parameters replaced according to `rule` before any factor is formed.
    pub fn specialized(kind: SystemKind, n: usize, rule: &SpecRule) -> Self {
        RYSystem { kind, group: Group::new(kind.group_tag(), n), images: rule.images(), rule: Some(rule.name) }
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn rule(&self) -> Option<&'static str> {
        self.rule
    }

    pub fn images(&self) -> &[Exps] {
        &self.images
    }

    /// `q^{sh(a)} t^{hgt(a)}` over the system's own parameters, doubled.
    pub fn sh_hgt_monomial(&self, a: &AffineFn) -> Result<Exps> {
        if a.is_constant() {
            return Err(Error::NotARoot(a.to_string()));
        }
        let (alpha, r2): (Vector, i32) = match self.kind {
            SystemKind::CRY => {
                // evaluated on the coroot
                let aa = a.inner(a);
                let alpha = a.alpha.iter().map(|x| 2 * x / aa).collect();
                if (2 * a.r2) % aa != 0 {
                    return Err(Error::NotARoot(a.to_string()));
                }
                (alpha, 2 * a.r2 / aa)
            }
            _ => (a.alpha.clone(), a.r2),
        };
        let rho = rho_pairing(&alpha);
        let sum: i32 = alpha.iter().sum();
        let mut e = exps_zero(NPARAMS);
        e[Param::Q.index()] = -r2;
        match self.kind {
            SystemKind::CC => {
                e[Param::T.index()] = 2 * rho;
                e[Param::T0.index()] = sum;
                e[Param::Tn.index()] = sum;
            }
            SystemKind::CRY => {
                e[Param::Ts.index()] = sum;
                e[Param::Tm.index()] = 2 * rho;
            }
            SystemKind::BRY => {
                e[Param::Tm.index()] = 2 * rho;
                e[Param::Tl.index()] = sum;
            }
            SystemKind::DRY => {
                e[Param::T.index()] = 2 * rho;
            }
        }
        Ok(e)
    }

    pub fn psi_kind(&self, i: usize) -> PsiKind {
        let n = self.n();
        match self.kind {
            SystemKind::CC if i == 0 => PsiKind::Double(Param::Un, Param::U0),
            SystemKind::CC if i == n => PsiKind::Double(Param::Tn, Param::T0),
            SystemKind::CC => PsiKind::Single(Param::T),
            SystemKind::CRY if i == n => PsiKind::Single(Param::Ts),
            SystemKind::CRY => PsiKind::Single(Param::Tm),
            SystemKind::BRY if i == 0 || i == n => PsiKind::Single(Param::Tl),
            SystemKind::BRY => PsiKind::Single(Param::Tm),
            SystemKind::DRY => PsiKind::Single(Param::T),
        }
    }

    /// The parameter whose square root is `τ_i` for a finite generator.
    pub fn tau_param(&self, i: usize) -> Param {
        let n = self.n();
        match self.kind {
            SystemKind::CC if i == n => Param::Tn,
            SystemKind::CC => Param::T,
            SystemKind::CRY if i == n => Param::Ts,
            SystemKind::CRY => Param::Tm,
            SystemKind::BRY if i == n => Param::Tl,
            SystemKind::BRY => Param::Tm,
            SystemKind::DRY => Param::T,
        }
    }

    fn assign(&self, p: &Poly<BigRational>) -> Result<Poly<BigRational>> {
        p.map_exps(|e| substitute_exps(e, &self.images))
    }

    /// `ψ_i^±(z)` with `z` over the system's own parameters; the assignment is applied to the
    /// numerator and the denominator separately, so a vanishing numerator gives 0 even when
    /// the denominator also vanishes.
    pub fn psi_factor(&self, i: usize, positive: bool, z: &Exps) -> Result<ParamRat> {
        let one = <BigRational as One>::one();
        let mone = -one.clone();
        let s = if positive { 1 } else { -1 };
        let zs: Exps = if positive { z.clone() } else { exps_neg(z) };
        let ph = |p: Param, k: i32| crate::algebra::pmono(&[(p, k)]);
        let diff = |p: Param| vec![(ph(p, -1), one.clone()), (ph(p, 1), mone.clone())];
        let mut num_terms = match self.psi_kind(i) {
            PsiKind::Single(p) => diff(p),
            PsiKind::Double(a, b) => {
                let zh = exps_half(&zs)?;
                let mut t = diff(a);
                for (e, c) in diff(b) {
                    t.push((exps_add(&e, &zh), c));
                }
                t
            }
        };
        if s < 0 {
            for t in &mut num_terms {
                t.1 = -t.1.clone();
            }
        }
        let num = self.assign(&Poly::from_terms(num_terms))?;
        if num.is_zero() {
            return Ok(ParamRat::zero());
        }
        let den = self.assign(&Poly::from_terms(vec![(exps_zero(NPARAMS), one), (zs, mone)]))?;
        if den.is_zero() {
            let z = crate::algebra::text::format_monomial(crate::algebra::param_ring().names(), z);
            return Err(Error::SingularFactor { index: i, z });
        }
        ParamRat::new(num, [den])
    }

    /// Doubled exponents of `t_{dir}^{1/2}`, after the assignment.
    pub fn t_dir_factor(&self, dir: &GroupElement) -> Result<Exps> {
        let word = self.group.finite_word(&dir.finite_part());
        let mut e = exps_zero(NPARAMS);
        for i in word {
            e[self.tau_param(i).index()] += 1;
        }
        substitute_exps(&e, &self.images)
    }

    /// `w(μ)` as a word with its automorphism prefix.
    pub fn walk_type(&self, mu: &[i32]) -> Result<Word> {
        if mu.len() != self.n() {
            return Err(Error::Domain(format!("μ has {} entries, n = {}", mu.len(), self.n())));
        }
        Ok(self.group.reduced_word(&self.group.min_coset_rep(mu)?))
    }

    /// Everything about `μ` that does not depend on the walk: the word, start, roots and ψ^± per step.
    pub fn plan(&self, mu: &[i32], budget: usize) -> Result<WalkPlan> {
        let word = self.walk_type(mu)?;
        self.plan_for_word(word, budget)
    }

    pub fn plan_for_word(&self, word: Word, budget: usize) -> Result<WalkPlan> {
        if word.len() > budget {
            return Err(Error::WalkBudget { length: word.len(), budget });
        }
        let start = match word.pi {
            Some(p) => self.group.gen(crate::weyl::Gen::Pi(p))?,
            None => self.group.identity(),
        };
        let betas = beta_roots(&self.group, &word.letters);
        let mut psi = Vec::with_capacity(word.len());
        for (&i, beta) in word.letters.iter().zip(&betas) {
            let z = self.sh_hgt_monomial(&beta.neg())?;
            psi.push([self.psi_factor(i, true, &z)?, self.psi_factor(i, false, &z)?]);
        }
        Ok(WalkPlan { kind: self.kind, n: self.n(), word, start, betas, psi })
    }

    /// The exact polynomial `E_μ`.
    pub fn nonsymmetric_poly(&self, mu: &[i32], budget: usize, exec: &Exec) -> Result<NSPolynomial> {
        let plan = self.plan(mu, budget)?;
        let poly = self.walk_sum(&plan, exec, &|p: &ParamRat| Ok(p.clone()), &|e: &Exps| {
            Ok(ParamRat::mono(e.clone()))
        })?;
        Ok(NSPolynomial::new(self, mu, plan.word, poly))
    }

    /// `E_μ` with every parameter evaluated at `pt`.
    pub fn nonsymmetric_poly_eval(
        &self,
        mu: &[i32],
        pt: &EvalPoint,
        budget: usize,
        exec: &Exec,
    ) -> Result<PolyX<BigRational>> {
        let plan = self.plan(mu, budget)?;
        self.walk_sum(&plan, exec, &|p: &ParamRat| p.evaluate(pt), &|e: &Exps| {
            pt.eval_poly(&Poly::monomial(e.clone(), <BigRational as One>::one()))
        })
    }

    /// `Σ_p f_p t_{dir(p)}^{1/2} x^{wgt(p)}` over the walks of a plan.
    pub fn walk_sum<S: Scalar>(
        &self,
        plan: &WalkPlan,
        exec: &Exec,
        lift: &(dyn Fn(&ParamRat) -> Result<S> + Sync),
        lift_mono: &(dyn Fn(&Exps) -> Result<S> + Sync),
    ) -> Result<PolyX<S>> {
        let psi: Vec<[S; 2]> = plan
            .psi
            .iter()
            .map(|[p, m]| Ok([lift(p)?, lift(m)?]))
            .collect::<Result<_>>()?;
        let r = plan.word.len();
        let prefix = r.min(CHUNK_BITS);
        let ctx = SumCtx { sys: self, plan, psi: &psi, lift_mono };
        let chunks = exec.map_ordered(1usize << prefix, |c| ctx.chunk(c as u64, prefix));
        let mut acc: BTreeMap<Vector, S> = BTreeMap::new();
        for chunk in chunks {
            for (k, v) in chunk? {
                match acc.get_mut(&k) {
                    Some(a) => *a = a.add(&v),
                    None => {
                        acc.insert(k, v);
                    }
                }
            }
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k.iter().copied().collect::<Exps>(), c))
            .collect();
        Ok(PolyX::from_terms(self.n(), terms))
    }
}

/// Walk-independent data of one sum.
#[derive(Clone, Debug)]
pub struct WalkPlan {
    pub kind: SystemKind,
    pub n: usize,
    pub word: Word,
    pub start: GroupElement,
    pub betas: Vec<AffineFn>,
    /// `[ψ^+, ψ^-]` for each step.
    pub psi: Vec<[ParamRat; 2]>,
}

struct SumCtx<'a, S> {
    sys: &'a RYSystem,
    plan: &'a WalkPlan,
    psi: &'a [[S; 2]],
    lift_mono: &'a (dyn Fn(&Exps) -> Result<S> + Sync),
}

impl<S: Scalar> SumCtx<'_, S> {
    /// Sum over the walks whose first `prefix` bits spell `c`, in counter order.
    fn chunk(&self, c: u64, prefix: usize) -> Result<BTreeMap<Vector, S>> {
        let g = self.sys.group();
        let letters = &self.plan.word.letters;
        let mut v = self.plan.start.clone();
        let mut f = S::one();
        for (k, &i) in letters.iter().enumerate().take(prefix) {
            let bit = (c >> (prefix - 1 - k)) & 1 == 1;
            match self.step(g, &v, &f, k, i, bit) {
                Some((nv, nf)) => {
                    v = nv;
                    f = nf;
                }
                None => return Ok(BTreeMap::new()),
            }
        }
        let mut out = BTreeMap::new();
        let mut tau_cache: HashMap<GroupElement, S> = HashMap::new();
        self.dfs(g, prefix, v, f, &mut out, &mut tau_cache)?;
        Ok(out)
    }

    /// One step; `None` when the walk's weight vanishes.
    fn step(&self, g: &Group, v: &GroupElement, f: &S, k: usize, i: usize, bit: bool) -> Option<(GroupElement, S)> {
        if bit {
            return Some((v.mul(g.s(i)).expect("same group"), f.clone()));
        }
        let gamma = v.apply(g.root(i).as_fn());
        let factor = &self.psi[k][if gamma.finite_positive() { 0 } else { 1 }];
        if factor.is_zero() {
            return None;
        }
        Some((v.clone(), f.mul(factor)))
    }

    fn dfs(
        &self,
        g: &Group,
        k: usize,
        v: GroupElement,
        f: S,
        out: &mut BTreeMap<Vector, S>,
        tau_cache: &mut HashMap<GroupElement, S>,
    ) -> Result<()> {
        let letters = &self.plan.word.letters;
        if k == letters.len() {
            let dir = v.finite_part();
            let tau = match tau_cache.get(&dir) {
                Some(t) => t.clone(),
                None => {
                    let t = (self.lift_mono)(&self.sys.t_dir_factor(&dir)?)?;
                    tau_cache.insert(dir, t.clone());
                    t
                }
            };
            let term = f.mul(&tau);
            match out.get_mut(&v.trans2) {
                Some(a) => *a = a.add(&term),
                None => {
                    out.insert(v.trans2.clone(), term);
                }
            }
            return Ok(());
        }
        for bit in [false, true] {
            if let Some((nv, nf)) = self.step(g, &v, &f, k, letters[k], bit) {
                self.dfs(g, k + 1, nv, nf, out, tau_cache)?;
            }
        }
        Ok(())
    }
}

/// `E_μ` with its provenance.
#[derive(Clone, Debug)]
pub struct NSPolynomial {
    pub system: SystemKind,
    pub rule: Option<&'static str>,
    pub mu: Vec<i32>,
    pub word: Word,
    pub poly: PolyX<ParamRat>,
}

impl NSPolynomial {
    fn new(sys: &RYSystem, mu: &[i32], word: Word, poly: PolyX<ParamRat>) -> Self {
        NSPolynomial { system: sys.kind(), rule: sys.rule(), mu: mu.to_vec(), word, poly }
    }

    /// Coefficient of `x^μ`, reported as a diagnostic only.
    pub fn leading_coefficient(&self) -> Option<&ParamRat> {
        let d: Vec<i32> = self.mu.iter().map(|m| 2 * m).collect();
        self.poly.coeff(&d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::pmono;

    #[test]
    fn sh_hgt_examples() {
        let sys = RYSystem::new(SystemKind::CC, 3);
        let a: AffineFn = "+2e1-c".parse().unwrap();
        let mut a = a;
        a.alpha.resize(3, 0);
        let e = sys.sh_hgt_monomial(&a).unwrap();
        assert_eq!(e, pmono(&[(Param::Q, 2), (Param::T, 8), (Param::T0, 2), (Param::Tn, 2)]));
        let a1 = sys.group().root(1).as_fn().clone();
        assert_eq!(sys.sh_hgt_monomial(&a1).unwrap(), pmono(&[(Param::T, 2)]));
    }

    #[test]
    fn psi0_vanishes_when_u_trivial() {
        let rule = crate::tables::table2(crate::tables::RyType::C);
        let sys = RYSystem::specialized(SystemKind::CC, 2, &rule);
        let z = pmono(&[(Param::Q, 2), (Param::T, 2)]);
        assert!(sys.psi_factor(0, true, &z).unwrap().is_zero());
        assert!(sys.psi_factor(0, false, &z).unwrap().is_zero());
    }

    #[test]
    fn e0_is_one() {
        for kind in SystemKind::ALL {
            let sys = RYSystem::new(kind, 2);
            let e = sys.nonsymmetric_poly(&[0, 0], DEFAULT_WALK_BUDGET, &Exec::Sequential).unwrap();
            assert_eq!(e.poly, PolyX::one(2));
        }
    }
}
