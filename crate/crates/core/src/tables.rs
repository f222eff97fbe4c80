//! Specialization tables and parameter dictionaries.
//!
//! Rows are data: each rule sends the five Noumi parameters `(t, t0, tn, u0, un)` to monomials
//! in `t_s, t_m, t_l` (or `t` itself for type D).

use std::fmt;

use crate::algebra::{pmono, Exps, Param, NPARAMS};
use crate::error::{Error, Result};
use crate::roots::SubsystemTag;

/// A substitution `(t, t0, tn, u0, un) ↦ row`, where each row entry is the doubled exponent
/// vector of the image of `p^1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecRule {
    pub name: &'static str,
    pub row: [Exps; 5],
}

impl SpecRule {
    fn new(name: &'static str, row: [&[(Param, i32)]; 5]) -> Self {
        SpecRule { name, row: row.map(pmono) }
    }

    /// Images of all nine parameters; everything outside the Noumi five is fixed.
    pub fn images(&self) -> Vec<Exps> {
        let mut out = identity_images();
        for (p, img) in Param::NOUMI.iter().zip(&self.row) {
            out[p.index()] = img.clone();
        }
        out
    }

    pub fn image(&self, p: Param) -> Option<&Exps> {
        Param::NOUMI.iter().position(|&q| q == p).map(|k| &self.row[k])
    }
}

impl fmt::Display for SpecRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = crate::algebra::param_ring();
        write!(f, "{}: (", self.name)?;
        for (k, img) in self.row.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            let m = crate::algebra::text::format_monomial(ring.names(), img);
            f.write_str(if m.is_empty() { "1" } else { &m })?;
        }
        f.write_str(")")
    }
}

pub fn identity_images() -> Vec<Exps> {
    Param::ALL.iter().map(|&p| pmono(&[(p, 2)])).collect()
}

use Param::{T, Tl, Tm, Ts};

/// Table 1, one row per subsystem.
pub fn table1() -> Vec<(SubsystemTag, SpecRule)> {
    let one: &[(Param, i32)] = &[];
    vec![
        (SubsystemTag::B, SpecRule::new("Bn", [&[(Tl, 2)], one, &[(Ts, 2)], one, &[(Ts, 2)]])),
        (SubsystemTag::Bv, SpecRule::new("Bvn", [&[(Ts, 2)], one, &[(Tl, 4)], one, one])),
        (SubsystemTag::C, SpecRule::new("Cn", [&[(Ts, 2)], &[(Tl, 4)], &[(Tl, 4)], one, one])),
        (
            SubsystemTag::Cv,
            SpecRule::new("Cvn", [&[(Tl, 2)], &[(Ts, 2)], &[(Ts, 2)], &[(Ts, 2)], &[(Ts, 2)]]),
        ),
        (SubsystemTag::BC, SpecRule::new("BCn", [&[(Tm, 2)], &[(Tl, 4)], &[(Ts, 2)], one, &[(Ts, 2)]])),
        (SubsystemTag::D, SpecRule::new("Dn", [&[(T, 2)], one, one, one, one])),
        (
            SubsystemTag::BcC,
            SpecRule::new(
                "BCn_Cn",
                [&[(Tm, 2)], &[(Tl, 4)], &[(Ts, 2), (Tl, 2)], one, &[(Ts, 2), (Tl, -2)]],
            ),
        ),
        (
            SubsystemTag::CvBc,
            SpecRule::new(
                "Cvn_BCn",
                [&[(Tm, 2)], &[(Ts, 2)], &[(Ts, 2), (Tl, 2)], &[(Ts, 2)], &[(Ts, 2), (Tl, -2)]],
            ),
        ),
        (
            SubsystemTag::BvB,
            SpecRule::new("Bvn_Bn", [&[(Tm, 2)], one, &[(Ts, 2), (Tl, 2)], one, &[(Ts, 2), (Tl, -2)]]),
        ),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RyType {
    B,
    C,
    D,
}

impl RyType {
    pub const ALL: [RyType; 3] = [RyType::B, RyType::C, RyType::D];

    pub fn name(self) -> &'static str {
        match self {
            RyType::B => "B",
            RyType::C => "C",
            RyType::D => "D",
        }
    }
}

/// Table 2: the specializations of the Ram-Yip propositions.
pub fn table2(ty: RyType) -> SpecRule {
    let one: &[(Param, i32)] = &[];
    match ty {
        RyType::B => SpecRule::new("ry-b", [&[(Tm, 2)], one, &[(Tl, 2)], one, &[(Tl, 2)]]),
        RyType::C => SpecRule::new("ry-c", [&[(Tm, 2)], one, &[(Ts, 2)], one, one]),
        RyType::D => SpecRule::new("ry-d", [&[(T, 2)], one, one, one, one]),
    }
}

/// Looks a rule up by its table name (`Cn`, `Bvn_Bn`, `ry-c`, …) or by subsystem name (`C`, `Bv_B`, …).
pub fn spec_rule(name: &str) -> Result<SpecRule> {
    for (tag, rule) in table1() {
        if rule.name.eq_ignore_ascii_case(name) || tag.name() == name {
            return Ok(rule);
        }
    }
    for ty in RyType::ALL {
        let r = table2(ty);
        if r.name.eq_ignore_ascii_case(name) {
            return Ok(r);
        }
    }
    Err(Error::Domain(format!("unknown specialization rule {name:?}")))
}

pub fn table1_rule(tag: SubsystemTag) -> Option<SpecRule> {
    table1().into_iter().find(|(t, _)| *t == tag).map(|(_, r)| r)
}

/// Doubled exponents over `(q^{k_1}, …, q^{k_5})`.
pub type MacExps = [i32; 5];

/// `(q^{2k_1}, q^{2k_2}, q^{2k_3}, q^{2k_4}, q^{k_5}) = (t_n u_n, t_n/u_n, t_0 u_0, t_0/u_0, t)`,
/// as a change of exponent basis. Input is doubled over `(t, t0, tn, u0, un)`.
pub fn macdonald_from_noumi(e: &[i32; 5]) -> MacExps {
    let [t, t0, tn, u0, un] = *e;
    [tn + un, tn - un, t0 + u0, t0 - u0, t]
}

pub fn noumi_from_macdonald(f: &MacExps) -> Result<[i32; 5]> {
    let [k1, k2, k3, k4, k5] = *f;
    let half = |x: i32| -> Result<i32> {
        if x % 2 != 0 {
            Err(Error::QuarterExponent(format!("{f:?}")))
        } else {
            Ok(x / 2)
        }
    };
    Ok([k5, half(k3 + k4)?, half(k1 + k2)?, half(k3 - k4)?, half(k1 - k2)?])
}

/// `q^{k_i}` written over the parameters (doubled), via the dictionary.
pub fn q_power_k(i: usize) -> Exps {
    let mut f = [0; 5];
    f[i - 1] = 2;
    let e = noumi_from_macdonald(&f).expect("q^{k_i} has half-integral Noumi exponents");
    noumi_to_params(&e)
}

pub fn noumi_to_params(e: &[i32; 5]) -> Exps {
    let mut out = crate::algebra::poly::exps_zero(NPARAMS);
    for (p, k) in Param::NOUMI.iter().zip(e) {
        out[p.index()] = *k;
    }
    out
}

/// `(τ_0, τ_n, τ_0', τ_n', τ_j)` as parameter monomials (doubled).
pub fn tau_dictionary() -> [Exps; 5] {
    [
        pmono(&[(Param::T0, 1)]),
        pmono(&[(Param::Tn, 1)]),
        pmono(&[(Param::U0, 1)]),
        pmono(&[(Param::Un, 1)]),
        pmono(&[(Param::T, 1)]),
    ]
}

/// Formal symbols of the Koornwinder dictionary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KSym {
    Q,
    A,
    B,
    C,
    D,
    TB,
    AB,
    BB,
}

const NK: usize = 8;

/// `±Π sym^{doubled/2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMono {
    pub sign: i8,
    pub exps: [i32; NK],
}

impl SignedMono {
    pub fn one() -> Self {
        SignedMono { sign: 1, exps: [0; NK] }
    }

    pub fn sym(s: KSym, doubled: i32) -> Self {
        let mut m = Self::one();
        m.exps[s as usize] = doubled;
        m
    }

    pub fn neg(&self) -> Self {
        SignedMono { sign: -self.sign, exps: self.exps }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(o.exps) {
            *a += b;
        }
        SignedMono { sign: self.sign * o.sign, exps }
    }

    pub fn div(&self, o: &Self) -> Self {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(o.exps) {
            *a -= b;
        }
        SignedMono { sign: self.sign * o.sign, exps }
    }

    /// Rewrites `t_B, a_B, b_B` as `t_m, t_s/t_l, t_l²`; other symbols must be absent.
    pub fn to_table_params(&self) -> Result<(i8, Exps)> {
        let e = &self.exps;
        if e[KSym::A as usize] != 0 || e[KSym::B as usize] != 0 || e[KSym::C as usize] != 0 || e[KSym::D as usize] != 0 {
            return Err(Error::Domain("a, b, c, d still present".into()));
        }
        let (tb, ab, bb) = (e[KSym::TB as usize], e[KSym::AB as usize], e[KSym::BB as usize]);
        Ok((
            self.sign,
            pmono(&[(Param::Q, e[KSym::Q as usize]), (Tm, tb), (Ts, ab), (Tl, 2 * bb - ab)]),
        ))
    }
}

/// `(t0, tn, u0, un) = (−cd/q, −ab, −c/d, −a/b)`.
pub fn koornwinder_abcd_to_noumi(a: &SignedMono, b: &SignedMono, c: &SignedMono, d: &SignedMono) -> [SignedMono; 4] {
    let q = SignedMono::sym(KSym::Q, 2);
    [c.mul(d).div(&q).neg(), a.mul(b).neg(), c.div(d).neg(), a.div(b).neg()]
}

/// The `(R_{BC_n}, S_{B_n})` values `(a, b, c, d) = (q^{1/2}, −q^{1/2}, a_B b_B^{1/2}, −b_B^{1/2})`.
pub fn koornwinder_bcb_abcd() -> [SignedMono; 4] {
    let qh = SignedMono::sym(KSym::Q, 1);
    let bh = SignedMono::sym(KSym::BB, 1);
    [qh.clone(), qh.neg(), SignedMono::sym(KSym::AB, 2).mul(&bh), bh.neg()]
}

/// The `(R_{BC_n}, S_{B_n})` rule rewritten in Noumi form `(t, t0, tn, u0, un)`.
///
/// With `exchanged`, the pairs `(a, b)` and `(c, d)` are swapped before applying the dictionary.
pub fn koornwinder_bcb_noumi(exchanged: bool) -> [SignedMono; 5] {
    let [a, b, c, d] = koornwinder_bcb_abcd();
    let [t0, tn, u0, un] = if exchanged {
        koornwinder_abcd_to_noumi(&c, &d, &a, &b)
    } else {
        koornwinder_abcd_to_noumi(&a, &b, &c, &d)
    };
    [SignedMono::sym(KSym::TB, 2), t0, tn, u0, un]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cn_row() {
        let r = spec_rule("Cn").unwrap();
        assert_eq!(r.row[0], pmono(&[(Ts, 2)]));
        assert_eq!(r.row[1], pmono(&[(Tl, 4)]));
        assert_eq!(r.row[3], pmono(&[]));
        assert_eq!(r.to_string(), "Cn: (ts, tl^2, tl^2, 1, 1)");
    }

    #[test]
    fn dictionary_round_trip() {
        // t_n u_n ↦ q^{2k_1}
        assert_eq!(macdonald_from_noumi(&[0, 0, 2, 0, 2]), [4, 0, 0, 0, 0]);
        let t32 = [3, 0, 0, 0, 0];
        assert_eq!(noumi_from_macdonald(&macdonald_from_noumi(&t32)).unwrap(), t32);
        assert!(noumi_from_macdonald(&[1, 0, 0, 0, 0]).is_err());
    }
}
