//! Presentation relations of the four groups, checked as actions on `F_ℤ`.
//!
//! Relations are kept as data in the form they are displayed. Each one also has a corrected
//! form computed from the group itself (Coxeter orders from the simple roots, conjugation
//! from the action of `π` on them), so a display typo shows up as a literal that fails next to
//! a correction that holds.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::weyl::{Gen, Group, GroupElement, GroupTag, Pi};

/// Orders larger than this are treated as infinite.
const MAX_ORDER: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelKind {
    /// `g^m = e`
    Order(Gen, usize),
    /// `s_i s_j s_i ⋯ = s_j s_i s_j ⋯`, `m` letters on each side
    Braid(usize, usize, usize),
    /// `π s_i = s_j π`
    Conj(Pi, usize, usize),
}

impl RelKind {
    pub fn sides(&self) -> (Vec<Gen>, Vec<Gen>) {
        match *self {
            RelKind::Order(g, m) => (vec![g; m], Vec::new()),
            RelKind::Braid(i, j, m) => {
                let alt = |a: usize, b: usize| (0..m).map(|k| Gen::S(if k % 2 == 0 { a } else { b })).collect();
                (alt(i, j), alt(j, i))
            }
            RelKind::Conj(p, i, j) => (vec![Gen::Pi(p), Gen::S(i)], vec![Gen::S(j), Gen::Pi(p)]),
        }
    }
}

impl fmt::Display for RelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (l, r) = self.sides();
        let side = |v: &[Gen]| {
            if v.is_empty() {
                "e".to_string()
            } else {
                v.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(".")
            }
        };
        write!(f, "{} = {}", side(&l), side(&r))
    }
}

/// The relations as displayed for `tag` and rank `n`, in display order.
pub fn literal_relations(tag: GroupTag, n: usize) -> Result<Vec<RelKind>> {
    use RelKind::*;
    let s = Gen::S;
    let mut out = Vec::new();
    let commuting = |out: &mut Vec<RelKind>, skip: &[(usize, usize)]| {
        for i in 0..=n {
            for j in i + 2..=n {
                if !skip.contains(&(i, j)) {
                    out.push(Braid(i, j, 2));
                }
            }
        }
    };
    match tag {
        GroupTag::W | GroupTag::BvRY => {
            out.extend((0..=n).map(|i| Order(s(i), 2)));
            commuting(&mut out, &[]);
            out.extend((1..=n.saturating_sub(2)).map(|j| Braid(j, j + 1, 3)));
            out.extend([Braid(0, 1, 4), Braid(n - 1, n, 4)]);
            if tag == GroupTag::BvRY {
                // the displayed index n−i+1 is kept as is, including s_{n+1} at i = 0
                out.extend((0..=n).map(|i| Conj(Pi::Bv, i, n - i + 1)));
            }
        }
        GroupTag::CvRY => {
            out.push(Conj(Pi::Cv, 0, 1));
            out.extend((1..=n).map(|i| Order(s(i), 2)));
            out.extend([Order(s(0), 2), Order(Gen::Pi(Pi::Cv), 2), Braid(0, 1, 2)]);
            commuting(&mut out, &[(0, 2)]);
            out.push(Braid(0, 2, 3));
            out.extend((1..=n.saturating_sub(2)).map(|i| Braid(i, i + 1, 3)));
            out.push(Braid(n - 1, n, 4));
        }
        GroupTag::D => {
            if n < 3 {
                return Err(Error::Domain("the type D presentation is displayed for n ≥ 3".into()));
            }
            out.extend((0..=n).map(|i| Order(s(i), 2)));
            out.extend([Braid(0, 1, 2), Braid(n - 1, n, 2)]);
            commuting(&mut out, &[]);
            out.extend([Braid(0, 2, 3), Braid(n, n - 2, 3)]);
            out.extend((1..=n - 2).map(|i| Braid(i, i + 1, 3)));
            out.extend([
                Conj(Pi::D1, 0, 1),
                Conj(Pi::DNm1, 0, n - 1),
                Conj(Pi::DN, 0, n),
                Conj(Pi::DNm1, 1, n),
                Conj(Pi::DN, 1, n),
            ]);
            out.extend((2..=n - 2).map(|i| Conj(Pi::DNm1, i, n - i)));
            out.extend((2..=n - 2).map(|i| Conj(Pi::DN, i, n - i)));
            // the middle term of the displayed order relations is read as π_{n−1}
            out.extend([Pi::D1, Pi::DNm1, Pi::DN].map(|p| Order(Gen::Pi(p), 2)));
        }
    }
    Ok(out)
}

/// Literals known to be misprinted, with a short description of the correction.
pub fn known_erratum(tag: GroupTag, n: usize, rel: &RelKind) -> Option<&'static str> {
    use RelKind::*;
    let odd = n % 2 == 1;
    match (tag, *rel) {
        (GroupTag::CvRY, Braid(0, 2, 3)) if n == 2 => Some("for n = 2, s0 and s2 satisfy an order-4 braid relation"),
        (GroupTag::BvRY, Conj(..)) => Some("pi^Bv conjugates s_i to s_{n-i}"),
        (GroupTag::D, Braid(0, 2, 2)) => Some("s0 and s2 braid (order 3), as displayed on the next line"),
        (GroupTag::D, Braid(i, j, 2)) if (i, j) == (n - 2, n) => {
            Some("s_{n-2} and s_n braid (order 3), as displayed on the next line")
        }
        (GroupTag::D, Braid(0, 3, 2)) if n == 3 => Some("for n = 3, s0 and s3 braid (order 3)"),
        (GroupTag::D, Conj(Pi::DN, 1, _)) => Some("pi_n sends s1 to s_{n-1}; s_n is already the image of s0"),
        (GroupTag::D, Order(Gen::Pi(Pi::DNm1 | Pi::DN), 2)) if odd => Some("for odd n, pi_{n-1} and pi_n have order 4"),
        _ => None,
    }
}

/// The order of `g`, if at most [`MAX_ORDER`].
fn order(x: &GroupElement) -> Option<usize> {
    let mut acc = x.clone();
    for m in 1..=MAX_ORDER {
        if acc.is_identity() {
            return Some(m);
        }
        acc = acc.mul(x).ok()?;
    }
    None
}

/// The relation of the same shape that holds in the group, or `None` when there is none
/// (parallel reflections, whose product has infinite order).
pub fn corrected(g: &Group, rel: &RelKind) -> Result<Option<RelKind>> {
    Ok(match *rel {
        RelKind::Order(x, _) => order(&g.gen(x)?).map(|m| RelKind::Order(x, m)),
        RelKind::Braid(i, j, _) => {
            let si = g.gen(Gen::S(i))?;
            let sj = g.gen(Gen::S(j))?;
            order(&si.mul(&sj)?).map(|m| RelKind::Braid(i, j, m))
        }
        RelKind::Conj(p, i, _) => {
            let sigma = g.conjugation(&g.gen(Gen::Pi(p))?)?;
            Some(RelKind::Conj(p, i, sigma[i]))
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelStatus {
    Holds,
    Fails,
    /// Refers to a generator that does not exist.
    IllFormed,
}

pub fn check(g: &Group, rel: &RelKind) -> RelStatus {
    let (l, r) = rel.sides();
    match (g.eval(&l), g.eval(&r)) {
        (Ok(a), Ok(b)) if a == b => RelStatus::Holds,
        (Ok(_), Ok(_)) => RelStatus::Fails,
        _ => RelStatus::IllFormed,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationResult {
    pub relation: String,
    pub status: RelStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub erratum: Option<&'static str>,
    /// Present for failing literals: the computed form and whether it holds.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corrected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corrected_status: Option<RelStatus>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationsReport {
    pub group: String,
    pub n: usize,
    pub status: String,
    pub literal_failures: usize,
    pub results: Vec<RelationResult>,
}

impl RelationsReport {
    /// Every literal holds.
    pub fn passed(&self) -> bool {
        self.literal_failures == 0
    }

    /// The failing literals are exactly the listed errata and all corrections hold.
    pub fn errata_consistent(&self) -> bool {
        self.results.iter().all(|r| {
            (r.status == RelStatus::Holds) == r.erratum.is_none()
                && r.corrected_status.is_none_or(|s| s == RelStatus::Holds)
        })
    }
}

pub fn check_relations(tag: GroupTag, n: usize) -> Result<RelationsReport> {
    let g = Group::new(tag, n);
    let mut results = Vec::new();
    for rel in literal_relations(tag, n)? {
        let status = check(&g, &rel);
        let (corr, corr_status) = if status == RelStatus::Holds {
            (None, None)
        } else {
            match corrected(&g, &rel) {
                Ok(Some(c)) => (Some(c.to_string()), Some(check(&g, &c))),
                Ok(None) => (Some("no relation (infinite order)".into()), Some(RelStatus::Holds)),
                Err(_) => (Some("refers to a missing generator".into()), None),
            }
        };
        results.push(RelationResult {
            relation: rel.to_string(),
            status,
            erratum: known_erratum(tag, n, &rel),
            corrected: corr,
            corrected_status: corr_status,
        });
    }
    let literal_failures = results.iter().filter(|r| r.status != RelStatus::Holds).count();
    Ok(RelationsReport {
        group: format!("{tag:?}"),
        n,
        status: if literal_failures == 0 { "pass" } else { "fail" }.to_string(),
        literal_failures,
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coxeter_relations_of_w_hold() {
        for n in 2..=4 {
            let r = check_relations(GroupTag::W, n).unwrap();
            assert!(r.passed(), "{}", serde_json::to_string(&r).unwrap());
        }
    }

    #[test]
    fn failing_literals_are_the_listed_errata() {
        for (tag, ns) in [(GroupTag::CvRY, 2..=4), (GroupTag::BvRY, 2..=4), (GroupTag::D, 3..=6)] {
            for n in ns {
                let r = check_relations(tag, n).unwrap();
                assert!(r.errata_consistent(), "{}", serde_json::to_string(&r).unwrap());
            }
        }
    }

    #[test]
    fn bv_conjugation_at_zero_is_ill_formed() {
        let g = Group::new(GroupTag::BvRY, 3);
        assert_eq!(check(&g, &RelKind::Conj(Pi::Bv, 0, 4)), RelStatus::IllFormed);
        assert_eq!(check(&g, &RelKind::Conj(Pi::Bv, 0, 3)), RelStatus::Holds);
    }

    #[test]
    fn braid_sides() {
        let (l, r) = RelKind::Braid(0, 1, 3).sides();
        assert_eq!(l, vec![Gen::S(0), Gen::S(1), Gen::S(0)]);
        assert_eq!(r, vec![Gen::S(1), Gen::S(0), Gen::S(1)]);
        assert_eq!(RelKind::Braid(0, 1, 2).to_string(), "s0.s1 = s1.s0");
    }
}
