//! The affine root system of type (C∨n, Cn), its orbits and subsystems.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Vector = SmallVec<[i32; 6]>;

/// `α + r·c` with `α ∈ ℤ^n` and `r ∈ ½ℤ` stored doubled.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct AffineFn {
    pub alpha: Vector,
    pub r2: i32,
}

impl AffineFn {
    pub fn new(alpha: impl IntoIterator<Item = i32>, r2: i32) -> Self {
        AffineFn { alpha: alpha.into_iter().collect(), r2 }
    }

    /// `ε_i` for 1-based `i`.
    pub fn eps(n: usize, i: usize) -> Self {
        let mut alpha = Vector::from_elem(0, n);
        alpha[i - 1] = 1;
        AffineFn { alpha, r2: 0 }
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn add(&self, o: &Self) -> Self {
        AffineFn {
            alpha: self.alpha.iter().zip(&o.alpha).map(|(a, b)| a + b).collect(),
            r2: self.r2 + o.r2,
        }
    }

    pub fn neg(&self) -> Self {
        AffineFn { alpha: self.alpha.iter().map(|a| -a).collect(), r2: -self.r2 }
    }

    pub fn scale(&self, k: i32) -> Self {
        AffineFn { alpha: self.alpha.iter().map(|a| a * k).collect(), r2: self.r2 * k }
    }

    /// `⟨f, g⟩` on finite parts.
    pub fn inner(&self, o: &Self) -> i32 {
        self.alpha.iter().zip(&o.alpha).map(|(a, b)| a * b).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.alpha.iter().all(|&a| a == 0)
    }

    /// First nonzero coordinate of the finite part is positive.
    pub fn finite_positive(&self) -> bool {
        self.alpha.iter().find(|&&a| a != 0).is_some_and(|&a| a > 0)
    }

    /// `r > 0`, or `r = 0` with a positive finite part.
    pub fn is_positive(&self) -> bool {
        self.r2 > 0 || (self.r2 == 0 && self.finite_positive())
    }

    /// `s_a(f) = f − ⟨f, a∨⟩ a`; `self` plays the role of `a`.
    pub fn reflect(&self, f: &AffineFn) -> AffineFn {
        let num = 2 * f.inner(self);
        let den = self.inner(self);
        assert!(den != 0, "reflection in a constant function");
        assert!(num % den == 0, "non-integral pairing <{f}, {self}∨>");
        f.add(&self.scale(-(num / den)))
    }
}

impl fmt::Display for AffineFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut empty = true;
        for (i, &a) in self.alpha.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let sign = if a > 0 { '+' } else { '-' };
            if a.abs() == 1 {
                write!(f, "{sign}e{}", i + 1)?;
            } else {
                write!(f, "{sign}{}e{}", a.abs(), i + 1)?;
            }
            empty = false;
        }
        if self.r2 != 0 || empty {
            let sign = if self.r2 >= 0 { '+' } else { '-' };
            let r = self.r2.abs();
            match (r % 2, r / 2) {
                (0, 1) => write!(f, "{sign}c")?,
                (0, k) => write!(f, "{sign}{k}c")?,
                _ => write!(f, "{sign}{r}/2c")?,
            }
        }
        Ok(())
    }
}

impl FromStr for AffineFn {
    type Err = Error;

    /// Parses `+e1-e2+3/2c`; the rank is the largest index that appears.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad affine function {s:?}"));
        let mut parts: Vec<(i32, String)> = Vec::new();
        let mut cur = String::new();
        let mut sign = 1;
        for ch in s.chars().filter(|c| !c.is_whitespace()) {
            if ch == '+' || ch == '-' {
                if !cur.is_empty() {
                    parts.push((sign, std::mem::take(&mut cur)));
                }
                sign = if ch == '-' { -1 } else { 1 };
            } else {
                cur.push(ch);
            }
        }
        if !cur.is_empty() {
            parts.push((sign, cur));
        }
        let mut coords: Vec<(usize, i32)> = Vec::new();
        let mut r2 = 0;
        for (sign, p) in parts {
            if let Some(k) = p.strip_suffix('c') {
                r2 += sign
                    * match k.split_once('/') {
                        Some((a, "2")) => a.parse::<i32>().map_err(|_| bad())?,
                        Some(_) => return Err(bad()),
                        None if k.is_empty() => 2,
                        None => 2 * k.parse::<i32>().map_err(|_| bad())?,
                    };
            } else {
                let (k, i) = p.split_once('e').ok_or_else(bad)?;
                let k = if k.is_empty() { 1 } else { k.parse().map_err(|_| bad())? };
                let i: usize = i.parse().map_err(|_| bad())?;
                if i == 0 {
                    return Err(bad());
                }
                coords.push((i, sign * k));
            }
        }
        let n = coords.iter().map(|c| c.0).max().unwrap_or(0);
        let mut alpha = Vector::from_elem(0, n);
        for (i, k) in coords {
            alpha[i - 1] += k;
        }
        Ok(AffineFn { alpha, r2 })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OrbitTag {
    O1,
    O2,
    O3,
    O4,
    O5,
}

impl OrbitTag {
    pub const ALL: [OrbitTag; 5] = [OrbitTag::O1, OrbitTag::O2, OrbitTag::O3, OrbitTag::O4, OrbitTag::O5];
}

/// Shape of the finite part of a root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    /// `±ε_i`
    Short,
    /// `±2ε_i`
    Long,
    /// `±ε_i ± ε_j`
    Middle,
}

fn shape(alpha: &[i32]) -> Option<Shape> {
    let nz: Vec<i32> = alpha.iter().copied().filter(|&a| a != 0).collect();
    match nz.as_slice() {
        [a] if a.abs() == 1 => Some(Shape::Short),
        [a] if a.abs() == 2 => Some(Shape::Long),
        [a, b] if a.abs() == 1 && b.abs() == 1 => Some(Shape::Middle),
        _ => None,
    }
}

/// An element of S; invalid pairs are unrepresentable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffineRoot(AffineFn);

impl AffineRoot {
    pub fn new(f: AffineFn) -> Result<Self> {
        let ok = match shape(&f.alpha) {
            Some(Shape::Short) => true,
            Some(Shape::Long) | Some(Shape::Middle) => f.r2 % 2 == 0,
            None => false,
        };
        if ok {
            Ok(AffineRoot(f))
        } else {
            Err(Error::NotARoot(f.to_string()))
        }
    }

    pub fn as_fn(&self) -> &AffineFn {
        &self.0
    }

    pub fn into_fn(self) -> AffineFn {
        self.0
    }

    pub fn orbit(&self) -> OrbitTag {
        match shape(&self.0.alpha).expect("validated") {
            Shape::Short if self.0.r2 % 2 == 0 => OrbitTag::O1,
            Shape::Short => OrbitTag::O3,
            Shape::Long if (self.0.r2 / 2) % 2 == 0 => OrbitTag::O2,
            Shape::Long => OrbitTag::O4,
            Shape::Middle => OrbitTag::O5,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// `2a` when it is again a root.
    pub fn double(&self) -> Option<AffineRoot> {
        AffineRoot::new(self.0.scale(2)).ok()
    }

    /// `½a` when it is again a root.
    pub fn half(&self) -> Option<AffineRoot> {
        if self.0.alpha.iter().any(|a| a % 2 != 0) || self.0.r2 % 2 != 0 {
            return None;
        }
        let f = AffineFn {
            alpha: self.0.alpha.iter().map(|a| a / 2).collect(),
            r2: self.0.r2 / 2,
        };
        AffineRoot::new(f).ok()
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn orbit_of(f: &AffineFn) -> Result<OrbitTag> {
    Ok(AffineRoot::new(f.clone())?.orbit())
}

pub fn is_positive(f: &AffineFn) -> Result<bool> {
    Ok(AffineRoot::new(f.clone())?.is_positive())
}

pub fn reflect(a: &AffineRoot, f: &AffineFn) -> AffineFn {
    a.0.reflect(f)
}

/// The basis `a_0 = −2ε_1 + c`, `a_j = ε_j − ε_{j+1}`, `a_n = 2ε_n`.
pub fn simple_roots(n: usize) -> Vec<AffineRoot> {
    let mut out = Vec::with_capacity(n + 1);
    let mut a0 = AffineFn::eps(n, 1).scale(-2);
    a0.r2 = 2;
    out.push(a0);
    for j in 1..n {
        out.push(AffineFn::eps(n, j).add(&AffineFn::eps(n, j + 1).neg()));
    }
    out.push(AffineFn::eps(n, n).scale(2));
    out.into_iter().map(|f| AffineRoot::new(f).expect("simple root")).collect()
}

/// All roots of rank `n` with `|r| ≤ r2_bound / 2`, in a fixed order.
pub fn enumerate_roots(n: usize, r2_bound: i32) -> Vec<AffineRoot> {
    let mut finite: Vec<Vector> = Vec::new();
    for i in 0..n {
        for k in [1, -1, 2, -2] {
            let mut v = Vector::from_elem(0, n);
            v[i] = k;
            finite.push(v);
        }
        for j in i + 1..n {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = Vector::from_elem(0, n);
                v[i] = a;
                v[j] = b;
                finite.push(v);
            }
        }
    }
    let mut out = Vec::new();
    for alpha in finite {
        for r2 in -r2_bound..=r2_bound {
            if let Ok(a) = AffineRoot::new(AffineFn { alpha: alpha.clone(), r2 }) {
                out.push(a);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SizeTag {
    S,
    M,
    L,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SubsystemTag {
    B,
    Bv,
    C,
    Cv,
    BC,
    D,
    #[serde(rename = "BC_C")]
    BcC,
    #[serde(rename = "Cv_BC")]
    CvBc,
    #[serde(rename = "Bv_B")]
    BvB,
    CvRY,
    BvRY,
    DRY,
}

impl SubsystemTag {
    /// The nine subsystems of the specialization table.
    pub const TABLE: [SubsystemTag; 9] = [
        SubsystemTag::B,
        SubsystemTag::Bv,
        SubsystemTag::C,
        SubsystemTag::Cv,
        SubsystemTag::BC,
        SubsystemTag::D,
        SubsystemTag::BcC,
        SubsystemTag::CvBc,
        SubsystemTag::BvB,
    ];

    pub const ALL: [SubsystemTag; 12] = [
        SubsystemTag::B,
        SubsystemTag::Bv,
        SubsystemTag::C,
        SubsystemTag::Cv,
        SubsystemTag::BC,
        SubsystemTag::D,
        SubsystemTag::BcC,
        SubsystemTag::CvBc,
        SubsystemTag::BvB,
        SubsystemTag::CvRY,
        SubsystemTag::BvRY,
        SubsystemTag::DRY,
    ];

    /// Orbits of S making up the subsystem, each with its size tag.
    pub fn orbits(self) -> &'static [(OrbitTag, SizeTag)] {
        use OrbitTag::*;
        use SizeTag::*;
        match self {
            SubsystemTag::B => &[(O1, S), (O5, L)],
            SubsystemTag::Bv => &[(O2, L), (O5, S)],
            SubsystemTag::C => &[(O2, L), (O4, L), (O5, S)],
            SubsystemTag::Cv => &[(O1, S), (O3, S), (O5, L)],
            SubsystemTag::BC => &[(O1, S), (O4, L), (O5, M)],
            // type D has a single orbit; its parameter is plain t
            SubsystemTag::D | SubsystemTag::DRY => &[(O5, M)],
            SubsystemTag::BcC => &[(O1, S), (O2, L), (O4, L), (O5, M)],
            SubsystemTag::CvBc => &[(O1, S), (O2, L), (O3, S), (O5, M)],
            SubsystemTag::BvB => &[(O1, S), (O2, L), (O5, M)],
            SubsystemTag::CvRY => &[(O1, S), (O5, M)],
            SubsystemTag::BvRY => &[(O2, L), (O4, L), (O5, M)],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SubsystemTag::B => "B",
            SubsystemTag::Bv => "Bv",
            SubsystemTag::C => "C",
            SubsystemTag::Cv => "Cv",
            SubsystemTag::BC => "BC",
            SubsystemTag::D => "D",
            SubsystemTag::BcC => "BC_C",
            SubsystemTag::CvBc => "Cv_BC",
            SubsystemTag::BvB => "Bv_B",
            SubsystemTag::CvRY => "CvRY",
            SubsystemTag::BvRY => "BvRY",
            SubsystemTag::DRY => "DRY",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.name().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for SubsystemTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Membership in a subsystem together with the size tag of the root's orbit there.
pub fn subsystem_contains(x: SubsystemTag, a: &AffineRoot) -> Option<SizeTag> {
    let o = a.orbit();
    x.orbits().iter().find(|(oo, _)| *oo == o).map(|(_, s)| *s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(s: &str, n: usize) -> AffineRoot {
        let mut f: AffineFn = s.parse().unwrap();
        f.alpha.resize(n, 0);
        AffineRoot::new(f).unwrap()
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(root("-e1+1/2c", 2).orbit(), OrbitTag::O3);
        assert_eq!(root("+2e2", 2).orbit(), OrbitTag::O2);
        assert_eq!(root("+e1-e2", 2).orbit(), OrbitTag::O5);
        assert_eq!(root("+2e1+c", 2).orbit(), OrbitTag::O4);
    }

    #[test]
    fn invalid_pairs_rejected() {
        assert!(AffineRoot::new("+e1+e2+1/2c".parse().unwrap()).is_err());
        assert!(AffineRoot::new("+2e1+1/2c".parse().unwrap()).is_err());
        assert!(AffineRoot::new("+3e1".parse().unwrap()).is_err());
    }

    #[test]
    fn positivity_examples() {
        assert!(root("-2e1+c", 2).is_positive());
        assert!(!root("-e1+e2", 2).is_positive());
        assert!(root("-e1+1/2c", 2).is_positive());
    }

    #[test]
    fn subsystem_examples() {
        assert_eq!(subsystem_contains(SubsystemTag::C, &root("+2e1+c", 2)), Some(SizeTag::L));
        assert_eq!(subsystem_contains(SubsystemTag::C, &root("+e1", 2)), None);
        assert_eq!(subsystem_contains(SubsystemTag::Cv, &root("+e1+1/2c", 2)), Some(SizeTag::S));
    }

    #[test]
    fn reflect_examples() {
        let a = simple_roots(2);
        let e1 = AffineFn::eps(2, 1);
        let e2 = AffineFn::eps(2, 2);
        assert_eq!(reflect(&a[0], &e1).to_string(), "-e1+c");
        assert_eq!(reflect(&a[2], &e2).to_string(), "-e2");
        assert_eq!(reflect(&a[1], &e2).to_string(), "+e1");
    }

    #[test]
    fn text_round_trip() {
        for a in enumerate_roots(3, 4) {
            let mut back: AffineFn = a.to_string().parse().unwrap();
            back.alpha.resize(3, 0);
            assert_eq!(&back, a.as_fn());
        }
    }
}
