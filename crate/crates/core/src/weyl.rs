//! Extended affine Weyl groups acting on `P_{C_n} ⊕ ½ℤc`.
//!
//! Elements are pairs `(λ, u)` = `t(λ)·u` with `λ ∈ ½ℤ^n` (stored doubled) and `u` a signed
//! permutation. Each [`Group`] carries its own simple roots, so descents, reduced words and
//! minimal coset representatives are computed against the right alcove.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::roots::{simple_roots, AffineFn, AffineRoot, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupTag {
    /// type (C∨n, Cn)
    W,
    CvRY,
    BvRY,
    D,
}

pub type Perm = SmallVec<[i8; 6]>;

/// `t(λ)·u`; `perm[i] = ±j` means `u(ε_{i+1}) = ±ε_j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GroupElement {
    pub tag: GroupTag,
    pub trans2: Vector,
    pub perm: Perm,
}

fn perm_apply(perm: &[i8], v: &[i32]) -> Vector {
    let mut out = Vector::from_elem(0, v.len());
    for (i, &p) in perm.iter().enumerate() {
        let j = p.unsigned_abs() as usize - 1;
        out[j] += p.signum() as i32 * v[i];
    }
    out
}

impl GroupElement {
    /// Validates the lattice and the sign-change parity for the tag.
    pub fn new(tag: GroupTag, trans2: Vector, perm: Perm) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            let j = p.unsigned_abs() as usize;
            if j == 0 || j > n || seen[j - 1] {
                return Err(Error::Domain(format!("not a signed permutation: {perm:?}")));
            }
            seen[j - 1] = true;
        }
        if trans2.len() != n {
            return Err(Error::Domain("translation length".into()));
        }
        let all_even = trans2.iter().all(|x| x % 2 == 0);
        let all_odd = trans2.iter().all(|x| x % 2 != 0);
        let ok = match tag {
            GroupTag::W | GroupTag::CvRY => all_even,
            GroupTag::BvRY => all_even || all_odd,
            GroupTag::D => {
                (all_even || all_odd) && perm.iter().filter(|&&p| p < 0).count() % 2 == 0
            }
        };
        if !ok {
            return Err(Error::Domain(format!("({trans2:?}, {perm:?}) is not in {tag:?}")));
        }
        Ok(GroupElement { tag, trans2, perm })
    }

    pub fn identity(tag: GroupTag, n: usize) -> Self {
        GroupElement {
            tag,
            trans2: Vector::from_elem(0, n),
            perm: (1..=n as i8).collect(),
        }
    }

    /// `t(λ)` with `λ = trans2 / 2`.
    pub fn translation(tag: GroupTag, trans2: Vector) -> Result<Self> {
        let n = trans2.len();
        Self::new(tag, trans2, (1..=n as i8).collect())
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self.trans2.iter().all(|&x| x == 0)
            && self.perm.iter().enumerate().all(|(i, &p)| p == i as i8 + 1)
    }

    /// The finite part `u` as an element with zero translation.
    pub fn finite_part(&self) -> GroupElement {
        GroupElement { tag: self.tag, trans2: Vector::from_elem(0, self.n()), perm: self.perm.clone() }
    }

    pub fn apply(&self, f: &AffineFn) -> AffineFn {
        let alpha = perm_apply(&self.perm, &f.alpha);
        let pairing: i32 = alpha.iter().zip(&self.trans2).map(|(a, b)| a * b).sum();
        AffineFn { alpha, r2: f.r2 - pairing }
    }

    /// The finite part applied to a vector.
    pub fn apply_linear(&self, v: &[i32]) -> Vector {
        perm_apply(&self.perm, v)
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.tag != o.tag {
            return Err(Error::TagMismatch(self.tag, o.tag));
        }
        Ok(self.mul_unchecked(o))
    }

    fn mul_unchecked(&self, o: &Self) -> Self {
        let um = perm_apply(&self.perm, &o.trans2);
        let trans2 = self.trans2.iter().zip(&um).map(|(a, b)| a + b).collect();
        let perm = o
            .perm
            .iter()
            .map(|&p| {
                let j = p.unsigned_abs() as usize - 1;
                p.signum() * self.perm[j]
            })
            .collect();
        GroupElement { tag: self.tag, trans2, perm }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut perm: Perm = SmallVec::from_elem(0, n);
        for (i, &p) in self.perm.iter().enumerate() {
            let j = p.unsigned_abs() as usize - 1;
            perm[j] = p.signum() * (i as i8 + 1);
        }
        let back = perm_apply(&perm, &self.trans2);
        GroupElement { tag: self.tag, trans2: back.iter().map(|x| -x).collect(), perm }
    }

    /// Same coordinates viewed in another group.
    pub fn retag(&self, tag: GroupTag) -> Result<Self> {
        Self::new(tag, self.trans2.clone(), self.perm.clone())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(&self.to_json()).expect("json"))
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct GroupElementJson {
    pub trans2: Vec<i32>,
    pub perm: Vec<i32>,
}

impl GroupElement {
    pub fn to_json(&self) -> GroupElementJson {
        GroupElementJson {
            trans2: self.trans2.to_vec(),
            perm: self.perm.iter().map(|&p| p as i32).collect(),
        }
    }

    pub fn from_json(tag: GroupTag, j: &GroupElementJson) -> Result<Self> {
        Self::new(
            tag,
            j.trans2.iter().copied().collect(),
            j.perm.iter().map(|&p| p as i8).collect(),
        )
    }
}

/// Diagram automorphisms of length zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pi {
    Cv,
    Bv,
    D1,
    DNm1,
    DN,
}

impl Pi {
    pub fn label(self) -> &'static str {
        match self {
            Pi::Cv => "pi^Cv",
            Pi::Bv => "pi^Bv",
            Pi::D1 => "pi^D1",
            Pi::DNm1 => "pi^Dn-1",
            Pi::DN => "pi^Dn",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    S(usize),
    Pi(Pi),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::S(i) => write!(f, "s{i}"),
            Gen::Pi(p) => f.write_str(p.label()),
        }
    }
}

impl FromStr for Gen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        for p in [Pi::Cv, Pi::Bv, Pi::D1, Pi::DNm1, Pi::DN] {
            if s == p.label() {
                return Ok(Gen::Pi(p));
            }
        }
        s.strip_prefix('s')
            .and_then(|i| i.parse().ok())
            .map(Gen::S)
            .ok_or_else(|| Error::Parse(format!("bad generator {s:?}")))
    }
}

/// An optional leading diagram automorphism followed by simple reflections.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word {
    pub pi: Option<Pi>,
    pub letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word { pi: None, letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn gens(&self) -> Vec<Gen> {
        self.pi
            .map(Gen::Pi)
            .into_iter()
            .chain(self.letters.iter().map(|&i| Gen::S(i)))
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.gens();
        if gens.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = gens.iter().map(Gen::to_string).collect();
        f.write_str(&parts.join("."))
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut w = Word::default();
        if s.trim() == "e" || s.trim().is_empty() {
            return Ok(w);
        }
        for (k, tok) in s.trim().split('.').enumerate() {
            match tok.parse::<Gen>()? {
                Gen::Pi(p) if k == 0 => w.pi = Some(p),
                Gen::Pi(_) => return Err(Error::Parse("pi only as a prefix".into())),
                Gen::S(i) => w.letters.push(i),
            }
        }
        Ok(w)
    }
}

/// A group presentation: simple roots indexed by generator, their reflections, and the
/// length-zero elements.
#[derive(Clone, Debug)]
pub struct Group {
    tag: GroupTag,
    n: usize,
    roots: Vec<AffineRoot>,
    refl: Vec<GroupElement>,
    finite: Vec<usize>,
    pis: Vec<(Pi, GroupElement)>,
}

fn reflection(tag: GroupTag, a: &AffineFn) -> GroupElement {
    let n = a.n();
    let images: Vec<AffineFn> = (1..=n).map(|i| a.reflect(&AffineFn::eps(n, i))).collect();
    from_images(tag, &images).expect("reflection lies in its group")
}

/// The element sending `ε_i` to `images[i-1]`.
pub fn from_images(tag: GroupTag, images: &[AffineFn]) -> Result<GroupElement> {
    let n = images.len();
    let mut perm: Perm = SmallVec::from_elem(0, n);
    let mut trans2 = Vector::from_elem(0, n);
    for (i, img) in images.iter().enumerate() {
        let nz: Vec<(usize, i32)> = img
            .alpha
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(j, &a)| (j, a))
            .collect();
        let [(j, s)] = nz.as_slice() else {
            return Err(Error::Domain(format!("image {img} is not ±ε_j + rc")));
        };
        if s.abs() != 1 {
            return Err(Error::Domain(format!("image {img} is not ±ε_j + rc")));
        }
        perm[i] = (*s as i8) * (*j as i8 + 1);
        // r2(image) = −⟨uε_i, trans2⟩ = −s·trans2_j
        trans2[*j] = -s * img.r2;
    }
    GroupElement::new(tag, trans2, perm)
}

impl Group {
    pub fn new(tag: GroupTag, n: usize) -> Self {
        assert!(n >= 2, "rank must be at least 2");
        let base = simple_roots(n);
        let e = |i: usize| AffineFn::eps(n, i);
        let c = AffineFn::new(std::iter::repeat_n(0, n), 2);
        let roots: Vec<AffineFn> = match tag {
            GroupTag::W | GroupTag::BvRY => base.iter().map(|a| a.as_fn().clone()).collect(),
            GroupTag::CvRY => {
                let mut r: Vec<AffineFn> = base.iter().map(|a| a.as_fn().clone()).collect();
                r[0] = e(1).neg().add(&e(2).neg()).add(&c);
                r[n] = e(n);
                r
            }
            GroupTag::D => {
                let mut r: Vec<AffineFn> = base.iter().map(|a| a.as_fn().clone()).collect();
                r[0] = e(1).neg().add(&e(2).neg()).add(&c);
                r[n] = e(n - 1).add(&e(n));
                if n == 2 {
                    // D_2 = A_1 × A_1 has two affine nodes
                    r.push(e(1).neg().add(&e(2)).add(&c));
                }
                r
            }
        };
        let roots: Vec<AffineRoot> =
            roots.into_iter().map(|f| AffineRoot::new(f).expect("simple root")).collect();
        let refl = roots.iter().map(|a| reflection(tag, a.as_fn())).collect();
        let finite = (1..=n).collect();
        let mut g = Group { tag, n, roots, refl, finite, pis: Vec::new() };
        g.pis = match tag {
            GroupTag::W => Vec::new(),
            GroupTag::CvRY => {
                let mut imgs: Vec<AffineFn> = (1..=n).map(e).collect();
                imgs[0] = e(1).neg().add(&c);
                vec![(Pi::Cv, from_images(tag, &imgs).expect("pi^Cv"))]
            }
            GroupTag::BvRY => {
                let half_c = AffineFn::new(std::iter::repeat_n(0, n), 1);
                let imgs: Vec<AffineFn> = (1..=n).map(|i| half_c.add(&e(n - i + 1).neg())).collect();
                vec![(Pi::Bv, from_images(tag, &imgs).expect("pi^Bv"))]
            }
            GroupTag::D => {
                let mut w1 = Vector::from_elem(0, n);
                w1[0] = 2;
                let wn: Vector = Vector::from_elem(1, n);
                let mut wn1 = wn.clone();
                wn1[n - 1] = -1;
                [(Pi::D1, w1), (Pi::DNm1, wn1), (Pi::DN, wn)]
                    .into_iter()
                    .map(|(p, w)| {
                        let t = GroupElement::translation(tag, w).expect("minuscule weight");
                        (p, g.strip_finite_descents(t))
                    })
                    .collect()
            }
        };
        g
    }

    pub fn tag(&self) -> GroupTag {
        self.tag
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Simple roots indexed by generator.
    pub fn roots(&self) -> &[AffineRoot] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &AffineRoot {
        &self.roots[i]
    }

    /// Generator indices of the Coxeter part.
    pub fn indices(&self) -> std::ops::Range<usize> {
        0..self.roots.len()
    }

    /// Generator indices of the finite Weyl group.
    pub fn finite_indices(&self) -> &[usize] {
        &self.finite
    }

    pub fn s(&self, i: usize) -> &GroupElement {
        &self.refl[i]
    }

    pub fn pis(&self) -> &[(Pi, GroupElement)] {
        &self.pis
    }

    pub fn pi(&self, p: Pi) -> Option<&GroupElement> {
        self.pis.iter().find(|(q, _)| *q == p).map(|(_, g)| g)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.tag, self.n)
    }

    pub fn translation(&self, mu: &[i32]) -> Result<GroupElement> {
        GroupElement::translation(self.tag, mu.iter().map(|m| 2 * m).collect())
    }

    pub fn gen(&self, g: Gen) -> Result<GroupElement> {
        match g {
            Gen::S(i) if i < self.refl.len() => Ok(self.refl[i].clone()),
            Gen::S(i) => Err(Error::Domain(format!("no generator s{i} in {:?}, n={}", self.tag, self.n))),
            Gen::Pi(p) => self
                .pi(p)
                .cloned()
                .ok_or_else(|| Error::Domain(format!("no {} in {:?}", p.label(), self.tag))),
        }
    }

    pub fn eval(&self, gens: &[Gen]) -> Result<GroupElement> {
        let mut w = self.identity();
        for &g in gens {
            w = w.mul_unchecked(&self.gen(g)?);
        }
        Ok(w)
    }

    pub fn eval_word(&self, w: &Word) -> Result<GroupElement> {
        self.eval(&w.gens())
    }

    /// `ℓ(w s_i) < ℓ(w)`, i.e. `w(a_i)` is negative.
    pub fn is_descent(&self, w: &GroupElement, i: usize) -> bool {
        !w.apply(self.roots[i].as_fn()).is_positive()
    }

    /// Greedy descent peeling with lowest-index tie-breaking.
    pub fn reduced_word(&self, w: &GroupElement) -> Word {
        let mut cur = w.clone();
        let mut rev = Vec::new();
        while let Some(i) = self.indices().find(|&i| self.is_descent(&cur, i)) {
            cur = cur.mul_unchecked(&self.refl[i]);
            rev.push(i);
        }
        rev.reverse();
        let pi = if cur.is_identity() {
            None
        } else {
            Some(
                self.pis
                    .iter()
                    .find(|(_, g)| *g == cur)
                    .map(|(p, _)| *p)
                    .expect("length-zero element is a diagram automorphism"),
            )
        };
        Word { pi, letters: rev }
    }

    pub fn length(&self, w: &GroupElement) -> usize {
        self.reduced_word(w).len()
    }

    pub fn length_and_reduced_word(&self, w: &GroupElement) -> (usize, Word) {
        let word = self.reduced_word(w);
        (word.len(), word)
    }

    /// π-prefix and Coxeter tail.
    pub fn normal_form_extended(&self, w: &GroupElement) -> (Option<Pi>, Vec<usize>) {
        let word = self.reduced_word(w);
        (word.pi, word.letters)
    }

    /// `σ` with `p·s_i = s_{σ(i)}·p`, read off from `p(a_i) = a_{σ(i)}`.
    pub fn conjugation(&self, p: &GroupElement) -> Result<Vec<usize>> {
        self.indices()
            .map(|i| {
                let img = p.apply(self.roots[i].as_fn());
                self.roots
                    .iter()
                    .position(|a| *a.as_fn() == img)
                    .ok_or_else(|| Error::Domain(format!("{p} does not permute the simple roots")))
            })
            .collect()
    }

    /// The diagram automorphism equal to a length-zero element (`None` for the identity).
    pub fn identify_length_zero(&self, w: &GroupElement) -> Option<Option<Pi>> {
        if w.is_identity() {
            return Some(None);
        }
        self.pis.iter().find(|(_, g)| g == w).map(|(p, _)| Some(*p))
    }

    /// Pushes every diagram automorphism of a generator sequence to the left.
    pub fn push_pi_left(&self, gens: &[Gen]) -> Result<Word> {
        let mut acc = self.identity();
        let mut sigma: Vec<usize> = self.indices().collect();
        let mut letters = Vec::new();
        for &g in gens {
            match g {
                Gen::S(i) => letters.push((i, sigma.clone())),
                Gen::Pi(_) => {
                    let p = self.gen(g)?;
                    acc = acc.mul_unchecked(&p);
                    sigma = self.conjugation(&acc)?;
                }
            }
        }
        let pi = self
            .identify_length_zero(&acc)
            .ok_or_else(|| Error::Domain("product of automorphisms is not length zero".into()))?;
        // π_total^{-1}·P·s_i·P^{-1}·π_total = s_{σ_total^{-1}(σ_P(i))}
        let back = self.conjugation(&acc.inverse())?;
        let out = letters.into_iter().map(|(i, sig_p)| back[sig_p[i]]).collect();
        Ok(Word { pi, letters: out })
    }

    fn strip_finite_descents(&self, mut w: GroupElement) -> GroupElement {
        while let Some(&i) = self.finite.iter().find(|&&i| self.is_descent(&w, i)) {
            w = w.mul_unchecked(&self.refl[i]);
        }
        w
    }

    /// The shortest element of `t(μ)·W_0`.
    pub fn min_coset_rep(&self, mu: &[i32]) -> Result<GroupElement> {
        Ok(self.strip_finite_descents(self.translation(mu)?))
    }

    /// Reduced word of a finite element in the finite generators.
    pub fn finite_word(&self, u: &GroupElement) -> Vec<usize> {
        let mut cur = u.clone();
        let mut rev = Vec::new();
        while let Some(&i) = self.finite.iter().find(|&&i| self.is_descent(&cur, i)) {
            cur = cur.mul_unchecked(&self.refl[i]);
            rev.push(i);
        }
        debug_assert!(cur.is_identity(), "finite element expected");
        rev.reverse();
        rev
    }
}

/// `φ^C`: `s_0 ↦ π^{C∨}`, `s_i ↦ s_i`.
pub fn hom_phi_c(w_group: &Group, target: &Group, w: &GroupElement) -> Result<GroupElement> {
    letter_map(w_group, target, w, |i| if i == 0 { Some(Gen::Pi(Pi::Cv)) } else { Some(Gen::S(i)) })
}

/// `φ^D`: `s_0 ↦ π_1^D`, `s_i ↦ s_i` (`1 ≤ i ≤ n−1`), `s_n ↦ e`.
pub fn hom_phi_d(w_group: &Group, target: &Group, w: &GroupElement) -> Result<GroupElement> {
    let n = w_group.n();
    letter_map(w_group, target, w, |i| match i {
        0 => Some(Gen::Pi(Pi::D1)),
        i if i == n => None,
        i => Some(Gen::S(i)),
    })
}

/// `s_i ↦ s_i` into `W^{B∨,RY}`.
pub fn embed_b(w_group: &Group, target: &Group, w: &GroupElement) -> Result<GroupElement> {
    letter_map(w_group, target, w, |i| Some(Gen::S(i)))
}

/// Evaluates the image of a reduced word of `w` letter by letter.
pub fn letter_map(
    source: &Group,
    target: &Group,
    w: &GroupElement,
    f: impl Fn(usize) -> Option<Gen>,
) -> Result<GroupElement> {
    if w.tag != source.tag() {
        return Err(Error::TagMismatch(w.tag, source.tag()));
    }
    let word = source.reduced_word(w);
    let mut gens = Vec::new();
    if let Some(p) = word.pi {
        gens.push(Gen::Pi(p));
    }
    gens.extend(word.letters.iter().filter_map(|&i| f(i)));
    target.eval(&gens)
}

/// All elements of length at most `max_len`, each with a reduced word, in BFS order.
pub fn ball(g: &Group, max_len: usize) -> Vec<(GroupElement, Word)> {
    use std::collections::HashSet;
    let mut seen: HashSet<GroupElement> = HashSet::new();
    let mut out = Vec::new();
    let mut frontier = vec![(g.identity(), Word::default())];
    seen.insert(g.identity());
    out.extend(frontier.iter().cloned());
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (w, word) in &frontier {
            for i in g.indices() {
                let v = w.mul_unchecked(g.s(i));
                if seen.insert(v.clone()) {
                    let mut nw = word.clone();
                    nw.letters.push(i);
                    next.push((v, nw));
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s0_is_translation_times_reflection() {
        let g = Group::new(GroupTag::W, 2);
        let t = g.translation(&[1, 0]).unwrap();
        let s2e1 = GroupElement::new(GroupTag::W, Vector::from_elem(0, 2), SmallVec::from_slice(&[-1, 2])).unwrap();
        assert_eq!(t.mul(&s2e1).unwrap(), *g.s(0));
        assert_eq!(g.s(0).apply(&AffineFn::eps(2, 1)).to_string(), "-e1+c");
    }

    #[test]
    fn translation_words_n2() {
        let g = Group::new(GroupTag::W, 2);
        let w = g.reduced_word(&g.translation(&[1, 0]).unwrap());
        assert_eq!(w.letters, vec![0, 1, 2, 1]);
        let w = g.reduced_word(&g.translation(&[0, 1]).unwrap());
        assert_eq!(w.letters, vec![1, 0, 1, 2]);
    }

    #[test]
    fn min_coset_examples_n2() {
        let g = Group::new(GroupTag::W, 2);
        let word = |mu: &[i32]| g.reduced_word(&g.min_coset_rep(mu).unwrap()).letters;
        assert_eq!(word(&[1, 0]), vec![0]);
        assert_eq!(word(&[0, 1]), vec![1, 0]);
        assert_eq!(word(&[-1, 0]), vec![1, 2, 1, 0]);
        assert_eq!(word(&[0, -1]), vec![2, 1, 0]);
        assert_eq!(word(&[1, 1]), vec![0, 1, 0]);
        assert_eq!(word(&[0, 0]), Vec::<usize>::new());
    }

    #[test]
    fn pi_actions() {
        let g = Group::new(GroupTag::CvRY, 3);
        let p = g.pi(Pi::Cv).unwrap();
        assert_eq!(p.apply(&AffineFn::eps(3, 1)).to_string(), "-e1+c");
        assert!(p.mul(p).unwrap().is_identity());
        let b = Group::new(GroupTag::BvRY, 3);
        let p = b.pi(Pi::Bv).unwrap();
        assert_eq!(p.apply(&AffineFn::eps(3, 1)).to_string(), "-e3+1/2c");
    }

    #[test]
    fn word_text_round_trip() {
        let w: Word = "pi^Cv.s1.s0.s2".parse().unwrap();
        assert_eq!(w.pi, Some(Pi::Cv));
        assert_eq!(w.letters, vec![1, 0, 2]);
        assert_eq!(w.to_string(), "pi^Cv.s1.s0.s2");
        assert_eq!(Word::default().to_string(), "e");
    }

    #[test]
    fn d_length_zero_elements() {
        for n in 2..=4 {
            let g = Group::new(GroupTag::D, n);
            for (_, p) in g.pis() {
                assert!(g.indices().all(|i| !g.is_descent(p, i)));
                assert!(!p.is_identity());
            }
        }
        let g = Group::new(GroupTag::D, 3);
        assert_eq!(g.min_coset_rep(&[1, 0, 0]).unwrap(), *g.pi(Pi::D1).unwrap());
    }
}
