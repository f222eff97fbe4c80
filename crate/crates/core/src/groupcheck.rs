//! Checks on the group side: displayed reduced words, the homomorphisms `φ^C`, `φ^D`, and the
//! walk maps that delete the letters sent to length-zero elements.

use serde::Serialize;

use crate::error::Result;
use crate::walks::{bits_of, AlcoveWalk};
use crate::weyl::{ball, hom_phi_c, hom_phi_d, Gen, Group, GroupElement, GroupTag, Pi, Word};

fn down(from: usize, to: usize) -> impl Iterator<Item = usize> {
    (to..=from).rev()
}

/// `t(ε_i) = s_{i−1}⋯s_1 s_0 s_1⋯s_n s_{n−1}⋯s_i` in `W` (also used in `W^{B∨,RY}`).
pub fn tep_word(n: usize, i: usize) -> Vec<Gen> {
    down(i - 1, 1).chain([0]).chain(1..=n).chain(down(n - 1, i)).map(Gen::S).collect()
}

/// `w(ε_i) = s_{i−1}⋯s_0`.
pub fn wmu_word(i: usize) -> Vec<Gen> {
    down(i - 1, 0).map(Gen::S).collect()
}

/// `t(ε_i)` in `W^{C∨,RY}`.
pub fn tep_c_word(n: usize, i: usize) -> Vec<Gen> {
    let mut w = vec![Gen::Pi(Pi::Cv)];
    let head: Vec<usize> = match i {
        1 => Vec::new(),
        2 => vec![0],
        _ => down(i - 1, 2).chain([0]).collect(),
    };
    w.extend(head.into_iter().chain(1..=n).chain(down(n - 1, i)).map(Gen::S));
    w
}

/// `t(½(ε_1+⋯+ε_n)) = π^{B∨}(s_n⋯s_1)(s_n⋯s_2)⋯(s_n s_{n−1}) s_n`.
pub fn tep_b_half_word(n: usize) -> Vec<Gen> {
    let mut w = vec![Gen::Pi(Pi::Bv)];
    for k in 1..=n {
        w.extend(down(n, k).map(Gen::S));
    }
    w
}

/// `t(ε_i)` in `W^D` as displayed.
pub fn tep_d_word(i: usize) -> Vec<Gen> {
    let mut w = vec![Gen::Pi(Pi::D1)];
    match i {
        1 => {}
        2 => w.extend([Gen::S(0), Gen::S(1)]),
        _ => w.extend(down(i - 1, 2).chain([0]).chain(1..i).map(Gen::S)),
    }
    w
}

/// `w_D(ε_i)` as displayed.
pub fn wmu_d_word(i: usize) -> Vec<Gen> {
    let mut w = vec![Gen::Pi(Pi::D1)];
    match i {
        1 => {}
        2 => w.push(Gen::S(0)),
        _ => w.extend(down(i - 1, 2).chain([0]).map(Gen::S)),
    }
    w
}

#[derive(Clone, Debug, Serialize)]
pub struct DisplayWordResult {
    pub name: String,
    pub word: String,
    /// The word evaluates to the named element.
    pub equal: bool,
    /// Its number of simple reflections equals the length of that element.
    pub reduced: bool,
    pub length: usize,
}

impl DisplayWordResult {
    pub fn passed(&self) -> bool {
        self.equal && self.reduced
    }
}

fn word_text(gens: &[Gen]) -> String {
    gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(".")
}

fn display_result(g: &Group, name: String, gens: Vec<Gen>, target: &GroupElement) -> Result<DisplayWordResult> {
    let letters = gens.iter().filter(|x| matches!(x, Gen::S(_))).count();
    let length = g.length(target);
    Ok(DisplayWordResult {
        name,
        word: word_text(&gens),
        equal: g.eval(&gens)? == *target,
        reduced: letters == length,
        length,
    })
}

fn unit(n: usize, i: usize) -> Vec<i32> {
    let mut v = vec![0; n];
    v[i - 1] = 1;
    v
}

/// Every displayed reduced word for rank `n` (type D words need `n ≥ 3`).
pub fn display_words(n: usize) -> Result<Vec<DisplayWordResult>> {
    let w = Group::new(GroupTag::W, n);
    let c = Group::new(GroupTag::CvRY, n);
    let b = Group::new(GroupTag::BvRY, n);
    let d = Group::new(GroupTag::D, n);
    let mut out = Vec::new();
    for i in 1..=n {
        let e = unit(n, i);
        out.push(display_result(&w, format!("W t(e{i})"), tep_word(n, i), &w.translation(&e)?)?);
        out.push(display_result(&w, format!("W w(e{i})"), wmu_word(i), &w.min_coset_rep(&e)?)?);
        out.push(display_result(&c, format!("CvRY t(e{i})"), tep_c_word(n, i), &c.translation(&e)?)?);
        out.push(display_result(&b, format!("BvRY t(e{i})"), tep_word(n, i), &b.translation(&e)?)?);
        if n >= 3 {
            out.push(display_result(&d, format!("D t(e{i})"), tep_d_word(i), &d.translation(&e)?)?);
            out.push(display_result(&d, format!("D w_D(e{i})"), wmu_d_word(i), &d.min_coset_rep(&e)?)?);
        }
    }
    let half = GroupElement::translation(GroupTag::BvRY, std::iter::repeat_n(1, n).collect())?;
    out.push(display_result(&b, "BvRY t(half sum)".into(), tep_b_half_word(n), &half)?);
    Ok(out)
}

/// `ℓ(t(ε_i)) = 2n` in `W`, with the displayed word.
pub fn translation_lengths(n: usize) -> Result<Vec<DisplayWordResult>> {
    let w = Group::new(GroupTag::W, n);
    (1..=n)
        .map(|i| {
            let r = display_result(&w, format!("W t(e{i})"), tep_word(n, i), &w.translation(&unit(n, i))?)?;
            Ok(DisplayWordResult { reduced: r.reduced && r.length == 2 * n, ..r })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiBallReport {
    pub n: usize,
    pub max_len: usize,
    pub elements: usize,
    /// `φ^C(w) = w` as transformations of `F_ℤ`.
    pub identity_on_f: bool,
    /// Distinct elements have distinct images.
    pub injective: bool,
    /// The letterwise inverse (`π ↦ s_0`, `s_0^{C∨} ↦ s_0 s_1 s_0`) undoes `φ^C` both ways.
    pub inverse_round_trip: bool,
}

impl PhiBallReport {
    pub fn passed(&self) -> bool {
        self.identity_on_f && self.injective && self.inverse_round_trip
    }
}

fn psi_c(c: &Group, w: &Group, v: &GroupElement) -> Result<GroupElement> {
    let word = c.reduced_word(v);
    let mut gens = Vec::new();
    if word.pi.is_some() {
        gens.push(Gen::S(0));
    }
    for &i in &word.letters {
        if i == 0 {
            gens.extend([Gen::S(0), Gen::S(1), Gen::S(0)]);
        } else {
            gens.push(Gen::S(i));
        }
    }
    w.eval(&gens)
}

/// `φ^C` on all elements of length at most `max_len`.
pub fn phi_c_ball(n: usize, max_len: usize) -> Result<PhiBallReport> {
    use std::collections::HashSet;
    let w = Group::new(GroupTag::W, n);
    let c = Group::new(GroupTag::CvRY, n);
    let elems = ball(&w, max_len);
    let mut images = HashSet::new();
    let (mut identity_on_f, mut round_trip) = (true, true);
    for (x, _) in &elems {
        let y = hom_phi_c(&w, &c, x)?;
        identity_on_f &= y == x.retag(GroupTag::CvRY)?;
        round_trip &= psi_c(&c, &w, &y)? == *x;
        images.insert(y);
    }
    let pi = c.gen(Gen::Pi(Pi::Cv))?;
    for (v, _) in ball(&c, max_len) {
        for u in [v.clone(), pi.mul(&v)?] {
            round_trip &= hom_phi_c(&w, &c, &psi_c(&c, &w, &u)?)? == u;
        }
    }
    Ok(PhiBallReport {
        n,
        max_len,
        elements: elems.len(),
        identity_on_f,
        injective: images.len() == elems.len(),
        inverse_round_trip: round_trip,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Lemma {
    /// `W → W^{C∨,RY}`, deleting the `s_0` steps
    C,
    /// `W → W^D`, deleting the `s_0` and `s_n` steps
    D,
}

impl Lemma {
    fn target(self) -> GroupTag {
        match self {
            Lemma::C => GroupTag::CvRY,
            Lemma::D => GroupTag::D,
        }
    }

    /// Letter image; `None` for letters sent to the identity.
    fn letter(self, n: usize, i: usize) -> Option<Gen> {
        match (self, i) {
            (Lemma::C, 0) => Some(Gen::Pi(Pi::Cv)),
            (Lemma::D, 0) => Some(Gen::Pi(Pi::D1)),
            (Lemma::D, i) if i == n => None,
            (_, i) => Some(Gen::S(i)),
        }
    }

    /// Positions kept by the walk map.
    fn kept(self, n: usize, i: usize) -> bool {
        match self {
            Lemma::C => i != 0,
            Lemma::D => i != 0 && i != n,
        }
    }
}

/// `φ(w(μ))` against the independently computed `w_C(μ)` / `w_D(μ)`.
pub fn phi_min_coset(lemma: Lemma, n: usize, mu: &[i32]) -> Result<bool> {
    let w = Group::new(GroupTag::W, n);
    let t = Group::new(lemma.target(), n);
    let x = w.min_coset_rep(mu)?;
    let y = match lemma {
        Lemma::C => hom_phi_c(&w, &t, &x)?,
        Lemma::D => hom_phi_d(&w, &t, &x)?,
    };
    Ok(y == t.min_coset_rep(mu)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct WalkBijectionReport {
    pub lemma: Lemma,
    pub n: usize,
    pub mu: Vec<i32>,
    pub status: String,
    /// Word of `w(μ)` and the image word after moving the automorphisms to the front.
    pub word: String,
    pub image_word: String,
    pub walks: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl WalkBijectionReport {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// The walk map of the deletion lemmas for one `μ`: the image word must be a reduced word of
/// the target's `w(μ)` of length `|I|`, with a leading automorphism iff the number of deleted
/// `s_0` letters is odd, and every walk must keep its endpoint's `wgt` and `dir`.
pub fn walk_bijection(lemma: Lemma, n: usize, mu: &[i32]) -> Result<WalkBijectionReport> {
    let w = Group::new(GroupTag::W, n);
    let t = Group::new(lemma.target(), n);
    let src = w.reduced_word(&w.min_coset_rep(mu)?);
    let letters = &src.letters;
    let gens: Vec<Gen> = letters.iter().filter_map(|&i| lemma.letter(n, i)).collect();
    let image = t.push_pi_left(&gens)?;
    let kept: Vec<usize> = (0..letters.len()).filter(|&k| lemma.kept(n, letters[k])).collect();
    let s = kept.len();
    let mut failures = Vec::new();

    let target = t.min_coset_rep(mu)?;
    if image.len() != s {
        failures.push(format!("image word has {} letters, |I| = {s}", image.len()));
    }
    if t.eval_word(&image)? != target {
        failures.push(format!("image word {image} is not the minimal coset representative"));
    }
    if t.length(&target) != s {
        failures.push(format!("length of the target element is {}, |I| = {s}", t.length(&target)));
    }
    let zeros = letters.iter().filter(|&&i| i == 0).count();
    if image.pi.is_some() != (zeros % 2 == 1) {
        failures.push(format!("automorphism prefix present = {}, s0 count = {zeros}", image.pi.is_some()));
    }

    let mut seen = std::collections::HashSet::new();
    let walks = 1usize << s;
    if image.len() == s {
        for idx in 0..walks as u64 {
            let sub = bits_of(idx, s);
            let mut bits = vec![true; letters.len()];
            for (&k, &b) in kept.iter().zip(&sub) {
                bits[k] = b;
            }
            let p = AlcoveWalk { start: w.identity(), word: src.clone(), bits };
            let q = AlcoveWalk { start: t.identity(), word: image.clone(), bits: sub };
            let (wp, dp) = p.endpoint_decompose(&w)?;
            let (wq, dq) = q.endpoint_decompose(&t)?;
            if wp != wq || dp.perm != dq.perm {
                failures.push(format!("walk {} maps to {}: wgt/dir {:?}/{:?} vs {:?}/{:?}", p, q, wp, dp.perm, wq, dq.perm));
            }
            seen.insert(q.bits);
        }
        if seen.len() != walks {
            failures.push("walk map is not injective".into());
        }
    }
    Ok(WalkBijectionReport {
        lemma,
        n,
        mu: mu.to_vec(),
        status: if failures.is_empty() { "pass" } else { "fail" }.to_string(),
        word: Word { pi: None, letters: letters.clone() }.to_string(),
        image_word: image.to_string(),
        walks,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn translation_words_have_length_2n() {
        for n in 2..=4 {
            for r in translation_lengths(n).unwrap() {
                assert!(r.passed(), "{r:?}");
            }
        }
    }

    #[test]
    fn phi_c_is_identity_on_small_ball() {
        let r = phi_c_ball(2, 4).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn c_walk_map_small() {
        for mu in [[1, 0], [0, 1], [-1, 2], [2, -1]] {
            let r = walk_bijection(Lemma::C, 2, &mu).unwrap();
            assert!(r.passed(), "{}", serde_json::to_string(&r).unwrap());
        }
    }
}
