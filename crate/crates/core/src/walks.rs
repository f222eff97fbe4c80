//! Alcove walks of a fixed type.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::roots::{AffineFn, Vector};
use crate::weyl::{Group, GroupElement, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepClass {
    PositiveCrossing,
    NegativeCrossing,
    PositiveFolding,
    NegativeFolding,
}

impl StepClass {
    pub fn is_folding(self) -> bool {
        matches!(self, StepClass::PositiveFolding | StepClass::NegativeFolding)
    }
}

/// The class of a step whose separating root (seen from the walk's current alcove) is `gamma`.
pub fn step_class(gamma: &AffineFn, bit: bool) -> Result<StepClass> {
    if gamma.is_constant() {
        return Err(Error::Domain(format!("constant separating root {gamma}")));
    }
    let pos = gamma.finite_positive();
    Ok(match (bit, pos) {
        (true, false) => StepClass::PositiveCrossing,
        (true, true) => StepClass::NegativeCrossing,
        (false, true) => StepClass::PositiveFolding,
        (false, false) => StepClass::NegativeFolding,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlcoveWalk {
    pub start: GroupElement,
    pub word: Word,
    pub bits: Vec<bool>,
}

impl AlcoveWalk {
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// `v_0, …, v_r` with `v_0 = z·π`.
    pub fn partial_products(&self, g: &Group) -> Result<Vec<GroupElement>> {
        let mut v = self.start.clone();
        if let Some(p) = self.word.pi {
            v = v.mul(g.pi(p).ok_or_else(|| Error::Domain(format!("no {} here", p.label())))?)?;
        }
        let mut out = Vec::with_capacity(self.bits.len() + 1);
        out.push(v.clone());
        for (&i, &b) in self.word.letters.iter().zip(&self.bits) {
            if b {
                v = v.mul(g.s(i))?;
            }
            out.push(v.clone());
        }
        Ok(out)
    }

    /// Classifies step `k` (1-based).
    pub fn classify_step(&self, g: &Group, k: usize) -> Result<StepClass> {
        if k == 0 || k > self.len() {
            return Err(Error::Domain(format!("step {k} out of range")));
        }
        let v = &self.partial_products(g)?[k - 1];
        let gamma = v.apply(g.root(self.word.letters[k - 1]).as_fn());
        step_class(&gamma, self.bits[k - 1])
    }

    pub fn classes(&self, g: &Group) -> Result<Vec<StepClass>> {
        let vs = self.partial_products(g)?;
        self.word
            .letters
            .iter()
            .zip(&self.bits)
            .zip(&vs)
            .map(|((&i, &b), v)| step_class(&v.apply(g.root(i).as_fn()), b))
            .collect()
    }

    pub fn endpoint(&self, g: &Group) -> Result<GroupElement> {
        Ok(self.partial_products(g)?.pop().expect("nonempty"))
    }

    /// `e(p) = t(wgt)·dir`, with `wgt` doubled.
    pub fn endpoint_decompose(&self, g: &Group) -> Result<(Vector, GroupElement)> {
        let e = self.endpoint(g)?;
        Ok((e.trans2.clone(), e.finite_part()))
    }

    pub fn bit_string(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

/// Text form `[1,2,1,0]/0111`; a leading automorphism is written `pi^Cv[...]`.
impl fmt::Display for AlcoveWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.word.pi {
            f.write_str(p.label())?;
        }
        let ls: Vec<String> = self.word.letters.iter().map(usize::to_string).collect();
        write!(f, "[{}]/{}", ls.join(","), self.bit_string())
    }
}

/// Parsed walk text: the word and the bits (the start is supplied separately).
pub fn parse_walk(s: &str) -> Result<(Word, Vec<bool>)> {
    let bad = || Error::Parse(format!("bad walk {s:?}"));
    let open = s.find('[').ok_or_else(bad)?;
    let close = s.find("]/").ok_or_else(bad)?;
    let pi = if open == 0 {
        None
    } else {
        match crate::weyl::Gen::from_str(&s[..open])? {
            crate::weyl::Gen::Pi(p) => Some(p),
            _ => return Err(bad()),
        }
    };
    let inner = &s[open + 1..close];
    let letters = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?
    };
    let bits = s[close + 2..]
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(bad()),
        })
        .collect::<Result<Vec<_>>>()?;
    if bits.len() != letters.len() {
        return Err(bad());
    }
    Ok((Word { pi, letters }, bits))
}

/// Bits of walk number `idx` in big-endian counter order.
pub fn bits_of(idx: u64, r: usize) -> Vec<bool> {
    (0..r).map(|k| (idx >> (r - 1 - k)) & 1 == 1).collect()
}

/// All `2^r` walks of type `word` starting at `z`, bits counted as a big-endian binary counter.
pub fn enumerate_walks<'a>(
    word: &'a Word,
    z: &'a GroupElement,
) -> impl Iterator<Item = AlcoveWalk> + 'a {
    let r = word.len();
    (0..1u64 << r).map(move |idx| AlcoveWalk { start: z.clone(), word: word.clone(), bits: bits_of(idx, r) })
}

/// `β_k = s_{i_r}⋯s_{i_{k+1}}(a_{i_k})`, for `k = 1..r`.
pub fn beta_roots(g: &Group, letters: &[usize]) -> Vec<AffineFn> {
    let mut out = vec![AffineFn::new([], 0); letters.len()];
    let mut acc = g.identity();
    for (k, &i) in letters.iter().enumerate().rev() {
        out[k] = acc.apply(g.root(i).as_fn());
        acc = acc.mul(g.s(i)).expect("same group");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::GroupTag;

    #[test]
    fn paper_example_walks() {
        let g = Group::new(GroupTag::W, 2);
        let word = Word::new(vec![1, 2, 1, 0]);
        let e = g.identity();
        let walks: Vec<_> = enumerate_walks(&word, &e).collect();
        assert_eq!(walks.len(), 16);
        let p1 = walks.iter().find(|w| w.bit_string() == "0111").unwrap();
        let vs = p1.partial_products(&g).unwrap();
        assert_eq!(vs[0], e);
        assert_eq!(vs[1], e);
        assert_eq!(vs[2], *g.s(2));
        assert!(p1.classify_step(&g, 1).unwrap().is_folding());
        assert_eq!(p1.to_string(), "[1,2,1,0]/0111");
    }

    #[test]
    fn betas_for_short_words() {
        let g = Group::new(GroupTag::W, 2);
        assert_eq!(beta_roots(&g, &[0])[0].to_string(), "-2e1+c");
        let b = beta_roots(&g, &[1, 0]);
        assert_eq!(b[0], g.s(0).apply(g.root(1).as_fn()));
        assert_eq!(b[1], *g.root(0).as_fn());
    }

    #[test]
    fn straight_walk_of_s0() {
        let g = Group::new(GroupTag::W, 2);
        let word = Word::new(vec![0]);
        let e = g.identity();
        let straight = enumerate_walks(&word, &e).last().unwrap();
        let (wgt, dir) = straight.endpoint_decompose(&g).unwrap();
        assert_eq!(wgt.as_slice(), &[2, 0]);
        assert_eq!(dir.perm.as_slice(), &[-1, 2]);
        let folded = enumerate_walks(&word, &e).next().unwrap();
        assert!(folded.endpoint(&g).unwrap().is_identity());
    }

    #[test]
    fn walk_text_round_trip() {
        let (w, b) = parse_walk("pi^Cv[1,0]/10").unwrap();
        assert_eq!(w.pi, Some(crate::weyl::Pi::Cv));
        assert_eq!(w.letters, vec![1, 0]);
        assert_eq!(b, vec![true, false]);
        assert!(parse_walk("[1,2]/1").is_err());
    }
}
