//! Weyl group words, inversion sets and Poincaré duality on minimal coset
//! representatives.

use std::collections::HashSet;

use serde::Serialize;

use crate::cominuscule::{CominusculeSpace, SchubertClass};
use crate::error::{Error, Result};
use crate::root_system::{Root, RootSystem};

/// A word in the simple reflections. Letters act right to left, so
/// `[1, 2]` is `r_1 r_2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> WeylWord {
        WeylWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    /// The product `self · other`.
    pub fn then(&self, other: &WeylWord) -> WeylWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        WeylWord(v)
    }
}

pub fn act(sys: &RootSystem, word: &WeylWord, alpha: &Root) -> Root {
    word.0
        .iter()
        .rev()
        .fold(alpha.clone(), |r, &j| sys.reflect(j, &r))
}

/// `{α > 0 : w⁻¹α < 0}`, sorted. Valid for non-reduced words too.
pub fn inversion_set(sys: &RootSystem, word: &WeylWord) -> Vec<Root> {
    let inv = word.inverse();
    sys.positive_roots()
        .iter()
        .filter(|a| !act(sys, &inv, a).is_positive())
        .cloned()
        .collect()
}

/// Checks that `phi` and its complement in the positive roots are both closed.
/// Returns a witness pair on failure.
pub fn check_inversion_set(sys: &RootSystem, phi: &[Root]) -> Result<()> {
    let set: HashSet<&Root> = phi.iter().collect();
    for r in phi {
        if !sys.is_positive_root(r) {
            return Err(Error::NotInversionSet(format!("{r} is not a positive root")));
        }
    }
    let pos = sys.positive_roots();
    for (x, a) in pos.iter().enumerate() {
        for b in &pos[x..] {
            let s = a.plus(b);
            if !sys.is_positive_root(&s) {
                continue;
            }
            let (ia, ib, is) = (set.contains(a), set.contains(b), set.contains(&s));
            if ia && ib && !is {
                return Err(Error::NotInversionSet(format!(
                    "{a} and {b} lie in the set but their sum {s} does not"
                )));
            }
            if !ia && !ib && is {
                return Err(Error::NotInversionSet(format!(
                    "{a} and {b} lie outside the set but their sum {s} does not"
                )));
            }
        }
    }
    Ok(())
}

/// A reduced word with the given inversion set. Peels the lowest-indexed
/// simple root first.
pub fn word_from_inversions(sys: &RootSystem, phi: &[Root]) -> Result<WeylWord> {
    check_inversion_set(sys, phi)?;
    let mut cur: Vec<Root> = phi.to_vec();
    let mut letters = Vec::with_capacity(phi.len());
    while !cur.is_empty() {
        let j = (1..=sys.rank())
            .find(|&j| cur.contains(&sys.simple_root(j)))
            .ok_or_else(|| {
                Error::InvariantFault("non-empty inversion set without a simple root".into())
            })?;
        let aj = sys.simple_root(j);
        cur = cur
            .iter()
            .filter(|r| **r != aj)
            .map(|r| sys.reflect(j, r))
            .collect();
        letters.push(j);
    }
    let word = WeylWord(letters);
    let mut want = phi.to_vec();
    want.sort();
    if inversion_set(sys, &word) != want {
        return Err(Error::InvariantFault(format!(
            "word {:?} does not reproduce its inversion set",
            word.0
        )));
    }
    Ok(word)
}

/// Longest element of the parabolic subgroup generated by `support`.
pub fn longest_element(sys: &RootSystem, support: &[usize]) -> WeylWord {
    let phi: Vec<Root> = sys
        .positive_roots()
        .iter()
        .filter(|r| (1..=sys.rank()).all(|j| r.coeff(j) == 0 || support.contains(&j)))
        .cloned()
        .collect();
    word_from_inversions(sys, &phi).expect("root subsystem is an inversion set")
}

/// Which of the two candidate products realises the dual on a space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DualConvention {
    /// `w_{0,P} · w · w_0`
    LeftParabolic,
    /// `w_0 · w · w_{0,P}`
    RightParabolic,
}

pub(crate) fn min_coset_rep(sys: &RootSystem, node: usize, phi: Vec<Root>) -> Vec<Root> {
    let mut cur = phi;
    loop {
        let j = (1..=sys.rank())
            .filter(|&j| j != node)
            .find(|&j| cur.contains(&sys.simple_root(j)));
        let Some(j) = j else { break };
        let aj = sys.simple_root(j);
        cur = cur
            .iter()
            .filter(|r| **r != aj)
            .map(|r| sys.reflect(j, r))
            .collect();
    }
    cur.sort();
    cur
}

pub(crate) fn dual_candidate(
    space: &CominusculeSpace,
    w: &SchubertClass,
    conv: DualConvention,
) -> Result<SchubertClass> {
    let sys = space.system();
    let word = word_from_inversions(sys, w.ideal())?;
    let w0 = longest_element(sys, &(1..=sys.rank()).collect::<Vec<_>>());
    let levi: Vec<usize> = (1..=sys.rank()).filter(|&j| j != space.node()).collect();
    let w0p = longest_element(sys, &levi);
    let prod = match conv {
        DualConvention::LeftParabolic => w0p.then(&word).then(&w0),
        DualConvention::RightParabolic => w0.then(&word).then(&w0p),
    };
    let phi = min_coset_rep(sys, space.node(), inversion_set(sys, &prod));
    space.class_from_ideal(phi)
}

fn candidate_ok(space: &CominusculeSpace, w: &SchubertClass, conv: DualConvention) -> bool {
    let Ok(d) = dual_candidate(space, w, conv) else {
        return false;
    };
    if d.dim() + w.dim() != space.dim() {
        return false;
    }
    matches!(dual_candidate(space, &d, conv), Ok(dd) if dd == *w)
}

/// The convention that passes the dimension and involution checks on every
/// class of the space.
pub fn dual_convention(space: &CominusculeSpace) -> Result<DualConvention> {
    let classes = space.classes();
    for conv in [DualConvention::LeftParabolic, DualConvention::RightParabolic] {
        if classes.iter().all(|w| candidate_ok(space, w, conv)) {
            return Ok(conv);
        }
    }
    Err(Error::DualityFault(format!(
        "no candidate product is a dimension-complementing involution on {}",
        space.name()
    )))
}

/// Poincaré dual class `w*`.
pub fn poincare_dual(space: &CominusculeSpace, w: &SchubertClass) -> Result<SchubertClass> {
    let conv = space.duality()?;
    let d = dual_candidate(space, w, conv)?;
    if d.dim() + w.dim() != space.dim() {
        return Err(Error::DualityFault(format!(
            "|w*| = {} but dim X - |w| = {}",
            d.dim(),
            space.dim() - w.dim()
        )));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::Family;

    #[test]
    fn action_basics() {
        let s = RootSystem::new(Family::A, 3).unwrap();
        let a2 = s.simple_root(2);
        assert_eq!(act(&s, &WeylWord::identity(), &a2), a2);
        assert_eq!(act(&s, &WeylWord(vec![2]), &a2), a2.neg());
        let w = WeylWord(vec![1, 2, 3, 2]);
        for r in s.all_roots() {
            assert_eq!(act(&s, &w, &act(&s, &w.inverse(), &r)), r);
        }
    }

    #[test]
    fn inversion_examples() {
        let s = RootSystem::new(Family::A, 2).unwrap();
        assert!(inversion_set(&s, &WeylWord::identity()).is_empty());
        assert_eq!(inversion_set(&s, &WeylWord(vec![2])), vec![s.simple_root(2)]);
        assert_eq!(inversion_set(&s, &WeylWord(vec![1, 2, 1])).len(), 3);
    }

    #[test]
    fn words_from_inversions() {
        let s = RootSystem::new(Family::A, 3).unwrap();
        assert_eq!(word_from_inversions(&s, &[]).unwrap(), WeylWord::identity());
        assert_eq!(
            word_from_inversions(&s, &[s.simple_root(3)]).unwrap(),
            WeylWord(vec![3])
        );
        let bad = [s.simple_root(1), s.simple_root(2)];
        assert!(matches!(
            word_from_inversions(&s, &bad),
            Err(Error::NotInversionSet(_))
        ));
    }

    #[test]
    fn longest_elements() {
        let a1 = RootSystem::new(Family::A, 1).unwrap();
        assert_eq!(longest_element(&a1, &[1]), WeylWord(vec![1]));
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        assert_eq!(longest_element(&a2, &[1, 2]).len(), 3);
        let a3 = RootSystem::new(Family::A, 3).unwrap();
        assert_eq!(longest_element(&a3, &[1, 3]).len(), 2);
        let e7 = RootSystem::new(Family::E7, 7).unwrap();
        let w0 = longest_element(&e7, &[1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(inversion_set(&e7, &w0), e7.positive_roots().to_vec());
    }
}
