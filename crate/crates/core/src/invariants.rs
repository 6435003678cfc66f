//! The invariant `(a, J)` of a Schubert class, the `(Z_i, Z_w)` bigrading,
//! and extremal weights of bigraded slices.

use std::fmt;

use serde::Serialize;

use crate::cominuscule::{fmt_roots, CominusculeSpace, SchubertClass, SpaceKind};
use crate::error::{Error, Result};
use crate::root_system::{Family, Root};

/// `(a, J)` with `J` sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AJInvariant {
    pub a: u32,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
}

impl AJInvariant {
    pub fn new(a: u32, mut j: Vec<usize>) -> AJInvariant {
        j.sort_unstable();
        j.dedup();
        AJInvariant { a, j }
    }

    /// `α(Z_w)`.
    pub fn zw(&self, alpha: &Root) -> i32 {
        self.j.iter().map(|&j| alpha.coeff(j)).sum()
    }
}

impl fmt::Display for AJInvariant {
    /// `a:j1,j2,...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let js: Vec<String> = self.j.iter().map(|j| j.to_string()).collect();
        write!(f, "{}:{}", self.a, js.join(","))
    }
}

/// The invariant of a class, or a marker for the two extremal classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ClassInvariant {
    Point,
    Whole,
    Interior(AJInvariant),
}

impl ClassInvariant {
    pub fn aj(&self) -> Option<&AJInvariant> {
        match self {
            ClassInvariant::Interior(aj) => Some(aj),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Bigrade {
    pub k: i32,
    pub l: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Highest,
    Lowest,
}

pub fn class_invariant(space: &CominusculeSpace, w: &SchubertClass) -> Result<ClassInvariant> {
    if w.dim() == 0 {
        Ok(ClassInvariant::Point)
    } else if w.dim() == space.dim() {
        Ok(ClassInvariant::Whole)
    } else {
        compute_aj(space, w).map(ClassInvariant::Interior)
    }
}

/// `J` from the stabiliser of `n_w`, `a` as the largest `Z_w`-grade in `Δ(w)`.
pub fn compute_aj(space: &CominusculeSpace, w: &SchubertClass) -> Result<AJInvariant> {
    if w.dim() == 0 {
        return Err(Error::ExtremalClass("point"));
    }
    if w.dim() == space.dim() {
        return Err(Error::ExtremalClass("whole space"));
    }
    let sys = space.system();
    let i = space.node();
    let j: Vec<usize> = (1..=sys.rank())
        .filter(|&j| j != i)
        .filter(|&j| {
            let aj = sys.simple_root(j);
            w.ideal().iter().any(|mu| {
                let up = mu.plus(&aj);
                space.in_g1(&up) && !w.contains(&up)
            })
        })
        .collect();
    let aj = AJInvariant::new(0, j);
    let a = w.ideal().iter().map(|mu| aj.zw(mu)).max().unwrap_or(0);
    let aj = AJInvariant::new(a as u32, aj.j);
    let rebuilt = ideal_from_aj(space, &aj);
    if rebuilt != w.ideal() {
        return Err(Error::InvariantFault(format!(
            "(a, J) = {aj} rebuilds {} instead of {}",
            fmt_roots(&rebuilt),
            fmt_roots(w.ideal())
        )));
    }
    Ok(aj)
}

/// `{α ∈ Δ(g₁) : α(Z_w) ≤ a}`.
pub fn ideal_from_aj(space: &CominusculeSpace, aj: &AJInvariant) -> Vec<Root> {
    space
        .g1()
        .iter()
        .filter(|r| aj.zw(r) <= aj.a as i32)
        .cloned()
        .collect()
}

pub fn bigrade(space: &CominusculeSpace, j: &[usize], alpha: &Root) -> Bigrade {
    Bigrade {
        k: alpha.coeff(space.node()),
        l: j.iter().map(|&x| alpha.coeff(x)).sum(),
    }
}

/// `Δ(g_{k,l})` over all roots, in root order.
pub fn slice(space: &CominusculeSpace, j: &[usize], k: i32, l: i32) -> Vec<Root> {
    let mut v: Vec<Root> = space
        .system()
        .all_roots()
        .into_iter()
        .filter(|r| bigrade(space, j, r) == Bigrade { k, l })
        .collect();
    v.sort();
    v
}

/// Simple roots of `g_{0,0}`: indices outside `J ∪ {i}`.
pub fn levi_simple(space: &CominusculeSpace, j: &[usize]) -> Vec<usize> {
    (1..=space.rank())
        .filter(|x| *x != space.node() && !j.contains(x))
        .collect()
}

/// `g_{0,0}`-highest (or lowest) weights of the slice `g_{k,l}`.
pub fn extremal_weights(
    space: &CominusculeSpace,
    j: &[usize],
    k: i32,
    l: i32,
    dir: Direction,
) -> Vec<Root> {
    let sys = space.system();
    let levi = levi_simple(space, j);
    slice(space, j, k, l)
        .into_iter()
        .filter(|g| {
            levi.iter().all(|&b| {
                let beta = sys.simple_root(b);
                let next = match dir {
                    Direction::Highest => g.plus(&beta),
                    Direction::Lowest => g.minus(&beta),
                };
                !sys.is_root(&next)
            })
        })
        .collect()
}

pub fn is_smooth(space: &CominusculeSpace, w: &SchubertClass) -> Result<bool> {
    match class_invariant(space, w)? {
        ClassInvariant::Interior(aj) => Ok(aj.a == 0),
        _ => Ok(true),
    }
}

fn shape_error(space: &CominusculeSpace, reason: String) -> Error {
    Error::InvalidAJ {
        space: space.name(),
        reason,
    }
}

/// Family-specific constraints on `(a, J)`. Exceptional spaces have none.
pub fn check_family_shape(space: &CominusculeSpace, aj: &AJInvariant) -> Result<()> {
    let n = space.rank();
    let i = space.node();
    let a = aj.a as usize;
    if aj.j.is_empty() {
        return Err(shape_error(space, "J is empty".into()));
    }
    if aj.j.iter().any(|&x| x == 0 || x > n || x == i) {
        return Err(shape_error(space, format!("J = {:?} has bad indices", aj.j)));
    }
    let in_range = |p: usize, lo: usize| p == lo || p == lo + 1;
    match space.kind() {
        SpaceKind::Grassmannian { .. } => {
            let p = aj.j.iter().filter(|&&x| x < i).count();
            let q = aj.j.iter().filter(|&&x| x > i).count();
            if !in_range(p, a) || !in_range(q, a) {
                return Err(shape_error(
                    space,
                    format!("p = {p}, q = {q} not in {{a, a+1}} for a = {a}"),
                ));
            }
        }
        SpaceKind::Lagrangian { .. } => {
            let p = aj.j.len();
            if !in_range(p, a) {
                return Err(shape_error(space, format!("|J| = {p} not in {{a, a+1}}")));
            }
        }
        SpaceKind::Spinor { node, .. } if node == n => {
            let alpha = usize::from(aj.j.contains(&(n - 1)));
            let p = aj.j.len();
            if p < alpha || !in_range(p - alpha, a) {
                return Err(shape_error(
                    space,
                    format!("|J| - [n-1 in J] = {} not in {{a, a+1}}", p - alpha),
                ));
            }
            // j_p < ... < j_1, with j_{p+1} = 0.
            let r = (a + alpha).div_ceil(2);
            if r > alpha && r <= p {
                let desc: Vec<usize> = aj.j.iter().rev().copied().collect();
                let jr = desc[r - 1];
                let jr1 = if r < p { desc[r] } else { 0 };
                if jr - jr1 < 2 {
                    return Err(shape_error(
                        space,
                        format!("j_r - j_(r+1) = {} < 2 with r = {r}", jr - jr1),
                    ));
                }
            }
        }
        SpaceKind::Quadric { .. } => {
            let ok = match (space.family(), aj.j.as_slice(), a) {
                (Family::B, [j], 0 | 1) => (2..=n).contains(j),
                (Family::D, [j], 0) => (2..=n).contains(j),
                (Family::D, [j], 1) => (2..=n - 2).contains(j),
                (Family::D, [x, y], 0 | 1) => *x == n - 1 && *y == n,
                _ => false,
            };
            if !ok {
                return Err(shape_error(space, format!("{aj} is not a quadric invariant")));
            }
        }
        _ => {}
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::Family;

    fn range(n: usize, lo: usize, hi: usize) -> Root {
        let mut c = vec![0; n];
        for x in lo..=hi {
            c[x - 1] = 1;
        }
        Root(c)
    }

    #[test]
    fn bigrade_examples() {
        let s = CominusculeSpace::new(Family::A, 12, 5).unwrap();
        let j = [2, 3, 7, 9, 12];
        let sys = s.system();
        assert_eq!(bigrade(&s, &j, &sys.simple_root(7)), Bigrade { k: 0, l: 1 });
        assert_eq!(bigrade(&s, &j, &sys.simple_root(5)), Bigrade { k: 1, l: 0 });
        assert_eq!(bigrade(&s, &j, &range(12, 3, 8)), Bigrade { k: 1, l: 2 });
    }

    #[test]
    fn extremal_classes_rejected() {
        let s = CominusculeSpace::new(Family::C, 3, 3).unwrap();
        assert!(matches!(
            compute_aj(&s, &s.point_class()),
            Err(Error::ExtremalClass(_))
        ));
        assert!(compute_aj(&s, &s.whole_class()).is_err());
        assert_eq!(class_invariant(&s, &s.point_class()).unwrap(), ClassInvariant::Point);
    }

    #[test]
    fn divisor_of_projective_space() {
        // P^3 = Gr(1,4): every interior class is a linear subspace, hence smooth.
        let s = CominusculeSpace::new(Family::A, 3, 1).unwrap();
        for w in s.classes() {
            assert!(is_smooth(&s, w).unwrap());
        }
    }
}
