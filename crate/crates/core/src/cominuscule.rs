//! Cominuscule spaces `G/P`, their Schubert classes as order ideals of
//! `Δ(g₁)`, and the Hasse poset with degrees.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_system::{Family, Root, RootSystem};
use crate::weyl::{self, DualConvention};

/// Geometric name of a cominuscule space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SpaceKind {
    /// `Gr(k, n1)`, k-planes in an `n1`-dimensional space.
    Grassmannian { k: usize, n1: usize },
    /// Smooth quadric of dimension `dim`.
    Quadric { dim: usize },
    /// `LG(n, 2n)`.
    Lagrangian { n: usize },
    /// Spinor variety `S_n` for `D_n` at node `n - 1` or `n`.
    Spinor { n: usize, node: usize },
    CayleyPlane { node: usize },
    Freudenthal,
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SpaceKind::Grassmannian { k, n1 } => write!(f, "Gr({k},{n1})"),
            SpaceKind::Quadric { dim } => write!(f, "Q^{dim}"),
            SpaceKind::Lagrangian { n } => write!(f, "LG({n},{})", 2 * n),
            SpaceKind::Spinor { n, .. } => write!(f, "S_{n}"),
            SpaceKind::CayleyPlane { node } => write!(f, "E6/P{node}"),
            SpaceKind::Freudenthal => write!(f, "E7/P7"),
        }
    }
}

/// A Schubert class, stored as its inversion set `Δ(w) ⊆ Δ(g₁)` (sorted).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SchubertClass {
    ideal: Vec<Root>,
}

impl SchubertClass {
    pub fn ideal(&self) -> &[Root] {
        &self.ideal
    }

    pub fn dim(&self) -> usize {
        self.ideal.len()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.ideal.binary_search(r).is_ok()
    }

    fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.ideal
            .len()
            .cmp(&other.ideal.len())
            .then_with(|| self.ideal.cmp(&other.ideal))
    }
}

#[derive(Debug)]
pub struct CominusculeSpace {
    sys: RootSystem,
    node: usize,
    kind: SpaceKind,
    g1: Vec<Root>,
    g1_index: HashMap<Root, usize>,
    /// For each element of `g1`, the mask of elements strictly below it.
    below: Vec<u64>,
    poset: OnceLock<HassePoset>,
    duality: OnceLock<Result<DualConvention>>,
}

fn space_kind(family: Family, n: usize, node: usize) -> SpaceKind {
    match family {
        Family::A => SpaceKind::Grassmannian { k: node, n1: n + 1 },
        Family::B => SpaceKind::Quadric { dim: 2 * n - 1 },
        Family::C => SpaceKind::Lagrangian { n },
        Family::D if node == 1 => SpaceKind::Quadric { dim: 2 * n - 2 },
        Family::D => SpaceKind::Spinor { n, node },
        Family::E6 => SpaceKind::CayleyPlane { node },
        Family::E7 => SpaceKind::Freudenthal,
    }
}

impl CominusculeSpace {
    pub fn new(family: Family, rank: usize, node: usize) -> Result<CominusculeSpace> {
        let sys = RootSystem::new(family, rank)?;
        let allowed = sys.cominuscule_nodes();
        if !allowed.contains(&node) {
            return Err(Error::NotCominuscule {
                system: sys.name(),
                node,
                allowed,
            });
        }
        let g1: Vec<Root> = sys
            .positive_roots()
            .iter()
            .filter(|r| r.coeff(node) == 1)
            .cloned()
            .collect();
        if g1.len() > 64 {
            return Err(Error::InvariantFault("g1 larger than 64 roots".into()));
        }
        let g1_index = g1.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        let below = g1
            .iter()
            .map(|b| {
                g1.iter()
                    .enumerate()
                    .filter(|(_, a)| *a != b && a.below(b))
                    .fold(0u64, |m, (k, _)| m | (1 << k))
            })
            .collect();
        // D3 is A3 with a different labelling; name it by its geometry.
        let kind = if family == Family::D && rank == 3 && node != 1 {
            SpaceKind::Spinor { n: 3, node }
        } else {
            space_kind(family, rank, node)
        };
        Ok(CominusculeSpace {
            sys,
            node,
            kind,
            g1,
            g1_index,
            below,
            poset: OnceLock::new(),
            duality: OnceLock::new(),
        })
    }

    pub fn system(&self) -> &RootSystem {
        &self.sys
    }

    pub fn family(&self) -> Family {
        self.sys.family()
    }

    pub fn rank(&self) -> usize {
        self.sys.rank()
    }

    pub fn node(&self) -> usize {
        self.node
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn name(&self) -> String {
        self.kind.to_string()
    }

    pub fn dim(&self) -> usize {
        self.g1.len()
    }

    /// `Δ(g₁)` in (height, lex) order.
    pub fn g1(&self) -> &[Root] {
        &self.g1
    }

    pub fn in_g1(&self, r: &Root) -> bool {
        self.g1_index.contains_key(r)
    }

    pub(crate) fn mask_of(&self, roots: &[Root]) -> Option<u64> {
        roots.iter().try_fold(0u64, |m, r| {
            self.g1_index.get(r).map(|&k| m | (1 << k))
        })
    }

    fn roots_of(&self, mask: u64) -> Vec<Root> {
        // g1 is sorted, so bit order gives sorted output.
        (0..self.g1.len())
            .filter(|k| mask & (1 << k) != 0)
            .map(|k| self.g1[k].clone())
            .collect()
    }

    pub(crate) fn is_ideal_mask(&self, mask: u64) -> bool {
        (0..self.g1.len()).all(|k| mask & (1 << k) == 0 || self.below[k] & !mask == 0)
    }

    /// Closure test of the complement, independent of the order-ideal test.
    pub fn complement_closed(&self, phi: &[Root]) -> bool {
        let set: HashSet<&Root> = phi.iter().collect();
        let pos = self.sys.positive_roots();
        for (x, a) in pos.iter().enumerate() {
            if set.contains(a) {
                continue;
            }
            for b in &pos[x..] {
                if set.contains(b) {
                    continue;
                }
                if set.contains(&a.plus(b)) {
                    return false;
                }
            }
        }
        true
    }

    /// Validates `phi` as a Schubert class of this space.
    pub fn class_from_ideal(&self, mut phi: Vec<Root>) -> Result<SchubertClass> {
        phi.sort();
        phi.dedup();
        let mask = self.mask_of(&phi).ok_or_else(|| {
            Error::UnknownClass(format!("{} (roots outside g1)", fmt_roots(&phi)))
        })?;
        if !self.is_ideal_mask(mask) {
            return Err(Error::UnknownClass(format!(
                "{} (not a lower order ideal)",
                fmt_roots(&phi)
            )));
        }
        Ok(SchubertClass { ideal: phi })
    }

    pub fn point_class(&self) -> SchubertClass {
        SchubertClass { ideal: Vec::new() }
    }

    pub fn whole_class(&self) -> SchubertClass {
        SchubertClass {
            ideal: self.g1.clone(),
        }
    }

    pub fn is_extremal(&self, w: &SchubertClass) -> bool {
        w.dim() == 0 || w.dim() == self.dim()
    }

    /// Ideals removable from `w`: maximal elements of `Δ(w)`.
    pub fn removable(&self, w: &SchubertClass) -> Vec<Root> {
        let mask = self.mask_of(w.ideal()).expect("class of this space");
        w.ideal()
            .iter()
            .filter(|r| {
                let k = self.g1_index[*r];
                self.is_ideal_mask(mask & !(1 << k))
            })
            .cloned()
            .collect()
    }

    pub fn poset(&self) -> &HassePoset {
        self.poset.get_or_init(|| HassePoset::build(self))
    }

    pub fn classes(&self) -> &[SchubertClass] {
        &self.poset().classes
    }

    /// The duality convention, fixed once per space.
    pub fn duality(&self) -> Result<DualConvention> {
        self.duality
            .get_or_init(|| weyl::dual_convention(self))
            .clone()
    }
}

pub fn build_space(family: Family, rank: usize, node: usize) -> Result<CominusculeSpace> {
    CominusculeSpace::new(family, rank, node)
}

pub(crate) fn fmt_roots(rs: &[Root]) -> String {
    let parts: Vec<String> = rs.iter().map(|r| r.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

/// All Schubert classes with covers and degrees.
#[derive(Debug, Clone)]
pub struct HassePoset {
    classes: Vec<SchubertClass>,
    lookup: HashMap<u64, usize>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    degrees: Vec<u64>,
}

impl HassePoset {
    fn build(space: &CominusculeSpace) -> HassePoset {
        let n = space.g1.len();
        let mut masks: Vec<u64> = vec![0];
        let mut layer: Vec<u64> = vec![0];
        while !layer.is_empty() {
            let mut next = HashSet::new();
            for &m in &layer {
                for k in 0..n {
                    if m & (1 << k) == 0 && space.below[k] & !m == 0 {
                        next.insert(m | (1 << k));
                    }
                }
            }
            layer = next.into_iter().collect();
            masks.extend_from_slice(&layer);
        }
        let mut classes: Vec<(SchubertClass, u64)> = masks
            .into_iter()
            .map(|m| (SchubertClass { ideal: space.roots_of(m) }, m))
            .collect();
        classes.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        for (c, _) in &classes {
            assert!(
                space.complement_closed(c.ideal()),
                "order ideal {} has non-closed complement",
                fmt_roots(c.ideal())
            );
        }
        let lookup: HashMap<u64, usize> =
            classes.iter().enumerate().map(|(k, (_, m))| (*m, k)).collect();
        let mut lower = vec![Vec::new(); classes.len()];
        let mut upper = vec![Vec::new(); classes.len()];
        for (id, (_, m)) in classes.iter().enumerate() {
            for k in 0..n {
                if m & (1 << k) != 0 {
                    if let Some(&low) = lookup.get(&(m & !(1 << k))) {
                        lower[id].push(low);
                        upper[low].push(id);
                    }
                }
            }
        }
        for v in lower.iter_mut().chain(upper.iter_mut()) {
            v.sort_unstable();
        }
        // Chevalley multiplicity of the cover adding γ: |α_i|² / |γ|².
        let sys = &space.sys;
        let long = sys.inner(&sys.simple_root(space.node), &sys.simple_root(space.node));
        let weight: Vec<u64> = space
            .g1
            .iter()
            .map(|g| (long / sys.inner(g, g)) as u64)
            .collect();
        let mut degrees = vec![0u64; classes.len()];
        degrees[0] = 1;
        for (id, (_, m)) in classes.iter().enumerate().skip(1) {
            degrees[id] = (0..n)
                .filter(|k| m & (1 << k) != 0)
                .filter_map(|k| lookup.get(&(m & !(1 << k))).map(|&l| degrees[l] * weight[k]))
                .sum();
        }
        HassePoset {
            classes: classes.into_iter().map(|(c, _)| c).collect(),
            lookup,
            lower,
            upper,
            degrees,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[SchubertClass] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &SchubertClass {
        &self.classes[id]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.classes.len() - 1
    }

    /// Identifier of a class, by canonical order.
    pub fn id_of(&self, space: &CominusculeSpace, w: &SchubertClass) -> Option<usize> {
        space.mask_of(w.ideal()).and_then(|m| self.lookup.get(&m).copied())
    }

    pub fn lower_covers(&self, id: usize) -> &[usize] {
        &self.lower[id]
    }

    pub fn upper_covers(&self, id: usize) -> &[usize] {
        &self.upper[id]
    }

    /// Cover pairs `(lower, upper)`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for (id, ups) in self.upper.iter().enumerate() {
            v.extend(ups.iter().map(|&u| (id, u)));
        }
        v
    }

    /// Degree in the minimal embedding: saturated chains from the bottom
    /// class, each cover weighted by its Chevalley multiplicity. The weights
    /// are all 1 on minuscule spaces.
    pub fn degree(&self, id: usize) -> u64 {
        self.degrees[id]
    }

    /// Class counts per dimension.
    pub fn betti(&self) -> Vec<usize> {
        let top = self.classes[self.top()].dim();
        let mut b = vec![0; top + 1];
        for c in &self.classes {
            b[c.dim()] += 1;
        }
        b
    }
}

pub fn enumerate_classes(space: &CominusculeSpace) -> &HassePoset {
    space.poset()
}

pub fn degree(poset: &HassePoset, id: usize) -> u64 {
    poset.degree(id)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(f: Family, n: usize, i: usize) -> CominusculeSpace {
        CominusculeSpace::new(f, n, i).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(space(Family::A, 12, 5).dim(), 40);
        assert_eq!(space(Family::C, 5, 5).dim(), 15);
        assert_eq!(space(Family::D, 6, 6).dim(), 15);
        assert_eq!(space(Family::E6, 6, 6).dim(), 16);
        assert_eq!(space(Family::E7, 7, 7).dim(), 27);
        for n in 2..=7 {
            assert_eq!(space(Family::B, n, 1).dim(), 2 * n - 1);
        }
    }

    #[test]
    fn non_cominuscule_rejected() {
        assert!(matches!(
            CominusculeSpace::new(Family::C, 5, 1),
            Err(Error::NotCominuscule { .. })
        ));
        assert!(CominusculeSpace::new(Family::E7, 7, 1).is_err());
    }

    #[test]
    fn class_counts() {
        assert_eq!(space(Family::A, 3, 2).poset().len(), 6);
        assert_eq!(space(Family::C, 5, 5).poset().len(), 32);
        assert_eq!(space(Family::E6, 6, 6).poset().len(), 27);
        assert_eq!(space(Family::D, 6, 6).poset().len(), 32);
        assert_eq!(space(Family::E7, 7, 7).poset().len(), 56);
    }

    #[test]
    fn degrees_from_figures() {
        let e6 = space(Family::E6, 6, 6);
        let p = e6.poset();
        assert_eq!(p.degree(p.bottom()), 1);
        assert_eq!(p.degree(p.top()), 78);
        let e7 = space(Family::E7, 7, 7);
        let p7 = e7.poset();
        assert_eq!(p7.degree(p7.top()), 13110);
    }

    #[test]
    fn names() {
        assert_eq!(space(Family::A, 12, 5).name(), "Gr(5,13)");
        assert_eq!(space(Family::C, 5, 5).name(), "LG(5,10)");
        assert_eq!(space(Family::D, 6, 6).name(), "S_6");
        assert_eq!(space(Family::B, 5, 1).name(), "Q^9");
        assert_eq!(space(Family::D, 5, 1).name(), "Q^8");
        assert_eq!(space(Family::E6, 6, 6).name(), "E6/P6");
    }

    #[test]
    fn rejects_non_ideals() {
        let s = space(Family::A, 3, 2);
        let top = s.g1().last().unwrap().clone();
        assert!(s.class_from_ideal(vec![top]).is_err());
        assert!(s.class_from_ideal(vec![s.system().simple_root(1)]).is_err());
    }
}
