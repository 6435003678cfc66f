//! Partition models for Grassmannians, Lagrangian Grassmannians and spinor
//! varieties; the quadric criterion; flag-incidence descriptions.
//!
//! Partitions are strictly increasing, `1 <= λ_1 < ... < λ_k`.

use std::fmt;

use serde::Serialize;

use crate::cominuscule::{CominusculeSpace, SchubertClass, SpaceKind};
use crate::error::{Error, Result};
use crate::invariants::{self, ideal_from_aj, AJInvariant, ClassInvariant};
use crate::root_system::Family;

/// Which partition model, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PartitionFamily {
    /// `Gr(i, n+1)`; `n` is the rank of `A_n`.
    Grassmannian { i: usize, n: usize },
    /// `LG(n, 2n)`.
    Lagrangian { n: usize },
    /// `S_n = D_n/P_n`.
    Spinor { n: usize },
}

impl PartitionFamily {
    /// Number of parts.
    pub fn length(&self) -> usize {
        match *self {
            PartitionFamily::Grassmannian { i, .. } => i,
            PartitionFamily::Lagrangian { n } | PartitionFamily::Spinor { n } => n,
        }
    }

    pub fn dim(&self) -> usize {
        match *self {
            PartitionFamily::Grassmannian { i, n } => i * (n + 1 - i),
            PartitionFamily::Lagrangian { n } => n * (n + 1) / 2,
            PartitionFamily::Spinor { n } => n * (n - 1) / 2,
        }
    }

    /// The cominuscule space this model indexes.
    pub fn space(&self) -> Result<CominusculeSpace> {
        match *self {
            PartitionFamily::Grassmannian { i, n } => CominusculeSpace::new(Family::A, n, i),
            PartitionFamily::Lagrangian { n } => CominusculeSpace::new(Family::C, n, n),
            PartitionFamily::Spinor { n } => CominusculeSpace::new(Family::D, n, n),
        }
    }

    /// Every valid partition, in lexicographic order.
    pub fn all_partitions(&self) -> Vec<PartitionIndex> {
        let (len, top) = match *self {
            PartitionFamily::Grassmannian { i, n } => (i, n + 1),
            PartitionFamily::Lagrangian { n } | PartitionFamily::Spinor { n } => (n, 2 * n),
        };
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(len);
        fn rec(
            fam: &PartitionFamily,
            len: usize,
            top: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<PartitionIndex>,
        ) {
            if cur.len() == len {
                if let Ok(p) = PartitionIndex::new(*fam, cur.clone()) {
                    out.push(p);
                }
                return;
            }
            let start = cur.last().map_or(1, |x| x + 1);
            for v in start..=top {
                if top - v < len - cur.len() - 1 {
                    break;
                }
                cur.push(v);
                rec(fam, len, top, cur, out);
                cur.pop();
            }
        }
        rec(self, len, top, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for PartitionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PartitionFamily::Grassmannian { i, n } => write!(f, "Gr({i},{})", n + 1),
            PartitionFamily::Lagrangian { n } => write!(f, "LG({n},{})", 2 * n),
            PartitionFamily::Spinor { n } => write!(f, "S_{n}"),
        }
    }
}

/// The partition model of a space, if it has one.
pub fn partition_model(space: &CominusculeSpace) -> Result<PartitionFamily> {
    let n = space.rank();
    match (space.family(), space.kind()) {
        (Family::A, _) => Ok(PartitionFamily::Grassmannian { i: space.node(), n }),
        (Family::C, _) => Ok(PartitionFamily::Lagrangian { n }),
        (Family::D, SpaceKind::Spinor { node, .. }) if node == n => {
            Ok(PartitionFamily::Spinor { n })
        }
        _ => Err(Error::Unsupported(space.name())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PartitionIndex {
    #[serde(skip)]
    family: PartitionFamily,
    parts: Vec<usize>,
}

fn bad(rule: &str, detail: String) -> Error {
    Error::InvalidPartition(format!("{rule}: {detail}"))
}

impl PartitionIndex {
    pub fn new(family: PartitionFamily, parts: Vec<usize>) -> Result<PartitionIndex> {
        let len = family.length();
        if parts.len() != len {
            return Err(bad(
                "length",
                format!("expected {len} parts, got {}", parts.len()),
            ));
        }
        if parts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad("strictly increasing", format!("{parts:?}")));
        }
        let top = match family {
            PartitionFamily::Grassmannian { n, .. } => n + 1,
            PartitionFamily::Lagrangian { n } | PartitionFamily::Spinor { n } => 2 * n,
        };
        if parts.first().is_some_and(|&x| x < 1) || parts.last().is_some_and(|&x| x > top) {
            return Err(bad("bounds", format!("parts must lie in 1..={top}")));
        }
        if let PartitionFamily::Lagrangian { n } | PartitionFamily::Spinor { n } = family {
            for &x in &parts {
                if parts.contains(&(2 * n + 1 - x)) {
                    return Err(bad(
                        "isotropy",
                        format!("both {x} and {} present", 2 * n + 1 - x),
                    ));
                }
            }
            if let PartitionFamily::Spinor { .. } = family {
                let big = parts.iter().filter(|&&x| x > n).count();
                if big % 2 == 1 {
                    return Err(bad("parity", format!("{big} parts exceed {n}")));
                }
            }
        }
        Ok(PartitionIndex { family, parts })
    }

    pub fn family(&self) -> PartitionFamily {
        self.family
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Dimension of the Schubert variety.
    pub fn dim(&self) -> usize {
        match self.family {
            PartitionFamily::Grassmannian { .. } => {
                self.parts.iter().enumerate().map(|(k, x)| x - (k + 1)).sum()
            }
            PartitionFamily::Lagrangian { n } => {
                self.parts.iter().filter(|&&x| x > n).map(|x| x - n).sum()
            }
            PartitionFamily::Spinor { n } => {
                self.parts.iter().filter(|&&x| x > n).map(|x| x - n - 1).sum()
            }
        }
    }

    pub fn is_extremal(&self) -> bool {
        let d = self.dim();
        d == 0 || d == self.family.dim()
    }

    /// Componentwise `self <= other`.
    pub fn below(&self, other: &PartitionIndex) -> bool {
        self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// `λ̃_k = λ_k - k`.
    pub fn shifted(&self) -> Vec<usize> {
        self.parts.iter().enumerate().map(|(k, x)| x - (k + 1)).collect()
    }

    /// Young-diagram form, weakly decreasing. For `Gr(i, n+1)` this is
    /// `λ_{i+1-k} - (i+1-k)`; for `LG(n, 2n)` and `S_n` it is the strict
    /// partition `λ_k - n` (resp. `λ_k - n - 1`) over the parts above `n`,
    /// largest first and without zeros.
    pub fn decreasing(&self) -> Vec<usize> {
        match self.family {
            PartitionFamily::Grassmannian { .. } => self.shifted().into_iter().rev().collect(),
            PartitionFamily::Lagrangian { n } | PartitionFamily::Spinor { n } => {
                let off = n + usize::from(matches!(self.family, PartitionFamily::Spinor { .. }));
                self.parts
                    .iter()
                    .rev()
                    .filter(|&&x| x > off)
                    .map(|x| x - off)
                    .collect()
            }
        }
    }

    /// Inverse of [`PartitionIndex::decreasing`].
    pub fn from_decreasing(family: PartitionFamily, mu: &[usize]) -> Result<PartitionIndex> {
        if mu.windows(2).any(|w| w[0] < w[1]) {
            return Err(bad("weakly decreasing", format!("{mu:?}")));
        }
        let parts = match family {
            PartitionFamily::Grassmannian { i, .. } => {
                if mu.len() != i {
                    return Err(bad("length", format!("expected {i} parts, got {}", mu.len())));
                }
                mu.iter().rev().enumerate().map(|(k, x)| x + k + 1).collect()
            }
            PartitionFamily::Lagrangian { n } | PartitionFamily::Spinor { n } => {
                let spinor = matches!(family, PartitionFamily::Spinor { .. });
                let off = n + usize::from(spinor);
                if mu.windows(2).any(|w| w[0] == w[1]) || mu.contains(&0) {
                    return Err(bad("strict", format!("{mu:?} must be strict with positive parts")));
                }
                let mut big: Vec<usize> = mu.iter().map(|x| x + off).collect();
                if spinor && big.len() % 2 == 1 {
                    big.push(n + 1);
                }
                let mut parts: Vec<usize> = (1..=n)
                    .filter(|x| !big.contains(&(2 * n + 1 - x)))
                    .collect();
                parts.extend(big);
                parts.sort_unstable();
                parts
            }
        };
        PartitionIndex::new(family, parts)
    }

    /// Block decomposition, lowest block first (`μ_p, ..., μ_0`). The spinor
    /// model also joins `n-1, n+1` and `n, n+2`.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let spinor_n = match self.family {
            PartitionFamily::Spinor { n } => Some(n),
            _ => None,
        };
        let joined = |a: usize, b: usize| {
            b == a + 1 || spinor_n.is_some_and(|n| (a, b) == (n - 1, n + 1) || (a, b) == (n, n + 2))
        };
        let mut out: Vec<Vec<usize>> = Vec::new();
        for &x in &self.parts {
            match out.last_mut() {
                Some(b) if joined(*b.last().unwrap(), x) => b.push(x),
                _ => out.push(vec![x]),
            }
        }
        out
    }

    fn js(&self) -> Vec<usize> {
        // j_l = |μ_p ... μ_l| for l = p..1, returned as [j_p, ..., j_1].
        let blocks = self.blocks();
        let p = blocks.len() - 1;
        let mut acc = 0;
        let mut out = Vec::with_capacity(p);
        for b in &blocks[..p] {
            acc += b.len();
            out.push(acc);
        }
        out
    }
}

impl fmt::Display for PartitionIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `(a, J)` of a partition, or the extremal marker.
pub fn partition_to_aj(p: &PartitionIndex) -> ClassInvariant {
    let d = p.dim();
    if d == 0 {
        return ClassInvariant::Point;
    }
    if d == p.family.dim() {
        return ClassInvariant::Whole;
    }
    let lam = &p.parts;
    let blocks = p.blocks();
    let np = blocks.len() - 1;
    let js = p.js();
    let first_one = lam[0] == 1;
    let aj = match p.family {
        PartitionFamily::Grassmannian { i, n } => {
            let mut j: Vec<usize> = js.clone();
            for &jl in &js {
                let k = i - jl + lam[jl - 1];
                if k != i && k != n + 1 {
                    j.push(k);
                }
            }
            let last = lam[i - 1];
            if last != i && last != n + 1 {
                j.push(last);
            }
            let a = if first_one { np - 1 } else { np };
            AJInvariant::new(a as u32, j)
        }
        PartitionFamily::Lagrangian { .. } => {
            let a = if first_one { np - 1 } else { np };
            AJInvariant::new(a as u32, js)
        }
        PartitionFamily::Spinor { n } => {
            let gap = lam[n - 1] - lam[n - 2] > 1;
            let a = match (first_one, gap) {
                (true, true) => np - 2,
                (true, false) | (false, true) => np - 1,
                (false, false) => np,
            };
            AJInvariant::new(a as u32, js)
        }
    };
    ClassInvariant::Interior(aj)
}

fn aj_error(family: PartitionFamily, reason: String) -> Error {
    Error::InvalidAJ {
        space: family.to_string(),
        reason,
    }
}

fn cblock(n: usize, desc: &[usize], a: usize, shift: usize) -> Option<Vec<usize>> {
    // desc = [j_0 = n, j_1, ..., j_p, j_{p+1} = 0]
    let p = desc.len() - 2;
    let mut lam = Vec::new();
    for l in (0..=p).rev() {
        let m = (a + 1 + shift).checked_sub(l)?;
        let jm = *desc.get(m)?;
        let lo = n + 1 + desc[l + 1];
        let hi = n + desc[l];
        lam.extend((lo.checked_sub(jm)?)..=(hi.checked_sub(jm)?));
    }
    Some(lam)
}

/// Inverse of [`partition_to_aj`]. Rejects `(a, J)` outside the family's range.
pub fn aj_to_partition(family: PartitionFamily, aj: &AJInvariant) -> Result<PartitionIndex> {
    let a = aj.a as usize;
    let parts = match family {
        PartitionFamily::Grassmannian { i, n } => {
            if aj.j.iter().any(|&x| x == 0 || x > n || x == i) {
                return Err(aj_error(family, format!("J = {:?} out of range", aj.j)));
            }
            // [j_0 = i, j_1 > ... > j_p, j_{p+1} = 0], [k_0 = i, k_1 < ... < k_q, k_{q+1} = n+1]
            let mut jd = vec![i];
            jd.extend(aj.j.iter().rev().filter(|&&x| x < i));
            jd.push(0);
            let mut ku = vec![i];
            ku.extend(aj.j.iter().filter(|&&x| x > i));
            ku.push(n + 1);
            let p = jd.len() - 2;
            let mut lam = Vec::new();
            for l in (0..=p).rev() {
                let m = (a + 1)
                    .checked_sub(l)
                    .filter(|m| *m < ku.len())
                    .ok_or_else(|| aj_error(family, "p, q not in {a, a+1}".into()))?;
                let lo = jd[l + 1] + ku[m] + 1;
                let hi = jd[l] + ku[m];
                lam.extend((lo - i)..=(hi - i));
            }
            lam
        }
        PartitionFamily::Lagrangian { n } | PartitionFamily::Spinor { n } => {
            if aj.j.iter().any(|&x| x == 0 || x >= n) {
                return Err(aj_error(family, format!("J = {:?} out of range", aj.j)));
            }
            let mut desc = vec![n];
            desc.extend(aj.j.iter().rev());
            desc.push(0);
            let shift = match family {
                PartitionFamily::Spinor { .. } => usize::from(aj.j.contains(&(n - 1))),
                _ => 0,
            };
            let mut lam = cblock(n, &desc, a, shift)
                .ok_or_else(|| aj_error(family, "|J| incompatible with a".into()))?;
            let big = lam.iter().filter(|&&x| x > n).count();
            if matches!(family, PartitionFamily::Spinor { .. }) && big % 2 == 1 {
                // Swap whichever of n, n+1 is present for the other.
                for x in lam.iter_mut() {
                    if *x == n {
                        *x = n + 1;
                    } else if *x == n + 1 {
                        *x = n;
                    }
                }
                lam.sort_unstable();
            }
            lam
        }
    };
    let p = PartitionIndex::new(family, parts)
        .map_err(|e| aj_error(family, format!("reconstruction is not valid ({e})")))?;
    match partition_to_aj(&p) {
        ClassInvariant::Interior(back) if back == *aj => Ok(p),
        other => Err(aj_error(
            family,
            format!("{aj} rebuilds {p}, which has invariant {other:?}"),
        )),
    }
}

/// `r(λ)` for interior spinor partitions.
pub fn spinor_r(p: &PartitionIndex) -> Option<usize> {
    match p.family {
        PartitionFamily::Spinor { .. } if !p.is_extremal() => {
            let np = p.blocks().len() - 1;
            Some(if p.parts[0] == 1 { np / 2 } else { np.div_ceil(2) })
        }
        _ => None,
    }
}

/// Whether block `μ̂_r` meets `{n, n+1}`.
pub fn spinor_r_block_meets_middle(p: &PartitionIndex) -> Option<bool> {
    let PartitionFamily::Spinor { n } = p.family else {
        return None;
    };
    let r = spinor_r(p)?;
    let blocks = p.blocks();
    let idx = blocks.len() - 1 - r;
    Some(blocks[idx].iter().any(|&x| x == n || x == n + 1))
}

/// Condensed `λ̃ = (ν_p^{c_p}, ..., ν_0^{c_0})` as pairs `(ν, c)`, `ν_p` first.
fn condense(v: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &x in v {
        match out.last_mut() {
            Some((nu, c)) if *nu == x => *c += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// Rigidity read off the partition. The two extremal classes are rigid.
pub fn rigid_by_partition(p: &PartitionIndex) -> bool {
    if p.is_extremal() {
        return true;
    }
    match p.family {
        PartitionFamily::Grassmannian { i, n } => {
            let cond = condense(&p.shifted());
            let np = cond.len() - 1;
            // index s counts from the top: s = np - position.
            let nu = |s: usize| cond[np - s].0;
            let c = |s: usize| cond[np - s].1;
            (1..=np).all(|s| nu(s - 1) - nu(s) >= 2)
                && (1..np).all(|s| c(s) >= 2)
                && (nu(np) == 0 || c(np) >= 2)
                && (nu(0) >= n + 1 - i || c(0) >= 2)
        }
        PartitionFamily::Lagrangian { .. } => {
            let cond = condense(&p.shifted());
            let np = cond.len() - 1;
            let c = |s: usize| cond[np - s].1;
            if cond[0].0 > 0 {
                (1..=np).all(|s| c(s) >= 2)
            } else {
                (0..np).all(|s| c(s) >= 2)
            }
        }
        PartitionFamily::Spinor { .. } => {
            let blocks = p.blocks();
            let np = blocks.len() - 1;
            let c = |s: usize| blocks[np - s].len();
            let r = spinor_r(p).expect("interior spinor partition");
            let blocks_ok = if p.parts[0] > 1 {
                (1..=np).all(|s| c(s) >= 2)
            } else {
                (0..np).all(|s| c(s) >= 2)
            };
            blocks_ok && c(r) >= 3
        }
    }
}

/// The spinor partition of `S_{n+1}` mapped to `LG(n, 2n)`.
pub fn lg_spinor_map(p: &PartitionIndex) -> Result<PartitionIndex> {
    let PartitionFamily::Spinor { n: n1 } = p.family else {
        return Err(Error::InvalidPartition(format!(
            "{p} is not a spinor partition"
        )));
    };
    let n = n1 - 1;
    let parts = p
        .parts
        .iter()
        .filter(|&&x| x != n + 1 && x != n + 2)
        .map(|&x| if x > n + 2 { x - 2 } else { x })
        .collect();
    PartitionIndex::new(PartitionFamily::Lagrangian { n }, parts)
}

/// The class of a space indexed by a partition.
pub fn class_of_partition(space: &CominusculeSpace, p: &PartitionIndex) -> Result<SchubertClass> {
    if partition_model(space)? != p.family {
        return Err(Error::InvalidPartition(format!(
            "{p} does not index classes of {}",
            space.name()
        )));
    }
    match partition_to_aj(p) {
        ClassInvariant::Point => Ok(space.point_class()),
        ClassInvariant::Whole => Ok(space.whole_class()),
        ClassInvariant::Interior(aj) => space.class_from_ideal(ideal_from_aj(space, &aj)),
    }
}

/// The partition of a class.
pub fn partition_of_class(space: &CominusculeSpace, w: &SchubertClass) -> Result<PartitionIndex> {
    let fam = partition_model(space)?;
    let len = fam.length();
    match invariants::class_invariant(space, w)? {
        ClassInvariant::Point => PartitionIndex::new(fam, (1..=len).collect()),
        ClassInvariant::Whole => {
            let top = match fam {
                PartitionFamily::Grassmannian { n, .. } => n + 1,
                PartitionFamily::Lagrangian { n } | PartitionFamily::Spinor { n } => 2 * n,
            };
            PartitionIndex::new(fam, (top + 1 - len..=top).collect())
        }
        ClassInvariant::Interior(aj) => aj_to_partition(fam, &aj),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QuadricParity {
    /// `Q^{2m-1}`.
    Odd,
    /// `Q^{2m}`.
    Even,
}

/// Names the two middle-dimensional classes of an even quadric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    Plus,
    Minus,
}

pub fn quadric_rigid(parity: QuadricParity, m: usize, d: usize, branch: Option<Branch>) -> Result<bool> {
    let dim = match parity {
        QuadricParity::Odd => 2 * m - 1,
        QuadricParity::Even => 2 * m,
    };
    if d > dim {
        return Err(Error::UnknownClass(format!("dimension {d} exceeds {dim}")));
    }
    if branch.is_some() && !(parity == QuadricParity::Even && d == m) {
        return Err(Error::UnknownClass(format!(
            "branch tag only applies in dimension {m} of an even quadric"
        )));
    }
    Ok(match parity {
        QuadricParity::Odd => d == 0 || d == dim,
        QuadricParity::Even => d == 0 || d == dim || d == m,
    })
}

/// The parity, `m`, and dimension of a quadric space.
pub fn quadric_params(space: &CominusculeSpace) -> Result<(QuadricParity, usize)> {
    match space.kind() {
        SpaceKind::Quadric { dim } if dim % 2 == 1 => Ok((QuadricParity::Odd, dim.div_ceil(2))),
        SpaceKind::Quadric { dim } => Ok((QuadricParity::Even, dim / 2)),
        _ => Err(Error::Unsupported(format!("{} is not a quadric", space.name()))),
    }
}

/// The class of a quadric with dimension `d` (and branch in the middle of an
/// even quadric). Branches follow lexicographic order of the ideals.
pub fn quadric_class(space: &CominusculeSpace, d: usize, branch: Option<Branch>) -> Result<SchubertClass> {
    let (parity, m) = quadric_params(space)?;
    quadric_rigid(parity, m, d, branch)?;
    let mut found: Vec<&SchubertClass> = space.classes().iter().filter(|w| w.dim() == d).collect();
    found.sort();
    match (found.len(), branch) {
        (1, None) => Ok(found[0].clone()),
        (2, Some(Branch::Plus)) => Ok(found[0].clone()),
        (2, Some(Branch::Minus)) => Ok(found[1].clone()),
        (2, None) => Err(Error::UnknownClass(format!(
            "dimension {d} needs a branch tag"
        ))),
        _ => Err(Error::UnknownClass(format!("no class of dimension {d}"))),
    }
}

/// One condition `dim(E ∩ F_l) >= jump`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlagCondition {
    pub index: usize,
    pub f_dim: usize,
    pub jump: usize,
    /// Automatically satisfied (jump 0, or `F_l` is the whole space).
    pub trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Incidence {
    /// Conditions listed from the smallest `F_l` up.
    Flag {
        ambient: usize,
        conditions: Vec<FlagCondition>,
    },
    Quadric {
        description: String,
        dim: usize,
    },
}

impl fmt::Display for Incidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Incidence::Flag { conditions, .. } => {
                let parts: Vec<String> = conditions
                    .iter()
                    .filter(|c| !c.trivial)
                    .map(|c| format!("dim(E ∩ F_{}) >= {} [dim F_{} = {}]", c.index, c.jump, c.index, c.f_dim))
                    .collect();
                write!(f, "{}", parts.join("; "))
            }
            Incidence::Quadric { description, .. } => f.write_str(description),
        }
    }
}

/// Flag-incidence description of an interior class of a classical space.
pub fn incidence_description(space: &CominusculeSpace, w: &SchubertClass) -> Result<Incidence> {
    if matches!(space.family(), Family::E6 | Family::E7) {
        return Err(Error::Unsupported(space.name()));
    }
    let aj = invariants::compute_aj(space, w)?;
    let a = aj.a as usize;
    let n = space.rank();
    if let SpaceKind::Quadric { .. } = space.kind() {
        return quadric_incidence(space, &aj, w.dim());
    }
    let fam = partition_model(space)?;
    let mut conditions = Vec::new();
    match fam {
        PartitionFamily::Grassmannian { i, n } => {
            let mut jd = vec![i];
            jd.extend(aj.j.iter().rev().filter(|&&x| x < i));
            let p = jd.len() - 1;
            jd.push(0);
            let mut ku = vec![i];
            ku.extend(aj.j.iter().filter(|&&x| x > i));
            ku.push(n + 1);
            for l in (0..=a + 1).rev() {
                let m = a + 1 - l;
                let jl = if l <= p + 1 { jd[l] } else { 0 };
                let f_dim = jl + ku[m] - i;
                conditions.push(FlagCondition {
                    index: l,
                    f_dim,
                    jump: jl,
                    trivial: jl == 0 || f_dim == n + 1,
                });
            }
            Ok(Incidence::Flag {
                ambient: n + 1,
                conditions,
            })
        }
        PartitionFamily::Lagrangian { .. } | PartitionFamily::Spinor { .. } => {
            let shift = match fam {
                PartitionFamily::Spinor { .. } => usize::from(aj.j.contains(&(n - 1))),
                _ => 0,
            };
            let mut desc = vec![n];
            desc.extend(aj.j.iter().rev());
            let p = desc.len() - 1;
            desc.push(0);
            for l in (0..=p).rev() {
                let m = a + 1 + shift - l;
                let f_dim = desc[l] + n - desc[m];
                conditions.push(FlagCondition {
                    index: l,
                    f_dim,
                    jump: desc[l],
                    trivial: f_dim == 2 * n,
                });
            }
            Ok(Incidence::Flag {
                ambient: 2 * n,
                conditions,
            })
        }
    }
}

fn quadric_incidence(space: &CominusculeSpace, aj: &AJInvariant, d: usize) -> Result<Incidence> {
    let n = space.rank();
    let span = |hi: usize| format!("e_1..e_{}, e_{}..e_{}", n + 1, hi, if space.family() == Family::B { 2 * n + 1 } else { 2 * n });
    let (description, dim) = match (space.family(), aj.a, aj.j.as_slice()) {
        (Family::B, 0, [j]) => (format!("P^{}", j - 1), j - 1),
        (Family::B, 1, [j]) => (format!("Q ∩ P<{}>", span(n + j + 1)), 2 * n - j),
        (Family::D, 0, [j]) if *j <= n - 2 => (format!("P^{}", j - 1), j - 1),
        (Family::D, 0, [_]) => (format!("P^{}", n - 1), n - 1),
        (Family::D, 0, [_, _]) => (format!("P^{}", n - 2), n - 2),
        (Family::D, 1, [j]) => (format!("Q ∩ P<{}>", span(n + j + 1)), 2 * n - j - 1),
        (Family::D, 1, [_, _]) => (format!("Q ∩ P<e_1..e_{}, e_{}>", n + 1, 2 * n), n),
        _ => {
            return Err(Error::InvariantFault(format!(
                "{aj} is not a quadric invariant"
            )))
        }
    };
    if dim != d {
        return Err(Error::InvariantFault(format!(
            "{description} has dimension {dim}, class has {d}"
        )));
    }
    Ok(Incidence::Quadric { description, dim })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(i: usize, n: usize, v: &[usize]) -> PartitionIndex {
        PartitionIndex::new(PartitionFamily::Grassmannian { i, n }, v.to_vec()).unwrap()
    }
    fn lg(n: usize, v: &[usize]) -> PartitionIndex {
        PartitionIndex::new(PartitionFamily::Lagrangian { n }, v.to_vec()).unwrap()
    }
    fn sp(n: usize, v: &[usize]) -> PartitionIndex {
        PartitionIndex::new(PartitionFamily::Spinor { n }, v.to_vec()).unwrap()
    }
    fn aj(a: u32, j: &[usize]) -> AJInvariant {
        AJInvariant::new(a, j.to_vec())
    }

    #[test]
    fn partition_examples() {
        assert_eq!(
            partition_to_aj(&gr(5, 12, &[3, 4, 7, 11, 12])),
            ClassInvariant::Interior(aj(2, &[2, 3, 7, 9, 12]))
        );
        assert_eq!(
            partition_to_aj(&lg(5, &[1, 3, 5, 7, 9])),
            ClassInvariant::Interior(aj(3, &[1, 2, 3, 4]))
        );
        assert_eq!(
            partition_to_aj(&sp(6, &[1, 3, 5, 6, 9, 11])),
            ClassInvariant::Interior(aj(2, &[1, 2, 4, 5]))
        );
    }

    #[test]
    fn converse_examples() {
        let fam = PartitionFamily::Lagrangian { n: 5 };
        assert_eq!(aj_to_partition(fam, &aj(1, &[3])).unwrap().parts(), &[3, 4, 5, 9, 10]);
        let fam = PartitionFamily::Spinor { n: 6 };
        assert_eq!(
            aj_to_partition(fam, &aj(1, &[4])).unwrap().parts(),
            &[3, 4, 5, 6, 11, 12]
        );
        let fam = PartitionFamily::Grassmannian { i: 5, n: 12 };
        assert_eq!(
            aj_to_partition(fam, &aj(2, &[2, 3, 7, 9, 12])).unwrap().parts(),
            &[3, 4, 7, 11, 12]
        );
        assert!(aj_to_partition(fam, &aj(0, &[2, 3, 7, 9, 12])).is_err());
    }

    #[test]
    fn invalid_partitions_name_the_rule() {
        let e = PartitionIndex::new(PartitionFamily::Lagrangian { n: 3 }, vec![1, 2, 6]).unwrap_err();
        assert!(e.to_string().contains("isotropy"));
        let e = PartitionIndex::new(PartitionFamily::Spinor { n: 3 }, vec![1, 2, 4]).unwrap_err();
        assert!(e.to_string().contains("parity"));
        let e = PartitionIndex::new(PartitionFamily::Grassmannian { i: 2, n: 3 }, vec![3, 2]).unwrap_err();
        assert!(e.to_string().contains("strictly increasing"));
        let e = PartitionIndex::new(PartitionFamily::Grassmannian { i: 2, n: 3 }, vec![1, 5]).unwrap_err();
        assert!(e.to_string().contains("bounds"));
    }

    #[test]
    fn criterion_examples() {
        assert!(!rigid_by_partition(&gr(5, 12, &[3, 4, 7, 11, 12])));
        assert!(rigid_by_partition(&lg(5, &[1, 2, 3, 6, 7])));
        assert!(rigid_by_partition(&sp(6, &[2, 3, 4, 5, 7, 12])));
        assert!(!rigid_by_partition(&gr(2, 3, &[2, 4])));
    }

    #[test]
    fn spinor_blocks_match_examples() {
        assert_eq!(sp(5, &[2, 3, 4, 6, 10]).blocks(), vec![vec![2, 3, 4, 6], vec![10]]);
        assert_eq!(sp(5, &[1, 2, 5, 7, 8]).blocks(), vec![vec![1, 2], vec![5, 7, 8]]);
    }

    #[test]
    fn lg_spinor_examples() {
        assert_eq!(lg_spinor_map(&sp(6, &[2, 3, 4, 5, 7, 12])).unwrap().parts(), &[2, 3, 4, 5, 10]);
        assert_eq!(lg_spinor_map(&sp(6, &[1, 2, 3, 4, 5, 6])).unwrap().parts(), &[1, 2, 3, 4, 5]);
        assert_eq!(
            lg_spinor_map(&sp(6, &[7, 8, 9, 10, 11, 12])).unwrap().parts(),
            &[6, 7, 8, 9, 10]
        );
    }

    #[test]
    fn quadric_examples() {
        assert!(!quadric_rigid(QuadricParity::Odd, 5, 4, None).unwrap());
        assert!(quadric_rigid(QuadricParity::Even, 4, 4, Some(Branch::Plus)).unwrap());
        assert!(quadric_rigid(QuadricParity::Even, 4, 4, Some(Branch::Minus)).unwrap());
        assert!(quadric_rigid(QuadricParity::Even, 4, 0, None).unwrap());
        assert!(quadric_rigid(QuadricParity::Even, 4, 9, None).is_err());
    }

    #[test]
    fn incidence_examples() {
        let s = CominusculeSpace::new(Family::A, 12, 5).unwrap();
        let w = class_of_partition(&s, &gr(5, 12, &[3, 4, 7, 11, 12])).unwrap();
        let Incidence::Flag { conditions, .. } = incidence_description(&s, &w).unwrap() else {
            panic!()
        };
        let dims: Vec<usize> = conditions.iter().map(|c| c.f_dim).collect();
        let jumps: Vec<usize> = conditions.iter().map(|c| c.jump).collect();
        assert_eq!(dims, vec![0, 4, 7, 12]);
        assert_eq!(jumps, vec![0, 2, 3, 5]);

        let s = CominusculeSpace::new(Family::C, 5, 5).unwrap();
        let w = class_of_partition(&s, &lg(5, &[2, 5, 7, 8, 10])).unwrap();
        let Incidence::Flag { conditions, .. } = incidence_description(&s, &w).unwrap() else {
            panic!()
        };
        let nontrivial: Vec<(usize, usize)> = conditions
            .iter()
            .filter(|c| !c.trivial)
            .map(|c| (c.f_dim, c.jump))
            .collect();
        assert_eq!(nontrivial, vec![(2, 1), (5, 2), (8, 4)]);

        // The divisor of Gr(2,4) is cut out by one condition.
        let s = CominusculeSpace::new(Family::A, 3, 2).unwrap();
        let w = class_of_partition(&s, &gr(2, 3, &[2, 4])).unwrap();
        let Incidence::Flag { conditions, .. } = incidence_description(&s, &w).unwrap() else {
            panic!()
        };
        assert_eq!(conditions.iter().filter(|c| !c.trivial).count(), 1);

        let e6 = CominusculeSpace::new(Family::E6, 6, 6).unwrap();
        let w = &e6.classes()[1];
        assert!(matches!(incidence_description(&e6, w), Err(Error::Unsupported(_))));
    }

    #[test]
    fn decreasing_convention_round_trips() {
        let lg = PartitionFamily::Lagrangian { n: 5 };
        let p = PartitionIndex::new(lg, vec![2, 5, 7, 8, 10]).unwrap();
        assert_eq!(p.decreasing(), vec![5, 3, 2]);
        let gr = PartitionFamily::Grassmannian { i: 5, n: 12 };
        let p = PartitionIndex::new(gr, vec![3, 4, 7, 11, 12]).unwrap();
        assert_eq!(p.decreasing(), vec![7, 7, 4, 2, 2]);
        for fam in [
            gr,
            lg,
            PartitionFamily::Spinor { n: 6 },
            PartitionFamily::Grassmannian { i: 2, n: 4 },
        ] {
            for p in fam.all_partitions() {
                let mu = p.decreasing();
                assert_eq!(mu.iter().sum::<usize>(), p.dim(), "{p}");
                assert_eq!(PartitionIndex::from_decreasing(fam, &mu).unwrap(), p);
            }
        }
        assert!(PartitionIndex::from_decreasing(lg, &[3, 3]).is_err());
    }
}
