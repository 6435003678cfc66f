//! Finite root systems of types A, B, C, D, E6 and E7.
//!
//! Node indices are 1-based and follow Bourbaki. For E6/E7 the chain is
//! 1-3-4-5-6(-7) with node 2 attached to node 4.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E6" => Ok(Family::E6),
            "E7" => Ok(Family::E7),
            other => Err(Error::InvalidRootSystem {
                family: other.to_string(),
                rank: 0,
                reason: "unknown family".into(),
            }),
        }
    }
}

/// A root written in the basis of simple roots.
///
/// Ordered by height first, then lexicographically by coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn simple(rank: usize, j: usize) -> Root {
        let mut c = vec![0; rank];
        c[j - 1] = 1;
        Root(c)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    /// Coefficient of the simple root `α_j` (1-based), i.e. `α(Z_j)`.
    pub fn coeff(&self, j: usize) -> i32 {
        self.0[j - 1]
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn plus(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn minus(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `self <= other` in the root poset: `other - self` is a nonnegative combination.
    pub fn below(&self, other: &Root) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Index of the unique simple root, if this is one.
    pub fn simple_index(&self) -> Option<usize> {
        if self.height() != 1 || !self.is_positive() {
            return None;
        }
        self.0.iter().position(|&c| c == 1).map(|p| p + 1)
    }

    /// Human form such as `α3+2α4+α5`.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(&format!("α{}", k + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    /// `cartan[i][j] = <α_j, α_i^∨>`, 0-based.
    cartan: Vec<Vec<i32>>,
    /// Squared lengths, short roots normalised to 2.
    lengths: Vec<i32>,
    positive: Vec<Root>,
    index: HashMap<Vec<i32>, usize>,
}

fn cartan_matrix(family: Family, rank: usize) -> Vec<Vec<i32>> {
    let n = rank;
    let mut a = vec![vec![0; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    match family {
        Family::A | Family::B | Family::C => {
            for i in 1..n {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 1..n - 1 {
                link(i, i + 1);
            }
            link(n - 2, n);
        }
        Family::E6 | Family::E7 => {
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for i in 4..n {
                link(i, i + 1);
            }
        }
    }
    match family {
        Family::B => a[n - 1][n - 2] = -2,
        Family::C => a[n - 2][n - 1] = -2,
        _ => {}
    }
    a
}

fn root_lengths(family: Family, rank: usize) -> Vec<i32> {
    (1..=rank)
        .map(|i| match family {
            Family::B if i < rank => 4,
            Family::C if i == rank => 4,
            _ => 2,
        })
        .collect()
}

fn check_rank(family: Family, rank: usize) -> Result<()> {
    let ok = match family {
        Family::A => rank >= 1,
        Family::B | Family::C => rank >= 2,
        Family::D => rank >= 3,
        Family::E6 => rank == 6,
        Family::E7 => rank == 7,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidRootSystem {
            family: family.to_string(),
            rank,
            reason: "rank out of range for family".into(),
        })
    }
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<RootSystem> {
        check_rank(family, rank)?;
        let cartan = cartan_matrix(family, rank);
        let lengths = root_lengths(family, rank);
        let mut sys = RootSystem {
            family,
            rank,
            cartan,
            lengths,
            positive: Vec::new(),
            index: HashMap::new(),
        };
        sys.generate();
        Ok(sys)
    }

    // Root strings: for β > 0 and simple α_j, with p the largest k such that
    // β - kα_j is a root, β + α_j is a root iff p - <β, α_j^∨> >= 1.
    fn generate(&mut self) {
        let n = self.rank;
        let mut layer: Vec<Root> = (1..=n).map(|j| Root::simple(n, j)).collect();
        let mut known: std::collections::HashSet<Vec<i32>> =
            layer.iter().map(|r| r.0.clone()).collect();
        let mut all = Vec::new();
        while !layer.is_empty() {
            layer.sort();
            let mut next = Vec::new();
            for beta in &layer {
                for j in 1..=n {
                    let aj = Root::simple(n, j);
                    if *beta == aj {
                        continue;
                    }
                    let mut p = 0;
                    let mut down = beta.minus(&aj);
                    while known.contains(&down.0) {
                        p += 1;
                        down = down.minus(&aj);
                    }
                    let q = p - self.pairing(beta, j);
                    if q >= 1 {
                        let up = beta.plus(&aj);
                        if known.insert(up.0.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            all.append(&mut layer);
            layer = next;
        }
        all.sort();
        self.index = all.iter().enumerate().map(|(k, r)| (r.0.clone(), k)).collect();
        self.positive = all;
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn name(&self) -> String {
        match self.family {
            Family::E6 | Family::E7 => self.family.to_string(),
            f => format!("{f}{}", self.rank),
        }
    }

    /// Positive roots in (height, lex) order.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple_root(&self, j: usize) -> Root {
        Root::simple(self.rank, j)
    }

    pub fn positive_index(&self, alpha: &Root) -> Option<usize> {
        self.index.get(&alpha.0).copied()
    }

    pub fn is_positive_root(&self, alpha: &Root) -> bool {
        self.index.contains_key(&alpha.0)
    }

    pub fn is_root(&self, alpha: &Root) -> bool {
        self.is_positive_root(alpha) || self.is_positive_root(&alpha.neg())
    }

    /// All roots: negatives (in reverse order) followed by positives.
    pub fn all_roots(&self) -> Vec<Root> {
        let mut v: Vec<Root> = self.positive.iter().rev().map(Root::neg).collect();
        v.extend(self.positive.iter().cloned());
        v
    }

    /// `α + β` if it is a root.
    pub fn add_roots(&self, alpha: &Root, beta: &Root) -> Option<Root> {
        let s = alpha.plus(beta);
        self.is_root(&s).then_some(s)
    }

    /// `<α, α_j^∨>`.
    pub fn pairing(&self, alpha: &Root, j: usize) -> i32 {
        self.cartan[j - 1]
            .iter()
            .zip(&alpha.0)
            .map(|(a, c)| a * c)
            .sum()
    }

    /// Invariant form with short roots of squared length 2.
    pub fn inner(&self, alpha: &Root, beta: &Root) -> i32 {
        let mut s = 0;
        for i in 0..self.rank {
            if alpha.0[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += alpha.0[i] * beta.0[j] * self.cartan[i][j] * self.lengths[i] / 2;
            }
        }
        s
    }

    /// Simple reflection `r_j(α) = α - <α, α_j^∨> α_j`.
    pub fn reflect(&self, j: usize, alpha: &Root) -> Root {
        let mut out = alpha.clone();
        out.0[j - 1] -= self.pairing(alpha, j);
        out
    }

    /// Reflection in an arbitrary root `γ`.
    pub fn reflect_by(&self, gamma: &Root, alpha: &Root) -> Root {
        let k = 2 * self.inner(alpha, gamma) / self.inner(gamma, gamma);
        Root(
            alpha
                .0
                .iter()
                .zip(&gamma.0)
                .map(|(a, g)| a - k * g)
                .collect(),
        )
    }

    pub fn highest_root(&self) -> &Root {
        self.positive.last().expect("non-empty root system")
    }

    /// Nodes whose coefficient in the highest root is 1.
    pub fn cominuscule_nodes(&self) -> Vec<usize> {
        let h = self.highest_root();
        (1..=self.rank).filter(|&j| h.coeff(j) == 1).collect()
    }
}

pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    RootSystem::new(family, rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(f: Family, n: usize) -> RootSystem {
        RootSystem::new(f, n).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        for n in 1..=8 {
            assert_eq!(sys(Family::A, n).positive_roots().len(), n * (n + 1) / 2);
        }
        for n in 2..=8 {
            assert_eq!(sys(Family::B, n).positive_roots().len(), n * n);
            assert_eq!(sys(Family::C, n).positive_roots().len(), n * n);
        }
        for n in 3..=8 {
            assert_eq!(sys(Family::D, n).positive_roots().len(), n * (n - 1));
        }
        assert_eq!(sys(Family::E6, 6).positive_roots().len(), 36);
        assert_eq!(sys(Family::E7, 7).positive_roots().len(), 63);
        assert_eq!(sys(Family::A, 3).positive_roots().len(), 6);
        assert_eq!(sys(Family::D, 6).positive_roots().len(), 30);
    }

    #[test]
    fn bad_ranks_rejected() {
        assert!(RootSystem::new(Family::A, 0).is_err());
        assert!(RootSystem::new(Family::B, 1).is_err());
        assert!(RootSystem::new(Family::D, 2).is_err());
        assert!(RootSystem::new(Family::E6, 7).is_err());
        assert!(RootSystem::new(Family::E7, 6).is_err());
    }

    #[test]
    fn addition_examples() {
        let a3 = sys(Family::A, 3);
        let (a1, a2, a3r) = (a3.simple_root(1), a3.simple_root(2), a3.simple_root(3));
        assert_eq!(a3.add_roots(&a1, &a2), Some(Root(vec![1, 1, 0])));
        assert_eq!(a3.add_roots(&a1, &a3r), None);
        let c2 = sys(Family::C, 2);
        let b = Root(vec![1, 1]);
        assert_eq!(c2.add_roots(&c2.simple_root(1), &b), Some(Root(vec![2, 1])));
    }

    #[test]
    fn reflection_examples() {
        let a2 = sys(Family::A, 2);
        let a1 = a2.simple_root(1);
        assert_eq!(a2.reflect(1, &a1), a1.neg());
        assert_eq!(a2.reflect(1, &a2.simple_root(2)), Root(vec![1, 1]));
    }

    #[test]
    fn reflections_permute_roots() {
        let mut systems = vec![sys(Family::E6, 6), sys(Family::E7, 7)];
        for n in 2..=7 {
            systems.push(sys(Family::B, n));
            systems.push(sys(Family::C, n));
        }
        systems.push(sys(Family::D, 6));
        for s in &systems {
            let all = s.all_roots();
            for j in 1..=s.rank() {
                let mut img: Vec<Root> = all.iter().map(|r| s.reflect(j, r)).collect();
                img.sort();
                let mut orig = all.clone();
                orig.sort();
                assert_eq!(img, orig, "{} r_{j}", s.name());
                for r in &all {
                    assert_eq!(s.reflect(j, &s.reflect(j, r)), *r);
                    assert_eq!(s.reflect_by(&s.simple_root(j), r), s.reflect(j, r));
                }
            }
            for g in s.positive_roots() {
                for r in &all {
                    assert!(s.is_root(&s.reflect_by(g, r)));
                }
            }
        }
    }

    #[test]
    fn generation_property() {
        for (f, n) in [
            (Family::A, 7),
            (Family::B, 7),
            (Family::C, 7),
            (Family::D, 7),
            (Family::E6, 6),
            (Family::E7, 7),
        ] {
            let s = sys(f, n);
            for r in s.positive_roots() {
                assert!(r.0.iter().all(|&c| c >= 0));
                if r.height() > 1 {
                    assert!((1..=n).any(|j| s.is_positive_root(&r.minus(&s.simple_root(j)))));
                }
            }
            for a in s.positive_roots() {
                for b in s.positive_roots() {
                    if let Some(c) = s.add_roots(a, b) {
                        assert_eq!(c.0, a.plus(b).0);
                    }
                }
            }
        }
    }

    #[test]
    fn cominuscule_node_lists() {
        for n in 1..=8 {
            assert_eq!(sys(Family::A, n).cominuscule_nodes(), (1..=n).collect::<Vec<_>>());
        }
        for n in 2..=8 {
            assert_eq!(sys(Family::B, n).cominuscule_nodes(), vec![1]);
            assert_eq!(sys(Family::C, n).cominuscule_nodes(), vec![n]);
        }
        for n in 4..=8 {
            assert_eq!(sys(Family::D, n).cominuscule_nodes(), vec![1, n - 1, n]);
        }
        assert_eq!(sys(Family::E6, 6).cominuscule_nodes(), vec![1, 6]);
        assert_eq!(sys(Family::E7, 7).cominuscule_nodes(), vec![7]);
        assert_eq!(sys(Family::C, 5).highest_root(), &Root(vec![2, 2, 2, 2, 1]));
    }

    #[test]
    fn pretty_form() {
        assert_eq!(Root(vec![0, 1, 2, 2, 1]).pretty(), "α2+2α3+2α4+α5");
        assert_eq!(Root(vec![-1, 0]).pretty(), "-α1");
    }
}
