//! Reference tables and Hasse diagrams shipped with the crate.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::invariants::AJInvariant;

const LG5: &str = include_str!("../golden/lg5_table.csv");
const SPINOR6: &str = include_str!("../golden/spinor6_table.csv");
const E6P6: &str = include_str!("../golden/e6p6_hasse.json");
const E7P7: &str = include_str!("../golden/e7p7_hasse.json");

/// One table row. `aj` and `r` are empty for the two extremal classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub lambda: Vec<usize>,
    pub aj: Option<AJInvariant>,
    pub r: Option<usize>,
    pub rigid: bool,
}

#[derive(Debug, Clone, Deserialize)]
pub struct FigureNode {
    pub pos: String,
    pub dim: usize,
    pub degree: u64,
    pub rigid: bool,
}

/// Hasse diagram; edges run from the lower to the upper `pos`.
#[derive(Debug, Clone, Deserialize)]
pub struct Figure {
    pub nodes: Vec<FigureNode>,
    pub edges: Vec<(String, String)>,
}

impl Figure {
    pub fn index_of(&self, pos: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.pos == pos)
    }
}

fn fixture(name: &str, reason: impl Into<String>) -> Error {
    Error::Fixture {
        name: name.into(),
        reason: reason.into(),
    }
}

fn parse_nums(name: &str, s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|t| t.parse().map_err(|_| fixture(name, format!("bad integer {t:?}"))))
        .collect()
}

#[derive(Deserialize)]
struct RawRow {
    lambda: String,
    aj: String,
    r: Option<String>,
    rigid: String,
}

fn parse_table(name: &str, text: &str, with_r: bool) -> Result<Vec<TableRow>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let has_r = reader
        .headers()
        .map_err(|e| fixture(name, e.to_string()))?
        .iter()
        .any(|h| h == "r");
    if has_r != with_r {
        return Err(fixture(name, "unexpected columns"));
    }
    let mut rows = Vec::new();
    for raw in reader.deserialize::<RawRow>() {
        let raw = raw.map_err(|e| fixture(name, e.to_string()))?;
        let lambda = parse_nums(name, &raw.lambda)?;
        let aj = if raw.aj.is_empty() {
            None
        } else {
            let (a, j) = raw
                .aj
                .split_once(':')
                .ok_or_else(|| fixture(name, format!("bad a:J {:?}", raw.aj)))?;
            let a = a.parse().map_err(|_| fixture(name, format!("bad a {a:?}")))?;
            Some(AJInvariant::new(a, parse_nums(name, j)?))
        };
        let r = match raw.r.as_deref() {
            Some(s) if !s.is_empty() => {
                Some(s.parse().map_err(|_| fixture(name, format!("bad r {s:?}")))?)
            }
            _ => None,
        };
        rows.push(TableRow {
            lambda,
            aj,
            r,
            rigid: raw.rigid.trim() == "*",
        });
    }
    Ok(rows)
}

pub fn lg5_table() -> Result<Vec<TableRow>> {
    parse_table("lg5_table.csv", LG5, false)
}

pub fn spinor6_table() -> Result<Vec<TableRow>> {
    parse_table("spinor6_table.csv", SPINOR6, true)
}

fn parse_figure(name: &str, text: &str) -> Result<Figure> {
    let fig: Figure = serde_json::from_str(text).map_err(|e| fixture(name, e.to_string()))?;
    for (lo, hi) in &fig.edges {
        if fig.index_of(lo).is_none() || fig.index_of(hi).is_none() {
            return Err(fixture(name, format!("edge {lo} -> {hi} names a missing node")));
        }
    }
    Ok(fig)
}

pub fn e6p6_figure() -> Result<Figure> {
    parse_figure("e6p6_hasse.json", E6P6)
}

pub fn e7p7_figure() -> Result<Figure> {
    parse_figure("e7p7_hasse.json", E7P7)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse() {
        let lg = lg5_table().unwrap();
        assert_eq!(lg.len(), 32);
        assert_eq!(lg.iter().filter(|r| r.rigid).count(), 10);
        let sp = spinor6_table().unwrap();
        assert_eq!(sp.len(), 32);
        assert_eq!(sp.iter().filter(|r| r.rigid).count(), 10);
        let e6 = e6p6_figure().unwrap();
        assert_eq!((e6.nodes.len(), e6.edges.len()), (27, 36));
        let e7 = e7p7_figure().unwrap();
        assert_eq!((e7.nodes.len(), e7.edges.len()), (56, 84));
    }

    #[test]
    fn figure_degrees_obey_chain_rule() {
        for fig in [e6p6_figure().unwrap(), e7p7_figure().unwrap()] {
            for (k, node) in fig.nodes.iter().enumerate() {
                if node.dim == 0 {
                    continue;
                }
                let sum: u64 = fig
                    .edges
                    .iter()
                    .filter(|(_, hi)| fig.index_of(hi) == Some(k))
                    .map(|(lo, _)| fig.nodes[fig.index_of(lo).unwrap()].degree)
                    .sum();
                assert_eq!(sum, node.degree, "node {}", node.pos);
            }
        }
    }
}
