use std::fmt::Write;

use schurflex::rigidity::ClassRecord;
use schurflex::translation::{partition_model, partition_of_class, spinor_r, PartitionFamily, PartitionIndex};
use schurflex::{classify, ClassInvariant, CominusculeSpace, Root};
use serde_json::{json, Value};

use crate::{Failure, Format};

struct Row {
    rec: ClassRecord,
    partition: Option<PartitionIndex>,
    r: Option<usize>,
}

fn rows(space: &CominusculeSpace) -> Result<(Vec<Row>, bool), Failure> {
    let model = partition_model(space).ok();
    let spinor = matches!(model, Some(PartitionFamily::Spinor { .. }));
    let cls = classify(space)?;
    let rows = cls
        .records
        .into_iter()
        .map(|rec| {
            let partition = match model {
                Some(_) => Some(partition_of_class(space, &rec.class)?),
                None => None,
            };
            let r = partition.as_ref().and_then(spinor_r);
            Ok(Row { rec, partition, r })
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    Ok((rows, spinor))
}

fn aj_cell(inv: &ClassInvariant) -> String {
    match inv {
        ClassInvariant::Point => "point".into(),
        ClassInvariant::Whole => "whole".into(),
        ClassInvariant::Interior(aj) => aj.to_string(),
    }
}

fn parts_of(p: &PartitionIndex, decreasing: bool) -> Vec<usize> {
    if decreasing {
        p.decreasing()
    } else {
        p.parts().to_vec()
    }
}

fn partition_cell(p: &Option<PartitionIndex>, decreasing: bool, sep: &str) -> String {
    p.as_ref()
        .map(|p| {
            parts_of(p, decreasing)
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(sep)
        })
        .unwrap_or_default()
}

fn pairs(v: &[(Root, Root)], first: &str) -> Value {
    Value::Array(
        v.iter()
            .map(|(x, g)| json!({ first: x.pretty(), "gamma": g.pretty() }))
            .collect(),
    )
}

pub fn list(space: &CominusculeSpace, format: Format, decreasing: bool) -> Result<String, Failure> {
    let (rows, spinor) = rows(space)?;
    let mut out = String::new();
    match format {
        Format::Json => {
            let classes: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let rec = &row.rec;
                    let aj = rec.invariant.aj();
                    json!({
                        "id": rec.id,
                        "dim": rec.dim,
                        "degree": rec.degree,
                        "kind": match rec.invariant {
                            ClassInvariant::Point => "point",
                            ClassInvariant::Whole => "whole",
                            ClassInvariant::Interior(_) => "interior",
                        },
                        "a": aj.map(|x| x.a),
                        "J": aj.map(|x| x.j.clone()),
                        "partition": row.partition.as_ref().map(|p| parts_of(p, decreasing)),
                        "r": row.r,
                        "rigid": rec.report.rigid,
                        "witnesses": {
                            "h1": pairs(&rec.report.h1, "beta"),
                            "h2": pairs(&rec.report.h2, "epsilon"),
                        },
                    })
                })
                .collect();
            let doc = json!({ "space": space.name(), "classes": classes });
            out = serde_json::to_string_pretty(&doc).expect("json");
            out.push('\n');
        }
        Format::Csv => {
            let r_col = if spinor { ",r" } else { "" };
            writeln!(out, "id,dim,degree,aj,partition{r_col},rigid,h1,h2").unwrap();
            for row in &rows {
                let rec = &row.rec;
                let r = if spinor {
                    format!(",{}", row.r.map(|x| x.to_string()).unwrap_or_default())
                } else {
                    String::new()
                };
                writeln!(
                    out,
                    "{},{},{},{},{}{r},{},{},{}",
                    rec.id,
                    rec.dim,
                    rec.degree,
                    aj_cell(&rec.invariant),
                    partition_cell(&row.partition, decreasing, " "),
                    rec.report.rigid,
                    rec.report.h1.len(),
                    rec.report.h2.len()
                )
                .unwrap();
            }
        }
        Format::Md | Format::Text => {
            let mut header = vec!["id", "dim", "degree", "a:J", "λ"];
            if spinor {
                header.push("r");
            }
            header.extend(["rigid", "H1", "H2"]);
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|row| {
                    let rec = &row.rec;
                    let mut cells = vec![
                        rec.id.to_string(),
                        rec.dim.to_string(),
                        rec.degree.to_string(),
                        aj_cell(&rec.invariant),
                        partition_cell(&row.partition, decreasing, ","),
                    ];
                    if spinor {
                        cells.push(row.r.map(|x| x.to_string()).unwrap_or_default());
                    }
                    cells.push(if rec.report.rigid { "*" } else { "" }.into());
                    cells.push(rec.report.h1.len().to_string());
                    cells.push(rec.report.h2.len().to_string());
                    cells
                })
                .collect();
            if let Format::Md = format {
                writeln!(out, "| {} |", header.join(" | ")).unwrap();
                writeln!(out, "|{}", "---|".repeat(header.len())).unwrap();
                for cells in &body {
                    writeln!(out, "| {} |", cells.join(" | ")).unwrap();
                }
            } else {
                writeln!(out, "{}", space.name()).unwrap();
                let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
                for cells in &body {
                    for (w, c) in width.iter_mut().zip(cells) {
                        *w = (*w).max(c.chars().count());
                    }
                }
                let line = |cells: Vec<String>| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&width)
                        .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                        .collect();
                    padded.join("  ").trim_end().to_string()
                };
                writeln!(out, "{}", line(header.iter().map(|h| h.to_string()).collect())).unwrap();
                for cells in body {
                    writeln!(out, "{}", line(cells)).unwrap();
                }
            }
        }
    }
    Ok(out)
}

pub fn covers(space: &CominusculeSpace) -> Result<String, Failure> {
    let cls = classify(space)?;
    let mut out = String::new();
    writeln!(out, "{}: {} classes", space.name(), cls.records.len()).unwrap();
    for rec in &cls.records {
        let up: Vec<String> = cls.poset.upper_covers(rec.id).iter().map(|x| x.to_string()).collect();
        writeln!(
            out,
            "{} {}/{}{} -> [{}]",
            rec.id,
            rec.dim,
            rec.degree,
            if rec.report.rigid { " *" } else { "" },
            up.join(", ")
        )
        .unwrap();
    }
    Ok(out)
}

pub fn dot(space: &CominusculeSpace) -> Result<String, Failure> {
    let cls = classify(space)?;
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", space.name()).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for rec in &cls.records {
        let ring = if rec.report.rigid { ", peripheries=2" } else { "" };
        writeln!(out, "  n{} [label=\"{}/{}\"{ring}];", rec.id, rec.dim, rec.degree).unwrap();
    }
    for (lo, hi) in cls.poset.covers() {
        writeln!(out, "  n{lo} -> n{hi};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}
