use std::fmt::Write;

use schurflex::invariants::{class_invariant, ideal_from_aj, AJInvariant};
use schurflex::rigidity::{flex_certificate, obstruction_report};
use schurflex::translation::{
    class_of_partition, incidence_description, partition_model, partition_of_class, quadric_class,
    quadric_params, quadric_rigid, rigid_by_partition, spinor_r, Branch, PartitionFamily,
    PartitionIndex,
};
use schurflex::{ClassInvariant, CominusculeSpace, SchubertClass, SpaceKind};

use crate::{parse_list, Failure};

pub enum Input {
    Partition(PartitionIndex),
    AJ(AJInvariant),
}

pub fn parse_aj(s: &str) -> Result<AJInvariant, Failure> {
    let (a, j) = s
        .split_once(':')
        .ok_or_else(|| Failure::Usage(format!("expected a:j1,j2,... but got {s:?}")))?;
    let a = a
        .trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("bad a in {s:?}")))?;
    Ok(AJInvariant::new(a, parse_list(j)?))
}

fn class_of_aj(space: &CominusculeSpace, aj: &AJInvariant) -> Result<SchubertClass, Failure> {
    let w = space.class_from_ideal(ideal_from_aj(space, aj))?;
    match class_invariant(space, &w)? {
        ClassInvariant::Interior(found) if &found == aj => Ok(w),
        other => Err(Failure::Usage(format!(
            "{aj} is not the invariant of a class of {}; its ideal has invariant {other:?}",
            space.name()
        ))),
    }
}

/// The criterion that does not go through roots, if the space has one.
fn closed_form_rigid(
    space: &CominusculeSpace,
    w: &SchubertClass,
    partition: Option<&PartitionIndex>,
) -> Result<Option<bool>, Failure> {
    if let Some(p) = partition {
        return Ok(Some(rigid_by_partition(p)));
    }
    if let SpaceKind::Quadric { .. } = space.kind() {
        let (parity, m) = quadric_params(space)?;
        let d = w.dim();
        let branch = if space.poset().betti()[d] == 2 {
            if quadric_class(space, d, Some(Branch::Plus))? == *w {
                Some(Branch::Plus)
            } else {
                Some(Branch::Minus)
            }
        } else {
            None
        };
        return Ok(Some(quadric_rigid(parity, m, d, branch)?));
    }
    Ok(None)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn show(p: &PartitionIndex, decreasing: bool) -> String {
    if decreasing {
        let s: Vec<String> = p.decreasing().iter().map(|x| x.to_string()).collect();
        format!("({})", s.join(","))
    } else {
        p.to_string()
    }
}

pub fn translate(space: &CominusculeSpace, input: Input, decreasing: bool) -> Result<String, Failure> {
    let model = partition_model(space).ok();
    let (w, partition) = match input {
        Input::Partition(p) => (class_of_partition(space, &p)?, Some(p)),
        Input::AJ(aj) => {
            let w = class_of_aj(space, &aj)?;
            let p = match model {
                Some(_) => Some(partition_of_class(space, &w)?),
                None => None,
            };
            (w, p)
        }
    };
    let inv = class_invariant(space, &w)?;
    let report = obstruction_report(space, &w)?;
    let closed = closed_form_rigid(space, &w, partition.as_ref())?;

    let mut out = String::new();
    writeln!(out, "space      {}", space.name()).unwrap();
    if let Some(p) = &partition {
        writeln!(out, "partition  {}", show(p, decreasing)).unwrap();
    }
    let aj = match &inv {
        ClassInvariant::Point => "point".to_string(),
        ClassInvariant::Whole => "whole space".to_string(),
        ClassInvariant::Interior(aj) => aj.to_string(),
    };
    writeln!(out, "a:J        {aj}").unwrap();
    if let (Some(p), Some(PartitionFamily::Spinor { .. })) = (&partition, model) {
        if let Some(r) = spinor_r(p) {
            writeln!(out, "r          {r}").unwrap();
        }
    }
    writeln!(out, "dim        {}", w.dim()).unwrap();
    writeln!(out, "rigid      {}", yes(report.rigid)).unwrap();
    writeln!(out, "  root computation    {}", yes(report.rigid)).unwrap();
    if let Some(c) = closed {
        let label = if partition.is_some() { "partition criterion" } else { "quadric criterion  " };
        writeln!(out, "  {label} {}", yes(c)).unwrap();
    }
    if !space.is_extremal(&w) {
        if let Ok(inc) = incidence_description(space, &w) {
            writeln!(out, "incidence  {inc}").unwrap();
        }
    }
    for (beta, gamma) in &report.h1 {
        writeln!(out, "H1 witness (β, γ) = ({}, {})", beta.pretty(), gamma.pretty()).unwrap();
    }
    for (eps, gamma) in &report.h2 {
        writeln!(out, "H2 witness (ε, γ) = ({}, {})", eps.pretty(), gamma.pretty()).unwrap();
    }
    if !report.rigid {
        match flex_certificate(space, &w) {
            Ok(cert) => {
                writeln!(
                    out,
                    "certificate {:?}: divisor of dim {} from γ = {}",
                    cert.kind,
                    cert.divisor.dim(),
                    cert.gamma.pretty()
                )
                .unwrap();
                for c in &cert.proof_checks {
                    writeln!(out, "  {} {}", if c.passed { "ok  " } else { "FAIL" }, c.name).unwrap();
                }
            }
            Err(e) => return Err(Failure::Verification(e.to_string())),
        }
    }
    if let Some(c) = closed {
        if c != report.rigid {
            print!("{out}");
            return Err(Failure::Verification(
                "root computation and closed-form criterion disagree".into(),
            ));
        }
    }
    Ok(out)
}
