//! Conditions H1 and H2, the rigidity classification, and flexibility
//! certificates checked at the level of roots.

use serde::Serialize;

use crate::cominuscule::{fmt_roots, CominusculeSpace, HassePoset, SchubertClass};
use crate::error::{Error, Result};
use crate::invariants::{self, extremal_weights, slice, AJInvariant, ClassInvariant, Direction};
use crate::root_system::Root;

/// Witnesses to the failure of H1 and H2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    /// Pairs `(β, γ)`.
    pub h1: Vec<(Root, Root)>,
    /// Pairs `(ε, γ)`.
    pub h2: Vec<(Root, Root)>,
    pub rigid: bool,
}

impl ObstructionReport {
    fn extremal() -> ObstructionReport {
        ObstructionReport {
            h1: Vec::new(),
            h2: Vec::new(),
            rigid: true,
        }
    }
}

fn sort_pairs(v: &mut [(Root, Root)]) {
    v.sort_by(|x, y| x.1.cmp(&y.1).then_with(|| x.0.cmp(&y.0)));
}

pub fn h1_witnesses(space: &CominusculeSpace, aj: &AJInvariant) -> Vec<(Root, Root)> {
    let sys = space.system();
    let j = &aj.j;
    let a = aj.a as i32;
    let top = slice(space, j, 1, a);
    let gammas = extremal_weights(space, j, 1, a, Direction::Highest);
    let betas = extremal_weights(space, j, 0, 1, Direction::Lowest);
    let mut out = Vec::new();
    for beta in &betas {
        let hits: Vec<&Root> = top
            .iter()
            .filter(|d| sys.is_root(&d.plus(beta)))
            .collect();
        for gamma in &gammas {
            if sys.is_root(&gamma.minus(beta)) {
                continue;
            }
            if hits.len() == 1 && hits[0] == gamma {
                out.push((beta.clone(), gamma.clone()));
            }
        }
    }
    sort_pairs(&mut out);
    out
}

pub fn h2_witnesses(space: &CominusculeSpace, aj: &AJInvariant) -> Vec<(Root, Root)> {
    if aj.a == 0 {
        return Vec::new();
    }
    let sys = space.system();
    let j = &aj.j;
    let a = aj.a as i32;
    let top = slice(space, j, 1, a);
    let gammas = extremal_weights(space, j, 1, a, Direction::Highest);
    let epsilons = extremal_weights(space, j, 1, a - 1, Direction::Highest);
    let mut out = Vec::new();
    for eps in &epsilons {
        let hits: Vec<&Root> = top
            .iter()
            .filter(|d| sys.is_root(&eps.minus(d)))
            .collect();
        for gamma in &gammas {
            if hits.len() == 1 && hits[0] == gamma {
                out.push((eps.clone(), gamma.clone()));
            }
        }
    }
    sort_pairs(&mut out);
    out
}

pub fn obstruction_report(space: &CominusculeSpace, w: &SchubertClass) -> Result<ObstructionReport> {
    match invariants::class_invariant(space, w)? {
        ClassInvariant::Interior(aj) => {
            let h1 = h1_witnesses(space, &aj);
            let h2 = h2_witnesses(space, &aj);
            let rigid = h1.is_empty() && h2.is_empty();
            Ok(ObstructionReport { h1, h2, rigid })
        }
        _ => Ok(ObstructionReport::extremal()),
    }
}

pub fn is_rigid(space: &CominusculeSpace, w: &SchubertClass) -> Result<bool> {
    Ok(obstruction_report(space, w)?.rigid)
}

/// One row of a classification.
#[derive(Debug, Clone, Serialize)]
pub struct ClassRecord {
    pub id: usize,
    pub class: SchubertClass,
    pub dim: usize,
    pub degree: u64,
    pub invariant: ClassInvariant,
    pub report: ObstructionReport,
}

/// The Hasse poset with every class marked rigid or flexible.
#[derive(Debug, Clone)]
pub struct Classification {
    pub poset: HassePoset,
    pub records: Vec<ClassRecord>,
}

impl Classification {
    pub fn rigid_ids(&self) -> Vec<usize> {
        self.records
            .iter()
            .filter(|r| r.report.rigid)
            .map(|r| r.id)
            .collect()
    }
}

pub fn classify(space: &CominusculeSpace) -> Result<Classification> {
    let poset = space.poset().clone();
    let records = poset
        .classes()
        .iter()
        .enumerate()
        .map(|(id, w)| {
            Ok(ClassRecord {
                id,
                class: w.clone(),
                dim: w.dim(),
                degree: poset.degree(id),
                invariant: invariants::class_invariant(space, w)?,
                report: obstruction_report(space, w)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Classification { poset, records })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FlexKind {
    H1,
    H2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofCheck {
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FlexCertificate {
    pub kind: FlexKind,
    pub divisor: SchubertClass,
    pub gamma: Root,
    /// `β` for H1, `ε` for H2.
    pub partner: Root,
    pub proof_checks: Vec<ProofCheck>,
}

impl FlexCertificate {
    pub fn all_passed(&self) -> bool {
        self.proof_checks.iter().all(|c| c.passed)
    }
}

/// Builds the divisor `w'` from the first witness and checks the root-level
/// facts behind the existence of a non-Schubert integral variety.
pub fn flex_certificate(space: &CominusculeSpace, w: &SchubertClass) -> Result<FlexCertificate> {
    let aj = match invariants::class_invariant(space, w)? {
        ClassInvariant::Interior(aj) => aj,
        _ => return Err(Error::RigidClass),
    };
    let (kind, partner, gamma) = if let Some((b, g)) = h1_witnesses(space, &aj).into_iter().next()
    {
        (FlexKind::H1, b, g)
    } else if let Some((e, g)) = h2_witnesses(space, &aj).into_iter().next() {
        (FlexKind::H2, e, g)
    } else {
        return Err(Error::RigidClass);
    };
    let sys = space.system();
    let a = aj.a as i32;
    let mut checks = Vec::new();

    let pi_top = extremal_weights(space, &aj.j, 1, a, Direction::Highest);
    checks.push(ProofCheck {
        name: "gamma_highest_in_top_slice",
        passed: pi_top.contains(&gamma) && w.contains(&gamma),
    });

    let rest: Vec<Root> = w.ideal().iter().filter(|r| **r != gamma).cloned().collect();
    let divisor = match space.class_from_ideal(rest) {
        Ok(d) => {
            checks.push(ProofCheck {
                name: "divisor_is_schubert_class",
                passed: true,
            });
            d
        }
        Err(e) => {
            return Err(Error::ProofCheckFault {
                check: "divisor_is_schubert_class".into(),
                detail: e.to_string(),
            })
        }
    };

    // Δ(r_γ w) = Δ(w) \ {γ}: the positive roots sent negative by (r_γ w)^{-1}.
    let reflected: Vec<Root> = {
        let word = crate::weyl::word_from_inversions(sys, w.ideal())?;
        let inv = word.inverse();
        let mut v: Vec<Root> = sys
            .positive_roots()
            .iter()
            .filter(|al| {
                let x = sys.reflect_by(&gamma, al);
                !crate::weyl::act(sys, &inv, &x).is_positive()
            })
            .cloned()
            .collect();
        v.sort();
        v
    };
    checks.push(ProofCheck {
        name: "divisor_equals_reflection",
        passed: reflected == divisor.ideal(),
    });

    match kind {
        FlexKind::H1 => {
            let beta = &partner;
            let ok = divisor.ideal().iter().all(|mu| {
                let s = beta.plus(mu);
                !sys.is_root(&s) || divisor.contains(&s)
            });
            checks.push(ProofCheck {
                name: "beta_preserves_divisor",
                passed: ok,
            });
        }
        FlexKind::H2 => {
            let eps = &partner;
            let ok = divisor.ideal().iter().all(|mu| {
                let d = eps.minus(mu);
                !sys.is_root(&d) || (d.is_positive() && d.coeff(space.node()) == 0)
            });
            checks.push(ProofCheck {
                name: "eps_bracket_in_levi_positive",
                passed: ok,
            });
            let ok = divisor.ideal().iter().all(|mu| {
                sys.positive_roots()
                    .iter()
                    .filter(|nu| nu.coeff(space.node()) == 0)
                    .all(|nu| {
                        let d = mu.minus(nu);
                        !sys.is_root(&d) || divisor.contains(&d)
                    })
            });
            checks.push(ProofCheck {
                name: "levi_positive_preserves_divisor",
                passed: ok,
            });
        }
    }

    if let Some(bad) = checks.iter().find(|c| !c.passed) {
        return Err(Error::ProofCheckFault {
            check: bad.name.into(),
            detail: format!(
                "class {} with {:?} witness ({}, {})",
                fmt_roots(w.ideal()),
                kind,
                partner,
                gamma
            ),
        });
    }
    Ok(FlexCertificate {
        kind,
        divisor,
        gamma,
        partner,
        proof_checks: checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::Family;

    #[test]
    fn extremal_classes_are_rigid() {
        let s = CominusculeSpace::new(Family::B, 4, 1).unwrap();
        assert!(is_rigid(&s, &s.point_class()).unwrap());
        assert!(is_rigid(&s, &s.whole_class()).unwrap());
        assert!(matches!(
            flex_certificate(&s, &s.point_class()),
            Err(Error::RigidClass)
        ));
    }

    #[test]
    fn odd_quadric_middle_is_flexible() {
        let s = CominusculeSpace::new(Family::B, 5, 1).unwrap();
        for w in s.classes().iter().filter(|w| !s.is_extremal(w)) {
            let cert = flex_certificate(&s, w).unwrap();
            assert!(cert.all_passed());
            assert_eq!(cert.divisor.dim() + 1, w.dim());
        }
    }

    #[test]
    fn smooth_classes_have_no_h2_witness() {
        let s = CominusculeSpace::new(Family::A, 5, 3).unwrap();
        for w in s.classes().iter().filter(|w| !s.is_extremal(w)) {
            let aj = invariants::compute_aj(&s, w).unwrap();
            if aj.a == 0 {
                assert!(h2_witnesses(&s, &aj).is_empty());
            }
        }
    }
}
