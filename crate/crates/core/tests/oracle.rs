//! Independent closed-form values checked against enumeration.

use schurflex::translation::{class_of_partition, PartitionFamily, PartitionIndex};
use schurflex::{classify, poincare_dual, CominusculeSpace, Family};

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

fn binomial(n: u64, k: u64) -> usize {
    (factorial(n as u128) / (factorial(k as u128) * factorial((n - k) as u128))) as usize
}

/// Plücker degree of `Gr(k, n)`.
fn grassmannian_degree(k: u128, n: u128) -> u128 {
    let mut num = factorial(k * (n - k));
    let mut den = 1u128;
    for i in 0..k {
        num *= factorial(i);
        den *= factorial(n - k + i);
    }
    num / den
}

fn top_degree(space: &CominusculeSpace) -> u64 {
    let p = space.poset();
    p.degree(p.top())
}

#[test]
fn grassmannian_counts_and_degrees() {
    for n in 1..=7usize {
        for k in 1..=n {
            let s = CominusculeSpace::new(Family::A, n, k).unwrap();
            assert_eq!(s.classes().len(), binomial(n as u64 + 1, k as u64));
            assert_eq!(s.dim(), k * (n + 1 - k));
            assert_eq!(top_degree(&s) as u128, grassmannian_degree(k as u128, n as u128 + 1));
        }
    }
}

#[test]
fn known_degrees() {
    let cases = [
        (Family::C, 2, 2, 4, 2),
        (Family::C, 3, 3, 8, 16),
        (Family::D, 5, 5, 16, 12),
        (Family::D, 6, 6, 32, 286),
        (Family::B, 4, 1, 8, 2),
        (Family::D, 5, 1, 10, 2),
        (Family::E6, 6, 1, 27, 78),
        (Family::E7, 7, 7, 56, 13110),
    ];
    for (fam, rank, node, count, degree) in cases {
        let s = CominusculeSpace::new(fam, rank, node).unwrap();
        assert_eq!(s.classes().len(), count, "{}", s.name());
        assert_eq!(top_degree(&s), degree, "{}", s.name());
    }
}

#[test]
fn even_quadric_has_two_middle_classes() {
    let s = CominusculeSpace::new(Family::D, 5, 1).unwrap();
    let b = s.poset().betti();
    assert_eq!(b.len(), 9);
    for (d, x) in b.iter().enumerate() {
        assert_eq!(*x, if d == 4 { 2 } else { 1 });
    }
}

#[test]
fn projective_space_interior_is_flexible() {
    // A degree-k hypersurface in a P^{k+1} has the class of k P^k's, so only
    // the point and the whole space are rigid.
    for n in 2..=6 {
        let s = CominusculeSpace::new(Family::A, n, 1).unwrap();
        let c = classify(&s).unwrap();
        let rigid: Vec<usize> = c.rigid_ids().iter().map(|&i| c.records[i].dim).collect();
        assert_eq!(rigid, vec![0, n]);
    }
}

#[test]
fn grassmannian_duality_complements_partitions() {
    let fam = PartitionFamily::Grassmannian { i: 3, n: 6 };
    let s = fam.space().unwrap();
    for p in fam.all_partitions() {
        let w = class_of_partition(&s, &p).unwrap();
        let d = poincare_dual(&s, &w).unwrap();
        // λ_k -> n + 2 - λ_{i+1-k}
        let parts: Vec<usize> = p.parts().iter().rev().map(|x| 8 - x).collect();
        let q = PartitionIndex::new(fam, parts).unwrap();
        assert_eq!(d, class_of_partition(&s, &q).unwrap(), "{p}");
    }
}

#[test]
fn lagrangian_grassmannian_of_planes_is_odd_quadric() {
    // LG(2,4) = Q^3: same Hasse diagram and rigid set as B_2/P_1.
    let lg = classify(&CominusculeSpace::new(Family::C, 2, 2).unwrap()).unwrap();
    let q = classify(&CominusculeSpace::new(Family::B, 2, 1).unwrap()).unwrap();
    let shape = |c: &schurflex::Classification| {
        c.records
            .iter()
            .map(|r| (r.dim, r.degree, r.report.rigid))
            .collect::<Vec<_>>()
    };
    assert_eq!(shape(&lg), shape(&q));
}
