use std::sync::OnceLock;

use proptest::prelude::*;
use schurflex::invariants::{compute_aj, ideal_from_aj};
use schurflex::translation::{aj_to_partition, partition_to_aj, PartitionFamily};
use schurflex::verify::{all_spaces, partition_families};
use schurflex::weyl::{inversion_set, word_from_inversions};
use schurflex::{poincare_dual, rigidity, ClassInvariant, CominusculeSpace};

fn spaces() -> &'static [CominusculeSpace] {
    static S: OnceLock<Vec<CominusculeSpace>> = OnceLock::new();
    S.get_or_init(all_spaces)
}

fn families() -> &'static [PartitionFamily] {
    static F: OnceLock<Vec<PartitionFamily>> = OnceLock::new();
    F.get_or_init(partition_families)
}

proptest! {
    #[test]
    fn dual_is_involution(s in 0..spaces().len(), c in any::<prop::sample::Index>()) {
        let space = &spaces()[s];
        let w = &space.classes()[c.index(space.classes().len())];
        let d = poincare_dual(space, w).unwrap();
        prop_assert_eq!(d.dim() + w.dim(), space.dim());
        prop_assert_eq!(&poincare_dual(space, &d).unwrap(), w);
        prop_assert_eq!(
            rigidity::is_rigid(space, w).unwrap(),
            rigidity::is_rigid(space, &d).unwrap()
        );
    }

    #[test]
    fn aj_rebuilds_ideal(s in 0..spaces().len(), c in any::<prop::sample::Index>()) {
        let space = &spaces()[s];
        let w = &space.classes()[c.index(space.classes().len())];
        if !space.is_extremal(w) {
            let aj = compute_aj(space, w).unwrap();
            prop_assert_eq!(ideal_from_aj(space, &aj), w.ideal());
        }
    }

    #[test]
    fn reduced_word_has_class_as_inversions(
        s in 0..spaces().len(),
        c in any::<prop::sample::Index>(),
    ) {
        let space = &spaces()[s];
        let w = &space.classes()[c.index(space.classes().len())];
        let word = word_from_inversions(space.system(), w.ideal()).unwrap();
        prop_assert_eq!(word.len(), w.dim());
        prop_assert_eq!(inversion_set(space.system(), &word), w.ideal());
    }

    #[test]
    fn partition_round_trip(f in 0..families().len(), c in any::<prop::sample::Index>()) {
        let fam = families()[f];
        let parts = fam.all_partitions();
        let p = &parts[c.index(parts.len())];
        if let ClassInvariant::Interior(aj) = partition_to_aj(p) {
            prop_assert_eq!(&aj_to_partition(fam, &aj).unwrap(), p);
        }
    }

    #[test]
    fn degree_is_positive_and_monotone_in_covers(
        s in 0..spaces().len(),
        c in any::<prop::sample::Index>(),
    ) {
        let poset = spaces()[s].poset();
        let id = c.index(poset.len());
        for &lo in poset.lower_covers(id) {
            prop_assert!(poset.degree(lo) <= poset.degree(id));
        }
        prop_assert!(poset.degree(id) >= 1);
    }
}
