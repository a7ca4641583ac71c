//! The spectral nilpotency criterion — f(p^a) = p^a for every maximal
//! prime power p^a dividing |G| — cross-validated against two independent
//! structural computations (ascending central series, and Sylow normality
//! via p-element closure) on every catalog group of order ≤ 200.

mod common;

use common::{built_slots, is_nilpotent_structural, sylows_all_normal};

#[test]
fn spectral_matches_structural() {
    let mut checked = 0;
    for e in built_slots() {
        if e.group.order() > 200 {
            continue;
        }
        let spectral = e.spec.is_nilpotent_spectral();
        let central = is_nilpotent_structural(&e.group);
        let sylow = sylows_all_normal(&e.group);
        assert_eq!(
            spectral, central,
            "{}: spectral criterion says {spectral}, central series says {central}",
            e.recipe.name
        );
        assert_eq!(
            spectral, sylow,
            "{}: spectral criterion says {spectral}, Sylow normality says {sylow}",
            e.recipe.name
        );
        checked += 1;
    }
    assert!(checked >= 30, "only {checked} groups of order <= 200 in the catalog");
}

#[test]
fn known_classifications() {
    // Nilpotent: all cyclic and p-groups, direct products of those.
    for name in ["C1", "C12", "C30", "D4", "Q8", "Q16", "C2xC4", "C3xC3", "C4xC4"] {
        let e = common::catalog_entry(name);
        assert!(e.spec.is_nilpotent_spectral(), "{name} is nilpotent");
        assert!(is_nilpotent_structural(&e.group), "{name} is nilpotent");
    }
    // Not nilpotent: nonabelian with nontrivial odd part, or simple.
    for name in ["S3", "S4", "A4", "A5", "D6", "D10", "Dic3", "F20", "F21", "SL(2,3)"] {
        let e = common::catalog_entry(name);
        assert!(!e.spec.is_nilpotent_spectral(), "{name} is not nilpotent");
        assert!(!is_nilpotent_structural(&e.group), "{name} is not nilpotent");
    }
}

#[test]
fn alpha_size_structure() {
    // |nse| = 1 or 2 forces nilpotency; |nse| = 3 forces solvability.
    // The catalog has witnesses for every tier, none for a counterexample.
    let (mut saw2, mut saw3) = (false, false);
    for e in built_slots() {
        match e.spec.alpha_size() {
            1 | 2 => {
                saw2 |= e.spec.alpha_size() == 2;
                assert!(
                    e.spec.is_nilpotent_spectral(),
                    "{}: |nse| <= 2 but not nilpotent",
                    e.recipe.name
                );
                assert!(is_nilpotent_structural(&e.group), "{}", e.recipe.name);
            }
            3 => {
                saw3 = true;
                assert!(
                    e.group.is_solvable().unwrap(),
                    "{}: |nse| = 3 but not solvable",
                    e.recipe.name
                );
            }
            _ => {}
        }
    }
    assert!(saw2 && saw3, "catalog should witness the small alpha tiers");
}
