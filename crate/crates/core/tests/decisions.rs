use spoly::complexes::{CollapseBudget, DEFAULT_MOVES};
use spoly::decisions::{
    analyze, source_invariants, special_generic_decision, sphere_recognition, sphere_recognition_with, Conclusion,
    DecisionOptions, DecisionReport,
};
use spoly::model::{catalog, CATALOG_NAMES};
use spoly::Error;

fn conclusion(r: &DecisionReport, statement: &str) -> Conclusion {
    r.claims.iter().find(|c| c.statement == statement).unwrap_or_else(|| panic!("no claim {statement}\n{r}")).conclusion
}

const SPECIAL: &str = "M admits a special generic map into R^3";

#[test]
fn bing_house_in_dimension_four() {
    let p = catalog("bing_house").unwrap();
    let s = special_generic_decision(&p, 4).unwrap();
    assert!(s.is_affirmed(SPECIAL), "{s}");
    assert_eq!(s.claims.len(), 3);
    let r = sphere_recognition(&p, 4).unwrap();
    assert!(r.is_affirmed("M is a homotopy sphere"), "{r}");
    assert!(r.is_affirmed("M is a standard sphere or S^4"), "{r}");
    assert_eq!(conclusion(&r, "M is the standard sphere"), Conclusion::NotApplicable);
}

#[test]
fn bing_house_in_dimension_five() {
    let p = catalog("bing_house").unwrap();
    let s = special_generic_decision(&p, 5).unwrap();
    assert!(s.claims.iter().all(|c| c.citation == "Thm 3" && c.conclusion == Conclusion::Affirmed), "{s}");
    let r = sphere_recognition(&p, 5).unwrap();
    assert!(r.is_affirmed("M is diffeomorphic to a standard sphere"), "{r}");
}

#[test]
fn disc_in_dimension_three() {
    let p = catalog("disc").unwrap();
    let r = sphere_recognition(&p, 3).unwrap();
    assert!(r.is_affirmed("M is diffeomorphic to S^3"), "{r}");
    assert!(r.is_affirmed("W_p is contractible and collapses to the 2-dimensional closed disc"));
    let homotopy = r.claims.iter().find(|c| c.statement == "M is a homotopy sphere").unwrap();
    assert_eq!(homotopy.conclusion, Conclusion::NotApplicable);
    assert_eq!(homotopy.caveats.len(), 1);
    let fact = r.claims.iter().find(|c| c.citation == "Fact 3").unwrap();
    assert!(fact.corroboration.as_deref().unwrap().starts_with("collapse search reached a disc"));
}

#[test]
fn incompatible_circle_gets_no_special_generic_map() {
    let p = catalog("incompatible_circle").unwrap();
    for m in [4, 5] {
        let s = special_generic_decision(&p, m).unwrap();
        assert!(s.claims.iter().all(|c| c.conclusion == Conclusion::NotApplicable), "{s}");
    }
}

#[test]
fn nonzero_h2_blocks_sphere_claims() {
    let p = catalog("round_bundle").unwrap();
    for m in 3..=7 {
        let r = sphere_recognition(&p, m).unwrap();
        assert_eq!(r.affirmed().count(), 0, "{r}");
    }
    let s = source_invariants(&p, 4).unwrap();
    assert_eq!(s.rank_h2, Some(2));
    assert_eq!(s.h2_free, Some(true));
    assert_eq!(s.transported, 0..=1);
}

#[test]
fn high_dimensions_carry_caveats() {
    let p = catalog("bing_house").unwrap();
    for m in [6, 7, 9] {
        let s = special_generic_decision(&p, m).unwrap();
        assert_eq!(s.claims.len(), 1);
        assert_eq!(s.claims[0].conclusion, Conclusion::NotApplicable);
        assert_eq!(s.claims[0].caveats.len(), 2);
    }
    let r = sphere_recognition(&p, 7).unwrap();
    assert!(r.is_affirmed("M is a homotopy sphere"));
    assert_eq!(source_invariants(&p, 7).unwrap().transported, 0..=4);
}

#[test]
fn dimension_below_three_is_rejected() {
    let p = catalog("disc").unwrap();
    for m in [0, 1, 2] {
        assert!(matches!(sphere_recognition(&p, m), Err(Error::InvalidInput(_))));
        assert!(matches!(special_generic_decision(&p, m), Err(Error::InvalidInput(_))));
    }
}

#[test]
fn zero_moves_leave_pi1_claims_unknown() {
    let p = catalog("bing_house").unwrap();
    let opts = DecisionOptions { moves: 0, ..DecisionOptions::default() };
    let r = sphere_recognition_with(&p, 4, &opts).unwrap();
    assert_eq!(conclusion(&r, "M is a homotopy sphere"), Conclusion::Unknown, "{r}");
    assert_eq!(conclusion(&r, "M is a standard sphere or S^4"), Conclusion::Unknown);
    // An unknown hypothesis outranks a failing one.
    assert_eq!(conclusion(&r, "M is the standard sphere"), Conclusion::Unknown);
}

#[test]
fn larger_budgets_only_resolve_unknowns() {
    let budgets = [0, 1, 2, 3, 10, DEFAULT_MOVES];
    for name in CATALOG_NAMES {
        let p = catalog(name).unwrap();
        for m in [3, 4, 5, 7] {
            let runs: Vec<Vec<Conclusion>> = budgets
                .iter()
                .map(|&moves| {
                    let opts = DecisionOptions { moves, collapse: CollapseBudget::default() };
                    analyze(&p, m, &opts).unwrap().decisions.iter().map(|c| c.conclusion).collect()
                })
                .collect();
            for w in runs.windows(2) {
                for (a, b) in w[0].iter().zip(&w[1]) {
                    assert!(*a == Conclusion::Unknown || a == b, "{name} m={m}: {a:?} -> {b:?}");
                }
            }
            assert!(!runs.last().unwrap().contains(&Conclusion::Unknown), "{name} m={m}");
        }
    }
}
