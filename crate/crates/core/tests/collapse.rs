use spoly::complexes::{
    collapse_search, replay, triangulate, CollapseBudget, CollapseOutcome, CollapseTarget, SimplicialComplex2,
};
use spoly::model::catalog;

fn complex(name: &str) -> SimplicialComplex2 {
    triangulate(&catalog(name).unwrap()).unwrap()
}

fn is_disc(residual: &[Vec<usize>]) -> bool {
    let tris: Vec<[usize; 3]> = residual.iter().filter(|s| s.len() == 3).map(|s| [s[0], s[1], s[2]]).collect();
    if tris.is_empty() {
        return false;
    }
    let k = SimplicialComplex2::from_triangles("residual", &tris).unwrap();
    let edges = residual.iter().filter(|s| s.len() == 2).count();
    let verts = residual.iter().filter(|s| s.len() == 1).count();
    // A pure connected surface with one boundary circle and chi = 1.
    verts as i64 - edges as i64 + tris.len() as i64 == 1
        && k.is_connected()
        && k.edge_triangles().iter().all(|t| t.len() <= 2)
        && k.edge_components(&k.boundary_edges()) == 1
}

#[test]
fn disc_collapses_to_a_point() {
    let k = complex("disc");
    let r = collapse_search(&k, CollapseTarget::Point, CollapseBudget::default());
    assert_eq!(r.outcome, CollapseOutcome::Collapsed, "{}", r.note);
    let left = replay(&k, &r.sequence).unwrap();
    assert_eq!(left, r.residual);
    assert_eq!(r.residual_counts(), [1, 0, 0]);
}

#[test]
fn disc_target_accepts_a_disc() {
    let k = complex("disc");
    let r = collapse_search(&k, CollapseTarget::Disc, CollapseBudget::default());
    assert_eq!(r.outcome, CollapseOutcome::Collapsed);
    assert!(is_disc(&r.residual), "{:?}", r.residual_counts());
    assert_eq!(replay(&k, &r.sequence).unwrap(), r.residual);
}

#[test]
fn annulus_is_obstructed_by_euler_characteristic() {
    let k = SimplicialComplex2::from_triangles(
        "annulus",
        &[[0, 1, 3], [1, 3, 4], [1, 2, 4], [2, 4, 5], [0, 2, 5], [0, 3, 5]],
    )
    .unwrap();
    assert_eq!(k.euler(), 0);
    for target in [CollapseTarget::Point, CollapseTarget::Disc] {
        let r = collapse_search(&k, target, CollapseBudget::default());
        assert_eq!(r.outcome, CollapseOutcome::ProvenImpossible);
        assert!(r.sequence.is_empty());
        assert!(r.note.contains("euler"), "{}", r.note);
    }
}

#[test]
fn bing_house_has_no_free_face() {
    let k = complex("bing_house");
    assert_eq!(k.euler(), 1);
    let r = collapse_search(&k, CollapseTarget::Point, CollapseBudget::default());
    assert_eq!(r.outcome, CollapseOutcome::ExhaustedBudget);
    assert!(r.sequence.is_empty());
    assert!(r.note.contains("0 free faces"), "{}", r.note);
    let exhaustive = CollapseBudget { exhaustive_max: 10_000, ..CollapseBudget::default() };
    let r = collapse_search(&k, CollapseTarget::Point, exhaustive);
    assert_eq!(r.outcome, CollapseOutcome::ProvenImpossible, "{}", r.note);
}

#[test]
fn search_is_deterministic_in_the_seed() {
    let k = complex("disc");
    for seed in [0, 1, 99] {
        let b = CollapseBudget { seed, ..CollapseBudget::default() };
        let r1 = collapse_search(&k, CollapseTarget::Point, b);
        let r2 = collapse_search(&k, CollapseTarget::Point, b);
        assert_eq!(r1, r2);
        assert_eq!(replay(&k, &r1.sequence).unwrap(), r1.residual);
    }
}

#[test]
fn replay_rejects_a_non_free_step() {
    let k = complex("disc");
    let r = collapse_search(&k, CollapseTarget::Point, CollapseBudget::default());
    let mut bad = r.sequence.clone();
    let last = bad.len() - 1;
    bad.swap(0, last);
    assert!(replay(&k, &bad).is_err());
}

#[test]
fn small_budget_falls_back_to_exhaustive_search() {
    let k = complex("disc");
    let b = CollapseBudget { steps: 1, restarts: 1, exhaustive_max: 10_000, seed: 0 };
    let r = collapse_search(&k, CollapseTarget::Point, b);
    assert_eq!(r.outcome, CollapseOutcome::Collapsed);
    assert_eq!(r.note, "exhaustive search");
    assert_eq!(replay(&k, &r.sequence).unwrap(), r.residual);
    let b = CollapseBudget { exhaustive_max: 0, ..b };
    assert_eq!(collapse_search(&k, CollapseTarget::Point, b).outcome, CollapseOutcome::ExhaustedBudget);
}
