use std::collections::BTreeSet;

use super::*;
use crate::blocked::{infer_colouring, midpoint_check};
use crate::visibility::visibility_graph;

fn sig(s: &str) -> KSetSignature {
    s.parse().unwrap()
}

/// Every subset of the grid, coloured by inference when multipartite.
fn subset_oracle(
    x_max: i64,
    y_max: i64,
    max_points: usize,
    midpoint: bool,
) -> BTreeSet<KSetSignature> {
    let cells: Vec<[i64; 2]> = (0..=x_max)
        .flat_map(|x| (0..=y_max).map(move |y| [x, y]))
        .collect();
    let mut found = BTreeSet::new();
    for mask in 1u32..(1 << cells.len()) {
        if mask.count_ones() as usize > max_points {
            continue;
        }
        let pts: Vec<[i64; 2]> = (0..cells.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| cells[i])
            .collect();
        let config = PointConfig::from_ints(&pts).unwrap();
        if let Ok(set) = infer_colouring(&config) {
            if !midpoint || midpoint_check(&set).ok {
                found.insert(set.signature());
            }
        }
    }
    found
}

#[test]
fn two_point_target_on_unit_grid() {
    let out = find_blocked(&sig("1,1"), &SearchSpec::new(1, 1, 2)).unwrap();
    assert_eq!(out.status, SearchStatus::Found);
    assert_eq!(out.witnesses.len(), 1);
    let w = &out.witnesses[0];
    assert_eq!(w.len(), 2);
    assert_ne!(w.colour(0), w.colour(1));
    assert!(!out.certifies_absence());
}

#[test]
fn two_colour_signatures() {
    let out = enumerate_blocked(&SearchSpec::new(4, 4, 3)).unwrap();
    assert_eq!(out.status, SearchStatus::Exhausted);
    assert_eq!(
        out.signatures_with_k(2),
        [sig("1,1"), sig("2,1")].into_iter().collect()
    );
}

#[test]
fn full_small_grid_is_found() {
    let out = enumerate_blocked(&SearchSpec::new(2, 2, 9)).unwrap();
    assert!(out.signatures_found.contains(&sig("4,2,2,1")));
    let w = out
        .witnesses
        .iter()
        .find(|w| w.signature() == sig("4,2,2,1"))
        .unwrap();
    assert_eq!(w.len(), 9);
}

#[test]
fn matches_subset_oracle_on_small_grids() {
    assert_eq!(
        enumerate_blocked(&SearchSpec::new(2, 2, 9))
            .unwrap()
            .signatures_found,
        subset_oracle(2, 2, 9, false)
    );
    assert_eq!(
        enumerate_blocked(&SearchSpec::new(3, 2, 12))
            .unwrap()
            .signatures_found,
        subset_oracle(3, 2, 12, false)
    );
    assert_eq!(
        enumerate_blocked(&SearchSpec::new(1, 4, 7))
            .unwrap()
            .signatures_found,
        subset_oracle(1, 4, 7, false)
    );
}

#[test]
fn midpoint_mode_matches_oracle() {
    let mut spec = SearchSpec::new(3, 2, 12);
    spec.require_midpoint_blocked = true;
    let out = enumerate_blocked(&spec).unwrap();
    assert_eq!(out.signatures_found, subset_oracle(3, 2, 12, true));
    for w in &out.witnesses {
        assert!(midpoint_check(w).ok);
    }
}

#[test]
fn symmetry_reduction_keeps_signatures() {
    let mut on = SearchSpec::new(3, 3, 6);
    on.symmetry_reduction = true;
    let mut off = on.clone();
    off.symmetry_reduction = false;
    let a = enumerate_blocked(&on).unwrap();
    let b = enumerate_blocked(&off).unwrap();
    assert_eq!(a.signatures_found, b.signatures_found);
    assert!(a.nodes_explored < b.nodes_explored);
}

#[test]
fn parallel_width_does_not_change_outcome() {
    let base = SearchSpec::new(3, 3, 6);
    let seq = enumerate_blocked(&base).unwrap();
    for width in [2, 4] {
        let mut spec = base.clone();
        spec.parallel_width = width;
        assert_eq!(enumerate_blocked(&spec).unwrap(), seq);
    }
    let mut find = SearchSpec::new(4, 4, 6);
    find.parallel_width = 1;
    let a = find_blocked(&sig("2,2,2"), &find).unwrap();
    find.parallel_width = 3;
    let b = find_blocked(&sig("2,2,2"), &find).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.status, SearchStatus::Found);
}

#[test]
fn budget_is_reported_not_hidden() {
    let mut spec = SearchSpec::new(3, 3, 6);
    spec.node_budget = 50;
    let out = enumerate_blocked(&spec).unwrap();
    assert_eq!(out.status, SearchStatus::BudgetExceeded);
    assert_eq!(out.nodes_explored, 50);
    assert!(!out.certifies_absence());
    // Budget truncation is also width independent.
    spec.parallel_width = 3;
    assert_eq!(enumerate_blocked(&spec).unwrap(), out);
    for budget in [1, 7, 300, 5000] {
        let mut a = SearchSpec::new(3, 3, 5);
        a.node_budget = budget;
        let mut b = a.clone();
        b.parallel_width = 4;
        assert_eq!(
            enumerate_blocked(&a).unwrap(),
            enumerate_blocked(&b).unwrap(),
            "budget {budget}"
        );
    }
}

#[test]
fn exhausted_absence_is_reported() {
    // Three classes of two cannot fit with one class of three on a 3x3 grid.
    let out = certify_absent(&sig("5,1,1,1"), &SearchSpec::new(3, 3, 8)).unwrap();
    assert!(out.certifies_absence());
}

#[test]
fn required_points_are_respected() {
    let mut spec = SearchSpec::new(2, 2, 3);
    spec.required_points = vec![(1, 1), (2, 2)];
    let out = find_blocked(&sig("2,1"), &spec).unwrap();
    assert_eq!(out.status, SearchStatus::Found);
    let mut spec = SearchSpec::new(2, 2, 9);
    spec.required_points = vec![(1, 1)];
    let out = enumerate_blocked(&spec).unwrap();
    assert!(out.signatures_found.contains(&sig("4,2,2,1")));
    assert!(!out.signatures_found.contains(&sig("1,1")) || out.nodes_explored > 0);
}

#[test]
fn invalid_specs_are_rejected() {
    assert!(enumerate_blocked(&SearchSpec::new(0, 3, 3)).is_err());
    assert!(enumerate_blocked(&SearchSpec::new(3, 3, 0)).is_err());
    assert!(find_blocked(&sig("3,3,3"), &SearchSpec::new(3, 3, 4)).is_err());
    let mut spec = SearchSpec::new(3, 3, 3);
    spec.required_points = vec![(9, 9)];
    assert!(enumerate_blocked(&spec).is_err());
}

#[test]
fn brute_force_matches_examples() {
    let two = PointConfig::from_ints(&[[0, 0], [3, 1]]).unwrap();
    let g = brute_force_visibility(&two);
    assert!(g.adjacent(0, 1));
    let line = PointConfig::from_ints(&[[0, 0], [1, 1], [2, 2], [3, 3]]).unwrap();
    let g = brute_force_visibility(&line);
    assert_eq!(g.edge_count(), 3);
    assert_eq!(g, visibility_graph(&line));
}

#[test]
fn witnesses_are_verified() {
    let out = enumerate_blocked(&SearchSpec::new(3, 3, 6)).unwrap();
    assert_eq!(out.witnesses.len(), out.signatures_found.len());
    for w in &out.witnesses {
        assert!(verify_blocked(w).ok);
    }
}
