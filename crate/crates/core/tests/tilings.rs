use std::collections::BTreeSet;

use hopf_planar::family;
use hopf_planar::pairing::{x_k, Budget};
use hopf_planar::tangle::Tangle;
use hopf_planar::tilings::{
    brute_force_tilings, degenerate_skeleton, enumerate_tilings, faces, flip_graph, hexagon_neighbors,
    surjectivity_gram, tiling_to_tangle, Tiling, TilingError,
};
use hopf_planar::Scalar;
use proptest::prelude::*;

#[test]
fn counts_match_brute_force() {
    for k in 2..=6 {
        let fast = enumerate_tilings(k).unwrap();
        assert_eq!(fast, brute_force_tilings(k), "k = {k}");
    }
    let counts: Vec<usize> = (2..=6).map(|k| enumerate_tilings(k).unwrap().len()).collect();
    assert_eq!(counts, [1, 3, 12, 55, 273]);
    assert!(enumerate_tilings(2).unwrap()[0].diagonals.is_empty());
}

#[test]
fn every_tiling_has_quadrilateral_faces() {
    for k in 2..=6 {
        for t in enumerate_tilings(k).unwrap() {
            assert_eq!(t.diagonals.len(), k - 2);
            let fs = faces(k, &t.diagonals);
            assert_eq!(fs.len(), k - 1);
            assert!(fs.iter().all(|f| f.len() == 4));
            assert_eq!(t.quads().len(), k - 1);
        }
    }
}

#[test]
fn invalid_tilings_rejected() {
    assert!(Tiling::new(3, [(1, 3)]).is_err());
    assert!(Tiling::new(4, [(1, 4), (2, 7)]).is_err());
    assert!(Tiling::new(3, [(1, 4)]).is_ok());
    assert!(matches!(enumerate_tilings(1), Err(TilingError::OutOfRange { .. })));
    assert!(matches!(enumerate_tilings(20), Err(TilingError::OutOfRange { .. })));
}

#[test]
fn hexagon_moves_on_small_polygons() {
    assert!(hexagon_neighbors(&enumerate_tilings(2).unwrap()[0]).is_empty());
    let hex = enumerate_tilings(3).unwrap();
    for t in &hex {
        let others: Vec<Tiling> = hex.iter().filter(|u| *u != t).cloned().collect();
        assert_eq!(hexagon_neighbors(t), others);
    }
    // Oracle: tilings differing from the fan in exactly one diagonal.
    let fan = Tiling::new(4, [(1, 4), (1, 6)]).unwrap();
    let oracle: Vec<Tiling> = enumerate_tilings(4)
        .unwrap()
        .into_iter()
        .filter(|u| u.diagonals.symmetric_difference(&fan.diagonals).count() == 2)
        .collect();
    assert_eq!(hexagon_neighbors(&fan), oracle);
    assert_eq!(oracle.len(), 4);
}

#[test]
fn hexagon_moves_symmetric() {
    for k in 3..=6 {
        let all = enumerate_tilings(k).unwrap();
        let set: BTreeSet<&Tiling> = all.iter().collect();
        for t in &all {
            for u in hexagon_neighbors(t) {
                assert!(set.contains(&u));
                assert!(hexagon_neighbors(&u).contains(t));
            }
        }
    }
}

#[test]
fn flip_graphs_connected() {
    for k in 2..=6 {
        let g = flip_graph(k).unwrap();
        let c = g.connectivity();
        assert!(c.connected, "k = {k}");
        assert_eq!(c.spanning_tree.len(), g.vertices.len() - 1);
        for (a, b) in &c.spanning_tree {
            assert!(g.edges.contains(&(*a.min(b), *a.max(b))));
        }
    }
    let hex = flip_graph(3).unwrap();
    assert_eq!(hex.edges, [(0, 1), (0, 2), (1, 2)]);
    assert_eq!(flip_graph(5).unwrap().vertices.len(), 55);
}

#[test]
fn dot_export_lists_vertices_and_edges() {
    let g = flip_graph(4).unwrap();
    let dot = g.to_dot();
    assert!(dot.starts_with("graph flips {"));
    assert_eq!(dot.matches(" -- ").count(), g.edges.len());
    assert_eq!(dot.matches("[label=").count(), 12);
}

#[test]
fn tiling_tangles_are_face_free() {
    let square = tiling_to_tangle(&enumerate_tilings(2).unwrap()[0]).unwrap();
    assert_eq!(square, Tangle::standard_box(2, 0, "s0"));

    let all = Tangle::enumerate_face_free(3, 2);
    let mut seen = Vec::new();
    for t in enumerate_tilings(3).unwrap() {
        let x = tiling_to_tangle(&t).unwrap();
        assert!(x.is_face_free());
        assert!(all.contains(&x));
        assert!(!seen.contains(&x));
        seen.push(x);
    }
    for t in enumerate_tilings(4).unwrap() {
        let x = tiling_to_tangle(&t).unwrap();
        assert_eq!(x.slots.len(), 3);
        assert!(x.is_face_free());
    }
    assert!(matches!(tiling_to_tangle(&enumerate_tilings(5).unwrap()[0]), Err(TilingError::OutOfRange { .. })));
}

#[test]
fn surjectivity_full_rank_for_hexagon_skeletons() {
    let budget = Budget::default();
    let algebras = family::standard::<Scalar>();
    for (name, h) in algebras.iter().filter(|(_, h)| h.dim() <= 4) {
        let n = h.dim();
        for t in enumerate_tilings(3).unwrap() {
            let x = tiling_to_tangle(&t).unwrap();
            assert_eq!(surjectivity_gram(h, &x, &budget).unwrap(), n * n, "{name} {t:?}");
        }
        assert_eq!(surjectivity_gram(h, &x_k(3), &budget).unwrap(), n * n, "{name}");
        assert!(surjectivity_gram(h, &degenerate_skeleton(), &budget).unwrap() < n * n, "{name}");
    }
}

#[test]
fn surjectivity_at_k4_over_z2() {
    let h = family::z2::<Scalar>();
    for t in enumerate_tilings(4).unwrap().iter().take(3) {
        let x = tiling_to_tangle(t).unwrap();
        assert_eq!(surjectivity_gram(&h, &x, &Budget::default()).unwrap(), 8);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_flip_walks_stay_valid(k in 3usize..=7, steps in proptest::collection::vec(0usize..64, 1..20)) {
        let mut t = enumerate_tilings(k).unwrap()[0].clone();
        for s in steps {
            let ns = hexagon_neighbors(&t);
            prop_assert!(!ns.is_empty());
            let next = ns[s % ns.len()].clone();
            prop_assert!(next.check().is_ok());
            prop_assert!(hexagon_neighbors(&next).contains(&t));
            t = next;
        }
    }
}
