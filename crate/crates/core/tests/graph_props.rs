mod common;

use common::{any_valid_system, fixtures};
use proptest::prelude::*;
use trilaby::graph::TriGraph;
use trilaby::validate::find_exits;
use trilaby::{build_graph, is_tree, substitute, tree_path, Color, Pair, Side};

fn check_exit_paths(g: &TriGraph, sys: &trilaby::PatternSystem, color: Color) {
    let exits = find_exits(sys).unwrap();
    for pair in Pair::ALL {
        let (i, j) = pair.sides();
        let a = g.index_of(&exits.exit(color, i, sys.m())).unwrap();
        let b = g.index_of(&exits.exit(color, j, sys.m())).unwrap();
        let p = tree_path(g, a, b).unwrap();
        assert!(p.len() % 2 == 1 && p.len() >= 3, "length {}", p.len());
        assert!(p.labels.windows(2).all(|w| w[0] != w[1]));
        assert_eq!(tree_path(g, b, a).unwrap(), p.reversed());
        let mut seen = p.vertices.clone();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), p.len());
        for (k, w) in p.vertices.windows(2).enumerate() {
            assert_eq!(
                g.vertices[w[0]].neighbour(p.labels[k], g.scale),
                Some(g.vertices[w[1]])
            );
        }
    }
}

#[test]
fn level_graphs_of_fixtures_are_trees() {
    for sys in fixtures() {
        for n in 1..=3 {
            let level = trilaby::substitute::level_system(&sys, n).unwrap();
            for color in Color::ALL {
                let g = build_graph(&substitute(&sys, color, n).unwrap());
                assert!(is_tree(&g), "level {n} {color}");
                check_exit_paths(&g, &level, color);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn exit_paths_are_odd_and_alternating(sys in any_valid_system()) {
        for color in Color::ALL {
            let g = TriGraph::from_pattern(sys.pattern(color));
            prop_assert!(is_tree(&g));
            check_exit_paths(&g, &sys, color);
        }
    }
}

#[test]
fn removing_a_bridge_disconnects() {
    let mut sys = common::ex(1);
    sys.white.remove(&trilaby::TriIndex::up(1, 1, 1));
    let g = TriGraph::from_pattern(&sys.white);
    assert!(!is_tree(&g));
    assert!(g.component_count() > 1);
    let _ = Side::ALL;
}
