mod common;

use common::{any_base_system, any_valid_system, fixtures};
use num_bigint::BigInt;
use proptest::prelude::*;
use trilaby::geometry::contains_triangle;
use trilaby::index::Orient;
use trilaby::substitute::enumerate_paths;
use trilaby::{counts, project_point, substitute, vertices, Color, Side, TriIndex};

fn triangle_at(s: u64) -> impl Strategy<Value = TriIndex> {
    (0..s, 0..s, any::<bool>()).prop_filter_map("outside the subdivision", move |(a, b, up)| {
        let t = if up {
            TriIndex::up(a, b, (s - 1).checked_sub(a + b)?)
        } else {
            TriIndex::down(a, b, s.checked_sub(2)?.checked_sub(a + b)?)
        };
        t.is_valid(s).then_some(t)
    })
}

fn triangle_pair() -> impl Strategy<Value = (u64, TriIndex, u64, TriIndex)> {
    (1u64..7, 2u64..7)
        .prop_flat_map(|(ps, cs)| (Just(ps), triangle_at(ps), Just(cs), triangle_at(cs)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn compose_child_is_the_projection_of_vertices((ps, p, cs, c) in triangle_pair()) {
        let composed = p.compose_child(&c, cs);
        prop_assert!(composed.is_valid(ps * cs));
        let image: Vec<_> = vertices(&c, cs).iter().map(|v| project_point(&p, ps, v)).collect();
        prop_assert_eq!(vertices(&composed, ps * cs).to_vec(), image);
        prop_assert!(contains_triangle(&p, ps, &composed, ps * cs));
    }

    #[test]
    fn neighbour_is_an_involution(s in 2u64..9, j in 0usize..3, seed in any::<u64>()) {
        let side = Side::from_index(j).unwrap();
        let all: Vec<TriIndex> = (0..s)
            .flat_map(|a| (0..s - a).map(move |b| (a, b)))
            .flat_map(|(a, b)| {
                let mut v = vec![TriIndex::up(a, b, s - 1 - a - b)];
                if a + b + 2 <= s {
                    v.push(TriIndex::down(a, b, s - 2 - a - b));
                }
                v
            })
            .collect();
        let t = all[(seed % all.len() as u64) as usize];
        if let Some(u) = t.neighbour(side, s) {
            prop_assert_ne!(u.orient, t.orient);
            prop_assert_eq!(u.neighbour(side, s), Some(t));
        }
    }

    #[test]
    fn counts_match_substitution(sys in any_base_system(), n in 0u32..=3) {
        let c = counts(&sys, u64::from(n));
        let w = substitute(&sys, Color::White, n).unwrap();
        let y = substitute(&sys, Color::Yellow, n).unwrap();
        let got = [w.up.len(), w.down.len(), y.up.len(), y.down.len()].map(BigInt::from);
        prop_assert_eq!(c, got);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn substitution_equals_path_enumeration_on_composites(sys in any_valid_system(), white in any::<bool>()) {
        let color = if white { Color::White } else { Color::Yellow };
        prop_assert_eq!(enumerate_paths(&sys, color, 2).unwrap(), substitute(&sys, color, 2).unwrap());
    }
}

#[test]
fn substitution_equals_path_enumeration() {
    let mut cases = 0;
    for sys in common::base_systems() {
        for color in Color::ALL {
            for n in 1..=3 {
                assert_eq!(
                    enumerate_paths(sys, color, n).unwrap(),
                    substitute(sys, color, n).unwrap()
                );
                cases += 1;
            }
        }
    }
    assert!(cases >= 200);
}

#[test]
fn level_sets_obey_the_sum_rule_and_sit_inside_their_parents() {
    for sys in fixtures() {
        let m = sys.m();
        for color in Color::ALL {
            for n in 1..=3u32 {
                let ls = substitute(&sys, color, n).unwrap();
                let s = ls.scale();
                assert!(ls
                    .up
                    .iter()
                    .all(|t| t.orient == Orient::Up && t.is_valid(s)));
                assert!(ls
                    .down
                    .iter()
                    .all(|t| t.orient == Orient::Down && t.is_valid(s)));
                let mut sorted = ls.iter().copied().collect::<Vec<_>>();
                sorted.sort();
                assert_eq!(sorted, ls.iter().copied().collect::<Vec<_>>());

                let parents = substitute(&sys, color, n - 1).unwrap();
                for parent in parents.iter() {
                    let children = if parent.is_up() {
                        sys.pattern(color)
                    } else {
                        sys.pattern(color.opposite())
                    };
                    for c in children.iter() {
                        let t = parent.compose_child(c, m);
                        assert!(
                            ls.up.binary_search(&t).is_ok() || ls.down.binary_search(&t).is_ok()
                        );
                        assert!(contains_triangle(parent, parents.scale(), &t, s));
                    }
                }
            }
        }
    }
}

#[test]
fn counts_match_substitution_on_fixtures() {
    for sys in fixtures() {
        for n in 0..=3u32 {
            let c = counts(&sys, u64::from(n));
            let w = substitute(&sys, Color::White, n).unwrap();
            let y = substitute(&sys, Color::Yellow, n).unwrap();
            let got = [w.up.len(), w.down.len(), y.up.len(), y.down.len()].map(BigInt::from);
            assert_eq!(c, got);
        }
    }
}

#[test]
fn parse_round_trip_over_the_pool() {
    for sys in common::valid_systems() {
        assert_eq!(&trilaby::parse_system(&sys.to_text()).unwrap(), sys);
    }
}
