mod common;

use common::any_base_system;
use proptest::prelude::*;
use trilaby::{refine_arc, render_svg, substitute, Color, Pair, RenderStyle};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn one_polygon_per_triangle_and_stable_bytes(sys in any_base_system(), n in 0u32..=2, yellow: bool) {
        let color = if yellow { Color::Yellow } else { Color::White };
        let ls = substitute(&sys, color, n).unwrap();
        let arcs: Vec<_> = Pair::ALL.iter().map(|&p| refine_arc(&sys, color, p, 2).unwrap()).collect();
        let style = RenderStyle::default();
        let svg = render_svg(&ls, &style, &arcs);
        prop_assert_eq!(svg.matches("<polygon").count(), ls.len());
        prop_assert_eq!(svg.matches("<polyline").count(), 3);
        prop_assert!(svg.starts_with("<?xml") && svg.ends_with("</svg>\n"));
        prop_assert_eq!(svg.matches("<svg").count(), 1);
        prop_assert_eq!(render_svg(&ls, &style, &arcs), svg);
    }
}
