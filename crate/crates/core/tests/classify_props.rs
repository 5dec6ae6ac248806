mod common;

use common::{fixtures, valid_systems};
use trilaby::classify::{row_shapes, theta_exceeds_m, RowShape};
use trilaby::{
    arc_dimensions, classify_blocked, fractal_dimension, path_matrices, BlockClass, Pair,
};

#[test]
fn rows_are_positive_or_straight() {
    let pool = valid_systems();
    assert!(pool.len() >= 200);
    for sys in pool {
        let pm = path_matrices(sys).unwrap();
        let report = classify_blocked(sys).unwrap();
        for (pair, shape) in Pair::ALL.into_iter().zip(row_shapes(&pm, sys.m())) {
            assert_ne!(shape, RowShape::Other, "{pair}:\n{}", pm.combined());
            assert_eq!(
                report.is_blocked(pair),
                shape == RowShape::Positive,
                "{pair}"
            );
        }
    }
}

#[test]
fn square_is_positive_exactly_when_globally_blocked() {
    for sys in valid_systems() {
        let pm = path_matrices(sys).unwrap();
        let global = classify_blocked(sys).unwrap().class == BlockClass::GloballyBlocked;
        assert_eq!(pm.m.pow(2).is_positive(), global);
    }
}

#[test]
fn theta_exceeds_m_when_globally_blocked() {
    let mut seen = 0;
    for sys in valid_systems() {
        let dims = arc_dimensions(sys).unwrap();
        if dims.class == BlockClass::GloballyBlocked {
            seen += 1;
            assert!(theta_exceeds_m(dims.theta.as_ref().unwrap(), sys.m()));
            assert!(dims.values.iter().all(|&d| d > 1.0));
        }
    }
    assert!(seen > 0);
}

#[test]
fn dimensions_lie_in_range() {
    for sys in valid_systems() {
        let fd = fractal_dimension(sys).unwrap().dimension;
        assert!(fd > 1.0 && fd <= 2.0, "{fd}");
        let dims = arc_dimensions(sys).unwrap();
        assert!(dims.consistent && dims.shape_ok);
        for d in dims.values {
            assert!((1.0..=fd + 1e-12).contains(&d), "{d} vs {fd}");
        }
    }
}

#[test]
fn fixture_classes() {
    let classes: Vec<BlockClass> = fixtures()
        .iter()
        .map(|s| classify_blocked(s).unwrap().class)
        .collect();
    assert_eq!(
        classes,
        vec![
            BlockClass::GloballyBlocked,
            BlockClass::OneBlocked { blocked: Pair::P23 },
            BlockClass::TwoBlocked {
                unblocked: Pair::P13
            },
        ]
    );
}

#[test]
fn classes_cover_the_pool() {
    let mut kinds = [0usize; 3];
    for sys in valid_systems() {
        let slot = match classify_blocked(sys).unwrap().class {
            BlockClass::GloballyBlocked => 0,
            BlockClass::TwoBlocked { .. } => 1,
            BlockClass::OneBlocked { .. } => 2,
        };
        kinds[slot] += 1;
    }
    assert!(kinds.iter().all(|&k| k > 0), "{kinds:?}");
}
