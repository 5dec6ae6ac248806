#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;
use trilaby::substitute::{compose, level_system};
use trilaby::validate::validate_system;
use trilaby::{parse_system, PatternSystem};

pub const EX1: &str = include_str!("../../examples/ex1.pat");
pub const EX2: &str = include_str!("../../examples/ex2.pat");
pub const EX3: &str = include_str!("../../examples/ex3.pat");

pub fn ex(i: usize) -> PatternSystem {
    parse_system([EX1, EX2, EX3][i - 1]).unwrap()
}

pub fn fixtures() -> Vec<PatternSystem> {
    (1..=3).map(ex).collect()
}

pub const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// The fixtures under every symmetry of the triangle and the colour swap.
pub fn symmetric_variants() -> Vec<PatternSystem> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for sys in fixtures() {
        for perm in PERMUTATIONS {
            for swap in [false, true] {
                let p = sys.permuted(perm);
                let v = if swap { p.color_swapped() } else { p };
                if seen.insert(v.to_text()) {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// Valid systems at scale 4 and 16: the symmetric variants, their level-2
/// systems, and every pairwise composition that validates.
pub fn valid_systems() -> &'static [PatternSystem] {
    static POOL: OnceLock<Vec<PatternSystem>> = OnceLock::new();
    POOL.get_or_init(|| {
        let base = symmetric_variants();
        let mut seen: BTreeSet<String> = base.iter().map(|s| s.to_text()).collect();
        let mut out = base.clone();
        let mut push = |s: PatternSystem, out: &mut Vec<PatternSystem>| {
            if validate_system(&s).overall && seen.insert(s.to_text()) {
                out.push(s);
            }
        };
        for s in &base {
            push(level_system(s, 2).unwrap(), &mut out);
        }
        for a in &base {
            for b in &base {
                push(compose(a, b).unwrap(), &mut out);
            }
        }
        out
    })
}

/// Systems of scale 4 only.
pub fn base_systems() -> &'static [PatternSystem] {
    static POOL: OnceLock<Vec<PatternSystem>> = OnceLock::new();
    POOL.get_or_init(symmetric_variants)
}

pub fn any_valid_system() -> impl Strategy<Value = PatternSystem> {
    proptest::sample::select(valid_systems())
}

pub fn any_base_system() -> impl Strategy<Value = PatternSystem> {
    proptest::sample::select(base_systems())
}
