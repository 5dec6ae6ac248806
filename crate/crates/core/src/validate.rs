//! The tree, exits and corners properties.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{is_tree, TriGraph};
use crate::index::{Side, TriIndex};
use crate::pattern::{Color, PatternSystem};
use crate::substitute::{level_system_with_cap, DEFAULT_CAP};

/// The exit parameters `(k1, k2, k3)` of a system.
///
/// On side 1 the white exit is `T(0, k1, m-1-k1)` and the yellow exit is
/// its mirror image `T(0, m-1-k1, k1)`; sides 2 and 3 follow cyclically
/// with `T(k2, 0, m-1-k2)` and `T(k3, m-1-k3, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExitTriple(pub [u64; 3]);

impl ExitTriple {
    pub fn k(&self, side: Side) -> u64 {
        self.0[side.index()]
    }

    /// The exit triangle of `color` on `side` at scale `m`.
    pub fn exit(&self, color: Color, side: Side, m: u64) -> TriIndex {
        exit_candidate(color, side, self.k(side), m)
    }

    /// The exit triple of the level-`n` system of a scale-`m` system.
    pub fn nested(&self, m: u64, n: u32) -> ExitTriple {
        let factor = (m.pow(n) - 1) / (m - 1);
        ExitTriple(self.0.map(|k| k * factor))
    }
}

fn exit_candidate(color: Color, side: Side, k: u64, m: u64) -> TriIndex {
    let (a, b) = match color {
        Color::White => (k, m - 1 - k),
        Color::Yellow => (m - 1 - k, k),
    };
    match side {
        Side::One => TriIndex::up(0, a, b),
        Side::Two => TriIndex::up(a, 0, b),
        Side::Three => TriIndex::up(a, b, 0),
    }
}

/// Outcome of checking the three properties. Failures are collected, not
/// short-circuited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub m: u64,
    pub tree_white: bool,
    pub tree_yellow: bool,
    pub exits: Option<ExitTriple>,
    pub corners_white: Vec<TriIndex>,
    pub corners_yellow: Vec<TriIndex>,
    pub corners_ok: bool,
    pub overall: bool,
    pub diagnostics: Vec<String>,
}

impl ValidationReport {
    pub fn to_text(&self) -> String {
        let mark = |ok: bool| if ok { "ok" } else { "FAILED" };
        let mut out = String::new();
        let _ = writeln!(out, "scale m = {}", self.m);
        let _ = writeln!(out, "tree property (white):  {}", mark(self.tree_white));
        let _ = writeln!(out, "tree property (yellow): {}", mark(self.tree_yellow));
        match self.exits {
            Some(e) => {
                let _ = writeln!(
                    out,
                    "exits property:         ok (k = {}, {}, {})",
                    e.0[0], e.0[1], e.0[2]
                );
            }
            None => {
                let _ = writeln!(out, "exits property:         FAILED");
            }
        }
        let _ = writeln!(out, "corners property:       {}", mark(self.corners_ok));
        for d in &self.diagnostics {
            let _ = writeln!(out, "  - {d}");
        }
        let verdict = if self.overall {
            "triangular labyrinth patterns system"
        } else {
            "not a triangular labyrinth patterns system"
        };
        let _ = writeln!(out, "result: {verdict}");
        out
    }

    /// Machine-readable `key=value` lines.
    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "m={}", self.m);
        let _ = writeln!(out, "tree_white={}", self.tree_white);
        let _ = writeln!(out, "tree_yellow={}", self.tree_yellow);
        let _ = writeln!(out, "exits_ok={}", self.exits.is_some());
        if let Some(e) = self.exits {
            let _ = writeln!(out, "exits={},{},{}", e.0[0], e.0[1], e.0[2]);
        }
        let _ = writeln!(out, "corners_ok={}", self.corners_ok);
        let _ = writeln!(out, "overall={}", self.overall);
        out
    }
}

/// Finds the unique exit parameter on every side.
pub fn find_exits(sys: &PatternSystem) -> Result<ExitTriple> {
    let m = sys.m();
    let mut k = [0u64; 3];
    for side in Side::ALL {
        let mut found = (0..m).filter(|&c| {
            sys.white
                .contains(&exit_candidate(Color::White, side, c, m))
                && sys
                    .yellow
                    .contains(&exit_candidate(Color::Yellow, side, c, m))
        });
        k[side.index()] = found.next().ok_or(Error::NoExit(side))?;
        if found.next().is_some() {
            return Err(Error::MultipleExits(side));
        }
    }
    Ok(ExitTriple(k))
}

fn corners(p: &crate::pattern::Pattern) -> Vec<TriIndex> {
    p.up.iter().filter(|t| t.is_corner(p.m)).copied().collect()
}

pub fn validate_system(sys: &PatternSystem) -> ValidationReport {
    let mut diagnostics = Vec::new();

    let mut tree = |color: Color| {
        let p = sys.pattern(color);
        let g = TriGraph::from_pattern(p);
        let ok = is_tree(&g);
        if !ok {
            if p.is_empty() {
                diagnostics.push(format!("{color} pattern is empty"));
            } else {
                let comps = g.component_count();
                if comps > 1 {
                    diagnostics.push(format!("{color} graph has {comps} components"));
                }
                if g.edge_count() + comps != g.vertex_count() {
                    diagnostics.push(format!("{color} graph contains a cycle"));
                }
            }
        }
        ok
    };
    let tree_white = tree(Color::White);
    let tree_yellow = tree(Color::Yellow);

    let exits = match find_exits(sys) {
        Ok(e) => Some(e),
        Err(e) => {
            diagnostics.push(e.to_string());
            for side in Side::ALL {
                let admissible: Vec<u64> = (0..sys.m())
                    .filter(|&c| {
                        sys.white
                            .contains(&exit_candidate(Color::White, side, c, sys.m()))
                            && sys
                                .yellow
                                .contains(&exit_candidate(Color::Yellow, side, c, sys.m()))
                    })
                    .collect();
                if admissible.len() != 1 {
                    diagnostics.push(format!(
                        "side {side}: {} admissible exit positions {admissible:?}",
                        admissible.len()
                    ));
                }
            }
            None
        }
    };

    let corners_white = corners(&sys.white);
    let corners_yellow = corners(&sys.yellow);
    let mut corners_ok = true;
    for (color, c) in [
        (Color::White, &corners_white),
        (Color::Yellow, &corners_yellow),
    ] {
        if c.len() > 1 {
            corners_ok = false;
            let list: Vec<String> = c.iter().map(ToString::to_string).collect();
            diagnostics.push(format!(
                "{color} pattern has {} corner triangles: {}",
                c.len(),
                list.join(" ")
            ));
        }
    }
    for t in &corners_white {
        if corners_yellow.contains(t) {
            corners_ok = false;
            diagnostics.push(format!("corner triangle {t} is both white and yellow"));
        }
    }

    let overall = tree_white && tree_yellow && exits.is_some() && corners_ok;
    ValidationReport {
        m: sys.m(),
        tree_white,
        tree_yellow,
        exits,
        corners_white,
        corners_yellow,
        corners_ok,
        overall,
        diagnostics,
    }
}

/// Validates the level-`n` system `(W_n ∪ W'_n, Y_n ∪ Y'_n)`.
pub fn validate_level(sys: &PatternSystem, n: u32) -> Result<ValidationReport> {
    validate_level_with_cap(sys, n, DEFAULT_CAP)
}

pub fn validate_level_with_cap(sys: &PatternSystem, n: u32, cap: u32) -> Result<ValidationReport> {
    Ok(validate_system(&level_system_with_cap(sys, n, cap)?))
}

/// The exit triple of a valid system, or `InvalidSystem` listing every
/// failed property.
pub fn require_valid(sys: &PatternSystem) -> Result<ExitTriple> {
    let report = validate_system(sys);
    match report.exits {
        Some(e) if report.overall => Ok(e),
        _ => Err(Error::InvalidSystem(report.diagnostics.join("; "))),
    }
}
