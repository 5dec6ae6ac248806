//! Pattern systems and their line-oriented text format.
//!
//! ```text
//! # comment
//! m 4
//! WU 0 2 1
//! WD 0 1 1
//! YU 0 0 3
//! YD 0 0 2
//! ```
//!
//! Tags are `WU`, `WD`, `YU`, `YD` for white-up, white-down, yellow-up and
//! yellow-down. Record order is irrelevant.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::index::{Orient, TriIndex};

/// The two colour classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    White,
    Yellow,
}

impl Color {
    pub const ALL: [Color; 2] = [Color::White, Color::Yellow];

    pub fn opposite(self) -> Color {
        match self {
            Color::White => Color::Yellow,
            Color::Yellow => Color::White,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Color::White => 0,
            Color::Yellow => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::White => "white",
            Color::Yellow => "yellow",
        }
    }

    pub fn from_name(s: &str) -> Option<Color> {
        match s.to_ascii_lowercase().as_str() {
            "white" | "w" => Some(Color::White),
            "yellow" | "y" => Some(Color::Yellow),
            _ => None,
        }
    }
}

impl std::fmt::Display for Color {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One coloured pattern at scale `m`: its upright and upside-down triangles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    pub m: u64,
    pub up: BTreeSet<TriIndex>,
    pub down: BTreeSet<TriIndex>,
}

impl Pattern {
    pub fn empty(m: u64) -> Pattern {
        Pattern {
            m,
            up: BTreeSet::new(),
            down: BTreeSet::new(),
        }
    }

    /// Builds a pattern from any mix of triangles, sorting them by
    /// orientation. Fails on an index that is invalid at scale `m`.
    pub fn from_triangles(m: u64, tris: impl IntoIterator<Item = TriIndex>) -> Result<Pattern> {
        let mut p = Pattern::empty(m);
        for t in tris {
            if !t.is_valid(m) {
                return Err(Error::Index {
                    line: 0,
                    message: format!("{t} is not a triangle at scale {m}"),
                });
            }
            p.insert(t);
        }
        Ok(p)
    }

    /// Inserts `t`; returns `false` if it was already present.
    pub fn insert(&mut self, t: TriIndex) -> bool {
        match t.orient {
            Orient::Up => self.up.insert(t),
            Orient::Down => self.down.insert(t),
        }
    }

    pub fn remove(&mut self, t: &TriIndex) -> bool {
        match t.orient {
            Orient::Up => self.up.remove(t),
            Orient::Down => self.down.remove(t),
        }
    }

    pub fn contains(&self, t: &TriIndex) -> bool {
        match t.orient {
            Orient::Up => self.up.contains(t),
            Orient::Down => self.down.contains(t),
        }
    }

    pub fn len(&self) -> usize {
        self.up.len() + self.down.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All triangles in canonical order, upright ones first.
    pub fn iter(&self) -> impl Iterator<Item = &TriIndex> {
        self.up.iter().chain(self.down.iter())
    }

    fn map(&self, f: impl Fn(&TriIndex) -> TriIndex) -> Pattern {
        let mut p = Pattern::empty(self.m);
        for t in self.iter() {
            p.insert(f(t));
        }
        p
    }
}

/// A white pattern and a yellow pattern at a common scale `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PatternSystem {
    pub white: Pattern,
    pub yellow: Pattern,
}

impl PatternSystem {
    pub fn new(white: Pattern, yellow: Pattern) -> Result<PatternSystem> {
        if white.m != yellow.m {
            return Err(Error::InvalidSystem(format!(
                "white scale {} differs from yellow scale {}",
                white.m, yellow.m
            )));
        }
        Ok(PatternSystem { white, yellow })
    }

    pub fn m(&self) -> u64 {
        self.white.m
    }

    pub fn pattern(&self, color: Color) -> &Pattern {
        match color {
            Color::White => &self.white,
            Color::Yellow => &self.yellow,
        }
    }

    pub fn pattern_mut(&mut self, color: Color) -> &mut Pattern {
        match color {
            Color::White => &mut self.white,
            Color::Yellow => &mut self.yellow,
        }
    }

    /// `(|W|, |W'|, |Y|, |Y'|)`.
    pub fn sizes(&self) -> [usize; 4] {
        [
            self.white.up.len(),
            self.white.down.len(),
            self.yellow.up.len(),
            self.yellow.down.len(),
        ]
    }

    /// Relabels coordinates: component `i` of every index becomes component
    /// `perm[i]` of the original. This is a symmetry of the unit triangle.
    pub fn permuted(&self, perm: [usize; 3]) -> PatternSystem {
        PatternSystem {
            white: self.white.map(|t| t.permuted(perm)),
            yellow: self.yellow.map(|t| t.permuted(perm)),
        }
    }

    /// Exchanges the two colours.
    pub fn color_swapped(&self) -> PatternSystem {
        PatternSystem {
            white: self.yellow.clone(),
            yellow: self.white.clone(),
        }
    }

    /// Serializes in the pattern file format, canonically ordered.
    pub fn to_text(&self) -> String {
        let mut out = format!("m {}\n", self.m());
        for (tag, set) in [
            ("WU", &self.white.up),
            ("WD", &self.white.down),
            ("YU", &self.yellow.up),
            ("YD", &self.yellow.down),
        ] {
            for t in set {
                let _ = writeln!(out, "{tag} {} {} {}", t.k[0], t.k[1], t.k[2]);
            }
        }
        out
    }
}

/// Parses the pattern file format.
pub fn parse_system(text: &str) -> Result<PatternSystem> {
    let mut m: Option<u64> = None;
    let mut sys: Option<PatternSystem> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let syntax = |message: String| Error::Syntax { line, message };

        let Some(m) = m else {
            if fields.len() != 2 || fields[0] != "m" {
                return Err(syntax(format!("expected `m <integer>`, found `{trimmed}`")));
            }
            let value: u64 = fields[1]
                .parse()
                .map_err(|_| syntax(format!("bad scale `{}`", fields[1])))?;
            if value < 2 {
                return Err(syntax(format!("scale must be at least 2, got {value}")));
            }
            m = Some(value);
            sys = Some(PatternSystem {
                white: Pattern::empty(value),
                yellow: Pattern::empty(value),
            });
            continue;
        };

        if fields.len() != 4 {
            return Err(syntax(format!(
                "expected `<tag> k1 k2 k3`, found `{trimmed}`"
            )));
        }
        let (color, orient) = match fields[0] {
            "WU" => (Color::White, Orient::Up),
            "WD" => (Color::White, Orient::Down),
            "YU" => (Color::Yellow, Orient::Up),
            "YD" => (Color::Yellow, Orient::Down),
            other => return Err(syntax(format!("unknown tag `{other}`"))),
        };
        let mut k = [0u64; 3];
        for (slot, field) in k.iter_mut().zip(&fields[1..]) {
            *slot = field
                .parse()
                .map_err(|_| syntax(format!("bad index component `{field}`")))?;
        }
        let t = TriIndex { orient, k };
        if !t.is_valid(m) {
            let want = match orient {
                Orient::Up => "m-1",
                Orient::Down => "m-2",
            };
            return Err(Error::Index {
                line,
                message: format!(
                    "{} {} {} {}: components must be below {m} and sum to {want}",
                    fields[0], k[0], k[1], k[2]
                ),
            });
        }
        let pattern = sys.as_mut().expect("set with m").pattern_mut(color);
        if !pattern.insert(t) {
            return Err(Error::Duplicate {
                line,
                tag: fields[0].to_string(),
                k1: k[0],
                k2: k[1],
                k3: k[2],
            });
        }
    }

    sys.ok_or(Error::Syntax {
        line: text.lines().count().max(1),
        message: "missing `m <integer>` line".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const EX1: &str = include_str!("../examples/ex1.pat");

    #[test]
    fn parses_example_one() {
        let sys = parse_system(EX1).unwrap();
        assert_eq!(sys.m(), 4);
        assert_eq!(sys.sizes(), [5, 4, 5, 4]);
        assert!(sys.white.contains(&TriIndex::up(0, 2, 1)));
        assert!(sys.yellow.contains(&TriIndex::down(2, 0, 0)));
    }

    #[test]
    fn round_trips_through_text() {
        let sys = parse_system(EX1).unwrap();
        assert_eq!(parse_system(&sys.to_text()).unwrap(), sys);
    }

    #[test]
    fn rejects_sum_violation() {
        let err = parse_system("m 4\nWU 0 0 1\n").unwrap_err();
        assert!(matches!(err, Error::Index { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn rejects_duplicates() {
        let err = parse_system("m 4\nWU 1 1 1\nWU 1 1 1\n").unwrap_err();
        assert!(matches!(err, Error::Duplicate { line: 3, .. }), "{err:?}");
    }

    #[test]
    fn rejects_malformed_lines() {
        for text in [
            "",
            "# only a comment\n",
            "WU 1 1 1\n",
            "m four\n",
            "m 1\n",
            "m 4\nXU 1 1 1\n",
            "m 4\nWU 1 1\n",
            "m 4\nWU 1 -1 3\n",
        ] {
            assert!(
                matches!(parse_system(text), Err(Error::Syntax { .. })),
                "{text:?}"
            );
        }
    }

    #[test]
    fn symmetries_preserve_sizes() {
        let sys = parse_system(EX1).unwrap();
        let p = sys.permuted([2, 0, 1]);
        assert_eq!(p.sizes(), sys.sizes());
        assert!(p.white.contains(&TriIndex::up(1, 0, 2)));
        assert_eq!(sys.color_swapped().color_swapped(), sys);
    }
}
