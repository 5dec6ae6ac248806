//! Integer indexing of the triangles in the `s × s` subdivision of the unit
//! triangle.
//!
//! At scale `s` the unit triangle splits into `s²` triangles of side `1/s`:
//! upright ones indexed by non-negative triples with `k1 + k2 + k3 = s - 1`
//! and upside-down ones with `k1 + k2 + k3 = s - 2`. The `i`-th component
//! names the strip of type `i` (parallel to the side opposite `P_i`) that
//! contains the triangle.

use std::fmt;

/// Orientation of a subdivision triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orient {
    Up,
    Down,
}

impl Orient {
    pub fn flipped(self) -> Orient {
        match self {
            Orient::Up => Orient::Down,
            Orient::Down => Orient::Up,
        }
    }
}

/// A side type, i.e. one of the three directions `1`, `2`, `3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    One,
    Two,
    Three,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::One, Side::Two, Side::Three];

    /// Zero-based component index.
    pub fn index(self) -> usize {
        match self {
            Side::One => 0,
            Side::Two => 1,
            Side::Three => 2,
        }
    }

    pub fn number(self) -> u8 {
        self.index() as u8 + 1
    }

    pub fn from_index(i: usize) -> Option<Side> {
        Side::ALL.get(i).copied()
    }

    pub fn from_number(n: u8) -> Option<Side> {
        match n {
            1 => Some(Side::One),
            2 => Some(Side::Two),
            3 => Some(Side::Three),
            _ => None,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// An unordered pair of distinct sides: `{1,2}`, `{1,3}` or `{2,3}`.
///
/// Used both for the type of an exit-to-exit path and for the type of a
/// triangle with respect to such a path. The declaration order is the row
/// and column order of every path matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pair {
    P12,
    P13,
    P23,
}

impl Pair {
    pub const ALL: [Pair; 3] = [Pair::P12, Pair::P13, Pair::P23];

    pub fn index(self) -> usize {
        match self {
            Pair::P12 => 0,
            Pair::P13 => 1,
            Pair::P23 => 2,
        }
    }

    pub fn from_index(i: usize) -> Option<Pair> {
        Pair::ALL.get(i).copied()
    }

    /// The pair `{a, b}`; `None` when `a == b`.
    pub fn of(a: Side, b: Side) -> Option<Pair> {
        match (a.min(b), a.max(b)) {
            (Side::One, Side::Two) => Some(Pair::P12),
            (Side::One, Side::Three) => Some(Pair::P13),
            (Side::Two, Side::Three) => Some(Pair::P23),
            _ => None,
        }
    }

    /// The two sides in increasing order.
    pub fn sides(self) -> (Side, Side) {
        match self {
            Pair::P12 => (Side::One, Side::Two),
            Pair::P13 => (Side::One, Side::Three),
            Pair::P23 => (Side::Two, Side::Three),
        }
    }

    /// The side not in the pair.
    pub fn complement(self) -> Side {
        match self {
            Pair::P12 => Side::Three,
            Pair::P13 => Side::Two,
            Pair::P23 => Side::One,
        }
    }

    pub fn contains(self, s: Side) -> bool {
        s != self.complement()
    }

    /// Short tag used on the command line, e.g. `12`.
    pub fn tag(self) -> &'static str {
        match self {
            Pair::P12 => "12",
            Pair::P13 => "13",
            Pair::P23 => "23",
        }
    }

    pub fn from_tag(s: &str) -> Option<Pair> {
        match s {
            "12" | "21" => Some(Pair::P12),
            "13" | "31" => Some(Pair::P13),
            "23" | "32" => Some(Pair::P23),
            _ => None,
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.sides();
        write!(f, "{{{a},{b}}}")
    }
}

/// A triangle of the subdivision at some scale `s`.
///
/// The scale is carried by the surrounding collection. The derived order is
/// the canonical one: orientation first (`Up` before `Down`), then `k`
/// lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriIndex {
    pub orient: Orient,
    pub k: [u64; 3],
}

impl TriIndex {
    pub const fn up(k1: u64, k2: u64, k3: u64) -> TriIndex {
        TriIndex {
            orient: Orient::Up,
            k: [k1, k2, k3],
        }
    }

    pub const fn down(k1: u64, k2: u64, k3: u64) -> TriIndex {
        TriIndex {
            orient: Orient::Down,
            k: [k1, k2, k3],
        }
    }

    /// The whole unit triangle, `Up (0,0,0)` at scale 1.
    pub const UNIT: TriIndex = TriIndex::up(0, 0, 0);

    pub fn is_up(&self) -> bool {
        self.orient == Orient::Up
    }

    pub fn component(&self, side: Side) -> u64 {
        self.k[side.index()]
    }

    /// Whether the index satisfies the orientation-sum rule at scale `s`.
    pub fn is_valid(&self, s: u64) -> bool {
        let target = match self.orient {
            Orient::Up => s.checked_sub(1),
            Orient::Down => s.checked_sub(2),
        };
        let Some(target) = target else {
            return false;
        };
        let sum = self.k.iter().try_fold(0u64, |acc, &c| acc.checked_add(c));
        sum == Some(target) && self.k.iter().all(|&c| c < s)
    }

    /// Upright triangle meeting the boundary of the unit triangle.
    pub fn is_border(&self) -> bool {
        self.is_up() && self.k.contains(&0)
    }

    /// Upright triangle containing one of the three corners `P_i`.
    pub fn is_corner(&self, s: u64) -> bool {
        self.is_up() && self.k.iter().any(|&c| c + 1 == s)
    }

    /// The `j`-neighbour at scale `s`, if it lies inside the unit triangle.
    ///
    /// `Up(k)` and `Down(k')` are `j`-neighbours iff `k_j = k'_j + 1` and the
    /// other two components agree; they then share their side of type `j`.
    pub fn neighbour(&self, j: Side, s: u64) -> Option<TriIndex> {
        let mut k = self.k;
        let c = &mut k[j.index()];
        match self.orient {
            Orient::Up => *c = c.checked_sub(1)?,
            Orient::Down => *c += 1,
        }
        let t = TriIndex {
            orient: self.orient.flipped(),
            k,
        };
        t.is_valid(s).then_some(t)
    }

    /// The label `j` such that `self` and `other` are `j`-neighbours.
    pub fn neighbour_side(&self, other: &TriIndex) -> Option<Side> {
        let (up, down) = match (self.orient, other.orient) {
            (Orient::Up, Orient::Down) => (self, other),
            (Orient::Down, Orient::Up) => (other, self),
            _ => return None,
        };
        let mut found = None;
        for side in Side::ALL {
            let (a, b) = (up.component(side), down.component(side));
            if a == b + 1 {
                if found.is_some() {
                    return None;
                }
                found = Some(side);
            } else if a != b {
                return None;
            }
        }
        found
    }

    /// Index of `P_self(child)` where `child` lives at scale `child_scale`.
    ///
    /// An upright parent keeps the child's orientation and maps
    /// `c_i = q·K_i + k_i`; an upside-down parent is a point reflection, so
    /// it flips orientation and maps `c_i = q·K_i + (q - 1 - k_i)`. The
    /// result lives at scale `parent_scale · child_scale`.
    pub fn compose_child(&self, child: &TriIndex, child_scale: u64) -> TriIndex {
        let q = child_scale;
        match self.orient {
            Orient::Up => TriIndex {
                orient: child.orient,
                k: std::array::from_fn(|i| q * self.k[i] + child.k[i]),
            },
            Orient::Down => TriIndex {
                orient: child.orient.flipped(),
                k: std::array::from_fn(|i| q * self.k[i] + (q - 1 - child.k[i])),
            },
        }
    }

    /// Applies a permutation of the three coordinates: component `i` of the
    /// result is component `perm[i]` of `self`.
    pub fn permuted(&self, perm: [usize; 3]) -> TriIndex {
        TriIndex {
            orient: self.orient,
            k: [self.k[perm[0]], self.k[perm[1]], self.k[perm[2]]],
        }
    }
}

impl fmt::Display for TriIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = match self.orient {
            Orient::Up => 'U',
            Orient::Down => 'D',
        };
        write!(f, "{o}({},{},{})", self.k[0], self.k[1], self.k[2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neighbour_examples() {
        let t = TriIndex::up(1, 1, 1);
        assert_eq!(t.neighbour(Side::One, 4), Some(TriIndex::down(0, 1, 1)));
        assert_eq!(TriIndex::up(0, 2, 1).neighbour(Side::One, 4), None);
        assert_eq!(
            TriIndex::down(0, 1, 1).neighbour(Side::One, 4),
            Some(TriIndex::up(1, 1, 1))
        );
    }

    #[test]
    fn neighbour_is_involution_on_full_subdivision() {
        for s in 2..7u64 {
            for t in all_triangles(s) {
                for j in Side::ALL {
                    if let Some(u) = t.neighbour(j, s) {
                        assert_eq!(u.neighbour(j, s), Some(t));
                        assert_eq!(t.neighbour_side(&u), Some(j));
                    }
                }
            }
        }
    }

    #[test]
    fn every_interior_side_has_exactly_one_neighbour() {
        // s² triangles, each up triangle has 3 sides; sides shared by an up
        // and a down triangle number 3·#down.
        let s = 5;
        let tris = all_triangles(s);
        assert_eq!(tris.len() as u64, s * s);
        let shared: usize = tris
            .iter()
            .filter(|t| t.is_up())
            .map(|t| {
                Side::ALL
                    .iter()
                    .filter(|&&j| t.neighbour(j, s).is_some())
                    .count()
            })
            .sum();
        let downs = tris.iter().filter(|t| !t.is_up()).count();
        assert_eq!(shared, 3 * downs);
    }

    #[test]
    fn compose_child_examples() {
        assert_eq!(
            TriIndex::up(1, 1, 1).compose_child(&TriIndex::up(0, 2, 1), 4),
            TriIndex::up(4, 6, 5)
        );
        assert_eq!(
            TriIndex::down(0, 1, 1).compose_child(&TriIndex::up(0, 0, 3), 4),
            TriIndex::down(3, 7, 4)
        );
        for c in all_triangles(4) {
            assert_eq!(TriIndex::UNIT.compose_child(&c, 4), c);
        }
    }

    #[test]
    fn compose_child_preserves_sum_rule() {
        for (ps, cs) in [(2u64, 3u64), (4, 4), (3, 5)] {
            for p in all_triangles(ps) {
                for c in all_triangles(cs) {
                    assert!(p.compose_child(&c, cs).is_valid(ps * cs), "{p} {c}");
                }
            }
        }
    }

    #[test]
    fn validity_and_corners() {
        assert!(TriIndex::up(3, 0, 0).is_valid(4));
        assert!(!TriIndex::up(0, 0, 1).is_valid(4));
        assert!(TriIndex::down(2, 0, 0).is_valid(4));
        assert!(!TriIndex::down(3, 0, 0).is_valid(4));
        assert!(TriIndex::up(3, 0, 0).is_corner(4));
        assert!(!TriIndex::up(2, 0, 1).is_corner(4));
        assert!(TriIndex::up(2, 0, 1).is_border());
        assert!(!TriIndex::up(1, 1, 1).is_border());
    }

    #[test]
    fn pair_roundtrips() {
        for p in Pair::ALL {
            let (a, b) = p.sides();
            assert_eq!(Pair::of(a, b), Some(p));
            assert_eq!(Pair::of(b, a), Some(p));
            assert!(!p.contains(p.complement()));
            assert_eq!(Pair::from_tag(p.tag()), Some(p));
        }
        assert_eq!(Pair::of(Side::Two, Side::Two), None);
    }

    pub(crate) fn all_triangles(s: u64) -> Vec<TriIndex> {
        let mut out = Vec::new();
        for k1 in 0..s {
            for k2 in 0..s - k1 {
                out.push(TriIndex::up(k1, k2, s - 1 - k1 - k2));
                if k1 + k2 + 2 <= s {
                    out.push(TriIndex::down(k1, k2, s - 2 - k1 - k2));
                }
            }
        }
        out
    }
}
