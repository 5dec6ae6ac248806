//! Level-`n` substitution: the triangle sets `W_n ∪ W'_n` and `Y_n ∪ Y'_n`
//! at scale `m^n`, and their cardinalities.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::geometry::{locate_triangle, BaryPoint};
use crate::index::{Orient, TriIndex};
use crate::matrix::IntMatrix;
use crate::pattern::{Color, Pattern, PatternSystem};

/// Default bound on the enumeration level.
pub const DEFAULT_CAP: u32 = 8;

/// The level-`n` triangles of one colour, canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LevelSets {
    pub n: u32,
    pub m: u64,
    pub color: Color,
    pub up: Vec<TriIndex>,
    pub down: Vec<TriIndex>,
}

impl LevelSets {
    /// An empty set, useful as a blank canvas.
    pub fn empty(m: u64, color: Color) -> LevelSets {
        LevelSets {
            n: 0,
            m,
            color,
            up: Vec::new(),
            down: Vec::new(),
        }
    }

    /// `m^n`. Only call on sets produced by [`substitute`], which checks
    /// that this fits.
    pub fn scale(&self) -> u64 {
        self.m.pow(self.n)
    }

    pub fn len(&self) -> usize {
        self.up.len() + self.down.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All triangles in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = &TriIndex> {
        self.up.iter().chain(self.down.iter())
    }

    /// The same triangles as a pattern at scale `m^n`.
    pub fn to_pattern(&self) -> Pattern {
        let mut p = Pattern::empty(self.scale());
        for t in self.iter() {
            p.insert(*t);
        }
        p
    }

    fn from_unsorted(n: u32, m: u64, color: Color, tris: Vec<TriIndex>) -> LevelSets {
        let (mut up, mut down): (Vec<_>, Vec<_>) = tris.into_iter().partition(TriIndex::is_up);
        up.sort_unstable();
        up.dedup();
        down.sort_unstable();
        down.dedup();
        LevelSets {
            n,
            m,
            color,
            up,
            down,
        }
    }
}

/// `m^n`, or `ScaleOverflow` if it does not fit comfortably in `u64`.
pub fn checked_scale(m: u64, n: u32) -> Result<u64> {
    m.checked_pow(n)
        .filter(|s| s.checked_mul(m).is_some())
        .ok_or(Error::ScaleOverflow(n))
}

/// Enumerates the level-`n` triangles of `color` with the default cap.
pub fn substitute(sys: &PatternSystem, color: Color, n: u32) -> Result<LevelSets> {
    substitute_with_cap(sys, color, n, DEFAULT_CAP)
}

/// Enumerates the level-`n` triangles of `color`.
///
/// Every level-`(n-1)` triangle is replaced by the projection of a base
/// pattern: upright parents take their own colour's pattern and
/// upside-down parents take the opposite colour's. Level 0 is the unit
/// triangle.
pub fn substitute_with_cap(
    sys: &PatternSystem,
    color: Color,
    n: u32,
    cap: u32,
) -> Result<LevelSets> {
    if n > cap {
        return Err(Error::CapExceeded { requested: n, cap });
    }
    let m = sys.m();
    checked_scale(m, n)?;
    let mut current = vec![TriIndex::UNIT];
    for _ in 0..n {
        let mut next = Vec::with_capacity(current.len() * sys.pattern(color).len());
        for parent in &current {
            let children = match parent.orient {
                Orient::Up => sys.pattern(color),
                Orient::Down => sys.pattern(color.opposite()),
            };
            next.extend(children.iter().map(|c| parent.compose_child(c, m)));
        }
        current = next;
    }
    Ok(LevelSets::from_unsorted(n, m, color, current))
}

/// The pair `(W_n ∪ W'_n, Y_n ∪ Y'_n)` as a pattern system at scale `m^n`.
pub fn level_system(sys: &PatternSystem, n: u32) -> Result<PatternSystem> {
    level_system_with_cap(sys, n, DEFAULT_CAP)
}

pub fn level_system_with_cap(sys: &PatternSystem, n: u32, cap: u32) -> Result<PatternSystem> {
    if n == 0 {
        return Err(Error::InvalidSystem("level 0 has no pattern system".into()));
    }
    let white = substitute_with_cap(sys, Color::White, n, cap)?.to_pattern();
    let yellow = substitute_with_cap(sys, Color::Yellow, n, cap)?.to_pattern();
    PatternSystem::new(white, yellow)
}

/// Substitutes `inner` into `outer`: the result has scale
/// `outer.m · inner.m`, and each upright white triangle of `outer` carries
/// the white pattern of `inner`, each upside-down white triangle carries
/// the yellow pattern of `inner`, and symmetrically for yellow.
pub fn compose(outer: &PatternSystem, inner: &PatternSystem) -> Result<PatternSystem> {
    let q = inner.m();
    let scale = outer.m().checked_mul(q).ok_or(Error::ScaleOverflow(2))?;
    let build = |color: Color| {
        let mut p = Pattern::empty(scale);
        for parent in outer.pattern(color).iter() {
            let children = match parent.orient {
                Orient::Up => inner.pattern(color),
                Orient::Down => inner.pattern(color.opposite()),
            };
            for c in children.iter() {
                p.insert(parent.compose_child(c, q));
            }
        }
        p
    };
    PatternSystem::new(build(Color::White), build(Color::Yellow))
}

/// Enumerates the level-`n` triangles of `color` as images of the unit
/// triangle under all length-`n` paths of the two-vertex multigraph.
///
/// From the vertex of colour `c`, every upright triangle of pattern `c` is
/// a loop and every upside-down triangle is an edge to the other colour.
/// Each path `t1 … tn` yields `P_t1 ∘ … ∘ P_tn(T1)`. The composed affine
/// maps are tracked through the images of `P1, P2, P3`, which at depth `k`
/// are integer triples over `m^k`. This is independent of the index rule
/// used by [`substitute`] and serves as a check on it.
pub fn enumerate_paths(sys: &PatternSystem, color: Color, n: u32) -> Result<LevelSets> {
    let m = sys.m();
    let scale = checked_scale(m, n)?;
    let identity: [[u64; 3]; 3] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    let mut frontier: Vec<([[u64; 3]; 3], Color)> = vec![(identity, color)];
    for _ in 0..n {
        let mut next = Vec::with_capacity(frontier.len() * sys.pattern(color).len());
        for (images, state) in &frontier {
            for t in sys.pattern(*state).iter() {
                // Vertex A_i of t is a_i / m; its image under the prefix map
                // is Σ_j a_ij · images[j].
                let a = vertex_numerators(t);
                let composed: [[u64; 3]; 3] = std::array::from_fn(|i| {
                    std::array::from_fn(|c| (0..3).map(|j| a[i][j] * images[j][c]).sum())
                });
                let s = if t.is_up() { *state } else { state.opposite() };
                next.push((composed, s));
            }
        }
        frontier = next;
    }
    let mut tris = Vec::with_capacity(frontier.len());
    for (images, _) in &frontier {
        let pts =
            images.map(|v| BaryPoint::from_ratios(v, scale).expect("inside the unit triangle"));
        let t = locate_triangle(&pts, scale).ok_or_else(|| {
            Error::InvalidSystem("path image is not a subdivision triangle".into())
        })?;
        tris.push(t);
    }
    Ok(LevelSets::from_unsorted(n, m, color, tris))
}

/// Vertex `i` of `t` times the scale: `k + e_i` upright, `k + 1 - e_i`
/// upside down.
fn vertex_numerators(t: &TriIndex) -> [[u64; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let e = u64::from(i == j);
            match t.orient {
                Orient::Up => t.k[j] + e,
                Orient::Down => t.k[j] + 1 - e,
            }
        })
    })
}

/// `(|W_n|, |W'_n|, |Y_n|, |Y'_n|)` by exponentiating the 2×2 count
/// recursion `[[W, Y'], [W', Y]]`. The yellow recursion is the same matrix
/// with both coordinates swapped, so its counts are read off the second
/// column. Level 0 is `(1, 0, 1, 0)`.
pub fn counts(sys: &PatternSystem, n: u64) -> [BigInt; 4] {
    let [w, wd, y, yd] = sys.sizes().map(|x| x as i64);
    let p = IntMatrix::from_rows(&[vec![w, yd], vec![wd, y]]).pow(n);
    [
        p[(0, 0)].clone(),
        p[(1, 0)].clone(),
        p[(1, 1)].clone(),
        p[(0, 1)].clone(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::parse_system;

    fn ex1() -> PatternSystem {
        parse_system(include_str!("../examples/ex1.pat")).unwrap()
    }

    #[test]
    fn level_one_is_the_pattern() {
        let sys = ex1();
        let ls = substitute(&sys, Color::White, 1).unwrap();
        assert_eq!(ls.to_pattern(), sys.white);
        assert_eq!((ls.up.len(), ls.down.len()), (5, 4));
    }

    #[test]
    fn level_two_counts() {
        let ls = substitute(&ex1(), Color::White, 2).unwrap();
        assert_eq!((ls.up.len(), ls.down.len()), (41, 40));
        assert!(ls.iter().all(|t| t.is_valid(16)));
    }

    #[test]
    fn counts_examples() {
        let sys = ex1();
        let as_u = |c: [BigInt; 4]| c.map(|x| u64::try_from(x).unwrap());
        assert_eq!(as_u(counts(&sys, 0)), [1, 0, 1, 0]);
        assert_eq!(as_u(counts(&sys, 1)), [5, 4, 5, 4]);
        assert_eq!(as_u(counts(&sys, 2)), [41, 40, 41, 40]);
    }

    #[test]
    fn path_enumeration_agrees_at_level_two() {
        let sys = ex1();
        for color in Color::ALL {
            assert_eq!(
                enumerate_paths(&sys, color, 2).unwrap(),
                substitute(&sys, color, 2).unwrap()
            );
        }
    }

    #[test]
    fn compose_with_self_is_level_two() {
        let sys = ex1();
        assert_eq!(compose(&sys, &sys).unwrap(), level_system(&sys, 2).unwrap());
    }

    #[test]
    fn cap_and_overflow() {
        let sys = ex1();
        assert_eq!(
            substitute(&sys, Color::White, 9).unwrap_err(),
            Error::CapExceeded {
                requested: 9,
                cap: 8
            }
        );
        assert_eq!(
            substitute_with_cap(&sys, Color::White, 40, 100).unwrap_err(),
            Error::ScaleOverflow(40)
        );
        let zero = substitute(&sys, Color::Yellow, 0).unwrap();
        assert_eq!(zero.up, vec![TriIndex::UNIT]);
        assert!(zero.down.is_empty());
    }
}
