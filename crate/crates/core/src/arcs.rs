//! Fractal exits, exit points of triangles, and level-`n` approximations of
//! the arcs between fractal exits.
//!
//! The exit of type `i` of a fractal is the fixed point of the projection
//! onto its exit triangle of type `i`. For an upright `T(k)` at scale `m`
//! that fixed point is `k / (m - 1)`, so every exit point of a level-`n`
//! triangle is an integer triple over the denominator `m^n (m - 1)`.
//! Arc approximations are computed in those integers and exposed as exact
//! rationals.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::geometry::{project_point, BaryPoint};
use crate::index::{Orient, Pair, Side, TriIndex};
use crate::pathmatrix::{exit_paths, TypedPath};
use crate::pattern::{Color, PatternSystem};
use crate::substitute::{checked_scale, DEFAULT_CAP};
use crate::validate::{require_valid, ExitTriple};

/// The three exits of one fractal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractalExits {
    pub color: Color,
    pub m: u64,
    /// `points[i]` is the exit of type `i + 1`.
    pub points: [BaryPoint; 3],
    numerators: [[u64; 3]; 3],
}

impl FractalExits {
    pub fn point(&self, side: Side) -> &BaryPoint {
        &self.points[side.index()]
    }

    fn from_triple(exits: &ExitTriple, color: Color, m: u64) -> FractalExits {
        let numerators = Side::ALL.map(|side| exits.exit(color, side, m).k);
        let points = numerators.map(|k| BaryPoint::from_ratios(k, m - 1).expect("sums to m-1"));
        FractalExits {
            color,
            m,
            points,
            numerators,
        }
    }
}

/// The exits of the `color` fractal, checked to be fixed points of the
/// projections onto the exit triangles.
pub fn fractal_exits(sys: &PatternSystem, color: Color) -> Result<FractalExits> {
    let exits = require_valid(sys)?;
    let m = sys.m();
    let fe = FractalExits::from_triple(&exits, color, m);
    for side in Side::ALL {
        let t = exits.exit(color, side, m);
        if project_point(&t, m, fe.point(side)) != *fe.point(side) {
            return Err(Error::InvalidSystem(format!(
                "exit {side} of the {color} fractal is not fixed by {t}"
            )));
        }
    }
    Ok(fe)
}

/// The exit of type `side` of triangle `t` at scale `s`, where `t` belongs
/// to the `context` fractal: upright triangles carry their own colour's
/// fractal and upside-down ones the other colour's.
pub fn exit_point(
    t: &TriIndex,
    s: u64,
    side: Side,
    white: &FractalExits,
    yellow: &FractalExits,
    context: Color,
) -> BaryPoint {
    let carried = match t.orient {
        Orient::Up => context,
        Orient::Down => context.opposite(),
    };
    let exits = match carried {
        Color::White => white,
        Color::Yellow => yellow,
    };
    project_point(t, s, exits.point(side))
}

/// Integer numerators of an exit point over `s (m - 1)`.
fn exit_numerators(t: &TriIndex, side: Side, carried: &FractalExits) -> [u64; 3] {
    let m1 = carried.m - 1;
    let a = carried.numerators[side.index()];
    std::array::from_fn(|i| match t.orient {
        Orient::Up => t.k[i] * m1 + a[i],
        Orient::Down => (t.k[i] + 1) * m1 - a[i],
    })
}

/// One triangle of an arc approximation with the sides through which the
/// arc enters and leaves it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Step {
    tri: TriIndex,
    entry: Side,
    exit: Side,
}

/// A level-`n` approximation of the arc of type `{i,j}` in one fractal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcApprox {
    pub color: Color,
    pub pair: Pair,
    pub n: u32,
    pub m: u64,
    /// The triangles at scale `m^n`, from exit `i` to exit `j`.
    pub path: TypedPath,
    /// Fractal exit `i`, the exit points shared by consecutive triangles,
    /// then fractal exit `j`.
    pub polyline: Vec<BaryPoint>,
    denominator: u64,
    numerators: Vec<[u64; 3]>,
}

impl ArcApprox {
    pub fn scale(&self) -> u64 {
        self.path.scale
    }

    /// The common denominator `m^n (m - 1)` of all polyline points.
    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    /// Integer numerators of the polyline points over [`Self::denominator`].
    pub fn numerators(&self) -> &[[u64; 3]] {
        &self.numerators
    }
}

struct BasePaths {
    /// Indexed by `[color][pair]`, oriented from the lower side to the
    /// higher one.
    steps: [[Vec<Step>; 3]; 2],
}

impl BasePaths {
    fn new(sys: &PatternSystem) -> Result<BasePaths> {
        let paths = exit_paths(sys)?;
        let mut steps: [[Vec<Step>; 3]; 2] = Default::default();
        for p in &paths {
            steps[p.color.index()][p.pair.index()] = to_steps(p);
        }
        Ok(BasePaths { steps })
    }

    /// The base path of `color` from exit `a` to exit `b`.
    fn oriented(&self, color: Color, a: Side, b: Side) -> Vec<Step> {
        let pair = Pair::of(a, b).expect("distinct sides");
        let base = &self.steps[color.index()][pair.index()];
        if a < b {
            base.clone()
        } else {
            base.iter()
                .rev()
                .map(|s| Step {
                    tri: s.tri,
                    entry: s.exit,
                    exit: s.entry,
                })
                .collect()
        }
    }
}

fn to_steps(p: &TypedPath) -> Vec<Step> {
    (0..p.len())
        .map(|k| {
            let (entry, exit) = p.sides_at(k);
            Step {
                tri: p.triangles[k],
                entry,
                exit,
            }
        })
        .collect()
}

/// Refines the level-1 exit path of type `pair` to level `n` by replacing
/// each triangle with the base path between its entry and exit sides.
pub fn refine_arc(sys: &PatternSystem, color: Color, pair: Pair, n: u32) -> Result<ArcApprox> {
    refine_arc_with_cap(sys, color, pair, n, DEFAULT_CAP)
}

pub fn refine_arc_with_cap(
    sys: &PatternSystem,
    color: Color,
    pair: Pair,
    n: u32,
    cap: u32,
) -> Result<ArcApprox> {
    if n > cap {
        return Err(Error::CapExceeded { requested: n, cap });
    }
    if n == 0 {
        return Err(Error::InvalidSystem(
            "arc approximations start at level 1".into(),
        ));
    }
    let m = sys.m();
    let scale = checked_scale(m, n)?;
    let exits = require_valid(sys)?;
    let base = BasePaths::new(sys)?;
    let (i, j) = pair.sides();

    let mut steps = base.oriented(color, i, j);
    for _ in 1..n {
        let mut next = Vec::with_capacity(steps.len() * 4);
        for s in &steps {
            let carried = if s.tri.is_up() {
                color
            } else {
                color.opposite()
            };
            for c in base.oriented(carried, s.entry, s.exit) {
                next.push(Step {
                    tri: s.tri.compose_child(&c.tri, m),
                    entry: c.entry,
                    exit: c.exit,
                });
            }
        }
        steps = next;
    }

    let both = [
        FractalExits::from_triple(&exits, Color::White, m),
        FractalExits::from_triple(&exits, Color::Yellow, m),
    ];
    let own = &both[color.index()];
    let denominator = scale * (m - 1);
    let lift = |k: [u64; 3]| k.map(|x| x * (denominator / (m - 1)));
    let mut numerators = Vec::with_capacity(steps.len() + 1);
    numerators.push(lift(own.numerators[i.index()]));
    for s in &steps[..steps.len() - 1] {
        let carried = if s.tri.is_up() {
            color
        } else {
            color.opposite()
        };
        numerators.push(exit_numerators(&s.tri, s.exit, &both[carried.index()]));
    }
    numerators.push(lift(own.numerators[j.index()]));

    let polyline = numerators
        .iter()
        .map(|k| BaryPoint(k.map(|x| BigRational::new(BigInt::from(x), BigInt::from(denominator)))))
        .collect();
    let labels = steps[..steps.len() - 1].iter().map(|s| s.exit).collect();
    let triangles = steps.iter().map(|s| s.tri).collect();
    let path = TypedPath::new(color, pair, scale, triangles, labels)?;
    Ok(ArcApprox {
        color,
        pair,
        n,
        m,
        path,
        polyline,
        denominator,
        numerators,
    })
}

/// Length of the polyline, a lower bound for the length of the arc.
///
/// Runs of collinear segments are merged exactly before square roots are
/// taken, so straight pieces are measured as a single segment.
pub fn chord_lower_bound(a: &ArcApprox) -> f64 {
    let pts: Vec<[i128; 3]> = a.numerators.iter().map(|p| p.map(i128::from)).collect();
    let diff = |p: &[i128; 3], q: &[i128; 3]| [q[0] - p[0], q[1] - p[1], q[2] - p[2]];
    let same_direction = |d: &[i128; 3], e: &[i128; 3]| {
        let cross = [
            d[1] * e[2] - d[2] * e[1],
            d[2] * e[0] - d[0] * e[2],
            d[0] * e[1] - d[1] * e[0],
        ];
        cross == [0, 0, 0] && d[0] * e[0] + d[1] * e[1] + d[2] * e[2] > 0
    };

    let mut corners = vec![pts[0]];
    for k in 1..pts.len() {
        let last = corners.len() - 1;
        if k + 1 < pts.len() {
            let d = diff(&corners[last], &pts[k]);
            let e = diff(&pts[k], &pts[k + 1]);
            if same_direction(&d, &e) || e == [0, 0, 0] {
                continue;
            }
        }
        corners.push(pts[k]);
    }

    let denom = a.denominator as f64;
    corners
        .windows(2)
        .map(|w| {
            let d = diff(&w[0], &w[1]);
            let sq = -(d[0] * d[1] + d[0] * d[2] + d[1] * d[2]);
            (sq as f64).sqrt() / denom
        })
        .sum()
}

/// The unique triangle common to the three level-`n` exit paths of the
/// `color` fractal, at scale `m^n`.
pub fn find_w_star(sys: &PatternSystem, color: Color, n: u32) -> Result<TriIndex> {
    let arcs = Pair::ALL
        .iter()
        .map(|&p| refine_arc(sys, color, p, n))
        .collect::<Result<Vec<_>>>()?;
    let common: Vec<TriIndex> = arcs[0]
        .path
        .triangles
        .iter()
        .filter(|t| arcs[1..].iter().all(|a| a.path.triangles.contains(t)))
        .copied()
        .collect();
    match common.as_slice() {
        [t] => Ok(*t),
        _ => Err(Error::InvalidSystem(format!(
            "the three {color} exit paths share {} triangles",
            common.len()
        ))),
    }
}
