//! Blockedness, fractal dimension and arc dimensions.
//!
//! The exit path of type `{i,j}` is blocked when its triangles do not all
//! lie in one strip of the complementary type. A system is `π`-blocked
//! when its white or its yellow path of type `π` is blocked.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::index::Pair;
use crate::matrix::IntMatrix;
use crate::pathmatrix::{exit_paths, path_matrices, PathMatrices, TypedPath};
use crate::pattern::{Color, PatternSystem};
use crate::spectrum::{dominant_eigenvalue, is_irreducible, perron_root, QuadSurd, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockClass {
    /// Blocked in all three directions.
    GloballyBlocked,
    /// Blocked in two directions; `unblocked` is the third.
    TwoBlocked { unblocked: Pair },
    /// Blocked in exactly one direction.
    OneBlocked { blocked: Pair },
}

impl fmt::Display for BlockClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockClass::GloballyBlocked => f.write_str("globally blocked"),
            BlockClass::TwoBlocked { unblocked } => {
                write!(f, "two-blocked (unblocked {unblocked})")
            }
            BlockClass::OneBlocked { blocked } => write!(f, "one-blocked (blocked {blocked})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockReport {
    /// Indexed by `Pair::index`.
    pub white: [bool; 3],
    pub yellow: [bool; 3],
    /// `white[π] || yellow[π]`.
    pub system: [bool; 3],
    pub class: BlockClass,
}

impl BlockReport {
    pub fn is_blocked(&self, pair: Pair) -> bool {
        self.system[pair.index()]
    }
}

/// Whether the triangles of a path leave the strip of the complementary
/// type.
pub fn path_is_blocked(path: &TypedPath) -> bool {
    let c = path.pair.complement();
    let first = path.triangles[0].component(c);
    path.triangles.iter().any(|t| t.component(c) != first)
}

pub fn classify_blocked(sys: &PatternSystem) -> Result<BlockReport> {
    let paths = exit_paths(sys)?;
    let mut white = [false; 3];
    let mut yellow = [false; 3];
    for p in &paths {
        let slot = match p.color {
            Color::White => &mut white,
            Color::Yellow => &mut yellow,
        };
        slot[p.pair.index()] = path_is_blocked(p);
    }
    let system: [bool; 3] = std::array::from_fn(|i| white[i] || yellow[i]);
    let class = match system.iter().filter(|&&b| b).count() {
        3 => BlockClass::GloballyBlocked,
        2 => BlockClass::TwoBlocked {
            unblocked: Pair::ALL[system.iter().position(|&b| !b).expect("one unblocked")],
        },
        1 => BlockClass::OneBlocked {
            blocked: Pair::ALL[system.iter().position(|&b| b).expect("one blocked")],
        },
        _ => {
            return Err(Error::InvalidSystem(
                "no direction is blocked, which a valid system cannot be".into(),
            ))
        }
    };
    Ok(BlockReport {
        white,
        yellow,
        system,
        class,
    })
}

/// Shape of one row of `Mw + My - I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowShape {
    /// Every entry positive and the row sum exceeds `m`.
    Positive,
    /// Diagonal entry `m`, all others zero.
    Straight,
    /// Neither of the above.
    Other,
}

/// Classifies each row of `Mw + My - I` for a system of scale `m`.
pub fn row_shapes(pm: &PathMatrices, m: u64) -> [RowShape; 3] {
    let c = pm.combined();
    let m = BigInt::from(m);
    std::array::from_fn(|i| {
        let row = c.row(i);
        let sum: BigInt = row.iter().sum();
        if row.iter().all(Signed::is_positive) && sum > m {
            RowShape::Positive
        } else if row
            .iter()
            .enumerate()
            .all(|(j, x)| if i == j { *x == m } else { x.is_zero() })
        {
            RowShape::Straight
        } else {
            RowShape::Other
        }
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct FractalDimension {
    /// `λ = (|W| + |Y| + √((|W| - |Y|)² + 4|W'||Y'|)) / 2`.
    pub lambda: QuadSurd,
    pub lambda_f64: f64,
    /// `log λ / log m`, shared by both fractals.
    pub dimension: f64,
}

pub fn fractal_dimension(sys: &PatternSystem) -> Result<FractalDimension> {
    let [w, wd, y, yd] = sys.sizes().map(|x| BigInt::from(x as u64));
    if wd.is_zero() || yd.is_zero() {
        return Err(Error::EmptyDownSet);
    }
    let diff = &w - &y;
    let disc = &diff * &diff + BigInt::from(4) * &wd * &yd;
    let lambda = QuadSurd::new(&w + &y, BigInt::one(), disc, BigInt::from(2));
    let lambda_f64 = lambda.to_f64();
    Ok(FractalDimension {
        dimension: lambda_f64.ln() / (sys.m() as f64).ln(),
        lambda,
        lambda_f64,
    })
}

/// `log_m ρ`, exactly 1 when `ρ = m`.
fn log_base(rho: &Spectrum, m: u64) -> f64 {
    if rho.exact == Some(QuadSurd::integer(m)) {
        return 1.0;
    }
    rho.value().ln() / (m as f64).ln()
}

/// Strongly connected components of the graph with an edge `u → v` iff
/// `a[u][v] > 0`, plus the reachability relation.
fn components(a: &IntMatrix) -> (Vec<Vec<usize>>, Vec<Vec<bool>>) {
    let n = a.dim();
    let mut reach = vec![vec![false; n]; n];
    for (u, row) in reach.iter_mut().enumerate() {
        row[u] = true;
        for v in 0..n {
            if a[(u, v)].is_positive() {
                row[v] = true;
            }
        }
    }
    for k in 0..n {
        for u in 0..n {
            if reach[u][k] {
                let via = reach[k].clone();
                for (r, x) in reach[u].iter_mut().zip(via) {
                    *r |= x;
                }
            }
        }
    }
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut assigned = vec![false; n];
    for u in 0..n {
        if assigned[u] {
            continue;
        }
        let comp: Vec<usize> = (0..n).filter(|&v| reach[u][v] && reach[v][u]).collect();
        for &v in &comp {
            assigned[v] = true;
        }
        comps.push(comp);
    }
    (comps, reach)
}

/// Per-vertex growth rate: the largest spectral radius among the strongly
/// connected components reachable from each vertex.
pub fn reachable_radii(a: &IntMatrix) -> Result<Vec<Spectrum>> {
    let (comps, reach) = components(a);
    let radii = comps
        .iter()
        .map(|c| perron_root(&a.submatrix(c)))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..a.dim())
        .map(|u| {
            comps
                .iter()
                .zip(&radii)
                .filter(|(c, _)| reach[u][c[0]])
                .map(|(_, r)| r)
                .max_by(|x, y| x.value().total_cmp(&y.value()))
                .expect("a vertex reaches its own component")
                .clone()
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArcDimensions {
    /// White `{1,2}, {1,3}, {2,3}`, then yellow.
    pub values: [f64; 6],
    /// The growth rate behind each value.
    pub radii: Vec<Spectrum>,
    pub class: BlockClass,
    /// `ρ(Mw + My - I)` for globally blocked systems, or of the 2×2
    /// blocked sub-system for two-blocked ones.
    pub theta: Option<Spectrum>,
    /// For two-blocked systems: whether the unblocked rows have the
    /// expected straight shape.
    pub shape_ok: bool,
    /// Whether the component rule agrees with the class-specific values.
    pub consistent: bool,
}

/// Arc dimensions from the component rule, cross-checked against the
/// closed forms for each blockedness class.
pub fn arc_dimensions(sys: &PatternSystem) -> Result<ArcDimensions> {
    let pm = path_matrices(sys)?;
    let class = classify_blocked(sys)?.class;
    let m = sys.m();
    let radii = reachable_radii(&pm.m)?;
    let values: [f64; 6] = std::array::from_fn(|i| log_base(&radii[i], m));
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-9;

    let (expected, theta, shape_ok): ([f64; 6], Option<Spectrum>, bool) = match class {
        BlockClass::GloballyBlocked => {
            let theta = dominant_eigenvalue(&pm.combined())?;
            ([log_base(&theta, m); 6], Some(theta), true)
        }
        BlockClass::OneBlocked { .. } => ([1.0; 6], None, true),
        BlockClass::TwoBlocked { unblocked } => {
            let u = unblocked.index();
            let rest: Vec<usize> = (0..3).filter(|&i| i != u).collect();
            let shape_ok = row_shapes(&pm, m)[u] == RowShape::Straight
                && [&pm.mw, &pm.my]
                    .iter()
                    .all(|b| rest.iter().all(|&j| b[(u, j)].is_zero()));
            let sub =
                &(&pm.mw.submatrix(&rest) + &pm.my.submatrix(&rest)) - &IntMatrix::identity(2);
            let theta = if is_irreducible(&sub) {
                dominant_eigenvalue(&sub)?
            } else {
                perron_root(&sub)?
            };
            let t = log_base(&theta, m);
            let expected = std::array::from_fn(|i| if i % 3 == u { 1.0 } else { t });
            (expected, Some(theta), shape_ok)
        }
    };
    let consistent = values.iter().zip(&expected).all(|(a, b)| close(*a, *b));
    Ok(ArcDimensions {
        values,
        radii,
        class,
        theta,
        shape_ok,
        consistent,
    })
}

/// `θ > m`, certified exactly.
pub fn theta_exceeds_m(theta: &Spectrum, m: u64) -> bool {
    theta.exceeds(&BigRational::from_integer(BigInt::from(m)))
}
