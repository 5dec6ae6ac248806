//! Typed exit-to-exit paths and the path matrices.
//!
//! Along the path of type `{i,j}` from the exit of type `i` to the exit of
//! type `j`, every triangle gets the type formed by the sides through which
//! the path enters and leaves it. The white matrix `Mw` counts upright
//! triangles of each type on each white path, `tMw` counts upside-down
//! ones, and likewise for yellow. The global matrix
//! `M = [[Mw, tMw], [tMy, My]]` satisfies `M(n) = M^n`, so its powers give
//! the path lengths at every level.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{tree_path, TriGraph};
use crate::index::{Pair, Side, TriIndex};
use crate::matrix::{BlockPair, IntMatrix};
use crate::pattern::{Color, PatternSystem};
use crate::validate::require_valid;

/// A path of triangles with a type for each of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedPath {
    pub color: Color,
    pub pair: Pair,
    pub scale: u64,
    pub triangles: Vec<TriIndex>,
    /// `labels[k]` joins `triangles[k]` and `triangles[k + 1]`.
    pub labels: Vec<Side>,
    pub types: Vec<Pair>,
}

impl TypedPath {
    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    /// Types a path that runs from the exit of type `i` to the exit of
    /// type `j` where `(i, j) = pair.sides()`.
    pub fn new(
        color: Color,
        pair: Pair,
        scale: u64,
        triangles: Vec<TriIndex>,
        labels: Vec<Side>,
    ) -> Result<TypedPath> {
        if triangles.is_empty() || labels.len() + 1 != triangles.len() {
            return Err(Error::InvalidSystem("malformed path".into()));
        }
        let (i, j) = pair.sides();
        let sides: Vec<Side> = std::iter::once(i)
            .chain(labels.iter().copied())
            .chain(std::iter::once(j))
            .collect();
        let types = sides
            .windows(2)
            .map(|w| Pair::of(w[0], w[1]))
            .collect::<Option<Vec<Pair>>>()
            .ok_or_else(|| {
                Error::InvalidSystem(format!(
                    "{color} path of type {pair} enters and leaves a triangle through the same side"
                ))
            })?;
        Ok(TypedPath {
            color,
            pair,
            scale,
            triangles,
            labels,
            types,
        })
    }

    /// The entry and exit side of triangle `k`.
    pub fn sides_at(&self, k: usize) -> (Side, Side) {
        let (i, j) = self.pair.sides();
        let entry = if k == 0 { i } else { self.labels[k - 1] };
        let exit = if k + 1 == self.triangles.len() {
            j
        } else {
            self.labels[k]
        };
        (entry, exit)
    }

    /// `(upright, upside-down)` counts per triangle type.
    pub fn type_counts(&self) -> ([u64; 3], [u64; 3]) {
        let mut up = [0u64; 3];
        let mut down = [0u64; 3];
        for (t, ty) in self.triangles.iter().zip(&self.types) {
            if t.is_up() {
                up[ty.index()] += 1;
            } else {
                down[ty.index()] += 1;
            }
        }
        (up, down)
    }
}

/// The typed tree path between two exits of a valid system.
pub fn exit_path_typed(sys: &PatternSystem, color: Color, pair: Pair) -> Result<TypedPath> {
    let exits = require_valid(sys)?;
    let graph = TriGraph::from_pattern(sys.pattern(color));
    typed_path_in(&graph, &exits, sys.m(), color, pair)
}

fn typed_path_in(
    graph: &TriGraph,
    exits: &crate::validate::ExitTriple,
    m: u64,
    color: Color,
    pair: Pair,
) -> Result<TypedPath> {
    let (i, j) = pair.sides();
    let locate = |side: Side| {
        let t = exits.exit(color, side, m);
        graph.index_of(&t).ok_or_else(|| {
            Error::InvalidSystem(format!("exit {t} missing from the {color} pattern"))
        })
    };
    let path = tree_path(graph, locate(i)?, locate(j)?)?;
    let triangles = path.vertices.iter().map(|&v| graph.vertices[v]).collect();
    TypedPath::new(color, pair, m, triangles, path.labels)
}

/// All six typed exit paths, white before yellow, pairs in matrix order.
pub fn exit_paths(sys: &PatternSystem) -> Result<Vec<TypedPath>> {
    let exits = require_valid(sys)?;
    let mut out = Vec::with_capacity(6);
    for color in Color::ALL {
        let graph = TriGraph::from_pattern(sys.pattern(color));
        for pair in Pair::ALL {
            out.push(typed_path_in(&graph, &exits, sys.m(), color, pair)?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathMatrices {
    pub mw: IntMatrix,
    pub tmw: IntMatrix,
    pub my: IntMatrix,
    pub tmy: IntMatrix,
    /// The 6×6 global path matrix.
    pub m: IntMatrix,
}

impl PathMatrices {
    /// `Mw + My - I`.
    pub fn combined(&self) -> IntMatrix {
        &(&self.mw + &self.my) - &IntMatrix::identity(3)
    }

    pub fn block_pair(&self) -> BlockPair {
        BlockPair {
            a: self.mw.clone(),
            b: self.my.clone(),
        }
    }
}

pub fn path_matrices(sys: &PatternSystem) -> Result<PathMatrices> {
    let paths = exit_paths(sys)?;
    let mut blocks = [
        IntMatrix::zeros(3),
        IntMatrix::zeros(3),
        IntMatrix::zeros(3),
        IntMatrix::zeros(3),
    ];
    for p in &paths {
        let (up, down) = p.type_counts();
        let row = p.pair.index();
        let c = p.color.index();
        for g in 0..3 {
            blocks[2 * c][(row, g)] = BigInt::from(up[g]);
            blocks[2 * c + 1][(row, g)] = BigInt::from(down[g]);
        }
    }
    let [mw, tmw, my, tmy] = blocks;
    let id = IntMatrix::identity(3);
    if tmw != &mw - &id || tmy != &my - &id {
        return Err(Error::InvalidSystem(
            "upside-down type counts differ from upright counts minus the identity".into(),
        ));
    }
    let m = IntMatrix::from_blocks(&mw, &tmw, &tmy, &my);
    Ok(PathMatrices {
        mw,
        tmw,
        my,
        tmy,
        m,
    })
}

/// `M^n · 1`: the lengths of the six level-`n` exit paths, in the order
/// white `{1,2}, {1,3}, {2,3}`, then yellow.
pub fn path_lengths(sys: &PatternSystem, n: u64) -> Result<[BigInt; 6]> {
    let pm = path_matrices(sys)?;
    Ok(lengths_from(&pm, n))
}

/// `M^n · 1` from precomputed matrices.
pub fn lengths_from(pm: &PathMatrices, n: u64) -> [BigInt; 6] {
    let ones = vec![BigInt::from(1); 6];
    let v = pm.block_pair().pow_mul_vec(n, &ones);
    std::array::from_fn(|i| v[i].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::parse_system;

    fn ex1() -> PatternSystem {
        parse_system(include_str!("../examples/ex1.pat")).unwrap()
    }

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    #[test]
    fn printed_matrix() {
        let pm = path_matrices(&ex1()).unwrap();
        assert_eq!(pm.mw, m(&[vec![3, 1, 0], vec![1, 1, 1], vec![1, 1, 2]]));
        assert_eq!(pm.my, m(&[vec![1, 0, 1], vec![0, 3, 0], vec![0, 2, 2]]));
        assert_eq!(
            pm.m,
            m(&[
                vec![3, 1, 0, 2, 1, 0],
                vec![1, 1, 1, 1, 0, 1],
                vec![1, 1, 2, 1, 1, 1],
                vec![0, 0, 1, 1, 0, 1],
                vec![0, 2, 0, 0, 3, 0],
                vec![0, 2, 1, 0, 2, 2],
            ])
        );
    }

    #[test]
    fn typed_path_lengths() {
        let sys = ex1();
        let w = exit_path_typed(&sys, Color::White, Pair::P12).unwrap();
        assert_eq!(w.len(), 7);
        assert_eq!(w.types[0], Pair::of(Side::One, w.labels[0]).unwrap());
        assert_eq!(
            exit_path_typed(&sys, Color::Yellow, Pair::P12)
                .unwrap()
                .len(),
            3
        );
    }

    #[test]
    fn lengths() {
        let sys = ex1();
        let as_u = |v: [BigInt; 6]| v.map(|x| u64::try_from(x).unwrap());
        assert_eq!(as_u(path_lengths(&sys, 0).unwrap()), [1; 6]);
        assert_eq!(as_u(path_lengths(&sys, 1).unwrap()), [7, 5, 7, 3, 5, 7]);
        assert_eq!(as_u(path_lengths(&sys, 2).unwrap())[0], 37);
    }

    #[test]
    fn typing_rejects_a_repeated_side() {
        let err = TypedPath::new(
            Color::White,
            Pair::P12,
            4,
            vec![TriIndex::up(1, 1, 1), TriIndex::down(0, 1, 1)],
            vec![Side::One],
        );
        assert!(matches!(err, Err(Error::InvalidSystem(_))));
    }
}
