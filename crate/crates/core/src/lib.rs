//! Triangular labyrinth pattern systems.
//!
//! A pattern system is a pair of coloured patterns (white and yellow), each
//! a set of upright and upside-down triangles of the `m × m` subdivision of
//! an equilateral triangle. Repeated substitution of the patterns into
//! themselves generates two self-similar dendrites. This crate validates
//! such systems, enumerates the level-`n` triangle sets, computes the path
//! matrices that govern exit-to-exit arcs, classifies blockedness, and
//! derives the Hausdorff dimensions of the fractals and their arcs.
//!
//! All geometry is exact: indices are integers and points are rationals.
//! Floating point appears only in reported dimensions, chord lengths and
//! SVG coordinates.

pub mod arcs;
pub mod classify;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod index;
pub mod matrix;
pub mod pathmatrix;
pub mod pattern;
pub mod render;
pub mod spectrum;
pub mod substitute;
pub mod validate;

pub use arcs::{
    chord_lower_bound, exit_point, find_w_star, fractal_exits, refine_arc, ArcApprox, FractalExits,
};
pub use classify::{
    arc_dimensions, classify_blocked, fractal_dimension, ArcDimensions, BlockClass, BlockReport,
    FractalDimension,
};
pub use error::{Error, Result};
pub use geometry::{project_point, vertices, BaryPoint, CartPoint};
pub use graph::{build_graph, is_tree, tree_path, TreePath, TriGraph};
pub use index::{Orient, Pair, Side, TriIndex};
pub use matrix::IntMatrix;
pub use pathmatrix::{exit_path_typed, path_lengths, path_matrices, PathMatrices, TypedPath};
pub use pattern::{parse_system, Color, Pattern, PatternSystem};
pub use render::{render_svg, RenderStyle};
pub use spectrum::{dominant_eigenvalue, QuadSurd, Spectrum};
pub use substitute::{counts, substitute, LevelSets};
pub use validate::{find_exits, validate_level, validate_system, ExitTriple, ValidationReport};
