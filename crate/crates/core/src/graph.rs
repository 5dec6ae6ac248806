//! Labelled neighbour graphs on triangle sets.
//!
//! Two triangles of the same set are joined by an edge labelled `j` when
//! they are `j`-neighbours. Vertex ids are positions in the canonical
//! order, so graphs and paths are reproducible.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::index::{Orient, Side, TriIndex};
use crate::pattern::Pattern;
use crate::substitute::LevelSets;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriGraph {
    pub scale: u64,
    pub vertices: Vec<TriIndex>,
    pub adjacency: Vec<Vec<(usize, Side)>>,
    lookup: HashMap<TriIndex, usize>,
}

/// A simple path: vertex ids and the labels of the edges between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePath {
    pub vertices: Vec<usize>,
    pub labels: Vec<Side>,
}

impl TreePath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn reversed(&self) -> TreePath {
        TreePath {
            vertices: self.vertices.iter().rev().copied().collect(),
            labels: self.labels.iter().rev().copied().collect(),
        }
    }
}

impl TriGraph {
    /// Builds the neighbour graph of `tris` at scale `s`. Input order is
    /// kept as the vertex order.
    pub fn from_triangles(tris: impl IntoIterator<Item = TriIndex>, s: u64) -> TriGraph {
        let vertices: Vec<TriIndex> = tris.into_iter().collect();
        let lookup: HashMap<TriIndex, usize> =
            vertices.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for (u, t) in vertices.iter().enumerate() {
            if t.orient != Orient::Up {
                continue;
            }
            for j in Side::ALL {
                if let Some(v) = t.neighbour(j, s).and_then(|n| lookup.get(&n)) {
                    adjacency[u].push((*v, j));
                    adjacency[*v].push((u, j));
                }
            }
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
        }
        TriGraph {
            scale: s,
            vertices,
            adjacency,
            lookup,
        }
    }

    pub fn from_pattern(p: &Pattern) -> TriGraph {
        TriGraph::from_triangles(p.iter().copied(), p.m)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn index_of(&self, t: &TriIndex) -> Option<usize> {
        self.lookup.get(t).copied()
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.vertices.len()];
        let mut count = 0;
        for start in 0..self.vertices.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &(v, _) in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    /// DOT rendering with vertex labels `U|D k1,k2,k3` and edge labels `j`.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for (i, t) in self.vertices.iter().enumerate() {
            let o = if t.is_up() { 'U' } else { 'D' };
            let _ = writeln!(
                out,
                "  v{i} [label=\"{o} {},{},{}\"];",
                t.k[0], t.k[1], t.k[2]
            );
        }
        for (u, adj) in self.adjacency.iter().enumerate() {
            for &(v, j) in adj {
                if u < v {
                    let _ = writeln!(out, "  v{u} -- v{v} [label=\"{j}\"];");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

pub fn build_graph(ls: &LevelSets) -> TriGraph {
    TriGraph::from_triangles(ls.iter().copied(), ls.scale())
}

/// Connected with `|E| = |V| - 1`. The empty graph is not a tree.
pub fn is_tree(g: &TriGraph) -> bool {
    g.vertex_count() > 0 && g.edge_count() + 1 == g.vertex_count() && g.component_count() == 1
}

/// The unique simple path from `a` to `b`.
pub fn tree_path(g: &TriGraph, a: usize, b: usize) -> Result<TreePath> {
    for v in [a, b] {
        if v >= g.vertex_count() {
            return Err(Error::VertexMissing(v));
        }
    }
    if !is_tree(g) {
        return Err(Error::NotATree);
    }
    let mut parent: Vec<Option<(usize, Side)>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[a] = true;
    let mut stack = vec![a];
    while let Some(u) = stack.pop() {
        if u == b {
            break;
        }
        for &(v, j) in &g.adjacency[u] {
            if !seen[v] {
                seen[v] = true;
                parent[v] = Some((u, j));
                stack.push(v);
            }
        }
    }
    let mut vertices = vec![b];
    let mut labels = Vec::new();
    let mut cur = b;
    while let Some((p, j)) = parent[cur] {
        vertices.push(p);
        labels.push(j);
        cur = p;
    }
    vertices.reverse();
    labels.reverse();
    Ok(TreePath { vertices, labels })
}
