//! Undirected simple graphs with an explicit self-loop set, and their
//! symmetric adjacency matrices over GF(2).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::gf2::{BitVec, Gf2Matrix};
use crate::{Error, Result};

/// Display metadata for one vertex. Never affects the mathematics.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Label {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Layout coordinates (2-D for every built-in family).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<f64>>,
}

impl Label {
    pub fn at(name: impl Into<String>, coords: Vec<f64>) -> Self {
        Self {
            name: Some(name.into()),
            coords: Some(coords),
        }
    }
}

/// A puzzle topology: `n_vertices` vertices, undirected edges between
/// distinct vertices, and the set of vertices adjacent to themselves.
///
/// Edges are stored as `(smaller, larger)` pairs in insertion order. Graphs
/// built with [`Graph::new`] are always valid; [`Graph::from_raw_parts`]
/// skips the checks so that [`Graph::validate`] can report problems in
/// foreign input.
#[derive(Clone, Debug, PartialEq)]
pub struct Graph {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
    self_loops: BTreeSet<usize>,
    labels: Option<Vec<Label>>,
}

impl Graph {
    /// Builds a graph, normalizing each edge to `(min, max)` and rejecting
    /// anything [`Graph::validate`] would complain about.
    pub fn new(
        n_vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        self_loops: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let g = Self::from_raw_parts(
            n_vertices,
            edges
                .into_iter()
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect(),
            self_loops.into_iter().collect(),
            None,
        );
        g.checked()
    }

    pub fn from_raw_parts(
        n_vertices: usize,
        edges: Vec<(usize, usize)>,
        self_loops: BTreeSet<usize>,
        labels: Option<Vec<Label>>,
    ) -> Self {
        Self {
            n_vertices,
            edges,
            self_loops,
            labels,
        }
    }

    pub fn empty(n_vertices: usize) -> Self {
        Self::from_raw_parts(n_vertices, Vec::new(), BTreeSet::new(), None)
    }

    /// Recovers the graph whose adjacency matrix is `a`.
    pub fn from_adjacency(a: &Gf2Matrix) -> Result<Self> {
        if !a.is_symmetric() {
            return Err(Error::Precondition(
                "adjacency matrix must be square and symmetric".into(),
            ));
        }
        let n = a.n_rows();
        let mut edges = Vec::new();
        let mut loops = BTreeSet::new();
        for i in 0..n {
            for j in a.row(i).iter_ones() {
                match j.cmp(&i) {
                    std::cmp::Ordering::Equal => {
                        loops.insert(i);
                    }
                    std::cmp::Ordering::Greater => edges.push((i, j)),
                    std::cmp::Ordering::Less => {}
                }
            }
        }
        Ok(Self::from_raw_parts(n, edges, loops, None))
    }

    pub fn with_labels(mut self, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != self.n_vertices {
            return Err(Error::dim("vertex labels", self.n_vertices, labels.len()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Replaces the self-loop set, leaving edges alone.
    pub fn with_self_loops(mut self, loops: impl IntoIterator<Item = usize>) -> Result<Self> {
        self.self_loops = loops.into_iter().collect();
        self.checked()
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn self_loops(&self) -> &BTreeSet<usize> {
        &self.self_loops
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    pub fn has_self_loop(&self, v: usize) -> bool {
        self.self_loops.contains(&v)
    }

    /// Neighbors of `v` excluding `v` itself, ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Human-readable list of broken invariants; empty for a valid graph.
    pub fn validate(&self) -> Vec<String> {
        let n = self.n_vertices;
        let mut problems = Vec::new();
        let mut seen = BTreeSet::new();
        for &(a, b) in &self.edges {
            if a >= n || b >= n {
                problems.push(format!(
                    "edge endpoint out of range: [{a}, {b}] with {n} vertices"
                ));
            }
            if a == b {
                problems.push(format!(
                    "edge [{a}, {a}] joins a vertex to itself; use self_loops"
                ));
            }
            if a > b {
                problems.push(format!("edge [{a}, {b}] not stored smaller index first"));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                problems.push(format!("duplicate edge [{a}, {b}]"));
            }
        }
        for &v in &self.self_loops {
            if v >= n {
                problems.push(format!(
                    "self-loop vertex {v} out of range with {n} vertices"
                ));
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != n {
                problems.push(format!(
                    "label count {} does not match {n} vertices",
                    labels.len()
                ));
            }
        }
        problems
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    fn checked(self) -> Result<Self> {
        let problems = self.validate();
        if problems.is_empty() {
            Ok(self)
        } else {
            Err(Error::Validation(problems))
        }
    }

    /// Symmetric N×N matrix with `a[i][j] = 1` iff `i` and `j` are adjacent,
    /// including `a[k][k] = 1` for self-looped `k`. Clicking vertex `j`
    /// toggles exactly the lamps in column `j`.
    pub fn adjacency_matrix(&self) -> Gf2Matrix {
        let n = self.n_vertices;
        let mut a = Gf2Matrix::zeros(n, n);
        for &(i, j) in &self.edges {
            a.set(i, j, true);
            a.set(j, i, true);
        }
        for &k in &self.self_loops {
            a.set(k, k, true);
        }
        a
    }

    /// Indicator vector of the self-looped vertices, equal to the diagonal of
    /// the adjacency matrix.
    pub fn self_loop_vector(&self) -> BitVec {
        let mut d = BitVec::zeros(self.n_vertices);
        for &k in &self.self_loops {
            d.set(k, true);
        }
        d
    }
}
