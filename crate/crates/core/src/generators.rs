//! Puzzle families: n-dimensional grids (optionally toroidal, optionally with
//! diagonal neighbors), triangular and hexagonal lattices, masked shapes, and
//! green/red lamp colorings.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Label};
use crate::{Error, Result};

/// Default self-loop policy for a generated family.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SelfAffect {
    /// Every vertex toggles its own lamp (classic Lights Out).
    #[default]
    All,
    /// No vertex toggles its own lamp.
    None,
}

impl std::str::FromStr for SelfAffect {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(SelfAffect::All),
            "none" => Ok(SelfAffect::None),
            other => Err(Error::Parse(format!(
                "self-affect policy must be \"all\" or \"none\", got {other:?}"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    pub dims: Vec<usize>,
    /// Per-axis torus wrap. Empty means no wrap on any axis.
    #[serde(default)]
    pub wrap: Vec<bool>,
    /// Moore neighborhood (Chebyshev distance 1) instead of axis neighbors.
    #[serde(default)]
    pub diagonal: bool,
    #[serde(default)]
    pub self_affect: SelfAffect,
}

impl GridSpec {
    pub fn new(dims: Vec<usize>) -> Self {
        Self {
            dims,
            wrap: Vec::new(),
            diagonal: false,
            self_affect: SelfAffect::All,
        }
    }

    pub fn wrap(mut self, wrap: Vec<bool>) -> Self {
        self.wrap = wrap;
        self
    }

    pub fn wrap_all(mut self) -> Self {
        self.wrap = vec![true; self.dims.len()];
        self
    }

    pub fn diagonal(mut self, diagonal: bool) -> Self {
        self.diagonal = diagonal;
        self
    }

    pub fn self_affect(mut self, policy: SelfAffect) -> Self {
        self.self_affect = policy;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let mut problems = Vec::new();
        if self.dims.is_empty() {
            problems.push("grid needs at least one dimension".to_string());
        }
        if self.dims.contains(&0) {
            problems.push(format!(
                "every extent must be at least 1, got {:?}",
                self.dims
            ));
        }
        if !self.wrap.is_empty() && self.wrap.len() != self.dims.len() {
            problems.push(format!(
                "wrap has {} entries for {} dimensions",
                self.wrap.len(),
                self.dims.len()
            ));
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(problems))
        }
    }

    fn wraps(&self, axis: usize) -> bool {
        self.wrap.get(axis).copied().unwrap_or(false)
    }
}

/// Which vertices self-affect: `green` do, every other vertex is red.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LampColoring {
    pub green: BTreeSet<usize>,
}

impl LampColoring {
    pub fn new(green: impl IntoIterator<Item = usize>) -> Self {
        Self {
            green: green.into_iter().collect(),
        }
    }
}

fn self_loops_for(policy: SelfAffect, n: usize) -> BTreeSet<usize> {
    match policy {
        SelfAffect::All => (0..n).collect(),
        SelfAffect::None => BTreeSet::new(),
    }
}

/// Row-major cell index (last axis varies fastest).
fn cell_index(coords: &[usize], dims: &[usize]) -> usize {
    coords.iter().zip(dims).fold(0, |acc, (&c, &d)| acc * d + c)
}

fn cell_coords(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut coords = vec![0; dims.len()];
    for (c, &d) in coords.iter_mut().zip(dims).rev() {
        *c = index % d;
        index /= d;
    }
    coords
}

/// Neighbor offsets: ±1 along one axis, or every non-zero vector in
/// `{-1, 0, 1}^n` when `diagonal` is set.
fn offsets(n_dims: usize, diagonal: bool) -> Vec<Vec<i64>> {
    if diagonal {
        let total = 3usize.pow(n_dims as u32);
        (0..total)
            .map(|mut k| {
                (0..n_dims)
                    .map(|_| {
                        let o = (k % 3) as i64 - 1;
                        k /= 3;
                        o
                    })
                    .collect::<Vec<_>>()
            })
            .filter(|o| o.iter().any(|&x| x != 0))
            .collect()
    } else {
        (0..n_dims)
            .flat_map(|axis| {
                [-1i64, 1].into_iter().map(move |s| {
                    let mut o = vec![0; n_dims];
                    o[axis] = s;
                    o
                })
            })
            .collect()
    }
}

pub fn grid(spec: &GridSpec) -> Result<Graph> {
    spec.validate()?;
    let dims = &spec.dims;
    let n: usize = dims.iter().product();
    let mut edges = BTreeSet::new();
    let offs = offsets(dims.len(), spec.diagonal);

    for v in 0..n {
        let here = cell_coords(v, dims);
        'offset: for off in &offs {
            let mut there = Vec::with_capacity(dims.len());
            for (axis, (&c, &o)) in here.iter().zip(off).enumerate() {
                let extent = dims[axis] as i64;
                let mut t = c as i64 + o;
                if t < 0 || t >= extent {
                    if !spec.wraps(axis) {
                        continue 'offset;
                    }
                    t = t.rem_euclid(extent);
                }
                there.push(t as usize);
            }
            let u = cell_index(&there, dims);
            // Wrap on an extent-1 axis lands back on the same cell.
            if u != v {
                edges.insert((v.min(u), v.max(u)));
            }
        }
    }

    let labels = (0..n)
        .map(|v| {
            let c = cell_coords(v, dims);
            let name = c.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            Label::at(name, c.iter().map(|&x| x as f64).collect())
        })
        .collect();
    Graph::new(n, edges, self_loops_for(spec.self_affect, n))?.with_labels(labels)
}

/// Triangles-as-cells: row `r` holds `2r + 1` triangles alternating
/// up/down, starting and ending with an upward one. Two cells are adjacent
/// when they share a side.
pub fn triangular_lattice(rows: usize, self_affect: SelfAffect) -> Result<Graph> {
    if rows == 0 {
        return Err(Error::invalid("triangular lattice needs at least one row"));
    }
    let row_start = |r: usize| r * r;
    let n = row_start(rows);
    let mut edges = Vec::new();
    let mut labels = Vec::with_capacity(n);
    for r in 0..rows {
        for k in 0..2 * r + 1 {
            let v = row_start(r) + k;
            if k > 0 {
                edges.push((v - 1, v));
            }
            // A downward triangle's top side is the bottom side of the
            // upward triangle directly above it.
            if k % 2 == 1 {
                edges.push((row_start(r - 1) + k - 1, v));
            }
            let dir = if k % 2 == 0 { "up" } else { "down" };
            labels.push(Label::at(
                format!("{r}:{k}{dir}"),
                vec![k as f64 * 0.5 - r as f64 * 0.5, r as f64],
            ));
        }
    }
    Graph::new(n, edges, self_loops_for(self_affect, n))?.with_labels(labels)
}

const HEX_DIRECTIONS: [(i64, i64); 6] = [(1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1)];

/// Hexagonal cells within hex distance `radius` of the origin, in axial
/// coordinates. Vertices are numbered in a spiral: the center, then each
/// ring outward.
pub fn hexagonal_lattice(radius: usize, self_affect: SelfAffect) -> Result<Graph> {
    let r = radius as i64;
    let mut cells = vec![(0i64, 0i64)];
    for ring in 1..=r {
        let (dq, dr) = HEX_DIRECTIONS[4];
        let mut cur = (dq * ring, dr * ring);
        for &(sq, sr) in &HEX_DIRECTIONS {
            for _ in 0..ring {
                cells.push(cur);
                cur = (cur.0 + sq, cur.1 + sr);
            }
        }
    }
    let index: HashMap<(i64, i64), usize> =
        cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut edges = Vec::new();
    for (v, &(q, rr)) in cells.iter().enumerate() {
        for &(dq, dr) in &HEX_DIRECTIONS {
            if let Some(&u) = index.get(&(q + dq, rr + dr)) {
                if v < u {
                    edges.push((v, u));
                }
            }
        }
    }
    let n = cells.len();
    let labels = cells
        .iter()
        .map(|&(q, rr)| {
            let x = 3f64.sqrt() * (q as f64 + rr as f64 / 2.0);
            let y = 1.5 * rr as f64;
            Label::at(format!("{q},{rr}"), vec![x, y])
        })
        .collect();
    Graph::new(n, edges, self_loops_for(self_affect, n))?.with_labels(labels)
}

/// Induced subgraph on `keep`, renumbered `0..keep.len()` in the original
/// vertex order.
pub fn mask_subgraph(g: &Graph, keep: &BTreeSet<usize>) -> Result<Graph> {
    if let Some(&bad) = keep.iter().find(|&&v| v >= g.n_vertices()) {
        return Err(Error::invalid(format!(
            "mask vertex {bad} out of range with {} vertices",
            g.n_vertices()
        )));
    }
    let renumber: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges = g
        .edges()
        .iter()
        .filter_map(|(a, b)| Some((*renumber.get(a)?, *renumber.get(b)?)));
    let loops = g
        .self_loops()
        .iter()
        .filter_map(|v| renumber.get(v).copied());
    let sub = Graph::new(keep.len(), edges, loops)?;
    match g.labels() {
        Some(labels) => sub.with_labels(keep.iter().map(|&v| labels[v].clone()).collect()),
        None => Ok(sub),
    }
}

/// Same graph with the self-loop set replaced by the green lamps.
pub fn apply_coloring(g: &Graph, coloring: &LampColoring) -> Result<Graph> {
    if let Some(&bad) = coloring.green.iter().find(|&&v| v >= g.n_vertices()) {
        return Err(Error::invalid(format!(
            "green lamp {bad} out of range with {} vertices",
            g.n_vertices()
        )));
    }
    g.clone().with_self_loops(coloring.green.iter().copied())
}
