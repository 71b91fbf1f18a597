//! On-disk and over-the-wire puzzle format.
//!
//! A puzzle document is JSON with keys in this order:
//!
//! ```json
//! {
//!   "version": 1,
//!   "graph": {
//!     "n_vertices": 3,
//!     "edges": [[0, 1], [1, 2]],
//!     "self_loops": [0, 1, 2],
//!     "labels": [{"name": "0", "coords": [0.0]}, ...]
//!   },
//!   "state": "010"
//! }
//! ```
//!
//! `labels` is optional. States and click sets are `0`/`1` strings indexed
//! by vertex number.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::generators::{self, GridSpec, LampColoring, SelfAffect};
use crate::gf2::BitVec;
use crate::graph::{Graph, Label};
use crate::solver::Puzzle;
use crate::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub n_vertices: usize,
    pub edges: Vec<[usize; 2]>,
    pub self_loops: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Label>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PuzzleDocument {
    pub version: u32,
    pub graph: GraphDoc,
    pub state: String,
}

impl From<&Graph> for GraphDoc {
    fn from(g: &Graph) -> Self {
        Self {
            n_vertices: g.n_vertices(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
            self_loops: g.self_loops().iter().copied().collect(),
            labels: g.labels().map(<[Label]>::to_vec),
        }
    }
}

impl GraphDoc {
    /// Edge pairs may come in either order; everything else must satisfy
    /// [`Graph::validate`].
    pub fn to_graph(&self) -> Result<Graph> {
        let loops: BTreeSet<usize> = self.self_loops.iter().copied().collect();
        let mut problems = Vec::new();
        if loops.len() != self.self_loops.len() {
            problems.push("duplicate self-loop".to_string());
        }
        let g = Graph::from_raw_parts(
            self.n_vertices,
            self.edges
                .iter()
                .map(|&[a, b]| (a.min(b), a.max(b)))
                .collect(),
            loops,
            self.labels.clone(),
        );
        problems.extend(g.validate());
        if problems.is_empty() {
            Ok(g)
        } else {
            Err(Error::Validation(problems))
        }
    }
}

impl PuzzleDocument {
    pub fn from_puzzle(p: &Puzzle) -> Self {
        Self {
            version: FORMAT_VERSION,
            graph: GraphDoc::from(p.graph()),
            state: p.state().to_string(),
        }
    }

    pub fn to_puzzle(&self) -> Result<Puzzle> {
        if self.version != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "unsupported document version {} (expected {FORMAT_VERSION})",
                self.version
            )));
        }
        let graph = self.graph.to_graph()?;
        let state: BitVec = self.state.parse()?;
        Puzzle::new(graph, state)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document is always serializable");
        s.push('\n');
        s
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }
}

/// Reads a bare `0`/`1` click-script file. Surrounding whitespace is ignored.
pub fn read_bit_string(path: impl AsRef<Path>) -> Result<BitVec> {
    std::fs::read_to_string(path)?.trim().parse()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Grid,
    /// Grid with every axis wrapped.
    Torus,
    Triangular,
    Hexagonal,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grid" => Ok(Family::Grid),
            "torus" => Ok(Family::Torus),
            "triangular" => Ok(Family::Triangular),
            "hexagonal" => Ok(Family::Hexagonal),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TemplateParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wrap: Option<Vec<bool>>,
    #[serde(default)]
    pub diagonal: bool,
    #[serde(default)]
    pub self_affect: SelfAffect,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<usize>,
    /// Vertices kept by the mask, in the numbering of the unmasked family.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mask: Option<Vec<usize>>,
    /// Green lamps, in the numbering after masking. Overrides `self_affect`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub green: Option<Vec<usize>>,
}

/// A generator family plus its parameters: the shared input of `gen` and of
/// session creation from a template.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Template {
    pub family: Family,
    #[serde(default)]
    pub params: TemplateParams,
}

impl Template {
    /// Builds the family graph, then applies the mask, then the coloring.
    pub fn build(&self) -> Result<Graph> {
        let p = &self.params;
        let base = match self.family {
            Family::Grid | Family::Torus => {
                let dims = p
                    .dims
                    .clone()
                    .ok_or_else(|| Error::invalid("grid families need dims"))?;
                let mut spec = GridSpec::new(dims)
                    .diagonal(p.diagonal)
                    .self_affect(p.self_affect);
                spec = match (self.family, &p.wrap) {
                    (Family::Torus, _) => spec.wrap_all(),
                    (_, Some(w)) => spec.wrap(w.clone()),
                    _ => spec,
                };
                generators::grid(&spec)?
            }
            Family::Triangular => {
                let rows = p
                    .rows
                    .ok_or_else(|| Error::invalid("triangular family needs rows"))?;
                generators::triangular_lattice(rows, p.self_affect)?
            }
            Family::Hexagonal => {
                let radius = p
                    .radius
                    .ok_or_else(|| Error::invalid("hexagonal family needs radius"))?;
                generators::hexagonal_lattice(radius, p.self_affect)?
            }
        };
        let masked = match &p.mask {
            Some(keep) => generators::mask_subgraph(&base, &keep.iter().copied().collect())?,
            None => base,
        };
        match &p.green {
            Some(green) => {
                generators::apply_coloring(&masked, &LampColoring::new(green.iter().copied()))
            }
            None => Ok(masked),
        }
    }
}
