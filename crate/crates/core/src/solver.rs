//! Lights Out on arbitrary graphs.
//!
//! Lamp states are bit vectors with 1 = on. Clicking vertex `j` XORs column
//! `j` of the adjacency matrix into the state, so a click set `x` moves a
//! puzzle from `s` to `s ⊕ A·x`. Reaching `t` from `s` therefore means
//! solving `A·x = s ⊕ t`.

use crate::gf2::{BitVec, SolutionSet};
use crate::graph::Graph;
use crate::{Error, Result};

/// Largest nullity for which [`minimal_clicks`] enumerates the whole
/// solution coset by default (about a million candidates).
pub const DEFAULT_NULLITY_BUDGET: usize = 20;

#[derive(Clone, Debug, PartialEq)]
pub struct Puzzle {
    graph: Graph,
    state: BitVec,
}

impl Puzzle {
    pub fn new(graph: Graph, state: BitVec) -> Result<Self> {
        if state.len() != graph.n_vertices() {
            return Err(Error::dim("puzzle state", graph.n_vertices(), state.len()));
        }
        Ok(Self { graph, state })
    }

    pub fn all_off(graph: Graph) -> Self {
        let state = BitVec::zeros(graph.n_vertices());
        Self { graph, state }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn state(&self) -> &BitVec {
        &self.state
    }

    pub fn n_vertices(&self) -> usize {
        self.graph.n_vertices()
    }

    /// Toggles the closed (or, without a self-loop, open) neighborhood of `v`.
    pub fn click(&mut self, v: usize) -> Result<()> {
        if v >= self.n_vertices() {
            return Err(Error::invalid(format!(
                "vertex {v} out of range with {} vertices",
                self.n_vertices()
            )));
        }
        for u in self.graph.neighbors(v) {
            self.state.flip(u);
        }
        if self.graph.has_self_loop(v) {
            self.state.flip(v);
        }
        Ok(())
    }
}

/// A set of vertices each clicked once. Clicking twice cancels out, so
/// multiplicities are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClickSet(pub BitVec);

impl ClickSet {
    pub fn none(n: usize) -> Self {
        Self(BitVec::zeros(n))
    }

    pub fn bits(&self) -> &BitVec {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.weight()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.0.iter_ones().collect()
    }
}

impl std::fmt::Display for ClickSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

pub fn apply_clicks(p: &Puzzle, clicks: &ClickSet) -> Result<Puzzle> {
    let toggled = p.graph.adjacency_matrix().mat_vec(&clicks.0)?;
    Ok(Puzzle {
        graph: p.graph.clone(),
        state: &p.state ^ &toggled,
    })
}

fn check_target(p: &Puzzle, target: &BitVec) -> Result<()> {
    if target.len() != p.n_vertices() {
        return Err(Error::dim("target state", p.n_vertices(), target.len()));
    }
    Ok(())
}

/// Solution coset for moving `p` to `target`.
fn solutions(p: &Puzzle, target: &BitVec) -> Result<Option<SolutionSet>> {
    check_target(p, target)?;
    p.graph
        .adjacency_matrix()
        .solution_set(&(&p.state ^ target))
}

/// Canonical click set (free variables zero) reaching `target`, or `None`
/// when `state ⊕ target` lies outside the column space.
pub fn solve_to_target(p: &Puzzle, target: &BitVec) -> Result<Option<ClickSet>> {
    Ok(solutions(p, target)?.map(|s| ClickSet(s.particular)))
}

pub fn solve_lights_out(p: &Puzzle) -> Result<Option<ClickSet>> {
    solve_to_target(p, &BitVec::zeros(p.n_vertices()))
}

/// Clicks that light exactly the self-looped vertices starting from all off.
///
/// The adjacency matrix is symmetric and its diagonal is the self-loop
/// vector, which always lies in the column space of a symmetric GF(2)
/// matrix. A `None` from elimination here is therefore a bug, reported as
/// [`Error::Internal`].
pub fn solve_corollary_target(g: &Graph) -> Result<ClickSet> {
    let target = g.self_loop_vector();
    g.adjacency_matrix()
        .solve(&target)?
        .map(ClickSet)
        .ok_or_else(|| {
            Error::Internal(format!(
                "self-loop vector {target} not reached on a {}-vertex graph",
                g.n_vertices()
            ))
        })
}

/// Named goal states accepted by the command line and the HTTP service.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    AllOff,
    AllOn,
    /// Exactly the self-looped vertices on.
    Corollary,
    Explicit(BitVec),
}

impl std::str::FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all-off" => Ok(Target::AllOff),
            "all-on" => Ok(Target::AllOn),
            "corollary" => Ok(Target::Corollary),
            bits => bits.parse().map(Target::Explicit).map_err(|_| {
                Error::Parse(format!(
                    "target must be all-off, all-on, corollary or a 0/1 string, got {bits:?}"
                ))
            }),
        }
    }
}

impl Target {
    pub fn resolve(&self, g: &Graph) -> Result<BitVec> {
        let n = g.n_vertices();
        match self {
            Target::AllOff => Ok(BitVec::zeros(n)),
            Target::AllOn => Ok(BitVec::ones(n)),
            Target::Corollary => Ok(g.self_loop_vector()),
            Target::Explicit(bits) if bits.len() == n => Ok(bits.clone()),
            Target::Explicit(bits) => Err(Error::dim("target state", n, bits.len())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalClicks {
    pub clicks: ClickSet,
    /// True when the whole coset was searched, so no lighter solution exists.
    pub minimal: bool,
    pub nullity: usize,
}

/// Minimum-weight click set reaching `target`.
///
/// When the nullity is at most `nullity_budget` every one of the `2^nullity`
/// solutions is examined and the lightest is returned (ties go to the
/// lexicographically smallest bit string). Otherwise the canonical solution
/// is returned with `minimal = false`.
pub fn minimal_clicks(
    p: &Puzzle,
    target: &BitVec,
    nullity_budget: usize,
) -> Result<Option<MinimalClicks>> {
    let Some(set) = solutions(p, target)? else {
        return Ok(None);
    };
    let nullity = set.nullity();
    if nullity > nullity_budget || nullity >= 64 {
        return Ok(Some(MinimalClicks {
            clicks: ClickSet(set.particular),
            minimal: false,
            nullity,
        }));
    }
    let best = set
        .members()
        .min_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| a.lex_cmp(b)))
        .expect("coset is never empty");
    Ok(Some(MinimalClicks {
        clicks: ClickSet(best),
        minimal: true,
        nullity,
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub n_vertices: usize,
    pub rank: usize,
    pub nullity: usize,
}

impl Analysis {
    /// Fraction of states reachable from all-off, as `(rank, N)` meaning
    /// `2^rank / 2^N`.
    pub fn solvable_fraction(&self) -> (usize, usize) {
        (self.rank, self.n_vertices)
    }
}

pub fn analyze(g: &Graph) -> Analysis {
    let rank = g.adjacency_matrix().rank();
    Analysis {
        n_vertices: g.n_vertices(),
        rank,
        nullity: g.n_vertices() - rank,
    }
}

/// Number of click sets reaching `target`: zero, or `2^nullity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolutionCount {
    pub solvable: bool,
    /// `log2` of the count; zero when unsolvable.
    pub exponent: usize,
}

impl SolutionCount {
    pub fn as_u128(&self) -> Option<u128> {
        if !self.solvable {
            return Some(0);
        }
        1u128.checked_shl(self.exponent as u32)
    }
}

pub fn count_solutions(p: &Puzzle, target: &BitVec) -> Result<SolutionCount> {
    Ok(match solutions(p, target)? {
        Some(s) => SolutionCount {
            solvable: true,
            exponent: s.nullity(),
        },
        None => SolutionCount {
            solvable: false,
            exponent: 0,
        },
    })
}
