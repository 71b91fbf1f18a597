//! Lights Out laboratory.
//!
//! Exact linear algebra over the two-element field ([`gf2`]), graphs with
//! optional self-loops ([`graph`]), puzzle families ([`generators`]) and a
//! solver that decides and constructs click sets ([`solver`]).
//!
//! The central fact exercised throughout the crate: a symmetric matrix over
//! GF(2) always has its diagonal vector in its column space. For a puzzle
//! graph this means that, starting from all lamps off, some click set turns
//! on exactly the self-looped vertices. [`theorem`] checks this
//! constructively and [`solver::solve_corollary_target`] produces the clicks.
//!
//! ```
//! use lightsout::generators::{grid, GridSpec, SelfAffect};
//! use lightsout::solver::{apply_clicks, solve_corollary_target, Puzzle};
//!
//! let g = grid(&GridSpec::new(vec![5, 5]).self_affect(SelfAffect::All)).unwrap();
//! let clicks = solve_corollary_target(&g).unwrap();
//! let lit = apply_clicks(&Puzzle::all_off(g), &clicks).unwrap();
//! assert_eq!(lit.state().weight(), 25);
//! ```

pub mod cli;
pub mod document;
mod error;
pub mod generators;
pub mod gf2;
pub mod graph;
pub mod service;
pub mod solver;
pub mod theorem;

pub use error::{Error, Result};
pub use gf2::{BitVec, Gf2Matrix, SolutionSet};
pub use graph::Graph;
pub use solver::{ClickSet, Puzzle};
