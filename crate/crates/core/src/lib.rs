//! Exact domination and accurate domination in graphs, with corona
//! constructions, the tree characterization of graphs whose accurate
//! domination number equals their domination number, closed-form
//! predictions, and a harness that checks those predictions against the
//! exact solver.

pub mod closed_forms;
pub mod corona;
pub mod error;
pub mod graph;
pub mod solver;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
