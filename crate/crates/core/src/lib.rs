//! Simultaneous edge colorings of graphs and their equivalent objects:
//! μ-way Latin trades, even-circuit cycle double covers, oriented cycle
//! double covers, nowhere-zero flows, and edge-connected bipartite
//! realizations of degree sequences.
//!
//! Every search in this crate is exhaustive and takes a [`Budget`]. A
//! search that runs out of budget returns
//! [`Error::SearchBudgetExceeded`]; `Ok(None)` always means proven
//! nonexistence within the stated parameters.

pub mod budget;
pub mod cdc;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod format;
pub mod graph;
pub mod latin;
pub mod realize;

pub use budget::{Budget, DEFAULT_BUDGET};
pub use cdc::{Circuit, CycleDoubleCover, IntegerFlow, OrientedCdc};
pub use coloring::{EdgeColoring, SimultaneousColoring, Violation};
pub use error::{Error, Result};
pub use latin::{LatinTrade, PartialLatinSquare};
pub use graph::{families, DegreeSequence, EdgeCut, Graph, OneFactorization};
