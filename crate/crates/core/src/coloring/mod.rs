//! Proper and simultaneous edge colorings: representation, verification,
//! exact search, and the structural filters built on them.

mod filter;
mod search;

use std::collections::BTreeSet;
use std::fmt;

use crate::graph::Graph;

pub use filter::{check_girth_bound, counterexample_filter, FilterCondition, FilterReport};
pub use search::{
    chromatic_index, decide_mu_se, optimal_edge_coloring, proper_edge_coloring, se_chromatic_number,
};

/// A total map from edge index to a color in `1..=num_colors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    pub num_colors: u32,
    pub colors: Vec<u32>,
}

/// μ edge colorings over one color set `1..=num_colors`; `colorings[t][e]`
/// is the color of edge `e` in coordinate `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimultaneousColoring {
    pub num_colors: u32,
    pub colorings: Vec<Vec<u32>>,
}

impl SimultaneousColoring {
    pub fn mu(&self) -> usize {
        self.colorings.len()
    }

    pub fn coordinate(&self, t: usize) -> EdgeColoring {
        EdgeColoring { num_colors: self.num_colors, colors: self.colorings[t].clone() }
    }

    /// The μ colors of edge `e`.
    pub fn tuple(&self, e: usize) -> Vec<u32> {
        self.colorings.iter().map(|c| c[e]).collect()
    }

    /// Keeps the first `mu` coordinates.
    pub fn truncated(&self, mu: usize) -> SimultaneousColoring {
        SimultaneousColoring { num_colors: self.num_colors, colorings: self.colorings[..mu].to_vec() }
    }

    /// Colors that actually occur.
    pub fn used_colors(&self) -> BTreeSet<u32> {
        self.colorings.iter().flatten().copied().collect()
    }

    /// Colors on the edges at `v` in coordinate `t`.
    pub fn palette(&self, g: &Graph, t: usize, v: usize) -> BTreeSet<u32> {
        g.incident(v).iter().map(|&(_, e)| self.colorings[t][e]).collect()
    }
}

/// First broken clause found by a verifier; vertices are 1-based on display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    WrongLength { coordinate: usize, expected: usize, found: usize },
    ColorOutOfRange { coordinate: usize, edge: (usize, usize), color: u32 },
    NoCoordinates,
    MuExceedsMinDegree { mu: usize, min_degree: usize },
    Improper { coordinate: usize, vertex: usize, color: u32 },
    PaletteMismatch { vertex: usize, coordinate: usize },
    EdgeRepeatsColor { edge: (usize, usize), coordinates: (usize, usize), color: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::WrongLength { coordinate, expected, found } => {
                write!(f, "coordinate {} colors {found} edges, graph has {expected}", coordinate + 1)
            }
            Violation::ColorOutOfRange { coordinate, edge: (u, v), color } => {
                write!(f, "coordinate {}: edge {}-{} has color {color} outside the color set", coordinate + 1, u + 1, v + 1)
            }
            Violation::NoCoordinates => write!(f, "no colorings given"),
            Violation::MuExceedsMinDegree { mu, min_degree } => {
                write!(f, "mu = {mu} exceeds the minimum degree {min_degree}")
            }
            Violation::Improper { coordinate, vertex, color } => {
                write!(f, "properness: coordinate {} repeats color {color} at vertex {}", coordinate + 1, vertex + 1)
            }
            Violation::PaletteMismatch { vertex, coordinate } => {
                write!(f, "palette: vertex {} sees different colors in coordinates 1 and {}", vertex + 1, coordinate + 1)
            }
            Violation::EdgeRepeatsColor { edge: (u, v), coordinates: (i, j), color } => write!(
                f,
                "edge distinctness: edge {}-{} has color {color} in coordinates {} and {}",
                u + 1,
                v + 1,
                i + 1,
                j + 1
            ),
        }
    }
}

fn check_shape(g: &Graph, t: usize, colors: &[u32], num_colors: u32) -> Result<(), Violation> {
    if colors.len() != g.edge_count() {
        return Err(Violation::WrongLength { coordinate: t, expected: g.edge_count(), found: colors.len() });
    }
    if let Some(e) = colors.iter().position(|&c| c == 0 || c > num_colors) {
        return Err(Violation::ColorOutOfRange { coordinate: t, edge: g.edge(e), color: colors[e] });
    }
    Ok(())
}

fn check_proper(g: &Graph, t: usize, colors: &[u32]) -> Result<(), Violation> {
    for v in 0..g.vertex_count() {
        let mut seen = BTreeSet::new();
        for &(_, e) in g.incident(v) {
            if !seen.insert(colors[e]) {
                return Err(Violation::Improper { coordinate: t, vertex: v, color: colors[e] });
            }
        }
    }
    Ok(())
}

/// No two incident edges share a color.
pub fn verify_proper(g: &Graph, c: &EdgeColoring) -> Result<(), Violation> {
    check_shape(g, 0, &c.colors, c.num_colors)?;
    check_proper(g, 0, &c.colors)
}

/// Checks, in order: shape, μ ≤ δ (over non-isolated vertices), properness
/// of every coordinate, palette equality, and edge distinctness.
pub fn verify_simultaneous(g: &Graph, sc: &SimultaneousColoring) -> Result<(), Violation> {
    if sc.colorings.is_empty() {
        return Err(Violation::NoCoordinates);
    }
    for (t, c) in sc.colorings.iter().enumerate() {
        check_shape(g, t, c, sc.num_colors)?;
    }
    let delta = g.min_positive_degree();
    if g.edge_count() > 0 && sc.mu() > delta {
        return Err(Violation::MuExceedsMinDegree { mu: sc.mu(), min_degree: delta });
    }
    for (t, c) in sc.colorings.iter().enumerate() {
        check_proper(g, t, c)?;
    }
    for v in 0..g.vertex_count() {
        let base = sc.palette(g, 0, v);
        if let Some(t) = (1..sc.mu()).find(|&t| sc.palette(g, t, v) != base) {
            return Err(Violation::PaletteMismatch { vertex: v, coordinate: t });
        }
    }
    for e in 0..g.edge_count() {
        for i in 0..sc.mu() {
            for j in i + 1..sc.mu() {
                if sc.colorings[i][e] == sc.colorings[j][e] {
                    return Err(Violation::EdgeRepeatsColor {
                        edge: g.edge(e),
                        coordinates: (i, j),
                        color: sc.colorings[i][e],
                    });
                }
            }
        }
    }
    Ok(())
}
