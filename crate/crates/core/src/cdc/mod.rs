//! Cycle double covers, oriented covers and nowhere-zero flows, with the
//! translations between 2-simultaneous colorings and covers.

mod convert;
mod flow;
mod search;

use std::fmt;

use crate::graph::Graph;

pub use convert::{cdc_to_se, cdc_to_se_auto, ocdc_to_se_bipartite, se_to_cdc, se_to_ocdc_bipartite};
pub use flow::{find_nzf, verify_nzf, FlowViolation, IntegerFlow};
pub use search::{
    circuits, even_circuit_decomposition, even_circuits, find_ocdc, enumerate_even_cdcs, short_circuit_cover_check,
    CdcEnumeration,
};

/// A cyclic vertex sequence `v_1 .. v_k`, `k >= 3`, with distinct
/// vertices. For oriented covers the order is the direction of travel.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Circuit {
    pub vertices: Vec<usize>,
}

impl Circuit {
    pub fn new(vertices: Vec<usize>) -> Circuit {
        Circuit { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.vertices.len().is_multiple_of(2)
    }

    /// Consecutive pairs `(v_i, v_{i+1})`, wrapping around.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    /// Edge indices along the circuit, or why it is not a circuit of `g`.
    pub fn edges_in(&self, g: &Graph) -> Result<Vec<usize>, String> {
        if self.vertices.len() < 3 {
            return Err(format!("{} vertices, need at least 3", self.vertices.len()));
        }
        let mut seen = vec![false; g.vertex_count()];
        for &v in &self.vertices {
            if v >= g.vertex_count() {
                return Err(format!("vertex {} out of range", v + 1));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(format!("vertex {} repeats", v + 1));
            }
        }
        self.steps()
            .map(|(a, b)| g.edge_index(a, b).ok_or_else(|| format!("{}{} is not an edge", a + 1, b + 1)))
            .collect()
    }

    /// Rotation and reflection with the smallest vertex first, then the
    /// smaller neighbour second.
    pub fn normalized(&self) -> Circuit {
        let k = self.vertices.len();
        if k == 0 {
            return self.clone();
        }
        let start = (0..k).min_by_key(|&i| self.vertices[i]).unwrap();
        let fwd: Vec<usize> = (0..k).map(|i| self.vertices[(start + i) % k]).collect();
        let bwd: Vec<usize> = (0..k).map(|i| self.vertices[(start + k - i) % k]).collect();
        Circuit { vertices: fwd.min(bwd) }
    }
}

/// Circuits covering every edge exactly twice, optionally grouped into
/// classes and carrying a 2-edge-coloring (`1` or `2` per step) each.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycleDoubleCover {
    pub circuits: Vec<Circuit>,
    /// Class label per circuit.
    pub classes: Option<Vec<usize>>,
    /// `circuit_colorings[c][i]` colors step `i` of circuit `c`.
    pub circuit_colorings: Option<Vec<Vec<u8>>>,
}

impl CycleDoubleCover {
    pub fn from_circuits(circuits: Vec<Circuit>) -> CycleDoubleCover {
        CycleDoubleCover { circuits, classes: None, circuit_colorings: None }
    }

    /// Circuit lengths in descending order.
    pub fn length_profile(&self) -> Vec<usize> {
        let mut l: Vec<usize> = self.circuits.iter().map(Circuit::len).collect();
        l.sort_unstable_by(|a, b| b.cmp(a));
        l
    }

    pub fn class_count(&self) -> Option<usize> {
        self.classes.as_ref().map(|c| {
            let mut c = c.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        })
    }
}

/// Directed circuits traversing every edge once in each direction.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrientedCdc {
    pub circuits: Vec<Circuit>,
}

/// First defect found by [`verify_cdc`] or [`verify_ocdc`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverViolation {
    NotACircuit { index: usize, reason: String },
    CoverCount { edge: (usize, usize), count: usize },
    DirectionCount { edge: (usize, usize), forward: usize, backward: usize },
    ClassLength { classes: usize, circuits: usize },
    ClassDegree { class: usize, vertex: usize, degree: usize },
    ColoringLength { index: usize },
    ColoringNotProper { index: usize },
}

impl fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverViolation::NotACircuit { index, reason } => write!(f, "member {} is not a circuit: {reason}", index + 1),
            CoverViolation::CoverCount { edge: (u, v), count } => {
                write!(f, "edge {}{} covered {count} times", u + 1, v + 1)
            }
            CoverViolation::DirectionCount { edge: (u, v), forward, backward } => write!(
                f,
                "edge {}{} traversed {forward} times forward and {backward} times backward",
                u + 1,
                v + 1
            ),
            CoverViolation::ClassLength { classes, circuits } => {
                write!(f, "{classes} class labels for {circuits} circuits")
            }
            CoverViolation::ClassDegree { class, vertex, degree } => {
                write!(f, "class {class} has degree {degree} at vertex {}", vertex + 1)
            }
            CoverViolation::ColoringLength { index } => write!(f, "coloring of member {} has the wrong length", index + 1),
            CoverViolation::ColoringNotProper { index } => {
                write!(f, "coloring of member {} is not a proper 2-coloring", index + 1)
            }
        }
    }
}

/// Checks the double-cover property and, when present, that every class is
/// a vertex-disjoint union (degree 0 or 2 everywhere, counting
/// multiplicity) and every circuit coloring alternates `1, 2`.
pub fn verify_cdc(g: &Graph, cover: &CycleDoubleCover) -> Result<(), CoverViolation> {
    let mut count = vec![0usize; g.edge_count()];
    let mut edge_lists = Vec::with_capacity(cover.circuits.len());
    for (index, c) in cover.circuits.iter().enumerate() {
        let edges = c.edges_in(g).map_err(|reason| CoverViolation::NotACircuit { index, reason })?;
        for &e in &edges {
            count[e] += 1;
        }
        edge_lists.push(edges);
    }
    if let Some(e) = (0..g.edge_count()).find(|&e| count[e] != 2) {
        return Err(CoverViolation::CoverCount { edge: g.edge(e), count: count[e] });
    }
    if let Some(classes) = &cover.classes {
        if classes.len() != cover.circuits.len() {
            return Err(CoverViolation::ClassLength { classes: classes.len(), circuits: cover.circuits.len() });
        }
        let mut degree = std::collections::BTreeMap::<(usize, usize), usize>::new();
        for (c, &class) in cover.circuits.iter().zip(classes) {
            for &v in &c.vertices {
                *degree.entry((class, v)).or_default() += 2;
            }
        }
        if let Some((&(class, vertex), &degree)) = degree.iter().find(|(_, &d)| d != 2) {
            return Err(CoverViolation::ClassDegree { class, vertex, degree });
        }
    }
    if let Some(colorings) = &cover.circuit_colorings {
        for (index, c) in cover.circuits.iter().enumerate() {
            let col = colorings.get(index).ok_or(CoverViolation::ColoringLength { index })?;
            if col.len() != c.len() {
                return Err(CoverViolation::ColoringLength { index });
            }
            let k = col.len();
            let proper = (0..k).all(|i| matches!(col[i], 1 | 2) && col[i] != col[(i + 1) % k]);
            if !proper {
                return Err(CoverViolation::ColoringNotProper { index });
            }
        }
    }
    Ok(())
}

/// Checks that every edge is traversed exactly once in each direction.
pub fn verify_ocdc(g: &Graph, cover: &OrientedCdc) -> Result<(), CoverViolation> {
    let mut forward = vec![0usize; g.edge_count()];
    let mut backward = vec![0usize; g.edge_count()];
    for (index, c) in cover.circuits.iter().enumerate() {
        let edges = c.edges_in(g).map_err(|reason| CoverViolation::NotACircuit { index, reason })?;
        for ((a, b), e) in c.steps().zip(edges) {
            if a < b {
                forward[e] += 1;
            } else {
                backward[e] += 1;
            }
        }
    }
    match (0..g.edge_count()).find(|&e| forward[e] != 1 || backward[e] != 1) {
        Some(e) => Err(CoverViolation::DirectionCount { edge: g.edge(e), forward: forward[e], backward: backward[e] }),
        None => Ok(()),
    }
}
