//! Simple undirected graphs and the structural machinery built on them.
//!
//! Vertices are `0..n` in memory. Every external format (the `.graph` text
//! format, JSON documents, CLI arguments) uses 1-based labels; conversion
//! happens only at those boundaries.

mod canon;
mod factor;
pub mod families;
mod ops;
mod structure;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{
    automorphisms, canonical_form, connected_bipartite_graphs_up_to, connected_graphs_up_to, CanonicalForm,
};
pub use factor::{one_factorization, OneFactorization};
pub(crate) use factor::missing_color_classes;
pub use ops::{cartesian_product, join, lexicographic_product, subdivide_edge};
pub use structure::{
    bridges, components, count_min_cuts, cut_size, edge_connectivity, girth, has_cut_vertex,
    is_bipartite, is_connected, EdgeCut,
};

/// Finite simple graph with a canonical (sorted) edge list, so edge indices
/// are stable across runs.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
    /// `Some(side)` with `side[v] == true` for vertices of X.
    side: Option<Vec<bool>>,
}

impl Graph {
    /// Builds a graph from an edge list in any order and orientation.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v + 1, n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a + 1));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0 + 1, w[0].1 + 1));
        }
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in list.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj, side: None })
    }

    pub fn empty(n: usize) -> Graph {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n], side: None }
    }

    /// Attaches the bipartition whose X side is `x`; every edge must cross it.
    pub fn with_bipartition(mut self, x: &[usize]) -> Result<Graph> {
        let mut side = vec![false; self.n];
        for &v in x {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v + 1, n: self.n });
            }
            side[v] = true;
        }
        if let Some(&(u, v)) = self.edges.iter().find(|&&(u, v)| side[u] == side[v]) {
            return Err(Error::BipartitionViolation(u + 1, v + 1));
        }
        self.side = Some(side);
        Ok(self)
    }

    pub fn without_bipartition(mut self) -> Graph {
        self.side = None;
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// `(neighbor, edge index)` pairs, sorted by neighbor.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Minimum degree over vertices that carry at least one edge.
    pub fn min_positive_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).filter(|&d| d > 0).min().unwrap_or(0)
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn is_even(&self) -> bool {
        self.adj.iter().all(|a| a.len() % 2 == 0)
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// The stored bipartition as `(X, Y)`, if one was attached.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        self.side.as_ref().map(|side| {
            let (x, y): (Vec<usize>, Vec<usize>) = (0..self.n).partition(|&v| side[v]);
            (x, y)
        })
    }

    pub fn in_x(&self, v: usize) -> Option<bool> {
        self.side.as_ref().map(|s| s[v])
    }

    /// Same vertex set with the given edges deleted; bipartition is kept.
    pub fn remove_edges(&self, removed: &[usize]) -> Graph {
        let mut drop = vec![false; self.edges.len()];
        for &e in removed {
            drop[e] = true;
        }
        let kept = self.edges.iter().enumerate().filter(|(i, _)| !drop[*i]).map(|(_, &e)| e);
        let mut g = Graph::new(self.n, kept).expect("subgraph of a simple graph is simple");
        g.side = self.side.clone();
        g
    }

    /// Deletes every edge at `v`, leaving it isolated so labels stay put.
    pub fn isolate_vertex(&self, v: usize) -> Graph {
        let at_v: Vec<usize> = self.adj[v].iter().map(|&(_, e)| e).collect();
        self.remove_edges(&at_v)
    }

    /// Adds edges; fails on duplicates or loops.
    pub fn add_edges<I>(&self, extra: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let g = Graph::new(self.n, self.edges.iter().copied().chain(extra))?;
        match &self.side {
            Some(side) => {
                let x: Vec<usize> = (0..self.n).filter(|&v| side[v]).collect();
                g.with_bipartition(&x)
            }
            None => Ok(g),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", u + 1, v + 1)?;
        }
        write!(f, "])")
    }
}

/// Degree sequence; bipartite sequences keep the two sides apart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequence {
    pub bipartite: bool,
    pub x_degrees: Vec<usize>,
    pub y_degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn bipartite(x: Vec<usize>, y: Vec<usize>) -> Self {
        DegreeSequence { bipartite: true, x_degrees: x, y_degrees: y }
    }

    pub fn general(d: Vec<usize>) -> Self {
        DegreeSequence { bipartite: false, x_degrees: d, y_degrees: Vec::new() }
    }

    /// Sum condition: equal side sums (bipartite) or an even total.
    pub fn is_balanced(&self) -> bool {
        let sx: usize = self.x_degrees.iter().sum();
        if self.bipartite {
            sx == self.y_degrees.iter().sum::<usize>()
        } else {
            sx.is_multiple_of(2)
        }
    }

    pub fn min_element(&self) -> Option<usize> {
        self.x_degrees.iter().chain(&self.y_degrees).copied().min()
    }

    /// The bipartite degree sequence of `g` with respect to its stored
    /// bipartition, X and Y each in increasing vertex order.
    pub fn of_graph(g: &Graph) -> Option<Self> {
        let (x, y) = g.bipartition()?;
        Some(DegreeSequence::bipartite(
            x.iter().map(|&v| g.degree(v)).collect(),
            y.iter().map(|&v| g.degree(v)).collect(),
        ))
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        if self.bipartite {
            write!(f, "{};{}", join(&self.x_degrees), join(&self.y_degrees))
        } else {
            write!(f, "{}", join(&self.x_degrees))
        }
    }
}

impl std::str::FromStr for DegreeSequence {
    type Err = Error;

    /// `"3,3,3,4;3,3,3,4"` (bipartite) or `"2,2,2"` (general).
    fn from_str(s: &str) -> Result<Self> {
        let side = |part: &str| -> Result<Vec<usize>> {
            part.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line: 1,
                        message: format!("bad sequence element {t:?}"),
                    })
                })
                .collect()
        };
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        match s.split_once(';') {
            Some((x, y)) => Ok(DegreeSequence::bipartite(side(x)?, side(y)?)),
            None => Ok(DegreeSequence::general(side(s)?)),
        }
    }
}
