//! Text format for graphs and JSON documents for everything else.
//!
//! Graph files are line oriented:
//!
//! ```text
//! c optional comments
//! p sec <n> <m>
//! b <k>          vertices 1..=k form side X (optional)
//! e <u> <v>      one line per edge
//! ```
//!
//! Structured objects are JSON with a `kind` tag and the host graph
//! embedded. All vertices are 1-based in both formats.

use serde::{Deserialize, Serialize};

use crate::cdc::{Circuit, CycleDoubleCover, IntegerFlow, OrientedCdc};
use crate::coloring::SimultaneousColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::latin::LatinTrade;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Parses the graph text format.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut x_size: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        let number = |k: usize| -> Result<usize> {
            let f = fields.get(k).ok_or_else(|| parse_err(line, "missing field"))?;
            f.parse().map_err(|_| parse_err(line, format!("expected a number, found {f:?}")))
        };
        match fields.first().copied() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line, "second header"));
                }
                if fields.get(1) != Some(&"sec") || fields.len() != 4 {
                    return Err(parse_err(line, "header must be `p sec <n> <m>`"));
                }
                header = Some((number(2)?, number(3)?));
            }
            Some("b") => {
                let (n, _) = header.ok_or_else(|| parse_err(line, "`b` before header"))?;
                let k = number(1)?;
                if k > n || fields.len() != 2 {
                    return Err(parse_err(line, "`b <k>` needs 0 <= k <= n"));
                }
                x_size = Some(k);
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| parse_err(line, "edge before header"))?;
                if fields.len() != 3 {
                    return Err(parse_err(line, "edge line must be `e <u> <v>`"));
                }
                let (u, v) = (number(1)?, number(2)?);
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(Error::VertexOutOfRange { vertex: w, n });
                    }
                }
                if u == v {
                    return Err(Error::LoopEdge(u));
                }
                let (a, b) = (u.min(v), u.max(v));
                if !seen.insert((a, b)) {
                    return Err(Error::DuplicateEdge(a, b));
                }
                edges.push((a - 1, b - 1));
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type {other:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(text.lines().count().max(1), "missing `p sec` header"))?;
    if edges.len() != m {
        return Err(parse_err(text.lines().count().max(1), format!("header promises {m} edges, found {}", edges.len())));
    }
    let g = Graph::new(n, edges)?;
    match x_size {
        Some(k) => g.with_bipartition(&(0..k).collect::<Vec<_>>()),
        None => Ok(g),
    }
}

/// Side-X size when the stored bipartition is a prefix `0..k`.
fn prefix_side(g: &Graph) -> Option<usize> {
    let (x, _) = g.bipartition()?;
    x.iter().enumerate().all(|(i, &v)| i == v).then_some(x.len())
}

/// Emits the graph text format with sorted edges. A bipartition is written
/// only when side X is a prefix of the vertices.
pub fn emit_graph(g: &Graph) -> String {
    let mut out = format!("p sec {} {}\n", g.vertex_count(), g.edge_count());
    if let Some(k) = prefix_side(g) {
        out.push_str(&format!("b {k}\n"));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// A graph inside a JSON document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side_x: Option<Vec<usize>>,
}

impl GraphDoc {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDoc {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect(),
            side_x: g.bipartition().map(|(x, _)| x.iter().map(|v| v + 1).collect()),
        }
    }

    /// The graph; edges keep their document order only if already sorted.
    pub fn to_graph(&self) -> Result<Graph> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for &[u, v] in &self.edges {
            for w in [u, v] {
                if w == 0 || w > self.n {
                    return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
                }
            }
            edges.push((u - 1, v - 1));
        }
        let g = Graph::new(self.n, edges)?;
        match &self.side_x {
            Some(x) => {
                if x.iter().any(|&v| v == 0 || v > self.n) {
                    return Err(Error::InvalidColoring("side_x names a vertex outside the graph".into()));
                }
                g.with_bipartition(&x.iter().map(|v| v - 1).collect::<Vec<_>>())
            }
            None => Ok(g),
        }
    }

    /// Position of each document edge in the graph's sorted edge list.
    fn edge_positions(&self, g: &Graph) -> Vec<usize> {
        self.edges.iter().map(|&[u, v]| g.edge_index(u - 1, v - 1).expect("edge of g")).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellDoc {
    pub r: usize,
    pub c: usize,
    pub symbols: Vec<u32>,
}

/// Every interchange object, tagged by `kind`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Document {
    /// `colors[i]` lists the μ colors of `graph.edges[i]`.
    Coloring { graph: GraphDoc, mu: usize, num_colors: u32, colors: Vec<Vec<u32>> },
    Trade { mu: usize, rows: usize, cols: usize, symmetric: bool, cells: Vec<CellDoc> },
    Cdc {
        graph: GraphDoc,
        circuits: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        classes: Option<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        circuit_colorings: Option<Vec<Vec<u8>>>,
    },
    Ocdc { graph: GraphDoc, directed_circuits: Vec<Vec<usize>> },
    /// `orientations[i]` is `[tail, head]` of `graph.edges[i]`.
    Flow { graph: GraphDoc, orientations: Vec<[usize; 2]>, weights: Vec<i64> },
}

fn one_based(c: &Circuit) -> Vec<usize> {
    c.vertices.iter().map(|v| v + 1).collect()
}

fn zero_based(vs: &[usize], n: usize) -> Result<Circuit> {
    vs.iter()
        .map(|&v| if v == 0 || v > n { Err(Error::VertexOutOfRange { vertex: v, n }) } else { Ok(v - 1) })
        .collect::<Result<Vec<_>>>()
        .map(Circuit::new)
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Coloring { .. } => "coloring",
            Document::Trade { .. } => "trade",
            Document::Cdc { .. } => "cdc",
            Document::Ocdc { .. } => "ocdc",
            Document::Flow { .. } => "flow",
        }
    }

    pub fn coloring(g: &Graph, sc: &SimultaneousColoring) -> Self {
        Document::Coloring {
            graph: GraphDoc::from_graph(g),
            mu: sc.mu(),
            num_colors: sc.num_colors,
            colors: (0..g.edge_count()).map(|e| sc.tuple(e)).collect(),
        }
    }

    pub fn trade(t: &LatinTrade) -> Self {
        let cells = t.squares.first().map_or_else(Vec::new, |s| {
            s.cells.keys().map(|&(r, c)| CellDoc { r: r + 1, c: c + 1, symbols: t.cell(r, c).unwrap() }).collect()
        });
        Document::Trade { mu: t.mu(), rows: t.rows(), cols: t.cols(), symmetric: t.symmetric, cells }
    }

    pub fn cdc(g: &Graph, cover: &CycleDoubleCover) -> Self {
        Document::Cdc {
            graph: GraphDoc::from_graph(g),
            circuits: cover.circuits.iter().map(one_based).collect(),
            classes: cover.classes.as_ref().map(|c| c.iter().map(|x| x + 1).collect()),
            circuit_colorings: cover.circuit_colorings.clone(),
        }
    }

    pub fn ocdc(g: &Graph, cover: &OrientedCdc) -> Self {
        Document::Ocdc { graph: GraphDoc::from_graph(g), directed_circuits: cover.circuits.iter().map(one_based).collect() }
    }

    pub fn flow(g: &Graph, f: &IntegerFlow) -> Self {
        Document::Flow {
            graph: GraphDoc::from_graph(g),
            orientations: g
                .edges()
                .iter()
                .zip(&f.forward)
                .map(|(&(u, v), &fwd)| if fwd { [u + 1, v + 1] } else { [v + 1, u + 1] })
                .collect(),
            weights: f.weights.clone(),
        }
    }

    pub fn graph(&self) -> Option<Result<Graph>> {
        match self {
            Document::Coloring { graph, .. }
            | Document::Cdc { graph, .. }
            | Document::Ocdc { graph, .. }
            | Document::Flow { graph, .. } => Some(graph.to_graph()),
            Document::Trade { .. } => None,
        }
    }

    pub fn to_coloring(&self) -> Result<(Graph, SimultaneousColoring)> {
        let Document::Coloring { graph, mu, num_colors, colors } = self else {
            return Err(Error::InvalidColoring(format!("expected a coloring, found a {}", self.kind())));
        };
        let g = graph.to_graph()?;
        if colors.len() != graph.edges.len() || colors.iter().any(|c| c.len() != *mu) {
            return Err(Error::InvalidColoring("colors must list mu colors per edge".into()));
        }
        let mut colorings = vec![vec![0; g.edge_count()]; *mu];
        for (i, e) in graph.edge_positions(&g).into_iter().enumerate() {
            for t in 0..*mu {
                colorings[t][e] = colors[i][t];
            }
        }
        Ok((g, SimultaneousColoring { num_colors: *num_colors, colorings }))
    }

    pub fn to_trade(&self) -> Result<LatinTrade> {
        let Document::Trade { mu, rows, cols, symmetric, cells } = self else {
            return Err(Error::InvalidTrade(format!("expected a trade, found a {}", self.kind())));
        };
        let mut out = Vec::with_capacity(cells.len());
        for cell in cells {
            if cell.r == 0 || cell.c == 0 || cell.symbols.len() != *mu {
                return Err(Error::InvalidTrade(format!("bad cell ({}, {})", cell.r, cell.c)));
            }
            out.push((cell.r - 1, cell.c - 1, cell.symbols.clone()));
        }
        let mut t = LatinTrade::from_cells(*rows, *cols, &out, *symmetric);
        if out.is_empty() {
            t.squares = vec![crate::latin::PartialLatinSquare::new(*rows, *cols); *mu];
        }
        Ok(t)
    }

    pub fn to_cdc(&self) -> Result<(Graph, CycleDoubleCover)> {
        let Document::Cdc { graph, circuits, classes, circuit_colorings } = self else {
            return Err(Error::InvalidCover(format!("expected a cdc, found a {}", self.kind())));
        };
        let g = graph.to_graph()?;
        let circuits = circuits.iter().map(|c| zero_based(c, g.vertex_count())).collect::<Result<Vec<_>>>()?;
        let classes = match classes {
            Some(c) if c.contains(&0) => return Err(Error::InvalidCover("class labels start at 1".into())),
            Some(c) => Some(c.iter().map(|x| x - 1).collect()),
            None => None,
        };
        Ok((g, CycleDoubleCover { circuits, classes, circuit_colorings: circuit_colorings.clone() }))
    }

    pub fn to_ocdc(&self) -> Result<(Graph, OrientedCdc)> {
        let Document::Ocdc { graph, directed_circuits } = self else {
            return Err(Error::InvalidCover(format!("expected an ocdc, found a {}", self.kind())));
        };
        let g = graph.to_graph()?;
        let circuits = directed_circuits.iter().map(|c| zero_based(c, g.vertex_count())).collect::<Result<Vec<_>>>()?;
        Ok((g, OrientedCdc { circuits }))
    }

    pub fn to_flow(&self) -> Result<(Graph, IntegerFlow)> {
        let Document::Flow { graph, orientations, weights } = self else {
            return Err(Error::PreconditionViolated(format!("expected a flow, found a {}", self.kind())));
        };
        let g = graph.to_graph()?;
        if orientations.len() != graph.edges.len() || weights.len() != graph.edges.len() {
            return Err(Error::PreconditionViolated("one orientation and weight per edge".into()));
        }
        let mut forward = vec![true; g.edge_count()];
        let mut w = vec![0; g.edge_count()];
        for (i, e) in graph.edge_positions(&g).into_iter().enumerate() {
            let [tail, head] = orientations[i];
            let (u, v) = g.edge(e);
            forward[e] = match (tail.wrapping_sub(1), head.wrapping_sub(1)) {
                (a, b) if (a, b) == (u, v) => true,
                (a, b) if (a, b) == (v, u) => false,
                _ => return Err(Error::EdgeNotFound(tail, head)),
            };
            w[e] = weights[i];
        }
        Ok((g, IntegerFlow { forward, weights: w }))
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })
    }
}
