//! Partial Latin squares, μ-way Latin trades, and their translation to and
//! from simultaneous colorings of bipartite (or, for symmetric trades,
//! arbitrary) graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::budget::Budget;
use crate::coloring::{decide_mu_se, verify_simultaneous, SimultaneousColoring};
use crate::error::{Error, Result};
use crate::graph::{connected_bipartite_graphs_up_to, is_bipartite, Graph};

/// Rows `0..rows`, columns `0..cols`, symbols are positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PartialLatinSquare {
    pub rows: usize,
    pub cols: usize,
    pub cells: BTreeMap<(usize, usize), u32>,
}

impl PartialLatinSquare {
    pub fn new(rows: usize, cols: usize) -> Self {
        PartialLatinSquare { rows, cols, cells: BTreeMap::new() }
    }

    pub fn volume(&self) -> usize {
        self.cells.len()
    }

    pub fn shape(&self) -> BTreeSet<(usize, usize)> {
        self.cells.keys().copied().collect()
    }

    pub fn row_symbols(&self, i: usize) -> BTreeSet<u32> {
        self.cells.range((i, 0)..(i + 1, 0)).map(|(_, &k)| k).collect()
    }

    pub fn col_symbols(&self, j: usize) -> BTreeSet<u32> {
        self.cells.iter().filter(|((_, c), _)| *c == j).map(|(_, &k)| k).collect()
    }

    /// Parses rows of whitespace-separated symbols, `.` for an empty cell.
    pub fn from_rows(rows: &[&str]) -> Self {
        let grid: Vec<Vec<&str>> = rows.iter().map(|r| r.split_whitespace().collect()).collect();
        let cols = grid.iter().map(Vec::len).max().unwrap_or(0);
        let mut p = PartialLatinSquare::new(grid.len(), cols);
        for (i, row) in grid.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                if let Ok(k) = s.parse() {
                    p.cells.insert((i, j), k);
                }
            }
        }
        p
    }
}

/// μ partial Latin squares on one shape.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LatinTrade {
    pub squares: Vec<PartialLatinSquare>,
    pub symmetric: bool,
}

impl LatinTrade {
    pub fn mu(&self) -> usize {
        self.squares.len()
    }

    pub fn volume(&self) -> usize {
        self.squares.first().map_or(0, PartialLatinSquare::volume)
    }

    pub fn rows(&self) -> usize {
        self.squares.first().map_or(0, |s| s.rows)
    }

    pub fn cols(&self) -> usize {
        self.squares.first().map_or(0, |s| s.cols)
    }

    /// The symbols of cell `(i, j)` across the squares, if it is filled.
    pub fn cell(&self, i: usize, j: usize) -> Option<Vec<u32>> {
        self.squares.iter().map(|s| s.cells.get(&(i, j)).copied()).collect()
    }

    /// Builds a trade from cells `(row, col, symbols)`; the number of
    /// squares is the length of the first symbol list.
    pub fn from_cells(rows: usize, cols: usize, cells: &[(usize, usize, Vec<u32>)], symmetric: bool) -> Self {
        let mu = cells.first().map_or(0, |c| c.2.len());
        let mut squares = vec![PartialLatinSquare::new(rows, cols); mu];
        for (i, j, symbols) in cells {
            for (s, &k) in squares.iter_mut().zip(symbols) {
                s.cells.insert((*i, *j), k);
            }
        }
        LatinTrade { squares, symmetric }
    }
}

/// First broken trade invariant; rows, columns and squares are 1-based on
/// display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TradeViolation {
    TooFewSquares(usize),
    SizeMismatch { square: usize },
    OutOfBounds { square: usize, cell: (usize, usize) },
    ZeroSymbol { square: usize, cell: (usize, usize) },
    RowRepeat { square: usize, row: usize, symbol: u32 },
    ColumnRepeat { square: usize, col: usize, symbol: u32 },
    ShapeMismatch { square: usize },
    CellRepeat { cell: (usize, usize), symbol: u32 },
    RowSets { row: usize, square: usize },
    ColumnSets { col: usize, square: usize },
    NotSquare,
    Diagonal { cell: usize },
    Asymmetric { square: usize, cell: (usize, usize) },
}

impl fmt::Display for TradeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use TradeViolation::*;
        let c = |(i, j): (usize, usize)| format!("({}, {})", i + 1, j + 1);
        match *self {
            TooFewSquares(mu) => write!(f, "a trade needs at least 2 squares, found {mu}"),
            SizeMismatch { square } => write!(f, "square {} has different dimensions", square + 1),
            OutOfBounds { square, cell } => write!(f, "square {}: cell {} is outside the array", square + 1, c(cell)),
            ZeroSymbol { square, cell } => write!(f, "square {}: cell {} holds symbol 0", square + 1, c(cell)),
            RowRepeat { square, row, symbol } => {
                write!(f, "square {}: symbol {symbol} repeats in row {}", square + 1, row + 1)
            }
            ColumnRepeat { square, col, symbol } => {
                write!(f, "square {}: symbol {symbol} repeats in column {}", square + 1, col + 1)
            }
            ShapeMismatch { square } => write!(f, "square {} has a different shape", square + 1),
            CellRepeat { cell, symbol } => write!(f, "cell {} holds {symbol} in two squares", c(cell)),
            RowSets { row, square } => write!(f, "row {} of square {} has different symbols", row + 1, square + 1),
            ColumnSets { col, square } => {
                write!(f, "column {} of square {} has different symbols", col + 1, square + 1)
            }
            NotSquare => write!(f, "a symmetric trade needs as many rows as columns"),
            Diagonal { cell } => write!(f, "diagonal cell ({0}, {0}) is filled", cell + 1),
            Asymmetric { square, cell } => write!(f, "square {}: cell {} has no mirror", square + 1, c(cell)),
        }
    }
}

fn check_partial_latin(index: usize, s: &PartialLatinSquare) -> Result<(), TradeViolation> {
    let mut in_row = BTreeSet::new();
    let mut in_col = BTreeSet::new();
    for (&(i, j), &k) in &s.cells {
        if i >= s.rows || j >= s.cols {
            return Err(TradeViolation::OutOfBounds { square: index, cell: (i, j) });
        }
        if k == 0 {
            return Err(TradeViolation::ZeroSymbol { square: index, cell: (i, j) });
        }
        if !in_row.insert((i, k)) {
            return Err(TradeViolation::RowRepeat { square: index, row: i, symbol: k });
        }
        if !in_col.insert((j, k)) {
            return Err(TradeViolation::ColumnRepeat { square: index, col: j, symbol: k });
        }
    }
    Ok(())
}

fn check_symmetric(t: &LatinTrade) -> Result<(), TradeViolation> {
    if t.rows() != t.cols() {
        return Err(TradeViolation::NotSquare);
    }
    for (index, s) in t.squares.iter().enumerate() {
        for (&(i, j), k) in &s.cells {
            if i == j {
                return Err(TradeViolation::Diagonal { cell: i });
            }
            if s.cells.get(&(j, i)) != Some(k) {
                return Err(TradeViolation::Asymmetric { square: index, cell: (i, j) });
            }
        }
    }
    Ok(())
}

/// Checks every trade invariant: at least two partial Latin squares of one
/// size and shape, pairwise distinct entries per cell, equal row and column
/// symbol sets across squares, and the mirror conditions when the trade is
/// flagged symmetric.
pub fn verify_trade(t: &LatinTrade) -> Result<(), TradeViolation> {
    if t.mu() < 2 {
        return Err(TradeViolation::TooFewSquares(t.mu()));
    }
    let first = &t.squares[0];
    for (index, s) in t.squares.iter().enumerate() {
        if (s.rows, s.cols) != (first.rows, first.cols) {
            return Err(TradeViolation::SizeMismatch { square: index });
        }
        check_partial_latin(index, s)?;
        if s.shape() != first.shape() {
            return Err(TradeViolation::ShapeMismatch { square: index });
        }
    }
    for &(i, j) in first.cells.keys() {
        let symbols = t.cell(i, j).expect("same shape");
        for a in 0..symbols.len() {
            if symbols[a + 1..].contains(&symbols[a]) {
                return Err(TradeViolation::CellRepeat { cell: (i, j), symbol: symbols[a] });
            }
        }
    }
    for (index, s) in t.squares.iter().enumerate().skip(1) {
        if let Some(row) = (0..s.rows).find(|&i| s.row_symbols(i) != first.row_symbols(i)) {
            return Err(TradeViolation::RowSets { row, square: index });
        }
        if let Some(col) = (0..s.cols).find(|&j| s.col_symbols(j) != first.col_symbols(j)) {
            return Err(TradeViolation::ColumnSets { col, square: index });
        }
    }
    if t.symmetric {
        check_symmetric(t)?;
    }
    Ok(())
}

/// The graph of a trade and its coloring. Bipartite form: rows are
/// vertices `0..rows` (side X), columns follow, one edge per filled cell.
/// Symmetric form: one vertex per row, one edge per mirrored pair of cells.
pub fn trade_to_graph(t: &LatinTrade, symmetric: bool) -> Result<(Graph, SimultaneousColoring)> {
    verify_trade(t).map_err(|v| Error::InvalidTrade(v.to_string()))?;
    let shape: Vec<(usize, usize)> = t.squares[0].cells.keys().copied().collect();
    let (g, cells): (Graph, Vec<(usize, usize)>) = if symmetric {
        check_symmetric(t).map_err(|v| Error::NotSymmetric(v.to_string()))?;
        let cells: Vec<(usize, usize)> = shape.into_iter().filter(|&(i, j)| i < j).collect();
        (Graph::new(t.rows(), cells.iter().copied())?, cells)
    } else {
        let r = t.rows();
        let g = Graph::new(r + t.cols(), shape.iter().map(|&(i, j)| (i, r + j)))?;
        let x: Vec<usize> = (0..r).collect();
        (g.with_bipartition(&x)?, shape.into_iter().map(|(i, j)| (i, r + j)).collect())
    };
    let mut colorings = vec![vec![0; g.edge_count()]; t.mu()];
    let offset = if symmetric { 0 } else { t.rows() };
    for &(u, v) in &cells {
        let e = g.edge_index(u, v).unwrap();
        for (s, square) in t.squares.iter().enumerate() {
            colorings[s][e] = square.cells[&(u, v - offset)];
        }
    }
    let num_colors = colorings.iter().flatten().copied().max().unwrap_or(0);
    let sc = SimultaneousColoring { num_colors, colorings };
    verify_simultaneous(&g, &sc).map_err(|v| Error::InvalidTrade(v.to_string()))?;
    Ok((g, sc))
}

/// Inverse of [`trade_to_graph`]. Isolated vertices are dropped, so rows
/// and columns are the non-isolated vertices of X and Y in index order
/// (or all non-isolated vertices for the symmetric form).
pub fn coloring_to_trade(g: &Graph, sc: &SimultaneousColoring, symmetric: bool) -> Result<LatinTrade> {
    verify_simultaneous(g, sc).map_err(|v| Error::InvalidColoring(v.to_string()))?;
    let live = |v: &usize| g.degree(*v) > 0;
    let (rows, cols): (Vec<usize>, Vec<usize>) = if symmetric {
        let all: Vec<usize> = (0..g.vertex_count()).filter(live).collect();
        (all.clone(), all)
    } else {
        let (x, y) = match g.bipartition() {
            Some(p) => p,
            None => is_bipartite(g).ok_or(Error::NotBipartite)?,
        };
        (x.into_iter().filter(live).collect(), y.into_iter().filter(live).collect())
    };
    let row_of: BTreeMap<usize, usize> = rows.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let col_of: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(j, &v)| (v, j)).collect();
    let mut cells = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let symbols = sc.tuple(e);
        if symmetric {
            cells.push((row_of[&u], col_of[&v], symbols.clone()));
            cells.push((row_of[&v], col_of[&u], symbols));
        } else if let (Some(&i), Some(&j)) = (row_of.get(&u), col_of.get(&v)) {
            cells.push((i, j, symbols));
        } else {
            cells.push((row_of[&v], col_of[&u], symbols));
        }
    }
    Ok(LatinTrade::from_cells(rows.len(), cols.len(), &cells, symmetric))
}

/// Volumes `1..=s_max` for which a μ-way Latin trade exists.
///
/// A trade is the disjoint union of trades on the components of its graph,
/// so connected bipartite graphs with minimum degree at least μ are tested
/// with [`decide_mu_se`] and the feasible set is closed under sums.
pub fn spectrum_scan(mu: usize, s_max: usize, budget: &mut Budget) -> Result<BTreeSet<usize>> {
    let mut connected = vec![false; s_max + 1];
    for (level, forms) in connected_bipartite_graphs_up_to(s_max).iter().enumerate() {
        let s = level + 1;
        for form in forms {
            let g = form.to_graph();
            if g.min_degree() < mu {
                continue;
            }
            if decide_mu_se(&g, mu, s as u32, budget)?.is_some() {
                connected[s] = true;
                break;
            }
        }
    }
    let mut feasible = vec![false; s_max + 1];
    for s in 1..=s_max {
        feasible[s] = connected[s] || (1..s).any(|a| feasible[a] && feasible[s - a]);
    }
    Ok((1..=s_max).filter(|&s| feasible[s]).collect())
}

#[cfg(test)]
mod tests;
