use std::fmt;

use super::{verify_simultaneous, SimultaneousColoring};
use crate::budget::Budget;
use crate::coloring::chromatic_index;
use crate::error::{Error, Result};
use crate::graph::{bridges, components, girth, has_cut_vertex, is_bipartite, is_connected, Graph};

/// Necessary properties of a smallest bridgeless bipartite graph without a
/// 2-simultaneous edge coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FilterCondition {
    Bipartite,
    Bridgeless,
    TwoConnected,
    MinDegreeTwo,
    MaxDegreeThree,
    NoNontrivialTwoEdgeCut,
    DegreeTwoDeletionBridgeless,
    DegreeTwoNeighborhoods,
}

impl FilterCondition {
    pub const ALL: [FilterCondition; 8] = [
        FilterCondition::Bipartite,
        FilterCondition::Bridgeless,
        FilterCondition::TwoConnected,
        FilterCondition::MinDegreeTwo,
        FilterCondition::MaxDegreeThree,
        FilterCondition::NoNontrivialTwoEdgeCut,
        FilterCondition::DegreeTwoDeletionBridgeless,
        FilterCondition::DegreeTwoNeighborhoods,
    ];

    /// Roman-numeral clause the condition belongs to.
    pub fn clause(self) -> &'static str {
        match self {
            FilterCondition::Bipartite | FilterCondition::Bridgeless | FilterCondition::TwoConnected => "i",
            FilterCondition::MinDegreeTwo | FilterCondition::MaxDegreeThree => "ii",
            FilterCondition::NoNontrivialTwoEdgeCut => "iii",
            FilterCondition::DegreeTwoDeletionBridgeless => "iv",
            FilterCondition::DegreeTwoNeighborhoods => "v",
        }
    }
}

impl fmt::Display for FilterCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            FilterCondition::Bipartite => "bipartite",
            FilterCondition::Bridgeless => "bridgeless",
            FilterCondition::TwoConnected => "2-connected",
            FilterCondition::MinDegreeTwo => "minimum degree 2",
            FilterCondition::MaxDegreeThree => "maximum degree 3",
            FilterCondition::NoNontrivialTwoEdgeCut => "no nontrivial 2-edge cut",
            FilterCondition::DegreeTwoDeletionBridgeless => "G - v bridgeless for every degree-2 v",
            FilterCondition::DegreeTwoNeighborhoods => "N(u) ∩ N(w) = {v} for every degree-2 v",
        };
        write!(f, "({}) {text}", self.clause())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterReport {
    pub results: Vec<(FilterCondition, bool)>,
}

impl FilterReport {
    pub fn passes(&self) -> bool {
        self.results.iter().all(|&(_, ok)| ok)
    }

    pub fn failed(&self) -> Vec<FilterCondition> {
        self.results.iter().filter(|&&(_, ok)| !ok).map(|&(c, _)| c).collect()
    }
}

fn has_nontrivial_two_edge_cut(g: &Graph) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    for a in 0..m {
        for b in a + 1..m {
            let label = components(&g.remove_edges(&[a, b]));
            let count = label.iter().max().map_or(0, |&c| c + 1);
            for c in 0..count {
                let size = label.iter().filter(|&&l| l == c).count();
                if size < 2 || n - size < 2 {
                    continue;
                }
                // the cut around this component must be exactly {a, b}
                let crossing = g.edges().iter().filter(|&&(u, v)| (label[u] == c) != (label[v] == c)).count();
                if crossing == 2 {
                    return true;
                }
            }
        }
    }
    false
}

pub fn counterexample_filter(g: &Graph) -> FilterReport {
    let n = g.vertex_count();
    let deg2: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 2).collect();
    let results = FilterCondition::ALL
        .iter()
        .map(|&cond| {
            let ok = match cond {
                FilterCondition::Bipartite => is_bipartite(g).is_some(),
                FilterCondition::Bridgeless => bridges(g).is_empty(),
                FilterCondition::TwoConnected => n >= 3 && is_connected(g) && !has_cut_vertex(g),
                FilterCondition::MinDegreeTwo => g.min_degree() == 2,
                FilterCondition::MaxDegreeThree => g.max_degree() == 3,
                FilterCondition::NoNontrivialTwoEdgeCut => !has_nontrivial_two_edge_cut(g),
                FilterCondition::DegreeTwoDeletionBridgeless => {
                    deg2.iter().all(|&v| bridges(&g.isolate_vertex(v)).is_empty())
                }
                FilterCondition::DegreeTwoNeighborhoods => deg2.iter().all(|&v| {
                    let nb: Vec<usize> = g.neighbors(v).collect();
                    let (u, w) = (nb[0], nb[1]);
                    g.neighbors(u).all(|x| x == v || !g.has_edge(x, w))
                }),
            };
            (cond, ok)
        })
        .collect();
    FilterReport { results }
}

/// Probes `|E(G)| >= k χ'(G)` for a 2-SE colorable bridgeless graph of girth
/// at least `2k - 1`. Valid inputs must never produce `false`.
pub fn check_girth_bound(g: &Graph, sc: &SimultaneousColoring, k: usize, budget: &mut Budget) -> Result<bool> {
    if sc.mu() != 2 {
        return Err(Error::NotTwoSimultaneous(format!("mu = {}", sc.mu())));
    }
    verify_simultaneous(g, sc).map_err(|v| Error::NotTwoSimultaneous(v.to_string()))?;
    if k < 2 {
        return Err(Error::PreconditionViolated("k must be at least 2".into()));
    }
    if let Some(gi) = girth(g) {
        if gi + 1 < 2 * k {
            return Err(Error::PreconditionViolated(format!("girth {gi} is below 2k - 1 = {}", 2 * k - 1)));
        }
    }
    if !bridges(g).is_empty() {
        return Err(Error::PreconditionViolated("graph has a bridge".into()));
    }
    Ok(g.edge_count() >= k * chromatic_index(g, budget)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::subdivide_edge;

    #[test]
    fn filter_examples() {
        let c4 = counterexample_filter(&cycle(4));
        assert!(!c4.passes());
        assert!(c4.failed().contains(&FilterCondition::MaxDegreeThree));
        let k33 = counterexample_filter(&complete_bipartite(3, 3));
        assert_eq!(k33.failed(), vec![FilterCondition::MinDegreeTwo]);
    }

    #[test]
    fn subdivided_k33() {
        // x1 y1 replaced by x1 a b y1: {a, b} is cut off by two edges and
        // deleting a leaves b hanging on a bridge
        let g = subdivide_edge(&complete_bipartite(3, 3), 0, 3, 2).unwrap();
        let report = counterexample_filter(&g);
        assert_eq!(
            report.failed(),
            vec![FilterCondition::NoNontrivialTwoEdgeCut, FilterCondition::DegreeTwoDeletionBridgeless]
        );
    }

    #[test]
    fn girth_bound_preconditions() {
        let g = cycle(6);
        // edges sorted: 0-1, 0-5, 1-2, 2-3, 3-4, 4-5
        let sc = SimultaneousColoring { num_colors: 2, colorings: vec![vec![1, 2, 2, 1, 2, 1], vec![2, 1, 1, 2, 1, 2]] };
        let mut b = Budget::default();
        assert_eq!(check_girth_bound(&g, &sc, 3, &mut b), Ok(true));
        assert!(matches!(check_girth_bound(&g, &sc, 4, &mut b), Err(Error::PreconditionViolated(_))));
    }
}
