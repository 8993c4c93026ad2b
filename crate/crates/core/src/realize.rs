//! Bipartite degree-sequence realization and edge-connectivity repair by
//! 2-switches.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{bridges, count_min_cuts, edge_connectivity, is_connected, DegreeSequence, Graph};

/// A simple bipartite graph with X degrees `s.x_degrees` on vertices
/// `0..|X|` and Y degrees on the rest, or `None` when the sequence is not
/// bipartite graphic. X vertices are placed in decreasing degree order,
/// each joined to the Y vertices with the largest remaining demand.
pub fn realize_bipartite(s: &DegreeSequence) -> Result<Option<Graph>> {
    if !s.bipartite {
        return Err(Error::PreconditionViolated("expected a bipartite degree sequence".into()));
    }
    if !s.is_balanced() {
        return Ok(None);
    }
    let nx = s.x_degrees.len();
    let mut demand = s.y_degrees.clone();
    let mut order: Vec<usize> = (0..nx).collect();
    order.sort_by_key(|&x| (std::cmp::Reverse(s.x_degrees[x]), x));
    let mut edges = Vec::new();
    for x in order {
        let mut ys: Vec<usize> = (0..demand.len()).filter(|&y| demand[y] > 0).collect();
        if ys.len() < s.x_degrees[x] {
            return Ok(None);
        }
        ys.sort_by_key(|&y| (std::cmp::Reverse(demand[y]), y));
        for &y in &ys[..s.x_degrees[x]] {
            demand[y] -= 1;
            edges.push((x, nx + y));
        }
    }
    let g = Graph::new(nx + demand.len(), edges)?;
    let x: Vec<usize> = (0..nx).collect();
    Ok(Some(g.with_bipartition(&x)?))
}

/// Lexicographic potential: edge connectivity, then fewer minimum cuts.
fn potential(g: &Graph) -> (usize, i64) {
    match count_min_cuts(g) {
        Some((k, count)) => (k, -(count as i64)),
        None if !is_connected(g) => (0, 0),
        None => (edge_connectivity(g).expect("connected").0, 0),
    }
}

/// The side of some minimum cut: a component when disconnected.
fn min_cut_side(g: &Graph) -> Vec<bool> {
    let n = g.vertex_count();
    let mut side = vec![false; n];
    if !is_connected(g) {
        let labels = crate::graph::components(g);
        for v in 0..n {
            side[v] = labels[v] == labels[0];
        }
    } else {
        for v in edge_connectivity(g).expect("connected").1.side {
            side[v] = true;
        }
    }
    side
}

/// Switch candidates across a minimum cut: one edge on each shore, edges
/// lying on a circuit of their shore first.
fn cut_candidates(g: &Graph) -> Vec<(usize, usize)> {
    let side = min_cut_side(g);
    let on_bridge = {
        let mut b = vec![false; g.edge_count()];
        for e in bridges(g) {
            b[e] = true;
        }
        b
    };
    let inside = |s: bool| -> Vec<usize> {
        let mut es: Vec<usize> =
            (0..g.edge_count()).filter(|&e| side[g.edge(e).0] == s && side[g.edge(e).1] == s).collect();
        es.sort_by_key(|&e| on_bridge[e]);
        es
    };
    let (one, two) = (inside(true), inside(false));
    one.iter().flat_map(|&e1| two.iter().map(move |&e2| (e1, e2))).collect()
}

/// A realization of `s` with edge connectivity at least `mu`.
///
/// Starting from [`realize_bipartite`], edges on the two shores of a
/// minimum cut are switched as long as the potential (edge connectivity,
/// minus the number of minimum cuts) strictly increases; when no switch
/// across the chosen cut helps, every 2-switch of the graph is tried.
/// Exact minimum-cut counting covers graphs with at most 20 vertices.
pub fn realize_connected(s: &DegreeSequence, mu: usize, budget: &mut Budget) -> Result<Graph> {
    if mu < 2 {
        return Err(Error::PreconditionViolated("mu must be at least 2".into()));
    }
    if let Some(element) = s.min_element().filter(|&m| m < mu) {
        return Err(Error::ElementBelowMu { element, mu });
    }
    let mut g = realize_bipartite(s)?.ok_or(Error::NotGraphic)?;
    if g.vertex_count() < 2 {
        return Err(Error::NotGraphic);
    }
    let orient = |g: &Graph, e: usize| {
        let (u, v) = g.edge(e);
        if g.in_x(u) == Some(true) { (u, v) } else { (v, u) }
    };
    loop {
        let current = potential(&g);
        if current.0 >= mu {
            return Ok(g);
        }
        let mut improved = None;
        let cut = cut_candidates(&g);
        let everything =
            (0..g.edge_count()).flat_map(|e1| (e1 + 1..g.edge_count()).map(move |e2| (e1, e2))).collect::<Vec<_>>();
        for (e1, e2) in cut.into_iter().chain(everything) {
            budget.tick()?;
            let (a1, b1) = orient(&g, e1);
            let (a2, b2) = orient(&g, e2);
            let Some(h) = switch_oriented(&g, (a1, b1), (a2, b2)) else { continue };
            if potential(&h) > current {
                improved = Some(h);
                break;
            }
        }
        match improved {
            Some(h) => g = h,
            None => return Err(Error::SearchBudgetExceeded(budget.used())),
        }
    }
}

fn switch_oriented(g: &Graph, (a1, b1): (usize, usize), (a2, b2): (usize, usize)) -> Option<Graph> {
    if a1 == a2 || b1 == b2 || g.has_edge(a1, b2) || g.has_edge(a2, b1) {
        return None;
    }
    let e1 = g.edge_index(a1, b1)?;
    let e2 = g.edge_index(a2, b2)?;
    let x: Vec<usize> = g.bipartition().map(|p| p.0).unwrap_or_default();
    let h = Graph::new(
        g.vertex_count(),
        g.edges().iter().enumerate().filter(|&(e, _)| e != e1 && e != e2).map(|(_, &p)| p).chain([(a1, b2), (a2, b1)]),
    )
    .ok()?;
    h.with_bipartition(&x).ok()
}
