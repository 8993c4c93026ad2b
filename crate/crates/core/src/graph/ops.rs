use super::Graph;
use crate::error::{Error, Result};

/// Disjoint union plus every cross edge. `g1` keeps `0..n1`, `g2` is
/// shifted to `n1..n1+n2`.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
    let edges = g1
        .edges()
        .iter()
        .copied()
        .chain(g2.edges().iter().map(|&(u, v)| (u + n1, v + n1)))
        .chain((0..n1).flat_map(|u| (0..n2).map(move |v| (u, n1 + v))));
    Graph::new(n1 + n2, edges).unwrap()
}

/// `G □ H` with `(u, v)` numbered `u * |V(H)| + v`. When both factors carry
/// a bipartition the product gets the parity bipartition.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.vertex_count();
    let id = |u: usize, v: usize| u * nh + v;
    let mut edges = Vec::new();
    for u in 0..g.vertex_count() {
        for &(a, b) in h.edges() {
            edges.push((id(u, a), id(u, b)));
        }
    }
    for &(a, b) in g.edges() {
        for v in 0..nh {
            edges.push((id(a, v), id(b, v)));
        }
    }
    let p = Graph::new(g.vertex_count() * nh, edges).unwrap();
    match (g.in_x(0).is_some(), h.in_x(0).is_some()) {
        (true, true) => {
            let x: Vec<usize> = (0..p.vertex_count())
                .filter(|&w| g.in_x(w / nh).unwrap() == h.in_x(w % nh).unwrap())
                .collect();
            p.with_bipartition(&x).unwrap()
        }
        _ => p,
    }
}

/// `G[H]` with `(u, v)` numbered `u * |V(H)| + v`: copy `u` of H on
/// `u*n..(u+1)*n`, complete bipartite bundles between copies of adjacent
/// vertices of G.
pub fn lexicographic_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.vertex_count();
    let id = |u: usize, v: usize| u * nh + v;
    let mut edges = Vec::new();
    for u in 0..g.vertex_count() {
        for &(a, b) in h.edges() {
            edges.push((id(u, a), id(u, b)));
        }
    }
    for &(a, b) in g.edges() {
        for v in 0..nh {
            for w in 0..nh {
                edges.push((id(a, v), id(b, w)));
            }
        }
    }
    Graph::new(g.vertex_count() * nh, edges).unwrap()
}

/// Replaces edge `u v` (taken with `u < v`) by the path
/// `u, n, n+1, ..., n+t-1, v`. `t = 0` returns the graph unchanged.
pub fn subdivide_edge(g: &Graph, u: usize, v: usize, t: usize) -> Result<Graph> {
    let e = g.edge_index(u, v).ok_or(Error::EdgeNotFound(u + 1, v + 1))?;
    if t == 0 {
        return Ok(g.clone());
    }
    let (a, b) = g.edge(e);
    let n = g.vertex_count();
    let mut edges: Vec<(usize, usize)> =
        g.edges().iter().enumerate().filter(|&(i, _)| i != e).map(|(_, &p)| p).collect();
    let mut prev = a;
    for i in 0..t {
        edges.push((prev, n + i));
        prev = n + i;
    }
    edges.push((prev, b));
    let s = Graph::new(n + t, edges).unwrap();
    match g.in_x(a) {
        Some(a_in_x) if t.is_multiple_of(2) => {
            let x: Vec<usize> = (0..n + t)
                .filter(|&w| if w < n { g.in_x(w).unwrap() } else { (w - n + 1).is_multiple_of(2) == a_in_x })
                .collect();
            Ok(s.with_bipartition(&x).unwrap())
        }
        _ => Ok(s),
    }
}
