use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

/// An edge cut `[S, V \ S]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCut {
    /// Sorted vertex set S.
    pub side: Vec<usize>,
    /// Sorted indices of the edges with exactly one endpoint in S.
    pub cut_edges: Vec<usize>,
    pub size: usize,
    /// Both sides hold at least two vertices.
    pub nontrivial: bool,
}

impl EdgeCut {
    pub fn from_side(g: &Graph, side: &[usize]) -> EdgeCut {
        let mut in_s = vec![false; g.vertex_count()];
        for &v in side {
            in_s[v] = true;
        }
        let mut sorted = side.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let cut_edges: Vec<usize> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| in_s[u] != in_s[v])
            .map(|(i, _)| i)
            .collect();
        let size = cut_edges.len();
        let nontrivial = sorted.len() >= 2 && g.vertex_count() - sorted.len() >= 2;
        EdgeCut { side: sorted, cut_edges, size, nontrivial }
    }
}

/// BFS 2-coloring. The first vertex of every component lands in X.
pub fn is_bipartite(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.vertex_count();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(true);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some((0..n).partition(|&v| color[v] == Some(true)))
}

/// Component label of every vertex, labels numbered in order of first vertex.
pub fn components(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    let mut stack = Vec::new();
    for root in 0..n {
        if label[root] != usize::MAX {
            continue;
        }
        label[root] = next;
        stack.push(root);
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u) {
                if label[w] == usize::MAX {
                    label[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    label
}

pub fn is_connected(g: &Graph) -> bool {
    components(g).iter().all(|&c| c == 0)
}

/// True when removing some vertex disconnects the remaining vertices.
pub fn has_cut_vertex(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0..n).any(|v| {
        let h = g.isolate_vertex(v);
        let label = components(&h);
        let mut others = (0..n).filter(|&w| w != v).map(|w| label[w]);
        match others.next() {
            Some(first) => others.any(|c| c != first),
            None => false,
        }
    })
}

/// Indices of all cut edges, via DFS low-links.
pub fn bridges(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = Vec::new();
    let mut time = 0;
    // (vertex, parent edge, next incidence position)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (u, pe, ref mut pos)) = stack.last_mut() {
            if let Some(&(w, e)) = g.incident(u).get(*pos) {
                *pos += 1;
                if e == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] > disc[p] {
                        out.push(pe);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Unit-capacity max-flow between `s` and `t`; returns the value and the
/// source side of a minimum cut.
fn max_flow(g: &Graph, s: usize, t: usize) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    // flow[e] in {-1, 0, 1}: +1 means one unit along (u -> v) of edge (u, v).
    let mut flow = vec![0i8; g.edge_count()];
    let residual = |flow: &[i8], e: usize, from: usize| -> bool {
        let (u, _) = g.edge(e);
        if from == u {
            flow[e] < 1
        } else {
            flow[e] > -1
        }
    };
    let mut value = 0;
    loop {
        let mut pred: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &(w, e) in g.incident(u) {
                if !seen[w] && residual(&flow, e, u) {
                    seen[w] = true;
                    pred[w] = Some((u, e));
                    queue.push_back(w);
                }
            }
        }
        if !seen[t] {
            let side = (0..n).filter(|&v| seen[v]).collect();
            return (value, side);
        }
        let mut v = t;
        while let Some((u, e)) = pred[v] {
            let (a, _) = g.edge(e);
            flow[e] += if u == a { 1 } else { -1 };
            v = u;
        }
        value += 1;
    }
}

/// Edge connectivity with a minimum cut; ties go to the lexicographically
/// smallest side containing vertex 1.
pub fn edge_connectivity(g: &Graph) -> Result<(usize, EdgeCut)> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::PreconditionViolated("edge connectivity needs at least 2 vertices".into()));
    }
    if !is_connected(g) {
        return Err(Error::DisconnectedInput);
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    for t in 1..n {
        let (value, side) = max_flow(g, 0, t);
        let better = match &best {
            None => true,
            Some((bv, bs)) => value < *bv || (value == *bv && side < *bs),
        };
        if better {
            best = Some((value, side));
        }
    }
    let (value, side) = best.unwrap();
    Ok((value, EdgeCut::from_side(g, &side)))
}

pub const MAX_CUT_CENSUS_VERTICES: usize = 20;

/// Size of the cut `[S, V \ S]` for `S` given as a bitmask over vertices.
pub fn cut_size(adj_masks: &[u32], side: u32) -> usize {
    let mut total = 0;
    let mut rest = side;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        total += (adj_masks[v] & !side).count_ones() as usize;
    }
    total
}

/// `(min cut size, number of minimum cuts)` by enumerating every vertex
/// subset containing vertex 1. Disconnected graphs report `(0, count of
/// empty cuts)`. `None` above [`MAX_CUT_CENSUS_VERTICES`] vertices.
pub fn count_min_cuts(g: &Graph) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    if !(2..=MAX_CUT_CENSUS_VERTICES).contains(&n) {
        return None;
    }
    let mut masks = vec![0u32; n];
    for &(u, v) in g.edges() {
        masks[u] |= 1 << v;
        masks[v] |= 1 << u;
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut best = usize::MAX;
    let mut count = 0;
    for k in 0..(1u32 << (n - 1)) {
        let side = 1 | (k << 1);
        if side == full {
            continue;
        }
        let c = cut_size(&masks, side);
        if c < best {
            best = c;
            count = 1;
        } else if c == best {
            count += 1;
        }
    }
    Some((best, count))
}

/// Length of a shortest circuit, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent_edge = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(w, e) in g.incident(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent_edge[w] = e;
                    queue.push_back(w);
                } else if parent_edge[u] != e {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}
