//! Isomorphism machinery for small graphs: a canonical form by
//! individualization-refinement (exhaustive over the search tree, no
//! automorphism pruning), automorphism enumeration, and isomorph-free
//! generation of connected graphs by edge count.

use std::collections::BTreeSet;

use super::{is_bipartite, is_connected, Graph};

/// Edge list under the canonical relabeling; equal iff isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        Graph::new(self.n, self.edges.iter().copied()).unwrap()
    }
}

type Partition = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Partition) -> Partition {
    let n = g.vertex_count();
    loop {
        let mut cell_of = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let mut next: Partition = Vec::with_capacity(k);
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = c
                .iter()
                .map(|&v| {
                    let mut counts = vec![0; k];
                    for w in g.neighbors(v) {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(g: &Graph, cells: Partition, best: &mut Option<Vec<(usize, usize)>>) {
    let cells = refine(g, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let mut label = vec![0; g.vertex_count()];
            for (i, c) in cells.iter().enumerate() {
                label[c[0]] = i;
            }
            let mut edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|&(u, v)| (label[u].min(label[v]), label[u].max(label[v])))
                .collect();
            edges.sort_unstable();
            if best.as_ref().is_none_or(|b| edges < *b) {
                *best = Some(edges);
            }
        }
        Some(i) => {
            for &v in &cells[i] {
                let mut split = cells.clone();
                let rest: Vec<usize> = cells[i].iter().copied().filter(|&w| w != v).collect();
                split[i] = vec![v];
                split.insert(i + 1, rest);
                search(g, split, best);
            }
        }
    }
}

/// Canonical form ignoring any stored bipartition. Meant for graphs with
/// a dozen or so vertices; highly symmetric inputs cost up to `n!` leaves.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.vertex_count();
    let mut best = None;
    if n > 0 {
        search(g, vec![(0..n).collect()], &mut best);
    }
    CanonicalForm { n, edges: best.unwrap_or_default() }
}

/// All automorphisms as vertex maps `p` with `u ~ v  iff  p[u] ~ p[v]`.
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, depth: usize, map: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = g.vertex_count();
        if depth == n {
            out.push(map.clone());
            return;
        }
        for img in 0..n {
            if used[img] || g.degree(img) != g.degree(depth) {
                continue;
            }
            let consistent = (0..depth).all(|u| g.has_edge(u, depth) == g.has_edge(map[u], img));
            if consistent {
                map.push(img);
                used[img] = true;
                extend(g, depth + 1, map, used, out);
                used[img] = false;
                map.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(g, 0, &mut Vec::new(), &mut vec![false; g.vertex_count()], &mut out);
    out
}

/// Every connected graph with `1..=max_edges` edges, one per isomorphism
/// class, as canonical forms grouped by edge count.
pub fn connected_graphs_up_to(max_edges: usize) -> Vec<Vec<CanonicalForm>> {
    grow(max_edges, |_| true)
}

/// Connected bipartite graphs with `1..=max_edges` edges, grouped by edge
/// count. Deleting a leaf or a non-bridge edge keeps a graph connected and
/// bipartite, so growing only through bipartite graphs reaches them all.
pub fn connected_bipartite_graphs_up_to(max_edges: usize) -> Vec<Vec<CanonicalForm>> {
    grow(max_edges, |g| is_bipartite(g).is_some())
}

fn grow(max_edges: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Vec<CanonicalForm>> {
    let mut levels: Vec<Vec<CanonicalForm>> = Vec::new();
    if max_edges == 0 {
        return levels;
    }
    levels.push(vec![canonical_form(&Graph::new(2, [(0, 1)]).unwrap())]);
    for _ in 1..max_edges {
        let mut next = BTreeSet::new();
        let mut offer = |g: Graph| {
            if keep(&g) {
                next.insert(canonical_form(&g));
            }
        };
        for form in levels.last().unwrap() {
            let g = form.to_graph();
            let n = g.vertex_count();
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        offer(g.add_edges([(u, v)]).unwrap());
                    }
                }
                offer(Graph::new(n + 1, g.edges().iter().copied().chain([(u, n)])).unwrap());
            }
        }
        debug_assert!(next.iter().all(|f| is_connected(&f.to_graph())));
        levels.push(next.into_iter().collect());
    }
    levels
}
