use std::collections::{BTreeSet, VecDeque};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{automorphisms, bridges, Graph};

use super::{Circuit, CycleDoubleCover, OrientedCdc};

/// Every circuit of `g` (normalized, each once), in lexicographic order.
pub fn circuits(g: &Graph, budget: &mut Budget) -> Result<Vec<Circuit>> {
    fn extend(g: &Graph, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Circuit>, budget: &mut Budget) -> Result<()> {
        budget.tick()?;
        let (s, last) = (path[0], *path.last().unwrap());
        for w in g.neighbors(last) {
            if w == s && path.len() >= 3 && path[1] < last {
                out.push(Circuit::new(path.clone()));
            } else if w > s && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                extend(g, path, on_path, out, budget)?;
                path.pop();
                on_path[w] = false;
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        extend(g, &mut vec![s], &mut on_path, &mut out, budget)?;
    }
    out.sort();
    Ok(out)
}

/// Every even circuit of `g`, normalized and sorted.
pub fn even_circuits(g: &Graph, budget: &mut Budget) -> Result<Vec<Circuit>> {
    Ok(circuits(g, budget)?.into_iter().filter(Circuit::is_even).collect())
}

struct Catalog {
    circuits: Vec<Circuit>,
    edges: Vec<Vec<usize>>,
    by_edge: Vec<Vec<usize>>,
}

impl Catalog {
    fn new(g: &Graph, circuits: Vec<Circuit>) -> Catalog {
        let edges: Vec<Vec<usize>> = circuits.iter().map(|c| c.edges_in(g).expect("circuit of g")).collect();
        let mut by_edge = vec![Vec::new(); g.edge_count()];
        for (i, es) in edges.iter().enumerate() {
            for &e in es {
                by_edge[e].push(i);
            }
        }
        Catalog { circuits, edges, by_edge }
    }

    fn fits(&self, c: usize, count: &[u8], cap: u8) -> bool {
        self.edges[c].iter().all(|&e| count[e] < cap)
    }
}

/// Result of [`enumerate_even_cdcs`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdcEnumeration {
    /// Number of distinct covers as multisets of labelled circuits.
    pub labelled: usize,
    /// One representative per automorphism class, sorted.
    pub up_to_automorphism: Vec<CycleDoubleCover>,
}

/// Enumerates every CDC of `g` made of even circuits. Fails with
/// `LimitExceeded` once more than `limit` labelled covers turn up.
pub fn enumerate_even_cdcs(g: &Graph, limit: usize, budget: &mut Budget) -> Result<CdcEnumeration> {
    let cat = Catalog::new(g, even_circuits(g, budget)?);
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut count = vec![0u8; g.edge_count()];
    let mut last_pick = vec![usize::MAX; g.edge_count()];
    let mut chosen = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        cat: &Catalog,
        count: &mut [u8],
        last_pick: &mut [usize],
        chosen: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
        limit: usize,
        budget: &mut Budget,
    ) -> Result<()> {
        budget.tick()?;
        let Some(e) = count.iter().position(|&c| c < 2) else {
            let mut cover = chosen.clone();
            cover.sort_unstable();
            found.push(cover);
            if found.len() > limit {
                return Err(Error::LimitExceeded(limit));
            }
            return Ok(());
        };
        // the second pick for an edge never precedes the first
        let min = if count[e] == 1 && last_pick[e] != usize::MAX { last_pick[e] } else { 0 };
        for &c in &cat.by_edge[e] {
            if c < min || !cat.fits(c, count, 2) {
                continue;
            }
            let saved = last_pick[e];
            if count[e] == 0 {
                last_pick[e] = c;
            }
            for &f in &cat.edges[c] {
                count[f] += 1;
            }
            chosen.push(c);
            rec(cat, count, last_pick, chosen, found, limit, budget)?;
            chosen.pop();
            for &f in &cat.edges[c] {
                count[f] -= 1;
            }
            last_pick[e] = saved;
        }
        Ok(())
    }

    rec(&cat, &mut count, &mut last_pick, &mut chosen, &mut found, limit, budget)?;

    let edge_maps: Vec<Vec<usize>> = automorphisms(g)
        .into_iter()
        .map(|p| g.edges().iter().map(|&(a, b)| g.edge_index(p[a], p[b]).unwrap()).collect())
        .collect();
    let key = |cover: &[usize]| -> Vec<Vec<usize>> {
        edge_maps
            .iter()
            .map(|m| {
                let mut image: Vec<Vec<usize>> = cover
                    .iter()
                    .map(|&c| {
                        let mut es: Vec<usize> = cat.edges[c].iter().map(|&e| m[e]).collect();
                        es.sort_unstable();
                        es
                    })
                    .collect();
                image.sort();
                image
            })
            .min()
            .unwrap_or_default()
    };
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for cover in &found {
        if seen.insert(key(cover)) {
            let mut circuits: Vec<Circuit> = cover.iter().map(|&c| cat.circuits[c].clone()).collect();
            circuits.sort();
            reps.push(CycleDoubleCover::from_circuits(circuits));
        }
    }
    reps.sort_by(|a, b| a.circuits.cmp(&b.circuits));
    Ok(CdcEnumeration { labelled: found.len(), up_to_automorphism: reps })
}

/// Partitions the edges of an even graph into even circuits, or proves
/// that no such partition exists.
pub fn even_circuit_decomposition(g: &Graph, budget: &mut Budget) -> Result<Option<Vec<Circuit>>> {
    if !g.is_even() {
        return Err(Error::NotEvenGraph);
    }
    let cat = Catalog::new(g, even_circuits(g, budget)?);
    fn rec(cat: &Catalog, count: &mut [u8], chosen: &mut Vec<usize>, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        let Some(e) = count.iter().position(|&c| c == 0) else {
            return Ok(true);
        };
        for &c in &cat.by_edge[e] {
            if !cat.fits(c, count, 1) {
                continue;
            }
            for &f in &cat.edges[c] {
                count[f] = 1;
            }
            chosen.push(c);
            if rec(cat, count, chosen, budget)? {
                return Ok(true);
            }
            chosen.pop();
            for &f in &cat.edges[c] {
                count[f] = 0;
            }
        }
        Ok(false)
    }
    let mut chosen = Vec::new();
    let found = rec(&cat, &mut vec![0; g.edge_count()], &mut chosen, budget)?;
    Ok(found.then(|| chosen.iter().map(|&c| cat.circuits[c].clone()).collect()))
}

/// Searches for directed circuits using every edge once in each direction.
/// The circuit through the first uncovered dart is enumerated exhaustively,
/// so `Ok(None)` is proven nonexistence.
pub fn find_ocdc(g: &Graph, budget: &mut Budget) -> Result<Option<OrientedCdc>> {
    if !bridges(g).is_empty() {
        return Ok(None);
    }
    // used[e][0]: low to high, used[e][1]: high to low
    let mut used = vec![[false; 2]; g.edge_count()];
    let mut out = Vec::new();

    fn dart(g: &Graph, a: usize, b: usize) -> (usize, usize) {
        let e = g.edge_index(a, b).unwrap();
        (e, (a > b) as usize)
    }

    fn close(g: &Graph, used: &mut [[bool; 2]], out: &mut Vec<Circuit>, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        let Some((e, d)) = (0..used.len()).flat_map(|e| [(e, 0), (e, 1)]).find(|&(e, d)| !used[e][d]) else {
            return Ok(true);
        };
        let (lo, hi) = g.edge(e);
        let (s, t) = if d == 0 { (lo, hi) } else { (hi, lo) };
        used[e][d] = true;
        let mut on_path = vec![false; g.vertex_count()];
        on_path[s] = true;
        on_path[t] = true;
        let mut path = vec![s, t];
        let done = walk(g, used, &mut path, &mut on_path, out, budget)?;
        if !done {
            used[e][d] = false;
        }
        Ok(done)
    }

    fn walk(
        g: &Graph,
        used: &mut [[bool; 2]],
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Circuit>,
        budget: &mut Budget,
    ) -> Result<bool> {
        budget.tick()?;
        let (s, last) = (path[0], *path.last().unwrap());
        for w in g.neighbors(last).collect::<Vec<_>>() {
            let (e, d) = dart(g, last, w);
            if used[e][d] {
                continue;
            }
            if w == s && path.len() >= 3 {
                used[e][d] = true;
                out.push(Circuit::new(path.clone()));
                if close(g, used, out, budget)? {
                    return Ok(true);
                }
                out.pop();
                used[e][d] = false;
            } else if !on_path[w] {
                used[e][d] = true;
                on_path[w] = true;
                path.push(w);
                if walk(g, used, path, on_path, out, budget)? {
                    return Ok(true);
                }
                path.pop();
                on_path[w] = false;
                used[e][d] = false;
            }
        }
        Ok(false)
    }

    let found = close(g, &mut used, &mut out, budget)?;
    Ok(found.then_some(OrientedCdc { circuits: out }))
}

/// True iff every edge lies on a circuit of length at most `len`.
pub fn short_circuit_cover_check(g: &Graph, len: usize) -> bool {
    (0..g.edge_count()).all(|e| {
        let (u, v) = g.edge(e);
        let mut dist = vec![usize::MAX; g.vertex_count()];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &(y, f) in g.incident(x) {
                if f != e && dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist[v] != usize::MAX && dist[v] < len
    })
}
