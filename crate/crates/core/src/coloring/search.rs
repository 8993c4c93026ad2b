//! Exact backtracking for proper and simultaneous edge colorings.
//!
//! Both engines walk the edges in a locality-first order (each next edge
//! touches as many already-colored edges as possible) and break color
//! symmetry by only ever opening the smallest unused color.

use super::{EdgeColoring, SimultaneousColoring};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_COLORS: u32 = 128;

#[inline]
fn bit(c: u32) -> u128 {
    1u128 << (c - 1)
}

fn mask_upto(l: u32) -> u128 {
    if l >= 128 {
        u128::MAX
    } else {
        (1u128 << l) - 1
    }
}

/// Edge order: start at the edge with the largest degree sum, then always
/// take the edge adjacent to the most already-ordered edges.
fn edge_order(g: &Graph) -> Vec<usize> {
    let m = g.edge_count();
    let dsum = |e: usize| {
        let (u, v) = g.edge(e);
        g.degree(u) + g.degree(v)
    };
    let mut placed = vec![false; m];
    let mut touched = vec![0usize; m];
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let e = (0..m)
            .filter(|&e| !placed[e])
            .max_by_key(|&e| (touched[e], dsum(e), std::cmp::Reverse(e)))
            .unwrap();
        placed[e] = true;
        order.push(e);
        let (u, v) = g.edge(e);
        for w in [u, v] {
            for &(_, f) in g.incident(w) {
                touched[f] += 1;
            }
        }
    }
    order
}

struct ProperSearch<'a> {
    g: &'a Graph,
    l: u32,
    order: Vec<usize>,
    colors: Vec<u32>,
    seen: Vec<u128>,
    max_used: u32,
}

impl ProperSearch<'_> {
    fn forward_ok(&self, w: usize) -> bool {
        let all = mask_upto(self.l);
        self.g.incident(w).iter().all(|&(x, f)| {
            self.colors[f] != 0 || all & !self.seen[w] & !self.seen[x] != 0
        })
    }

    fn solve(&mut self, k: usize, budget: &mut Budget) -> Result<bool> {
        let Some(&e) = self.order.get(k) else { return Ok(true) };
        let (u, v) = self.g.edge(e);
        let top = self.l.min(self.max_used + 1);
        for c in 1..=top {
            let b = bit(c);
            if (self.seen[u] | self.seen[v]) & b != 0 {
                continue;
            }
            budget.tick()?;
            let old_max = self.max_used;
            self.colors[e] = c;
            self.seen[u] |= b;
            self.seen[v] |= b;
            self.max_used = old_max.max(c);
            if self.forward_ok(u) && self.forward_ok(v) && self.solve(k + 1, budget)? {
                return Ok(true);
            }
            self.max_used = old_max;
            self.seen[u] &= !b;
            self.seen[v] &= !b;
            self.colors[e] = 0;
        }
        Ok(false)
    }
}

/// A proper edge coloring with colors in `1..=l`, or `None` if none exists.
pub fn proper_edge_coloring(g: &Graph, l: u32, budget: &mut Budget) -> Result<Option<Vec<u32>>> {
    if g.edge_count() == 0 {
        return Ok(Some(Vec::new()));
    }
    if (l as usize) < g.max_degree() {
        return Ok(None);
    }
    let l = l.min(g.edge_count() as u32);
    if l > MAX_COLORS {
        return Err(Error::PreconditionViolated(format!("at most {MAX_COLORS} colors supported")));
    }
    let mut s = ProperSearch {
        g,
        l,
        order: edge_order(g),
        colors: vec![0; g.edge_count()],
        seen: vec![0; g.vertex_count()],
        max_used: 0,
    };
    Ok(s.solve(0, budget)?.then_some(s.colors))
}

/// More edges than `l` matchings can hold.
fn overfull(g: &Graph, l: usize) -> bool {
    g.edge_count() > l * (g.vertex_count() / 2)
}

/// An edge coloring with χ'(G) colors.
pub fn optimal_edge_coloring(g: &Graph, budget: &mut Budget) -> Result<EdgeColoring> {
    let delta = g.max_degree();
    for l in [delta, delta + 1] {
        if overfull(g, l) {
            continue;
        }
        if let Some(colors) = proper_edge_coloring(g, l as u32, budget)? {
            return Ok(EdgeColoring { num_colors: l as u32, colors });
        }
    }
    unreachable!("every simple graph is (Δ+1)-edge-colorable")
}

/// Exact chromatic index, searching between Δ and Δ+1.
pub fn chromatic_index(g: &Graph, budget: &mut Budget) -> Result<usize> {
    Ok(optimal_edge_coloring(g, budget)?.num_colors as usize)
}

struct SeSearch<'a> {
    g: &'a Graph,
    mu: usize,
    all: u128,
    order: Vec<usize>,
    /// `colors[t][e]`, 0 while unassigned.
    colors: Vec<Vec<u32>>,
    /// `seen[t][v]`: colors at `v` in coordinate `t`.
    seen: Vec<Vec<u128>>,
    /// Union over coordinates; its size never exceeds the degree.
    union: Vec<u128>,
    deg: Vec<u32>,
    remaining: Vec<u32>,
    max_used: u32,
}

impl SeSearch<'_> {
    #[inline]
    fn full(&self, w: usize) -> bool {
        self.union[w].count_ones() == self.deg[w]
    }

    /// Colors vertex `w` may still take in coordinate `t`.
    #[inline]
    fn allowed(&self, w: usize, t: usize) -> u128 {
        let pool = if self.full(w) { self.union[w] } else { self.all };
        pool & !self.seen[t][w]
    }

    /// Every uncolored edge at `w` keeps a nonempty domain per coordinate and
    /// room for μ distinct colors; every palette color still owed in some
    /// coordinate has an uncolored edge that can host it.
    fn forward_ok(&self, w: usize) -> bool {
        if self.remaining[w] == 0 {
            return true;
        }
        let open: Vec<(usize, usize)> =
            self.g.incident(w).iter().copied().filter(|&(_, f)| self.colors[0][f] == 0).collect();
        for &(x, _) in &open {
            let mut any = 0u128;
            for t in 0..self.mu {
                let dom = self.allowed(w, t) & self.allowed(x, t);
                if dom == 0 {
                    return false;
                }
                any |= dom;
            }
            if (any.count_ones() as usize) < self.mu {
                return false;
            }
        }
        for t in 0..self.mu {
            let mut owed = self.union[w] & !self.seen[t][w];
            while owed != 0 {
                let b = owed & owed.wrapping_neg();
                owed &= owed - 1;
                if !open.iter().any(|&(x, _)| self.allowed(x, t) & b != 0) {
                    return false;
                }
            }
        }
        true
    }

    fn solve(&mut self, k: usize, budget: &mut Budget) -> Result<bool> {
        if k == self.order.len() {
            return Ok(true);
        }
        self.assign(k, 0, budget)
    }

    fn assign(&mut self, k: usize, t: usize, budget: &mut Budget) -> Result<bool> {
        let e = self.order[k];
        let (u, v) = self.g.edge(e);
        if t == self.mu {
            self.remaining[u] -= 1;
            self.remaining[v] -= 1;
            let mut ok = self.forward_ok(u) && self.forward_ok(v);
            if ok {
                // neighbors of u and v whose open edges just lost options
                let (gu, gv) = (self.g.incident(u), self.g.incident(v));
                ok = gu.iter().chain(gv).all(|&(x, _)| self.forward_ok(x));
            }
            if ok && self.solve(k + 1, budget)? {
                return Ok(true);
            }
            self.remaining[u] += 1;
            self.remaining[v] += 1;
            return Ok(false);
        }
        let l = 128 - self.all.leading_zeros();
        let top = l.min(self.max_used + 1);
        for c in 1..=top {
            let b = bit(c);
            if (0..t).any(|s| self.colors[s][e] == c) {
                continue;
            }
            if self.allowed(u, t) & self.allowed(v, t) & b == 0 {
                continue;
            }
            budget.tick()?;
            let (old_u, old_v, old_max) = (self.union[u], self.union[v], self.max_used);
            self.colors[t][e] = c;
            self.seen[t][u] |= b;
            self.seen[t][v] |= b;
            self.union[u] |= b;
            self.union[v] |= b;
            self.max_used = old_max.max(c);
            if self.assign(k, t + 1, budget)? {
                return Ok(true);
            }
            self.max_used = old_max;
            self.union[u] = old_u;
            self.union[v] = old_v;
            self.seen[t][u] &= !b;
            self.seen[t][v] &= !b;
            self.colors[t][e] = 0;
        }
        Ok(false)
    }
}

/// Exhaustive decision: a μ-simultaneous edge coloring with colors in
/// `1..=l`, or `None` when none exists. Running out of budget is an error.
pub fn decide_mu_se(g: &Graph, mu: usize, l: u32, budget: &mut Budget) -> Result<Option<SimultaneousColoring>> {
    if mu == 0 || l == 0 {
        return Err(Error::PreconditionViolated("mu and l must be positive".into()));
    }
    let m = g.edge_count();
    if m == 0 {
        return Ok(Some(SimultaneousColoring { num_colors: l, colorings: vec![Vec::new(); mu] }));
    }
    if mu > g.min_positive_degree() || (l as usize) < g.max_degree() {
        return Ok(None);
    }
    let effective = l.min(m as u32);
    if effective > MAX_COLORS {
        return Err(Error::PreconditionViolated(format!("at most {MAX_COLORS} colors supported")));
    }
    let deg: Vec<u32> = g.degrees().iter().map(|&d| d as u32).collect();
    let mut s = SeSearch {
        g,
        mu,
        all: mask_upto(effective),
        order: edge_order(g),
        colors: vec![vec![0; m]; mu],
        seen: vec![vec![0; g.vertex_count()]; mu],
        union: vec![0; g.vertex_count()],
        remaining: deg.clone(),
        deg,
        max_used: 0,
    };
    if s.solve(0, budget)? {
        Ok(Some(SimultaneousColoring { num_colors: l, colorings: s.colors }))
    } else {
        Ok(None)
    }
}

/// Least `l <= l_max` admitting a μ-SE coloring, with a witness. `None`
/// means "none up to `l_max`", not nonexistence.
pub fn se_chromatic_number(
    g: &Graph,
    mu: usize,
    l_max: u32,
    budget: &mut Budget,
) -> Result<Option<(u32, SimultaneousColoring)>> {
    let delta = g.max_degree().max(1) as u32;
    if l_max < delta {
        return Err(Error::PreconditionViolated(format!("l_max = {l_max} is below the maximum degree {delta}")));
    }
    for l in delta..=l_max {
        if let Some(sc) = decide_mu_se(g, mu, l, budget)? {
            return Ok(Some((l, sc)));
        }
    }
    Ok(None)
}
