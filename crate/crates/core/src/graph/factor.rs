use super::{families, is_bipartite, Graph};
use crate::budget::Budget;
use crate::coloring::proper_edge_coloring;
use crate::error::{Error, Result};

/// Partition of E(G) into perfect matchings, each a sorted list of edge
/// indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneFactorization {
    pub factors: Vec<Vec<usize>>,
}

impl OneFactorization {
    /// Factors are disjoint, cover E(G), and each covers every vertex once.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.edge_count()];
        for f in &self.factors {
            let mut hit = vec![false; g.vertex_count()];
            for &e in f {
                if e >= used.len() || used[e] {
                    return false;
                }
                used[e] = true;
                let (u, v) = g.edge(e);
                if hit[u] || hit[v] {
                    return false;
                }
                hit[u] = true;
                hit[v] = true;
            }
            if hit.iter().any(|h| !h) {
                return false;
            }
        }
        used.iter().all(|&u| u)
    }

    fn from_pairs(g: &Graph, factors: Vec<Vec<(usize, usize)>>) -> Self {
        let factors = factors
            .into_iter()
            .map(|f| {
                let mut ids: Vec<usize> = f.iter().map(|&(u, v)| g.edge_index(u, v).unwrap()).collect();
                ids.sort_unstable();
                ids
            })
            .collect();
        OneFactorization { factors }
    }

    fn from_coloring(colors: &[u32], num_colors: u32) -> Self {
        let mut factors = vec![Vec::new(); num_colors as usize];
        for (e, &c) in colors.iter().enumerate() {
            factors[c as usize - 1].push(e);
        }
        OneFactorization { factors }
    }
}

/// Circle method on `0..n` (n even): vertex `n-1` sits at the center.
fn round_robin(n: usize) -> Vec<Vec<(usize, usize)>> {
    let m = n - 1;
    (0..m)
        .map(|r| {
            let mut f = vec![(r, m)];
            for k in 1..n / 2 {
                f.push(((r + k) % m, (r + m - k) % m));
            }
            f
        })
        .collect()
}

/// For a proper coloring of an r-regular graph with `r + 1` colors, the
/// edges of each color and the vertices missing it. Each vertex misses
/// exactly one color, which is what makes the prism construction work.
pub(crate) fn missing_color_classes(g: &Graph, colors: &[u32], num_colors: u32) -> Vec<(Vec<usize>, Vec<usize>)> {
    (1..=num_colors)
        .map(|c| {
            let edges: Vec<usize> = (0..g.edge_count()).filter(|&e| colors[e] == c).collect();
            let missing: Vec<usize> = (0..g.vertex_count())
                .filter(|&v| g.incident(v).iter().all(|&(_, e)| colors[e] != c))
                .collect();
            (edges, missing)
        })
        .collect()
}

/// Recognizes `G' □ K_2` in product numbering: `(u, 0) = 2u`, `(u, 1) = 2u + 1`.
fn prism_base(g: &Graph) -> Option<Graph> {
    let n = g.vertex_count();
    if n < 2 || n % 2 == 1 || (0..n / 2).any(|u| !g.has_edge(2 * u, 2 * u + 1)) {
        return None;
    }
    let mut base = Vec::new();
    for &(a, b) in g.edges() {
        if a / 2 == b / 2 {
            continue;
        }
        if a % 2 != b % 2 || !g.has_edge(a ^ 1, b ^ 1) {
            return None;
        }
        if a % 2 == 0 {
            base.push((a / 2, b / 2));
        }
    }
    Graph::new(n / 2, base).ok()
}

/// A 1-factorization of a regular graph, or `None` if none exists.
///
/// Closed forms cover `K_2l` (circle method), `K_{n,n}` (shifted matchings),
/// `Q_d` (dimension matchings) and prisms `G' □ K_2` (missing-color
/// matchings). Everything else goes through exact Δ-edge-coloring search.
pub fn one_factorization(g: &Graph, budget: &mut Budget) -> Result<Option<OneFactorization>> {
    let r = g.regular_degree().ok_or(Error::NotRegular)?;
    let n = g.vertex_count();
    if r == 0 {
        return Ok(Some(OneFactorization { factors: Vec::new() }));
    }
    if n % 2 == 1 {
        return Ok(None);
    }
    if r == n - 1 {
        return Ok(Some(OneFactorization::from_pairs(g, round_robin(n))));
    }
    if let Some((x, y)) = g.bipartition().or_else(|| is_bipartite(g)) {
        if x.len() == y.len() && r == x.len() {
            let k = x.len();
            let factors = (0..k).map(|t| (0..k).map(|i| (x[i], y[(i + t) % k])).collect()).collect();
            return Ok(Some(OneFactorization::from_pairs(g, factors)));
        }
    }
    if n.is_power_of_two() && n.trailing_zeros() as usize == r {
        let cube = families::hypercube(r);
        if cube.edges() == g.edges() {
            let factors = (0..r).map(|b| (0..n).filter(|u| u & (1 << b) == 0).map(|u| (u, u | (1 << b))).collect());
            return Ok(Some(OneFactorization::from_pairs(g, factors.collect())));
        }
    }
    if let Some(base) = prism_base(g) {
        let colors = base.max_degree() as u32 + 1;
        if let Some(c) = proper_edge_coloring(&base, colors, budget)? {
            let factors = missing_color_classes(&base, &c, colors)
                .into_iter()
                .map(|(edges, missing)| {
                    let mut f = Vec::new();
                    for e in edges {
                        let (u, v) = base.edge(e);
                        f.push((2 * u, 2 * v));
                        f.push((2 * u + 1, 2 * v + 1));
                    }
                    f.extend(missing.iter().map(|&u| (2 * u, 2 * u + 1)));
                    f
                })
                .collect();
            return Ok(Some(OneFactorization::from_pairs(g, factors)));
        }
    }
    Ok(proper_edge_coloring(g, r as u32, budget)?.map(|c| OneFactorization::from_coloring(&c, r as u32)))
}
