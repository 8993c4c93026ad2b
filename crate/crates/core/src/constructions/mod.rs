//! Explicit simultaneous edge colorings for graph families and for graphs
//! built by join, products, subdivision and Hamiltonian composition.
//!
//! Every builder runs [`verify_simultaneous`] on its output before
//! returning it; a construction that fails its own check is a bug and
//! panics.

mod tables;

use crate::budget::Budget;
use crate::cdc::{find_ocdc, ocdc_to_se_bipartite};
use crate::coloring::{optimal_edge_coloring, proper_edge_coloring, verify_simultaneous, Violation};
use crate::coloring::{decide_mu_se, SimultaneousColoring};
use crate::error::{Error, Result};
use crate::graph::{
    cartesian_product, families, is_bipartite, join, lexicographic_product, one_factorization,
    subdivide_edge, Graph, OneFactorization,
};

fn checked(g: &Graph, sc: SimultaneousColoring) -> SimultaneousColoring {
    if let Err(v) = verify_simultaneous(g, &sc) {
        panic!("construction produced an invalid coloring: {v}");
    }
    sc
}

/// Coordinate `t` gives factor `F_j` the color `((j - 1 + t) mod r) + 1`.
pub fn color_with_factorization(g: &Graph, f: &OneFactorization, mu: usize) -> Result<SimultaneousColoring> {
    let r = f.factors.len();
    if mu > r {
        return Err(Error::MuTooLarge { mu, max: r });
    }
    let mut colorings = vec![vec![0; g.edge_count()]; mu];
    for (t, coloring) in colorings.iter_mut().enumerate() {
        for (j, factor) in f.factors.iter().enumerate() {
            for &e in factor {
                coloring[e] = ((j + t) % r) as u32 + 1;
            }
        }
    }
    Ok(checked(g, SimultaneousColoring { num_colors: r as u32, colorings }))
}

/// μ-SE coloring of an r-regular 1-factorable graph with r colors.
pub fn color_one_factorable(g: &Graph, mu: usize, budget: &mut Budget) -> Result<SimultaneousColoring> {
    let f = one_factorization(g, budget)?.ok_or(Error::NotOneFactorable)?;
    color_with_factorization(g, &f, mu)
}

/// 0-based color of cell `(i, j)` of coordinate `t` in the `n × m` block
/// coloring of `K_{n,m}`: `(((i + t) mod n) + j) mod m` for `n <= m`,
/// roles swapped otherwise.
fn block_color(i: usize, j: usize, t: usize, n: usize, m: usize) -> u32 {
    if n <= m {
        (((i + t) % n + j) % m) as u32
    } else {
        (((j + t) % m + i) % n) as u32
    }
}

/// μ-SE coloring of `families::complete_bipartite(n, m)` with exactly
/// `max(n, m)` colors.
pub fn color_complete_bipartite(n: usize, m: usize, mu: usize) -> Result<SimultaneousColoring> {
    if n == 0 || m == 0 || mu == 0 {
        return Err(Error::PreconditionViolated("n, m and mu must be positive".into()));
    }
    if mu > n.min(m) {
        return Err(Error::MuTooLarge { mu, max: n.min(m) });
    }
    let g = families::complete_bipartite(n, m);
    let colorings = (0..mu)
        .map(|t| g.edges().iter().map(|&(x, y)| block_color(x, y - n, t, n, m) + 1).collect())
        .collect();
    Ok(checked(&g, SimultaneousColoring { num_colors: n.max(m) as u32, colorings }))
}

/// Coloring of `join(g1, g2)`: each side keeps its own colors, the
/// `K_{n1,n2}` bundle gets the block coloring shifted past
/// `r = max(l1, l2)`. Uses `r + max(n1, n2)` colors.
pub fn color_join(
    g1: &Graph,
    sc1: &SimultaneousColoring,
    g2: &Graph,
    sc2: &SimultaneousColoring,
) -> Result<(Graph, SimultaneousColoring)> {
    let mu = sc1.mu();
    if sc2.mu() != mu {
        return Err(Error::MuMismatch(mu, sc2.mu()));
    }
    let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
    if mu > n1.min(n2) {
        return Err(Error::MuTooLarge { mu, max: n1.min(n2) });
    }
    for (g, sc) in [(g1, sc1), (g2, sc2)] {
        verify_simultaneous(g, sc).map_err(|v| Error::InvalidColoring(v.to_string()))?;
    }
    let g = join(g1, g2);
    let r = sc1.num_colors.max(sc2.num_colors);
    let mut colorings = vec![vec![0; g.edge_count()]; mu];
    for t in 0..mu {
        for (e, &(u, v)) in g1.edges().iter().enumerate() {
            colorings[t][g.edge_index(u, v).unwrap()] = sc1.colorings[t][e];
        }
        for (e, &(u, v)) in g2.edges().iter().enumerate() {
            colorings[t][g.edge_index(u + n1, v + n1).unwrap()] = sc2.colorings[t][e];
        }
        for i in 0..n1 {
            for j in 0..n2 {
                colorings[t][g.edge_index(i, n1 + j).unwrap()] = r + block_color(i, j, t, n1, n2) + 1;
            }
        }
    }
    let num_colors = r + n1.max(n2) as u32;
    Ok((g.clone(), checked(&g, SimultaneousColoring { num_colors, colorings })))
}

/// Coloring of `G □ H`: G-layers copy `sc_g` (colors `1..=a`), H-layers copy
/// `sc_h` shifted by `a`.
pub fn color_cartesian_sum(
    g: &Graph,
    sc_g: &SimultaneousColoring,
    h: &Graph,
    sc_h: &SimultaneousColoring,
) -> Result<(Graph, SimultaneousColoring)> {
    let mu = sc_g.mu();
    if sc_h.mu() != mu {
        return Err(Error::MuMismatch(mu, sc_h.mu()));
    }
    let p = cartesian_product(g, h);
    let nh = h.vertex_count();
    let a = sc_g.num_colors;
    let mut colorings = vec![vec![0; p.edge_count()]; mu];
    for t in 0..mu {
        for (e, &(x, y)) in g.edges().iter().enumerate() {
            for v in 0..nh {
                colorings[t][p.edge_index(x * nh + v, y * nh + v).unwrap()] = sc_g.colorings[t][e];
            }
        }
        for (e, &(x, y)) in h.edges().iter().enumerate() {
            for u in 0..g.vertex_count() {
                colorings[t][p.edge_index(u * nh + x, u * nh + y).unwrap()] = a + sc_h.colorings[t][e];
            }
        }
    }
    let num_colors = a + sc_h.num_colors;
    Ok((p.clone(), checked(&p, SimultaneousColoring { num_colors, colorings })))
}

/// A 1-factorization of `G □ H` for r-regular G and 1-factorable s-regular
/// H: the first factor of H together with every G-layer splits into
/// prisms `G □ K_2`, each factored into `r + 1` matchings from an
/// `(r + 1)`-edge-coloring of G; the other `s - 1` factors of H supply the
/// rest.
pub fn cartesian_regular_factorization(g: &Graph, h: &Graph, budget: &mut Budget) -> Result<OneFactorization> {
    let r = g.regular_degree().ok_or(Error::NotRegular)?;
    h.regular_degree().ok_or(Error::NotRegular)?;
    let hf = one_factorization(h, budget)?.ok_or(Error::NotOneFactorable)?;
    let p = cartesian_product(g, h);
    let nh = h.vertex_count();
    let id = |u: usize, v: usize| u * nh + v;
    let mut factors: Vec<Vec<usize>> = Vec::new();
    let Some((first, rest)) = hf.factors.split_first() else {
        // s = 0: the product is |V(H)| disjoint copies of G
        return one_factorization(&p, budget)?.ok_or(Error::NotOneFactorable);
    };
    let colors = r as u32 + 1;
    let coloring = proper_edge_coloring(g, colors, budget)?.expect("Vizing: Δ + 1 colors suffice");
    for (edges, missing) in crate::graph::missing_color_classes(g, &coloring, colors) {
        let mut f = Vec::new();
        for &he in first {
            let (v, w) = h.edge(he);
            for &ge in &edges {
                let (a, b) = g.edge(ge);
                f.push(p.edge_index(id(a, v), id(b, v)).unwrap());
                f.push(p.edge_index(id(a, w), id(b, w)).unwrap());
            }
            for &u in &missing {
                f.push(p.edge_index(id(u, v), id(u, w)).unwrap());
            }
        }
        f.sort_unstable();
        factors.push(f);
    }
    for factor in rest {
        let mut f = Vec::new();
        for &he in factor {
            let (v, w) = h.edge(he);
            for u in 0..g.vertex_count() {
                f.push(p.edge_index(id(u, v), id(u, w)).unwrap());
            }
        }
        f.sort_unstable();
        factors.push(f);
    }
    let f = OneFactorization { factors };
    debug_assert!(f.is_valid_for(&p));
    Ok(f)
}

/// μ-SE coloring of `G □ H` with `r + s` colors via
/// [`cartesian_regular_factorization`].
pub fn color_cartesian_regular(g: &Graph, h: &Graph, mu: usize, budget: &mut Budget) -> Result<(Graph, SimultaneousColoring)> {
    let f = cartesian_regular_factorization(g, h, budget)?;
    let p = cartesian_product(g, h);
    let sc = color_with_factorization(&p, &f, mu)?;
    Ok((p, sc))
}

/// Coloring of `G[H]`: copies of H keep `sc_h` (colors `1..=h`); the bundle
/// between copies `u` and `w` gets the `K_{n,n}` block coloring shifted by
/// `h + (c(uw) - 1) n` for an optimal proper coloring `c` of G.
pub fn color_lexicographic(
    g: &Graph,
    h: &Graph,
    sc_h: &SimultaneousColoring,
    budget: &mut Budget,
) -> Result<(Graph, SimultaneousColoring)> {
    let n = h.vertex_count();
    let mu = sc_h.mu();
    if mu > n {
        return Err(Error::MuTooLarge { mu, max: n });
    }
    let cg = optimal_edge_coloring(g, budget)?;
    let p = lexicographic_product(g, h);
    let base = sc_h.num_colors;
    let mut colorings = vec![vec![0; p.edge_count()]; mu];
    for t in 0..mu {
        for (e, &(x, y)) in h.edges().iter().enumerate() {
            for u in 0..g.vertex_count() {
                colorings[t][p.edge_index(u * n + x, u * n + y).unwrap()] = sc_h.colorings[t][e];
            }
        }
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            let shift = base + (cg.colors[e] - 1) * n as u32;
            for i in 0..n {
                for j in 0..n {
                    colorings[t][p.edge_index(a * n + i, b * n + j).unwrap()] = shift + block_color(i, j, t, n, n) + 1;
                }
            }
        }
    }
    let num_colors = base + cg.num_colors * n as u32;
    Ok((p.clone(), checked(&p, SimultaneousColoring { num_colors, colorings })))
}

/// 2-SE coloring of `families::wheel(n)` with n colors:
/// `f1(u v_i) = i`, `f1(v_i v_{i+1}) = i + 2`, `f2(u v_i) = i + 2`,
/// `f2(v_i v_{i+1}) = i + 1`, all taken mod n into `1..=n`.
pub fn color_wheel(n: usize) -> Result<(Graph, SimultaneousColoring)> {
    if n < 3 {
        return Err(Error::PreconditionViolated("a wheel needs n >= 3".into()));
    }
    let g = families::wheel(n);
    let wrap = |x: usize| ((x - 1) % n) as u32 + 1;
    let hub = n;
    let mut f1 = vec![0; g.edge_count()];
    let mut f2 = vec![0; g.edge_count()];
    for i in 1..=n {
        let (vi, next) = (i - 1, i % n);
        let spoke = g.edge_index(hub, vi).unwrap();
        let rim = g.edge_index(vi, next).unwrap();
        f1[spoke] = wrap(i);
        f1[rim] = wrap(i + 2);
        f2[spoke] = wrap(i + 2);
        f2[rim] = wrap(i + 1);
    }
    let sc = checked(&g, SimultaneousColoring { num_colors: n as u32, colorings: vec![f1, f2] });
    Ok((g, sc))
}

fn table(n: usize) -> Option<&'static [(usize, usize, [u32; 3])]> {
    match n {
        7 => Some(&tables::K7),
        9 => Some(&tables::K9),
        _ => None,
    }
}

/// The embedded 3-SE table for `K_7` or `K_9`, unverified.
pub fn embedded_table(n: usize) -> Option<SimultaneousColoring> {
    let rows = table(n)?;
    let g = families::complete(n);
    let mut colorings = vec![vec![0; g.edge_count()]; 3];
    for &(i, j, c) in rows {
        let e = g.edge_index(i - 1, j - 1).expect("table rows name edges of K_n");
        for t in 0..3 {
            colorings[t][e] = c[t];
        }
    }
    Some(SimultaneousColoring { num_colors: n as u32, colorings })
}

/// Every defect of an embedded table, one line per offending entry
/// (vertex palette, repeated color, or repeated edge tuple). Empty means
/// the table is a valid 3-SE coloring with n colors.
pub fn table_discrepancies(n: usize) -> Option<Vec<String>> {
    let sc = embedded_table(n)?;
    let g = families::complete(n);
    let mut out = Vec::new();
    for e in 0..g.edge_count() {
        let (u, v) = g.edge(e);
        let c = sc.tuple(e);
        if c[0] == c[1] || c[1] == c[2] || c[0] == c[2] {
            out.push(format!("v{}v{}: {:?} repeats a color", u + 1, v + 1, c));
        }
    }
    for v in 0..n {
        for t in 0..3 {
            let colors: Vec<u32> = g.incident(v).iter().map(|&(_, e)| sc.colorings[t][e]).collect();
            let mut distinct = colors.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != colors.len() {
                out.push(format!("v{}: coordinate {} repeats a color in {:?}", v + 1, t + 1, colors));
            }
        }
        let p0 = sc.palette(&g, 0, v);
        for t in 1..3 {
            if sc.palette(&g, t, v) != p0 {
                out.push(format!("v{}: palette of coordinate {} differs from coordinate 1", v + 1, t + 1));
            }
        }
    }
    Some(out)
}

/// Which route [`color_complete`] took.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompleteRoute {
    OneFactorization,
    Table,
    /// The table failed verification and a search result replaced it.
    TableReplacedBySearch(Violation),
    Join(usize, usize),
    /// μ = 1 on `K_3` or `K_5`.
    Proper,
}

/// μ-SE coloring of `K_n`: 1-factorization for even n, the embedded tables
/// for 7 and 9, and `K_{n-4} ∨ K_4` for odd `n >= 11`. Odd n supports
/// `mu <= 3`, even n supports `mu <= n - 1`.
pub fn color_complete(n: usize, mu: usize, budget: &mut Budget) -> Result<(SimultaneousColoring, CompleteRoute)> {
    if n < 2 || mu == 0 {
        return Err(Error::PreconditionViolated("need n >= 2 and mu >= 1".into()));
    }
    if matches!(n, 2 | 3 | 5) && mu >= 2 {
        return Err(Error::NoSuchColoring);
    }
    let g = families::complete(n);
    if n.is_multiple_of(2) {
        return Ok((color_one_factorable(&g, mu, budget)?, CompleteRoute::OneFactorization));
    }
    if mu > 3 {
        return Err(Error::MuTooLarge { mu, max: 3 });
    }
    if let Some(sc) = embedded_table(n) {
        return match verify_simultaneous(&g, &sc) {
            Ok(()) => Ok((sc.truncated(mu), CompleteRoute::Table)),
            Err(v) => {
                let found = decide_mu_se(&g, 3, n as u32, budget)?.ok_or(Error::NoSuchColoring)?;
                Ok((found.truncated(mu), CompleteRoute::TableReplacedBySearch(v)))
            }
        };
    }
    if n < 7 {
        // n = 3 or 5 with mu = 1: a single optimal proper coloring
        let c = optimal_edge_coloring(&g, budget)?;
        return Ok((checked(&g, SimultaneousColoring { num_colors: c.num_colors, colorings: vec![c.colors] }), CompleteRoute::Proper));
    }
    let (small, _) = color_complete(n - 4, mu, budget)?;
    let (four, _) = color_complete(4, mu, budget)?;
    let (joined, sc) = color_join(&families::complete(n - 4), &small, &families::complete(4), &four)?;
    debug_assert_eq!(joined, g);
    Ok((sc, CompleteRoute::Join(n - 4, 4)))
}

/// Replaces edge `u v` by a path with `2k` new vertices and alternates the
/// edge's two colors `(a, b)` along it: `f1 = a, b, ..., a`,
/// `f2 = b, a, ..., b`.
pub fn subdivide_coloring(
    g: &Graph,
    sc: &SimultaneousColoring,
    u: usize,
    v: usize,
    k: usize,
) -> Result<(Graph, SimultaneousColoring)> {
    if sc.mu() != 2 {
        return Err(Error::NotTwoSimultaneous(format!("mu = {}", sc.mu())));
    }
    verify_simultaneous(g, sc).map_err(|x| Error::NotTwoSimultaneous(x.to_string()))?;
    if k == 0 {
        return Err(Error::PreconditionViolated("k must be at least 1".into()));
    }
    let e = g.edge_index(u, v).ok_or(Error::EdgeNotFound(u + 1, v + 1))?;
    let (x, y) = g.edge(e);
    let (a, b) = (sc.colorings[0][e], sc.colorings[1][e]);
    let s = subdivide_edge(g, x, y, 2 * k)?;
    let n = g.vertex_count();
    let mut f = [vec![0; s.edge_count()], vec![0; s.edge_count()]];
    for (i, &(p, q)) in g.edges().iter().enumerate() {
        if i != e {
            let j = s.edge_index(p, q).unwrap();
            f[0][j] = sc.colorings[0][i];
            f[1][j] = sc.colorings[1][i];
        }
    }
    let mut path = vec![x];
    path.extend(n..n + 2 * k);
    path.push(y);
    for (step, w) in path.windows(2).enumerate() {
        let j = s.edge_index(w[0], w[1]).unwrap();
        let (c1, c2) = if step % 2 == 0 { (a, b) } else { (b, a) };
        f[0][j] = c1;
        f[1][j] = c2;
    }
    let [f1, f2] = f;
    let sc = checked(&s, SimultaneousColoring { num_colors: sc.num_colors, colorings: vec![f1, f2] });
    Ok((s, sc))
}

/// 2-SE coloring from an even Hamiltonian circuit `circuit` (vertex order)
/// whose removal leaves a bipartite graph with an oriented cycle double
/// cover: the residual is colored from its OCDC with colors `1..=t`, the
/// circuit alternates `t + 1, t + 2` in `f1` and the reverse in `f2`.
pub fn color_from_hamiltonian(g: &Graph, circuit: &[usize], budget: &mut Budget) -> Result<SimultaneousColoring> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    if circuit.len() != n || n < 3 || circuit.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
        return Err(Error::NotHamiltonian);
    }
    let mut on_circuit = Vec::with_capacity(n);
    for i in 0..n {
        let (a, b) = (circuit[i], circuit[(i + 1) % n]);
        on_circuit.push(g.edge_index(a, b).ok_or(Error::NotHamiltonian)?);
    }
    if n % 2 == 1 {
        return Err(Error::OddCircuit(n));
    }
    let residual = g.remove_edges(&on_circuit).without_bipartition();
    let (x, _) = is_bipartite(&residual).ok_or(Error::ResidualNotBipartite)?;
    let residual = residual.with_bipartition(&x).unwrap();
    let ocdc = match find_ocdc(&residual, budget) {
        Ok(Some(c)) => c,
        Ok(None) => return Err(Error::NoOcdcFound { exhaustive: true }),
        Err(Error::SearchBudgetExceeded(_)) => return Err(Error::NoOcdcFound { exhaustive: false }),
        Err(e) => return Err(e),
    };
    let inner = ocdc_to_se_bipartite(&residual, &ocdc)?;
    let t = inner.num_colors;
    let mut f = [vec![0; g.edge_count()], vec![0; g.edge_count()]];
    for (i, &(p, q)) in residual.edges().iter().enumerate() {
        let j = g.edge_index(p, q).unwrap();
        f[0][j] = inner.colorings[0][i];
        f[1][j] = inner.colorings[1][i];
    }
    for (i, &e) in on_circuit.iter().enumerate() {
        let (c1, c2) = if i % 2 == 0 { (t + 1, t + 2) } else { (t + 2, t + 1) };
        f[0][e] = c1;
        f[1][e] = c2;
    }
    let [f1, f2] = f;
    Ok(checked(g, SimultaneousColoring { num_colors: t + 2, colorings: vec![f1, f2] }))
}

#[cfg(test)]
mod tests;
