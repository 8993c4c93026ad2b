use crate::budget::Budget;
use crate::coloring::{chromatic_index, verify_simultaneous, SimultaneousColoring};
use crate::error::{Error, Result};
use crate::graph::{is_bipartite, Graph};

use super::{verify_cdc, verify_ocdc, Circuit, CycleDoubleCover, OrientedCdc};

/// Splits a subgraph with all degrees 0 or 2 (given as an edge mask) into
/// circuits, each as vertex sequence plus the edge of every step.
pub(crate) fn circuits_of(g: &Graph, in_subgraph: &[bool]) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut used = vec![false; g.edge_count()];
    let mut out = Vec::new();
    for start in 0..g.edge_count() {
        if !in_subgraph[start] || used[start] {
            continue;
        }
        let (first, mut at) = g.edge(start);
        let mut vertices = vec![first];
        let mut edges = vec![start];
        used[start] = true;
        while at != first {
            vertices.push(at);
            let &(next, e) = g
                .incident(at)
                .iter()
                .find(|&&(_, e)| in_subgraph[e] && !used[e])
                .expect("degree 2 at every visited vertex");
            used[e] = true;
            edges.push(e);
            at = next;
        }
        out.push((vertices, edges));
    }
    out
}

fn two_simultaneous(g: &Graph, sc: &SimultaneousColoring) -> Result<()> {
    if sc.mu() != 2 {
        return Err(Error::NotTwoSimultaneous(format!("mu = {}", sc.mu())));
    }
    verify_simultaneous(g, sc).map_err(|v| Error::NotTwoSimultaneous(v.to_string()))
}

fn x_side(g: &Graph) -> Result<Vec<bool>> {
    let x = match g.bipartition() {
        Some((x, _)) => x,
        None => is_bipartite(g).ok_or(Error::NotBipartite)?.0,
    };
    let mut side = vec![false; g.vertex_count()];
    for v in x {
        side[v] = true;
    }
    Ok(side)
}

/// Class `j - 1` holds the circuits of `f_1^j ∪ f_2^j`; each step is colored
/// `i` where `f_i(e) = j`.
pub fn se_to_cdc(g: &Graph, sc: &SimultaneousColoring) -> Result<CycleDoubleCover> {
    two_simultaneous(g, sc)?;
    let (f1, f2) = (&sc.colorings[0], &sc.colorings[1]);
    let mut cover = CycleDoubleCover { classes: Some(Vec::new()), circuit_colorings: Some(Vec::new()), ..Default::default() };
    for j in sc.used_colors() {
        let mask: Vec<bool> = (0..g.edge_count()).map(|e| f1[e] == j || f2[e] == j).collect();
        for (vertices, edges) in circuits_of(g, &mask) {
            let coloring = edges.iter().map(|&e| if f1[e] == j { 1 } else { 2 }).collect();
            cover.circuits.push(Circuit::new(vertices));
            cover.classes.as_mut().unwrap().push(j as usize - 1);
            cover.circuit_colorings.as_mut().unwrap().push(coloring);
        }
    }
    Ok(cover)
}

/// Union-find over booleans with parity constraints `b_x xor b_y = p`.
struct ParityUnionFind {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        ParityUnionFind { parent: (0..n).collect(), parity: vec![false; n] }
    }

    /// Root of `x` and the parity of `x` relative to it.
    fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, up) = self.find(p);
        self.parent[x] = root;
        self.parity[x] ^= up;
        (root, self.parity[x])
    }

    /// False when the constraint contradicts earlier ones.
    fn relate(&mut self, x: usize, y: usize, p: bool) -> bool {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            return px ^ py == p;
        }
        self.parent[rx] = ry;
        self.parity[rx] = px ^ py ^ p;
        true
    }
}

/// Decides whether the circuits of a classed even CDC can be 2-colored so
/// that the two circuits through every edge give it different colors; if
/// so, `f_i(e)` is the class of the circuit coloring `e` with `i`. `Ok(None)`
/// means the parity system is inconsistent.
pub fn cdc_to_se(g: &Graph, cover: &CycleDoubleCover, budget: &mut Budget) -> Result<Option<SimultaneousColoring>> {
    verify_cdc(g, cover).map_err(|v| Error::InvalidCover(v.to_string()))?;
    if let Some(c) = cover.circuits.iter().find(|c| !c.is_even()) {
        return Err(Error::OddCircuit(c.len()));
    }
    let classes = cover.classes.as_ref().ok_or_else(|| Error::InvalidCover("no class partition".into()))?;
    let mut labels = classes.clone();
    labels.sort_unstable();
    labels.dedup();
    let needed = if g.edge_count() == 0 { 0 } else { chromatic_index(g, budget)? };
    if labels.len() < needed {
        return Err(Error::TooFewClasses { classes: labels.len(), needed });
    }

    // (circuit, step) pairs covering each edge
    let mut at: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.edge_count()];
    for (c, circuit) in cover.circuits.iter().enumerate() {
        for (i, e) in circuit.edges_in(g).expect("verified").into_iter().enumerate() {
            at[e].push((c, i));
        }
    }
    // step i of circuit c gets color 1 + ((i + b_c) mod 2)
    let mut uf = ParityUnionFind::new(cover.circuits.len());
    for pair in &at {
        let [(c1, i1), (c2, i2)] = [pair[0], pair[1]];
        if !uf.relate(c1, c2, (i1 + i2) % 2 == 0) {
            return Ok(None);
        }
    }
    let flip: Vec<bool> = (0..cover.circuits.len()).map(|c| uf.find(c).1).collect();
    let color_of = |c: usize| labels.binary_search(&classes[c]).unwrap() as u32 + 1;
    let mut f = [vec![0; g.edge_count()], vec![0; g.edge_count()]];
    for (e, pair) in at.iter().enumerate() {
        for &(c, i) in pair {
            let which = (i + flip[c] as usize) % 2;
            f[which][e] = color_of(c);
        }
    }
    let [f1, f2] = f;
    let sc = SimultaneousColoring { num_colors: labels.len() as u32, colorings: vec![f1, f2] };
    verify_simultaneous(g, &sc).map_err(|v| Error::InvalidCover(v.to_string()))?;
    Ok(Some(sc))
}

/// [`cdc_to_se`] for an unclassed even CDC: every circuit starts in its own
/// class, then circuits are merged greedily into the first class they are
/// vertex-disjoint from.
pub fn cdc_to_se_auto(g: &Graph, circuits: &[Circuit], budget: &mut Budget) -> Result<Option<SimultaneousColoring>> {
    let singletons = CycleDoubleCover {
        circuits: circuits.to_vec(),
        classes: Some((0..circuits.len()).collect()),
        circuit_colorings: None,
    };
    if cdc_to_se(g, &singletons, budget)?.is_none() {
        return Ok(None);
    }
    let mut occupied: Vec<Vec<bool>> = Vec::new();
    let mut classes = Vec::with_capacity(circuits.len());
    for c in circuits {
        let slot = occupied.iter().position(|occ| c.vertices.iter().all(|&v| !occ[v])).unwrap_or_else(|| {
            occupied.push(vec![false; g.vertex_count()]);
            occupied.len() - 1
        });
        for &v in &c.vertices {
            occupied[slot][v] = true;
        }
        classes.push(slot);
    }
    let merged = CycleDoubleCover { circuits: circuits.to_vec(), classes: Some(classes), circuit_colorings: None };
    cdc_to_se(g, &merged, budget)
}

/// Orients each circuit of `f_1^j ∪ f_2^j` so `f_1^j` edges run X to Y and
/// `f_2^j` edges run Y to X.
pub fn se_to_ocdc_bipartite(g: &Graph, sc: &SimultaneousColoring) -> Result<OrientedCdc> {
    let side = x_side(g)?;
    two_simultaneous(g, sc)?;
    let (f1, f2) = (&sc.colorings[0], &sc.colorings[1]);
    let mut circuits = Vec::new();
    for j in sc.used_colors() {
        let mask: Vec<bool> = (0..g.edge_count()).map(|e| f1[e] == j || f2[e] == j).collect();
        for (mut vertices, edges) in circuits_of(g, &mask) {
            if side[vertices[0]] != (f1[edges[0]] == j) {
                vertices[1..].reverse();
            }
            circuits.push(Circuit::new(vertices));
        }
    }
    Ok(OrientedCdc { circuits })
}

/// Numbers the directed circuits `1..=t`; `f_1(e)` is the circuit running
/// `e` from X to Y and `f_2(e)` the one running it from Y to X.
pub fn ocdc_to_se_bipartite(g: &Graph, cover: &OrientedCdc) -> Result<SimultaneousColoring> {
    let side = x_side(g)?;
    verify_ocdc(g, cover).map_err(|v| Error::InvalidCover(v.to_string()))?;
    let mut f = [vec![0; g.edge_count()], vec![0; g.edge_count()]];
    for (index, c) in cover.circuits.iter().enumerate() {
        for ((a, b), e) in c.steps().zip(c.edges_in(g).expect("verified")) {
            debug_assert_ne!(side[a], side[b]);
            f[if side[a] { 0 } else { 1 }][e] = index as u32 + 1;
        }
    }
    let [f1, f2] = f;
    let sc = SimultaneousColoring { num_colors: cover.circuits.len() as u32, colorings: vec![f1, f2] };
    verify_simultaneous(g, &sc).map_err(|v| Error::InvalidCover(v.to_string()))?;
    Ok(sc)
}
