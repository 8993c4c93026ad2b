//! Named graphs and standard families. Numbering is documented per builder
//! and is part of the contract: colorings built on these graphs are
//! reproducible bit-for-bit.

use super::{join, Graph};

pub fn empty(n: usize) -> Graph {
    Graph::empty(n)
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges).unwrap()
}

/// X = `0..n`, Y = `n..n+m`; the bipartition is attached.
pub fn complete_bipartite(n: usize, m: usize) -> Graph {
    let edges = (0..n).flat_map(|i| (0..m).map(move |j| (i, n + j)));
    let x: Vec<usize> = (0..n).collect();
    Graph::new(n + m, edges).unwrap().with_bipartition(&x).unwrap()
}

/// Circuit `0 - 1 - ... - (n-1) - 0`; bipartition attached for even `n`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a circuit needs at least 3 vertices");
    let g = Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
    if n.is_multiple_of(2) {
        let x: Vec<usize> = (0..n).step_by(2).collect();
        g.with_bipartition(&x).unwrap()
    } else {
        g
    }
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// `C_n ∨ K_1`: rim vertices `0..n` in circuit order, hub `n`.
pub fn wheel(n: usize) -> Graph {
    join(&cycle(n), &complete(1))
}

/// Vertex `i` adjacent to `i ± s (mod n)` for every jump `s`.
pub fn circulant(n: usize, jumps: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for &s in jumps {
            let j = (i + s) % n;
            if i < j && !edges.contains(&(i, j)) {
                edges.push((i, j));
            } else if j < i && !edges.contains(&(j, i)) {
                edges.push((j, i));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Outer 5-circuit `0..5`, spokes `i - i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::new(10, edges).unwrap()
}

/// Heawood graph: 14-circuit plus chords `i - i+5` for even `i`.
pub fn heawood() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    for i in (0..14).step_by(2) {
        edges.push((i, (i + 5) % 14));
    }
    let x: Vec<usize> = (0..14).step_by(2).collect();
    Graph::new(14, edges).unwrap().with_bipartition(&x).unwrap()
}

/// `Q_d` on `0..2^d`, `u ~ v` iff `u xor v` is a power of two.
pub fn hypercube(d: usize) -> Graph {
    let n = 1usize << d;
    let edges = (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b)))).filter(|&(u, v)| u < v);
    let x: Vec<usize> = (0..n).filter(|v| v.count_ones() % 2 == 0).collect();
    Graph::new(n, edges).unwrap().with_bipartition(&x).unwrap()
}

/// The graph of the volume-10 Latin bitrade: rows `x_1..x_4` are `0..4`,
/// columns `y_1..y_4` are `4..8`. Chromatic index 3, but no 2-simultaneous
/// coloring with 3 colors.
pub fn bitrade10() -> Graph {
    let cells: [(usize, usize); 10] =
        [(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 0), (3, 3)];
    let edges = cells.iter().map(|&(r, c)| (r, 4 + c));
    Graph::new(8, edges).unwrap().with_bipartition(&[0, 1, 2, 3]).unwrap()
}

/// `K_{4,4}` minus the matching `x_i y_i`, plus `x_4 y_4`: bipartite degree
/// sequence `(3,3,3,4; 3,3,3,4)`, 3-edge-connected, not 3-simultaneous
/// edge colorable.
pub fn k44_minus_matching_plus_edge() -> Graph {
    let mut edges = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i != j || i == 3 {
                edges.push((i, 4 + j));
            }
        }
    }
    Graph::new(8, edges).unwrap().with_bipartition(&[0, 1, 2, 3]).unwrap()
}

/// Named small graphs (at most 10 vertices) used as test and demo inputs.
pub fn catalog() -> Vec<(&'static str, Graph)> {
    vec![
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("C6", cycle(6)),
        ("C8", cycle(8)),
        ("K4", complete(4)),
        ("K5", complete(5)),
        ("K6", complete(6)),
        ("K2,3", complete_bipartite(2, 3)),
        ("K2,4", complete_bipartite(2, 4)),
        ("K3,3", complete_bipartite(3, 3)),
        ("K3,4", complete_bipartite(3, 4)),
        ("K4,4", complete_bipartite(4, 4)),
        ("Q3", hypercube(3)),
        ("W4", wheel(4)),
        ("W5", wheel(5)),
        ("prism3", circulant(6, &[2, 3])),
        ("C8(1,3)", circulant(8, &[1, 3])),
        ("Petersen", petersen()),
        ("bitrade10", bitrade10()),
        ("K44-M+e", k44_minus_matching_plus_edge()),
    ]
}
