use super::*;
use crate::coloring::chromatic_index;
use crate::graph::families::*;

fn budget() -> Budget {
    Budget::default()
}

fn valid(g: &Graph, sc: &SimultaneousColoring) {
    assert_eq!(verify_simultaneous(g, sc), Ok(()));
}

#[test]
fn one_factorable_examples() {
    for (g, mu, r) in [(complete(4), 3, 3), (hypercube(3), 3, 3), (complete(6), 5, 5)] {
        let sc = color_one_factorable(&g, mu, &mut budget()).unwrap();
        valid(&g, &sc);
        assert_eq!(sc.num_colors, r);
        let full: std::collections::BTreeSet<u32> = (1..=r).collect();
        for v in 0..g.vertex_count() {
            assert_eq!(sc.palette(&g, 0, v), full);
        }
    }
    assert_eq!(color_one_factorable(&complete(4), 4, &mut budget()), Err(Error::MuTooLarge { mu: 4, max: 3 }));
    assert_eq!(color_one_factorable(&complete(5), 2, &mut budget()), Err(Error::NotOneFactorable));
}

#[test]
fn complete_bipartite_formula() {
    let sc = color_complete_bipartite(2, 3, 2).unwrap();
    let g = complete_bipartite(2, 3);
    let row = |t: usize| -> Vec<u32> { (2..5).map(|y| sc.colorings[t][g.edge_index(0, y).unwrap()]).collect() };
    assert_eq!(row(0), vec![1, 2, 3]);
    assert_eq!(row(1), vec![2, 3, 1]);
    for n in 2..=6 {
        for m in 2..=6 {
            for mu in 1..=n.min(m) {
                let sc = color_complete_bipartite(n, m, mu).unwrap();
                valid(&complete_bipartite(n, m), &sc);
                assert_eq!(sc.used_colors().len(), n.max(m));
            }
        }
    }
    assert_eq!(color_complete_bipartite(2, 4, 3), Err(Error::MuTooLarge { mu: 3, max: 2 }));
}

#[test]
fn join_examples() {
    let c4 = color_complete_bipartite(2, 2, 2).unwrap();
    let g = complete_bipartite(2, 2);
    let (j, sc) = color_join(&g, &c4, &g, &c4).unwrap();
    assert_eq!(j.vertex_count(), 8);
    assert_eq!(sc.num_colors, 6);

    let k4 = color_one_factorable(&complete(4), 2, &mut budget()).unwrap();
    let (k8, sc) = color_join(&complete(4), &k4, &complete(4), &k4).unwrap();
    assert_eq!(k8, complete(8));
    valid(&k8, &sc);

    let (k7, _) = color_complete(7, 3, &mut budget()).unwrap();
    let k4 = color_one_factorable(&complete(4), 3, &mut budget()).unwrap();
    let (k11, sc) = color_join(&complete(7), &k7, &complete(4), &k4).unwrap();
    assert_eq!(k11, complete(11));
    assert_eq!(sc.num_colors, 7 + 7);

    let k4 = color_one_factorable(&complete(4), 3, &mut budget()).unwrap();
    let c4 = color_complete_bipartite(2, 2, 2).unwrap();
    assert_eq!(
        color_join(&complete(4), &k4, &complete_bipartite(2, 2), &c4).unwrap_err(),
        Error::MuMismatch(3, 2)
    );
}

#[test]
fn cartesian_sum_examples() {
    let c4 = cycle(4);
    let sc4 = color_one_factorable(&c4, 2, &mut budget()).unwrap();
    let (p, sc) = color_cartesian_sum(&c4, &sc4, &c4, &sc4).unwrap();
    assert_eq!(p.edge_count(), 32);
    assert_eq!(sc.num_colors, 4);

    let c6 = cycle(6);
    let sc6 = color_one_factorable(&c6, 2, &mut budget()).unwrap();
    let k33 = complete_bipartite(3, 3);
    let sc33 = color_complete_bipartite(3, 3, 2).unwrap();
    let (_, sc) = color_cartesian_sum(&c6, &sc6, &k33, &sc33).unwrap();
    assert_eq!(sc.num_colors, 5);

    // mu = 1 is a sum of proper colorings
    let k2 = complete(2);
    let one = SimultaneousColoring { num_colors: 1, colorings: vec![vec![1]] };
    let (p, sc) = color_cartesian_sum(&k2, &one, &k2, &one).unwrap();
    assert_eq!(p.edge_count(), 4);
    assert_eq!(sc.num_colors, 2);
}

#[test]
fn cartesian_regular_examples() {
    assert_eq!(
        color_cartesian_regular(&cycle(4), &cycle(3), 2, &mut budget()).unwrap_err(),
        Error::NotOneFactorable
    );
    let (p, sc) = color_cartesian_regular(&cycle(3), &complete(2), 3, &mut budget()).unwrap();
    assert_eq!(p.regular_degree(), Some(3));
    assert_eq!(sc.num_colors, 3);
    let (p, sc) = color_cartesian_regular(&cycle(3), &cycle(4), 4, &mut budget()).unwrap();
    assert_eq!(p.regular_degree(), Some(4));
    assert_eq!(sc.num_colors, 4);
    let (_, sc) = color_cartesian_regular(&petersen(), &cycle(6), 5, &mut budget()).unwrap();
    assert_eq!(sc.num_colors, 5);
}

#[test]
fn lexicographic_examples() {
    let c4 = cycle(4);
    let sc4 = color_one_factorable(&c4, 2, &mut budget()).unwrap();
    let (p, sc) = color_lexicographic(&complete(2), &c4, &sc4, &mut budget()).unwrap();
    assert_eq!(p.edge_count(), 8 + 16);
    assert_eq!(sc.num_colors, 2 + 4);
    let (_, sc) = color_lexicographic(&cycle(3), &c4, &sc4, &mut budget()).unwrap();
    assert_eq!(sc.num_colors, 2 + 3 * 4);
    let (p, sc) = color_lexicographic(&empty(1), &c4, &sc4, &mut budget()).unwrap();
    assert_eq!(p.edges(), c4.edges());
    assert_eq!(sc, sc4);
}

#[test]
fn wheel_three_matches_formula() {
    let (g, sc) = color_wheel(3).unwrap();
    let hub = 3;
    let at = |t: usize, a: usize, b: usize| sc.colorings[t][g.edge_index(a, b).unwrap()];
    assert_eq!([at(0, hub, 0), at(0, hub, 1), at(0, hub, 2)], [1, 2, 3]);
    assert_eq!([at(0, 0, 1), at(0, 1, 2), at(0, 2, 0)], [3, 1, 2]);
    assert_eq!([at(1, hub, 0), at(1, hub, 1), at(1, hub, 2)], [3, 1, 2]);
    assert_eq!([at(1, 0, 1), at(1, 1, 2), at(1, 2, 0)], [2, 3, 1]);
}

#[test]
fn wheel_palettes() {
    for n in 3..=12 {
        let (g, sc) = color_wheel(n).unwrap();
        assert_eq!(sc.num_colors as usize, n);
        for i in 1..=n {
            let expected: std::collections::BTreeSet<u32> = (i..i + 3).map(|x| ((x - 1) % n) as u32 + 1).collect();
            for t in 0..2 {
                assert_eq!(sc.palette(&g, t, i - 1), expected, "n={n} i={i}");
            }
        }
    }
    assert!(color_wheel(2).is_err());
}

#[test]
fn complete_graphs() {
    for n in [2, 3, 5] {
        assert_eq!(color_complete(n, 2, &mut budget()).unwrap_err(), Error::NoSuchColoring);
    }
    let (sc, route) = color_complete(7, 3, &mut budget()).unwrap();
    assert_eq!(route, CompleteRoute::Table);
    assert_eq!(sc.num_colors, 7);
    assert_eq!(table_discrepancies(7), Some(vec![]));
    assert_eq!(table_discrepancies(9), Some(vec![]));
    let (sc, route) = color_complete(13, 3, &mut budget()).unwrap();
    assert_eq!(route, CompleteRoute::Join(9, 4));
    valid(&complete(13), &sc);
    for n in [4, 6, 7, 8, 9, 10, 11, 12, 13, 15] {
        for mu in [2, 3] {
            let (sc, _) = color_complete(n, mu, &mut budget()).unwrap();
            valid(&complete(n), &sc);
            assert_eq!(sc.mu(), mu);
        }
    }
    let (sc, _) = color_complete(5, 1, &mut budget()).unwrap();
    valid(&complete(5), &sc);
    assert_eq!(color_complete(9, 4, &mut budget()).unwrap_err(), Error::MuTooLarge { mu: 4, max: 3 });
}

#[test]
fn a_corrupted_table_entry_is_reported() {
    let mut sc = embedded_table(7).unwrap();
    let g = complete(7);
    sc.colorings[0][0] = sc.colorings[1][0];
    assert!(verify_simultaneous(&g, &sc).is_err());
}

#[test]
fn subdivision_examples() {
    let c4 = cycle(4);
    let sc4 = color_one_factorable(&c4, 2, &mut budget()).unwrap();
    let (g, sc) = subdivide_coloring(&c4, &sc4, 0, 1, 1).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (6, 6));
    assert_eq!(sc.used_colors().len(), 2);

    let k33 = complete_bipartite(3, 3);
    let sc33 = color_complete_bipartite(3, 3, 2).unwrap();
    let (g, sc) = subdivide_coloring(&k33, &sc33, 0, 3, 1).unwrap();
    assert_eq!(sc.used_colors().len(), 3);
    for v in 0..6 {
        assert_eq!(sc.palette(&g, 0, v), sc33.palette(&k33, 0, v));
    }

    let (w3, sw) = color_wheel(3).unwrap();
    let (g, sc) = subdivide_coloring(&w3, &sw, 0, 1, 2).unwrap();
    valid(&g, &sc);
    assert_eq!(subdivide_coloring(&w3, &sw, 0, 3, 0).unwrap_err(), Error::PreconditionViolated("k must be at least 1".into()));
    assert_eq!(subdivide_coloring(&c4, &sc4, 0, 2, 1).unwrap_err(), Error::EdgeNotFound(1, 3));
    let k4 = color_one_factorable(&complete(4), 3, &mut budget()).unwrap();
    assert!(matches!(subdivide_coloring(&complete(4), &k4, 0, 1, 1), Err(Error::NotTwoSimultaneous(_))));
}

#[test]
fn hamiltonian_examples() {
    let c6 = cycle(6);
    let sc = color_from_hamiltonian(&c6, &[0, 1, 2, 3, 4, 5], &mut budget()).unwrap();
    assert_eq!(sc.num_colors, 2);

    let k33 = complete_bipartite(3, 3);
    assert_eq!(
        color_from_hamiltonian(&k33, &[0, 3, 1, 4, 2, 5], &mut budget()).unwrap_err(),
        Error::NoOcdcFound { exhaustive: true }
    );

    let g = circulant(8, &[1, 3]);
    let sc = color_from_hamiltonian(&g, &[0, 1, 2, 3, 4, 5, 6, 7], &mut budget()).unwrap();
    valid(&g, &sc);
    assert_eq!(sc.num_colors, 4);

    assert_eq!(color_from_hamiltonian(&cycle(5), &[0, 1, 2, 3, 4], &mut budget()).unwrap_err(), Error::OddCircuit(5));
    assert_eq!(color_from_hamiltonian(&c6, &[0, 2, 1, 3, 4, 5], &mut budget()).unwrap_err(), Error::NotHamiltonian);
    assert_eq!(color_from_hamiltonian(&c6, &[0, 1, 2], &mut budget()).unwrap_err(), Error::NotHamiltonian);
    // K4 minus a Hamiltonian 4-circuit leaves a matching, which is not bridgeless
    assert_eq!(
        color_from_hamiltonian(&complete(4), &[0, 1, 2, 3], &mut budget()).unwrap_err(),
        Error::NoOcdcFound { exhaustive: true }
    );
    // a triangle left over after removing the circuit
    let g = cycle(6).without_bipartition().add_edges([(0, 2), (2, 4), (0, 4)]).unwrap();
    assert_eq!(color_from_hamiltonian(&g, &[0, 1, 2, 3, 4, 5], &mut budget()).unwrap_err(), Error::ResidualNotBipartite);
}

#[test]
fn lexicographic_uses_an_optimal_coloring_of_the_base() {
    let g = petersen();
    let c3 = cycle(4);
    let sc = color_one_factorable(&c3, 2, &mut budget()).unwrap();
    let (_, out) = color_lexicographic(&g, &c3, &sc, &mut budget()).unwrap();
    let chi = chromatic_index(&g, &mut budget()).unwrap() as u32;
    assert_eq!(out.num_colors, 2 + chi * 4);
}
