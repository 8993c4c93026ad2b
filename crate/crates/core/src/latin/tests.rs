use super::*;
use crate::constructions::color_one_factorable;
use crate::graph::families::*;

fn intercalate() -> LatinTrade {
    LatinTrade {
        squares: vec![PartialLatinSquare::from_rows(&["1 2", "2 1"]), PartialLatinSquare::from_rows(&["2 1", "1 2"])],
        symmetric: false,
    }
}

fn bitrade_volume_10() -> LatinTrade {
    LatinTrade {
        squares: vec![
            PartialLatinSquare::from_rows(&["1 2 . .", "2 4 3 .", ". 1 4 3", "3 . . 1"]),
            PartialLatinSquare::from_rows(&["2 1 . .", "3 2 4 .", ". 4 3 1", "1 . . 3"]),
        ],
        symmetric: false,
    }
}

fn klein_symmetric() -> LatinTrade {
    let square = |t: u32| {
        let mut p = PartialLatinSquare::new(4, 4);
        for i in 0..4usize {
            for j in 0..4usize {
                if i != j {
                    p.cells.insert((i, j), ((i ^ j) as u32 - 1 + t) % 3 + 1);
                }
            }
        }
        p
    };
    LatinTrade { squares: (0..3).map(square).collect(), symmetric: true }
}

#[test]
fn verify_examples() {
    assert_eq!(verify_trade(&intercalate()), Ok(()));
    assert_eq!(verify_trade(&bitrade_volume_10()), Ok(()));
    assert_eq!(bitrade_volume_10().volume(), 10);
    let mut same = intercalate();
    same.squares[1] = same.squares[0].clone();
    assert_eq!(verify_trade(&same), Err(TradeViolation::CellRepeat { cell: (0, 0), symbol: 1 }));
    assert_eq!(verify_trade(&klein_symmetric()), Ok(()));
    let one = LatinTrade { squares: vec![PartialLatinSquare::from_rows(&["1"])], symmetric: false };
    assert_eq!(verify_trade(&one), Err(TradeViolation::TooFewSquares(1)));
}

#[test]
fn cyclic_squares_without_diagonal_are_not_a_trade() {
    let square = |t: usize| {
        let mut p = PartialLatinSquare::new(4, 4);
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    p.cells.insert((i, j), ((i + j + t) % 4) as u32 + 1);
                }
            }
        }
        p
    };
    let t = LatinTrade { squares: (0..3).map(square).collect(), symmetric: true };
    assert!(matches!(verify_trade(&t), Err(TradeViolation::RowSets { .. })));
}

#[test]
fn intercalate_is_the_four_cycle() {
    let (g, sc) = trade_to_graph(&intercalate(), false).unwrap();
    assert_eq!(g.edges(), complete_bipartite(2, 2).edges());
    assert_eq!(sc.num_colors, 2);
    assert_eq!(coloring_to_trade(&g, &sc, false).unwrap(), intercalate());
}

#[test]
fn volume_ten_bitrade_is_the_small_graph() {
    let t = bitrade_volume_10();
    let (g, sc) = trade_to_graph(&t, false).unwrap();
    assert_eq!(g.edges(), bitrade10().edges());
    assert_eq!(g.degrees(), vec![2, 3, 3, 2, 3, 3, 2, 2]);
    assert_eq!(sc.num_colors, 4);
    assert_eq!(coloring_to_trade(&bitrade10(), &sc, false).unwrap(), t);
}

#[test]
fn symmetric_translations() {
    let k4 = complete(4);
    let sc = color_one_factorable(&k4, 2, &mut Budget::default()).unwrap();
    let t = coloring_to_trade(&k4, &sc, true).unwrap();
    assert_eq!(verify_trade(&t), Ok(()));
    assert_eq!(t.volume(), 12);
    let (g, back) = trade_to_graph(&t, true).unwrap();
    assert_eq!(g, k4);
    assert_eq!(back, sc);

    let (g, sc) = trade_to_graph(&klein_symmetric(), true).unwrap();
    assert_eq!(g, k4);
    assert_eq!(sc.mu(), 3);
    assert_eq!(coloring_to_trade(&g, &sc, true).unwrap(), klein_symmetric());

    assert!(matches!(trade_to_graph(&bitrade_volume_10(), true), Err(Error::NotSymmetric(_))));
    assert!(matches!(coloring_to_trade(&k4, &sc, false), Err(Error::NotBipartite)));
}

#[test]
fn row_sets_and_palettes_fail_together() {
    let base = bitrade_volume_10();
    let cells: Vec<(usize, usize)> = base.squares[0].cells.keys().copied().collect();
    for &(i, j) in &cells {
        for k in 1..=5 {
            let mut t = base.clone();
            t.squares[1].cells.insert((i, j), k);
            let trade_ok = verify_trade(&t).is_ok();
            // the same perturbation applied to the coloring
            let (g, mut sc) = trade_to_graph(&base, false).unwrap();
            let e = g.edge_index(i, 4 + j).unwrap();
            sc.colorings[1][e] = k;
            sc.num_colors = sc.num_colors.max(k);
            assert_eq!(trade_ok, verify_simultaneous(&g, &sc).is_ok(), "cell ({i},{j}) -> {k}");
        }
    }
}

#[test]
fn three_way_trade_of_volume_nine() {
    let square = |t: usize| {
        let mut p = PartialLatinSquare::new(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                p.cells.insert((i, j), ((i + j + t) % 3) as u32 + 1);
            }
        }
        p
    };
    let t = LatinTrade { squares: (0..3).map(square).collect(), symmetric: false };
    assert_eq!(verify_trade(&t), Ok(()));
    assert_eq!(t.volume(), 9);
}

#[test]
fn small_spectra() {
    let s = spectrum_scan(2, 6, &mut Budget::default()).unwrap();
    assert_eq!(s, BTreeSet::from([4, 6]));
    assert!(spectrum_scan(3, 8, &mut Budget::default()).unwrap().is_empty());
}
