//! Claim-by-claim reproduction table for `secolor repro`.

use std::collections::BTreeSet;

use anyhow::{ensure, Result};
use secolor_core::cdc::{cdc_to_se, cdc_to_se_auto, enumerate_even_cdcs, even_circuit_decomposition, find_nzf};
use secolor_core::cdc::{ocdc_to_se_bipartite, se_to_cdc, se_to_ocdc_bipartite, verify_cdc, verify_ocdc};
use secolor_core::coloring::{check_girth_bound, chromatic_index, decide_mu_se, se_chromatic_number, verify_simultaneous};
use secolor_core::constructions as build;
use secolor_core::families::*;
use secolor_core::graph::{
    bridges, connected_graphs_up_to, edge_connectivity, girth, is_bipartite, is_connected, join, subdivide_edge,
};
use secolor_core::latin::{coloring_to_trade, spectrum_scan, trade_to_graph};
use secolor_core::realize::{realize_bipartite, realize_connected};
use secolor_core::{Budget, CycleDoubleCover, DegreeSequence, Graph, SimultaneousColoring};

pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub check: fn(&mut Budget) -> Result<String>,
}

pub const CLAIMS: &[Claim] = &[
    Claim { id: "1", statement: "bitrade10: chromatic index 3, 2-SE number 4", check: small_bitrade_graph },
    Claim { id: "2", statement: "K7 and K9 tables are 3-SE colorings", check: tables },
    Claim { id: "3", statement: "K5: one even CDC, parity fails, no 2-SE for l <= 10", check: k5 },
    Claim { id: "4", statement: "Petersen: no 4-NZF, no usable even CDC", check: petersen_claim },
    Claim { id: "5", statement: "spectra: S2 up to 8 = {4,6,7,8}, S3 up to 9 = {9}", check: spectra },
    Claim { id: "6", statement: "(3,3,3,4;3,3,3,4) graph has no 3-SE for l <= 13", check: non_example },
    Claim { id: "7", statement: "construction matrix verifies", check: constructions },
    Claim { id: "8", statement: "trade, CDC and OCDC round trips", check: round_trips },
    Claim { id: "9", statement: "mu-edge-connected realizations", check: realizations },
    Claim { id: "10", statement: "search agrees with brute force and decompositions", check: oracles },
    Claim { id: "11", statement: "mu <= delta and girth bound never contradicted", check: properties },
];

fn small_bitrade_graph(b: &mut Budget) -> Result<String> {
    let g = bitrade10();
    ensure!(chromatic_index(&g, b)? == 3, "chromatic index");
    ensure!(decide_mu_se(&g, 2, 3, b)?.is_none(), "3 colors suffice");
    let (l, _) = se_chromatic_number(&g, 2, 6, b)?.ok_or_else(|| anyhow::anyhow!("none up to 6"))?;
    ensure!(l == 4, "2-SE number {l}");
    Ok("chi' = 3, chi'_2SE = 4".into())
}

fn tables(_: &mut Budget) -> Result<String> {
    for n in [7, 9] {
        let issues = build::table_discrepancies(n).unwrap();
        ensure!(issues.is_empty(), "K{n}: {}", issues.join("; "));
        let sc = build::embedded_table(n).unwrap();
        verify_simultaneous(&complete(n), &sc).map_err(|v| anyhow::anyhow!("K{n}: {v}"))?;
        ensure!(sc.num_colors as usize == n && sc.mu() == 3);
    }
    Ok("both verify as printed".into())
}

fn k5(b: &mut Budget) -> Result<String> {
    let g = complete(5);
    let found = enumerate_even_cdcs(&g, 10_000, b)?;
    ensure!(found.up_to_automorphism.len() == 1, "{} classes", found.up_to_automorphism.len());
    let mut cover = found.up_to_automorphism[0].clone();
    ensure!(cover.length_profile() == vec![4; 5]);
    cover.classes = Some((0..cover.circuits.len()).collect());
    ensure!(cdc_to_se(&g, &cover, b)?.is_none(), "parity consistent");
    for l in 4..=10 {
        ensure!(decide_mu_se(&g, 2, l, b)?.is_none(), "2-SE with {l} colors");
    }
    Ok(format!("{} labelled covers, 1 class", found.labelled))
}

fn petersen_claim(b: &mut Budget) -> Result<String> {
    let g = petersen();
    ensure!(find_nzf(&g, 4, b)?.is_none(), "4-NZF found");
    let found = enumerate_even_cdcs(&g, 10_000, b)?;
    for c in &found.up_to_automorphism {
        ensure!(c.length_profile() == vec![8, 8, 8, 6], "profile {:?}", c.length_profile());
        ensure!(cdc_to_se_auto(&g, &c.circuits, b)?.is_none());
    }
    Ok(format!("no 4-NZF; {} even CDCs", found.labelled))
}

fn spectra(b: &mut Budget) -> Result<String> {
    let s2 = spectrum_scan(2, 8, b)?;
    ensure!(s2 == BTreeSet::from([4, 6, 7, 8]), "S2 {s2:?}");
    let s3 = spectrum_scan(3, 9, b)?;
    ensure!(s3 == BTreeSet::from([9]), "S3 {s3:?}");
    Ok("{4,6,7,8} and {9}".into())
}

fn non_example(b: &mut Budget) -> Result<String> {
    let g = k44_minus_matching_plus_edge();
    ensure!(edge_connectivity(&g)?.0 == 3);
    for l in 1..=13 {
        ensure!(decide_mu_se(&g, 3, l, b)?.is_none(), "3-SE with {l} colors");
    }
    Ok("absent for every l <= 13".into())
}

fn ok(g: &Graph, sc: &SimultaneousColoring) -> Result<()> {
    verify_simultaneous(g, sc).map_err(|v| anyhow::anyhow!("{v}"))
}

/// Catalog graphs with a least-color μ-SE coloring.
fn colored_catalog(mu: usize, max_vertices: usize, b: &mut Budget) -> Result<Vec<(Graph, SimultaneousColoring)>> {
    let mut out = Vec::new();
    for (_, g) in catalog() {
        if g.vertex_count() > max_vertices || g.min_degree() < mu {
            continue;
        }
        if let Some((_, sc)) = se_chromatic_number(&g, mu, g.edge_count() as u32, b)? {
            out.push((g, sc));
        }
    }
    Ok(out)
}

fn constructions(b: &mut Budget) -> Result<String> {
    let mut checked = 0;
    for n in 3..=12 {
        let (g, sc) = build::color_wheel(n)?;
        ok(&g, &sc)?;
        ensure!(sc.num_colors as usize == n);
        checked += 1;
    }
    for n in 2..=8 {
        for m in n..=8 {
            for mu in 1..=n {
                let sc = build::color_complete_bipartite(n, m, mu)?;
                ok(&complete_bipartite(n, m), &sc)?;
                ensure!(sc.used_colors().len() == m);
                checked += 1;
            }
        }
    }
    for n in [4, 6, 7, 8, 9, 10, 11, 12, 13] {
        for mu in [2, 3] {
            ok(&complete(n), &build::color_complete(n, mu, b)?.0)?;
            checked += 1;
        }
    }
    for mu in [2, 3] {
        let ops = colored_catalog(mu, 6, b)?;
        for (g, sg) in &ops {
            for (h, sh) in &ops {
                if mu <= g.vertex_count().min(h.vertex_count()) {
                    let (j, sc) = build::color_join(g, sg, h, sh)?;
                    ok(&j, &sc)?;
                }
                let (p, sc) = build::color_cartesian_sum(g, sg, h, sh)?;
                ok(&p, &sc)?;
                if mu <= h.vertex_count() {
                    let (l, sc) = build::color_lexicographic(g, h, sh, b)?;
                    ok(&l, &sc)?;
                }
                checked += 3;
            }
        }
    }
    for (_, g) in catalog() {
        for (_, h) in catalog() {
            let (Some(r), Some(s)) = (g.regular_degree(), h.regular_degree()) else { continue };
            if g.vertex_count() * h.vertex_count() > 60 || h.vertex_count() % 2 == 1 {
                continue;
            }
            let (p, sc) = match build::color_cartesian_regular(&g, &h, (r + s).min(3), b) {
                Err(secolor_core::Error::NotOneFactorable) => continue,
                other => other?,
            };
            ok(&p, &sc)?;
            checked += 1;
        }
    }
    for (g, sc) in colored_catalog(2, 10, b)? {
        for k in 1..=3 {
            let (u, v) = g.edge(0);
            let (s, ssc) = build::subdivide_coloring(&g, &sc, u, v, k)?;
            ok(&s, &ssc)?;
            checked += 1;
        }
    }
    Ok(format!("{checked} outputs verified"))
}

fn round_trips(b: &mut Budget) -> Result<String> {
    let mut checked = 0;
    for (g, sc) in colored_catalog(2, 10, b)? {
        if is_bipartite(&g).is_some() {
            let t = coloring_to_trade(&g, &sc, false)?;
            let (g2, sc2) = trade_to_graph(&t, false)?;
            ensure!(coloring_to_trade(&g2, &sc2, false)? == t);
            let o = se_to_ocdc_bipartite(&g, &sc)?;
            verify_ocdc(&g, &o).map_err(|v| anyhow::anyhow!("{v}"))?;
            ok(&g, &ocdc_to_se_bipartite(&g, &o)?)?;
        }
        let cover = se_to_cdc(&g, &sc)?;
        verify_cdc(&g, &cover).map_err(|v| anyhow::anyhow!("{v}"))?;
        let back = cdc_to_se(&g, &cover, b)?.ok_or_else(|| anyhow::anyhow!("parity failed on a coloring's cover"))?;
        ensure!(classes(&se_to_cdc(&g, &back)?) == classes(&cover));
        checked += 1;
    }
    Ok(format!("{checked} colorings"))
}

fn classes(c: &CycleDoubleCover) -> BTreeSet<BTreeSet<Vec<usize>>> {
    let labels = c.classes.clone().unwrap_or_default();
    let distinct: BTreeSet<usize> = labels.iter().copied().collect();
    distinct
        .into_iter()
        .map(|l| {
            c.circuits.iter().zip(&labels).filter(|(_, &x)| x == l).map(|(k, _)| k.normalized().vertices).collect()
        })
        .collect()
}

fn realizations(b: &mut Budget) -> Result<String> {
    let s: DegreeSequence = "3,3,3,4;3,3,3,4".parse()?;
    let g = realize_connected(&s, 3, b)?;
    ensure!(edge_connectivity(&g)?.0 >= 3 && DegreeSequence::of_graph(&g) == Some(s));
    // deterministic sequence generator: 100 graphic sequences
    let mut state = 0x2545_f491_4f6c_dd1du64;
    let mut next = |bound: usize| {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % bound as u64) as usize
    };
    let mut done = 0;
    while done < 100 {
        let mu = 2 + next(2);
        let nx = mu + next(7 - mu);
        let ny = mu + next(7 - mu);
        let x: Vec<usize> = (0..nx).map(|_| mu + next(ny - mu + 1)).collect();
        let y: Vec<usize> = (0..ny).map(|_| mu + next(nx - mu + 1)).collect();
        let s = DegreeSequence::bipartite(x, y);
        if realize_bipartite(&s)?.is_none() {
            continue;
        }
        let g = realize_connected(&s, mu, b)?;
        ensure!(edge_connectivity(&g)?.0 >= mu && DegreeSequence::of_graph(&g) == Some(s.clone()), "{s}");
        done += 1;
    }
    Ok("100 random sequences reach their target".into())
}

/// Brute force: every proper first coloring (colors in order of first use),
/// then any second coloring drawing each edge from the shared palette.
fn brute_two_se(g: &Graph, l: u32) -> bool {
    fn second(g: &Graph, f1: &[u32], f2: &mut Vec<u32>, e: usize) -> bool {
        if e == g.edge_count() {
            return true;
        }
        let (u, v) = g.edge(e);
        let pal = |w: usize| -> BTreeSet<u32> { g.incident(w).iter().map(|&(_, x)| f1[x]).collect() };
        let (pu, pv) = (pal(u), pal(v));
        for c in pu.intersection(&pv).copied() {
            let clash = |w: usize| g.incident(w).iter().any(|&(_, x)| x < e && f2[x] == c);
            if c == f1[e] || clash(u) || clash(v) {
                continue;
            }
            f2.push(c);
            if second(g, f1, f2, e + 1) {
                return true;
            }
            f2.pop();
        }
        false
    }
    fn first(g: &Graph, l: u32, f1: &mut Vec<u32>, e: usize) -> bool {
        if e == g.edge_count() {
            return second(g, f1, &mut Vec::new(), 0);
        }
        let (u, v) = g.edge(e);
        let top = f1.iter().copied().max().unwrap_or(0);
        for c in 1..=l.min(top + 1) {
            let clash = |w: usize| g.incident(w).iter().any(|&(_, x)| x < e && f1[x] == c);
            if clash(u) || clash(v) {
                continue;
            }
            f1.push(c);
            if first(g, l, f1, e + 1) {
                return true;
            }
            f1.pop();
        }
        false
    }
    first(g, l, &mut Vec::new(), 0)
}

fn oracles(b: &mut Budget) -> Result<String> {
    let mut graphs = 0;
    for level in connected_graphs_up_to(7) {
        for form in level {
            let g = form.to_graph();
            for l in 1..=g.edge_count() as u32 {
                ensure!(decide_mu_se(&g, 2, l, b)?.is_some() == brute_two_se(&g, l), "{g:?} with {l} colors");
            }
            graphs += 1;
        }
    }
    let mut even = 0;
    for level in connected_graphs_up_to(10) {
        for form in level {
            let g = form.to_graph();
            if !g.is_even() {
                continue;
            }
            let se = decide_mu_se(&g, 2, g.edge_count() as u32, b)?.is_some();
            let dec = even_circuit_decomposition(&g, b)?.is_some();
            ensure!(!dec || se, "{g:?} decomposes into even circuits but has no 2-SE coloring");
            ensure!(!se || dec, "{g:?} is 2-SE colorable with no even circuit decomposition");
            even += 1;
        }
    }
    Ok(format!("{graphs} graphs against brute force, {even} even graphs"))
}

fn properties(b: &mut Budget) -> Result<String> {
    let mut corpus: Vec<Graph> = catalog().into_iter().map(|(_, g)| g).collect();
    corpus.push(heawood());
    corpus.push(subdivide_edge(&complete_bipartite(3, 3), 0, 3, 2)?);
    corpus.push(join(&cycle(4), &cycle(4)));
    let mut probes = 0;
    for g in &corpus {
        for mu in 1..=3 {
            if let Some((_, sc)) = se_chromatic_number(g, mu, g.edge_count() as u32, b)? {
                ensure!(mu <= g.min_degree(), "{g:?} has a {mu}-SE coloring");
                if mu == 2 && bridges(g).is_empty() && is_connected(g) {
                    let gi = girth(g).unwrap_or(usize::MAX);
                    for k in 2..=(gi.saturating_add(1) / 2).min(6) {
                        ensure!(check_girth_bound(g, &sc, k, b)?, "{g:?} k={k}");
                        probes += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{} graphs, {probes} girth probes", corpus.len()))
}
