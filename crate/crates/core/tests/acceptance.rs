//! End-to-end acceptance run. Every criterion prints one PASS/FAIL line.
//! Oracles below are deliberately naive and share no code with the library
//! searches they check.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use secolor_core::cdc::{
    cdc_to_se, cdc_to_se_auto, enumerate_even_cdcs, even_circuit_decomposition, find_nzf, ocdc_to_se_bipartite,
    se_to_cdc, se_to_ocdc_bipartite, verify_cdc, verify_ocdc,
};
use secolor_core::coloring::{check_girth_bound, chromatic_index, decide_mu_se, se_chromatic_number, verify_simultaneous};
use secolor_core::constructions as build;
use secolor_core::families::*;
use secolor_core::graph::{bridges, connected_graphs_up_to, girth, is_bipartite, is_connected, join, subdivide_edge};
use secolor_core::latin::{coloring_to_trade, spectrum_scan, trade_to_graph};
use secolor_core::realize::{realize_bipartite, realize_connected};
use secolor_core::{Budget, CycleDoubleCover, DegreeSequence, Error, Graph, SimultaneousColoring};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// Criteria whose failure is understood. The run still prints FAIL for
/// them, and the test insists the failure is exactly the documented one.
const KNOWN_FAILURES: &[(&str, &str)] = &[(
    "10",
    "2-SE colorable even graph without even circuit decomposition: [1-5 1-6 2-4 2-6 3-4 3-5 4-5 4-6 5-6]",
)];

fn budget() -> Budget {
    Budget::new(secolor_core::DEFAULT_BUDGET)
}

fn fail<T>(msg: impl Into<String>) -> Result<T, String> {
    Err(msg.into())
}

fn lib<T>(r: secolor_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    if took > limit {
        return fail(format!("{what} took {took:?}, limit {limit:?}"));
    }
    Ok(())
}

fn edge_list(g: &Graph) -> String {
    let parts: Vec<String> = g.edges().iter().map(|&(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
    format!("[{}]", parts.join(" "))
}

// ---------------------------------------------------------------- oracles

/// Proper in every coordinate, equal palettes at every vertex, pairwise
/// different colors on every edge, all colors in 1..=num_colors.
fn naive_valid(g: &Graph, sc: &SimultaneousColoring) -> bool {
    let mu = sc.colorings.len();
    if sc.colorings.iter().any(|f| f.len() != g.edge_count()) {
        return false;
    }
    for f in &sc.colorings {
        if f.iter().any(|&c| c == 0 || c > sc.num_colors) {
            return false;
        }
    }
    for v in 0..g.vertex_count() {
        let mut palettes = Vec::new();
        for f in &sc.colorings {
            let colors: Vec<u32> = g.incident(v).iter().map(|&(_, e)| f[e]).collect();
            let set: BTreeSet<u32> = colors.iter().copied().collect();
            if set.len() != colors.len() {
                return false;
            }
            palettes.push(set);
        }
        if palettes.windows(2).any(|w| w[0] != w[1]) {
            return false;
        }
    }
    for e in 0..g.edge_count() {
        let tuple: BTreeSet<u32> = (0..mu).map(|t| sc.colorings[t][e]).collect();
        if tuple.len() != mu {
            return false;
        }
    }
    true
}

fn naive_proper_exists(g: &Graph, k: u32) -> bool {
    fn go(g: &Graph, k: u32, f: &mut Vec<u32>) -> bool {
        let e = f.len();
        if e == g.edge_count() {
            return true;
        }
        let (u, v) = g.edge(e);
        let top = f.iter().copied().max().unwrap_or(0);
        for c in 1..=k.min(top + 1) {
            let used = |w: usize| g.incident(w).iter().any(|&(_, x)| x < e && f[x] == c);
            if !used(u) && !used(v) {
                f.push(c);
                if go(g, k, f) {
                    return true;
                }
                f.pop();
            }
        }
        false
    }
    go(g, k, &mut Vec::new())
}

fn naive_chromatic_index(g: &Graph) -> u32 {
    (1..).find(|&k| naive_proper_exists(g, k)).unwrap()
}

/// Enumerate every proper first coloring up to renaming of colors, then look
/// for a second coloring with colors drawn from the shared palette.
fn brute_two_se(g: &Graph, l: u32) -> bool {
    fn second(g: &Graph, f1: &[u32], f2: &mut Vec<u32>) -> bool {
        let e = f2.len();
        if e == g.edge_count() {
            return true;
        }
        let (u, v) = g.edge(e);
        let pal = |w: usize| -> BTreeSet<u32> { g.incident(w).iter().map(|&(_, x)| f1[x]).collect() };
        for c in pal(u).intersection(&pal(v)).copied() {
            let used = |w: usize| g.incident(w).iter().any(|&(_, x)| x < e && f2[x] == c);
            if c != f1[e] && !used(u) && !used(v) {
                f2.push(c);
                if second(g, f1, f2) {
                    return true;
                }
                f2.pop();
            }
        }
        false
    }
    fn first(g: &Graph, l: u32, f1: &mut Vec<u32>) -> bool {
        let e = f1.len();
        if e == g.edge_count() {
            return second(g, f1, &mut Vec::new());
        }
        let (u, v) = g.edge(e);
        let top = f1.iter().copied().max().unwrap_or(0);
        for c in 1..=l.min(top + 1) {
            let used = |w: usize| g.incident(w).iter().any(|&(_, x)| x < e && f1[x] == c);
            if !used(u) && !used(v) {
                f1.push(c);
                if first(g, l, f1) {
                    return true;
                }
                f1.pop();
            }
        }
        false
    }
    first(g, l, &mut Vec::new())
}

/// All circuits as edge bitmasks, found by extending paths from their
/// smallest vertex.
fn naive_circuits(g: &Graph) -> Vec<u64> {
    assert!(g.edge_count() <= 64);
    let mut out = BTreeSet::new();
    fn walk(g: &Graph, start: usize, at: usize, seen: u64, mask: u64, out: &mut BTreeSet<u64>) {
        for &(w, e) in g.incident(at) {
            if mask >> e & 1 == 1 {
                continue;
            }
            if w == start && mask.count_ones() >= 2 {
                out.insert(mask | 1 << e);
            } else if w > start && seen >> w & 1 == 0 {
                walk(g, start, w, seen | 1 << w, mask | 1 << e, out);
            }
        }
    }
    for s in 0..g.vertex_count() {
        walk(g, s, s, 1 << s, 0, &mut out);
    }
    out.into_iter().collect()
}

/// Labelled multisets of even circuits covering every edge exactly twice.
fn naive_even_cdcs(g: &Graph) -> Vec<Vec<u64>> {
    let even: Vec<u64> = naive_circuits(g).into_iter().filter(|c| c.count_ones() % 2 == 0).collect();
    let mut out = Vec::new();
    fn go(g: &Graph, even: &[u64], cover: &mut [u8], chosen: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        let Some(e) = cover.iter().position(|&c| c < 2) else {
            out.push(chosen.clone());
            return;
        };
        for &c in even {
            if c >> e & 1 == 0 || (0..g.edge_count()).any(|x| c >> x & 1 == 1 && cover[x] == 2) {
                continue;
            }
            (0..g.edge_count()).filter(|x| c >> x & 1 == 1).for_each(|x| cover[x] += 1);
            chosen.push(c);
            go(g, even, cover, chosen, out);
            chosen.pop();
            (0..g.edge_count()).filter(|x| c >> x & 1 == 1).for_each(|x| cover[x] -= 1);
        }
    }
    go(g, &even, &mut vec![0; g.edge_count()], &mut Vec::new(), &mut out);
    // every ordering of a cover is reached; keep one per multiset
    let set: BTreeSet<Vec<u64>> = out
        .into_iter()
        .map(|mut v| {
            v.sort_unstable();
            v
        })
        .collect();
    set.into_iter().collect()
}

fn naive_even_decomposition(g: &Graph) -> bool {
    let even: Vec<u64> = naive_circuits(g).into_iter().filter(|c| c.count_ones() % 2 == 0).collect();
    fn go(even: &[u64], left: u64) -> bool {
        if left == 0 {
            return true;
        }
        let e = left.trailing_zeros();
        even.iter().any(|&c| c >> e & 1 == 1 && c & !left == 0 && go(even, left & !c))
    }
    let all = if g.edge_count() == 64 { u64::MAX } else { (1u64 << g.edge_count()) - 1 };
    go(&even, all)
}

/// Minimum number of edges leaving a nonempty proper vertex subset.
fn naive_edge_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20);
    (1..(1u32 << n) - 1)
        .filter(|s| s & 1 == 1)
        .map(|s| g.edges().iter().filter(|&&(u, v)| (s >> u & 1) != (s >> v & 1)).count())
        .min()
        .unwrap_or(0)
}

fn naive_girth(g: &Graph) -> Option<usize> {
    naive_circuits(g).into_iter().map(|c| c.count_ones() as usize).min()
}

// ---------------------------------------------------------------- corpus

fn corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = catalog().into_iter().map(|(n, g)| (n.to_string(), g)).collect();
    out.push(("Heawood".into(), heawood()));
    out.push(("K3,3 subdivided".into(), subdivide_edge(&complete_bipartite(3, 3), 0, 3, 2).unwrap()));
    out.push(("C4 join C4".into(), join(&cycle(4), &cycle(4))));
    out
}

fn colored(mu: usize, max_vertices: usize, b: &mut Budget) -> Result<Vec<(Graph, SimultaneousColoring)>, String> {
    let mut out = Vec::new();
    for (_, g) in catalog() {
        if g.vertex_count() > max_vertices || g.min_degree() < mu {
            continue;
        }
        if let Some((_, sc)) = lib(se_chromatic_number(&g, mu, g.edge_count() as u32, b))? {
            out.push((g, sc));
        }
    }
    Ok(out)
}

fn check(g: &Graph, sc: &SimultaneousColoring, what: &str) -> Result<(), String> {
    if let Err(v) = verify_simultaneous(g, sc) {
        return fail(format!("{what}: {v}"));
    }
    if !naive_valid(g, sc) {
        return fail(format!("{what}: rejected by the naive checker"));
    }
    Ok(())
}

// ---------------------------------------------------------------- criteria

fn c1() -> Outcome {
    let g = bitrade10();
    let mut b = budget();
    let ci = lib(chromatic_index(&g, &mut b))?;
    if ci != 3 || naive_chromatic_index(&g) != 3 {
        return fail(format!("chromatic index {ci}"));
    }
    let start = Instant::now();
    if lib(decide_mu_se(&g, 2, 3, &mut b))?.is_some() {
        return fail("3 colors suffice");
    }
    within(start, Duration::from_secs(10), "decide(2,3)")?;
    let Some((l, sc)) = lib(se_chromatic_number(&g, 2, 6, &mut b))? else {
        return fail("no 2-SE coloring with 6 colors");
    };
    check(&g, &sc, "optimal coloring")?;
    if l != 4 || brute_two_se(&g, 3) || !brute_two_se(&g, 4) {
        return fail(format!("2-SE number {l}"));
    }
    Ok("chi' = 3, chi'_2SE = 4, decide(2,3) exhausted".into())
}

fn c2() -> Outcome {
    for n in [7, 9] {
        let issues = build::table_discrepancies(n).ok_or("no table")?;
        if !issues.is_empty() {
            return fail(format!("K{n}: {}", issues.join("; ")));
        }
        let sc = build::embedded_table(n).ok_or("no table")?;
        check(&complete(n), &sc, &format!("K{n}"))?;
        if sc.mu() != 3 || sc.num_colors as usize != n || sc.used_colors().len() != n {
            return fail(format!("K{n}: mu {} with {} colors", sc.mu(), sc.num_colors));
        }
    }
    Ok("K7 and K9 tables verify as printed".into())
}

fn c3() -> Outcome {
    let start = Instant::now();
    let g = complete(5);
    let mut b = budget();
    let found = lib(enumerate_even_cdcs(&g, 10_000, &mut b))?;
    let naive = naive_even_cdcs(&g);
    if found.labelled != naive.len() {
        return fail(format!("{} labelled covers, naive count {}", found.labelled, naive.len()));
    }
    // one orbit: every labelled cover is an image of the first
    let perms = permutations(5);
    let image = |cover: &[u64], p: &[usize]| -> Vec<u64> {
        let mut v: Vec<u64> = cover
            .iter()
            .map(|&c| {
                (0..g.edge_count())
                    .filter(|e| c >> e & 1 == 1)
                    .map(|e| {
                        let (u, v) = g.edge(e);
                        1u64 << g.edge_index(p[u], p[v]).unwrap()
                    })
                    .fold(0, |a, b| a | b)
            })
            .collect();
        v.sort_unstable();
        v
    };
    let orbit: BTreeSet<Vec<u64>> = perms.iter().map(|p| image(&naive[0], p)).collect();
    if !naive.iter().all(|c| orbit.contains(c)) {
        return fail("naive covers form more than one orbit");
    }
    if found.up_to_automorphism.len() != 1 {
        return fail(format!("{} covers up to automorphism", found.up_to_automorphism.len()));
    }
    let mut cover = found.up_to_automorphism[0].clone();
    if cover.length_profile() != vec![4; 5] {
        return fail(format!("profile {:?}", cover.length_profile()));
    }
    // naive parity: some phase choice must give each edge two different
    // positions; none does
    if parity_consistent_naive(&g, &naive[0]) {
        return fail("naive parity check found a consistent phase");
    }
    cover.classes = Some((0..cover.circuits.len()).collect());
    if lib(cdc_to_se(&g, &cover, &mut b))?.is_some() {
        return fail("cdc_to_se succeeded");
    }
    for l in 4..=10 {
        if lib(decide_mu_se(&g, 2, l, &mut b))?.is_some() {
            return fail(format!("2-SE coloring with {l} colors"));
        }
    }
    if brute_two_se(&g, 10) {
        return fail("brute force found a 2-SE coloring");
    }
    within(start, Duration::from_secs(120), "K5 criterion")?;
    Ok(format!("{} labelled covers in one class of five 4-circuits; parity fails", found.labelled))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Walk each circuit, label its edges alternately 0/1 starting from a chosen
/// phase, and ask for an assignment where each edge gets both labels.
fn parity_consistent_naive(g: &Graph, cover: &[u64]) -> bool {
    let labels: Vec<BTreeMap<usize, u8>> = cover
        .iter()
        .map(|&c| {
            let edges: Vec<usize> = (0..g.edge_count()).filter(|e| c >> e & 1 == 1).collect();
            let mut out = BTreeMap::new();
            let (mut at, mut prev) = (g.edge(edges[0]).0, usize::MAX);
            for step in 0..edges.len() {
                let &(w, e) = g.incident(at).iter().find(|&&(_, e)| c >> e & 1 == 1 && e != prev && !out.contains_key(&e)).unwrap();
                out.insert(e, (step % 2) as u8);
                prev = e;
                at = w;
            }
            out
        })
        .collect();
    (0..1u32 << cover.len()).any(|phase| {
        (0..g.edge_count()).all(|e| {
            let l: Vec<u8> = labels
                .iter()
                .enumerate()
                .filter_map(|(i, m)| m.get(&e).map(|&x| x ^ (phase >> i & 1) as u8))
                .collect();
            l.len() == 2 && l[0] != l[1]
        })
    })
}

fn c4() -> Outcome {
    let start = Instant::now();
    let g = petersen();
    let mut b = budget();
    if lib(find_nzf(&g, 4, &mut b))?.is_some() {
        return fail("4-NZF found");
    }
    let found = lib(enumerate_even_cdcs(&g, 100_000, &mut b))?;
    let naive = naive_even_cdcs(&g);
    if found.labelled != naive.len() {
        return fail(format!("{} even CDCs, naive count {}", found.labelled, naive.len()));
    }
    for c in &found.up_to_automorphism {
        let mut p = c.length_profile();
        p.sort_unstable();
        if p != vec![6, 8, 8, 8] {
            return fail(format!("profile {p:?}"));
        }
        if lib(cdc_to_se_auto(&g, &c.circuits, &mut b))?.is_some() {
            return fail("cdc_to_se succeeded");
        }
    }
    within(start, Duration::from_secs(600), "Petersen criterion")?;
    Ok(format!("no 4-NZF; {} even CDCs (naive oracle agrees)", found.labelled))
}

fn c5() -> Outcome {
    let mut b = budget();
    let start = Instant::now();
    let s2 = lib(spectrum_scan(2, 8, &mut b))?;
    within(start, Duration::from_secs(300), "mu = 2 scan")?;
    let start = Instant::now();
    let s3 = lib(spectrum_scan(3, 9, &mut b))?;
    within(start, Duration::from_secs(300), "mu = 3 scan")?;
    // S2 = N \ {1,2,3,5}; S3 excludes [1,8] and contains 9
    let want2: BTreeSet<usize> = (1..=8).filter(|v| ![1, 2, 3, 5].contains(v)).collect();
    let want3: BTreeSet<usize> = (1..=9).filter(|&v| v > 8).collect();
    if s2 != want2 || s3 != want3 {
        return fail(format!("S2 {s2:?}, S3 {s3:?}"));
    }
    Ok(format!("S2 = {s2:?}, S3 = {s3:?}"))
}

fn c6() -> Outcome {
    let start = Instant::now();
    let g = k44_minus_matching_plus_edge();
    let x: Vec<usize> = (0..4).collect();
    let expected = Graph::new(8, (0..4).flat_map(|i| (0..4).filter(move |&j| j != i).map(move |j| (i, 4 + j))).chain([(3, 7)]))
        .unwrap()
        .with_bipartition(&x)
        .unwrap();
    let as_set = |g: &Graph| g.edges().iter().copied().collect::<BTreeSet<_>>();
    if as_set(&g) != as_set(&expected) {
        return fail("graph differs from its definition");
    }
    let mut b = budget();
    for l in 1..=13 {
        if lib(decide_mu_se(&g, 3, l, &mut b))?.is_some() {
            return fail(format!("3-SE coloring with {l} colors"));
        }
    }
    within(start, Duration::from_secs(300), "non-example")?;
    Ok(format!("no 3-SE coloring for l <= 13 ({} nodes)", b.used()))
}

fn c7() -> Outcome {
    let mut b = budget();
    let mut count = 0;
    for n in 3..=12 {
        let (g, sc) = lib(build::color_wheel(n))?;
        check(&g, &sc, &format!("W{n}"))?;
        if sc.used_colors().len() != n {
            return fail(format!("W{n} uses {} colors", sc.used_colors().len()));
        }
        count += 1;
    }
    for n in 2..=8 {
        for m in n..=8 {
            for mu in 1..=n {
                let sc = lib(build::color_complete_bipartite(n, m, mu))?;
                check(&complete_bipartite(n, m), &sc, &format!("K{n},{m} mu {mu}"))?;
                if sc.used_colors().len() != m {
                    return fail(format!("K{n},{m} uses {} colors", sc.used_colors().len()));
                }
                count += 1;
            }
        }
    }
    for n in [4, 6, 7, 8, 9, 10, 11, 12, 13] {
        for mu in [2, 3] {
            let (sc, _) = lib(build::color_complete(n, mu, &mut b))?;
            check(&complete(n), &sc, &format!("K{n} mu {mu}"))?;
            count += 1;
        }
    }
    for mu in [2, 3] {
        let ops = colored(mu, 10, &mut b)?;
        for (g, sg) in &ops {
            for (h, sh) in &ops {
                if mu <= g.vertex_count().min(h.vertex_count()) {
                    let (j, sc) = lib(build::color_join(g, sg, h, sh))?;
                    check(&j, &sc, "join")?;
                    count += 1;
                }
                let (p, sc) = lib(build::color_cartesian_sum(g, sg, h, sh))?;
                check(&p, &sc, "cartesian")?;
                let (l, sc) = lib(build::color_lexicographic(g, h, sh, &mut b))?;
                check(&l, &sc, "lexicographic")?;
                count += 2;
            }
        }
    }
    for (_, g) in catalog() {
        for (_, h) in catalog() {
            let (Some(r), Some(s)) = (g.regular_degree(), h.regular_degree()) else { continue };
            let (p, sc) = match build::color_cartesian_regular(&g, &h, (r + s).min(3), &mut b) {
                Err(Error::NotOneFactorable) => continue,
                other => lib(other)?,
            };
            check(&p, &sc, "regular cartesian")?;
            count += 1;
        }
    }
    for (g, sc) in colored(2, 10, &mut b)? {
        for e in [0, g.edge_count() - 1] {
            for k in 1..=3 {
                let (u, v) = g.edge(e);
                let (s, ssc) = lib(build::subdivide_coloring(&g, &sc, u, v, k))?;
                check(&s, &ssc, "subdivision")?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} outputs verified"))
}

fn class_sets(c: &CycleDoubleCover) -> BTreeSet<BTreeSet<Vec<usize>>> {
    let labels = c.classes.clone().unwrap_or_default();
    labels
        .iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .map(|&l| c.circuits.iter().zip(&labels).filter(|(_, &x)| x == l).map(|(k, _)| k.normalized().vertices).collect())
        .collect()
}

fn c8() -> Outcome {
    let mut b = budget();
    let (mut trades, mut covers, mut oriented) = (0, 0, 0);
    for (name, g) in corpus() {
        let Some((_, sc)) = lib(se_chromatic_number(&g, 2, g.edge_count() as u32, &mut b))? else { continue };
        if is_bipartite(&g).is_some() && g.bipartition().is_some() {
            let t = lib(coloring_to_trade(&g, &sc, false))?;
            let (g2, sc2) = lib(trade_to_graph(&t, false))?;
            check(&g2, &sc2, &name)?;
            if lib(coloring_to_trade(&g2, &sc2, false))? != t {
                return fail(format!("{name}: trade round trip changed the trade"));
            }
            trades += 1;
            let o = lib(se_to_ocdc_bipartite(&g, &sc))?;
            verify_ocdc(&g, &o).map_err(|v| format!("{name}: {v}"))?;
            check(&g, &lib(ocdc_to_se_bipartite(&g, &o))?, &name)?;
            oriented += 1;
        }
        let cover = lib(se_to_cdc(&g, &sc))?;
        verify_cdc(&g, &cover).map_err(|v| format!("{name}: {v}"))?;
        let Some(back) = lib(cdc_to_se(&g, &cover, &mut b))? else {
            return fail(format!("{name}: cover of a coloring failed parity"));
        };
        check(&g, &back, &name)?;
        if class_sets(&lib(se_to_cdc(&g, &back))?) != class_sets(&cover) {
            return fail(format!("{name}: class structure changed"));
        }
        covers += 1;
    }
    Ok(format!("{trades} trade, {covers} CDC and {oriented} OCDC round trips"))
}

fn c9() -> Outcome {
    let mut b = budget();
    let s: DegreeSequence = "3,3,3,4;3,3,3,4".parse().map_err(|e: Error| e.to_string())?;
    let g = lib(realize_connected(&s, 3, &mut b))?;
    if naive_edge_connectivity(&g) < 3 || DegreeSequence::of_graph(&g) != Some(s) {
        return fail("(3,3,3,4;3,3,3,4) realization");
    }
    let mut rng = StdRng::seed_from_u64(0x5ec0);
    let mut done = 0;
    while done < 100 {
        let mu = rng.gen_range(2..=3);
        let nx = rng.gen_range(mu..=6);
        let ny = rng.gen_range(mu..=6);
        let x: Vec<usize> = (0..nx).map(|_| rng.gen_range(mu..=ny)).collect();
        let y: Vec<usize> = (0..ny).map(|_| rng.gen_range(mu..=nx)).collect();
        let s = DegreeSequence::bipartite(x, y);
        if lib(realize_bipartite(&s))?.is_none() {
            continue;
        }
        let g = lib(realize_connected(&s, mu, &mut b))?;
        if naive_edge_connectivity(&g) < mu || DegreeSequence::of_graph(&g) != Some(s.clone()) {
            return fail(format!("{s} with mu {mu}"));
        }
        done += 1;
    }
    Ok("target met for (3,3,3,4;3,3,3,4) and 100 random sequences".into())
}

fn c10() -> Outcome {
    let mut b = budget();
    let mut small = 0;
    for level in connected_graphs_up_to(7) {
        for form in level {
            let g = form.to_graph();
            for l in 1..=g.edge_count() as u32 {
                let found = lib(decide_mu_se(&g, 2, l, &mut b))?;
                if found.is_some() != brute_two_se(&g, l) {
                    return fail(format!("{} with {l} colors disagrees with brute force", edge_list(&g)));
                }
                if let Some(sc) = found {
                    check(&g, &sc, "search result")?;
                }
            }
            small += 1;
        }
    }
    let mut even = 0;
    let mut converse = Vec::new();
    for level in connected_graphs_up_to(10) {
        for form in level {
            let g = form.to_graph();
            if !g.is_even() {
                continue;
            }
            even += 1;
            let se = lib(decide_mu_se(&g, 2, g.edge_count() as u32, &mut b))?;
            let dec = lib(even_circuit_decomposition(&g, &mut b))?.is_some();
            if dec != naive_even_decomposition(&g) {
                return fail(format!("{}: decomposition disagrees with naive search", edge_list(&g)));
            }
            if se.is_some() != brute_two_se(&g, g.edge_count() as u32) {
                return fail(format!("{}: 2-SE disagrees with brute force", edge_list(&g)));
            }
            match (se, dec) {
                (None, true) => return fail(format!("{}: decomposes but is not 2-SE colorable", edge_list(&g))),
                (Some(sc), false) => {
                    check(&g, &sc, "counterexample coloring")?;
                    converse.push(edge_list(&g));
                }
                _ => {}
            }
        }
    }
    if !converse.is_empty() {
        return fail(format!(
            "{small} graphs agree with brute force; {even} even graphs, decomposition implies 2-SE everywhere; \
             2-SE colorable even graph without even circuit decomposition: {}",
            converse.join(", ")
        ));
    }
    Ok(format!("{small} graphs agree with brute force; {even} even graphs agree"))
}

fn c11() -> Outcome {
    let mut b = budget();
    let mut probes = 0;
    for (name, g) in corpus() {
        for mu in 1..=3 {
            let Some((_, sc)) = lib(se_chromatic_number(&g, mu, g.edge_count() as u32, &mut b))? else { continue };
            check(&g, &sc, &name)?;
            if mu > g.min_positive_degree() {
                return fail(format!("{name}: {mu}-SE coloring with minimum degree {}", g.min_degree()));
            }
            if mu != 2 || !bridges(&g).is_empty() || !is_connected(&g) {
                continue;
            }
            if girth(&g) != naive_girth(&g) {
                return fail(format!("{name}: girth mismatch"));
            }
            let gi = girth(&g).unwrap_or(usize::MAX);
            let ci = naive_chromatic_index(&g) as usize;
            for k in (2..=6).filter(|k| 2 * k - 1 <= gi) {
                if !lib(check_girth_bound(&g, &sc, k, &mut b))? || g.edge_count() < k * ci {
                    return fail(format!("{name}: girth bound fails at k = {k}"));
                }
                probes += 1;
            }
        }
    }
    Ok(format!("{probes} girth probes, no contradictions"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("1", c1),
        ("2", c2),
        ("3", c3),
        ("4", c4),
        ("5", c5),
        ("6", c6),
        ("7", c7),
        ("8", c8),
        ("9", c9),
        ("10", c10),
        ("11", c11),
    ];
    let mut unexpected = Vec::new();
    for (id, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == id);
        match (&outcome, known) {
            (Ok(msg), None) => println!("PASS {id:>2}  {msg} ({secs:.2}s)"),
            (Ok(msg), Some(_)) => {
                println!("PASS {id:>2}  {msg} ({secs:.2}s)");
                unexpected.push(format!("{id} passed but is listed as a known failure"));
            }
            (Err(msg), known) => {
                println!("FAIL {id:>2}  {msg} ({secs:.2}s)");
                if !known.is_some_and(|(_, expect)| msg.contains(expect)) {
                    unexpected.push(format!("{id}: {msg}"));
                }
            }
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcomes: {unexpected:#?}");
        std::process::exit(1);
    }
}
