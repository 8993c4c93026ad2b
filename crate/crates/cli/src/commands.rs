use std::io::Read;

use anyhow::{bail, Context, Result};
use clap::Subcommand;
use secolor_core::cdc::{
    cdc_to_se, cdc_to_se_auto, enumerate_even_cdcs, even_circuit_decomposition, find_nzf, find_ocdc,
    ocdc_to_se_bipartite, se_to_cdc, se_to_ocdc_bipartite, verify_cdc, verify_nzf, verify_ocdc,
};
use secolor_core::coloring::{
    chromatic_index, counterexample_filter, decide_mu_se, se_chromatic_number, verify_simultaneous,
};
use secolor_core::constructions as build;
use secolor_core::format::{emit_graph, parse_graph, Document};
use secolor_core::graph::{edge_connectivity, girth, is_bipartite, is_connected};
use secolor_core::latin::{coloring_to_trade, spectrum_scan, trade_to_graph, verify_trade};
use secolor_core::realize::realize_connected;
use secolor_core::{Budget, DegreeSequence, Graph, SimultaneousColoring};

/// Whether the command decided yes (exit 0) or no (exit 2).
pub enum Outcome {
    Yes,
    No,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check a graph file or a JSON document of any kind
    Verify {
        file: String,
        /// Flow bound for flow documents
        #[arg(long, default_value_t = 4)]
        k: i64,
    },
    /// Decide whether a μ-simultaneous coloring exists
    Solve {
        file: String,
        #[arg(long)]
        mu: usize,
        /// Decide for exactly this many colors
        #[arg(long)]
        colors: Option<u32>,
        /// Find the least number of colors up to this bound (default |E|)
        #[arg(long, conflicts_with = "colors")]
        max_colors: Option<u32>,
    },
    /// Build a coloring of a graph family or composite graph
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Latin trade conversions, checks and volume spectra
    Trade {
        #[command(subcommand)]
        action: TradeAction,
    },
    /// Cycle double covers and oriented covers
    Cdc {
        #[command(subcommand)]
        action: CdcAction,
    },
    /// Find a nowhere-zero k-flow of a graph, or verify a flow document
    Nzf {
        #[arg(long)]
        k: i64,
        file: String,
    },
    /// μ-edge-connected bipartite realization of a degree sequence such as "3,3,3,4;3,3,3,4"
    Realize {
        sequence: String,
        #[arg(long, default_value_t = 2)]
        mu: usize,
    },
    /// Necessary conditions for a smallest bipartite graph without a 2-simultaneous coloring
    Filter { file: String },
    /// Basic invariants of a graph
    Info { file: String },
    /// Re-check every claim and print a table
    Repro,
}

#[derive(Subcommand)]
pub enum Family {
    /// Wheel W_n (hub plus n-cycle) with n colors
    Wheel {
        n: usize,
    },
    /// Complete graph K_n
    Complete {
        n: usize,
        #[arg(long, default_value_t = 2)]
        mu: usize,
    },
    /// Complete bipartite graph K_{n,m} with max(n, m) colors
    CompleteBipartite {
        n: usize,
        m: usize,
        #[arg(long, default_value_t = 2)]
        mu: usize,
    },
    /// Regular 1-factorable graph from a file
    OneFactorable {
        file: String,
        #[arg(long, default_value_t = 2)]
        mu: usize,
    },
    /// Join of two graph files, each colored optimally first
    Join {
        first: String,
        second: String,
        #[arg(long, default_value_t = 2)]
        mu: usize,
    },
    /// Cartesian product of two graph files
    Cartesian {
        first: String,
        second: String,
        #[arg(long, default_value_t = 2)]
        mu: usize,
        /// Use the 1-factorization route (first regular, second 1-factorable)
        #[arg(long)]
        regular: bool,
    },
    /// Lexicographic product G[H] of two graph files
    Lex {
        outer: String,
        inner: String,
        #[arg(long, default_value_t = 2)]
        mu: usize,
    },
    /// Replace edge u v by a path with 2k inner vertices
    Subdivide {
        file: String,
        u: usize,
        v: usize,
        #[arg(default_value_t = 1)]
        k: usize,
    },
    /// Color from an even Hamiltonian circuit given as "1,2,3,..."
    Hamiltonian {
        file: String,
        #[arg(long)]
        circuit: String,
    },
}

#[derive(Subcommand)]
pub enum TradeAction {
    /// Trade document to coloring document
    ToGraph {
        file: String,
        #[arg(long)]
        symmetric: bool,
    },
    /// Coloring document to trade document
    FromGraph {
        file: String,
        #[arg(long)]
        symmetric: bool,
    },
    /// Check the trade conditions of a trade document
    Verify { file: String },
    /// Feasible volumes of μ-way trades up to a bound
    Spectrum {
        #[arg(long)]
        mu: usize,
        #[arg(long)]
        max_volume: usize,
    },
}

#[derive(Subcommand)]
pub enum CdcAction {
    /// Check a CDC or OCDC document
    Verify { file: String },
    /// Coloring document to classed CDC
    FromSe { file: String },
    /// CDC document to coloring (classes from the document, else one per circuit)
    ToSe { file: String },
    /// All even-circuit CDCs of a graph, one per automorphism class
    EnumerateEven {
        file: String,
        #[arg(long, default_value_t = 10_000)]
        limit: usize,
    },
    /// Coloring document of a bipartite graph to OCDC
    ToOcdc { file: String },
    /// OCDC document of a bipartite graph to coloring
    FromOcdc { file: String },
    /// Search a graph for an OCDC
    FindOcdc { file: String },
    /// Partition an even graph into even circuits
    Decompose { file: String },
}

fn read(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn graph(path: &str) -> Result<Graph> {
    parse_graph(&read(path)?).with_context(|| format!("parsing {path}"))
}

fn document(path: &str) -> Result<Document> {
    Document::from_json(&read(path)?).with_context(|| format!("parsing {path}"))
}

fn emit(doc: &Document) {
    print!("{}", doc.to_json());
}

fn no(message: impl std::fmt::Display) -> Result<Outcome> {
    eprintln!("{message}");
    Ok(Outcome::No)
}

/// A least-color μ-simultaneous coloring of an operand.
fn operand(path: &str, mu: usize, budget: &mut Budget) -> Result<Option<(Graph, SimultaneousColoring)>> {
    let g = graph(path)?;
    let l_max = (g.edge_count() as u32).max(g.max_degree() as u32);
    Ok(se_chromatic_number(&g, mu, l_max, budget)?.map(|(_, sc)| (g, sc)))
}

pub fn run(command: Command, budget: u64) -> Result<Outcome> {
    let budget = &mut Budget::new(budget);
    match command {
        Command::Verify { file, k } => verify(&read(&file)?, k),
        Command::Solve { file, mu, colors, max_colors } => {
            let g = graph(&file)?;
            let found = match colors {
                Some(l) => decide_mu_se(&g, mu, l, budget)?,
                None => {
                    let l_max = max_colors.unwrap_or(g.edge_count() as u32).max(g.max_degree() as u32);
                    se_chromatic_number(&g, mu, l_max, budget)?.map(|(_, sc)| sc)
                }
            };
            match found {
                Some(sc) => {
                    emit(&Document::coloring(&g, &sc));
                    Ok(Outcome::Yes)
                }
                None => no(format!("absent: no {mu}-simultaneous coloring within the given colors")),
            }
        }
        Command::Construct { family } => construct(family, budget),
        Command::Trade { action } => trade(action, budget),
        Command::Cdc { action } => cdc(action, budget),
        Command::Nzf { k, file } => {
            let text = read(&file)?;
            if text.trim_start().starts_with('{') {
                return verify(&text, k);
            }
            let g = parse_graph(&text)?;
            match find_nzf(&g, k, budget)? {
                Some(f) => {
                    emit(&Document::flow(&g, &f));
                    Ok(Outcome::Yes)
                }
                None => no(format!("absent: no nowhere-zero {k}-flow")),
            }
        }
        Command::Realize { sequence, mu } => {
            let s: DegreeSequence = sequence.parse()?;
            match realize_connected(&s, mu, budget) {
                Ok(g) => {
                    print!("{}", emit_graph(&g));
                    Ok(Outcome::Yes)
                }
                Err(secolor_core::Error::NotGraphic) => {
                    println!("absent: {}", secolor_core::Error::NotGraphic);
                    Ok(Outcome::No)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Filter { file } => {
            let report = counterexample_filter(&graph(&file)?);
            for (c, ok) in &report.results {
                println!("{} {c}", if *ok { "pass" } else { "FAIL" });
            }
            Ok(if report.passes() { Outcome::Yes } else { Outcome::No })
        }
        Command::Info { file } => {
            let g = graph(&file)?;
            println!("vertices {}", g.vertex_count());
            println!("edges {}", g.edge_count());
            println!("degrees {:?}", g.degrees());
            println!("bipartite {}", is_bipartite(&g).is_some());
            println!("connected {}", is_connected(&g));
            if is_connected(&g) && g.vertex_count() > 1 {
                println!("edge connectivity {}", edge_connectivity(&g)?.0);
            }
            match girth(&g) {
                Some(k) => println!("girth {k}"),
                None => println!("girth none"),
            }
            println!("chromatic index {}", chromatic_index(&g, budget)?);
            Ok(Outcome::Yes)
        }
        Command::Repro => repro_table(budget),
    }
}

fn repro_table(budget: &mut Budget) -> Result<Outcome> {
    let mut all = true;
    for claim in crate::repro::CLAIMS {
        let mut b = Budget::new(budget.limit());
        let start = std::time::Instant::now();
        let result = (claim.check)(&mut b);
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>3}  {:<58} {detail} ({secs:.2}s)", claim.id, claim.statement),
            Err(e) => {
                all = false;
                println!("FAIL {:>3}  {:<58} {e:#} ({secs:.2}s)", claim.id, claim.statement);
            }
        }
    }
    Ok(if all { Outcome::Yes } else { Outcome::No })
}

fn verify(text: &str, k: i64) -> Result<Outcome> {
    if !text.trim_start().starts_with('{') {
        let g = parse_graph(text)?;
        println!("valid graph: {} vertices, {} edges", g.vertex_count(), g.edge_count());
        return Ok(Outcome::Yes);
    }
    let doc = Document::from_json(text)?;
    let verdict: std::result::Result<(), String> = match &doc {
        Document::Coloring { .. } => {
            let (g, sc) = doc.to_coloring()?;
            verify_simultaneous(&g, &sc).map_err(|v| v.to_string())
        }
        Document::Trade { .. } => verify_trade(&doc.to_trade()?).map_err(|v| v.to_string()),
        Document::Cdc { .. } => {
            let (g, c) = doc.to_cdc()?;
            verify_cdc(&g, &c).map_err(|v| v.to_string())
        }
        Document::Ocdc { .. } => {
            let (g, c) = doc.to_ocdc()?;
            verify_ocdc(&g, &c).map_err(|v| v.to_string())
        }
        Document::Flow { .. } => {
            let (g, f) = doc.to_flow()?;
            verify_nzf(&g, &f, k).map_err(|v| v.to_string())
        }
    };
    match verdict {
        Ok(()) => {
            println!("valid {}", doc.kind());
            Ok(Outcome::Yes)
        }
        Err(why) => no(format!("invalid {}: {why}", doc.kind())),
    }
}

fn construct(family: Family, budget: &mut Budget) -> Result<Outcome> {
    let (g, sc) = match family {
        Family::Wheel { n } => build::color_wheel(n)?,
        Family::Complete { n, mu } => match build::color_complete(n, mu, budget) {
            Ok((sc, _)) => (secolor_core::families::complete(n), sc),
            Err(secolor_core::Error::NoSuchColoring) => return no(format!("absent: K{n} has no {mu}-simultaneous coloring")),
            Err(e) => return Err(e.into()),
        },
        Family::CompleteBipartite { n, m, mu } => {
            (secolor_core::families::complete_bipartite(n, m), build::color_complete_bipartite(n, m, mu)?)
        }
        Family::OneFactorable { file, mu } => {
            let g = graph(&file)?;
            let sc = build::color_one_factorable(&g, mu, budget)?;
            (g, sc)
        }
        Family::Join { first, second, mu } => {
            let (Some((g1, s1)), Some((g2, s2))) = (operand(&first, mu, budget)?, operand(&second, mu, budget)?) else {
                return no("absent: an operand has no coloring");
            };
            build::color_join(&g1, &s1, &g2, &s2)?
        }
        Family::Cartesian { first, second, mu, regular } => {
            if regular {
                build::color_cartesian_regular(&graph(&first)?, &graph(&second)?, mu, budget)?
            } else {
                let (Some((g1, s1)), Some((g2, s2))) = (operand(&first, mu, budget)?, operand(&second, mu, budget)?)
                else {
                    return no("absent: an operand has no coloring");
                };
                build::color_cartesian_sum(&g1, &s1, &g2, &s2)?
            }
        }
        Family::Lex { outer, inner, mu } => {
            let Some((h, sh)) = operand(&inner, mu, budget)? else {
                return no("absent: the inner graph has no coloring");
            };
            build::color_lexicographic(&graph(&outer)?, &h, &sh, budget)?
        }
        Family::Subdivide { file, u, v, k } => {
            let Some((g, sc)) = operand(&file, 2, budget)? else {
                return no("absent: the graph has no 2-simultaneous coloring");
            };
            if u == 0 || v == 0 {
                bail!("vertices are 1-based");
            }
            build::subdivide_coloring(&g, &sc, u - 1, v - 1, k)?
        }
        Family::Hamiltonian { file, circuit } => {
            let g = graph(&file)?;
            let order: Vec<usize> = circuit
                .split(',')
                .map(|s| s.trim().parse::<usize>().context("circuit must list 1-based vertices"))
                .collect::<Result<_>>()?;
            if order.contains(&0) {
                bail!("vertices are 1-based");
            }
            let order: Vec<usize> = order.into_iter().map(|v| v - 1).collect();
            let sc = build::color_from_hamiltonian(&g, &order, budget)?;
            (g, sc)
        }
    };
    emit(&Document::coloring(&g, &sc));
    Ok(Outcome::Yes)
}

fn trade(action: TradeAction, budget: &mut Budget) -> Result<Outcome> {
    match action {
        TradeAction::ToGraph { file, symmetric } => {
            let (g, sc) = trade_to_graph(&document(&file)?.to_trade()?, symmetric)?;
            emit(&Document::coloring(&g, &sc));
        }
        TradeAction::FromGraph { file, symmetric } => {
            let (g, sc) = document(&file)?.to_coloring()?;
            emit(&Document::trade(&coloring_to_trade(&g, &sc, symmetric)?));
        }
        TradeAction::Verify { file } => {
            return match verify_trade(&document(&file)?.to_trade()?) {
                Ok(()) => {
                    println!("valid trade");
                    Ok(Outcome::Yes)
                }
                Err(v) => no(format!("invalid trade: {v}")),
            };
        }
        TradeAction::Spectrum { mu, max_volume } => {
            let s = spectrum_scan(mu, max_volume, budget)?;
            let list: Vec<String> = s.iter().map(usize::to_string).collect();
            println!("{{{}}}", list.join(", "));
        }
    }
    Ok(Outcome::Yes)
}

fn cdc(action: CdcAction, budget: &mut Budget) -> Result<Outcome> {
    match action {
        CdcAction::Verify { file } => return verify(&read(&file)?, 4),
        CdcAction::FromSe { file } => {
            let (g, sc) = document(&file)?.to_coloring()?;
            emit(&Document::cdc(&g, &se_to_cdc(&g, &sc)?));
        }
        CdcAction::ToSe { file } => {
            let (g, cover) = document(&file)?.to_cdc()?;
            let found = match cover.classes {
                Some(_) => cdc_to_se(&g, &cover, budget)?,
                None => cdc_to_se_auto(&g, &cover.circuits, budget)?,
            };
            match found {
                Some(sc) => emit(&Document::coloring(&g, &sc)),
                None => return no("absent: the circuits admit no consistent 2-coloring"),
            }
        }
        CdcAction::EnumerateEven { file, limit } => {
            let g = graph(&file)?;
            let found = enumerate_even_cdcs(&g, limit, budget)?;
            eprintln!("{} labelled, {} up to automorphism", found.labelled, found.up_to_automorphism.len());
            let docs: Vec<Document> = found.up_to_automorphism.iter().map(|c| Document::cdc(&g, c)).collect();
            println!("{}", serde_json::to_string_pretty(&docs)?);
            if docs.is_empty() {
                return Ok(Outcome::No);
            }
        }
        CdcAction::ToOcdc { file } => {
            let (g, sc) = document(&file)?.to_coloring()?;
            emit(&Document::ocdc(&g, &se_to_ocdc_bipartite(&g, &sc)?));
        }
        CdcAction::FromOcdc { file } => {
            let (g, cover) = document(&file)?.to_ocdc()?;
            emit(&Document::coloring(&g, &ocdc_to_se_bipartite(&g, &cover)?));
        }
        CdcAction::FindOcdc { file } => {
            let g = graph(&file)?;
            match find_ocdc(&g, budget)? {
                Some(c) => emit(&Document::ocdc(&g, &c)),
                None => return no("absent: no oriented cycle double cover"),
            }
        }
        CdcAction::Decompose { file } => {
            let g = graph(&file)?;
            match even_circuit_decomposition(&g, budget)? {
                Some(circuits) => {
                    for c in circuits {
                        let vs: Vec<String> = c.vertices.iter().map(|v| (v + 1).to_string()).collect();
                        println!("{}", vs.join(" "));
                    }
                }
                None => return no("absent: no even circuit decomposition"),
            }
        }
    }
    Ok(Outcome::Yes)
}
