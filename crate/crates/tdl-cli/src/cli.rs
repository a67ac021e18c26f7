//! Command-line surface tying the workbench modules together.
//!
//! Exit codes: 0 success, 1 domain error, 2 budget exceeded, 64 usage.

use crate::graph_spec::{graph_key, load_graph};
use crate::records::{CacheStore, ResultRecord, TOOL_VERSION};
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::path::PathBuf;
use std::time::{Duration, Instant};
use tdl::analysis::{self, SaturabilityVerdict};
use tdl::graphs;
use tdl::labeling::{self, VertexLabeling};
use tdl::lattice::{self, LatticeModel, PeriodicSearchOutcome};
use tdl::solver::{self, ChiOutcome, SearchConfig, SearchOutcome};
use tdl::starelim;
use tdl::wsr;

const EXIT_OK: i32 = 0;
const EXIT_DOMAIN: i32 = 1;
const EXIT_BUDGET: i32 = 2;
const EXIT_USAGE: i32 = 64;

#[derive(Parser)]
#[command(name = "tdl", version, about = "Exact workbench for total difference labelings")]
struct Cli {
    /// Record store directory (defaults to $TDL_CACHE_DIR; unset disables caching)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Emit line-delimited JSON records on stdout instead of tables
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct BudgetArg {
    /// Per-query time budget in seconds; 0 disables the limit
    #[arg(long, default_value_t = 60.0)]
    budget: f64,
}

impl BudgetArg {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            time_budget: if self.budget > 0.0 {
                Some(Duration::from_secs_f64(self.budget))
            } else {
                None
            },
            ..SearchConfig::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute chi_td (or decide / enumerate at a fixed ceiling)
    Chi {
        /// Builtin spec (petersen, path:5, grid:4,6, ...) or graph file
        #[arg(long)]
        graph: String,
        /// Fixed label ceiling: decide instead of optimizing
        #[arg(long)]
        k: Option<u32>,
        /// Enumerate every labeling at the ceiling (needs --k or uses chi)
        #[arg(long)]
        enumerate: bool,
        /// Force a deterministic, reproducible search (the default)
        #[arg(long, default_value_t = true)]
        deterministic: bool,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Validate a labeling file against a graph
    Validate {
        #[arg(long)]
        graph: String,
        /// Labeling file: one `vertex label` pair per line
        #[arg(long)]
        labels: PathBuf,
    },
    /// Well-spaced row tables and sequences
    Wsr {
        #[command(subcommand)]
        command: WsrCommand,
    },
    /// Star-elimination traces and the induced lower bound
    Starelim {
        /// Regular degree
        #[arg(long)]
        delta: usize,
        /// Largest ceiling to trace (default: stop at the lower bound)
        #[arg(long)]
        max_x: Option<u64>,
    },
    /// Periodic lattice labelings and the tree rule map
    Lattice {
        #[command(subcommand)]
        command: LatticeCommand,
    },
    /// Saturability survey over all connected graphs of one order
    Survey {
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Check chi_td(clone(G)) against the 2 chi + 1 bound
    Clone {
        #[arg(long)]
        graph: String,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Check chi_td(K_m x G) against the m chi + m(m-1)/2 bound
    Product {
        #[arg(long)]
        graph: String,
        #[arg(short, long)]
        m: usize,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Resolve a graph spec and emit it
    Graph {
        #[arg(long)]
        graph: String,
        /// Output format: g6 or edges
        #[arg(long, default_value = "edges")]
        emit: String,
    },
}

#[derive(Subcommand)]
enum WsrCommand {
    /// The five-column extremal table for sizes 1..=N
    Table {
        #[arg(long)]
        max_n: usize,
    },
    /// One sequence in OEIS b-file format (index value per line)
    Bfile {
        /// One of: os, e, d, mi1, mi2, j
        #[arg(long)]
        seq: String,
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Subcommand)]
enum LatticeCommand {
    /// Validate a fundamental-domain fixture file
    Verify {
        /// square, hexagonal, triangular or cubic
        #[arg(long)]
        model: String,
        #[arg(long)]
        fixture: PathBuf,
    },
    /// Search all fundamental domains up to a cell count
    Search {
        #[arg(long)]
        model: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        max_domain: usize,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Search row arrangements and coefficient vectors of a linear
    /// functional labeling
    SearchLinear {
        #[arg(long)]
        model: String,
        /// Comma-separated label row, e.g. 1,3,4,9,10,12,13
        #[arg(long)]
        row: String,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Validate an infinite-binary-tree rule map file
    Tree {
        #[arg(long)]
        rules: PathBuf,
    },
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Version/help requests are successes; anything else is usage.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let cache = CacheStore::open(cli.cache_dir.clone());
    match dispatch(&cli, &cache) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn dispatch(cli: &Cli, cache: &CacheStore) -> Result<i32, String> {
    match &cli.command {
        Command::Chi { graph, k, enumerate, deterministic, budget } => {
            if let Some(k) = k {
                if !(1..=solver::MAX_LABEL_CEILING).contains(k) {
                    return Err(format!(
                        "--k must lie in 1..={}",
                        solver::MAX_LABEL_CEILING
                    ));
                }
            }
            let g = load_graph(graph)?;
            let mut cfg = budget.config();
            cfg.deterministic = *deterministic;
            cfg.count_all = *enumerate;
            cmd_chi(&g, *k, *enumerate, &cfg, cache, cli.json)
        }
        Command::Validate { graph, labels } => {
            let g = load_graph(graph)?;
            let text = std::fs::read_to_string(labels)
                .map_err(|e| format!("{}: {e}", labels.display()))?;
            let f = VertexLabeling::from_text(&text).map_err(|e| e.to_string())?;
            cmd_validate(&g, &f, cli.json)
        }
        Command::Wsr { command } => match command {
            WsrCommand::Table { max_n } => cmd_wsr_table(*max_n, cli.json),
            WsrCommand::Bfile { seq, max_n } => cmd_wsr_bfile(seq, *max_n),
        },
        Command::Starelim { delta, max_x } => cmd_starelim(*delta, *max_x, cli.json),
        Command::Lattice { command } => match command {
            LatticeCommand::Verify { model, fixture } => {
                let text = std::fs::read_to_string(fixture)
                    .map_err(|e| format!("{}: {e}", fixture.display()))?;
                cmd_lattice_verify(model, &text, cli.json)
            }
            LatticeCommand::Search { model, k, max_domain, budget } => {
                cmd_lattice_search(model, *k, *max_domain, budget, cli.json)
            }
            LatticeCommand::SearchLinear { model, row, budget } => {
                cmd_lattice_search_linear(model, row, budget)
            }
            LatticeCommand::Tree { rules } => {
                let text = std::fs::read_to_string(rules)
                    .map_err(|e| format!("{}: {e}", rules.display()))?;
                cmd_lattice_tree(&text, cli.json)
            }
        },
        Command::Survey { order, budget } => cmd_survey(*order, &budget.config(), cache, cli.json),
        Command::Clone { graph, budget } => {
            let g = load_graph(graph)?;
            let check = analysis::check_clone_bound(&g, &budget.config())
                .map_err(|e| e.to_string());
            match check {
                Ok(r) => {
                    if cache.enabled() {
                        record(cache, &graph_key(&g), "clone-bound", &json!(r), 0);
                    }
                    if cli.json {
                        println!("{}", serde_json::to_string(&r).unwrap());
                    } else {
                        println!(
                            "chi(G) = {}, chi(clone(G)) = {}, bound 2*chi+1 = {} -> {}{}",
                            r.chi_g,
                            r.chi_clone,
                            r.bound,
                            if r.holds { "holds" } else { "VIOLATED" },
                            if r.tight { " (tight)" } else { "" }
                        );
                    }
                    Ok(EXIT_OK)
                }
                Err(e) if e.contains("budget") => Ok(budget_exceeded()),
                Err(e) => Err(e),
            }
        }
        Command::Product { graph, m, budget } => {
            let g = load_graph(graph)?;
            match analysis::check_product_bound(&g, *m, &budget.config()) {
                Ok(r) => {
                    if cache.enabled() {
                        record(cache, &graph_key(&g), &format!("product-bound m={m}"), &json!(r), 0);
                    }
                    if cli.json {
                        println!("{}", serde_json::to_string(&r).unwrap());
                    } else {
                        println!(
                            "chi(G) = {}, chi(K{} x G) = {}, bound = {} -> {}",
                            r.chi_g,
                            r.m,
                            r.chi_product,
                            r.bound,
                            if r.holds { "holds" } else { "VIOLATED" }
                        );
                    }
                    Ok(EXIT_OK)
                }
                Err(solver::SolverError::BudgetExceeded) => Ok(budget_exceeded()),
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Graph { graph, emit } => {
            let g = load_graph(graph)?;
            match emit.as_str() {
                "g6" => println!("{}", graphs::to_graph6(&g).map_err(|e| e.to_string())?),
                "edges" => print!("{}", graphs::to_edge_list(&g)),
                other => return Err(format!("unknown emission format `{other}`")),
            }
            Ok(EXIT_OK)
        }
    }
}

fn budget_exceeded() -> i32 {
    eprintln!("budget exceeded");
    EXIT_BUDGET
}

fn record(cache: &CacheStore, certificate: &str, query: &str, value: &serde_json::Value, ms: u64) {
    cache.append(&ResultRecord {
        certificate: certificate.into(),
        query: query.into(),
        value: value.clone(),
        runtime_ms: ms,
        tool_version: TOOL_VERSION.into(),
    });
}

fn cmd_chi(
    g: &graphs::Graph,
    k: Option<u32>,
    enumerate: bool,
    cfg: &SearchConfig,
    cache: &CacheStore,
    json: bool,
) -> Result<i32, String> {
    // Canonicalizing a 10-vertex graph costs more than many searches;
    // only key the graph when a record store is in play.
    let key = if cache.enabled() { graph_key(g) } else { String::new() };
    if enumerate {
        let ceiling = match k {
            Some(k) => k,
            None => match solver::chi_td(g, cfg).map_err(|e| e.to_string())? {
                ChiOutcome::Exact { chi, .. } => chi,
                ChiOutcome::Bounded { .. } => return Ok(budget_exceeded()),
            },
        };
        let all = match solver::enumerate_tdls(g, ceiling, cfg) {
            Ok(all) => all,
            Err(solver::SolverError::BudgetExceeded) => return Ok(budget_exceeded()),
            Err(e) => return Err(e.to_string()),
        };
        record(cache, &key, &format!("enumerate k={ceiling}"), &json!(all.len()), 0);
        if json {
            for f in &all {
                println!("{}", serde_json::to_string(f.labels()).unwrap());
            }
        } else {
            println!("{} labelings with ceiling {ceiling}", all.len());
            for f in &all {
                println!("  {:?}", f.labels());
            }
        }
        return Ok(EXIT_OK);
    }
    if let Some(k) = k {
        let query = format!("has_tdl k={k}");
        if let Some(value) = cache.lookup(&key, &query) {
            print_cached(&value, json);
            return Ok(EXIT_OK);
        }
        let started = Instant::now();
        return match solver::has_tdl(g, k, cfg) {
            SearchOutcome::Witness(w) => {
                let value = json!({ "k": k, "witness": w.labels() });
                record(cache, &key, &query, &value, started.elapsed().as_millis() as u64);
                if json {
                    println!("{value}");
                } else {
                    println!("labeling with ceiling {k}: {:?}", w.labels());
                }
                Ok(EXIT_OK)
            }
            SearchOutcome::NoLabeling => {
                let value = json!({ "k": k, "witness": null });
                record(cache, &key, &query, &value, started.elapsed().as_millis() as u64);
                if json {
                    println!("{value}");
                } else {
                    println!("no labeling with ceiling {k} (certified by exhausted search)");
                }
                Ok(EXIT_OK)
            }
            SearchOutcome::BudgetExceeded => Ok(budget_exceeded()),
        };
    }
    let query = "chi".to_string();
    if let Some(value) = cache.lookup(&key, &query) {
        print_cached(&value, json);
        return Ok(EXIT_OK);
    }
    let report = solver::lower_bound_report(g).map_err(|e| e.to_string())?;
    let started = Instant::now();
    match solver::chi_td(g, cfg).map_err(|e| e.to_string())? {
        ChiOutcome::Exact { chi, witness } => {
            let value = json!({ "chi": chi, "witness": witness.labels() });
            record(cache, &key, &query, &value, started.elapsed().as_millis() as u64);
            if json {
                println!("{value}");
            } else {
                println!("chi_td = {chi}");
                println!("witness (vertex 0..{}): {:?}", g.n() - 1, witness.labels());
                for note in &report.notes {
                    println!("  bound: {note}");
                }
            }
            Ok(EXIT_OK)
        }
        ChiOutcome::Bounded { lower, upper, .. } => {
            if json {
                println!("{}", json!({ "lower": lower, "upper": upper }));
            } else {
                match upper {
                    Some(u) => println!("budget exceeded: chi_td in [{lower}, {u}]"),
                    None => println!("budget exceeded: chi_td >= {lower}"),
                }
            }
            Ok(EXIT_BUDGET)
        }
    }
}

fn print_cached(value: &serde_json::Value, json: bool) {
    if json {
        println!("{value}");
    } else {
        println!("cached: {value}");
    }
}

fn cmd_validate(g: &graphs::Graph, f: &VertexLabeling, json: bool) -> Result<i32, String> {
    let violations = labeling::validate(g, f).map_err(|e| e.to_string())?;
    if json {
        for v in &violations {
            println!("{}", serde_json::to_string(v).unwrap());
        }
    } else if violations.is_empty() {
        println!("valid: proper total difference labeling, max label {}", f.max_label().unwrap());
    } else {
        for v in &violations {
            println!("{} at {:?}", v.kind, v.witness);
        }
        println!("{} violation(s)", violations.len());
    }
    Ok(EXIT_OK)
}

fn cmd_wsr_table(max_n: usize, json: bool) -> Result<i32, String> {
    if max_n < 1 {
        return Err("--max-n must be at least 1".into());
    }
    let table = wsr::stats_table(max_n);
    if json {
        for row in &table {
            println!("{}", serde_json::to_string(row).unwrap());
        }
    } else {
        println!("{:>4} {:>6} {:>6} {:>6} {:>6} {:>6}", "n", "OS", "E", "D", "Mi1", "Mi2");
        for s in &table {
            println!(
                "{:>4} {:>6} {:>6} {:>6} {:>6} {:>6}",
                s.n, s.os, s.e, s.d, s.mi1, s.mi2
            );
        }
    }
    Ok(EXIT_OK)
}

fn cmd_wsr_bfile(seq: &str, max_n: usize) -> Result<i32, String> {
    if max_n < 1 {
        return Err("--max-n must be at least 1".into());
    }
    // J needs E one step further out.
    let table = wsr::stats_table(if seq == "j" { max_n + 1 } else { max_n });
    for n in 1..=max_n {
        let s = &table[n - 1];
        let value = match seq {
            "os" => s.os,
            "e" => s.e,
            "d" => s.d,
            "mi1" => s.mi1,
            "mi2" => s.mi2,
            "j" => table[n].e - s.e,
            other => return Err(format!("unknown sequence `{other}`")),
        };
        println!("{n} {value}");
    }
    Ok(EXIT_OK)
}

fn cmd_starelim(delta: usize, max_x: Option<u64>, json: bool) -> Result<i32, String> {
    if delta < 1 {
        return Err("--delta must be at least 1".into());
    }
    let bound = starelim::star_elim_lower_bound(delta);
    let last = max_x.unwrap_or(bound).min(bound);
    for x in 1..=last {
        let trace = starelim::eliminate_fixpoint(x, delta);
        if json {
            println!("{}", serde_json::to_string(&trace).unwrap());
        } else {
            let removed: Vec<u64> = trace.steps.iter().map(|s| s.removed).collect();
            println!(
                "x = {x}: removed {:?}, survivors {:?}{}",
                removed,
                trace.survivors,
                if trace.contradiction { " -> contradiction" } else { "" }
            );
        }
    }
    if json {
        println!("{}", serde_json::json!({ "delta": delta, "lower_bound": bound }));
    } else {
        println!("star-elimination lower bound for degree {delta}: chi_td >= {bound}");
    }
    Ok(EXIT_OK)
}

fn parse_model(name: &str) -> Result<LatticeModel, String> {
    LatticeModel::parse(name).ok_or_else(|| format!("unknown lattice model `{name}`"))
}

fn cmd_lattice_verify(model: &str, fixture: &str, json: bool) -> Result<i32, String> {
    let model = parse_model(model)?;
    let p = lattice::fixture_labeling(fixture).map_err(|e| e.to_string())?;
    let violations = lattice::validate_periodic(model, &p).map_err(|e| e.to_string())?;
    if json {
        for v in &violations {
            println!("{}", serde_json::to_string(v).unwrap());
        }
        println!(
            "{}",
            json!({ "model": model.id(), "cells": p.domain_size(), "max_label": p.max_label(), "valid": violations.is_empty() })
        );
    } else if violations.is_empty() {
        println!(
            "valid periodic labeling of the {} lattice: {} cells, max label {}",
            model.id(),
            p.domain_size(),
            p.max_label()
        );
    } else {
        for v in &violations {
            println!("{} at {:?}", v.kind, v.witness);
        }
        println!("{} violation(s)", violations.len());
    }
    Ok(EXIT_OK)
}

fn cmd_lattice_search(
    model: &str,
    k: u32,
    max_domain: usize,
    budget: &BudgetArg,
    json: bool,
) -> Result<i32, String> {
    let model = parse_model(model)?;
    if model.dim() != 2 {
        return Err(format!(
            "domain enumeration covers the two-dimensional lattices; for the {} lattice use `lattice search-linear`",
            model.id()
        ));
    }
    let deadline = if budget.budget > 0.0 {
        Some(Duration::from_secs_f64(budget.budget))
    } else {
        None
    };
    let started = Instant::now();
    for basis in lattice::enumerate_bases(model, max_domain) {
        let remaining = deadline.map(|d| d.saturating_sub(started.elapsed()));
        if remaining.is_some_and(|r| r.is_zero()) {
            return Ok(budget_exceeded());
        }
        match lattice::search_periodic(model, k, &basis, remaining).map_err(|e| e.to_string())? {
            PeriodicSearchOutcome::Found(p) => {
                if json {
                    println!(
                        "{}",
                        json!({ "model": model.id(), "k": k, "cells": p.domain_size(), "fixture": lattice::emit_fixture(&p) })
                    );
                } else {
                    println!(
                        "found a {k}-labeling of the {} lattice on {} cells:",
                        model.id(),
                        p.domain_size()
                    );
                    print!("{}", lattice::emit_fixture(&p));
                }
                return Ok(EXIT_OK);
            }
            PeriodicSearchOutcome::NoneForBasis => {}
            PeriodicSearchOutcome::BudgetExceeded => return Ok(budget_exceeded()),
        }
    }
    if json {
        println!("{}", json!({ "model": model.id(), "k": k, "max_domain": max_domain, "found": false }));
    } else {
        println!(
            "no periodic {k}-labeling of the {} lattice on any domain with <= {max_domain} cells",
            model.id()
        );
    }
    Ok(EXIT_OK)
}

fn cmd_lattice_search_linear(model: &str, row: &str, budget: &BudgetArg) -> Result<i32, String> {
    let model = parse_model(model)?;
    let row: Vec<u32> = row
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| format!("invalid row entry `{t}`")))
        .collect::<Result<_, _>>()?;
    if row.is_empty() {
        return Err("row must be nonempty".into());
    }
    let m = row.len() as i64;
    let deadline = if budget.budget > 0.0 {
        Some(Instant::now() + Duration::from_secs_f64(budget.budget))
    } else {
        None
    };
    // All arrangements of the row (first entry pinned: rotations of the
    // functional are translations of the labeling) crossed with coefficient
    // vectors (1, a, ...) over residues.
    let mut arrangement = row.clone();
    let mut coeffs = vec![0i64; model.dim()];
    coeffs[0] = 1;
    let found = search_arrangements(&mut arrangement, 1, &mut |arr| {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return Some(None);
        }
        let mut c = coeffs.clone();
        search_coeffs(model, arr, &mut c, 1, m)
            .map(|(c, p)| Some((arr.to_vec(), c, p)))
    });
    match found {
        Some(Some((arr, c, p))) => {
            println!(
                "found: row {:?} with coefficients {:?}, max label {}",
                arr,
                &c[..model.dim()],
                p.max_label()
            );
            print!("{}", lattice::emit_fixture(&p));
            Ok(EXIT_OK)
        }
        Some(None) => Ok(budget_exceeded()),
        None => {
            println!("no linear-functional labeling for that row");
            Ok(EXIT_OK)
        }
    }
}

/// Heap-style permutation of `row[fixed..]`; `visit` returns Some to stop.
fn search_arrangements<T>(
    row: &mut Vec<u32>,
    fixed: usize,
    visit: &mut impl FnMut(&[u32]) -> Option<T>,
) -> Option<T> {
    if fixed == row.len() {
        return visit(row);
    }
    for i in fixed..row.len() {
        row.swap(fixed, i);
        if let Some(hit) = search_arrangements(row, fixed + 1, visit) {
            return Some(hit);
        }
        row.swap(fixed, i);
    }
    None
}

fn search_coeffs(
    model: LatticeModel,
    row: &[u32],
    coeffs: &mut Vec<i64>,
    axis: usize,
    m: i64,
) -> Option<(Vec<i64>, lattice::PeriodicLabeling)> {
    if axis == model.dim() {
        let p = lattice::linear_functional_labeling(model, row, coeffs).ok()?;
        return match lattice::validate_periodic(model, &p) {
            Ok(v) if v.is_empty() => Some((coeffs.clone(), p)),
            _ => None,
        };
    }
    for a in 0..m {
        coeffs[axis] = a;
        if let Some(hit) = search_coeffs(model, row, coeffs, axis + 1, m) {
            return Some(hit);
        }
    }
    None
}

fn cmd_lattice_tree(rules_text: &str, json: bool) -> Result<i32, String> {
    let rules = lattice::parse_tree_rules(rules_text).map_err(|e| e.to_string())?;
    let violations = lattice::validate_tree_rulemap(&rules);
    let max_label = rules.rules.keys().copied().max().unwrap_or(rules.root);
    if json {
        for v in &violations {
            println!("{}", serde_json::to_string(v).unwrap());
        }
        println!(
            "{}",
            json!({ "root": rules.root, "max_label": max_label, "valid": violations.is_empty() })
        );
    } else if violations.is_empty() {
        println!("valid infinite-binary-tree rule map, max label {max_label}");
    } else {
        for v in &violations {
            println!("{:?} at {:?}", v.kind, v.witness);
        }
        println!("{} violation(s)", violations.len());
    }
    Ok(EXIT_OK)
}

fn cmd_survey(
    order: usize,
    cfg: &SearchConfig,
    cache: &CacheStore,
    json: bool,
) -> Result<i32, String> {
    if !(1..=6).contains(&order) {
        return Err("--order must be between 1 and 6".into());
    }
    let graphs = graphs::enumerate_connected(order).map_err(|e| e.to_string())?;
    let mut verdicts: Vec<(String, SaturabilityVerdict)> = Vec::new();
    for g in &graphs {
        let cert = graphs::canonical_form(g).map_err(|e| e.to_string())?.to_hex();
        let verdict = match cache.lookup(&cert, "saturability") {
            Some(value) => serde_json::from_value(value)
                .map_err(|e| format!("corrupt cached record for {cert}: {e}"))?,
            None => {
                let started = Instant::now();
                let verdict = match analysis::saturability(g, cfg) {
                    Ok(v) => v,
                    Err(solver::SolverError::BudgetExceeded) => return Ok(budget_exceeded()),
                    Err(e) => return Err(e.to_string()),
                };
                record(
                    cache,
                    &cert,
                    "saturability",
                    &serde_json::to_value(&verdict).unwrap(),
                    started.elapsed().as_millis() as u64,
                );
                verdict
            }
        };
        verdicts.push((cert, verdict));
    }
    let chi_eq = verdicts.iter().filter(|(_, v)| v.applicable).count();
    let saturable = verdicts.iter().filter(|(_, v)| v.class.is_saturable()).count();
    let supersaturable = verdicts
        .iter()
        .filter(|(_, v)| v.class == analysis::SaturClass::Supersaturable)
        .count();
    if json {
        for (cert, v) in &verdicts {
            println!("{}", json!({ "certificate": cert, "verdict": v }));
        }
        println!(
            "{}",
            json!({ "order": order, "scanned": verdicts.len(), "chi_equals_order": chi_eq, "saturable": saturable, "supersaturable": supersaturable })
        );
    } else {
        println!(
            "order {order}: {} graphs scanned, {} with chi_td = {order}, {} saturable, {} supersaturable",
            verdicts.len(),
            chi_eq,
            saturable,
            supersaturable
        );
        for (cert, v) in &verdicts {
            if v.applicable {
                println!("  {cert}: chi={} {}", v.chi, v.class);
            }
        }
    }
    Ok(EXIT_OK)
}
