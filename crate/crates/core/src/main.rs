//! Command-line surface over the library: book numbers, freeness checks,
//! closed-form values, constructions, exact search, gadget constants,
//! and the verification suites.
//!
//! graph6 is the universal graph interchange on stdin/stdout; stdout
//! carries data, stderr carries diagnostics. Exit codes: 2 malformed
//! input, 3 no characterization/construction, 4 budget exhausted,
//! 5 gadget validation failure, 1 verification failure.

use std::collections::HashMap;
use std::io::Read;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};

use bookturan::books;
use bookturan::cache;
use bookturan::canon::canonical_code;
use bookturan::catalog::{self, GadgetId};
use bookturan::graph::Graph;
use bookturan::graph6;
use bookturan::search::{self, Census, SearchConfig, SearchMode};
use bookturan::structure;

const EXIT_MALFORMED: u8 = 2;
const EXIT_NOT_CHARACTERIZED: u8 = 3;
const EXIT_BUDGET: u8 = 4;
const EXIT_GADGET: u8 = 5;

#[derive(Parser)]
#[command(
    name = "bookturan",
    version,
    about = "Book numbers and exact Turán values for book graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the book number and a witness edge for each input graph.
    Bk {
        /// graph6 line, file of graph6 lines, or '-' for stdin.
        input: Option<String>,
    },
    /// Decide B_p-freeness for each input graph; exit 0 iff all are free.
    Check {
        #[arg(long)]
        p: usize,
        input: Option<String>,
    },
    /// Closed-form ex(n, B_p) with the case that produced it.
    Formula {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
    },
    /// Emit a witness graph (default) or the complete extremal family.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        /// Emit the whole family; only available where the
        /// characterization is complete.
        #[arg(long)]
        all: bool,
    },
    /// Exact ex(n, B_p) by search, with the results cache.
    Exact {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        /// Also emit the extremal graphs as graph6 lines.
        #[arg(long)]
        enumerate: bool,
        /// Soft wall-clock budget in seconds.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Recompute even if a cached record exists.
        #[arg(long)]
        force: bool,
    },
    /// Print an embedded gadget constant after validating it.
    Gadget {
        #[arg(long)]
        id: String,
    },
    /// Run a verification suite; exit 0 iff every check passes.
    Verify {
        #[arg(long)]
        suite: String,
    },
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Bk { input } => cmd_bk(input),
        Cmd::Check { p, input } => cmd_check(p, input),
        Cmd::Formula { n, p } => cmd_formula(n, p),
        Cmd::Construct { n, p, all } => cmd_construct(n, p, all),
        Cmd::Exact {
            n,
            p,
            enumerate,
            budget,
            workers,
            force,
        } => cmd_exact(n, p, enumerate, budget, workers, force),
        Cmd::Gadget { id } => cmd_gadget(&id),
        Cmd::Verify { suite } => cmd_verify(&suite),
    }
}

/// Reads graphs from a graph6 literal, a file of lines, or stdin.
fn read_graphs(input: Option<String>) -> Result<Vec<Graph>, String> {
    let text = match input.as_deref() {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| e.to_string())?;
            buf
        }
        Some(s) if Path::new(s).is_file() => {
            std::fs::read_to_string(s).map_err(|e| e.to_string())?
        }
        Some(s) => s.to_string(),
    };
    let graphs = graph6::decode_lines(&text).map_err(|e| e.to_string())?;
    if graphs.is_empty() {
        return Err("no graphs in input".to_string());
    }
    Ok(graphs)
}

fn cmd_bk(input: Option<String>) -> ExitCode {
    let graphs = match read_graphs(input) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_MALFORMED);
        }
    };
    for g in &graphs {
        match books::max_book_witness(g) {
            Ok(w) => println!(
                "bk={} edge=({},{}) pages={}",
                w.pages, w.edge.0, w.edge.1, w.pages
            ),
            Err(_) => println!("bk=0 edge=none pages=0"),
        }
    }
    ExitCode::SUCCESS
}

fn cmd_check(p: usize, input: Option<String>) -> ExitCode {
    if p < 1 {
        eprintln!("error: p must be at least 1");
        return ExitCode::from(EXIT_MALFORMED);
    }
    let graphs = match read_graphs(input) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_MALFORMED);
        }
    };
    let mut all_free = true;
    for g in &graphs {
        if books::is_book_free(g, p) {
            println!("FREE");
        } else {
            all_free = false;
            let w = books::max_book_witness(g).expect("a non-free graph has edges");
            println!("CONTAINS edge=({},{})", w.edge.0, w.edge.1);
        }
    }
    if all_free {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn cmd_formula(n: usize, p: usize) -> ExitCode {
    if n < 1 || p < 1 {
        eprintln!("error: n and p must be at least 1");
        return ExitCode::from(EXIT_MALFORMED);
    }
    let tv = catalog::turan_formula(n, p);
    match tv.value {
        Some(v) => println!("ex({n},B_{p})={v} [case: {}]", tv.case.citation()),
        None => println!("ex({n},B_{p})=unknown"),
    }
    ExitCode::SUCCESS
}

/// Graphs are always emitted in canonical labeling.
fn canonical_line(g: &Graph) -> String {
    graph6::encode(&canonical_code(g).to_graph())
}

fn cmd_construct(n: usize, p: usize, all: bool) -> ExitCode {
    if all {
        match catalog::extremal_family(n, p) {
            Ok(family) => {
                for g in &family.graphs {
                    println!("{}", canonical_line(g));
                }
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_NOT_CHARACTERIZED)
            }
        }
    } else {
        match catalog::witness_graph(n, p) {
            Ok(g) => {
                println!("{}", canonical_line(&g));
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_NOT_CHARACTERIZED)
            }
        }
    }
}

fn cmd_exact(
    n: usize,
    p: usize,
    enumerate: bool,
    budget: Option<u64>,
    workers: usize,
    force: bool,
) -> ExitCode {
    let dir = cache::cache_dir();
    let rec = if force {
        None
    } else {
        cache::load(&dir, n, p)
    };
    let rec = match rec {
        Some(rec) => {
            eprintln!("cache: hit at {}", dir.display());
            rec
        }
        None => {
            let cfg = SearchConfig {
                mode: SearchMode::BranchAndBound,
                budget: budget.map(Duration::from_secs),
                seed: None,
                collect_extremal: true,
                workers,
            };
            match search::exact_turan(n, p, &cfg) {
                Ok(rec) => {
                    eprintln!(
                        "search: nodes={} bound_prunes={} violation_prunes={}",
                        rec.stats.nodes, rec.stats.bound_prunes, rec.stats.violation_prunes
                    );
                    if let Err(e) = cache::save(&dir, &rec) {
                        eprintln!("cache: write failed: {e}");
                    }
                    rec
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_MALFORMED);
                }
            }
        }
    };
    println!("ex={} count={} complete={}", rec.ex, rec.count, rec.complete);
    if enumerate {
        for line in &rec.extremal {
            println!("{line}");
        }
    }
    if rec.complete {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_BUDGET)
    }
}

fn cmd_gadget(id: &str) -> ExitCode {
    let Some(id) = GadgetId::parse(id) else {
        eprintln!("error: gadget id must be one of F, W, Q, Y, S");
        return ExitCode::from(EXIT_MALFORMED);
    };
    if !catalog::validate_gadget(id) {
        eprintln!("error: embedded constant for {} fails validation", id.name());
        return ExitCode::from(EXIT_GADGET);
    }
    println!("{}", graph6::encode(&catalog::gadget(id)));
    ExitCode::SUCCESS
}

// ============================================================================
// Verification suites
// ============================================================================

struct Verifier {
    censuses: HashMap<usize, Census>,
    failures: usize,
}

impl Verifier {
    fn new() -> Self {
        Verifier {
            censuses: HashMap::new(),
            failures: 0,
        }
    }

    fn census(&mut self, n: usize) -> &Census {
        self.censuses.entry(n).or_insert_with(|| search::census(n))
    }

    fn report(&mut self, name: &str, started: Instant, ok: bool, detail: String) {
        let ms = started.elapsed().as_millis();
        if ok {
            println!("PASS {name} ({ms} ms)");
        } else {
            self.failures += 1;
            println!("FAIL {name} ({ms} ms): {detail}");
        }
    }

    fn suite_formulas(&mut self) {
        for n in 4..=9usize {
            for p in 1..=(n - 2) {
                let Some(expected) = catalog::turan_formula(n, p).value else {
                    continue;
                };
                let t = Instant::now();
                let (oracle_ex, oracle_codes) = self.census(n).turan(p);
                let bb = search::exact_turan(n, p, &SearchConfig::default());
                let (ok, detail) = match bb {
                    Ok(rec) => {
                        let bb_codes: Vec<String> = rec.extremal.clone();
                        let oracle_lines: Vec<String> = oracle_codes
                            .iter()
                            .map(|c| graph6::encode(&c.to_graph()))
                            .collect();
                        if rec.ex != expected || oracle_ex != expected {
                            (
                                false,
                                format!(
                                    "formula={expected} branch-and-bound={} enumeration={oracle_ex}",
                                    rec.ex
                                ),
                            )
                        } else if bb_codes != oracle_lines {
                            (false, "extremal sets disagree".to_string())
                        } else {
                            (true, String::new())
                        }
                    }
                    Err(e) => (false, e.to_string()),
                };
                self.report(&format!("formula ex({n},B_{p})={expected}"), t, ok, detail);
            }
        }
    }

    fn suite_families(&mut self) {
        let mut cells: Vec<(usize, usize)> = Vec::new();
        for p in 2..=7 {
            cells.push((p + 2, p));
        }
        for p in 2..=6 {
            cells.push((p + 3, p));
        }
        for p in 3..=5 {
            cells.push((p + 4, p));
        }
        cells.push((9, 4));
        for (n, p) in cells {
            let t = Instant::now();
            let (ok, detail) = match catalog::extremal_family(n, p) {
                Ok(family) => {
                    let catalog_codes: Vec<_> =
                        family.graphs.iter().map(canonical_code).collect();
                    let (_, search_codes) = self.census(n).turan(p);
                    if catalog_codes == search_codes {
                        (true, String::new())
                    } else {
                        (
                            false,
                            format!(
                                "catalog has {} classes, search found {}",
                                catalog_codes.len(),
                                search_codes.len()
                            ),
                        )
                    }
                }
                Err(e) => (false, e.to_string()),
            };
            self.report(&format!("family ({n},{p})"), t, ok, detail);
        }
    }

    fn suite_gadgets(&mut self) {
        for id in GadgetId::ALL {
            let t = Instant::now();
            let ok = catalog::validate_gadget(id);
            self.report(
                &format!("gadget {}", id.name()),
                t,
                ok,
                "embedded constant fails profile or plug-in".to_string(),
            );
        }
    }

    fn suite_lemmas(&mut self) {
        let mut state = 0x9e3779b97f4a7c15u64;

        let t = Instant::now();
        let mut equiv_ok = true;
        let mut detail = String::new();
        for _ in 0..10_000 {
            let n = 5 + (splitmix(&mut state) % 8) as usize; // 5..=12
            let p = 1 + (splitmix(&mut state) % (n as u64 - 2)) as usize; // 1..=n-2
            let g = random_graph(n, &mut state);
            let primal = books::is_book_free(&g, p);
            let dual = books::cobook_criterion(&g, p).expect("n >= p+2 by construction");
            if primal != dual {
                equiv_ok = false;
                detail = format!("disagreement at n={n}, p={p}");
                break;
            }
        }
        self.report("freeness criteria agree (10000 random graphs)", t, equiv_ok, detail);

        let t = Instant::now();
        let mut sound_ok = true;
        let mut detail = String::new();
        for _ in 0..500 {
            let n = 6 + (splitmix(&mut state) % 7) as usize; // 6..=12
            let p = 1 + (splitmix(&mut state) % (n as u64 - 5)) as usize; // 1..=n-5
            let len = 4 + (splitmix(&mut state) % (n as u64 - 4)) as usize; // 4..=n-1... capped below
            let len = len.min(n - 1).max(4);
            let rest = random_graph(n - len, &mut state);
            let gbar =
                Graph::disjoint_union(&[Graph::cycle(len).unwrap(), rest]).unwrap();
            let g = gbar.complement();
            let implied = structure::lemma2_implies_book(&g, p).expect("order >= p+5");
            if !implied || books::is_book_free(&g, p) {
                sound_ok = false;
                detail = format!("cycle component of length {len} at n={n}, p={p}");
                break;
            }
        }
        self.report("long cycle component forces a book (500 instances)", t, sound_ok, detail);

        for p in 4..=10usize {
            let t = Instant::now();
            let n = p + 5;
            let (ok, detail) = match catalog::extremal_family(n, p) {
                Ok(family) => {
                    let mut ok = true;
                    let mut detail = String::new();
                    for g in &family.graphs {
                        let gbar = g.complement();
                        let l9 = structure::lemma9_holds(&gbar, p) == Ok(true);
                        let l10 = structure::lemma10_holds(&gbar, p) == Ok(true);
                        let expected = if p % 3 == 1 {
                            structure::DegreeCheck::TwoRegular
                        } else {
                            structure::DegreeCheck::FourThrees
                        };
                        let l11 = structure::lemma11_degree_check(&gbar, p) == Ok(expected);
                        if !(l9 && l10 && l11) {
                            ok = false;
                            detail = format!("l9={l9} l10={l10} l11={l11}");
                            break;
                        }
                    }
                    (ok, detail)
                }
                Err(e) => (false, e.to_string()),
            };
            self.report(&format!("structure checks at ({n},{p})"), t, ok, detail);
        }
    }

    fn suite_conjecture(&mut self) {
        for n in 3..=10usize {
            let t = Instant::now();
            let (ok, detail) = match search::conjecture_check(n) {
                Ok(true) => (true, String::new()),
                Ok(false) => (false, "bound violated".to_string()),
                Err(e) => (false, e.to_string()),
            };
            let p = n.div_ceil(6);
            self.report(
                &format!("ex({n},B_{p}) <= {}", n * n / 4),
                t,
                ok,
                detail,
            );
        }
    }
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn random_graph(n: usize, state: &mut u64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if splitmix(state) % 2 == 0 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are valid")
}

fn cmd_verify(suite: &str) -> ExitCode {
    let mut v = Verifier::new();
    let started = Instant::now();
    match suite {
        "formulas" => v.suite_formulas(),
        "families" => v.suite_families(),
        "gadgets" => v.suite_gadgets(),
        "lemmas" => v.suite_lemmas(),
        "conjecture" => v.suite_conjecture(),
        "all" => {
            v.suite_formulas();
            v.suite_families();
            v.suite_gadgets();
            v.suite_lemmas();
            v.suite_conjecture();
        }
        other => {
            eprintln!(
                "error: unknown suite {other}; expected formulas|families|gadgets|lemmas|conjecture|all"
            );
            return ExitCode::from(EXIT_MALFORMED);
        }
    }
    let secs = started.elapsed().as_secs_f64();
    if v.failures == 0 {
        eprintln!("all checks passed in {secs:.1}s");
        ExitCode::SUCCESS
    } else {
        eprintln!("{} check(s) failed in {secs:.1}s", v.failures);
        ExitCode::FAILURE
    }
}
