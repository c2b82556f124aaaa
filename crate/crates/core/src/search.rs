//! Exact ex(n, B_p) by branch-and-bound over edge pairs, plus an
//! independent full-enumeration oracle built on isomorph-free graph
//! generation by canonical augmentation.
//!
//! The branch-and-bound walks the C(n,2) vertex pairs in colex order,
//! deciding include/exclude depth-first. Page counts per pair are kept
//! incrementally (word operations on adjacency rows), so a decision that
//! would give any edge p pages is rejected on the spot — B_p-freeness is
//! closed under edge deletion, which makes that prune sound. The edge
//! bound combines the undecided-pair count with exact values for smaller
//! orders computed by the same search, bottom-up.

use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::books;
use crate::canon::{canonical_code, CanonicalCode};
use crate::catalog;
use crate::graph::Graph;
use crate::graph6;

/// Hard order cap for search; completion at default budget is only
/// guaranteed well below this.
pub const MAX_SEARCH_ORDER: usize = 16;

/// Full enumeration is only permitted up to this order.
pub const MAX_ENUMERATION_ORDER: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("order {0} exceeds the search maximum of {MAX_SEARCH_ORDER}")]
    OrderTooLarge(usize),
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("budget exhausted before completion")]
    BudgetExhausted,
    #[error("mode mismatch: {0}")]
    Mismatch(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    BranchAndBound,
    FullEnumeration,
}

/// A caller-supplied lower bound, certified by a graph that attains it.
#[derive(Debug, Clone)]
pub struct SeedBound {
    pub size: usize,
    pub graph: Graph,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub mode: SearchMode,
    /// Soft wall-clock limit, checked between node batches.
    pub budget: Option<Duration>,
    pub seed: Option<SeedBound>,
    pub collect_extremal: bool,
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            mode: SearchMode::BranchAndBound,
            budget: None,
            seed: None,
            collect_extremal: true,
            workers: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub bound_prunes: u64,
    pub violation_prunes: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: SearchStats) {
        self.nodes += other.nodes;
        self.bound_prunes += other.bound_prunes;
        self.violation_prunes += other.violation_prunes;
    }
}

/// Search output for one (n, p) cell.
#[derive(Debug, Clone)]
pub struct TuranRecord {
    pub n: usize,
    pub p: usize,
    pub ex: usize,
    /// Canonical graph6 lines, deduplicated and sorted; empty unless
    /// extremal graphs were collected.
    pub extremal: Vec<String>,
    pub count: usize,
    /// False when the budget ran out; `ex` is then only a certified
    /// lower bound.
    pub complete: bool,
    pub stats: SearchStats,
}

impl TuranRecord {
    pub fn extremal_graphs(&self) -> Vec<Graph> {
        self.extremal
            .iter()
            .map(|l| graph6::decode(l).expect("records store valid graph6"))
            .collect()
    }
}

/// Exact Turán number and, optionally, every extremal graph up to
/// isomorphism.
pub fn exact_turan(n: usize, p: usize, cfg: &SearchConfig) -> Result<TuranRecord, SearchError> {
    if p < 1 {
        return Err(SearchError::InvalidConfig("p must be at least 1".into()));
    }
    if cfg.workers < 1 {
        return Err(SearchError::InvalidConfig(
            "worker count must be at least 1".into(),
        ));
    }
    if let Some(seed) = &cfg.seed {
        let valid = seed.graph.order() == n
            && seed.graph.size() == seed.size
            && books::is_book_free(&seed.graph, p);
        if !valid {
            return Err(SearchError::InvalidConfig(
                "seed bound is not certified by the supplied graph".into(),
            ));
        }
    }
    match cfg.mode {
        SearchMode::FullEnumeration => {
            if n > MAX_ENUMERATION_ORDER {
                return Err(SearchError::InvalidConfig(format!(
                    "full enumeration is limited to order {MAX_ENUMERATION_ORDER}, got {n}"
                )));
            }
            Ok(enumeration_record(n, p, cfg))
        }
        SearchMode::BranchAndBound => {
            if n > MAX_SEARCH_ORDER {
                return Err(SearchError::OrderTooLarge(n));
            }
            Ok(branch_and_bound_record(n, p, cfg))
        }
    }
}

/// All B_p-free graphs of order n with ex(n, B_p) edges, canonical order.
pub fn enumerate_extremal(n: usize, p: usize, cfg: &SearchConfig) -> Result<Vec<Graph>, SearchError> {
    let mut cfg = cfg.clone();
    cfg.collect_extremal = true;
    let rec = exact_turan(n, p, &cfg)?;
    if !rec.complete {
        return Err(SearchError::BudgetExhausted);
    }
    Ok(rec.extremal_graphs())
}

/// Agreement report between the two search routes.
#[derive(Debug, Clone)]
pub struct CrossReport {
    pub n: usize,
    pub p: usize,
    pub ex: usize,
    pub count: usize,
    pub branch_and_bound: Duration,
    pub full_enumeration: Duration,
}

/// Runs both modes and insists they agree on the value and on the
/// extremal set. A mismatch is fatal: it means an implementation bug.
pub fn cross_validate(n: usize, p: usize) -> Result<CrossReport, SearchError> {
    let t0 = Instant::now();
    let bb = exact_turan(
        n,
        p,
        &SearchConfig {
            mode: SearchMode::BranchAndBound,
            ..SearchConfig::default()
        },
    )?;
    let bb_time = t0.elapsed();
    let t1 = Instant::now();
    let oracle = exact_turan(
        n,
        p,
        &SearchConfig {
            mode: SearchMode::FullEnumeration,
            ..SearchConfig::default()
        },
    )?;
    let oracle_time = t1.elapsed();
    if bb.ex != oracle.ex {
        return Err(SearchError::Mismatch(format!(
            "ex({n},B_{p}): branch-and-bound found {}, enumeration found {}",
            bb.ex, oracle.ex
        )));
    }
    if bb.extremal != oracle.extremal {
        return Err(SearchError::Mismatch(format!(
            "extremal sets at ({n},{p}) differ: {} vs {} graphs",
            bb.extremal.len(),
            oracle.extremal.len()
        )));
    }
    Ok(CrossReport {
        n,
        p,
        ex: bb.ex,
        count: bb.count,
        branch_and_bound: bb_time,
        full_enumeration: oracle_time,
    })
}

/// Checks ex(n, B_ceil(n/6)) ≤ floor(n²/4).
pub fn conjecture_check(n: usize) -> Result<bool, SearchError> {
    let p = n.div_ceil(6);
    let rec = exact_turan(
        n,
        p,
        &SearchConfig {
            collect_extremal: false,
            ..SearchConfig::default()
        },
    )?;
    if !rec.complete {
        return Err(SearchError::BudgetExhausted);
    }
    Ok(rec.ex <= n * n / 4)
}

// ============================================================================
// Isomorph-free generation (canonical augmentation with dedup)
// ============================================================================

/// All isomorphism classes of order `n` whose every member (and every
/// induced subgraph along the way) satisfies `keep`. With a hereditary
/// `keep` the result is exactly the classes of order `n` passing it;
/// with `|_| true` it is every class.
///
/// Returns the sorted codes, a completeness flag (false on budget
/// exhaustion), and the candidate/rejected counters.
pub(crate) fn generate_classes<F>(
    n: usize,
    mut keep: F,
    deadline: Option<Instant>,
) -> (Vec<CanonicalCode>, bool, u64, u64)
where
    F: FnMut(&Graph) -> bool,
{
    let mut candidates = 0u64;
    let mut rejected = 0u64;
    if n == 0 {
        return (vec![canonical_code(&Graph::empty(0).unwrap())], true, 0, 0);
    }
    let k1 = Graph::empty(1).unwrap();
    let mut current: Vec<CanonicalCode> = if keep(&k1) {
        vec![canonical_code(&k1)]
    } else {
        Vec::new()
    };
    let mut tick = 0u32;
    for level in 2..=n {
        let mut next: HashSet<CanonicalCode> = HashSet::new();
        for code in &current {
            let parent = code.to_graph();
            for mask in 0u64..(1u64 << (level - 1)) {
                candidates += 1;
                tick += 1;
                if tick >= 8192 {
                    tick = 0;
                    if let Some(d) = deadline {
                        if Instant::now() >= d {
                            let mut partial: Vec<_> = next.into_iter().collect();
                            partial.sort();
                            return (partial, false, candidates, rejected);
                        }
                    }
                }
                let child = parent.extend_with_vertex(mask);
                if !keep(&child) {
                    rejected += 1;
                    continue;
                }
                next.insert(canonical_code(&child));
            }
        }
        let mut v: Vec<_> = next.into_iter().collect();
        v.sort();
        current = v;
    }
    (current, true, candidates, rejected)
}

/// One generated isomorphism class with its size and book number.
#[derive(Debug, Clone)]
pub struct CensusEntry {
    pub code: CanonicalCode,
    pub size: usize,
    pub bk: usize,
}

/// Every isomorphism class of order `n`, with per-class size and book
/// number. Ground truth for any p at once.
pub struct Census {
    pub n: usize,
    pub entries: Vec<CensusEntry>,
}

pub fn census(n: usize) -> Census {
    let (codes, complete, _, _) = generate_classes(n, |_| true, None);
    debug_assert!(complete);
    let entries = codes
        .into_iter()
        .map(|code| {
            let g = code.to_graph();
            CensusEntry {
                size: g.size(),
                bk: books::book_number(&g),
                code,
            }
        })
        .collect();
    Census { n, entries }
}

impl Census {
    pub fn class_count(&self) -> usize {
        self.entries.len()
    }

    /// Exact ex(n, B_p) with the sorted codes of all extremal classes.
    pub fn turan(&self, p: usize) -> (usize, Vec<CanonicalCode>) {
        let ex = self
            .entries
            .iter()
            .filter(|e| e.bk < p)
            .map(|e| e.size)
            .max()
            .unwrap_or(0);
        let mut codes: Vec<CanonicalCode> = self
            .entries
            .iter()
            .filter(|e| e.bk < p && e.size == ex)
            .map(|e| e.code.clone())
            .collect();
        codes.sort();
        (ex, codes)
    }
}

fn enumeration_record(n: usize, p: usize, cfg: &SearchConfig) -> TuranRecord {
    let deadline = cfg.budget.map(|b| Instant::now() + b);
    let (codes, complete, candidates, rejected) =
        generate_classes(n, |g| books::is_book_free(g, p), deadline);
    let ex = codes.iter().map(|c| c.to_graph().size()).max().unwrap_or(0);
    let mut extremal: Vec<CanonicalCode> = codes
        .into_iter()
        .filter(|c| c.to_graph().size() == ex)
        .collect();
    extremal.sort();
    let lines: Vec<String> = if cfg.collect_extremal {
        extremal
            .iter()
            .map(|c| graph6::encode(&c.to_graph()))
            .collect()
    } else {
        Vec::new()
    };
    TuranRecord {
        n,
        p,
        ex,
        count: lines.len(),
        extremal: lines,
        complete,
        stats: SearchStats {
            nodes: candidates,
            bound_prunes: 0,
            violation_prunes: rejected,
        },
    }
}

// ============================================================================
// Branch and bound
// ============================================================================

/// Colex order over vertex pairs: (0,1),(0,2),(1,2),(0,3),...
fn colex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    pairs
}

struct Shared {
    best: AtomicUsize,
    aborted: AtomicBool,
}

struct Dfs<'a> {
    n: usize,
    p: usize,
    pairs: &'a [(usize, usize)],
    /// For pair index k in column v, the index where column v ends.
    col_end: &'a [usize],
    /// caps[k] bounds the edges of any B_p-free graph on k vertices.
    caps: &'a [usize],
    shared: &'a Shared,
    deadline: Option<Instant>,
    /// None: optimize (raise shared best). Some(t): collect graphs of size t.
    collect_target: Option<usize>,
    rows: Vec<u64>,
    common: Vec<u8>,
    edges: usize,
    found: HashSet<CanonicalCode>,
    stats: SearchStats,
    tick: u32,
}

impl<'a> Dfs<'a> {
    fn new(
        n: usize,
        p: usize,
        pairs: &'a [(usize, usize)],
        col_end: &'a [usize],
        caps: &'a [usize],
        shared: &'a Shared,
        deadline: Option<Instant>,
        collect_target: Option<usize>,
    ) -> Self {
        Dfs {
            n,
            p,
            pairs,
            col_end,
            caps,
            shared,
            deadline,
            collect_target,
            rows: vec![0; n],
            common: vec![0; n * n],
            edges: 0,
            found: HashSet::new(),
            stats: SearchStats::default(),
            tick: 0,
        }
    }

    fn reset(&mut self) {
        self.rows.iter_mut().for_each(|r| *r = 0);
        self.common.iter_mut().for_each(|c| *c = 0);
        self.edges = 0;
    }

    /// Adds edge (u,v), updating common-neighbor counts incrementally.
    /// Returns false if some edge now carries p pages.
    fn add_edge_checked(&mut self, u: usize, v: usize) -> bool {
        let n = self.n;
        let mut ok = (self.common[u * n + v] as usize) < self.p;
        let nu = self.rows[u];
        let nv = self.rows[v];
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        self.edges += 1;
        let mut t = nv;
        while t != 0 {
            let w = t.trailing_zeros() as usize;
            t &= t - 1;
            let c = self.common[u * n + w] + 1;
            self.common[u * n + w] = c;
            self.common[w * n + u] = c;
            if c as usize >= self.p && self.rows[u] & (1 << w) != 0 {
                ok = false;
            }
        }
        let mut t = nu;
        while t != 0 {
            let w = t.trailing_zeros() as usize;
            t &= t - 1;
            let c = self.common[v * n + w] + 1;
            self.common[v * n + w] = c;
            self.common[w * n + v] = c;
            if c as usize >= self.p && self.rows[v] & (1 << w) != 0 {
                ok = false;
            }
        }
        ok
    }

    fn remove_edge(&mut self, u: usize, v: usize) {
        let n = self.n;
        self.rows[u] &= !(1u64 << v);
        self.rows[v] &= !(1u64 << u);
        self.edges -= 1;
        let mut t = self.rows[v];
        while t != 0 {
            let w = t.trailing_zeros() as usize;
            t &= t - 1;
            let c = self.common[u * n + w] - 1;
            self.common[u * n + w] = c;
            self.common[w * n + u] = c;
        }
        let mut t = self.rows[u];
        while t != 0 {
            let w = t.trailing_zeros() as usize;
            t &= t - 1;
            let c = self.common[v * n + w] - 1;
            self.common[v * n + w] = c;
            self.common[w * n + v] = c;
        }
    }

    /// Upper bound on the final edge count from pair index k on: finish
    /// the current column, then cap each later column by both its width
    /// and the known bound for the induced prefix order.
    fn bound(&self, k: usize) -> usize {
        if k >= self.pairs.len() {
            return self.edges;
        }
        let v = self.pairs[k].1;
        let mut b = self.edges + (self.col_end[k] - k);
        b = b.min(self.caps[v + 1]);
        for u in (v + 1)..self.n {
            b = (b + u).min(self.caps[u + 1]);
        }
        b
    }

    fn run(&mut self, k: usize) {
        if self.shared.aborted.load(Ordering::Relaxed) {
            return;
        }
        self.stats.nodes += 1;
        self.tick += 1;
        if self.tick >= 4096 {
            self.tick = 0;
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.shared.aborted.store(true, Ordering::Relaxed);
                    return;
                }
            }
        }
        if k == self.pairs.len() {
            match self.collect_target {
                None => {
                    self.shared.best.fetch_max(self.edges, Ordering::Relaxed);
                }
                Some(t) => {
                    if self.edges == t {
                        let g = Graph::from_edges(
                            self.n,
                            &self
                                .pairs
                                .iter()
                                .filter(|&&(u, v)| self.rows[u] & (1 << v) != 0)
                                .copied()
                                .collect::<Vec<_>>(),
                        )
                        .expect("search state is a valid graph");
                        self.found.insert(canonical_code(&g));
                    }
                }
            }
            return;
        }
        let bound = self.bound(k);
        let prune = match self.collect_target {
            None => bound <= self.shared.best.load(Ordering::Relaxed),
            Some(t) => bound < t,
        };
        if prune {
            self.stats.bound_prunes += 1;
            return;
        }
        let (u, v) = self.pairs[k];
        if (self.common[u * self.n + v] as usize) < self.p {
            if self.add_edge_checked(u, v) {
                self.run(k + 1);
            } else {
                self.stats.violation_prunes += 1;
            }
            self.remove_edge(u, v);
        } else {
            self.stats.violation_prunes += 1;
        }
        self.run(k + 1);
    }

    /// Expands the tree to `depth` pairs, emitting viable decision
    /// prefixes instead of recursing further. Used to split work.
    fn spine(&mut self, k: usize, depth: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if k == depth || k == self.pairs.len() {
            out.push(cur.clone());
            return;
        }
        self.stats.nodes += 1;
        let bound = self.bound(k);
        let prune = match self.collect_target {
            None => bound <= self.shared.best.load(Ordering::Relaxed),
            Some(t) => bound < t,
        };
        if prune {
            self.stats.bound_prunes += 1;
            return;
        }
        let (u, v) = self.pairs[k];
        if (self.common[u * self.n + v] as usize) < self.p {
            if self.add_edge_checked(u, v) {
                cur.push(true);
                self.spine(k + 1, depth, cur, out);
                cur.pop();
            } else {
                self.stats.violation_prunes += 1;
            }
            self.remove_edge(u, v);
        } else {
            self.stats.violation_prunes += 1;
        }
        cur.push(false);
        self.spine(k + 1, depth, cur, out);
        cur.pop();
    }

    fn replay(&mut self, prefix: &[bool]) -> bool {
        for (k, &inc) in prefix.iter().enumerate() {
            if inc {
                let (u, v) = self.pairs[k];
                if !self.add_edge_checked(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

struct PhaseOutput {
    best: usize,
    found: Vec<CanonicalCode>,
    stats: SearchStats,
    complete: bool,
}

/// One search phase over the whole tree, split across workers when asked.
fn run_phase(
    n: usize,
    p: usize,
    pairs: &[(usize, usize)],
    col_end: &[usize],
    caps: &[usize],
    seed_best: usize,
    collect_target: Option<usize>,
    deadline: Option<Instant>,
    workers: usize,
) -> PhaseOutput {
    let shared = Shared {
        best: AtomicUsize::new(seed_best),
        aborted: AtomicBool::new(false),
    };
    let mut stats = SearchStats::default();
    let mut found: HashSet<CanonicalCode> = HashSet::new();

    if workers <= 1 || pairs.len() <= 8 {
        let mut dfs = Dfs::new(n, p, pairs, col_end, caps, &shared, deadline, collect_target);
        dfs.run(0);
        stats.absorb(dfs.stats);
        found.extend(dfs.found);
    } else {
        let split_depth = pairs.len().min(16);
        let mut spine_dfs =
            Dfs::new(n, p, pairs, col_end, caps, &shared, deadline, collect_target);
        let mut prefixes = Vec::new();
        spine_dfs.spine(0, split_depth, &mut Vec::new(), &mut prefixes);
        stats.absorb(spine_dfs.stats);

        let next = AtomicUsize::new(0);
        let merged: Mutex<(SearchStats, HashSet<CanonicalCode>)> =
            Mutex::new((SearchStats::default(), HashSet::new()));
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| {
                    let mut dfs = Dfs::new(
                        n,
                        p,
                        pairs,
                        col_end,
                        caps,
                        &shared,
                        deadline,
                        collect_target,
                    );
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= prefixes.len() || shared.aborted.load(Ordering::Relaxed) {
                            break;
                        }
                        dfs.reset();
                        if dfs.replay(&prefixes[i]) {
                            dfs.run(prefixes[i].len());
                        }
                    }
                    let mut guard = merged.lock().unwrap();
                    guard.0.absorb(dfs.stats);
                    guard.1.extend(dfs.found.drain());
                });
            }
        });
        let (worker_stats, worker_found) = merged.into_inner().unwrap();
        stats.absorb(worker_stats);
        found.extend(worker_found);
    }

    PhaseOutput {
        best: shared.best.load(Ordering::Relaxed),
        found: found.into_iter().collect(),
        stats,
        complete: !shared.aborted.load(Ordering::Relaxed),
    }
}

/// Certified lower-bound seed: caller-provided, else a catalog witness.
fn seed_size(n: usize, p: usize, cfg: &SearchConfig) -> usize {
    if let Some(seed) = &cfg.seed {
        return seed.size;
    }
    match catalog::witness_graph(n, p) {
        Ok(g) if g.order() == n && books::is_book_free(&g, p) => g.size(),
        _ => 0,
    }
}

fn branch_and_bound_record(n: usize, p: usize, cfg: &SearchConfig) -> TuranRecord {
    let deadline = cfg.budget.map(|b| Instant::now() + b);
    let mut stats = SearchStats::default();
    let mut complete = true;

    // Exact bounds for smaller orders, computed bottom-up by the same
    // search. caps[k] caps the edges of any B_p-free graph on k vertices.
    let mut caps = vec![0usize; n + 1];
    for k in 0..=n {
        if k <= p + 1 {
            caps[k] = k * k.saturating_sub(1) / 2;
        } else {
            caps[k] = caps[k - 1] + (k - 1);
        }
    }
    for k in (p + 2)..n {
        let pairs = colex_pairs(k);
        let col_end = column_ends(&pairs);
        let seed = seed_size(k, p, &SearchConfig::default());
        let out = run_phase(
            k,
            p,
            &pairs,
            &col_end,
            &caps[..=k],
            seed,
            None,
            deadline,
            cfg.workers,
        );
        stats.absorb(out.stats);
        if out.complete {
            caps[k] = out.best;
        } else {
            complete = false;
            break;
        }
        // Restore the chain bound for the next level up.
        if k + 1 <= n {
            caps[k + 1] = caps[k + 1].min(caps[k] + k);
        }
    }

    let pairs = colex_pairs(n);
    let col_end = column_ends(&pairs);
    let seed = seed_size(n, p, cfg);
    let mut ex = seed;
    if complete {
        let out = run_phase(
            n,
            p,
            &pairs,
            &col_end,
            &caps,
            seed,
            None,
            deadline,
            cfg.workers,
        );
        stats.absorb(out.stats);
        ex = out.best;
        complete = out.complete;
    }

    let mut extremal_lines = Vec::new();
    if cfg.collect_extremal && complete {
        let out = run_phase(
            n,
            p,
            &pairs,
            &col_end,
            &caps,
            ex,
            Some(ex),
            deadline,
            cfg.workers,
        );
        stats.absorb(out.stats);
        complete = out.complete;
        let mut codes = out.found;
        codes.sort();
        extremal_lines = codes
            .iter()
            .map(|c| graph6::encode(&c.to_graph()))
            .collect();
    }

    TuranRecord {
        n,
        p,
        ex,
        count: extremal_lines.len(),
        extremal: extremal_lines,
        complete,
        stats,
    }
}

/// For each pair index, the index just past its column: column v holds
/// the pairs (0,v)..(v-1,v) at indices C(v,2)..C(v+1,2).
fn column_ends(pairs: &[(usize, usize)]) -> Vec<usize> {
    pairs.iter().map(|&(_, v)| v * (v + 1) / 2).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_reference() {
        // Numbers of graphs on n unlabeled nodes, n = 1..7.
        let expected = [1usize, 2, 4, 11, 34, 156, 1044];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            let (classes, complete, _, _) = generate_classes(n, |_| true, None);
            assert!(complete);
            assert_eq!(classes.len(), want, "class count at order {n}");
        }
    }

    #[test]
    fn census_turan_small_cells() {
        let c5 = census(5);
        let (ex, codes) = c5.turan(1);
        assert_eq!(ex, 6);
        assert_eq!(codes.len(), 1);
        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        assert_eq!(codes[0], canonical_code(&k23));

        let c6 = census(6);
        assert_eq!(c6.turan(1).0, 9);
        assert_eq!(c6.turan(2).0, 9);
        assert_eq!(c6.turan(4).0, 12);
        assert_eq!(c6.turan(4).1.len(), 2);
    }

    #[test]
    fn branch_and_bound_agrees_with_enumeration() {
        for n in 4..=7 {
            for p in 1..=(n - 2) {
                let report = cross_validate(n, p).unwrap();
                assert!(report.ex <= n * (n - 1) / 2);
            }
        }
    }

    #[test]
    fn exact_small_values() {
        let rec = exact_turan(5, 1, &SearchConfig::default()).unwrap();
        assert_eq!((rec.ex, rec.count, rec.complete), (6, 1, true));

        let rec = exact_turan(6, 2, &SearchConfig::default()).unwrap();
        assert_eq!((rec.ex, rec.complete), (9, true));

        let rec = exact_turan(7, 2, &SearchConfig::default()).unwrap();
        assert_eq!((rec.ex, rec.count), (12, 1));
        let k34 = Graph::complete_bipartite(3, 4).unwrap();
        assert_eq!(rec.extremal[0], graph6::encode(&canonical_code(&k34).to_graph()));
    }

    #[test]
    fn trivial_and_tiny_orders() {
        // Order at most p+1 admits the complete graph.
        let rec = exact_turan(4, 5, &SearchConfig::default()).unwrap();
        assert_eq!(rec.ex, 6);
        assert_eq!(rec.count, 1);

        let rec = exact_turan(1, 1, &SearchConfig::default()).unwrap();
        assert_eq!((rec.ex, rec.count), (0, 1));
    }

    #[test]
    fn worker_counts_agree() {
        let base = exact_turan(7, 3, &SearchConfig::default()).unwrap();
        for workers in [2, 3] {
            let rec = exact_turan(
                7,
                3,
                &SearchConfig {
                    workers,
                    ..SearchConfig::default()
                },
            )
            .unwrap();
            assert_eq!(rec.ex, base.ex);
            assert_eq!(rec.extremal, base.extremal);
        }
    }

    #[test]
    fn zero_budget_reports_incomplete() {
        let rec = exact_turan(
            9,
            2,
            &SearchConfig {
                budget: Some(Duration::ZERO),
                ..SearchConfig::default()
            },
        )
        .unwrap();
        assert!(!rec.complete);
    }

    #[test]
    fn seed_validation() {
        let bad = SearchConfig {
            seed: Some(SeedBound {
                size: 5,
                graph: Graph::empty(6).unwrap(),
            }),
            ..SearchConfig::default()
        };
        assert!(matches!(
            exact_turan(6, 2, &bad),
            Err(SearchError::InvalidConfig(_))
        ));

        let good = SearchConfig {
            seed: Some(SeedBound {
                size: 9,
                graph: Graph::complete_bipartite(3, 3).unwrap(),
            }),
            ..SearchConfig::default()
        };
        let rec = exact_turan(6, 2, &good).unwrap();
        assert_eq!(rec.ex, 9);
    }

    #[test]
    fn enumeration_rejects_large_orders() {
        let cfg = SearchConfig {
            mode: SearchMode::FullEnumeration,
            ..SearchConfig::default()
        };
        assert!(matches!(
            exact_turan(11, 2, &cfg),
            Err(SearchError::InvalidConfig(_))
        ));
    }

    #[test]
    fn conjecture_small() {
        for n in 3..=8 {
            assert_eq!(conjecture_check(n), Ok(true), "violation at n={n}");
        }
    }
}
