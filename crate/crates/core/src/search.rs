//! Backtracking search for sign-preserving maps between signed double covers.
//!
//! A homomorphism `(G, σ) → (H, π)` is a vertex map together with a
//! switching of `G`. Each source vertex `v` takes a value `(w, b)`: its image
//! `w` and whether `v` is switched (`b = 1`). An edge `uv` of sign `s` is
//! satisfied iff `H` has an edge `φ(u)φ(v)` of sign `s·(-1)^(b_u + b_v)`.
//! Values are indexed `2w + b` and domains are bitsets over them, so forward
//! checking is a bitwise `and` with a precomputed neighbourhood table.

use std::sync::atomic::{AtomicU64, Ordering};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of search nodes (value assignments) before giving up.
    pub budget: u64,
    /// Worker threads; `1` runs the deterministic sequential search.
    pub threads: usize,
    /// Whether the source may be switched. Without it every `b` is 0.
    pub allow_switching: bool,
    /// Search for a bijection that maps edges onto edges and non-edges onto
    /// non-edges (an isomorphism when edge counts agree).
    pub isomorphism: bool,
    /// The target has a sign-preserving automorphism group transitive on
    /// vertices, so a component root may be pinned to target vertex 0.
    pub transitive_target: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: DEFAULT_BUDGET,
            threads: 1,
            allow_switching: true,
            isomorphism: false,
            transitive_target: false,
        }
    }
}

impl SearchConfig {
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }
}

/// A solution: `images[v] = (w, switched)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverMap {
    pub images: Vec<(usize, bool)>,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub solution: Option<CoverMap>,
    pub nodes: u64,
}

/// Neighbourhood tables of the target's double cover.
struct Target {
    states: usize,
    /// `apart[w]`: values whose vertex is neither `w` nor adjacent to it.
    apart: Vec<FixedBitSet>,
    /// `nbr[s][x]`: values compatible across an edge of sign `s` when the
    /// other endpoint has value `x`.
    nbr: [Vec<FixedBitSet>; 2],
    looped: FixedBitSet,
}

impl Target {
    fn new(h: &SignedGraph) -> Target {
        let states = 2 * h.n();
        let empty = FixedBitSet::with_capacity(states);
        let mut nbr = [vec![empty.clone(); states], vec![empty.clone(); states]];
        let mut looped = empty;
        for w in 0..h.n() {
            for b in 0..2 {
                let x = 2 * w + b;
                for s in [Sign::Positive, Sign::Negative] {
                    let table = &mut nbr[s.bit()][x];
                    for &y in h.neighbors_with_sign(w, s) {
                        table.insert(2 * y + b);
                    }
                    for &y in h.neighbors_with_sign(w, s.flip()) {
                        table.insert(2 * y + (1 - b));
                    }
                    if h.has_loop(w) {
                        // both ends on w: the switched sign must be positive
                        table.insert(2 * w + (b ^ s.bit()));
                    }
                }
            }
            if h.has_loop(w) {
                looped.insert(2 * w);
                looped.insert(2 * w + 1);
            }
        }
        let mut apart = Vec::new();
        for w in 0..h.n() {
            let mut a = FixedBitSet::with_capacity(states);
            a.insert_range(..);
            for y in std::iter::once(w).chain(h.underlying_neighbors(w)) {
                a.set(2 * y, false);
                a.set(2 * y + 1, false);
            }
            apart.push(a);
        }
        Target { states, apart, nbr, looped }
    }
}

struct Source {
    n: usize,
    adj: Vec<Vec<(usize, usize)>>,
    degree: Vec<usize>,
    /// Underlying adjacency, built only for isomorphism search.
    adjacent: Vec<FixedBitSet>,
}

impl Source {
    fn new(g: &SignedGraph, with_matrix: bool) -> Source {
        let adj: Vec<Vec<(usize, usize)>> = (0..g.n())
            .map(|v| g.neighbors(v).map(|(u, s)| (u, s.bit())).collect())
            .collect();
        let degree = adj.iter().map(Vec::len).collect();
        let adjacent = if with_matrix {
            adj.iter()
                .map(|row| {
                    let mut b = FixedBitSet::with_capacity(g.n());
                    row.iter().for_each(|&(u, _)| b.insert(u));
                    b
                })
                .collect()
        } else {
            Vec::new()
        };
        Source { n: g.n(), adj, degree, adjacent }
    }
}

struct Level {
    var: usize,
    candidates: Vec<usize>,
    next: usize,
    mark: usize,
}

struct Solver<'a> {
    src: &'a Source,
    tgt: &'a Target,
    isomorphism: bool,
    budget: u64,
    counter: &'a AtomicU64,
    local: u64,
    domains: Vec<FixedBitSet>,
    assigned: Vec<Option<usize>>,
    trail: Vec<(usize, FixedBitSet)>,
}

const FLUSH: u64 = 1024;

impl<'a> Solver<'a> {
    fn tick(&mut self) -> Result<()> {
        self.local += 1;
        if self.local >= FLUSH.min(self.budget / 4 + 1) {
            let total = self.counter.fetch_add(self.local, Ordering::Relaxed) + self.local;
            self.local = 0;
            if total > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
        }
        Ok(())
    }

    fn flush(&mut self) {
        self.counter.fetch_add(self.local, Ordering::Relaxed);
        self.local = 0;
    }

    fn select(&self) -> Option<usize> {
        let mut best: Option<(usize, std::cmp::Reverse<usize>, usize)> = None;
        for v in 0..self.src.n {
            if self.assigned[v].is_some() {
                continue;
            }
            let key = (self.domains[v].count_ones(..), std::cmp::Reverse(self.src.degree[v]), v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        best.map(|b| b.2)
    }

    fn restrict(&mut self, u: usize, mask: &FixedBitSet) -> bool {
        let dom = &self.domains[u];
        if dom.is_subset(mask) {
            return !dom.is_clear();
        }
        let old = dom.clone();
        self.domains[u].intersect_with(mask);
        let alive = !self.domains[u].is_clear();
        self.trail.push((u, old));
        alive
    }

    fn remove(&mut self, u: usize, values: [usize; 2]) -> bool {
        if !values.iter().any(|&x| self.domains[u].contains(x)) {
            return true;
        }
        let old = self.domains[u].clone();
        for x in values {
            self.domains[u].set(x, false);
        }
        self.trail.push((u, old));
        !self.domains[u].is_clear()
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (u, d) = self.trail.pop().unwrap();
            self.domains[u] = d;
        }
    }

    /// Assigns and forward-checks; false on a wipe-out.
    fn assign(&mut self, var: usize, x: usize) -> bool {
        self.assigned[var] = Some(x);
        let (src, tgt) = (self.src, self.tgt);
        for &(u, s) in &src.adj[var] {
            if self.assigned[u].is_none() && !self.restrict(u, &tgt.nbr[s][x]) {
                return false;
            }
        }
        if self.isomorphism {
            let w = x / 2;
            for u in 0..src.n {
                if self.assigned[u].is_some() {
                    continue;
                }
                let alive = if src.adjacent[var].contains(u) {
                    self.remove(u, [2 * w, 2 * w + 1])
                } else {
                    self.restrict(u, &tgt.apart[w])
                };
                if !alive {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self) -> Result<Option<Vec<usize>>> {
        if self.domains.iter().any(FixedBitSet::is_clear) {
            return Ok(None);
        }
        let mut stack: Vec<Level> = Vec::new();
        match self.select() {
            None => return Ok(Some(self.solution())),
            Some(var) => stack.push(self.level(var)),
        }
        while let Some(top) = stack.last_mut() {
            let (var, mark) = (top.var, top.mark);
            if top.next == top.candidates.len() {
                stack.pop();
                self.assigned[var] = None;
                self.undo(mark);
                continue;
            }
            let x = top.candidates[top.next];
            top.next += 1;
            self.undo(mark);
            self.assigned[var] = None;
            self.tick()?;
            if !self.assign(var, x) {
                continue;
            }
            match self.select() {
                None => return Ok(Some(self.solution())),
                Some(next) => {
                    let level = self.level(next);
                    stack.push(level);
                }
            }
        }
        Ok(None)
    }

    fn level(&self, var: usize) -> Level {
        Level {
            var,
            candidates: self.domains[var].ones().collect(),
            next: 0,
            mark: self.trail.len(),
        }
    }

    fn solution(&self) -> Vec<usize> {
        self.assigned.iter().map(|x| x.expect("complete assignment")).collect()
    }
}

/// Searches for a map of `g` into `h` under `config`. `allowed(v, w)`, when
/// given, restricts the images of `v`.
pub fn search(
    g: &SignedGraph,
    h: &SignedGraph,
    config: &SearchConfig,
    allowed: Option<&(dyn Fn(usize, usize) -> bool + Sync)>,
) -> Result<SearchOutcome> {
    let src = Source::new(g, config.isomorphism);
    let tgt = Target::new(h);
    let mut domains = initial_domains(g, h, &tgt, config, allowed);
    if config.isomorphism && g.n() != h.n() {
        return Ok(SearchOutcome { solution: None, nodes: 0 });
    }
    pin_roots(g, h, config, &mut domains);
    let counter = AtomicU64::new(0);
    let make = |domains: Vec<FixedBitSet>| Solver {
        src: &src,
        tgt: &tgt,
        isomorphism: config.isomorphism,
        budget: config.budget,
        counter: &counter,
        local: 0,
        assigned: vec![None; g.n()],
        trail: Vec::new(),
        domains,
    };

    let result = if config.threads <= 1 || g.n() == 0 {
        let mut solver = make(domains);
        let r = solver.run();
        solver.flush();
        r
    } else {
        let probe = make(domains.clone());
        let first = probe.select().expect("nonempty source");
        let candidates: Vec<usize> = domains[first].ones().collect();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|e| Error::PreconditionFailed(format!("thread pool: {e}")))?;
        pool.install(|| {
            candidates
                .par_iter()
                .map(|&x| {
                    let mut d = domains.clone();
                    d[first].clear();
                    d[first].insert(x);
                    let mut solver = make(d);
                    let r = solver.run();
                    solver.flush();
                    r
                })
                .find_map_first(|r| match r {
                    Ok(None) => None,
                    other => Some(other),
                })
                .unwrap_or(Ok(None))
        })
    };
    let nodes = counter.load(Ordering::Relaxed);
    let solution = result?.map(|values| CoverMap {
        images: values.into_iter().map(|x| (x / 2, x % 2 == 1)).collect(),
    });
    Ok(SearchOutcome { solution, nodes })
}

fn initial_domains(
    g: &SignedGraph,
    h: &SignedGraph,
    tgt: &Target,
    config: &SearchConfig,
    allowed: Option<&(dyn Fn(usize, usize) -> bool + Sync)>,
) -> Vec<FixedBitSet> {
    let mut domains = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let mut d = FixedBitSet::with_capacity(tgt.states);
        for w in 0..h.n() {
            if allowed.is_some_and(|f| !f(v, w)) {
                continue;
            }
            if config.isomorphism && h.degree(w) != g.degree(v) {
                continue;
            }
            if !config.isomorphism && g.underlying_neighbors(v).is_empty() && !g.has_loop(v) {
                // isolated: any image works, keep the search narrow
                d.insert(2 * w);
                break;
            }
            d.insert(2 * w);
            if config.allow_switching {
                d.insert(2 * w + 1);
            }
        }
        if g.has_loop(v) {
            d.intersect_with(&tgt.looped);
        }
        domains.push(d);
    }
    domains
}

/// Fixes the switching bit of each component root to 0 and, for transitive
/// targets, pins roots to vertex 0 (only the first root for isomorphisms).
fn pin_roots(g: &SignedGraph, h: &SignedGraph, config: &SearchConfig, domains: &mut [FixedBitSet]) {
    for (i, comp) in g.components().iter().enumerate() {
        let root = comp[0];
        let d = &mut domains[root];
        let keep: Vec<usize> = d.ones().filter(|x| x % 2 == 0).collect();
        let pin = config.transitive_target && h.n() > 0 && (i == 0 || !config.isomorphism);
        let pinned = pin && keep.contains(&0);
        d.clear();
        for x in keep {
            if !pinned || x == 0 {
                d.insert(x);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{negative_cycle, spc, SpcMethod};

    fn check(g: &SignedGraph, h: &SignedGraph, m: &CoverMap) -> bool {
        g.edges().iter().all(|e| {
            let (a, ba) = m.images[e.u];
            let (b, bb) = m.images[e.v];
            let s = if ba != bb { e.sign.flip() } else { e.sign };
            h.has_edge(a, b, s)
        })
    }

    #[test]
    fn finds_cover_maps() {
        let g = spc(4, SpcMethod::Cayley).unwrap();
        let h = spc(2, SpcMethod::Cayley).unwrap();
        let out = search(&g, &h, &SearchConfig::default(), None).unwrap();
        assert!(check(&g, &h, out.solution.as_ref().unwrap()));
    }

    #[test]
    fn switching_can_be_disabled() {
        let c = negative_cycle(3).unwrap();
        let all_neg = c.all_negative();
        let fixed = SearchConfig { allow_switching: false, ..SearchConfig::default() };
        assert!(search(&c, &c, &fixed, None).unwrap().solution.is_some());
        assert!(search(&c, &all_neg, &fixed, None).unwrap().solution.is_none());
        assert!(search(&c, &all_neg, &SearchConfig::default(), None).unwrap().solution.is_some());
    }

    #[test]
    fn budget_is_reported() {
        let g = spc(4, SpcMethod::Cayley).unwrap();
        let h = spc(2, SpcMethod::Cayley).unwrap();
        let cfg = SearchConfig::default().with_budget(1);
        assert!(matches!(search(&g, &h, &cfg, None), Err(Error::BudgetExceeded { budget: 1 })));
    }

    #[test]
    fn parallel_agrees_with_sequential() {
        let g = spc(5, SpcMethod::Cayley).unwrap();
        let h = spc(3, SpcMethod::Cayley).unwrap();
        let seq = search(&g, &h, &SearchConfig::default(), None).unwrap();
        let par = search(&g, &h, &SearchConfig::default().with_threads(4), None).unwrap();
        assert_eq!(seq.solution, par.solution);
    }

    #[test]
    fn empty_source() {
        let out = search(&SignedGraph::empty(0), &SignedGraph::empty(0), &SearchConfig::default(), None).unwrap();
        assert_eq!(out.solution, Some(CoverMap { images: vec![] }));
        let out = search(&SignedGraph::empty(1), &SignedGraph::empty(0), &SearchConfig::default(), None).unwrap();
        assert_eq!(out.solution, None);
    }
}
