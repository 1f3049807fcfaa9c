//! Exact backtracking search for S-magic labelings and the distance magic
//! index of small graphs.
//!
//! Vertices are assigned in id order and labels tried in ascending order, so
//! the first labeling found is the lexicographically smallest assignment
//! vector. Index search tries `d = 0, 1, ...` and, for each `d`, candidate
//! label sets in lexicographic order; the reported witness is therefore the
//! policy-minimal one no matter how the work is scheduled.

use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::index::{IndexResult, Theta, WitnessOrigin};
use crate::labeling::{verify_s_magic, LabelSet, Labeling};
use crate::scalar::Label;

/// Largest graph [`enumerate_labelings`] accepts.
pub const ENUMERATION_LIMIT: usize = 10;

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Largest index `d` to try.
    pub theta_cap: u64,
    /// Backtracking nodes allowed per candidate label set.
    pub node_limit: Option<u64>,
    /// Wall-clock budget for a whole call.
    pub time_budget: Option<Duration>,
    /// Disable to check only complete assignments (slow; for cross-checks).
    pub pruning: bool,
    /// Explore candidate label sets on the rayon pool.
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { theta_cap: 2, node_limit: None, time_budget: None, pruning: true, parallel: true }
    }
}

impl SearchConfig {
    pub fn with_cap(theta_cap: u64) -> Self {
        SearchConfig { theta_cap, ..Default::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T: Label> {
    Found(Labeling<T>),
    NotFound,
    /// A node or time budget ran out before the search finished.
    Indeterminate,
}

impl<T: Label> SearchOutcome<T> {
    pub fn found(self) -> Option<Labeling<T>> {
        match self {
            SearchOutcome::Found(l) => Some(l),
            _ => None,
        }
    }
}

/// Two adjacent vertices `u, v` with `N(u) \ {v} = N(v) \ {u}`.
///
/// Their weights differ by `f(v) − f(u) ≠ 0` under any injective labeling, so
/// no label set works.
pub fn twin_certificate(g: &Graph) -> Option<(usize, usize)> {
    g.edges().find(|&(u, v)| {
        let nu = g.neighbors(u).iter().filter(|&&w| w != v);
        let nv = g.neighbors(v).iter().filter(|&&w| w != u);
        nu.eq(nv)
    })
}

enum Mode {
    First,
    All,
}

struct Solver<'a> {
    g: &'a Graph,
    labels: Vec<i128>,
    target: Option<i128>,
    pruning: bool,
    mode: Mode,
    assign: Vec<usize>,
    used: Vec<bool>,
    partial: Vec<i128>,
    open: Vec<usize>,
    nodes: u64,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    aborted: bool,
    found: Vec<Vec<i128>>,
    scratch: Vec<i128>,
}

const UNASSIGNED: usize = usize::MAX;

impl<'a> Solver<'a> {
    fn new(g: &'a Graph, labels: Vec<i128>, cfg: &SearchConfig, deadline: Option<Instant>, mode: Mode) -> Self {
        let n = g.order();
        let target = if cfg.pruning {
            g.regular_degree().map(|r| {
                let total: i128 = labels.iter().sum();
                let scaled = r as i128 * total;
                // a non-integral constant is encoded as an impossible target
                if n > 0 && scaled % n as i128 == 0 {
                    scaled / n as i128
                } else {
                    -1
                }
            })
        } else {
            None
        };
        Solver {
            g,
            labels,
            target,
            pruning: cfg.pruning,
            mode,
            assign: vec![UNASSIGNED; n],
            used: vec![false; n],
            partial: vec![0; n],
            open: (0..n).map(|v| g.degree(v)).collect(),
            nodes: 0,
            node_limit: cfg.node_limit,
            deadline,
            aborted: false,
            found: Vec::new(),
            scratch: Vec::with_capacity(n + 1),
        }
    }

    fn run(&mut self) {
        if self.target == Some(-1) {
            return;
        }
        self.descend(0);
    }

    fn out_of_budget(&mut self) -> bool {
        if self.node_limit.is_some_and(|limit| self.nodes > limit) {
            self.aborted = true;
        }
        if self.nodes % 1024 == 0 && self.deadline.is_some_and(|d| Instant::now() > d) {
            self.aborted = true;
        }
        self.aborted
    }

    fn done(&self) -> bool {
        self.aborted || matches!(self.mode, Mode::First) && !self.found.is_empty()
    }

    fn place(&mut self, v: usize, idx: usize, sign: i128) {
        let label = self.labels[idx] * sign;
        for &u in self.g.neighbors(v) {
            self.partial[u] += label;
            if sign > 0 {
                self.open[u] -= 1;
            } else {
                self.open[u] += 1;
            }
        }
    }

    /// Every vertex's final weight must fit between its partial sum plus the
    /// smallest and the largest possible completions; all of those ranges
    /// (and the fixed constant, if known) must share a common value.
    fn feasible(&mut self) -> bool {
        self.scratch.clear();
        self.scratch.push(0);
        let mut acc = 0;
        for (i, &l) in self.labels.iter().enumerate() {
            if !self.used[i] {
                acc += l;
                self.scratch.push(acc);
            }
        }
        let free = self.scratch.len() - 1;
        let (mut lo, mut hi) = (i128::MIN, i128::MAX);
        for u in 0..self.g.order() {
            let k = self.open[u];
            let least = self.partial[u] + self.scratch[k];
            let most = self.partial[u] + self.scratch[free] - self.scratch[free - k];
            lo = lo.max(least);
            hi = hi.min(most);
            if lo > hi {
                return false;
            }
        }
        self.target.is_none_or(|t| lo <= t && t <= hi)
    }

    fn leaf_ok(&self) -> bool {
        let mut weights = self.partial.iter();
        match weights.next() {
            None => true,
            Some(&w0) => weights.all(|&w| w == w0) && self.target.is_none_or(|t| t == w0),
        }
    }

    fn descend(&mut self, v: usize) {
        let n = self.g.order();
        if v == n {
            if self.leaf_ok() {
                self.found.push(self.assign.iter().map(|&i| self.labels[i]).collect());
            }
            return;
        }
        for idx in 0..n {
            if self.used[idx] {
                continue;
            }
            self.nodes += 1;
            if self.out_of_budget() {
                return;
            }
            self.used[idx] = true;
            self.assign[v] = idx;
            self.place(v, idx, 1);
            if !self.pruning || self.feasible() {
                self.descend(v + 1);
            }
            self.place(v, idx, -1);
            self.assign[v] = UNASSIGNED;
            self.used[idx] = false;
            if self.done() {
                return;
            }
        }
    }
}

fn wide_labels<T: Label>(g: &Graph, s: &LabelSet<T>) -> Result<Vec<i128>> {
    if s.len() != g.order() {
        return Err(Error::SizeMismatch { order: g.order(), labels: s.len() });
    }
    Ok(s.values().iter().map(|v| v.to_wide()).collect())
}

fn narrow<T: Label>(g: &Graph, raw: Vec<i128>) -> Result<Labeling<T>> {
    let labels = raw.into_iter().map(T::try_from_wide).collect::<Result<Vec<T>>>()?;
    // soundness gate: every returned labeling passes the verifier
    let report = verify_s_magic(g, &labels);
    if !report.is_magic {
        return Err(Error::Construction(format!("search produced a non-magic labeling: {:?}", report.violations)));
    }
    Labeling::new(labels)
}

fn find_with_deadline<T: Label>(
    g: &Graph,
    s: &LabelSet<T>,
    cfg: &SearchConfig,
    deadline: Option<Instant>,
) -> Result<SearchOutcome<T>> {
    let labels = wide_labels(g, s)?;
    let mut solver = Solver::new(g, labels, cfg, deadline, Mode::First);
    solver.run();
    match solver.found.pop() {
        Some(raw) => Ok(SearchOutcome::Found(narrow(g, raw)?)),
        None if solver.aborted => Ok(SearchOutcome::Indeterminate),
        None => Ok(SearchOutcome::NotFound),
    }
}

/// Decides whether `g` is `S`-magic, returning the lexicographically first
/// labeling when it is.
pub fn find_labeling<T: Label>(g: &Graph, s: &LabelSet<T>, cfg: &SearchConfig) -> Result<SearchOutcome<T>> {
    let deadline = cfg.time_budget.map(|b| Instant::now() + b);
    find_with_deadline(g, s, cfg, deadline)
}

/// Every `S`-magic labeling of `g`, in lexicographic order.
pub fn enumerate_labelings<T: Label>(g: &Graph, s: &LabelSet<T>) -> Result<Vec<Labeling<T>>> {
    enumerate_with(g, s, &SearchConfig::default())
}

/// [`enumerate_labelings`] with explicit pruning control; budgets are ignored.
pub fn enumerate_with<T: Label>(g: &Graph, s: &LabelSet<T>, cfg: &SearchConfig) -> Result<Vec<Labeling<T>>> {
    if g.order() > ENUMERATION_LIMIT {
        return Err(Error::TooLarge { order: g.order(), limit: ENUMERATION_LIMIT });
    }
    let labels = wide_labels(g, s)?;
    let cfg = SearchConfig { node_limit: None, time_budget: None, ..cfg.clone() };
    let mut solver = Solver::new(g, labels, &cfg, None, Mode::All);
    solver.run();
    solver.found.into_iter().map(|raw| narrow(g, raw)).collect()
}

/// Label sets of size `order` with maximum exactly `order + d`, in
/// lexicographic order.
pub fn candidate_sets<T: Label>(order: usize, d: u64) -> Result<Vec<LabelSet<T>>> {
    if order == 0 {
        return Err(invalid("graph has no vertices"));
    }
    let top = order + d as usize;
    (1..top)
        .combinations(order - 1)
        .map(|mut c| {
            c.push(top);
            LabelSet::new(c.into_iter().map(T::from_count).collect::<Result<_>>()?)
        })
        .collect()
}

/// The distance magic index of `g`, by exhaustive search up to
/// `cfg.theta_cap`.
pub fn compute_index<T: Label>(g: &Graph, cfg: &SearchConfig) -> Result<IndexResult<T>> {
    if g.order() == 0 {
        return Err(invalid("graph has no vertices"));
    }
    if twin_certificate(g).is_some() {
        return Ok(IndexResult::searched(Theta::Infinite));
    }
    let deadline = cfg.time_budget.map(|b| Instant::now() + b);
    for d in 0..=cfg.theta_cap {
        let candidates = candidate_sets::<T>(g.order(), d)?;
        let solve = |s: &LabelSet<T>| find_with_deadline(g, s, cfg, deadline);
        let decided = |o: &Result<SearchOutcome<T>>| !matches!(o, Ok(SearchOutcome::NotFound));
        let first = if cfg.parallel {
            candidates.par_iter().map(solve).find_first(decided)
        } else {
            candidates.iter().map(solve).find(decided)
        };
        match first.transpose()? {
            None => continue,
            Some(SearchOutcome::Found(labeling)) => {
                let constant = verify_s_magic(g, labeling.assignment())
                    .constant
                    .ok_or_else(|| Error::Construction("search witness lost its constant".into()))?;
                return Ok(IndexResult::searched(Theta::Finite(d)).with_witness(
                    labeling,
                    constant,
                    WitnessOrigin::Search,
                ));
            }
            Some(_) => {
                let mut r = IndexResult::searched(Theta::UnknownAtCap(cfg.theta_cap));
                r.budget_exhausted = true;
                return Ok(r);
            }
        }
    }
    Ok(IndexResult::searched(Theta::UnknownAtCap(cfg.theta_cap)))
}
