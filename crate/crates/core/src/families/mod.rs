//! Closed-form distance magic index for the labeled graph families, with
//! witness labelings assembled from rectangles.
//!
//! Columns of a rectangle label parts (or fibers) and rows label the
//! vertices inside a part, so a balanced rectangle with column sum `s` makes
//! every vertex weight a fixed multiple of `s`. Every witness is re-verified
//! on the built graph before it is returned.

mod eit;

use crate::error::{invalid, Error, Result};
use crate::graph::{blow_up, build_cycle, build_multipartite, disjoint_union, Graph};
use crate::index::{IndexResult, Rule, Theta, WitnessOrigin};
use crate::labeling::{verify_s_magic, LabelSet, Labeling};
use crate::rectangles::{balanced_even, balanced_odd, construct_deleted, split, Rectangle};
use crate::scalar::Label;
use crate::search::{compute_index, find_labeling, SearchConfig, SearchOutcome};

pub use eit::{eit_feasible, eit_schedule, EitVerdict, InfeasibleReason, Schedule, TeamRow};

/// A labeled graph family and its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// `m` copies of `H(n,p)`.
    Multipartite { n: usize, p: usize, m: usize },
    /// `m` copies of `C_p[K̄_n]`.
    CycleLex { p: usize, n: usize, m: usize },
    /// `G[K̄_n]` for a regular `G`.
    LexBlowup { base: Graph, n: usize },
    Custom(Graph),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Multipartite { n, p, m } => check_multipartite(m, n, p),
            FamilySpec::CycleLex { p, n, m } => check_cycle_lex(m, p, n),
            FamilySpec::LexBlowup { ref base, n } => {
                if n == 0 {
                    return Err(invalid("blow-up needs n >= 1"));
                }
                base.regular_degree().map(|_| ()).ok_or(Error::NotRegular)
            }
            FamilySpec::Custom(_) => Ok(()),
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        self.validate()?;
        match self {
            FamilySpec::Multipartite { n, p, m } => disjoint_union(&build_multipartite(*n, *p)?, *m),
            FamilySpec::CycleLex { p, n, m } => disjoint_union(&blow_up(&build_cycle(*p)?, *n)?, *m),
            FamilySpec::LexBlowup { base, n } => blow_up(base, *n),
            FamilySpec::Custom(g) => Ok(g.clone()),
        }
    }
}

/// Closed-form index for a family; custom graphs go to search.
pub fn theta<T: Label>(spec: &FamilySpec, cfg: &SearchConfig) -> Result<IndexResult<T>> {
    match spec {
        FamilySpec::Multipartite { n, p, m: 1 } => theta_hnp(*n, *p),
        FamilySpec::Multipartite { n, p, m } => theta_m_hnp(*m, *n, *p),
        FamilySpec::CycleLex { p, n, m } => theta_m_cycle_lex(*m, *p, *n),
        FamilySpec::LexBlowup { base, n } => theta_lex_blowup(base, *n, cfg),
        FamilySpec::Custom(g) => compute_index(g, cfg),
    }
}

fn check_multipartite(m: usize, n: usize, p: usize) -> Result<()> {
    if n <= 1 {
        return Err(invalid(format!("hypothesis n > 1 violated (n = {n})")));
    }
    if p <= 1 {
        return Err(invalid(format!("hypothesis p > 1 violated (p = {p})")));
    }
    if m == 0 {
        return Err(invalid("hypothesis m >= 1 violated (m = 0)"));
    }
    Ok(())
}

fn check_cycle_lex(m: usize, p: usize, n: usize) -> Result<()> {
    if p < 3 {
        return Err(invalid(format!("hypothesis p >= 3 violated (p = {p})")));
    }
    if n <= 1 {
        return Err(invalid(format!("hypothesis n > 1 violated (n = {n})")));
    }
    if m == 0 {
        return Err(invalid("hypothesis m >= 1 violated (m = 0)"));
    }
    Ok(())
}

/// Vertex `k·np + j·n + h` (copy `k`, part or fiber `j`, slot `h`) gets
/// entry `(h, j)` of piece `k`.
fn fiber_labels<T: Label>(pieces: &[Rectangle<T>]) -> Vec<T> {
    pieces
        .iter()
        .flat_map(|piece| {
            (0..piece.cols()).flat_map(move |j| (0..piece.rows()).map(move |h| piece.get(h, j)))
        })
        .collect()
}

/// Labels `graph` from `pieces`, verifies it and checks the constant
/// against `expected`.
fn witness<T: Label>(
    result: IndexResult<T>,
    graph: &Graph,
    pieces: &[Rectangle<T>],
    expected: T,
) -> Result<IndexResult<T>> {
    let labels = fiber_labels(pieces);
    let report = verify_s_magic(graph, &labels);
    if report.constant != Some(expected) {
        return Err(Error::Construction(format!(
            "witness on {} has constant {:?}, expected {expected}: {:?}",
            graph.name().unwrap_or("graph"),
            report.constant,
            report.violations.first()
        )));
    }
    if let Theta::Finite(d) = result.theta {
        let alpha = LabelSet::new(labels.clone())?.alpha().map(|a| a.to_wide());
        if alpha != Some((graph.order() as u64 + d) as i128) {
            return Err(Error::Construction("witness label set does not realize the index".into()));
        }
    }
    Ok(result.with_witness(Labeling::new(labels)?, expected, WitnessOrigin::Construction))
}

fn times<T: Label>(k: usize, s: T) -> Result<T> {
    Ok(T::from_count(k)? * s)
}

fn sum_of<T: Label>(r: &Rectangle<T>) -> Result<T> {
    r.column_sum().ok_or_else(|| Error::Construction("rectangle is not balanced".into()))
}

/// `θ(H(n,p))`: 0 when `n` is even or `n`, `p` are both odd, 1 otherwise.
pub fn theta_hnp<T: Label>(n: usize, p: usize) -> Result<IndexResult<T>> {
    check_multipartite(1, n, p)?;
    let graph = build_multipartite(n, p)?;
    let (rect, theta, rule) = match (n % 2, p % 2) {
        (0, _) => (balanced_even(n, p)?, 0, Rule::HnpEvenPartSize),
        (1, 1) => (balanced_odd(n, p)?, 0, Rule::HnpAllOdd),
        _ => (construct_deleted(n, p)?, 1, Rule::HnpDeletedLabel),
    };
    let c = times(p - 1, sum_of(&rect)?)?;
    witness(IndexResult::closed_form(Theta::Finite(theta), rule), &graph, &[rect], c)
}

/// `θ(mH(n,p))`: 0 when `n` is even or `mnp` is odd, 1 otherwise.
///
/// Witnesses come from one rectangle for `H(n, mp)` split column-wise into
/// `m` pieces, one per copy.
pub fn theta_m_hnp<T: Label>(m: usize, n: usize, p: usize) -> Result<IndexResult<T>> {
    check_multipartite(m, n, p)?;
    let graph = disjoint_union(&build_multipartite(n, p)?, m)?;
    let (rect, theta, rule) = if n % 2 == 0 {
        (balanced_even(n, m * p)?, 0, Rule::UnionHnpEvenPartSize)
    } else if (m * p) % 2 == 1 {
        (balanced_odd(n, m * p)?, 0, Rule::UnionHnpAllOdd)
    } else {
        (construct_deleted(n, m * p)?, 1, Rule::UnionHnpDeletedLabel)
    };
    let c = times(p - 1, sum_of(&rect)?)?;
    let pieces = split(&rect, m)?;
    witness(IndexResult::closed_form(Theta::Finite(theta), rule), &graph, &pieces, c)
}

/// `θ(mC_p[K̄_n])`: 0 when `n` is even, `mnp` is odd, or `n` is odd with
/// `p ≡ 0 (mod 4)`; 1 otherwise.
///
/// No construction is provided for the `p ≡ 0 (mod 4)` branch; the result
/// carries no witness there (see [`complete_with_search`]).
pub fn theta_m_cycle_lex<T: Label>(m: usize, p: usize, n: usize) -> Result<IndexResult<T>> {
    check_cycle_lex(m, p, n)?;
    let (rect, theta, rule) = if n % 2 == 0 {
        (balanced_even(n, m * p)?, 0, Rule::CycleLexEvenFiber)
    } else if (m * p) % 2 == 1 {
        (balanced_odd(n, m * p)?, 0, Rule::CycleLexAllOdd)
    } else if p % 4 == 0 {
        return Ok(IndexResult::closed_form(Theta::Finite(0), Rule::CycleLexLengthDivisibleByFour));
    } else {
        (construct_deleted(n, m * p)?, 1, Rule::CycleLexDeletedLabel)
    };
    let graph = disjoint_union(&blow_up(&build_cycle(p)?, n)?, m)?;
    let c = times(2, sum_of(&rect)?)?;
    let pieces = split(&rect, m)?;
    witness(IndexResult::closed_form(Theta::Finite(theta), rule), &graph, &pieces, c)
}

/// `θ(G[K̄_n])` for an `r`-regular `G` on `p` vertices: 1 when `n` and `r`
/// are odd or when `n` is odd and `r ≡ p ≡ 2 (mod 4)`, 0 otherwise.
///
/// Fiber `i` is labeled by column `i` of the rectangle. `n = 1` is just `G`
/// itself and goes to exact search.
pub fn theta_lex_blowup<T: Label>(base: &Graph, n: usize, cfg: &SearchConfig) -> Result<IndexResult<T>> {
    let r = base.regular_degree().ok_or(Error::NotRegular)?;
    if n == 0 {
        return Err(invalid("blow-up needs n >= 1"));
    }
    if n == 1 {
        return compute_index(base, cfg);
    }
    let p = base.order();
    let (rect, theta, rule) = if n % 2 == 0 {
        (balanced_even(n, p)?, 0, Rule::BlowupEvenFiber)
    } else if p % 2 == 1 {
        (balanced_odd(n, p)?, 0, Rule::BlowupOddOrder)
    } else if r % 2 == 1 {
        (construct_deleted(n, p)?, 1, Rule::BlowupOddDegree)
    } else if r % 4 == 2 && p % 4 == 2 {
        (construct_deleted(n, p)?, 1, Rule::BlowupTwiceOdd)
    } else {
        return Ok(IndexResult::closed_form(Theta::Finite(0), Rule::BlowupTournament));
    };
    let graph = blow_up(base, n)?;
    let c = times(r, sum_of(&rect)?)?;
    witness(IndexResult::closed_form(Theta::Finite(theta), rule), &graph, &[rect], c)
}

/// Attaches a search-found distance magic labeling to a θ = 0 result that
/// has none, when the graph has at most `max_order` vertices.
pub fn complete_with_search<T: Label>(
    mut result: IndexResult<T>,
    graph: &Graph,
    max_order: usize,
    cfg: &SearchConfig,
) -> Result<IndexResult<T>> {
    if result.witness.is_some() || result.theta != Theta::Finite(0) || graph.order() > max_order {
        return Ok(result);
    }
    match find_labeling(graph, &LabelSet::initial(graph.order())?, cfg)? {
        SearchOutcome::Found(l) => {
            let c = verify_s_magic(graph, l.assignment()).constant.expect("search output is magic");
            result = result.with_witness(l, c, WitnessOrigin::Search);
            Ok(result)
        }
        SearchOutcome::NotFound => Err(Error::Construction(format!(
            "closed form gives θ = 0 but {} has no distance magic labeling",
            graph.name().unwrap_or("graph")
        ))),
        SearchOutcome::Indeterminate => {
            result.budget_exhausted = true;
            Ok(result)
        }
    }
}
