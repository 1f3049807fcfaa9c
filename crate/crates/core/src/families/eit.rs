//! Equalized incomplete tournaments: `n` teams, each meeting `r` opponents,
//! with the same total opponent strength for every team.
//!
//! A schedule is an `r`-regular graph on the teams and team strengths are a
//! distance magic labeling of it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{verify_s_magic, Labeling};
use crate::scalar::Label;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InfeasibleReason {
    /// No odd-regular graph is distance magic.
    OddRounds,
    /// Needs `2 <= r <= n - 2`.
    RoundsOutOfRange,
    /// `r ≡ 2 (mod 4)` forces `n ≡ 0 (mod 4)`.
    TwoModFour,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum EitVerdict {
    Feasible,
    Infeasible { reason: InfeasibleReason },
    /// Odd team counts with an even number of rounds are not settled here.
    Undetermined,
}

/// Whether an `EIT(n, r)` exists. Decided completely for even `n`.
pub fn eit_feasible(teams: usize, rounds: usize) -> EitVerdict {
    use InfeasibleReason::*;
    if rounds % 2 == 1 {
        return EitVerdict::Infeasible { reason: OddRounds };
    }
    if rounds < 2 || rounds + 2 > teams {
        return EitVerdict::Infeasible { reason: RoundsOutOfRange };
    }
    if teams % 2 == 1 {
        return EitVerdict::Undetermined;
    }
    if teams % 4 == 0 || rounds % 4 == 0 {
        EitVerdict::Feasible
    } else {
        EitVerdict::Infeasible { reason: TwoModFour }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Label")]
pub struct TeamRow<T> {
    pub team: usize,
    pub strength: T,
    pub opponents: Vec<usize>,
    pub opponent_strengths: Vec<T>,
    pub total: T,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Label")]
pub struct Schedule<T> {
    pub teams: usize,
    pub rounds: usize,
    pub constant: T,
    pub rows: Vec<TeamRow<T>>,
}

/// Expands a magic labeling of a regular graph into a per-team schedule.
pub fn eit_schedule<T: Label>(g: &Graph, f: &Labeling<T>) -> Result<Schedule<T>> {
    let rounds = g.regular_degree().ok_or(Error::NotRegular)?;
    let report = verify_s_magic(g, f.assignment());
    let constant = report
        .constant
        .ok_or_else(|| Error::NotMagic(format!("{} violation(s)", report.violations.len())))?;
    let rows = (0..g.order())
        .map(|team| {
            let opponents = g.neighbors(team).to_vec();
            let opponent_strengths: Vec<T> = opponents.iter().map(|&u| f.label(u)).collect();
            let total = opponent_strengths.iter().copied().sum();
            TeamRow { team, strength: f.label(team), opponents, opponent_strengths, total }
        })
        .collect::<Vec<_>>();
    debug_assert!(rows.iter().all(|r| r.total == constant));
    Ok(Schedule { teams: g.order(), rounds, constant, rows })
}

impl<T: Label> fmt::Display for Schedule<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} teams, {} rounds, opponent total {}", self.teams, self.rounds, self.constant)?;
        writeln!(f, "{:>5}  {:>8}  opponents (strength)", "team", "strength")?;
        for row in &self.rows {
            let opp = row
                .opponents
                .iter()
                .zip(&row.opponent_strengths)
                .map(|(o, s)| format!("{o}({s})"))
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(f, "{:>5}  {:>8}  {opp}  = {}", row.team, row.strength, row.total)?;
        }
        Ok(())
    }
}
