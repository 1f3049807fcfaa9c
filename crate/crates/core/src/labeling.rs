//! Label sets, labelings and the S-magic verifier, plus the counting
//! identities every deleted-label labeling of a regular graph must satisfy.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::scalar::Label;

/// A finite set of positive integers, kept strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound = "T: Label", try_from = "Vec<T>", into = "Vec<T>")]
pub struct LabelSet<T: Label> {
    values: Vec<T>,
}

impl<T: Label> TryFrom<Vec<T>> for LabelSet<T> {
    type Error = Error;

    fn try_from(values: Vec<T>) -> Result<Self> {
        Self::new(values)
    }
}

impl<T: Label> From<LabelSet<T>> for Vec<T> {
    fn from(s: LabelSet<T>) -> Self {
        s.values
    }
}

impl<T: Label> LabelSet<T> {
    /// Sorts `values`; rejects duplicates and non-positive entries.
    pub fn new(mut values: Vec<T>) -> Result<Self> {
        values.sort();
        if let Some(bad) = values.iter().find(|&&v| v < T::one()) {
            return Err(Error::InvalidLabels(format!("label {bad} is not positive")));
        }
        if let Some(w) = values.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidLabels(format!("label {} repeated", w[0])));
        }
        Ok(LabelSet { values })
    }

    /// `{1, ..., n}`.
    pub fn initial(n: usize) -> Result<Self> {
        let values = (1..=n).map(T::from_count).collect::<Result<_>>()?;
        Ok(LabelSet { values })
    }

    /// `{1, ..., ceiling} \ {deleted}`.
    pub fn without(ceiling: usize, deleted: usize) -> Result<Self> {
        if deleted == 0 || deleted > ceiling {
            return Err(invalid(format!("deleted label {deleted} outside 1..={ceiling}")));
        }
        let values = (1..=ceiling).filter(|&v| v != deleted).map(T::from_count).collect::<Result<_>>()?;
        Ok(LabelSet { values })
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `α(S)`, the largest label.
    pub fn alpha(&self) -> Option<T> {
        self.values.last().copied()
    }

    /// `{1..α(S)} \ S`.
    pub fn deleted(&self) -> Vec<T> {
        let mut out = Vec::new();
        let Some(alpha) = self.alpha() else { return out };
        let mut it = self.values.iter().peekable();
        let mut v = T::one();
        while v <= alpha {
            if it.peek() == Some(&&v) {
                it.next();
            } else {
                out.push(v);
            }
            v = v + T::one();
        }
        out
    }

    pub fn sum(&self) -> T {
        self.values.iter().copied().sum()
    }

    pub fn contains(&self, v: T) -> bool {
        self.values.binary_search(&v).is_ok()
    }

    /// True when the set is `{1, ..., len}`.
    pub fn is_initial(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v.to_wide() == i as i128 + 1)
    }
}

/// A bijection from vertex ids onto a label set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Label", try_from = "LabelingDoc<T>", into = "LabelingDoc<T>")]
pub struct Labeling<T: Label> {
    assignment: Vec<T>,
    label_set: LabelSet<T>,
}

/// JSON shape: `{labels: [...by vertex id], label_set, constant}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Label")]
pub struct LabelingDoc<T: Label> {
    pub labels: Vec<T>,
    pub label_set: Vec<T>,
    #[serde(default)]
    pub constant: Option<T>,
}

impl<T: Label> TryFrom<LabelingDoc<T>> for Labeling<T> {
    type Error = Error;

    fn try_from(doc: LabelingDoc<T>) -> Result<Self> {
        let lab = Labeling::new(doc.labels)?;
        if lab.label_set.values != {
            let mut s = doc.label_set;
            s.sort();
            s
        } {
            return Err(Error::InvalidLabels("label_set does not match labels".into()));
        }
        Ok(lab)
    }
}

impl<T: Label> From<Labeling<T>> for LabelingDoc<T> {
    fn from(l: Labeling<T>) -> Self {
        LabelingDoc { labels: l.assignment, label_set: l.label_set.values, constant: None }
    }
}

impl<T: Label> Labeling<T> {
    /// `assignment[v]` is the label of vertex `v`.
    pub fn new(assignment: Vec<T>) -> Result<Self> {
        let label_set = LabelSet::new(assignment.clone())?;
        Ok(Labeling { assignment, label_set })
    }

    pub fn assignment(&self) -> &[T] {
        &self.assignment
    }

    pub fn label(&self, v: usize) -> T {
        self.assignment[v]
    }

    pub fn label_set(&self) -> &LabelSet<T> {
        &self.label_set
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn to_doc(&self, constant: Option<T>) -> LabelingDoc<T> {
        LabelingDoc { labels: self.assignment.clone(), label_set: self.label_set.values.clone(), constant }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Label", rename_all = "snake_case")]
pub enum Violation<T> {
    OrderMismatch { order: usize, labels: usize },
    NonPositive { vertex: usize, label: T },
    Duplicate { label: T, vertices: Vec<usize> },
    /// `vertex` has a different weight from `reference`, a vertex carrying
    /// the most common weight.
    UnequalWeights { reference: usize, vertex: usize, reference_weight: T, weight: T },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Label")]
pub struct VerificationReport<T> {
    pub is_magic: bool,
    /// Magic and the label set is `{1, ..., order}`.
    pub is_distance_magic: bool,
    pub constant: Option<T>,
    pub weights: Vec<T>,
    pub violations: Vec<Violation<T>>,
}

/// `w(u)`: the sum of the labels on the open neighborhood of `u`.
pub fn vertex_weight<T: Label>(g: &Graph, labels: &[T], u: usize) -> Result<T> {
    if u >= g.order() {
        return Err(invalid(format!("unknown vertex {u}")));
    }
    if labels.len() != g.order() {
        return Err(Error::SizeMismatch { order: g.order(), labels: labels.len() });
    }
    Ok(g.neighbors(u).iter().map(|&v| labels[v]).sum())
}

/// Audits `labels` (indexed by vertex id) as an S-magic labeling of `g`.
pub fn verify_s_magic<T: Label>(g: &Graph, labels: &[T]) -> VerificationReport<T> {
    let mut violations = Vec::new();
    if labels.len() != g.order() {
        violations.push(Violation::OrderMismatch { order: g.order(), labels: labels.len() });
        return VerificationReport {
            is_magic: false,
            is_distance_magic: false,
            constant: None,
            weights: Vec::new(),
            violations,
        };
    }

    let mut owners: BTreeMap<T, Vec<usize>> = BTreeMap::new();
    for (v, &label) in labels.iter().enumerate() {
        if label < T::one() {
            violations.push(Violation::NonPositive { vertex: v, label });
        }
        owners.entry(label).or_default().push(v);
    }
    for (label, vertices) in owners {
        if vertices.len() > 1 {
            violations.push(Violation::Duplicate { label, vertices });
        }
    }
    let bijective = violations.is_empty();

    let weights: Vec<T> = (0..g.order()).map(|u| g.neighbors(u).iter().map(|&v| labels[v]).sum()).collect();
    let mut tally: BTreeMap<T, (usize, usize)> = BTreeMap::new();
    for (u, &w) in weights.iter().enumerate() {
        tally.entry(w).or_insert((0, u)).0 += 1;
    }
    // most frequent weight, smallest on ties
    let reference = tally.iter().max_by(|a, b| a.1 .0.cmp(&b.1 .0).then(b.0.cmp(a.0))).map(|(&w, &(_, u))| (w, u));
    if let Some((reference_weight, reference)) = reference {
        for (vertex, &weight) in weights.iter().enumerate() {
            if weight != reference_weight {
                violations.push(Violation::UnequalWeights { reference, vertex, reference_weight, weight });
            }
        }
    }

    let equal = tally.len() <= 1;
    let is_magic = bijective && equal;
    let is_distance_magic = is_magic && {
        let mut sorted = labels.to_vec();
        sorted.sort();
        sorted.iter().enumerate().all(|(i, v)| v.to_wide() == i as i128 + 1)
    };
    VerificationReport {
        is_magic,
        is_distance_magic,
        constant: if is_magic { weights.first().copied() } else { None },
        weights,
        violations,
    }
}

/// The constant forced on an `r`-regular graph of order `n` labeled by
/// `{1..n+1} \ {a}`: `n·c = r((n + 1)(n + 2)/2 − a)`.
pub fn regular_constant<T: Label>(n: usize, r: usize, a: T) -> Result<T> {
    if n == 0 || r == 0 {
        return Err(invalid("order and degree must be positive"));
    }
    let (nw, rw, aw) = (n as i128, r as i128, a.to_wide());
    if aw < 1 || aw > nw {
        return Err(invalid(format!("deleted label {a} outside 1..={n}")));
    }
    let numerator = rw * ((nw + 1) * (nw + 2) / 2 - aw);
    if numerator % nw != 0 {
        return Err(Error::NonIntegerConstant { numerator, denominator: nw });
    }
    T::try_from_wide(numerator / nw)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleLabels {
    /// Deleted labels passing every necessary condition.
    pub labels: BTreeSet<usize>,
    /// Labels other than 1 that pass integrality but are removed by the
    /// even-label rule for `r, n ≡ 2 (mod 4)`. The rule's parity argument
    /// does not cover them, so they are flagged rather than silently dropped.
    pub unproven_exclusions: Vec<usize>,
}

/// Deleted labels `a` for which an `r`-regular graph of order `n` could be
/// magic over `{1..n+1} \ {a}`. Necessary conditions only.
pub fn admissible_deleted_labels(n: usize, r: usize) -> Result<AdmissibleLabels> {
    if r == 0 || n <= r {
        return Err(invalid(format!("need 1 <= r < n, got n={n}, r={r}")));
    }
    let integral: Vec<usize> = (1..=n).filter(|&a| regular_constant::<i128>(n, r, a as i128).is_ok()).collect();
    let twice_odd = |x: usize| x % 4 == 2;
    if !(twice_odd(n) && twice_odd(r) && r >= 6) {
        return Ok(AdmissibleLabels { labels: integral.into_iter().collect(), unproven_exclusions: Vec::new() });
    }
    let (labels, removed): (Vec<usize>, Vec<usize>) =
        integral.into_iter().partition(|&a| a % 2 == 0 && a != 2 && a != n);
    Ok(AdmissibleLabels {
        labels: labels.into_iter().collect(),
        unproven_exclusions: removed.into_iter().filter(|&a| a != 1).collect(),
    })
}

/// Bracket on the constant of an `r`-regular order-`n` graph labeled by
/// `{1..n+1}` minus one label: `(nr + r)/2 + r/n ≤ c ≤ (nr + 3r)/2`.
pub fn constant_bounds<T: Label>(n: usize, r: usize) -> Result<(Ratio<T>, Ratio<T>)> {
    if n == 0 || r == 0 {
        return Err(invalid("order and degree must be positive"));
    }
    let (nw, rw) = (T::from_count(n)?, T::from_count(r)?);
    let two = T::one() + T::one();
    let three = two + T::one();
    let lower = Ratio::new(nw * rw + rw, two) + Ratio::new(rw, nw);
    let upper = Ratio::new(nw * rw + three * rw, two);
    Ok((lower, upper))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Label")]
pub struct HnpBounds<T> {
    pub lower: T,
    pub upper: T,
    /// `np + 1 − p/2`, the largest label whose removal leaves a pool sum
    /// divisible by `p`.
    pub highest_removable: T,
    /// `p/2 + 1`, the smallest such label.
    pub lowest_removable: T,
}

/// Constants of deleted-label labelings of `H(n,p)`, `n` odd, `p` even.
pub fn hnp_constant_bounds<T: Label>(n: usize, p: usize) -> Result<HnpBounds<T>> {
    if n < 3 || n % 2 == 0 || p < 2 || p % 2 == 1 {
        return Err(invalid(format!("need n odd > 1 and p even > 1, got n={n}, p={p}")));
    }
    let (nw, pw) = (n as i128, p as i128);
    Ok(HnpBounds {
        lower: T::try_from_wide((nw * nw * pw + nw + 1) / 2 * (pw - 1))?,
        upper: T::try_from_wide((nw * nw * pw + 3 * nw - 1) / 2 * (pw - 1))?,
        highest_removable: T::try_from_wide(nw * pw + 1 - pw / 2)?,
        lowest_removable: T::try_from_wide(pw / 2 + 1)?,
    })
}
