//! Label rectangles: `n × p` integer matrices whose columns label the parts
//! (or fibers) of a graph.
//!
//! A rectangle draws its entries from the pool `{1, ..., label_ceiling}`.
//! When `deleted` is present the entries and the deleted labels partition the
//! pool exactly. A rectangle carrying `column_sum` is *balanced*: every column
//! adds up to that value.

mod balanced;
mod construct;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::scalar::Label;

pub use balanced::{balanced, balanced_even, balanced_odd, kotzig, KotzigArray};
pub use construct::{case1, case2, case3, case3_raw, construct_deleted, LastRowBranch};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Label")]
pub struct Rectangle<T> {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<T>>,
    label_ceiling: T,
    #[serde(default)]
    deleted: Option<Vec<T>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    column_sum: Option<T>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Label", rename_all = "snake_case")]
pub enum RectViolation<T> {
    Duplicate { value: T },
    OutOfPool { value: T, row: usize, col: usize },
    /// Pool labels neither used nor listed as deleted.
    Missing { value: T },
    /// A label listed as deleted that also appears as an entry.
    DeletedButUsed { value: T },
    Unbalanced { col: usize, sum: T, expected: T },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Label")]
pub struct RectReport<T> {
    pub column_sums: Vec<T>,
    pub violations: Vec<RectViolation<T>>,
}

impl<T> RectReport<T> {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl<T: Label> Rectangle<T> {
    /// Wraps a row-major grid. Only the shape is checked here; use
    /// [`validate`] for the label invariants.
    pub fn new(entries: Vec<Vec<T>>, label_ceiling: T, deleted: Option<Vec<T>>, column_sum: Option<T>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(invalid("rectangle must be non-empty"));
        }
        if entries.iter().any(|r| r.len() != cols) {
            return Err(invalid("ragged rectangle rows"));
        }
        let deleted = deleted.map(|mut d| {
            d.sort();
            d
        });
        Ok(Rectangle { rows, cols, entries, label_ceiling, deleted, column_sum })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> T {
        self.entries[row][col]
    }

    pub fn row(&self, row: usize) -> &[T] {
        &self.entries[row]
    }

    pub fn column(&self, col: usize) -> Vec<T> {
        self.entries.iter().map(|r| r[col]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = T> + '_ {
        self.entries.iter().flatten().copied()
    }

    pub fn label_ceiling(&self) -> T {
        self.label_ceiling
    }

    pub fn deleted(&self) -> Option<&[T]> {
        self.deleted.as_deref()
    }

    /// The single deleted label, if there is exactly one.
    pub fn deleted_label(&self) -> Option<T> {
        match self.deleted.as_deref() {
            Some([a]) => Some(*a),
            _ => None,
        }
    }

    /// The declared common column sum of a balanced rectangle.
    pub fn column_sum(&self) -> Option<T> {
        self.column_sum
    }

    pub fn is_balanced(&self) -> bool {
        self.column_sum.is_some()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# label_ceiling: {}", self.label_ceiling);
        if let Some(d) = &self.deleted {
            let _ = writeln!(out, "# deleted: {}", join(d));
        }
        if let Some(s) = self.column_sum {
            let _ = writeln!(out, "# column_sum: {s}");
        }
        for row in &self.entries {
            let _ = writeln!(out, "{}", join(row));
        }
        out
    }

    /// Parses the CSV written by [`Rectangle::to_csv`]. Header comments are
    /// optional: a missing ceiling defaults to the largest entry.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut ceiling = None;
        let mut deleted = None;
        let mut column_sum = None;
        let mut entries = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            let bad = || invalid(format!("line {}: cannot parse {line:?}", idx + 1));
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some((key, value)) = comment.split_once(':') {
                    match key.trim() {
                        "label_ceiling" => ceiling = Some(value.trim().parse().map_err(|_| bad())?),
                        "deleted" => deleted = Some(parse_list(value).ok_or_else(bad)?),
                        "column_sum" => column_sum = Some(value.trim().parse().map_err(|_| bad())?),
                        _ => {}
                    }
                }
                continue;
            }
            entries.push(parse_list(line).ok_or_else(bad)?);
        }
        let ceiling = match ceiling {
            Some(c) => c,
            None => entries.iter().flatten().copied().max().ok_or_else(|| invalid("empty rectangle"))?,
        };
        Self::new(entries, ceiling, deleted, column_sum)
    }
}

fn join<T: std::fmt::Display>(values: &[T]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_list<T: Label>(s: &str) -> Option<Vec<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Some(Vec::new());
    }
    s.split(',').map(|f| f.trim().parse().ok()).collect()
}

pub fn column_sums<T: Label>(a: &Rectangle<T>) -> Vec<T> {
    (0..a.cols).map(|j| a.entries.iter().map(|r| r[j]).sum()).collect()
}

/// Audits distinctness, pool coverage and balance; collects every violation.
pub fn validate<T: Label>(a: &Rectangle<T>) -> RectReport<T> {
    let mut violations = Vec::new();
    let mut counts: BTreeMap<T, usize> = BTreeMap::new();
    for (i, row) in a.entries.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            *counts.entry(v).or_default() += 1;
            if v < T::one() || v > a.label_ceiling {
                violations.push(RectViolation::OutOfPool { value: v, row: i, col: j });
            }
        }
    }
    violations.extend(counts.iter().filter(|(_, &c)| c > 1).map(|(&value, _)| RectViolation::Duplicate { value }));

    if let Some(deleted) = &a.deleted {
        let deleted_set: BTreeSet<T> = deleted.iter().copied().collect();
        for &d in &deleted_set {
            if counts.contains_key(&d) {
                violations.push(RectViolation::DeletedButUsed { value: d });
            }
        }
        let mut v = T::one();
        while v <= a.label_ceiling {
            if !counts.contains_key(&v) && !deleted_set.contains(&v) {
                violations.push(RectViolation::Missing { value: v });
            }
            v = v + T::one();
        }
    }

    let sums = column_sums(a);
    if let Some(expected) = a.column_sum {
        for (col, &sum) in sums.iter().enumerate() {
            if sum != expected {
                violations.push(RectViolation::Unbalanced { col, sum, expected });
            }
        }
    }
    RectReport { column_sums: sums, violations }
}

/// Runs [`validate`] and turns any violation into a construction error.
pub(crate) fn checked<T: Label>(a: Rectangle<T>) -> Result<Rectangle<T>> {
    let report = validate(&a);
    match report.violations.first() {
        None => Ok(a),
        Some(v) => Err(Error::Construction(format!("{}x{} rectangle: {v:?}", a.rows, a.cols))),
    }
}

/// Maps every entry `x` to `np + 2 − x`.
///
/// The pool `{1..np+1}` is carried onto itself, the deleted label `a` becomes
/// `np + 2 − a`, and a column sum `b` becomes `n(np + 2) − b`.
pub fn complement<T: Label>(a: &Rectangle<T>) -> Result<Rectangle<T>> {
    let np = T::from_count(a.rows * a.cols)?;
    let top = np + T::one();
    let pivot = np + T::one() + T::one();
    if let Some(bad) = a.entries().find(|&x| x < T::one() || x > top) {
        return Err(invalid(format!("entry {bad} outside 1..={top}; complement needs pool 1..np+1")));
    }
    let deleted = match &a.deleted {
        Some(d) => d.iter().map(|&x| pivot - x).collect(),
        None => {
            let used: BTreeSet<T> = a.entries().collect();
            let mut d = Vec::new();
            let mut v = T::one();
            while v <= top {
                if !used.contains(&v) {
                    d.push(pivot - v);
                }
                v = v + T::one();
            }
            d
        }
    };
    let entries = a.entries.iter().map(|r| r.iter().map(|&x| pivot - x).collect()).collect();
    let n = T::from_count(a.rows)?;
    let column_sum = a.column_sum.map(|b| n * pivot - b);
    Rectangle::new(entries, top, Some(deleted), column_sum)
}

/// Splits a balanced rectangle into `m` balanced pieces of `cols / m` columns.
///
/// Piece `k` takes columns `k, k + m, k + 2m, ...`.
pub fn split<T: Label>(b: &Rectangle<T>, m: usize) -> Result<Vec<Rectangle<T>>> {
    if m == 0 || b.cols % m != 0 {
        return Err(invalid(format!("{m} does not divide the column count {}", b.cols)));
    }
    let sum = b.column_sum.ok_or_else(|| invalid("split needs a balanced rectangle"))?;
    if column_sums(b).iter().any(|&s| s != sum) {
        return Err(invalid("split needs a balanced rectangle"));
    }
    if m == 1 {
        return Ok(vec![b.clone()]);
    }
    (0..m)
        .map(|k| {
            let entries = b
                .entries
                .iter()
                .map(|row| row.iter().skip(k).step_by(m).copied().collect())
                .collect();
            Rectangle::new(entries, b.label_ceiling, None, Some(sum))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rect(rows: Vec<Vec<i64>>) -> Rectangle<i64> {
        let ceiling = rows.iter().flatten().copied().max().unwrap();
        Rectangle::new(rows, ceiling, None, None).unwrap()
    }

    #[test]
    fn shape_is_checked() {
        assert!(Rectangle::<i64>::new(vec![], 1, None, None).is_err());
        assert!(Rectangle::new(vec![vec![1i64, 2], vec![3]], 3, None, None).is_err());
    }

    #[test]
    fn validate_reports_each_violation() {
        let dup = rect(vec![vec![1, 2], vec![2, 3]]);
        assert!(validate(&dup).violations.contains(&RectViolation::Duplicate { value: 2 }));

        let r = Rectangle::new(vec![vec![1i64, 2], vec![4, 9]], 5, Some(vec![2]), Some(5)).unwrap();
        let v = validate(&r).violations;
        assert!(v.contains(&RectViolation::OutOfPool { value: 9, row: 1, col: 1 }));
        assert!(v.contains(&RectViolation::DeletedButUsed { value: 2 }));
        assert!(v.contains(&RectViolation::Missing { value: 3 }));
        assert!(v.contains(&RectViolation::Unbalanced { col: 1, sum: 11, expected: 5 }));
        assert!(!validate(&r).is_ok());
    }

    #[test]
    fn complement_and_split_errors() {
        let too_big = rect(vec![vec![1, 2], vec![3, 6]]);
        assert!(complement(&too_big).is_err());
        let unbalanced = rect(vec![vec![1, 2], vec![3, 5]]);
        assert!(split(&unbalanced, 2).is_err());
        let b = case1::<i64>(2).unwrap();
        assert!(split(&b, 3).is_err());
        assert!(split(&b, 0).is_err());
        assert_eq!(split(&b, 1).unwrap(), vec![b.clone()]);
    }

    #[test]
    fn complement_infers_missing_pool_labels() {
        let a = rect(vec![vec![1, 2], vec![4, 5]]);
        let c = complement(&a).unwrap();
        assert_eq!(c.deleted(), Some(&[3][..]));
        assert_eq!(c.row(0), &[5, 4]);
    }

    #[test]
    fn split_case1_m2() {
        let b = case1::<i64>(2).unwrap();
        let pieces = split(&b, 2).unwrap();
        assert_eq!(pieces.len(), 2);
        for piece in &pieces {
            assert_eq!((piece.rows(), piece.cols()), (3, 2));
            assert_eq!(column_sums(piece), vec![20, 20]);
            assert!(validate(piece).is_ok());
        }
        assert_eq!(pieces[0].column(0), vec![1, 6, 13]);
        assert_eq!(pieces[0].column(1), vec![3, 5, 12]);
    }

    #[test]
    fn csv_and_json_round_trip() {
        let a = construct_deleted::<i64>(5, 6).unwrap();
        let csv = a.to_csv();
        assert!(csv.starts_with("# label_ceiling: 31\n# deleted: 28\n# column_sum: 78\n1,2,3,4,5,6\n"));
        assert_eq!(Rectangle::from_csv(&csv).unwrap(), a);
        let json = serde_json::to_string(&a).unwrap();
        assert!(json.contains(r#""rows":5,"cols":6"#));
        assert_eq!(serde_json::from_str::<Rectangle<i64>>(&json).unwrap(), a);

        let bare = Rectangle::<i64>::from_csv("1,3,7\n2,4,5\n").unwrap();
        assert_eq!(bare.label_ceiling(), 7);
        assert_eq!(bare.deleted(), None);
        assert!(Rectangle::<i64>::from_csv("1,x\n").is_err());
    }

    fn pool_rectangle() -> impl Strategy<Value = Rectangle<i64>> {
        (1usize..8, 1usize..8)
            .prop_flat_map(|(n, p)| {
                let size = n * p;
                (Just(n), Just(p), 1..=size as i64 + 1, Just((1..=size as i64).collect::<Vec<_>>()).prop_shuffle())
            })
            .prop_map(|(n, p, a, perm)| {
                // relabel the permutation of 1..np onto the pool {1..np+1} \ {a}
                let flat: Vec<i64> = perm.into_iter().map(|x| if x >= a { x + 1 } else { x }).collect();
                let entries = flat.chunks(p).map(<[i64]>::to_vec).collect();
                Rectangle::new(entries, (n * p) as i64 + 1, Some(vec![a]), None).unwrap()
            })
    }

    proptest! {
        #[test]
        fn complement_is_involution_on_pool_rectangles(a in pool_rectangle()) {
            prop_assert!(validate(&a).is_ok());
            let c = complement(&a).unwrap();
            prop_assert!(validate(&c).is_ok());
            prop_assert_eq!(complement(&c).unwrap(), a);
        }
    }
}
