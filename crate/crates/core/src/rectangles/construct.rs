//! Rectangles over `{1, ..., np + 1} \ {a}` with constant column sums, for
//! `n` odd and `p = 2m` even.
//!
//! Three constructions cover every odd `n`: dedicated templates for `n = 3`
//! and `n = 5`, and a row-by-row formula for odd `n ≥ 7`. In all three the
//! deleted label is `np − p/2 + 1` and each column sums to `(n²p + n + 1)/2`.

use super::{checked, Rectangle};
use crate::error::{invalid, Error, Result};
use crate::scalar::Label;

fn assemble<T: Label>(columns: Vec<Vec<i128>>, ceiling: i128, deleted: i128, sum: i128) -> Result<Rectangle<T>> {
    let rows = columns[0].len();
    let mut entries = vec![Vec::with_capacity(columns.len()); rows];
    for col in &columns {
        for (row, &v) in entries.iter_mut().zip(col) {
            row.push(T::try_from_wide(v)?);
        }
    }
    let rect = Rectangle::new(
        entries,
        T::try_from_wide(ceiling)?,
        Some(vec![T::try_from_wide(deleted)?]),
        Some(T::try_from_wide(sum)?),
    )?;
    checked(rect)
}

fn require_m(m: usize) -> Result<i128> {
    if m == 0 {
        return Err(invalid("m must be at least 1"));
    }
    Ok(m as i128)
}

/// `3 × 2m`, deleted label `5m + 1`, column sum `9m + 2`.
pub fn case1<T: Label>(m: usize) -> Result<Rectangle<T>> {
    let mw = require_m(m)?;
    let columns = (1..=2 * mw)
        .map(|j| {
            if j % 2 == 1 {
                let t = (j - 1) / 2;
                vec![j, 3 * mw - t, 6 * mw + 1 - t]
            } else {
                let t = (j - 2) / 2;
                vec![j, 4 * mw - t, 5 * mw - t]
            }
        })
        .collect();
    assemble(columns, 6 * mw + 1, 5 * mw + 1, 9 * mw + 2)
}

/// `5 × 2m`, deleted label `9m + 1`, column sum `25m + 3`.
pub fn case2<T: Label>(m: usize) -> Result<Rectangle<T>> {
    let mw = require_m(m)?;
    let columns = (1..=2 * mw)
        .map(|j| {
            if j % 2 == 1 {
                let t = (j - 1) / 2;
                vec![j, 3 * mw - t, 6 * mw - t, 7 * mw - t, 9 * mw + 2 + t]
            } else {
                let t = (j - 2) / 2;
                vec![j, 4 * mw - t, 5 * mw - t, 8 * mw - t, 8 * mw + 1 + t]
            }
        })
        .collect();
    assemble(columns, 10 * mw + 1, 9 * mw + 1, 25 * mw + 3)
}

/// Which formula produces the last row when `n ≡ 3 (mod 4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LastRowBranch {
    /// `2mn + 1 − j/2 + α(j)/2 − α(j+1)·m`; yields distinct labels and the
    /// advertised column sums.
    #[default]
    Corrected,
    /// The same expression without the `+1`. Repeats a label at `n = 7`,
    /// `m = 1`; retained only as a regression witness.
    Uncorrected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RowKind {
    First,
    SecondOrFourth,
    Third,
    /// Rows `5..n-1`, grouped by residue mod 4.
    Middle(usize),
    LastOneMod4,
    LastThreeMod4,
}

fn row_kind(i: usize, n: usize) -> RowKind {
    match i {
        1 => RowKind::First,
        2 | 4 => RowKind::SecondOrFourth,
        3 => RowKind::Third,
        _ if i < n => RowKind::Middle(i % 4),
        _ if n % 4 == 1 => RowKind::LastOneMod4,
        _ => RowKind::LastThreeMod4,
    }
}

/// Twice the entry at 1-based `(i, j)`; halving happens in [`case3_raw`].
fn doubled_entry(i: usize, j: usize, n: usize, m: i128, branch: LastRowBranch) -> i128 {
    let (iw, jw, nw) = (i as i128, j as i128, n as i128);
    // parity indicators: `odd` = α(j), `even` = α(j + 1)
    let odd = jw % 2;
    let even = 1 - odd;
    let base = 4 * m * iw;
    match row_kind(i, n) {
        RowKind::First => 2 * jw,
        RowKind::SecondOrFourth => 2 * (2 * iw - 1) * m - (jw - 1) + even * (2 * m + 1),
        RowKind::Third | RowKind::Middle(3) => base - (jw - 1) + even * (1 - 2 * m),
        RowKind::Middle(1) => base - 2 * m + jw + odd * (1 - 2 * m),
        RowKind::Middle(2) => base - 2 * m + jw + odd - 2 * even * m,
        RowKind::Middle(_) => base - (jw - 1) - 2 * odd * m + even,
        RowKind::LastOneMod4 => base - 2 * m + jw + 3 * odd - 2 * even * m,
        RowKind::LastThreeMod4 => match branch {
            LastRowBranch::Corrected => 4 * m * nw + 2 - jw + odd - 2 * even * m,
            LastRowBranch::Uncorrected => base - jw + 1 - even * (2 * m + 1),
        },
    }
}

/// The raw `n × 2m` grid of the odd-`n ≥ 7` formula, as rows.
///
/// Fails only if some entry is half-integral. No distinctness check is made,
/// so the [`LastRowBranch::Uncorrected`] grid can be inspected.
pub fn case3_raw(n: usize, m: usize, branch: LastRowBranch) -> Result<Vec<Vec<i128>>> {
    let mw = require_m(m)?;
    if n < 7 || n % 2 == 0 {
        return Err(invalid(format!("case 3 needs odd n >= 7, got {n}")));
    }
    (1..=n)
        .map(|i| {
            (1..=2 * m)
                .map(|j| {
                    let twice = doubled_entry(i, j, n, mw, branch);
                    if twice % 2 != 0 {
                        return Err(Error::Construction(format!("half-integral entry at row {i}, column {j}")));
                    }
                    Ok(twice / 2)
                })
                .collect()
        })
        .collect()
}

/// `n × 2m` for odd `n ≥ 7`: deleted label `m(2n − 1) + 1`, column sum
/// `(n²p + n + 1)/2` with `p = 2m`.
pub fn case3<T: Label>(n: usize, m: usize) -> Result<Rectangle<T>> {
    let rows = case3_raw(n, m, LastRowBranch::Corrected)?;
    let (nw, mw) = (n as i128, m as i128);
    let p = 2 * mw;
    let columns = (0..2 * m).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
    assemble(columns, nw * p + 1, mw * (2 * nw - 1) + 1, (nw * nw * p + nw + 1) / 2)
}

/// The deleted-label rectangle for `H(n,p)`, `n` odd, `p` even.
///
/// Dispatches on `n` and then re-checks the shared closed forms: pool
/// `{1..np+1}`, deleted label `np − p/2 + 1`, column sum `(n²p + n + 1)/2`.
pub fn construct_deleted<T: Label>(n: usize, p: usize) -> Result<Rectangle<T>> {
    if n < 3 || n % 2 == 0 {
        return Err(invalid(format!("n must be odd and > 1, got {n}")));
    }
    if p < 2 || p % 2 == 1 {
        return Err(invalid(format!("p must be even and > 1, got {p}")));
    }
    let m = p / 2;
    let rect = match n {
        3 => case1(m)?,
        5 => case2(m)?,
        _ => case3(n, m)?,
    };
    let (nw, pw) = (n as i128, p as i128);
    let expect_deleted = T::try_from_wide(nw * pw - pw / 2 + 1)?;
    let expect_sum = T::try_from_wide((nw * nw * pw + nw + 1) / 2)?;
    let expect_ceiling = T::try_from_wide(nw * pw + 1)?;
    if rect.deleted_label() != Some(expect_deleted)
        || rect.column_sum() != Some(expect_sum)
        || rect.label_ceiling() != expect_ceiling
    {
        return Err(Error::Construction(format!(
            "H({n},{p}) rectangle disagrees with the uniform deleted label / column sum"
        )));
    }
    Ok(rect)
}

#[cfg(test)]
mod tests {
    use super::super::{column_sums, validate};
    use super::*;

    fn cols(r: &Rectangle<i64>) -> Vec<Vec<i64>> {
        r.columns()
    }

    #[test]
    fn case1_small() {
        let a = case1::<i64>(1).unwrap();
        assert_eq!(cols(&a), vec![vec![1, 3, 7], vec![2, 4, 5]]);
        assert_eq!(a.deleted_label(), Some(6));
        assert_eq!(column_sums(&a), vec![11, 11]);

        let a = case1::<i64>(2).unwrap();
        assert_eq!(a.row(0), &[1, 2, 3, 4]);
        assert_eq!(a.row(1), &[6, 8, 5, 7]);
        assert_eq!(a.row(2), &[13, 10, 12, 9]);
        assert_eq!(a.deleted_label(), Some(11));
        assert!(column_sums(&a).iter().all(|&s| s == 20));
        assert!(case1::<i64>(0).is_err());
    }

    #[test]
    fn case1_and_case2_closed_forms() {
        for m in 1..=40 {
            let mw = m as i64;
            let a = case1::<i64>(m).unwrap();
            assert!(validate(&a).is_ok());
            assert!(column_sums(&a).iter().all(|&s| s == 9 * mw + 2));
            let b = case2::<i64>(m).unwrap();
            assert!(validate(&b).is_ok());
            assert_eq!(b.deleted_label(), Some(9 * mw + 1));
            assert!(column_sums(&b).iter().all(|&s| s == 25 * mw + 3));
        }
    }

    #[test]
    fn case2_small() {
        let a = case2::<i64>(1).unwrap();
        assert_eq!(cols(&a), vec![vec![1, 3, 6, 7, 11], vec![2, 4, 5, 8, 9]]);
        assert_eq!(a.deleted_label(), Some(10));
        assert_eq!(column_sums(&a), vec![28, 28]);
    }

    #[test]
    fn case3_small() {
        let a = case3::<i64>(7, 1).unwrap();
        assert_eq!(cols(&a), vec![vec![1, 3, 6, 7, 9, 12, 15], vec![2, 4, 5, 8, 10, 11, 13]]);
        assert_eq!(a.deleted_label(), Some(14));
        assert_eq!(column_sums(&a), vec![53, 53]);

        let a = case3::<i64>(9, 1).unwrap();
        assert_eq!(
            cols(&a),
            vec![vec![1, 3, 6, 7, 9, 12, 14, 15, 19], vec![2, 4, 5, 8, 10, 11, 13, 16, 17]]
        );
        assert_eq!(a.deleted_label(), Some(18));
        assert_eq!(column_sums(&a), vec![86, 86]);
    }

    #[test]
    fn case3_rejects_bad_n() {
        assert!(case3::<i64>(5, 1).is_err());
        assert!(case3::<i64>(8, 1).is_err());
        assert!(case3::<i64>(7, 0).is_err());
    }

    #[test]
    fn uncorrected_last_row_repeats_a_label() {
        let raw = case3_raw(7, 1, LastRowBranch::Uncorrected).unwrap();
        assert_eq!(raw[6], vec![14, 12]);
        assert_eq!(raw[5][0], 12);
        let sums: Vec<i128> = (0..2).map(|j| raw.iter().map(|r| r[j]).sum()).collect();
        assert_eq!(sums, vec![52, 52]);
        // n ≡ 1 (mod 4) does not use the branch, so both variants agree
        assert_eq!(
            case3_raw(9, 2, LastRowBranch::Uncorrected).unwrap(),
            case3_raw(9, 2, LastRowBranch::Corrected).unwrap()
        );
    }

    #[test]
    fn case3_sweep() {
        for n in (7..=41).step_by(2) {
            for m in 1..=12 {
                let a = case3::<i64>(n, m).unwrap();
                assert!(validate(&a).is_ok(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn dispatcher() {
        assert_eq!(construct_deleted::<i64>(3, 2).unwrap(), case1(1).unwrap());
        let a = construct_deleted::<i64>(5, 6).unwrap();
        assert_eq!(a, case2(3).unwrap());
        assert_eq!(a.deleted_label(), Some(28));
        assert_eq!(construct_deleted::<i64>(7, 2).unwrap().deleted_label(), Some(14));
        assert!(construct_deleted::<i64>(4, 2).is_err());
        assert!(construct_deleted::<i64>(3, 3).is_err());
        assert!(construct_deleted::<i64>(1, 2).is_err());
    }

    #[test]
    fn narrow_scalars_work_and_overflow_is_reported() {
        let small = construct_deleted::<i16>(5, 6).unwrap();
        assert_eq!(small.column_sum(), Some(78));
        assert!(matches!(construct_deleted::<i8>(15, 12), Err(Error::Overflow { .. })));
    }
}
