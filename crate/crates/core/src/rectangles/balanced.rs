//! Balanced rectangles over exactly `{1, ..., np}` (no deleted label).
//!
//! These exist precisely when `n(np + 1)/2` is an integer together with the
//! parity conditions below: `n` even, or `n` and `p` both odd.

use super::{checked, Rectangle};
use crate::error::{invalid, Result};
use crate::scalar::Label;

/// Row `k` (1-based) of block `b`: `(b − 1)p + j` ascending, or its mirror
/// `bp + 1 − j`. Pairing an ascending row with a mirrored one gives a
/// constant column total.
fn ascending(block: i128, p: i128) -> Vec<i128> {
    (1..=p).map(|j| (block - 1) * p + j).collect()
}

fn mirrored(block: i128, p: i128) -> Vec<i128> {
    (1..=p).map(|j| block * p + 1 - j).collect()
}

fn assemble<T: Label>(rows: Vec<Vec<i128>>, n: i128, p: i128) -> Result<Rectangle<T>> {
    let entries = rows
        .into_iter()
        .map(|r| r.into_iter().map(T::try_from_wide).collect::<Result<Vec<T>>>())
        .collect::<Result<Vec<_>>>()?;
    let rect = Rectangle::new(
        entries,
        T::try_from_wide(n * p)?,
        Some(Vec::new()),
        Some(T::try_from_wide(n * (n * p + 1) / 2)?),
    )?;
    checked(rect)
}

/// `n` even: rows `k` and `n − k + 1` are complementary, each pair adding to
/// `np + 1` in every column.
pub fn balanced_even<T: Label>(n: usize, p: usize) -> Result<Rectangle<T>> {
    if n < 2 || n % 2 == 1 {
        return Err(invalid(format!("balanced_even needs even n >= 2, got {n}")));
    }
    if p == 0 {
        return Err(invalid("p must be at least 1"));
    }
    let (nw, pw) = (n as i128, p as i128);
    let rows = (1..=nw)
        .map(|k| if k <= nw / 2 { ascending(k, pw) } else { mirrored(k, pw) })
        .collect();
    assemble(rows, nw, pw)
}

/// A `3 × p` array, each row a permutation of `0..p`, with every column
/// summing to `3(p − 1)/2`. Exists for odd `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KotzigArray {
    pub rows: [Vec<usize>; 3],
}

impl KotzigArray {
    pub fn column_sum(&self, j: usize) -> usize {
        self.rows.iter().map(|r| r[j]).sum()
    }
}

pub fn kotzig(p: usize) -> Result<KotzigArray> {
    if p % 2 == 0 {
        return Err(invalid(format!("Kotzig array needs odd p, got {p}")));
    }
    let k = (p - 1) / 2;
    let first: Vec<usize> = (0..p).collect();
    let second: Vec<usize> = (0..p).map(|j| (j + k) % p).collect();
    let third = (0..p).map(|j| 3 * k - first[j] - second[j]).collect();
    Ok(KotzigArray { rows: [first, second, third] })
}

/// `n`, `p` odd: the first three rows come from a Kotzig array over blocks
/// 1–3, the remaining `n − 3` rows are complementary pairs over blocks
/// `4..=n`.
pub fn balanced_odd<T: Label>(n: usize, p: usize) -> Result<Rectangle<T>> {
    if n < 3 || n % 2 == 0 {
        return Err(invalid(format!("balanced_odd needs odd n >= 3, got {n}")));
    }
    if p % 2 == 0 {
        return Err(invalid(format!("balanced_odd needs odd p, got {p}")));
    }
    let (nw, pw) = (n as i128, p as i128);
    let kz = kotzig(p)?;
    let mut rows: Vec<Vec<i128>> = kz
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| r.iter().map(|&x| i as i128 * pw + 1 + x as i128).collect())
        .collect();
    let pairs = (nw - 3) / 2;
    rows.extend((4..4 + pairs).map(|b| ascending(b, pw)));
    rows.extend((4 + pairs..=nw).map(|b| mirrored(b, pw)));
    assemble(rows, nw, pw)
}

/// Whichever balanced construction applies to `(n, p)`.
pub fn balanced<T: Label>(n: usize, p: usize) -> Result<Rectangle<T>> {
    match (n % 2, p % 2) {
        (0, _) => balanced_even(n, p),
        (1, 1) => balanced_odd(n, p),
        _ => Err(invalid(format!(
            "no balanced rectangle on 1..np for n odd, p even: n(np+1)/2 = {}·{}/2 is not an integer",
            n,
            n * p + 1
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::super::{column_sums, validate};
    use super::*;

    #[test]
    fn even_examples() {
        let a = balanced_even::<i64>(2, 3).unwrap();
        assert_eq!(a.row(0), &[1, 2, 3]);
        assert_eq!(a.row(1), &[6, 5, 4]);
        assert_eq!(column_sums(&a), vec![7, 7, 7]);
        let a = balanced_even::<i64>(4, 2).unwrap();
        assert_eq!(column_sums(&a), vec![18, 18]);
        for n in (2..=10).step_by(2) {
            let a = balanced_even::<i64>(n, 5).unwrap();
            for k in 0..n / 2 {
                assert!((0..5).all(|j| a.get(k, j) + a.get(n - 1 - k, j) == (n * 5 + 1) as i64));
            }
        }
        assert!(balanced_even::<i64>(3, 2).is_err());
        assert!(balanced_even::<i64>(2, 0).is_err());
    }

    #[test]
    fn kotzig_examples() {
        let k = kotzig(3).unwrap();
        assert_eq!(k.rows, [vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]);
        assert_eq!(kotzig(5).unwrap().rows[2], vec![4, 2, 0, 3, 1]);
        let k = kotzig(7).unwrap();
        assert_eq!(k.rows[2], vec![6, 4, 2, 0, 5, 3, 1]);
        assert!((0..7).all(|j| k.column_sum(j) == 9));
        assert_eq!(kotzig(1).unwrap().rows, [vec![0], vec![0], vec![0]]);
        assert!(kotzig(4).is_err());
    }

    #[test]
    fn odd_examples() {
        assert_eq!(column_sums(&balanced_odd::<i64>(3, 3).unwrap()), vec![15; 3]);
        assert_eq!(column_sums(&balanced_odd::<i64>(5, 3).unwrap()), vec![40; 3]);
        let single = balanced_odd::<i64>(3, 1).unwrap();
        assert_eq!(single.column(0), vec![1, 2, 3]);
        assert_eq!(column_sums(&single), vec![6]);
        assert!(balanced_odd::<i64>(4, 3).is_err());
        assert!(balanced_odd::<i64>(3, 2).is_err());
    }

    #[test]
    fn sweep_validates() {
        for n in 2..=12 {
            for p in 1..=12 {
                match balanced::<i64>(n, p) {
                    Ok(a) => assert!(validate(&a).is_ok(), "n={n} p={p}"),
                    Err(_) => assert!(n % 2 == 1 && p % 2 == 0 || n == 1),
                }
            }
        }
    }
}
