//! Plain-text edge lists.
//!
//! ```text
//! n 4        # optional header: vertex count
//! 0 1
//! 1 2
//! ```
//!
//! Blank lines and `#` comments are ignored. Without a header the order is
//! one more than the largest id seen.

use std::collections::BTreeSet;
use std::fmt::Write;

use super::Graph;
use crate::error::{Error, ParseErrorKind, Result};

/// Whether vertex ids in external text start at 0 or 1.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum IndexBase {
    #[default]
    Zero,
    One,
}

impl IndexBase {
    fn offset(self) -> i64 {
        match self {
            IndexBase::Zero => 0,
            IndexBase::One => 1,
        }
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    parse_edge_list_with(text, IndexBase::Zero)
}

pub fn parse_edge_list_with(text: &str, base: IndexBase) -> Result<Graph> {
    let err = |line: usize, kind| Error::Parse { line, kind };
    let mut order: Option<usize> = None;
    let mut seen_edge = false;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let malformed = || err(line_no, ParseErrorKind::Malformed(raw.to_string()));
        if fields.first() == Some(&"n") {
            if seen_edge || order.is_some() || fields.len() != 2 {
                return Err(malformed());
            }
            order = Some(fields[1].parse().map_err(|_| malformed())?);
            continue;
        }
        if fields.len() != 2 {
            return Err(malformed());
        }
        let mut ids = [0usize; 2];
        for (slot, field) in ids.iter_mut().zip(&fields) {
            let raw_id: i64 = field.parse().map_err(|_| malformed())?;
            let id = raw_id - base.offset();
            let out_of_range = id < 0 || order.is_some_and(|n| id as usize >= n);
            if out_of_range {
                return Err(err(
                    line_no,
                    ParseErrorKind::OutOfRange { id: raw_id, order: order.unwrap_or(0) },
                ));
            }
            *slot = id as usize;
        }
        seen_edge = true;
        edges.push((line_no, ids[0], ids[1]));
    }

    let order = order.unwrap_or_else(|| edges.iter().map(|&(_, u, v)| u.max(v) + 1).max().unwrap_or(0));
    let mut seen = BTreeSet::new();
    for &(line_no, u, v) in &edges {
        if u == v {
            return Err(err(line_no, ParseErrorKind::SelfLoop(u)));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(line_no, ParseErrorKind::DuplicateEdge(u.min(v), u.max(v))));
        }
    }
    Graph::from_edges(order, edges.into_iter().map(|(_, u, v)| (u, v)))
}

/// Canonical edge list: header, then `u v` with `u < v` in sorted order.
pub fn emit_edge_list(g: &Graph, base: IndexBase) -> String {
    let off = base.offset() as usize;
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + off, v + off);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_header_and_edges() {
        let g = parse_edge_list("n 2\n0 1").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);

        let g = parse_edge_list("# triangle\n0 1\n1 2\n\n2 0 # closing edge\n").unwrap();
        assert_eq!((g.order(), g.edge_count()), (3, 3));

        let g = parse_edge_list("n 5\n").unwrap();
        assert_eq!((g.order(), g.edge_count()), (5, 0));
    }

    #[test]
    fn one_indexed() {
        let g = parse_edge_list_with("n 3\n1 2\n2 3\n", IndexBase::One).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(emit_edge_list(&g, IndexBase::One), "n 3\n1 2\n2 3\n");
        assert!(matches!(
            parse_edge_list_with("0 1", IndexBase::One),
            Err(Error::Parse { line: 1, kind: ParseErrorKind::OutOfRange { .. } })
        ));
    }

    #[test]
    fn reports_errors_with_lines() {
        let cases = [
            ("0 0", 1, "self"),
            ("n 3\n0 1\n1 0", 3, "dup"),
            ("n 2\n0 2", 2, "range"),
            ("0 1\nx y", 2, "mal"),
            ("0 1 2", 1, "mal"),
            ("0 1\nn 3", 2, "mal"),
            ("0 -1", 1, "range"),
        ];
        for (text, line, what) in cases {
            match parse_edge_list(text) {
                Err(Error::Parse { line: l, kind }) => {
                    assert_eq!(l, line, "{text:?}");
                    let ok = match what {
                        "self" => matches!(kind, ParseErrorKind::SelfLoop(0)),
                        "dup" => matches!(kind, ParseErrorKind::DuplicateEdge(0, 1)),
                        "range" => matches!(kind, ParseErrorKind::OutOfRange { .. }),
                        _ => matches!(kind, ParseErrorKind::Malformed(_)),
                    };
                    assert!(ok, "{text:?} gave {kind:?}");
                }
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    fn canonical(order: usize, edges: &[(usize, usize)]) -> String {
        let set: BTreeSet<_> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let mut s = format!("n {order}\n");
        for (u, v) in set {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    proptest! {
        #[test]
        fn emit_parse_is_canonical(order in 1usize..25, raw in proptest::collection::vec((0usize..25, 0usize..25), 0..60)) {
            let mut seen = BTreeSet::new();
            let edges: Vec<(usize, usize)> = raw
                .into_iter()
                .map(|(u, v)| (u % order, v % order))
                .filter(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))))
                .collect();
            let text = std::iter::once(format!("n {order}"))
                .chain(edges.iter().map(|(u, v)| format!("{u} {v}")))
                .collect::<Vec<_>>()
                .join("\n");
            let g = parse_edge_list(&text).unwrap();
            prop_assert_eq!(emit_edge_list(&g, IndexBase::Zero), canonical(order, &edges));
        }
    }
}
