//! Cross-checks of the search against a plain permutation sweep, and of the
//! closed forms against the search.

mod common;

use itertools::Itertools;
use magiclab::families::{theta_lex_blowup, theta_m_cycle_lex, theta_m_hnp, FamilySpec};
use magiclab::graph::{build_cycle, build_multipartite, complete_graph, disjoint_union, Graph};
use magiclab::index::Theta;
use magiclab::labeling::{admissible_deleted_labels, constant_bounds, regular_constant, verify_s_magic, LabelSet};
use magiclab::search::{enumerate_labelings, enumerate_with, find_labeling, SearchConfig, SearchOutcome};
use num_rational::Ratio;

use common::*;

fn small_graphs() -> Vec<Graph> {
    let mut out = vec![
        complete_graph(1),
        complete_graph(2),
        complete_graph(4),
        build_multipartite(3, 2).unwrap(),
        build_multipartite(2, 2).unwrap(),
        build_multipartite(2, 3).unwrap(),
        build_multipartite(4, 2).unwrap(),
        prism(),
        cube(),
        disjoint_union(&build_cycle(3).unwrap(), 2).unwrap(),
        disjoint_union(&build_cycle(4).unwrap(), 2).unwrap(),
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap(),
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap(),
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap(),
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap(),
        Graph::from_edges(6, [(0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5), (3, 4)]).unwrap(),
    ];
    out.extend((3..=8).map(|p| build_cycle(p).unwrap()));
    out
}

fn label_sets(order: usize) -> Vec<LabelSet<i64>> {
    let mut sets = vec![LabelSet::initial(order).unwrap()];
    sets.extend((1..=order).map(|a| LabelSet::without(order + 1, a).unwrap()));
    sets
}

fn naive_all(g: &Graph, s: &LabelSet<i64>) -> Vec<Vec<i64>> {
    s.values()
        .iter()
        .copied()
        .permutations(g.order())
        .filter(|perm| naive_is_magic(g, perm))
        .sorted()
        .collect()
}

#[test]
fn enumeration_matches_permutation_sweep() {
    for g in small_graphs() {
        for s in label_sets(g.order()) {
            let fast: Vec<Vec<i64>> = enumerate_labelings(&g, &s).unwrap().into_iter().map(|l| l.assignment().to_vec()).collect();
            let slow = naive_all(&g, &s);
            assert_eq!(fast, slow, "{:?} with {:?}", g.name(), s.values());
        }
    }
}

#[test]
fn pruning_never_changes_results() {
    let off = SearchConfig { pruning: false, ..Default::default() };
    let on = SearchConfig::default();
    for g in small_graphs().into_iter().filter(|g| g.order() <= 7) {
        for s in label_sets(g.order()) {
            assert_eq!(enumerate_with(&g, &s, &off).unwrap(), enumerate_with(&g, &s, &on).unwrap());
            assert_eq!(find_labeling(&g, &s, &off).unwrap(), find_labeling(&g, &s, &on).unwrap());
        }
    }
}

#[test]
fn first_labeling_is_lexicographically_smallest() {
    for g in small_graphs() {
        for s in label_sets(g.order()) {
            let first = match find_labeling(&g, &s, &SearchConfig::default()).unwrap() {
                SearchOutcome::Found(l) => Some(l.assignment().to_vec()),
                _ => None,
            };
            assert_eq!(first, naive_all(&g, &s).into_iter().next());
        }
    }
}

#[test]
fn deleted_label_witnesses_obey_counting_identities() {
    let corpus = odd_regular_corpus().into_iter().chain(even_regular_corpus());
    for g in corpus {
        let (n, r) = (g.order(), g.regular_degree().unwrap());
        let admissible = admissible_deleted_labels(n, r).unwrap();
        let (lo, hi) = constant_bounds::<i64>(n, r).unwrap();
        for a in 1..=n {
            let s = LabelSet::without(n + 1, a).unwrap();
            for w in enumerate_labelings(&g, &s).unwrap() {
                let c = verify_s_magic(&g, w.assignment()).constant.unwrap();
                assert_eq!(regular_constant(n, r, a as i64).unwrap(), c);
                assert!(admissible.labels.contains(&a), "{:?}: a = {a}", g.name());
                assert!(lo <= Ratio::from_integer(c) && Ratio::from_integer(c) <= hi);
            }
        }
    }
}

#[test]
fn witnesses_realize_their_index_and_constants() {
    for m in 1..=3usize {
        for n in 2..=7usize {
            for p in 2..=7usize {
                let r = theta_m_hnp::<i64>(m, n, p).unwrap();
                let g = FamilySpec::Multipartite { n, p, m }.graph().unwrap();
                let w = r.witness.as_ref().unwrap();
                let rep = verify_s_magic(&g, w.assignment());
                assert!(rep.is_magic);
                let Theta::Finite(d) = r.theta else { panic!() };
                assert_eq!(w.label_set().alpha().unwrap(), (g.order() as u64 + d) as i64);
                let (nw, mw, pw) = (n as i64, m as i64, p as i64);
                let expected = if d == 1 { (pw - 1) * (nw * nw * mw * pw + nw + 1) / 2 } else { (pw - 1) * nw * (nw * mw * pw + 1) / 2 };
                assert_eq!(rep.constant, Some(expected));

                if p >= 3 {
                    let r = theta_m_cycle_lex::<i64>(m, p, n).unwrap();
                    let g = FamilySpec::CycleLex { p, n, m }.graph().unwrap();
                    if let Some(w) = &r.witness {
                        let rep = verify_s_magic(&g, w.assignment());
                        let Theta::Finite(d) = r.theta else { panic!() };
                        assert_eq!(w.label_set().alpha().unwrap(), (g.order() as u64 + d) as i64);
                        let expected = if d == 1 { nw * nw * mw * pw + nw + 1 } else { nw * (nw * mw * pw + 1) };
                        assert_eq!(rep.constant, Some(expected));
                    } else {
                        assert!(n % 2 == 1 && p % 4 == 0);
                    }
                }
            }
        }
    }
}

#[test]
fn blowup_witness_constants() {
    let cfg = SearchConfig::default();
    for base in regular_corpus() {
        let (p, r) = (base.order(), base.regular_degree().unwrap());
        for n in 2..=5usize {
            let res = theta_lex_blowup::<i64>(&base, n, &cfg).unwrap();
            let Some(w) = &res.witness else { continue };
            let g = FamilySpec::LexBlowup { base: base.clone(), n }.graph().unwrap();
            let rep = verify_s_magic(&g, w.assignment());
            let (nw, pw, rw) = (n as i64, p as i64, r as i64);
            let expected = match res.theta {
                Theta::Finite(1) => rw * (nw * nw * pw + nw + 1) / 2,
                _ => rw * nw * (nw * pw + 1) / 2,
            };
            assert_eq!(rep.constant, Some(expected), "{:?} n={n}", base.name());
        }
    }
}
