#![allow(dead_code)]

use magiclab::graph::{build_circulant, build_cycle, build_multipartite, complete_graph, Graph};

pub fn prism() -> Graph {
    build_circulant(6, &[2, 3]).unwrap().with_name("prism")
}

pub fn cube() -> Graph {
    let edges = (0..8usize).flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b)))).filter(|(u, v)| u < v);
    Graph::from_edges(8, edges).unwrap().with_name("cube")
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap().with_name("petersen")
}

/// Regular base graphs for blow-up checks.
pub fn regular_corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = (3..=12).map(|p| build_cycle(p).unwrap()).collect();
    out.push(complete_graph(4));
    out.push(build_multipartite(3, 2).unwrap());
    out.push(prism());
    out.push(cube());
    out
}

/// Odd-regular graphs on at most 10 vertices.
pub fn odd_regular_corpus() -> Vec<Graph> {
    let mut out = vec![complete_graph(2), complete_graph(4), complete_graph(6), build_multipartite(3, 2).unwrap()];
    out.extend([build_multipartite(5, 2).unwrap(), prism(), cube(), petersen()]);
    for p in (4..=10).step_by(2) {
        for mask in 1u32..(1 << (p / 2)) {
            let offs: Vec<usize> = (1..=p / 2).filter(|s| mask & (1 << (s - 1)) != 0).collect();
            let g = build_circulant(p, &offs).unwrap();
            if g.regular_degree().is_some_and(|r| r % 2 == 1) {
                out.push(g);
            }
        }
    }
    out
}

/// Even-regular graphs (degree ≥ 2) on at most 10 vertices.
pub fn even_regular_corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    for p in 3..=10 {
        for mask in 1u32..(1 << (p / 2)) {
            let offs: Vec<usize> = (1..=p / 2).filter(|s| mask & (1 << (s - 1)) != 0).collect();
            let g = build_circulant(p, &offs).unwrap();
            if g.regular_degree().is_some_and(|r| r % 2 == 0 && r > 0) {
                out.push(g);
            }
        }
    }
    out.push(build_multipartite(2, 3).unwrap());
    out.push(build_multipartite(2, 4).unwrap());
    out.push(build_multipartite(2, 5).unwrap());
    out
}

/// Weight of every vertex, computed straight from the edge list.
pub fn naive_weights(g: &Graph, labels: &[i64]) -> Vec<i64> {
    let mut w = vec![0; g.order()];
    for (u, v) in g.edges() {
        w[u] += labels[v];
        w[v] += labels[u];
    }
    w
}

pub fn naive_is_magic(g: &Graph, labels: &[i64]) -> bool {
    let w = naive_weights(g, labels);
    w.windows(2).all(|p| p[0] == p[1])
}
