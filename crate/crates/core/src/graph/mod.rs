//! Simple undirected graphs and the families that get labeled.
//!
//! Vertex ids are dense, `0..order`. Builders fix their numbering so that a
//! labeling computed once can be replayed byte-for-byte:
//!
//! * `H(n,p)`: vertex `v` lies in part `v / n`.
//! * `G[H]`: vertex `(g, h)` has id `g * |H| + h`; the fiber of `g` is the
//!   contiguous block of `|H|` ids starting at `g * |H|`.
//! * `m·G`: copy `k` occupies ids `k * |G| .. (k + 1) * |G|`.

mod io;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

pub use io::{emit_edge_list, parse_edge_list, parse_edge_list_with, IndexBase};

/// An immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphDoc", into = "GraphDoc")]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    name: Option<String>,
}

/// JSON shape of a graph: `{order, edges: [[u, v], ...], name}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct GraphDoc {
    order: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

impl TryFrom<GraphDoc> for Graph {
    type Error = crate::error::Error;

    fn try_from(doc: GraphDoc) -> Result<Self> {
        let g = Graph::from_edges(doc.order, doc.edges.iter().map(|e| (e[0], e[1])))?;
        Ok(g.with_name_opt(doc.name))
    }
}

impl From<Graph> for GraphDoc {
    fn from(g: Graph) -> Self {
        GraphDoc {
            order: g.order(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            name: g.name,
        }
    }
}

impl Graph {
    /// Builds a graph from an edge iterator, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut sets = vec![BTreeSet::new(); order];
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(invalid(format!("edge {u}-{v} out of range for order {order}")));
            }
            if u == v {
                return Err(invalid(format!("self-loop at vertex {u}")));
            }
            if !sets[u].insert(v) {
                return Err(invalid(format!("duplicate edge {u}-{v}")));
            }
            sets[v].insert(u);
        }
        Ok(Self::from_sets(sets))
    }

    fn from_sets(sets: Vec<BTreeSet<usize>>) -> Self {
        Graph {
            adjacency: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
            name: None,
        }
    }

    pub fn with_name(self, name: impl Into<String>) -> Self {
        self.with_name_opt(Some(name.into()))
    }

    fn with_name_opt(mut self, name: Option<String>) -> Self {
        self.name = name;
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted open neighborhood of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// The common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency.iter().all(|ns| ns.len() == first).then_some(first)
    }

    pub fn connected_components(&self) -> usize {
        let mut seen = vec![false; self.order()];
        let mut count = 0;
        for start in 0..self.order() {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }
}

/// `K̄_n`: `n` isolated vertices.
pub fn empty_graph(n: usize) -> Graph {
    Graph::from_sets(vec![BTreeSet::new(); n]).with_name(format!("E{n}"))
}

pub fn complete_graph(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges)
        .expect("complete graph edges are valid")
        .with_name(format!("K{n}"))
}

/// The complete multipartite graph `H(n,p)`: `p` parts of `n` vertices each.
pub fn build_multipartite(n: usize, p: usize) -> Result<Graph> {
    if n == 0 || p == 0 {
        return Err(invalid("multipartite graph needs n >= 1 and p >= 1"));
    }
    let order = n * p;
    let edges = (0..order).flat_map(|u| ((u + 1)..order).filter(move |v| u / n != v / n).map(move |v| (u, v)));
    Ok(Graph::from_edges(order, edges)?.with_name(format!("H({n},{p})")))
}

pub fn build_cycle(p: usize) -> Result<Graph> {
    if p < 3 {
        return Err(invalid("cycle needs p >= 3"));
    }
    let edges = (0..p).map(|i| (i, (i + 1) % p));
    Ok(Graph::from_edges(p, edges)?.with_name(format!("C{p}")))
}

/// Circulant graph on `Z_p`: `i ~ i ± s` for every offset `s`.
pub fn build_circulant(p: usize, offsets: &[usize]) -> Result<Graph> {
    if offsets.is_empty() {
        return Err(invalid("circulant needs at least one offset"));
    }
    let mut seen = BTreeSet::new();
    for &s in offsets {
        if s == 0 || s > p / 2 {
            return Err(invalid(format!("offset {s} outside 1..={}", p / 2)));
        }
        if !seen.insert(s) {
            return Err(invalid(format!("duplicate offset {s}")));
        }
    }
    let mut sets = vec![BTreeSet::new(); p];
    for i in 0..p {
        for &s in &seen {
            let j = (i + s) % p;
            sets[i].insert(j);
            sets[j].insert(i);
        }
    }
    let tag = seen.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",");
    Ok(Graph::from_sets(sets).with_name(format!("Circ({p};{tag})")))
}

/// Lexicographic product `G[H]`.
pub fn lex_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.order() == 0 || h.order() == 0 {
        return Err(invalid("lexicographic product of an empty graph"));
    }
    let fiber = h.order();
    let order = g.order() * fiber;
    let mut adjacency = Vec::with_capacity(order);
    for gi in 0..g.order() {
        for hi in 0..fiber {
            let mut ns = Vec::with_capacity(g.degree(gi) * fiber + h.degree(hi));
            // sorted because fibers are contiguous and visited in id order
            for &gj in g.neighbors(gi).iter().filter(|&&gj| gj < gi) {
                ns.extend(gj * fiber..(gj + 1) * fiber);
            }
            ns.extend(h.neighbors(hi).iter().map(|&hj| gi * fiber + hj));
            for &gj in g.neighbors(gi).iter().filter(|&&gj| gj > gi) {
                ns.extend(gj * fiber..(gj + 1) * fiber);
            }
            adjacency.push(ns);
        }
    }
    let name = format!(
        "{}[{}]",
        g.name().unwrap_or("G"),
        h.name().unwrap_or("H")
    );
    Ok(Graph { adjacency, name: Some(name) })
}

/// `G[K̄_n]`, the `n`-fold blow-up of `G`.
pub fn blow_up(g: &Graph, n: usize) -> Result<Graph> {
    lex_product(g, &empty_graph(n))
}

/// `m` disjoint copies of `G`.
pub fn disjoint_union(g: &Graph, m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(invalid("disjoint union needs m >= 1"));
    }
    let order = g.order();
    let adjacency = (0..m)
        .flat_map(|k| g.adjacency.iter().map(move |ns| ns.iter().map(|&v| v + k * order).collect()))
        .collect();
    let name = match (m, g.name()) {
        (1, Some(n)) => n.to_string(),
        (_, n) => format!("{m}{}", n.unwrap_or("G")),
    };
    Ok(Graph { adjacency, name: Some(name) })
}
