//! Reading graphs, labels and rectangles from disk.

use std::fs;
use std::path::Path;

use magiclab::graph::{parse_edge_list_with, IndexBase};
use magiclab::{Graph, Rectangle64};
use serde::Deserialize;

use crate::Failure;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

/// An edge list, or a JSON document `{order, edges, name}` when the file
/// starts with `{`. JSON ids are always 0-based.
pub fn graph(path: &Path, base: IndexBase) -> Result<Graph, Failure> {
    let text = read(path)?;
    let context = |e: String| Failure::usage(format!("{}: {e}", path.display()));
    if text.trim_start().starts_with('{') {
        serde_json::from_str(&text).map_err(|e| context(e.to_string()))
    } else {
        parse_edge_list_with(&text, base).map_err(|e| context(e.to_string()))
    }
}

#[derive(Deserialize)]
struct LabelsDoc {
    labels: Vec<i64>,
}

/// Labels by vertex id: a JSON object with a `labels` array, a bare JSON
/// array, or whitespace/comma separated integers.
pub fn labels(path: &Path) -> Result<Vec<i64>, Failure> {
    let text = read(path)?;
    let context = |e: String| Failure::usage(format!("{}: {e}", path.display()));
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        return serde_json::from_str::<LabelsDoc>(&text).map(|d| d.labels).map_err(|e| context(e.to_string()));
    }
    if trimmed.starts_with('[') {
        return serde_json::from_str(&text).map_err(|e| context(e.to_string()));
    }
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split(|c: char| c.is_whitespace() || c == ','))
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| context(format!("not an integer: {t:?}"))))
        .collect()
}

pub fn rectangle(path: &Path) -> Result<Rectangle64, Failure> {
    Rectangle64::from_csv(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}
