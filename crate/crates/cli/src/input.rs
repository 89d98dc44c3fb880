use std::io::Read;
use std::path::Path;

use anyhow::{Context, Result};
use sumdist::{parse_graph6, Graph};

/// One non-blank input line: its 1-based number and the parsed graph or
/// the parse error.
pub struct Entry {
    pub line: usize,
    pub text: String,
    pub graph: Result<Graph, String>,
}

pub fn read_text(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .context("reading standard input")?;
            Ok(s)
        }
    }
}

pub fn graph_stream(path: Option<&Path>) -> Result<Vec<Entry>> {
    let text = read_text(path)?;
    Ok(text
        .lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let t = raw.trim();
            let t = t.strip_prefix(">>graph6<<").unwrap_or(t);
            (!t.is_empty()).then(|| Entry {
                line: i + 1,
                text: t.to_string(),
                graph: parse_graph6(t).map_err(|e| e.to_string()),
            })
        })
        .collect())
}
