//! Plain-text multigraph files.
//!
//! ```text
//! # a 4-cycle with one doubled edge
//! 4
//! 1 2 2
//! 2 3 1
//! 3 4 1
//! 1 4 1
//! ```
//!
//! Blank lines and everything after `#` are ignored. The first remaining line holds the
//! vertex count `n`; every later line is `i j multiplicity` with 1-based vertices.
//! Pairs that are not listed have multiplicity 0. A pair may be given once as `i j` and
//! once as `j i` only if both lines agree; self-loops, duplicate lines and conflicting
//! multiplicities are rejected.

use std::collections::BTreeMap;
use std::path::Path;

use breakdiv::Multigraph;

use crate::error::{CliError, Result};

pub fn read_graph_file(path: &Path) -> Result<Multigraph> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph(&text, &path.display().to_string())
}

pub fn parse_graph(text: &str, origin: &str) -> Result<Multigraph> {
    let err = |line: usize, msg: String| CliError::Parse {
        path: origin.to_string(),
        line,
        msg,
    };
    let mut n: Option<usize> = None;
    // (min, max) -> (multiplicity, listed as i<j, listed as i>j)
    let mut pairs: BTreeMap<(usize, usize), (u64, bool, bool)> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some(count) = n else {
            if fields.len() != 1 {
                return Err(err(lineno, format!("expected the vertex count, found {line:?}")));
            }
            let value: usize = fields[0]
                .parse()
                .map_err(|_| err(lineno, format!("invalid vertex count {:?}", fields[0])))?;
            if value == 0 {
                return Err(err(lineno, "vertex count must be at least 1".into()));
            }
            n = Some(value);
            continue;
        };
        if fields.len() != 3 {
            return Err(err(lineno, format!("expected `i j multiplicity`, found {line:?}")));
        }
        let parse_vertex = |s: &str| -> Result<usize> {
            let v: usize = s
                .parse()
                .map_err(|_| err(lineno, format!("invalid vertex {s:?}")))?;
            if v == 0 || v > count {
                return Err(err(lineno, format!("vertex {v} outside 1..={count}")));
            }
            Ok(v)
        };
        let i = parse_vertex(fields[0])?;
        let j = parse_vertex(fields[1])?;
        let mult: u64 = fields[2]
            .parse()
            .map_err(|_| err(lineno, format!("invalid multiplicity {:?}", fields[2])))?;
        if i == j {
            return Err(err(lineno, format!("self-loop at vertex {i}")));
        }
        let key = (i.min(j), i.max(j));
        let forward = i < j;
        match pairs.get_mut(&key) {
            None => {
                pairs.insert(key, (mult, forward, !forward));
            }
            Some((existing, seen_fwd, seen_back)) => {
                let seen = if forward { seen_fwd } else { seen_back };
                if *seen {
                    return Err(err(lineno, format!("edge {i} {j} listed twice")));
                }
                if *existing != mult {
                    return Err(err(
                        lineno,
                        format!("asymmetric multiplicities for {{{i}, {j}}}: {existing} vs {mult}"),
                    ));
                }
                *seen = true;
            }
        }
    }
    let n = n.ok_or_else(|| err(0, "missing vertex count".into()))?;
    let edges: Vec<(usize, usize, u64)> = pairs
        .into_iter()
        .map(|((i, j), (m, _, _))| (i - 1, j - 1, m))
        .collect();
    Ok(Multigraph::from_edges(n, &edges)?)
}
