//! Polytope input files.
//!
//! Text format: a line `rank d`, then one vertex per line as `d` whitespace
//! separated integers. `#` starts a comment. A machine report whose `polytope`
//! section carries `rank` and `vertices` is accepted as well.

use std::path::Path;

use crate::error::{Error, Result};
use crate::polytope::{LatticePoint, LatticePolytope};

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(s, t)| (line[..s].chars().count() + 1, t))
        .collect()
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// Parse the text format.
pub fn parse_polytope_text(text: &str) -> Result<LatticePolytope> {
    let mut rank: Option<usize> = None;
    let mut vertices: Vec<LatticePoint> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let toks = tokens(strip_comment(raw));
        if toks.is_empty() {
            continue;
        }
        let Some(d) = rank else {
            if toks[0].1 != "rank" {
                return Err(parse_error(lineno, toks[0].0, "expected `rank d`"));
            }
            if toks.len() != 2 {
                let col = toks.get(2).map_or(toks[0].0 + 4, |t| t.0);
                return Err(parse_error(lineno, col, "expected a single rank value"));
            }
            let d: usize = toks[1]
                .1
                .parse()
                .map_err(|_| parse_error(lineno, toks[1].0, "rank must be a positive integer"))?;
            if d == 0 {
                return Err(parse_error(lineno, toks[1].0, "rank must be a positive integer"));
            }
            rank = Some(d);
            continue;
        };
        if toks.len() != d {
            let col = if toks.len() > d {
                toks[d].0
            } else {
                raw.trim_end().chars().count() + 1
            };
            return Err(parse_error(
                lineno,
                col,
                format!("expected {d} coordinates, found {}", toks.len()),
            ));
        }
        let mut v = Vec::with_capacity(d);
        for (col, t) in toks {
            let x: i64 = t
                .parse()
                .map_err(|_| parse_error(lineno, col, format!("`{t}` is not an integer")))?;
            v.push(x);
        }
        vertices.push(v);
    }
    let Some(d) = rank else {
        return Err(parse_error(last_line.max(1), 1, "missing `rank d` line"));
    };
    if vertices.is_empty() {
        return Err(parse_error(last_line.max(1), 1, "no vertices"));
    }
    LatticePolytope::new(d, vertices)
}

/// Parse the `polytope` section of a machine report.
pub fn parse_polytope_json(text: &str) -> Result<LatticePolytope> {
    let doc: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| parse_error(e.line(), e.column(), e.to_string()))?;
    let sec = &doc["polytope"];
    let rank = sec["rank"]
        .as_u64()
        .ok_or_else(|| parse_error(1, 1, "report has no polytope.rank"))? as usize;
    let rows = sec["vertices"]
        .as_array()
        .ok_or_else(|| parse_error(1, 1, "report has no polytope.vertices"))?;
    let mut vertices = Vec::new();
    for row in rows {
        let v: Option<Vec<i64>> = row
            .as_array()
            .map(|r| r.iter().map(|x| x.as_i64()).collect::<Option<Vec<i64>>>())
            .unwrap_or(None);
        vertices.push(v.ok_or_else(|| parse_error(1, 1, "vertex is not an integer list"))?);
    }
    LatticePolytope::new(rank, vertices)
}

/// Either input format, chosen by the first non-blank character.
pub fn parse_polytope_str(text: &str) -> Result<LatticePolytope> {
    if text.trim_start().starts_with('{') {
        parse_polytope_json(text)
    } else {
        parse_polytope_text(text)
    }
}

pub fn parse_polytope_file(path: impl AsRef<Path>) -> Result<LatticePolytope> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    parse_polytope_str(&text)
}

/// Text format for a polytope, readable by `parse_polytope_text`.
pub fn format_polytope(p: &LatticePolytope) -> String {
    let mut s = format!("rank {}\n", p.rank());
    for v in p.vertices() {
        let row: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}
