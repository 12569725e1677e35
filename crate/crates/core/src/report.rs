//! Human and machine renderings of a pipeline report.

use std::str::FromStr;

use serde_json::{Map, Value};

use crate::error::Error;
use crate::pipeline::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Machine,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "human" => Ok(Format::Human),
            "machine" => Ok(Format::Machine),
            _ => Err(Error::Invalid(format!("unknown format `{s}`"))),
        }
    }
}

const INLINE_WIDTH: usize = 96;

pub fn emit_report(report: &Report, format: Format) -> Vec<u8> {
    match format {
        Format::Machine => emit_value(&Value::Object(report.sections.clone()), format),
        Format::Human => {
            let mut out = String::new();
            for (name, v) in &report.sections {
                out.push_str(&format!("== {name} ==\n"));
                block(v, 1, &mut out);
                out.push('\n');
            }
            out.into_bytes()
        }
    }
}

/// Render any structured value, such as a single section.
pub fn emit_value(v: &Value, format: Format) -> Vec<u8> {
    match format {
        Format::Machine => {
            let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
            s.push('\n');
            s.into_bytes()
        }
        Format::Human => {
            let mut out = String::new();
            block(v, 0, &mut out);
            out.into_bytes()
        }
    }
}

fn inline(v: &Value) -> Option<String> {
    let s = match v {
        Value::Null => "-".to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        Value::Array(a) => {
            let parts: Option<Vec<String>> = a.iter().map(inline).collect();
            format!("[{}]", parts?.join(", "))
        }
        Value::Object(_) => return None,
    };
    (s.len() <= INLINE_WIDTH).then_some(s)
}

fn pad(indent: usize) -> String {
    "  ".repeat(indent)
}

fn is_table(a: &[Value]) -> bool {
    !a.is_empty()
        && a.iter().all(|row| match row {
            Value::Array(cells) => cells.len() == a[0].as_array().map_or(0, Vec::len),
            _ => false,
        })
}

fn table(rows: &[Value], indent: usize, out: &mut String) {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            r.as_array()
                .expect("table row")
                .iter()
                .map(|c| inline(c).unwrap_or_else(|| c.to_string()))
                .collect()
        })
        .collect();
    let ncols = cells[0].len();
    let widths: Vec<usize> = (0..ncols)
        .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
        .collect();
    let numeric: Vec<bool> = (0..ncols)
        .map(|j| cells.iter().all(|r| r[j].starts_with('[') || r[j].parse::<crate::linalg::Q>().is_ok()))
        .collect();
    for r in &cells {
        let line: Vec<String> = r
            .iter()
            .zip(widths.iter().zip(&numeric))
            .map(|(c, (&w, &num))| if num { format!("{c:>w$}") } else { format!("{c:<w$}") })
            .collect();
        out.push_str(&format!("{}{}\n", pad(indent), line.join("  ").trim_end()));
    }
}

fn object(m: &Map<String, Value>, indent: usize, out: &mut String) {
    let width = m.keys().map(String::len).max().unwrap_or(0);
    for (k, v) in m {
        let tabular = matches!(v, Value::Array(a) if a.len() > 1 && is_table(a));
        match inline(v).filter(|_| !tabular) {
            Some(s) => out.push_str(&format!("{}{k:<width$}  {s}\n", pad(indent))),
            None => {
                out.push_str(&format!("{}{k}:\n", pad(indent)));
                block(v, indent + 1, out);
            }
        }
    }
}

fn block(v: &Value, indent: usize, out: &mut String) {
    match v {
        Value::Object(m) => object(m, indent, out),
        Value::Array(a) if is_table(a) => table(a, indent, out),
        Value::Array(a) => {
            for (i, item) in a.iter().enumerate() {
                match inline(item) {
                    Some(s) => out.push_str(&format!("{}{s}\n", pad(indent))),
                    None => {
                        out.push_str(&format!("{}[{i}]\n", pad(indent)));
                        block(item, indent + 1, out);
                    }
                }
            }
        }
        _ => out.push_str(&format!("{}{}\n", pad(indent), inline(v).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn tables_align() {
        let mut out = String::new();
        block(&json!([[[1], "2875"], [[2], "609250"]]), 0, &mut out);
        assert_eq!(out, "[1]    2875\n[2]  609250\n");
    }
}
