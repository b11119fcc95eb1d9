use std::fmt::Write as _;

use serde_json::Value;

use crate::exactnum::Cyclotomic;

/// Plain-text rendering of a JSON report: `key: value` lines, nested
/// objects indented, grids of scalars as aligned rows.
pub fn table(v: &Value) -> String {
    let mut out = String::new();
    block(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    if let Some(z) = cyclotomic(v) {
        return Some(z);
    }
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Null => Some("-".into()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        Value::Array(a) if a.is_empty() => Some("[]".into()),
        Value::Object(o) if o.is_empty() => Some("{}".into()),
        _ => None,
    }
}

/// `{"conductor", "terms"}` objects print as `z8^1 - z8^3`.
fn cyclotomic(v: &Value) -> Option<String> {
    let o = v.as_object()?;
    if o.len() != 2 || !o.contains_key("conductor") || !o.contains_key("terms") {
        return None;
    }
    serde_json::from_value::<Cyclotomic>(v.clone())
        .ok()
        .map(|z| z.to_string())
}

fn scalar_row(v: &Value) -> Option<Vec<String>> {
    v.as_array()?.iter().map(scalar).collect()
}

fn block(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if let Some(s) = scalar(x) {
                    let _ = writeln!(out, "{pad}{k}: {s}");
                } else if let Some(row) = scalar_row(x) {
                    let _ = writeln!(out, "{pad}{k}: {}", row.join(", "));
                } else {
                    let _ = writeln!(out, "{pad}{k}:");
                    block(x, depth + 1, out);
                }
            }
        }
        Value::Array(items) => {
            let grid: Option<Vec<Vec<String>>> = items.iter().map(scalar_row).collect();
            match grid {
                Some(rows) if !rows.is_empty() => {
                    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
                    let widths: Vec<usize> = (0..cols)
                        .map(|j| rows.iter().filter_map(|r| r.get(j)).map(String::len).max().unwrap_or(0))
                        .collect();
                    for r in rows {
                        let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                        let _ = writeln!(out, "{pad}{}", cells.join("  ").trim_end());
                    }
                }
                _ => {
                    for (i, x) in items.iter().enumerate() {
                        match scalar(x) {
                            Some(s) => {
                                let _ = writeln!(out, "{pad}- {s}");
                            }
                            None => {
                                let _ = writeln!(out, "{pad}[{i}]");
                                block(x, depth + 1, out);
                            }
                        }
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}
