//! Output documents: how evaluated values become text.
//!
//! Three formats share one value model:
//!
//! * `pretty` — terse human-oriented lines; a bare number for scalars.
//! * `json` — one JSON object; complex numbers as `{"re": r, "im": i}`.
//! * `csv` — header row plus data rows; complex numbers as paired
//!   `re`, `im` columns.
//!
//! Reals in `pretty` and `csv` use the shortest decimal form that parses
//! back to the identical double (`2`, not `2.0000000000000000`), so every
//! emitted number round-trips exactly. JSON numbers go through
//! `serde_json` and round-trip exactly as well. Non-finite values cannot
//! be JSON numbers; they appear as the strings `"inf"`, `"-inf"`, `"NaN"`.

use num_complex::Complex64;
use serde_json::{json, Value};

/// The result of evaluating one CLI target at one parameter point.
#[derive(Debug, Clone, PartialEq)]
pub enum EvalValue {
    /// A single real number.
    Real(f64),
    /// A single complex number.
    Complex(Complex64),
    /// A truncated series value with its convergence diagnostics.
    Series {
        value: Complex64,
        terms_used: usize,
        tail_estimate: f64,
    },
    /// Named scalar outputs in a fixed order, e.g. both sides of an
    /// identity plus their distance.
    Record(Vec<(&'static str, f64)>),
    /// A rectangular table, e.g. quadrature nodes and weights. Tables
    /// have no fixed width across targets and cannot be swept.
    Table {
        columns: Vec<&'static str>,
        rows: Vec<Vec<f64>>,
    },
}

/// Shortest decimal form that parses back to the identical double.
pub fn fmt_f64(v: f64) -> String {
    format!("{v}")
}

/// `re` alone when the imaginary part is zero, else `re+imi` / `re-imi`.
pub fn fmt_complex(c: Complex64) -> String {
    if c.im == 0.0 {
        fmt_f64(c.re)
    } else if c.im.is_sign_negative() {
        format!("{}-{}i", fmt_f64(c.re), fmt_f64(-c.im))
    } else {
        format!("{}+{}i", fmt_f64(c.re), fmt_f64(c.im))
    }
}

/// A JSON number, falling back to a string for non-finite values.
pub fn json_f64(v: f64) -> Value {
    match serde_json::Number::from_f64(v) {
        Some(n) => Value::Number(n),
        None => Value::String(fmt_f64(v)),
    }
}

fn json_complex(c: Complex64) -> Value {
    json!({ "re": json_f64(c.re), "im": json_f64(c.im) })
}

impl EvalValue {
    /// Flat column labels for sweep output; `None` for tables.
    pub fn columns(&self) -> Option<Vec<&'static str>> {
        match self {
            EvalValue::Real(_) => Some(vec!["value"]),
            EvalValue::Complex(_) => Some(vec!["re", "im"]),
            EvalValue::Series { .. } => {
                Some(vec!["re", "im", "terms_used", "tail_estimate"])
            }
            EvalValue::Record(fields) => {
                Some(fields.iter().map(|(k, _)| *k).collect())
            }
            EvalValue::Table { .. } => None,
        }
    }

    /// Flat row values matching [`EvalValue::columns`]; `None` for tables.
    pub fn row(&self) -> Option<Vec<f64>> {
        match self {
            EvalValue::Real(v) => Some(vec![*v]),
            EvalValue::Complex(c) => Some(vec![c.re, c.im]),
            EvalValue::Series { value, terms_used, tail_estimate } => {
                Some(vec![value.re, value.im, *terms_used as f64, *tail_estimate])
            }
            EvalValue::Record(fields) => {
                Some(fields.iter().map(|(_, v)| *v).collect())
            }
            EvalValue::Table { .. } => None,
        }
    }

    /// The value as one JSON document (an object at top level).
    pub fn to_json(&self) -> Value {
        match self {
            EvalValue::Real(v) => json!({ "value": json_f64(*v) }),
            EvalValue::Complex(c) => json_complex(*c),
            EvalValue::Series { value, terms_used, tail_estimate } => json!({
                "value": json_complex(*value),
                "terms_used": terms_used,
                "tail_estimate": json_f64(*tail_estimate),
            }),
            EvalValue::Record(fields) => {
                let mut obj = serde_json::Map::new();
                for (k, v) in fields {
                    obj.insert((*k).to_string(), json_f64(*v));
                }
                Value::Object(obj)
            }
            EvalValue::Table { columns, rows } => json!({
                "columns": columns,
                "rows": rows
                    .iter()
                    .map(|r| Value::Array(r.iter().map(|v| json_f64(*v)).collect()))
                    .collect::<Vec<_>>(),
            }),
        }
    }

    /// Human-oriented plain text: a bare number for scalars, `key = value`
    /// lines for records, aligned-enough rows for tables.
    pub fn to_pretty(&self) -> String {
        match self {
            EvalValue::Real(v) => format!("{}\n", fmt_f64(*v)),
            EvalValue::Complex(c) => format!("{}\n", fmt_complex(*c)),
            EvalValue::Series { value, terms_used, tail_estimate } => format!(
                "{}\nterms_used: {}\ntail_estimate: {}\n",
                fmt_complex(*value),
                terms_used,
                fmt_f64(*tail_estimate)
            ),
            EvalValue::Record(fields) => {
                let mut out = String::new();
                for (k, v) in fields {
                    out.push_str(&format!("{k} = {}\n", fmt_f64(*v)));
                }
                out
            }
            EvalValue::Table { columns, rows } => {
                let mut out = columns.join("  ");
                out.push('\n');
                for row in rows {
                    let cells: Vec<String> =
                        row.iter().map(|v| fmt_f64(*v)).collect();
                    out.push_str(&cells.join("  "));
                    out.push('\n');
                }
                out
            }
        }
    }

    /// A CSV document: header row, then one row (or one per table row).
    pub fn to_csv(&self) -> String {
        let (columns, rows): (Vec<&'static str>, Vec<Vec<f64>>) = match self {
            EvalValue::Table { columns, rows } => (columns.clone(), rows.clone()),
            other => (
                other.columns().expect("non-table values have fixed columns"),
                vec![other.row().expect("non-table values have fixed rows")],
            ),
        };
        csv_document(&columns, rows.iter().map(|r| r.as_slice()))
    }
}

/// A full CSV document from a header and rows of doubles.
pub fn csv_document<'a>(
    columns: &[impl AsRef<str>],
    rows: impl Iterator<Item = &'a [f64]>,
) -> String {
    let mut out = columns
        .iter()
        .map(AsRef::as_ref)
        .collect::<Vec<_>>()
        .join(",");
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| fmt_f64(*v)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}
