use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use springer_core::poly::IntPolynomial;
use springer_core::verify::{Status, VerificationReport};

use crate::args::Format;

/// One row per cycle type; `coefficients[d]` is the coefficient of `q^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreenRow {
    pub class: String,
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreenTable {
    pub command: String,
    pub config: BTreeMap<String, String>,
    pub rows: Vec<GreenRow>,
}

/// Values at `ζ^j` for each `j` in `exponents`, and the coset counts when a
/// Levi configuration is attached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalRow {
    pub class: String,
    pub values: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counts: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalTable {
    pub command: String,
    pub config: BTreeMap<String, String>,
    pub exponents: Vec<i64>,
    pub rows: Vec<EvalRow>,
    pub status: Status,
    pub counterexamples: Vec<springer_core::verify::Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularReport {
    pub command: String,
    pub config: BTreeMap<String, String>,
    pub element: String,
    pub order: usize,
    pub regular: bool,
    pub a_e: usize,
    pub eigenspace_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidateReport {
    pub command: String,
    pub config: BTreeMap<String, String>,
    pub case: String,
}

#[derive(Debug)]
pub enum Output {
    Green(GreenTable),
    Eval(EvalTable),
    Reports(Vec<VerificationReport>),
    Regular(RegularReport),
    Validate(ValidateReport),
}

/// Sorts object keys recursively, so that parsing and re-serializing the
/// output reproduces it byte for byte.
pub fn canonical(v: Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut entries: Vec<(String, Value)> = m.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(
                entries
                    .into_iter()
                    .map(|(k, v)| (k, canonical(v)))
                    .collect::<Map<_, _>>(),
            )
        }
        Value::Array(a) => Value::Array(a.into_iter().map(canonical).collect()),
        other => other,
    }
}

pub fn to_canonical_json<T: Serialize>(x: &T) -> String {
    let v = serde_json::to_value(x).expect("output types serialize");
    serde_json::to_string_pretty(&canonical(v)).expect("values serialize")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_line(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",")
}

fn config_text(config: &BTreeMap<String, String>) -> String {
    config
        .iter()
        .map(|(k, v)| format!("  {k} = {v}\n"))
        .collect()
}

impl Output {
    pub fn passed(&self) -> bool {
        match self {
            Output::Eval(t) => t.status == Status::Pass,
            Output::Reports(rs) => rs.iter().all(VerificationReport::passed),
            _ => true,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.json(),
            Format::Csv => self.csv(),
            Format::Text => self.text(),
        }
    }

    fn json(&self) -> String {
        match self {
            Output::Green(t) => to_canonical_json(t),
            Output::Eval(t) => to_canonical_json(t),
            Output::Reports(rs) if rs.len() == 1 => to_canonical_json(&rs[0]),
            Output::Reports(rs) => to_canonical_json(rs),
            Output::Regular(r) => to_canonical_json(r),
            Output::Validate(r) => to_canonical_json(r),
        }
    }

    fn csv(&self) -> String {
        let mut lines = Vec::new();
        match self {
            Output::Green(t) => {
                let width = t
                    .rows
                    .iter()
                    .map(|r| r.coefficients.len())
                    .max()
                    .unwrap_or(0);
                let mut header = vec!["class".to_string()];
                header.extend((0..width).map(|d| format!("q{d}")));
                lines.push(csv_line(&header));
                for r in &t.rows {
                    let mut f = vec![r.class.clone()];
                    f.extend(r.coefficients.iter().cloned());
                    f.resize(width + 1, "0".into());
                    lines.push(csv_line(&f));
                }
            }
            Output::Eval(t) => {
                let with_counts = t.rows.iter().any(|r| r.counts.is_some());
                let mut header = vec!["class".to_string()];
                header.extend(t.exponents.iter().map(|j| format!("j{j}")));
                if with_counts {
                    header.extend(t.exponents.iter().map(|j| format!("count_j{j}")));
                }
                lines.push(csv_line(&header));
                for r in &t.rows {
                    let mut f = vec![r.class.clone()];
                    f.extend(r.values.iter().cloned());
                    if let Some(c) = &r.counts {
                        f.extend(c.iter().cloned());
                    }
                    lines.push(csv_line(&f));
                }
            }
            Output::Reports(rs) => {
                lines.push(VerificationReport::csv_header().to_string());
                for r in rs {
                    lines.extend(r.to_csv_rows());
                }
            }
            Output::Regular(r) => {
                lines.push("element,order,regular,a_e,eigenspace_dim".into());
                lines.push(csv_line(&[
                    r.element.clone(),
                    r.order.to_string(),
                    r.regular.to_string(),
                    r.a_e.to_string(),
                    r.eigenspace_dim.to_string(),
                ]));
            }
            Output::Validate(r) => {
                lines.push("key,value".into());
                lines.push(csv_line(&["case".into(), r.case.clone()]));
                for (k, v) in &r.config {
                    lines.push(csv_line(&[k.clone(), v.clone()]));
                }
            }
        }
        lines.join("\n")
    }

    fn text(&self) -> String {
        match self {
            Output::Green(t) => {
                let mut s = format!("green\n{}", config_text(&t.config));
                for r in &t.rows {
                    s += &format!("{}: {}\n", r.class, poly_text(&r.coefficients));
                }
                s.trim_end().to_string()
            }
            Output::Eval(t) => {
                let mut s = format!("eval: {}\n{}", t.status, config_text(&t.config));
                let js: Vec<String> = t.exponents.iter().map(|j| format!("j={j}")).collect();
                s += &format!("class: {}\n", js.join(" "));
                for r in &t.rows {
                    s += &format!("{}: ({})", r.class, r.values.join(","));
                    if let Some(c) = &r.counts {
                        s += &format!("  counts ({})", c.join(","));
                    }
                    s.push('\n');
                }
                for c in &t.counterexamples {
                    s += &format!(
                        "  mismatch at {} [{}]: {} != {}\n",
                        c.class, c.index, c.lhs, c.rhs
                    );
                }
                s.trim_end().to_string()
            }
            Output::Reports(rs) => rs
                .iter()
                .map(VerificationReport::to_text)
                .collect::<Vec<_>>()
                .join("\n"),
            Output::Regular(r) => format!(
                "{}, {}, a(e)={}",
                r.element,
                if r.regular { "regular" } else { "not regular" },
                r.a_e
            ),
            Output::Validate(r) => format!("case ({})\n{}", r.case, config_text(&r.config))
                .trim_end()
                .to_string(),
        }
    }
}

fn poly_text(coeffs: &[String]) -> String {
    IntPolynomial::try_from(coeffs.to_vec()).map_or_else(|_| coeffs.join(","), |p| p.to_string())
}
