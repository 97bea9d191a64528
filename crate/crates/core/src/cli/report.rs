//! Report documents: a JSON value plus a plain-text rendering.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::ceforms::MultiIndex;
use crate::exactla::{Rational, RationalMatrix};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq)]
pub struct ReportDocument {
    pub command: Vec<String>,
    pub results: Value,
    pub text: String,
    pub input_hash: String,
}

impl ReportDocument {
    /// `inputs` are hashed in order, each length-prefixed.
    pub fn new(command: Vec<String>, inputs: &[&[u8]], results: Value, text: String) -> Self {
        let mut h = Sha256::new();
        for part in command.iter().map(|s| s.as_bytes()).chain(inputs.iter().copied()) {
            h.update((part.len() as u64).to_le_bytes());
            h.update(part);
        }
        let input_hash = h.finalize().iter().map(|b| format!("{b:02x}")).collect();
        Self {
            command,
            results,
            text,
            input_hash,
        }
    }

    pub fn to_json(&self) -> String {
        let doc = json!({
            "command": self.command,
            "results": self.results,
            "engine_version": ENGINE_VERSION,
            "input_hash": self.input_hash,
        });
        render_json(&doc)
    }

    pub fn to_text(&self) -> String {
        format!(
            "$ eqss {}\n{}engine {ENGINE_VERSION}, input sha256 {}\n",
            self.command.join(" "),
            self.text,
            self.input_hash
        )
    }
}

/// Inline objects longer than this are split over several lines.
const INLINE_OBJECT_WIDTH: usize = 72;

/// Pretty JSON with arrays of scalars (and arrays of those) kept on one line,
/// as are short objects whose values are such arrays or scalars.
pub fn render_json(v: &Value) -> String {
    fn flat(v: &Value) -> bool {
        match v {
            Value::Array(a) => a.iter().all(|x| !x.is_object() && flat(x)),
            Value::Object(_) => false,
            _ => true,
        }
    }
    fn inline(v: &Value) -> String {
        match v {
            Value::Array(a) => format!("[{}]", a.iter().map(inline).collect::<Vec<_>>().join(", ")),
            Value::Object(m) => format!(
                "{{{}}}",
                m.iter()
                    .map(|(k, x)| format!("{}: {}", Value::from(k.as_str()), inline(x)))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
            _ => v.to_string(),
        }
    }
    fn compact(v: &Value) -> bool {
        match v {
            Value::Object(m) => m.values().all(flat) && inline(v).chars().count() <= INLINE_OBJECT_WIDTH,
            _ => flat(v),
        }
    }
    fn go(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent + 1);
        match v {
            _ if compact(v) => out.push_str(&inline(v)),
            Value::Array(a) if !a.is_empty() => {
                out.push_str("[\n");
                for (i, x) in a.iter().enumerate() {
                    out.push_str(&pad);
                    go(x, indent + 1, out);
                    out.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
                }
                out.push_str(&"  ".repeat(indent));
                out.push(']');
            }
            Value::Object(m) if !m.is_empty() => {
                out.push_str("{\n");
                for (i, (k, x)) in m.iter().enumerate() {
                    out.push_str(&pad);
                    out.push_str(&Value::from(k.as_str()).to_string());
                    out.push_str(": ");
                    go(x, indent + 1, out);
                    out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
                }
                out.push_str(&"  ".repeat(indent));
                out.push('}');
            }
            _ => out.push_str(&inline(v)),
        }
    }
    let mut out = String::new();
    go(v, 0, &mut out);
    out.push('\n');
    out
}

pub fn rat_str(x: &Rational) -> String {
    x.to_string()
}

pub fn vec_json(v: &[Rational]) -> Value {
    Value::from(v.iter().map(rat_str).collect::<Vec<_>>())
}

pub fn matrix_json(m: &RationalMatrix) -> Value {
    Value::from(m.to_rows().iter().map(|r| vec_json(r)).collect::<Vec<_>>())
}

/// Nonzero terms of a k-form as `{"indices": [1-based], "coeff": "p/q"}`.
pub fn form_json(dim: usize, k: usize, coeffs: &[Rational]) -> Value {
    let terms: Vec<Value> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(r, c)| {
            let idx: Vec<usize> = MultiIndex::unrank(dim, k, r).indices().iter().map(|i| i + 1).collect();
            json!({"indices": idx, "coeff": rat_str(c)})
        })
        .collect();
    Value::from(terms)
}

/// `e1^e3 - 1/2 e2^e3`; `1` for the unit.
pub fn form_text(dim: usize, k: usize, coeffs: &[Rational]) -> String {
    let mut out = String::new();
    for (r, c) in coeffs.iter().enumerate() {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let mono = if k == 0 {
            String::from("1")
        } else {
            MultiIndex::unrank(dim, k, r)
                .indices()
                .iter()
                .map(|i| format!("e{}", i + 1))
                .collect::<Vec<_>>()
                .join("^")
        };
        let neg = num_traits::Signed::is_negative(c);
        let abs = if neg { -c.clone() } else { c.clone() };
        let coeff = if num_traits::One::is_one(&abs) && k > 0 {
            String::new()
        } else {
            format!("{abs} ")
        };
        let coeff = if k == 0 { format!("{abs}") } else { coeff };
        let body = if k == 0 { coeff } else { format!("{coeff}{mono}") };
        if out.is_empty() {
            out = if neg { format!("-{body}") } else { body };
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn list_text<T: std::fmt::Display>(v: &[T]) -> String {
    format!("[{}]", v.iter().map(T::to_string).collect::<Vec<_>>().join(", "))
}
