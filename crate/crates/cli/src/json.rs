//! A minimal JSON value with deterministic rendering: object keys keep
//! insertion order, floats print with 12 significant digits, and integers are
//! never printed as floats. Identical inputs therefore produce byte-identical
//! documents.

#[derive(Clone, Debug, PartialEq)]
pub enum Json {
    Null,
    Bool(bool),
    Int(i64),
    UInt(u64),
    Float(f64),
    Str(String),
    Array(Vec<Json>),
    Object(Vec<(&'static str, Json)>),
}

impl Json {
    fn is_scalar(&self) -> bool {
        !matches!(self, Json::Array(_) | Json::Object(_))
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out, 0);
        out.push('\n');
        out
    }

    fn write(&self, out: &mut String, depth: usize) {
        match self {
            Json::Null => out.push_str("null"),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Int(i) => out.push_str(&i.to_string()),
            Json::UInt(u) => out.push_str(&u.to_string()),
            Json::Float(x) => out.push_str(&render_float(*x)),
            Json::Str(s) => write_escaped(out, s),
            Json::Array(items) => {
                if items.is_empty() {
                    out.push_str("[]");
                    return;
                }
                // Scalar-only arrays render inline; nested structures get one
                // element per line.
                if items.iter().all(Json::is_scalar) {
                    out.push('[');
                    for (i, item) in items.iter().enumerate() {
                        if i > 0 {
                            out.push_str(", ");
                        }
                        item.write(out, depth);
                    }
                    out.push(']');
                    return;
                }
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push('\n');
                    indent(out, depth + 1);
                    item.write(out, depth + 1);
                }
                out.push('\n');
                indent(out, depth);
                out.push(']');
            }
            Json::Object(fields) => {
                if fields.is_empty() {
                    out.push_str("{}");
                    return;
                }
                out.push('{');
                for (i, (key, value)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push('\n');
                    indent(out, depth + 1);
                    write_escaped(out, key);
                    out.push_str(": ");
                    value.write(out, depth + 1);
                }
                out.push('\n');
                indent(out, depth);
                out.push('}');
            }
        }
    }
}

fn indent(out: &mut String, depth: usize) {
    for _ in 0..depth {
        out.push_str("  ");
    }
}

fn write_escaped(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
}

/// 12 significant digits in scientific notation; zero prints as plain 0.
fn render_float(x: f64) -> String {
    if x == 0.0 {
        return String::from("0");
    }
    if !x.is_finite() {
        // JSON has no infinity; non-finite values become null.
        return String::from("null");
    }
    format!("{x:.11e}")
}

/// Helpers for assembling arrays of numbers.
pub fn uints<I: IntoIterator<Item = u64>>(items: I) -> Json {
    Json::Array(items.into_iter().map(Json::UInt).collect())
}

pub fn usizes<'a, I: IntoIterator<Item = &'a usize>>(items: I) -> Json {
    Json::Array(items.into_iter().map(|&u| Json::UInt(u as u64)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting() {
        assert_eq!(render_float(0.0), "0");
        assert_eq!(render_float(0.5), "5.00000000000e-1");
        assert_eq!(render_float(-2.0), "-2.00000000000e0");
    }

    #[test]
    fn object_order_is_preserved() {
        let j = Json::Object(vec![
            ("zebra", Json::Int(1)),
            ("apple", Json::Int(2)),
        ]);
        let text = j.render();
        assert!(text.find("zebra").unwrap() < text.find("apple").unwrap());
    }

    #[test]
    fn escaping() {
        let j = Json::Str(String::from("a\"b\\c\nd"));
        assert_eq!(j.render(), "\"a\\\"b\\\\c\\nd\"\n");
    }
}
