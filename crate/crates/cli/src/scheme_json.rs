//! JSON import/export for association-scheme relation data:
//! `{"x_size": n, "d": d, "relations": [<row-major 0/1 array>, ...]}`.
//!
//! Import feeds the axiom verifier, so a parsed file either yields a checked
//! scheme or a precise axiom violation.

use std::fmt;

use hrg_core::{verify_scheme, AssociationScheme, BoolMatrix, SchemeError};

use crate::json::Json;

#[derive(Clone, Debug, PartialEq)]
pub enum SchemeJsonError {
    Syntax(String),
    Shape(String),
    Axioms(SchemeError),
}

impl fmt::Display for SchemeJsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemeJsonError::Syntax(msg) => write!(f, "scheme JSON syntax: {msg}"),
            SchemeJsonError::Shape(msg) => write!(f, "scheme JSON shape: {msg}"),
            SchemeJsonError::Axioms(e) => write!(f, "scheme verification: {e}"),
        }
    }
}

impl std::error::Error for SchemeJsonError {}

pub fn write(s: &AssociationScheme) -> String {
    let n = s.x_size();
    let relations: Vec<Json> = s
        .relations()
        .iter()
        .map(|rel| {
            let mut flat = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    flat.push(Json::UInt(u64::from(rel.get(i, j))));
                }
            }
            Json::Array(flat)
        })
        .collect();
    Json::Object(vec![
        ("x_size", Json::UInt(n as u64)),
        ("d", Json::UInt(s.class_count() as u64)),
        ("relations", Json::Array(relations)),
    ])
    .render()
}

/// Parses and verifies a scheme document. The tiny recursive-descent reader
/// below accepts standard JSON; only the three schema fields are consumed.
pub fn parse(text: &str) -> Result<AssociationScheme, SchemeJsonError> {
    let value = JsonReader::new(text).parse()?;
    let obj = value
        .as_object()
        .ok_or_else(|| SchemeJsonError::Shape("top level must be an object".into()))?;
    let x_size = obj
        .iter()
        .find(|(k, _)| k == "x_size")
        .and_then(|(_, v)| v.as_u64())
        .ok_or_else(|| SchemeJsonError::Shape("missing integer field x_size".into()))?
        as usize;
    let d = obj
        .iter()
        .find(|(k, _)| k == "d")
        .and_then(|(_, v)| v.as_u64())
        .ok_or_else(|| SchemeJsonError::Shape("missing integer field d".into()))?
        as usize;
    let relations_value = obj
        .iter()
        .find(|(k, _)| k == "relations")
        .map(|(_, v)| v)
        .ok_or_else(|| SchemeJsonError::Shape("missing field relations".into()))?;
    let rows = relations_value
        .as_array()
        .ok_or_else(|| SchemeJsonError::Shape("relations must be an array".into()))?;
    if rows.len() != d + 1 {
        return Err(SchemeJsonError::Shape(format!(
            "expected {} relation matrices, found {}",
            d + 1,
            rows.len()
        )));
    }
    let mut relations = Vec::with_capacity(rows.len());
    for (index, row) in rows.iter().enumerate() {
        let flat = row
            .as_array()
            .ok_or_else(|| SchemeJsonError::Shape(format!("relation {index} must be an array")))?;
        if flat.len() != x_size * x_size {
            return Err(SchemeJsonError::Shape(format!(
                "relation {index} has {} entries, expected {}",
                flat.len(),
                x_size * x_size
            )));
        }
        let mut matrix = BoolMatrix::new(x_size);
        for (k, cell) in flat.iter().enumerate() {
            match cell.as_u64() {
                Some(0) => {}
                Some(1) => matrix.set(k / x_size, k % x_size),
                _ => {
                    return Err(SchemeJsonError::Shape(format!(
                        "relation {index} entry {k} must be 0 or 1"
                    )))
                }
            }
        }
        relations.push(matrix);
    }
    verify_scheme(relations).map_err(SchemeJsonError::Axioms)
}

enum Value {
    Num(f64),
    Array(Vec<Value>),
    Object(Vec<(String, Value)>),
    /// String, boolean, or null; the schema never reads these.
    Other,
}

impl Value {
    fn as_object(&self) -> Option<&[(String, Value)]> {
        match self {
            Value::Object(fields) => Some(fields),
            _ => None,
        }
    }

    fn as_array(&self) -> Option<&[Value]> {
        match self {
            Value::Array(items) => Some(items),
            _ => None,
        }
    }

    fn as_u64(&self) -> Option<u64> {
        match self {
            Value::Num(x) if *x >= 0.0 && x.fract() == 0.0 && *x <= u64::MAX as f64 => {
                Some(*x as u64)
            }
            _ => None,
        }
    }
}

struct JsonReader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> JsonReader<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn parse(mut self) -> Result<Value, SchemeJsonError> {
        let value = self.value()?;
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return Err(self.fail("trailing data"));
        }
        Ok(value)
    }

    fn fail(&self, msg: &str) -> SchemeJsonError {
        SchemeJsonError::Syntax(format!("{msg} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| matches!(b, b' ' | b'\t' | b'\n' | b'\r'))
        {
            self.pos += 1;
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), SchemeJsonError> {
        if self.bytes.get(self.pos) == Some(&b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.fail(&format!("expected {:?}", b as char)))
        }
    }

    fn value(&mut self) -> Result<Value, SchemeJsonError> {
        self.skip_ws();
        match self.bytes.get(self.pos) {
            Some(b'{') => self.object(),
            Some(b'[') => self.array(),
            Some(b'"') => {
                self.string()?;
                Ok(Value::Other)
            }
            Some(b't') => self.literal("true"),
            Some(b'f') => self.literal("false"),
            Some(b'n') => self.literal("null"),
            Some(_) => self.number(),
            None => Err(self.fail("unexpected end of input")),
        }
    }

    fn literal(&mut self, word: &str) -> Result<Value, SchemeJsonError> {
        if self.bytes[self.pos..].starts_with(word.as_bytes()) {
            self.pos += word.len();
            Ok(Value::Other)
        } else {
            Err(self.fail("invalid literal"))
        }
    }

    fn object(&mut self) -> Result<Value, SchemeJsonError> {
        self.expect(b'{')?;
        let mut fields = Vec::new();
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&b'}') {
            self.pos += 1;
            return Ok(Value::Object(fields));
        }
        loop {
            self.skip_ws();
            let key = self.string()?;
            self.skip_ws();
            self.expect(b':')?;
            let value = self.value()?;
            fields.push((key, value));
            self.skip_ws();
            match self.bytes.get(self.pos) {
                Some(b',') => self.pos += 1,
                Some(b'}') => {
                    self.pos += 1;
                    return Ok(Value::Object(fields));
                }
                _ => return Err(self.fail("expected ',' or '}'")),
            }
        }
    }

    fn array(&mut self) -> Result<Value, SchemeJsonError> {
        self.expect(b'[')?;
        let mut items = Vec::new();
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&b']') {
            self.pos += 1;
            return Ok(Value::Array(items));
        }
        loop {
            items.push(self.value()?);
            self.skip_ws();
            match self.bytes.get(self.pos) {
                Some(b',') => self.pos += 1,
                Some(b']') => {
                    self.pos += 1;
                    return Ok(Value::Array(items));
                }
                _ => return Err(self.fail("expected ',' or ']'")),
            }
        }
    }

    fn string(&mut self) -> Result<String, SchemeJsonError> {
        self.expect(b'"')?;
        let mut out = String::new();
        loop {
            match self.bytes.get(self.pos) {
                Some(b'"') => {
                    self.pos += 1;
                    return Ok(out);
                }
                Some(b'\\') => {
                    self.pos += 1;
                    let escaped = self.bytes.get(self.pos).copied();
                    self.pos += 1;
                    match escaped {
                        Some(b'"') => out.push('"'),
                        Some(b'\\') => out.push('\\'),
                        Some(b'/') => out.push('/'),
                        Some(b'n') => out.push('\n'),
                        Some(b't') => out.push('\t'),
                        Some(b'r') => out.push('\r'),
                        Some(b'u') => {
                            let hex = self
                                .bytes
                                .get(self.pos..self.pos + 4)
                                .and_then(|h| std::str::from_utf8(h).ok())
                                .and_then(|h| u32::from_str_radix(h, 16).ok())
                                .and_then(char::from_u32)
                                .ok_or_else(|| self.fail("bad unicode escape"))?;
                            self.pos += 4;
                            out.push(hex);
                        }
                        _ => return Err(self.fail("bad escape")),
                    }
                }
                Some(&b) if b < 0x20 => return Err(self.fail("control character in string")),
                Some(_) => {
                    let start = self.pos;
                    while self
                        .bytes
                        .get(self.pos)
                        .is_some_and(|&b| b != b'"' && b != b'\\' && b >= 0x20)
                    {
                        self.pos += 1;
                    }
                    out.push_str(
                        std::str::from_utf8(&self.bytes[start..self.pos])
                            .map_err(|_| self.fail("invalid utf8"))?,
                    );
                }
                None => return Err(self.fail("unterminated string")),
            }
        }
    }

    fn number(&mut self) -> Result<Value, SchemeJsonError> {
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|&b| {
            b.is_ascii_digit() || matches!(b, b'-' | b'+' | b'.' | b'e' | b'E')
        }) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse::<f64>().ok())
            .map(Value::Num)
            .ok_or_else(|| self.fail("invalid number"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hrg_core::{distance_relations, Graph};

    #[test]
    fn round_trip_c5_scheme() {
        let c5 = Graph::cycle(5).unwrap();
        let scheme = verify_scheme(distance_relations(&c5).unwrap()).unwrap();
        let text = write(&scheme);
        let parsed = parse(&text).unwrap();
        assert_eq!(parsed.x_size(), 5);
        assert_eq!(parsed.class_count(), 2);
        for i in 0..=2 {
            for j in 0..=2 {
                for l in 0..=2 {
                    assert_eq!(parsed.p_num(i, j, l), scheme.p_num(i, j, l));
                }
            }
        }
    }

    #[test]
    fn parse_rejects_bad_documents() {
        assert!(matches!(parse("{"), Err(SchemeJsonError::Syntax(_))));
        assert!(matches!(
            parse("{\"x_size\": 2, \"d\": 1}"),
            Err(SchemeJsonError::Shape(_))
        ));
        assert!(matches!(
            parse("{\"x_size\": 2, \"d\": 0, \"relations\": [[1, 0, 0]]}"),
            Err(SchemeJsonError::Shape(_))
        ));
        // Shape is fine but the relations violate the partition axiom.
        let text = "{\"x_size\": 2, \"d\": 1, \"relations\": [[1, 0, 0, 1], [0, 0, 0, 0]]}";
        assert!(matches!(parse(text), Err(SchemeJsonError::Axioms(_))));
    }

    #[test]
    fn hand_written_import() {
        // The 1-class scheme on two points.
        let text = r#"{
  "x_size": 2,
  "d": 1,
  "relations": [[1, 0, 0, 1], [0, 1, 1, 0]]
}"#;
        let s = parse(text).unwrap();
        assert_eq!(s.relation_valency(1), 1);
    }
}
