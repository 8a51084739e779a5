//! IO companion to `hrg-core`: graph file formats, DOT export, and the
//! deterministic JSON analysis report behind the `hrg` binary.

pub mod dot;
pub mod edgelist;
pub mod graph6;
pub mod json;
pub mod report;
pub mod scheme_json;

use hrg_core::Graph;

/// How a graph was read or should be written.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

#[derive(Debug)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ParseError {}

/// Reads a graph from text, auto-detecting the format: an edge list starts
/// with a bare vertex count, which is never a valid graph6 byte sequence
/// (digits sit below the graph6 byte range).
pub fn parse_graph(text: &str) -> Result<(Graph, GraphFormat), ParseError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| ParseError(String::from("empty input")))?;
    if first.chars().all(|c| c.is_ascii_digit()) {
        let g = edgelist::parse(text).map_err(|e| ParseError(e.to_string()))?;
        Ok((g, GraphFormat::EdgeList))
    } else {
        let g = graph6::decode(first).map_err(|e| ParseError(e.to_string()))?;
        Ok((g, GraphFormat::Graph6))
    }
}

/// Writes a graph in the requested format; graph6 gets a trailing newline so
/// outputs always end in one.
pub fn write_graph(g: &Graph, format: GraphFormat) -> Result<String, ParseError> {
    match format {
        GraphFormat::Graph6 => graph6::encode(g)
            .map(|mut s| {
                s.push('\n');
                s
            })
            .map_err(|e| ParseError(e.to_string())),
        GraphFormat::EdgeList => Ok(edgelist::write(g)),
    }
}
