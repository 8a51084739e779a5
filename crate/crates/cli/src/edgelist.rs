//! Plain-text edge lists: first line the vertex count, then one `u v` pair
//! per line, 0-based and whitespace-separated.

use std::fmt;

use hrg_core::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeListError {
    MissingHeader,
    BadHeader { line: usize },
    BadEdge { line: usize, reason: &'static str },
}

impl fmt::Display for EdgeListError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeListError::MissingHeader => write!(f, "missing vertex-count header line"),
            EdgeListError::BadHeader { line } => {
                write!(f, "line {line}: header must be a single vertex count")
            }
            EdgeListError::BadEdge { line, reason } => write!(f, "line {line}: {reason}"),
        }
    }
}

impl std::error::Error for EdgeListError {}

pub fn parse(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let Some((header_line, header)) = lines.next() else {
        return Err(EdgeListError::MissingHeader);
    };
    let n: usize = header
        .parse()
        .map_err(|_| EdgeListError::BadHeader { line: header_line })?;

    let mut edges = Vec::new();
    for (line, content) in lines {
        let mut tokens = content.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(EdgeListError::BadEdge {
                line,
                reason: "expected exactly two endpoints",
            });
        };
        let parse_endpoint = |t: &str| {
            t.parse::<usize>().map_err(|_| EdgeListError::BadEdge {
                line,
                reason: "endpoint is not a nonnegative integer",
            })
        };
        let (u, v) = (parse_endpoint(a)?, parse_endpoint(b)?);
        if u >= n || v >= n {
            return Err(EdgeListError::BadEdge {
                line,
                reason: "endpoint out of range",
            });
        }
        if u == v {
            return Err(EdgeListError::BadEdge {
                line,
                reason: "loop edge",
            });
        }
        edges.push((u, v));
    }
    Ok(Graph::from_edge_list(n, edges).expect("endpoints validated above"))
}

pub fn write(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
