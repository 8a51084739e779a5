//! Simple undirected graphs with dense vertex labels, plus distance data.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::Bitset;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is kept both as sorted neighbor lists and as per-vertex bitset
/// rows; the two always encode the same relation. Immutable after
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    bits: Vec<Bitset>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// An edge endpoint is `>= n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// A loop edge `(u, u)` was supplied.
    LoopEdge { vertex: usize },
    /// A cycle of fewer than 2 vertices was requested.
    CycleTooSmall { n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph of order {n}")
            }
            GraphError::LoopEdge { vertex } => write!(f, "loop edge at vertex {vertex}"),
            GraphError::CycleTooSmall { n } => write!(f, "cycle graph needs n >= 2, got {n}"),
        }
    }
}

impl core::error::Error for GraphError {}

impl Graph {
    /// Builds a graph from an unordered edge list; duplicate pairs collapse.
    pub fn from_edge_list(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let bits = adj
            .iter()
            .map(|list| {
                let mut row = Bitset::new(n);
                for &v in list {
                    row.insert(v);
                }
                row
            })
            .collect();
        Ok(Self { n, adj, bits })
    }

    /// The cycle graph `C_n`. `C_2` is the single edge `K_2`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::CycleTooSmall { n });
        }
        Self::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    /// The neighborhood of `u` as a bitset row.
    pub fn row(&self, u: usize) -> &Bitset {
        &self.bits[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u].contains(v)
    }

    /// The common valency if the graph is regular.
    pub fn valency(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let k = self.degree(0);
        (1..self.n).all(|u| self.degree(u) == k).then_some(k)
    }

    /// Edge-complement on the same vertex set. An involution.
    pub fn complement(&self) -> Graph {
        let adj: Vec<Vec<usize>> = (0..self.n)
            .map(|u| (0..self.n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        let bits = adj
            .iter()
            .map(|list| {
                let mut row = Bitset::new(self.n);
                for &v in list {
                    row.insert(v);
                }
                row
            })
            .collect();
        Graph {
            n: self.n,
            adj,
            bits,
        }
    }

    /// The Cartesian product: `(u1, u2) ~ (v1, v2)` iff the pair agrees in one
    /// coordinate and is adjacent in the other. Vertex `(u1, u2)` gets the
    /// label `u1 * g2.order() + u2`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let (n1, n2) = (self.n, other.n);
        let enc = |u1: usize, u2: usize| u1 * n2 + u2;
        let mut edges = Vec::new();
        for u1 in 0..n1 {
            for u2 in 0..n2 {
                for &v2 in other.neighbors(u2) {
                    if u2 < v2 {
                        edges.push((enc(u1, u2), enc(u1, v2)));
                    }
                }
            }
        }
        for u2 in 0..n2 {
            for u1 in 0..n1 {
                for &v1 in self.neighbors(u1) {
                    if u1 < v1 {
                        edges.push((enc(u1, u2), enc(v1, u2)));
                    }
                }
            }
        }
        Graph::from_edge_list(n1 * n2, edges).expect("product edges are in range and loop-free")
    }

    /// Sorted degree multiset of the subgraph induced on `vs`.
    pub fn induced_degree_sequence(&self, vs: &[usize]) -> Result<Vec<usize>, GraphError> {
        let mut inside = Bitset::new(self.n);
        for &v in vs {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
            inside.insert(v);
        }
        let mut degrees: Vec<usize> = vs
            .iter()
            .map(|&v| self.bits[v].intersection_count(&inside))
            .collect();
        degrees.sort_unstable();
        Ok(degrees)
    }

    /// All-pairs BFS distances, layers, and the diameter.
    pub fn distances(&self) -> DistanceData {
        DistanceData::compute(self)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = Bitset::new(self.n);
        let mut queue = VecDeque::new();
        seen.insert(0);
        queue.push_back(0);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if !seen.contains(v) {
                    seen.insert(v);
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }
}

/// A hop distance that may be infinite (between different components).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "infinity"),
        }
    }
}

const UNREACHED: u32 = u32::MAX;

/// All-pairs distances of a [`Graph`], with per-root distance layers
/// `D_0(u), D_1(u), ...`. The diameter is infinite exactly when the graph is
/// disconnected.
#[derive(Clone, Debug)]
pub struct DistanceData {
    n: usize,
    dist: Vec<u32>,
    layers: Vec<Vec<Vec<usize>>>,
    diameter: Distance,
}

impl DistanceData {
    fn compute(g: &Graph) -> Self {
        let n = g.order();
        let mut dist = vec![UNREACHED; n * n];
        let mut layers: Vec<Vec<Vec<usize>>> = Vec::with_capacity(n);
        let mut max_finite = 0u32;
        let mut disconnected = false;
        let mut queue = VecDeque::new();
        for u in 0..n {
            let row = &mut dist[u * n..(u + 1) * n];
            row[u] = 0;
            queue.clear();
            queue.push_back(u);
            let mut reached = 1;
            let mut ecc = 0;
            while let Some(x) = queue.pop_front() {
                for &y in g.neighbors(x) {
                    if row[y] == UNREACHED {
                        row[y] = row[x] + 1;
                        ecc = ecc.max(row[y]);
                        reached += 1;
                        queue.push_back(y);
                    }
                }
            }
            let mut ls: Vec<Vec<usize>> = vec![Vec::new(); ecc as usize + 1];
            for (v, &d) in row.iter().enumerate() {
                if d != UNREACHED {
                    ls[d as usize].push(v);
                }
            }
            layers.push(ls);
            max_finite = max_finite.max(ecc);
            disconnected |= reached < n;
        }
        let diameter = if disconnected {
            Distance::Infinite
        } else {
            Distance::Finite(max_finite)
        };
        Self {
            n,
            dist,
            layers,
            diameter,
        }
    }

    pub fn dist(&self, u: usize, v: usize) -> Distance {
        match self.dist[u * self.n + v] {
            UNREACHED => Distance::Infinite,
            d => Distance::Finite(d),
        }
    }

    pub fn diameter(&self) -> Distance {
        self.diameter
    }

    /// The layers `D_0(u), D_1(u), ..., D_ecc(u)(u)`; unreachable vertices
    /// appear in no layer.
    pub fn layers(&self, u: usize) -> &[Vec<usize>] {
        &self.layers[u]
    }

    /// Vertices at distance exactly `i` from `u` (empty past the eccentricity).
    pub fn layer(&self, u: usize, i: usize) -> &[usize] {
        self.layers[u].get(i).map_or(&[], Vec::as_slice)
    }

    pub fn eccentricity(&self, u: usize) -> usize {
        self.layers[u].len() - 1
    }
}
