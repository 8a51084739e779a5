//! Rooted equitable-partition refinement, collapsed adjacency matrices, and
//! the high-regularity decision.
//!
//! For a root `u`, the coarsest equitable partition refining
//! `({u}, V \ {u})` is computed by deterministic iterated splitting. Its
//! quotient matrix, relabeled distance-first, is canonical: it depends only on
//! the isomorphism type of the rooted graph, so quotients taken at different
//! roots are comparable entrywise. A graph is highly regular exactly when it
//! admits one collapsed adjacency matrix (CAM) valid at every root; since
//! every rooted equitable partition refines the coarsest one, agreement of
//! the coarsest quotients across all roots certifies the CAM of least size,
//! whose dimension is the graph's index.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Distance, Graph};

/// An ordered partition of the vertex set with `cells[0] = {root}`.
///
/// Cells produced by [`rooted_coarsest_partition`] appear in a canonical
/// creation order; [`RootedPartition::from_cells`] accepts externally built
/// partitions (for example relation-orbit partitions).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedPartition {
    root: usize,
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

impl RootedPartition {
    /// Validates and wraps an ordered partition. `cells[0]` must be the
    /// singleton `{root}` and the cells must partition `0..n`.
    pub fn from_cells(n: usize, root: usize, cells: Vec<Vec<usize>>) -> Result<Self, RefinementError> {
        if cells.first().map(Vec::as_slice) != Some(&[root]) {
            return Err(RefinementError::InvalidPartition {
                reason: "first cell must be the singleton root",
            });
        }
        let mut cell_of = vec![usize::MAX; n];
        let mut covered = 0;
        for (t, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(RefinementError::InvalidPartition {
                    reason: "empty cell",
                });
            }
            for &v in cell {
                if v >= n || cell_of[v] != usize::MAX {
                    return Err(RefinementError::InvalidPartition {
                        reason: "cells must partition the vertex set",
                    });
                }
                cell_of[v] = t;
                covered += 1;
            }
        }
        if covered != n {
            return Err(RefinementError::InvalidPartition {
                reason: "cells must cover every vertex",
            });
        }
        let mut cells = cells;
        for cell in &mut cells {
            cell.sort_unstable();
        }
        Ok(Self {
            root,
            cells,
            cell_of,
        })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell(&self, t: usize) -> &[usize] {
        &self.cells[t]
    }

    /// Index of the cell containing `v`.
    pub fn cell_of(&self, v: usize) -> usize {
        self.cell_of[v]
    }

    /// The same partition with cells permuted so that new cell `i` is old
    /// cell `order[i]`.
    pub fn reordered(&self, order: &[usize]) -> RootedPartition {
        debug_assert_eq!(order.len(), self.cells.len());
        let cells: Vec<Vec<usize>> = order.iter().map(|&t| self.cells[t].clone()).collect();
        let mut cell_of = vec![usize::MAX; self.cell_of.len()];
        for (t, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = t;
            }
        }
        RootedPartition {
            root: self.root,
            cells,
            cell_of,
        }
    }
}

/// A collapsed adjacency matrix: entry `(i, j)` counts the neighbors inside
/// cell `i` of any vertex of cell `j`. Cells are labeled distance-first from
/// the root, ties broken by refinement creation order, so CAMs computed at
/// different roots (or on isomorphic graphs) compare entrywise.
#[derive(Clone, Debug)]
pub struct Cam {
    c: Vec<Vec<u64>>,
    cell_sizes: Vec<usize>,
    cell_distances: Vec<Distance>,
    order: Vec<usize>,
}

impl Cam {
    /// The matrix dimension `m`.
    pub fn size(&self) -> usize {
        self.c.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.c[i][j]
    }

    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.c
    }

    pub fn cell_sizes(&self) -> &[usize] {
        &self.cell_sizes
    }

    /// Distance from the root of every vertex in cell `t`.
    pub fn cell_distance(&self, t: usize) -> Distance {
        self.cell_distances[t]
    }

    /// Maps canonical cell index to the cell's position in the source
    /// partition handed to [`quotient_matrix`].
    pub fn cell_order(&self) -> &[usize] {
        &self.order
    }

    /// The sets `S_0, S_1, ...` of cell indices grouped by distance from the
    /// root, in increasing distance order. For a disconnected root the cells
    /// of unreachable vertices form one trailing group.
    pub fn s_sets(&self) -> Vec<Vec<usize>> {
        let mut sets: Vec<Vec<usize>> = Vec::new();
        let mut last: Option<Distance> = None;
        for (t, &d) in self.cell_distances.iter().enumerate() {
            if last != Some(d) {
                sets.push(Vec::new());
                last = Some(d);
            }
            sets.last_mut().expect("just pushed").push(t);
        }
        sets
    }

    /// Column sum, which equals the valency for every column.
    pub fn valency(&self) -> u64 {
        (0..self.size()).map(|i| self.c[i][0]).sum()
    }

    /// Entrywise comparison of the canonical quotient data.
    pub fn same_quotient(&self, other: &Cam) -> bool {
        self.c == other.c
            && self.cell_sizes == other.cell_sizes
            && self.cell_distances == other.cell_distances
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RefinementError {
    /// Two vertices of one cell see different neighbor counts in another cell.
    NotEquitable {
        cell_j: usize,
        witness_a: usize,
        witness_b: usize,
        cell_i: usize,
    },
    /// The partition does not cover the graph's vertex set as required.
    InvalidPartition { reason: &'static str },
    /// `verify_cam` needs exactly one partition per vertex, rooted there.
    PartitionCount { expected: usize, found: usize },
    RootMismatch { expected: usize, found: usize },
}

impl fmt::Display for RefinementError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RefinementError::NotEquitable {
                cell_j,
                witness_a,
                witness_b,
                cell_i,
            } => write!(
                f,
                "not equitable: vertices {witness_a} and {witness_b} of cell {cell_j} \
                 have different neighbor counts in cell {cell_i}"
            ),
            RefinementError::InvalidPartition { reason } => {
                write!(f, "invalid partition: {reason}")
            }
            RefinementError::PartitionCount { expected, found } => {
                write!(f, "expected {expected} partitions (one per vertex), found {found}")
            }
            RefinementError::RootMismatch { expected, found } => {
                write!(f, "partition for vertex {expected} is rooted at {found}")
            }
        }
    }
}

impl core::error::Error for RefinementError {}

/// The coarsest equitable partition of `V` refining `({root}, V \ {root})`.
///
/// Each round replaces every cell by its sub-cells grouped by the vector of
/// neighbor counts into the current cells (in current cell order); sub-cells
/// are emitted in lexicographic signature order. Iterates to a fixpoint. The
/// resulting cell order depends only on the isomorphism type of the rooted
/// graph.
pub fn rooted_coarsest_partition(g: &Graph, root: usize) -> RootedPartition {
    let n = g.order();
    assert!(root < n, "root {root} out of range for graph of order {n}");
    let mut cells: Vec<Vec<usize>> = if n == 1 {
        vec![vec![root]]
    } else {
        vec![vec![root], (0..n).filter(|&v| v != root).collect()]
    };
    let mut cell_of = vec![0usize; n];
    loop {
        for (t, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = t;
            }
        }
        let m = cells.len();
        let mut sig: Vec<Vec<u32>> = vec![vec![0; m]; n];
        for v in 0..n {
            for &w in g.neighbors(v) {
                sig[v][cell_of[w]] += 1;
            }
        }
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(m);
        let mut split = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<&[u32], Vec<usize>> = BTreeMap::new();
            for &v in cell {
                groups.entry(&sig[v]).or_default().push(v);
            }
            split |= groups.len() > 1;
            next.extend(groups.into_values());
        }
        if !split {
            break;
        }
        cells = next;
    }
    for (t, cell) in cells.iter().enumerate() {
        for &v in cell {
            cell_of[v] = t;
        }
    }
    RootedPartition {
        root,
        cells,
        cell_of,
    }
}

/// Quotient counts of an equitable rooted partition, relabeled into canonical
/// distance-first order. Fails with a witness when `p` is not equitable.
pub fn quotient_matrix(g: &Graph, p: &RootedPartition) -> Result<Cam, RefinementError> {
    let n = g.order();
    if p.cell_of.len() != n {
        return Err(RefinementError::InvalidPartition {
            reason: "partition is for a different vertex count",
        });
    }
    let m = p.cells.len();

    // Exact integer equitability check with witness extraction.
    let mut counts_by_cell: Vec<Vec<u64>> = Vec::with_capacity(m);
    for (j, cell) in p.cells.iter().enumerate() {
        let first = cell[0];
        let mut base = vec![0u64; m];
        for &w in g.neighbors(first) {
            base[p.cell_of[w]] += 1;
        }
        for &y in &cell[1..] {
            let mut counts = vec![0u64; m];
            for &w in g.neighbors(y) {
                counts[p.cell_of[w]] += 1;
            }
            if counts != base {
                let cell_i = (0..m)
                    .find(|&i| counts[i] != base[i])
                    .expect("vectors differ");
                return Err(RefinementError::NotEquitable {
                    cell_j: j,
                    witness_a: first,
                    witness_b: y,
                    cell_i,
                });
            }
        }
        counts_by_cell.push(base);
    }

    // BFS from the root; in an equitable partition with a singleton root cell
    // every cell lies inside one distance layer.
    let dist = bfs_from(g, p.root);
    let cell_dist: Vec<Distance> = p
        .cells
        .iter()
        .map(|cell| {
            let d = dist[cell[0]];
            debug_assert!(cell.iter().all(|&v| dist[v] == d));
            d
        })
        .collect();

    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&t| cell_dist[t]); // stable: creation order breaks ties

    let mut c = vec![vec![0u64; m]; m];
    for (new_j, &old_j) in order.iter().enumerate() {
        for (new_i, &old_i) in order.iter().enumerate() {
            c[new_i][new_j] = counts_by_cell[old_j][old_i];
        }
    }
    let cell_sizes = order.iter().map(|&t| p.cells[t].len()).collect();
    let cell_distances = order.iter().map(|&t| cell_dist[t]).collect();
    Ok(Cam {
        c,
        cell_sizes,
        cell_distances,
        order,
    })
}

fn bfs_from(g: &Graph, root: usize) -> Vec<Distance> {
    let n = g.order();
    let mut dist = vec![Distance::Infinite; n];
    dist[root] = Distance::Finite(0);
    let mut queue = alloc::collections::VecDeque::new();
    queue.push_back(root);
    while let Some(x) = queue.pop_front() {
        let Distance::Finite(dx) = dist[x] else {
            unreachable!()
        };
        for &y in g.neighbors(x) {
            if dist[y] == Distance::Infinite {
                dist[y] = Distance::Finite(dx + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Why [`analyze_hrg`] concluded a graph is not highly regular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HrgFailure {
    /// Canonical coarsest quotients differ at these two roots. A strictly
    /// finer common CAM is not ruled out by this witness alone.
    CoarsestMismatch { root_a: usize, root_b: usize },
    /// The coarsest partitions agree but are discrete (`m = n > 2`), so no
    /// CAM of admissible size `m < n` exists.
    NoCompactCam,
}

/// Outcome of the high-regularity analysis.
#[derive(Clone, Debug)]
pub struct HrgReport {
    pub is_hrg: bool,
    /// The least-size CAM when `is_hrg`.
    pub cam: Option<Cam>,
    /// The index (CAM dimension) when `is_hrg`.
    pub index: Option<usize>,
    /// Per-root coarsest partitions in canonical cell order, aligned with
    /// `cam`'s labeling.
    pub partitions: Vec<RootedPartition>,
    pub failure: Option<HrgFailure>,
}

impl HrgReport {
    /// Root pair with mismatched canonical quotients, when that was the
    /// failure mode.
    pub fn failure_witness(&self) -> Option<(usize, usize)> {
        match self.failure {
            Some(HrgFailure::CoarsestMismatch { root_a, root_b }) => Some((root_a, root_b)),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HrgError {
    /// Non-regular graphs admit no CAM: every column sums to the valency.
    NotRegular,
    NotHrg,
    Disconnected,
}

impl fmt::Display for HrgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HrgError::NotRegular => write!(f, "graph is not regular"),
            HrgError::NotHrg => write!(f, "graph is not highly regular"),
            HrgError::Disconnected => write!(f, "graph is not connected"),
        }
    }
}

impl core::error::Error for HrgError {}

/// Decides whether `g` is highly regular by comparing the canonical coarsest
/// quotient at every root.
///
/// Any common CAM partition at root `u` is an equitable partition refining
/// `({u}, V \ {u})`, hence refines the coarsest one and has at least as many
/// cells. When the coarsest canonical quotients agree across all roots they
/// therefore realize a CAM of least size, and the index equals its dimension.
/// When they disagree the graph is reported not highly regular with the first
/// mismatching root pair as witness.
pub fn analyze_hrg(g: &Graph) -> Result<HrgReport, HrgError> {
    let n = g.order();
    if g.valency().is_none() {
        return Err(HrgError::NotRegular);
    }
    if n == 0 {
        return Ok(HrgReport {
            is_hrg: false,
            cam: None,
            index: None,
            partitions: Vec::new(),
            failure: Some(HrgFailure::NoCompactCam),
        });
    }

    let mut cams: Vec<Cam> = Vec::with_capacity(n);
    let mut partitions: Vec<RootedPartition> = Vec::with_capacity(n);
    for u in 0..n {
        let p = rooted_coarsest_partition(g, u);
        let cam = quotient_matrix(g, &p)
            .expect("refinement fixpoint is equitable");
        partitions.push(p.reordered(cam.cell_order()));
        cams.push(cam);
    }

    if let Some(b) = (1..n).find(|&u| !cams[0].same_quotient(&cams[u])) {
        return Ok(HrgReport {
            is_hrg: false,
            cam: None,
            index: None,
            partitions,
            failure: Some(HrgFailure::CoarsestMismatch {
                root_a: 0,
                root_b: b,
            }),
        });
    }

    let m = cams[0].size();
    // Admissible CAM sizes: 2 <= m < n, except the 1-regular graph (n = 2).
    if m >= 2 && (m < n || n == 2) {
        let cam = cams.swap_remove(0);
        Ok(HrgReport {
            is_hrg: true,
            index: Some(m),
            cam: Some(cam),
            partitions,
            failure: None,
        })
    } else {
        Ok(HrgReport {
            is_hrg: false,
            cam: None,
            index: None,
            partitions,
            failure: Some(HrgFailure::NoCompactCam),
        })
    }
}

/// Witness that a claimed CAM fails at some root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CamWitness {
    pub root: usize,
    pub vertex: usize,
    pub cell_i: usize,
    pub cell_j: usize,
    pub expected: u64,
    pub found: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CamCheck {
    Holds,
    Fails(CamWitness),
}

impl CamCheck {
    pub fn holds(&self) -> bool {
        matches!(self, CamCheck::Holds)
    }
}

/// Verifies that every per-root partition is equitable with quotient exactly
/// `cam` under its own cell labeling.
pub fn verify_cam(
    g: &Graph,
    cam: &Cam,
    partitions: &[RootedPartition],
) -> Result<CamCheck, RefinementError> {
    verify_cam_matrix(g, cam.matrix(), partitions)
}

/// As [`verify_cam`], against a bare count matrix. Lets callers check
/// candidate CAMs that carry no distance labeling, such as intersection
/// matrices of association schemes against relation-orbit partitions.
pub fn verify_cam_matrix(
    g: &Graph,
    cam: &[Vec<u64>],
    partitions: &[RootedPartition],
) -> Result<CamCheck, RefinementError> {
    let n = g.order();
    if partitions.len() != n {
        return Err(RefinementError::PartitionCount {
            expected: n,
            found: partitions.len(),
        });
    }
    let m = cam.len();
    if cam.iter().any(|row| row.len() != m) {
        return Err(RefinementError::InvalidPartition {
            reason: "CAM matrix is not square",
        });
    }
    for (u, p) in partitions.iter().enumerate() {
        if p.root() != u {
            return Err(RefinementError::RootMismatch {
                expected: u,
                found: p.root(),
            });
        }
        if p.len() != m || p.cell_of.len() != n {
            return Err(RefinementError::InvalidPartition {
                reason: "partition shape does not match the CAM",
            });
        }
        for (j, cell) in p.cells().iter().enumerate() {
            for &y in cell {
                let mut counts = vec![0u64; m];
                for &w in g.neighbors(y) {
                    counts[p.cell_of[w]] += 1;
                }
                for i in 0..m {
                    if counts[i] != cam[i][j] {
                        return Ok(CamCheck::Fails(CamWitness {
                            root: u,
                            vertex: y,
                            cell_i: i,
                            cell_j: j,
                            expected: cam[i][j],
                            found: counts[i],
                        }));
                    }
                }
            }
        }
    }
    Ok(CamCheck::Holds)
}

/// Outcome of the partition-structure checks behind [`partition_structure_checks`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureCheck {
    Holds,
    Fails { root: usize, clause: u8, detail: String },
}

impl StructureCheck {
    pub fn holds(&self) -> bool {
        matches!(self, StructureCheck::Holds)
    }
}

/// Verifies the three structural properties of CAM partitions of a connected
/// highly-regular graph: (1) cells lie inside distance layers and the layers
/// decompose as unions of cells with root-independent index sets `S_i`;
/// (2) cell sizes agree across roots; (3) the induced subgraphs on `D_i(u)`
/// have root-independent degree sequences.
pub fn partition_structure_checks(g: &Graph, report: &HrgReport) -> Result<StructureCheck, HrgError> {
    use alloc::format;

    if !report.is_hrg {
        return Err(HrgError::NotHrg);
    }
    if !g.is_connected() {
        return Err(HrgError::Disconnected);
    }
    let cam = report.cam.as_ref().expect("is_hrg implies cam");
    let s_sets = cam.s_sets();
    let dist = g.distances();

    for (u, p) in report.partitions.iter().enumerate() {
        // (1) layers decompose into cells with the common S_i.
        for (i, s_i) in s_sets.iter().enumerate() {
            let mut union: Vec<usize> = s_i.iter().flat_map(|&t| p.cell(t).iter().copied()).collect();
            union.sort_unstable();
            if union != dist.layer(u, i) {
                return Ok(StructureCheck::Fails {
                    root: u,
                    clause: 1,
                    detail: format!("cells of S_{i} do not union to D_{i}({u})"),
                });
            }
        }
        // (2) cell sizes are root-independent.
        for (t, cell) in p.cells().iter().enumerate() {
            if cell.len() != cam.cell_sizes()[t] {
                return Ok(StructureCheck::Fails {
                    root: u,
                    clause: 2,
                    detail: format!("cell {t} has size {} instead of {}", cell.len(), cam.cell_sizes()[t]),
                });
            }
        }
    }
    // (3) induced degree sequences per layer are root-independent.
    let reference: Vec<Vec<usize>> = (0..s_sets.len())
        .map(|i| g.induced_degree_sequence(dist.layer(0, i)).expect("layer vertices are in range"))
        .collect();
    for u in 1..g.order() {
        for (i, reference_seq) in reference.iter().enumerate() {
            let seq = g
                .induced_degree_sequence(dist.layer(u, i))
                .expect("layer vertices are in range");
            if &seq != reference_seq {
                return Ok(StructureCheck::Fails {
                    root: u,
                    clause: 3,
                    detail: format!("degree sequence of <D_{i}({u})> differs from root 0"),
                });
            }
        }
    }
    Ok(StructureCheck::Holds)
}
