//! Symmetric association schemes: axiom verification, intersection numbers,
//! relation graphs, and the norm-orbit schemes over finite fields.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::Bitset;
use crate::field::{FieldError, FiniteField};
use crate::graph::{Distance, Graph};

/// A square boolean matrix, stored as bitset rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoolMatrix {
    n: usize,
    rows: Vec<Bitset>,
}

impl BoolMatrix {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            rows: vec![Bitset::new(n); n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::new(n);
        for i in 0..n {
            m.set(i, i);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.rows[i].insert(j);
    }

    pub fn clear(&mut self, i: usize, j: usize) {
        self.rows[i].remove(j);
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn row(&self, i: usize) -> &Bitset {
        &self.rows[i]
    }

    pub fn count(&self) -> usize {
        self.rows.iter().map(Bitset::count).sum()
    }

    pub fn is_symmetric(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in self.rows[i].iter() {
                if !self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SchemeError {
    /// One of the four defining axioms fails; `axiom` is 1..=4 and the
    /// witness pair locates the violation.
    AxiomViolation { axiom: u8, x: usize, y: usize },
    EmptyRelation { index: usize },
    /// Relation matrices must be square, same-sized, and at least one.
    ShapeMismatch,
    ClassOutOfRange { class: usize, max: usize },
    /// Norm-orbit schemes need an even extension degree for the relations to
    /// be symmetric.
    OddDegree { r: usize },
    Field(FieldError),
    Disconnected,
}

impl fmt::Display for SchemeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemeError::AxiomViolation { axiom, x, y } => {
                write!(f, "association scheme axiom {axiom} fails at pair ({x}, {y})")
            }
            SchemeError::EmptyRelation { index } => write!(f, "relation {index} is empty"),
            SchemeError::ShapeMismatch => write!(f, "relation matrices have mismatched shapes"),
            SchemeError::ClassOutOfRange { class, max } => {
                write!(f, "class index {class} out of range 1..={max}")
            }
            SchemeError::OddDegree { r } => {
                write!(f, "extension degree must be even, got {r}")
            }
            SchemeError::Field(e) => write!(f, "field construction failed: {e}"),
            SchemeError::Disconnected => write!(f, "graph is not connected"),
        }
    }
}

impl core::error::Error for SchemeError {}

impl From<FieldError> for SchemeError {
    fn from(e: FieldError) -> Self {
        SchemeError::Field(e)
    }
}

/// A verified symmetric association scheme of class `d` on `x_size` points,
/// with all intersection numbers `p_{i,j}^l` precomputed.
#[derive(Clone, Debug)]
pub struct AssociationScheme {
    x_size: usize,
    d: usize,
    relations: Vec<BoolMatrix>,
    class_of: Vec<u16>,
    /// `p_nums[i][j][l]`.
    p_nums: Vec<Vec<Vec<u64>>>,
}

impl AssociationScheme {
    pub fn x_size(&self) -> usize {
        self.x_size
    }

    /// The class count `d` (there are `d + 1` relations including identity).
    pub fn class_count(&self) -> usize {
        self.d
    }

    pub fn relations(&self) -> &[BoolMatrix] {
        &self.relations
    }

    /// Which relation the pair `(x, y)` belongs to.
    pub fn class_of(&self, x: usize, y: usize) -> usize {
        self.class_of[x * self.x_size + y] as usize
    }

    pub fn p_num(&self, i: usize, j: usize, l: usize) -> u64 {
        self.p_nums[i][j][l]
    }

    /// The intersection matrix `B_i` with entry `(j, l) = p_{i,j}^l`.
    pub fn intersection_matrix(&self, i: usize) -> Vec<Vec<u64>> {
        (0..=self.d)
            .map(|j| (0..=self.d).map(|l| self.p_nums[i][j][l]).collect())
            .collect()
    }

    /// `|xR_i|`, independent of `x`.
    pub fn relation_valency(&self, i: usize) -> u64 {
        self.p_nums[i][i][0]
    }

    /// The set `xR_i` in increasing vertex order.
    pub fn x_relation(&self, x: usize, i: usize) -> Vec<usize> {
        self.relations[i].row(x).iter().collect()
    }
}

/// Checks the four axioms of a symmetric association scheme exhaustively and
/// computes every intersection number, including the index-0 cases.
pub fn verify_scheme(relations: Vec<BoolMatrix>) -> Result<AssociationScheme, SchemeError> {
    let Some(first) = relations.first() else {
        return Err(SchemeError::ShapeMismatch);
    };
    let n = first.size();
    if relations.iter().any(|r| r.size() != n) {
        return Err(SchemeError::ShapeMismatch);
    }
    let d = relations.len() - 1;

    // SAS-1: the zeroth relation is the identity.
    let identity = BoolMatrix::identity(n);
    if relations[0] != identity {
        let witness = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| relations[0].get(x, y) != (x == y))
            .expect("matrices differ");
        return Err(SchemeError::AxiomViolation {
            axiom: 1,
            x: witness.0,
            y: witness.1,
        });
    }

    for (index, rel) in relations.iter().enumerate() {
        if rel.count() == 0 {
            return Err(SchemeError::EmptyRelation { index });
        }
        // SAS-3: every relation is symmetric.
        if let Some((x, y)) = rel.is_symmetric() {
            return Err(SchemeError::AxiomViolation { axiom: 3, x, y });
        }
    }

    // SAS-2: the relations partition X x X.
    let mut class_of = vec![u16::MAX; n * n];
    for x in 0..n {
        for y in 0..n {
            let mut found = None;
            for (i, rel) in relations.iter().enumerate() {
                if rel.get(x, y) {
                    if found.is_some() {
                        return Err(SchemeError::AxiomViolation { axiom: 2, x, y });
                    }
                    found = Some(i as u16);
                }
            }
            match found {
                Some(i) => class_of[x * n + y] = i,
                None => return Err(SchemeError::AxiomViolation { axiom: 2, x, y }),
            }
        }
    }

    // SAS-4: p_{i,j}^l is constant over the pairs of each class. The counts
    // |xR_i n yR_j| use the symmetry established above.
    let mut p_nums = vec![vec![vec![u64::MAX; d + 1]; d + 1]; d + 1];
    for x in 0..n {
        for y in 0..n {
            let l = class_of[x * n + y] as usize;
            for i in 0..=d {
                for j in 0..=d {
                    let count = relations[i].row(x).intersection_count(relations[j].row(y)) as u64;
                    let slot = &mut p_nums[i][j][l];
                    if *slot == u64::MAX {
                        *slot = count;
                    } else if *slot != count {
                        return Err(SchemeError::AxiomViolation { axiom: 4, x, y });
                    }
                }
            }
        }
    }

    Ok(AssociationScheme {
        x_size: n,
        d,
        relations,
        class_of,
        p_nums,
    })
}

/// The simple graph on `X` whose edges are the pairs of relation `l >= 1`.
pub fn relation_graph(s: &AssociationScheme, l: usize) -> Result<Graph, SchemeError> {
    if l == 0 || l > s.d {
        return Err(SchemeError::ClassOutOfRange { class: l, max: s.d });
    }
    let n = s.x_size;
    let edges = (0..n).flat_map(|x| {
        s.relations[l]
            .row(x)
            .iter()
            .filter(move |&y| x < y)
            .map(move |y| (x, y))
    });
    Ok(Graph::from_edge_list(n, edges).expect("relation pairs are in range and off-diagonal"))
}

/// Verifies that every relation graph of a scheme is highly regular with the
/// intersection matrix `B_l` as CAM: for every basepoint `x`, the orbit
/// partition `{xR_0, xR_1, ..., xR_d}` is equitable in the relation graph and
/// each vertex of `xR_j` has exactly `p_{i,l}^j` neighbors inside `xR_i`.
pub fn orbit_cam_check(s: &AssociationScheme, l: usize) -> Result<bool, SchemeError> {
    let g = relation_graph(s, l)?;
    let n = s.x_size;
    for x in 0..n {
        for j in 0..=s.d {
            for y in s.relations[j].row(x).iter() {
                for i in 0..=s.d {
                    let count = g.row(y).intersection_count(s.relations[i].row(x)) as u64;
                    if count != s.p_num(i, l, j) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Distance relations of a connected graph: `R_i` holds the ordered pairs at
/// distance exactly `i`. For a distance-regular graph these satisfy the
/// scheme axioms.
pub fn distance_relations(g: &Graph) -> Result<Vec<BoolMatrix>, SchemeError> {
    let dist = g.distances();
    let Distance::Finite(diam) = dist.diameter() else {
        return Err(SchemeError::Disconnected);
    };
    let n = g.order();
    let mut rels = vec![BoolMatrix::new(n); diam as usize + 1];
    for x in 0..n {
        for y in 0..n {
            let Distance::Finite(d) = dist.dist(x, y) else {
                unreachable!("connected graph")
            };
            rels[d as usize].set(x, y);
        }
    }
    Ok(rels)
}

/// The norm-orbit scheme on `F_{p^r}`: `D_0` is the diagonal and, for each
/// `i` in `F_p^x`, `D_i` pairs the elements whose difference has norm `i`.
/// Requires odd `p` and even `r` (then each orbit is symmetric). The axioms
/// are verified exhaustively before returning.
pub fn wl_scheme(p: u64, r: usize) -> Result<AssociationScheme, SchemeError> {
    if !r.is_multiple_of(2) {
        return Err(SchemeError::OddDegree { r });
    }
    let field = FiniteField::new(p, r)?;
    let q = field.order() as usize;
    let mut rels = vec![BoolMatrix::new(q); p as usize];
    // norm(y - x) depends only on the difference; tabulate once.
    let norms: Vec<u64> = (0..q as u64).map(|z| field.norm(z)).collect();
    for x in 0..q {
        rels[0].set(x, x);
        for y in 0..q {
            if x != y {
                let i = norms[field.sub(y as u64, x as u64) as usize];
                rels[i as usize].set(x, y);
            }
        }
    }
    verify_scheme(rels)
}

/// The norm graph on `F_{p^r}` joining `x ~ y` when `N(y - x) = l`.
pub fn wl_graph(p: u64, r: usize, l: u64) -> Result<Graph, SchemeError> {
    let scheme = wl_scheme(p, r)?;
    if l == 0 || l >= p {
        return Err(SchemeError::ClassOutOfRange {
            class: l as usize,
            max: scheme.class_count(),
        });
    }
    relation_graph(&scheme, l as usize)
}
