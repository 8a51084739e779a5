//! Distance-regular and strongly-regular classification, the index-diameter
//! characterization, and the generalized intersection-number bound suite.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Distance, Graph};
use crate::refine::{analyze_hrg, HrgError, HrgReport};

/// Intersection array `{b_0, ..., b_{d-1}; c_1, ..., c_d}` of a
/// distance-regular graph, `a_i = k - b_i - c_i` with `b_d = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionArray {
    pub b: Vec<u64>,
    pub c: Vec<u64>,
    pub a: Vec<u64>,
    pub d: usize,
}

impl IntersectionArray {
    pub fn valency(&self) -> u64 {
        self.b.first().copied().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassifyError {
    Disconnected,
    NotHrg,
    NotRegular,
    /// A proven inequality failed; this signals an implementation bug, never
    /// a property of the input.
    Internal(String),
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::Disconnected => write!(f, "graph is not connected"),
            ClassifyError::NotHrg => write!(f, "graph is not highly regular"),
            ClassifyError::NotRegular => write!(f, "graph is not regular"),
            ClassifyError::Internal(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl core::error::Error for ClassifyError {}

impl From<HrgError> for ClassifyError {
    fn from(e: HrgError) -> Self {
        match e {
            HrgError::NotRegular => ClassifyError::NotRegular,
            HrgError::NotHrg => ClassifyError::NotHrg,
            HrgError::Disconnected => ClassifyError::Disconnected,
        }
    }
}

/// Tests distance regularity by direct counting over all ordered vertex
/// pairs: the three counts `|D_1(v) n D_{i-1}(u)|`, `|D_1(v) n D_i(u)|`,
/// `|D_1(v) n D_{i+1}(u)|` must depend only on `i = d(u, v)`.
///
/// Deliberately independent of the refinement machinery so the two can
/// cross-validate each other.
pub fn is_distance_regular(g: &Graph) -> Result<Option<IntersectionArray>, ClassifyError> {
    if !g.is_connected() {
        return Err(ClassifyError::Disconnected);
    }
    let n = g.order();
    let dist = g.distances();
    let Distance::Finite(diam) = dist.diameter() else {
        return Err(ClassifyError::Disconnected);
    };
    let d = diam as usize;
    if d == 0 {
        // K_1 or K_n-like degenerate diameter; K_1 only (d = 0 means n = 1).
        return Ok(Some(IntersectionArray {
            b: Vec::new(),
            c: Vec::new(),
            a: Vec::new(),
            d: 0,
        }));
    }

    let k = g.degree(0) as u64;
    let mut c = vec![None::<u64>; d + 1];
    let mut a = vec![None::<u64>; d + 1];
    let mut b = vec![None::<u64>; d + 1];
    for u in 0..n {
        if g.degree(u) as u64 != k {
            return Ok(None);
        }
        for v in 0..n {
            let Distance::Finite(i) = dist.dist(u, v) else {
                unreachable!("connected graph")
            };
            let i = i as usize;
            if i == 0 {
                continue;
            }
            let mut lower = 0u64;
            let mut same = 0u64;
            let mut upper = 0u64;
            for &w in g.neighbors(v) {
                match dist.dist(u, w) {
                    Distance::Finite(dw) if dw as usize == i - 1 => lower += 1,
                    Distance::Finite(dw) if dw as usize == i => same += 1,
                    Distance::Finite(dw) if dw as usize == i + 1 => upper += 1,
                    _ => {}
                }
            }
            for (slot, val) in [(&mut c[i], lower), (&mut a[i], same), (&mut b[i], upper)] {
                match slot {
                    None => *slot = Some(val),
                    Some(prev) if *prev != val => return Ok(None),
                    Some(_) => {}
                }
            }
        }
    }
    let mut b_arr = vec![k];
    b_arr.extend((1..d).map(|i| b[i].expect("every distance <= diam occurs")));
    let c_arr: Vec<u64> = (1..=d).map(|i| c[i].expect("every distance occurs")).collect();
    let a_arr: Vec<u64> = (1..=d).map(|i| a[i].expect("every distance occurs")).collect();
    Ok(Some(IntersectionArray {
        b: b_arr,
        c: c_arr,
        a: a_arr,
        d,
    }))
}

/// Tests strong regularity by direct common-neighbor counting. Returns
/// `(k, alpha, beta)` where adjacent pairs share `alpha` and non-adjacent
/// pairs share `beta` common neighbors. Complete graphs are excluded (they
/// have no non-adjacent pair to define `beta`).
pub fn is_strongly_regular(g: &Graph) -> Result<Option<(u64, u64, u64)>, ClassifyError> {
    if !g.is_connected() {
        return Err(ClassifyError::Disconnected);
    }
    let n = g.order();
    let Some(k) = g.valency() else {
        return Ok(None);
    };
    let mut alpha = None::<usize>;
    let mut beta = None::<usize>;
    for u in 0..n {
        for v in (u + 1)..n {
            let common = g.row(u).intersection_count(g.row(v));
            let slot = if g.has_edge(u, v) { &mut alpha } else { &mut beta };
            match slot {
                None => *slot = Some(common),
                Some(prev) if *prev != common => return Ok(None),
                Some(_) => {}
            }
        }
    }
    match (alpha, beta) {
        (Some(a), Some(b)) => Ok(Some((k as u64, a as u64, b as u64))),
        _ => Ok(None), // complete or edgeless: alpha or beta undefined
    }
}

/// Result of the index-diameter characterization of distance regularity.
///
/// `drg_by_index` tests `index = diam + 1`; `drg_direct` is the pairwise
/// counting test. The two must always agree; disagreement is an internal
/// error, not a classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrgClassification {
    pub index: usize,
    pub diameter: u32,
    pub drg_by_index: bool,
    pub drg_direct: bool,
}

pub fn classify_distance_regularity(g: &Graph) -> Result<DrgClassification, ClassifyError> {
    let report = analyze_hrg(g)?;
    classify_distance_regularity_with(g, &report)
}

/// As [`classify_distance_regularity`], reusing an existing analysis.
pub fn classify_distance_regularity_with(
    g: &Graph,
    report: &HrgReport,
) -> Result<DrgClassification, ClassifyError> {
    if !g.is_connected() {
        return Err(ClassifyError::Disconnected);
    }
    if !report.is_hrg {
        return Err(ClassifyError::NotHrg);
    }
    let index = report.index.expect("is_hrg implies index");
    let Distance::Finite(diameter) = g.distances().diameter() else {
        return Err(ClassifyError::Disconnected);
    };
    let drg_by_index = index == diameter as usize + 1;
    let drg_direct = is_distance_regular(g)?.is_some();
    if drg_by_index != drg_direct {
        return Err(ClassifyError::Internal(alloc::format!(
            "index criterion ({drg_by_index}) and direct test ({drg_direct}) disagree"
        )));
    }
    Ok(DrgClassification {
        index,
        diameter,
        drg_by_index,
        drg_direct,
    })
}

/// Extracts the intersection array from a CAM in tridiagonal form: entries
/// vanish off the three central bands, the root row is `(0, 1, 0, ...)`, and
/// the subdiagonal starts at the valency. Returns `None` for any other shape.
pub fn tridiagonal_form(cam: &crate::refine::Cam) -> Option<IntersectionArray> {
    let m = cam.size();
    if m < 2 {
        return None;
    }
    for i in 0..m {
        for j in 0..m {
            if i.abs_diff(j) >= 2 && cam.entry(i, j) != 0 {
                return None;
            }
        }
    }
    let k = cam.valency();
    if cam.entry(0, 1) != 1 || cam.entry(1, 0) != k || cam.entry(0, 0) != 0 {
        return None;
    }
    let b: Vec<u64> = (0..m - 1).map(|i| cam.entry(i + 1, i)).collect();
    let c: Vec<u64> = (1..m).map(|i| cam.entry(i - 1, i)).collect();
    if b.contains(&0) || c.contains(&0) {
        return None;
    }
    let a: Vec<u64> = (1..m).map(|i| cam.entry(i, i)).collect();
    Some(IntersectionArray { b, c, a, d: m - 1 })
}

/// Lower bound on the index from the degree-set sizes of the induced layer
/// subgraphs: `1 + sum_i k_i` with `k_i` the largest number of distinct
/// degrees `<D_i(u)>` attains over all roots `u`. On a highly-regular graph
/// `k_i` is root-independent, so the maximum is exact.
pub fn index_lower_bound(g: &Graph) -> Result<usize, ClassifyError> {
    if !g.is_connected() {
        return Err(ClassifyError::Disconnected);
    }
    if g.valency().is_none() {
        return Err(ClassifyError::NotRegular);
    }
    let dist = g.distances();
    let Distance::Finite(diam) = dist.diameter() else {
        return Err(ClassifyError::Disconnected);
    };
    let mut total = 1usize;
    for i in 1..=diam as usize {
        let mut k_i = 0usize;
        for u in 0..g.order() {
            let mut degrees = g
                .induced_degree_sequence(dist.layer(u, i))
                .expect("layer vertices are in range");
            degrees.dedup();
            k_i = k_i.max(degrees.len());
        }
        total += k_i;
    }
    Ok(total)
}

/// Generalized intersection-number bounds of a highly-regular graph.
///
/// With cells grouped by distance into `S_0, ..., S_d`:
/// `b_{i-1}^max = max { sum_{t in S_i} c_{t,l} | l in S_{i-1} }` and
/// `c_i^max / c_i^min` the extremes of `sum_{t in S_{i-1}} c_{t,l}` over
/// `l in S_i`. `star_holds` reports whether every vertex at distance
/// `i < diam` from every root has a neighbor at distance `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundProfile {
    pub b_max: Vec<u64>,
    pub c_min: Vec<u64>,
    pub c_max: Vec<u64>,
    pub star_holds: bool,
    /// `(u, i, x)` with `x` at distance `i` from `u` and no neighbor at
    /// distance `i + 1`, when such a triple exists.
    pub star_witness: Option<(usize, usize, usize)>,
}

/// Computes the bound profile from the CAM and validates the proven
/// inequality chains, plus the conditional bound `c_i^max <= b_j^max`
/// (for `i >= 1`, `i + j <= diam`) whenever the reachability property holds.
/// A failed chain is an internal error: the inequalities are theorems.
pub fn bound_profile(g: &Graph, report: &HrgReport) -> Result<BoundProfile, ClassifyError> {
    if !report.is_hrg {
        return Err(ClassifyError::NotHrg);
    }
    if !g.is_connected() {
        return Err(ClassifyError::Disconnected);
    }
    let cam = report.cam.as_ref().expect("is_hrg implies cam");
    let s_sets = cam.s_sets();
    let d = s_sets.len() - 1;
    let k = cam.valency();

    let mut b_max = Vec::with_capacity(d);
    let mut c_min = Vec::with_capacity(d);
    let mut c_max = Vec::with_capacity(d);
    for i in 1..=d {
        let into_next = |l: usize| -> u64 { s_sets[i].iter().map(|&t| cam.entry(t, l)).sum() };
        let into_prev = |l: usize| -> u64 { s_sets[i - 1].iter().map(|&t| cam.entry(t, l)).sum() };
        b_max.push(
            s_sets[i - 1]
                .iter()
                .map(|&l| into_next(l))
                .max()
                .expect("S sets are nonempty"),
        );
        let down: Vec<u64> = s_sets[i].iter().map(|&l| into_prev(l)).collect();
        c_min.push(*down.iter().min().expect("S sets are nonempty"));
        c_max.push(*down.iter().max().expect("S sets are nonempty"));
    }

    // Reachability scan, independent of the CAM: from every vertex at
    // distance i < d there must be a neighbor at distance i + 1.
    let dist = g.distances();
    let mut star_witness = None;
    'scan: for u in 0..g.order() {
        for i in 0..d {
            for &x in dist.layer(u, i) {
                let grows = g
                    .neighbors(x)
                    .iter()
                    .any(|&w| dist.dist(u, w) == Distance::Finite(i as u32 + 1));
                if !grows {
                    star_witness = Some((u, i, x));
                    break 'scan;
                }
            }
        }
    }
    let star_holds = star_witness.is_none();

    if d >= 1 {
        if b_max[0] != k {
            return Err(ClassifyError::Internal(alloc::format!(
                "b_0^max = {} differs from valency {k}",
                b_max[0]
            )));
        }
        if b_max.windows(2).any(|w| w[0] < w[1]) || *b_max.last().expect("d >= 1") < 1 {
            return Err(ClassifyError::Internal(String::from(
                "b^max chain is not non-increasing down to 1",
            )));
        }
        if c_min[0] != 1 {
            return Err(ClassifyError::Internal(alloc::format!(
                "c_1^min = {} differs from 1",
                c_min[0]
            )));
        }
        if c_min.windows(2).any(|w| w[0] > w[1]) || *c_min.last().expect("d >= 1") > k {
            return Err(ClassifyError::Internal(String::from(
                "c^min chain is not non-decreasing up to k",
            )));
        }
    }
    if star_holds {
        for i in 1..=d {
            for j in 0..=(d - i) {
                if c_max[i - 1] > b_max[j] {
                    return Err(ClassifyError::Internal(alloc::format!(
                        "c_{i}^max = {} exceeds b_{j}^max = {}",
                        c_max[i - 1],
                        b_max[j]
                    )));
                }
            }
        }
    }

    Ok(BoundProfile {
        b_max,
        c_min,
        c_max,
        star_holds,
        star_witness,
    })
}
