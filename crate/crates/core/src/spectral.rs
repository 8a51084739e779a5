//! Adjacency spectra, orthogonal idempotents, and the local spectral
//! regularity checks for highly-regular graphs.
//!
//! Eigenpairs come from a cyclic Jacobi sweep (exact enough at desk scale and
//! simple to keep dependency-free). Idempotents are assembled directly from
//! grouped eigenvectors rather than through interpolation polynomials in the
//! adjacency matrix: close eigenvalues make explicit polynomial evaluation
//! ill-conditioned, while merging near-degenerate eigenspaces only sums their
//! projectors and leaves every cell-constancy statement intact.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::refine::HrgReport;

#[cfg(feature = "std")]
#[inline]
fn sqrt(x: f64) -> f64 {
    x.sqrt()
}

#[cfg(all(not(feature = "std"), feature = "libm"))]
#[inline]
fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
fn abs(x: f64) -> f64 {
    f64::from_bits(x.to_bits() & (u64::MAX >> 1))
}

/// Default relative tolerance for the eigensolver. The off-diagonal norm is
/// driven below `tol * max|A|`; eigenvalues closer than ten times that are
/// grouped into one eigenspace.
pub const DEFAULT_SPECTRAL_TOL: f64 = 1e-12;

const MAX_SWEEPS: usize = 100;

#[derive(Clone, Debug, PartialEq)]
pub enum SpectralError {
    EmptyGraph,
    BadTolerance { tol: f64 },
    /// The sweep budget ran out before the off-diagonal norm fell under the
    /// threshold.
    NoConvergence { residual: f64 },
    NotHrg,
    Disconnected,
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::EmptyGraph => write!(f, "graph has no vertices"),
            SpectralError::BadTolerance { tol } => write!(f, "tolerance {tol} must be positive"),
            SpectralError::NoConvergence { residual } => {
                write!(f, "Jacobi sweeps did not converge; residual {residual:e}")
            }
            SpectralError::NotHrg => write!(f, "graph is not highly regular"),
            SpectralError::Disconnected => write!(f, "graph is not connected"),
        }
    }
}

impl core::error::Error for SpectralError {}

/// Distinct eigenvalues with multiplicities and the matching orthogonal
/// projectors `E_0, ..., E_d` onto their eigenspaces.
#[derive(Clone, Debug)]
pub struct SpectralData {
    n: usize,
    /// `(eigenvalue, multiplicity)`, strictly decreasing in value.
    eigenvalues: Vec<(f64, usize)>,
    /// One symmetric `n x n` projector per distinct eigenvalue, row-major.
    idempotents: Vec<Vec<f64>>,
    tol: f64,
}

impl SpectralData {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn eigenvalues(&self) -> &[(f64, usize)] {
        &self.eigenvalues
    }

    pub fn distinct_count(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Entry `(u, v)` of the projector for the `l`-th distinct eigenvalue;
    /// this is the `uv`-crossed multiplicity of that eigenvalue.
    pub fn idempotent_entry(&self, l: usize, u: usize, v: usize) -> f64 {
        self.idempotents[l][u * self.n + v]
    }

    pub fn idempotent(&self, l: usize) -> &[f64] {
        &self.idempotents[l]
    }

    /// Largest residual among `E_l^2 - E_l`, `E_l E_k` for `l != k`, and
    /// `sum_l E_l - I`, in the max norm.
    pub fn idempotent_residual(&self) -> f64 {
        let n = self.n;
        let d = self.idempotents.len();
        let mut worst = 0.0f64;
        for l in 0..d {
            for k in l..d {
                let target_diag = if l == k { 1.0 } else { 0.0 };
                // (E_l E_k)[u][v], compared against E_l when l == k.
                for u in 0..n {
                    for v in 0..n {
                        let mut dot = 0.0;
                        for w in 0..n {
                            dot += self.idempotents[l][u * n + w] * self.idempotents[k][w * n + v];
                        }
                        let expected = target_diag * self.idempotents[l][u * n + v];
                        worst = worst.max(abs(dot - expected));
                    }
                }
            }
        }
        for u in 0..n {
            for v in 0..n {
                let total: f64 = (0..d).map(|l| self.idempotents[l][u * n + v]).sum();
                let expected = if u == v { 1.0 } else { 0.0 };
                worst = worst.max(abs(total - expected));
            }
        }
        worst
    }

    /// Max-norm error of `sum_l lambda_l E_l` against the adjacency matrix.
    pub fn reconstruction_residual(&self, g: &Graph) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for u in 0..n {
            for v in 0..n {
                let total: f64 = self
                    .eigenvalues
                    .iter()
                    .enumerate()
                    .map(|(l, &(value, _))| value * self.idempotents[l][u * n + v])
                    .sum();
                let expected = if g.has_edge(u, v) { 1.0 } else { 0.0 };
                worst = worst.max(abs(total - expected));
            }
        }
        worst
    }
}

/// Symmetric eigendecomposition of the adjacency matrix by cyclic Jacobi
/// rotations, with eigenvalues grouped into distinct values. The off-diagonal
/// max norm is driven below `tol * max|A|`; values within `10 * tol * scale`
/// of each other share an eigenspace.
pub fn eigendecompose(g: &Graph, tol: f64) -> Result<SpectralData, SpectralError> {
    let n = g.order();
    if n == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(SpectralError::BadTolerance { tol });
    }

    let mut a: Vec<Vec<f64>> = vec![vec![0.0; n]; n];
    for u in 0..n {
        for &v in g.neighbors(u) {
            a[u][v] = 1.0;
        }
    }
    // Adjacency entries are 0/1, so max|A| <= 1 and tol acts as an absolute
    // off-diagonal threshold.
    let threshold = tol;

    let mut v: Vec<Vec<f64>> = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_max(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal_max(&a) > threshold {
        return Err(SpectralError::NoConvergence {
            residual: off_diagonal_max(&a),
        });
    }

    // Sort eigenpairs by descending eigenvalue.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j][j].partial_cmp(&a[i][i]).expect("finite eigenvalues"));

    let scale = order
        .iter()
        .fold(1.0f64, |acc, &i| acc.max(abs(a[i][i])));
    let gap = 10.0 * tol * scale;

    let mut eigenvalues: Vec<(f64, usize)> = Vec::new();
    let mut idempotents: Vec<Vec<f64>> = Vec::new();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && a[order[end - 1]][order[end - 1]] - a[order[end]][order[end]] <= gap {
            end += 1;
        }
        let cols = &order[start..end];
        let mean: f64 = cols.iter().map(|&i| a[i][i]).sum::<f64>() / cols.len() as f64;
        let mut proj = vec![0.0f64; n * n];
        for &c in cols {
            for u in 0..n {
                let vu = v[u][c];
                for w in 0..n {
                    proj[u * n + w] += vu * v[w][c];
                }
            }
        }
        eigenvalues.push((mean, cols.len()));
        idempotents.push(proj);
        start = end;
    }

    Ok(SpectralData {
        n,
        eigenvalues,
        idempotents,
        tol,
    })
}

fn off_diagonal_max(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut worst = 0.0f64;
    for p in 0..n {
        for q in (p + 1)..n {
            worst = worst.max(abs(a[p][q]));
        }
    }
    worst
}

fn rotate(a: &mut [Vec<f64>], v: &mut [Vec<f64>], p: usize, q: usize) {
    let apq = a[p][q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    let t = if abs(theta) > 1e150 {
        0.5 / theta
    } else {
        let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
        sign / (abs(theta) + sqrt(theta * theta + 1.0))
    };
    let c = 1.0 / sqrt(t * t + 1.0);
    let s = t * c;
    let n = a.len();

    let app = a[p][p];
    let aqq = a[q][q];
    a[p][p] = app - t * apq;
    a[q][q] = aqq + t * apq;
    a[p][q] = 0.0;
    a[q][p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r][p];
        let arq = a[r][q];
        a[r][p] = c * arp - s * arq;
        a[p][r] = a[r][p];
        a[r][q] = s * arp + c * arq;
        a[q][r] = a[r][q];
    }
    for row in v.iter_mut() {
        let vp = row[p];
        let vq = row[q];
        row[p] = c * vp - s * vq;
        row[q] = s * vp + c * vq;
    }
}

/// Exact integer check of the intertwining identity at one root: with `P` the
/// cell indicator matrix of the root's partition and `C` the CAM,
/// `P A = C P` holds entrywise. Both sides reduce to comparing, for every
/// vertex `w` and cell `t`, the neighbor count of `w` inside cell `t` against
/// the CAM entry `(t, cell_of(w))`.
pub fn intertwine_check(g: &Graph, report: &HrgReport, root: usize) -> Result<bool, SpectralError> {
    if !report.is_hrg {
        return Err(SpectralError::NotHrg);
    }
    let cam = report.cam.as_ref().expect("is_hrg implies cam");
    let p = &report.partitions[root];
    let m = cam.size();
    for w in 0..g.order() {
        let mut counts = vec![0u64; m];
        for &x in g.neighbors(w) {
            counts[p.cell_of(x)] += 1;
        }
        for (t, &count) in counts.iter().enumerate() {
            if count != cam.entry(t, p.cell_of(w)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The crossed multiplicities seen from one root: row `v`, column `l` holds
/// the `(root, v)` entry of the `l`-th idempotent.
#[derive(Clone, Debug)]
pub struct CrossedTable {
    pub root: usize,
    /// `values[v][l] = m_{root,v}(lambda_l)`.
    pub values: Vec<Vec<f64>>,
}

pub fn crossed_multiplicities(g: &Graph, spec: &SpectralData, root: usize) -> CrossedTable {
    let n = g.order();
    debug_assert_eq!(n, spec.order());
    let d = spec.distinct_count();
    let values = (0..n)
        .map(|v| (0..d).map(|l| spec.idempotent_entry(l, root, v)).collect())
        .collect();
    CrossedTable { root, values }
}

/// Numerical summary of the local spectral regularity checks.
#[derive(Clone, Debug)]
pub struct SpectralRegularityReport {
    /// Largest deviation of a diagonal idempotent entry from the vertex-0
    /// reference, over all eigenvalues (spectral regularity).
    pub spectral_regularity_dev: f64,
    /// Largest in-cell deviation of `E_l` row entries, over all roots, cells,
    /// and eigenvalues.
    pub cell_constancy_dev: f64,
    /// Whether `P A = C P` held exactly at every root.
    pub intertwine_exact: bool,
    pub idempotent_residual: f64,
}

impl SpectralRegularityReport {
    /// All approximate checks within `tol` and the exact check passed.
    pub fn within(&self, tol: f64) -> bool {
        self.intertwine_exact
            && self.spectral_regularity_dev <= tol
            && self.cell_constancy_dev <= tol
    }
}

/// Verifies, for a connected highly-regular graph, that the diagonal crossed
/// multiplicities are vertex-independent and that every idempotent row is
/// constant on the cells of the root's canonical partition, alongside the
/// exact intertwining identity at every root.
pub fn spectral_regularity_check(
    g: &Graph,
    report: &HrgReport,
    spec: &SpectralData,
) -> Result<SpectralRegularityReport, SpectralError> {
    if !report.is_hrg {
        return Err(SpectralError::NotHrg);
    }
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    let n = g.order();
    let d = spec.distinct_count();

    let mut spectral_regularity_dev = 0.0f64;
    for l in 0..d {
        let reference = spec.idempotent_entry(l, 0, 0);
        for u in 1..n {
            spectral_regularity_dev =
                spectral_regularity_dev.max(abs(spec.idempotent_entry(l, u, u) - reference));
        }
    }

    let mut cell_constancy_dev = 0.0f64;
    for (u, p) in report.partitions.iter().enumerate() {
        for cell in p.cells() {
            for l in 0..d {
                let reference = spec.idempotent_entry(l, u, cell[0]);
                for &v in &cell[1..] {
                    cell_constancy_dev =
                        cell_constancy_dev.max(abs(spec.idempotent_entry(l, u, v) - reference));
                }
            }
        }
    }

    let mut intertwine_exact = true;
    for root in 0..n {
        if !intertwine_check(g, report, root)? {
            intertwine_exact = false;
            break;
        }
    }

    Ok(SpectralRegularityReport {
        spectral_regularity_dev,
        cell_constancy_dev,
        intertwine_exact,
        idempotent_residual: spec.idempotent_residual(),
    })
}
