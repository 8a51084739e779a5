//! Explicit families of connected highly-regular graphs that are not
//! distance-regular: toroidal grids, complement and product constructions,
//! and the fixed-valency product families.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::classify::{classify_distance_regularity_with, ClassifyError};
use crate::graph::{Distance, Graph};
use crate::refine::analyze_hrg;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyError {
    ParameterTooSmall { name: &'static str, value: usize, min: usize },
    NotHrg,
    NotConnected,
    /// The complement construction needs diameter at least 3.
    DiameterTooSmall { diameter: Distance },
    /// The first product factor must not be distance-regular.
    FactorIsDrg,
    /// Factor list lengths must match the multiplicities `r_2`, `r_3`.
    ArityMismatch { expected: usize, found: usize },
    ValencyMismatch { expected: usize, found: usize },
    /// `(r_2, r_3) = (0, 0)` admits no non-distance-regular factor.
    NoIrregularFactor,
    /// A torus factor is one of the four distance-regular exceptions or has
    /// the wrong valency for its slot.
    BadFactor { n: usize, m: usize },
    /// A proven construction theorem failed on the produced graph; this is an
    /// implementation bug, never an input property.
    Internal(String),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::ParameterTooSmall { name, value, min } => {
                write!(f, "{name} = {value} is below the minimum {min}")
            }
            FamilyError::NotHrg => write!(f, "input graph is not highly regular"),
            FamilyError::NotConnected => write!(f, "input graph is not connected"),
            FamilyError::DiameterTooSmall { diameter } => {
                write!(f, "diameter {diameter} is below 3")
            }
            FamilyError::FactorIsDrg => {
                write!(f, "first factor must not be distance-regular")
            }
            FamilyError::ArityMismatch { expected, found } => {
                write!(f, "expected {expected} factors, found {found}")
            }
            FamilyError::ValencyMismatch { expected, found } => {
                write!(f, "expected valency {expected}, found {found}")
            }
            FamilyError::NoIrregularFactor => {
                write!(f, "(r2, r3) = (0, 0): no factor breaks distance regularity")
            }
            FamilyError::BadFactor { n, m } => {
                write!(f, "torus factor ({n}, {m}) is not admissible")
            }
            FamilyError::Internal(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl core::error::Error for FamilyError {}

impl From<ClassifyError> for FamilyError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Disconnected => FamilyError::NotConnected,
            ClassifyError::NotHrg | ClassifyError::NotRegular => FamilyError::NotHrg,
            ClassifyError::Internal(msg) => FamilyError::Internal(msg),
        }
    }
}

impl From<crate::refine::HrgError> for FamilyError {
    fn from(e: crate::refine::HrgError) -> Self {
        FamilyError::from(ClassifyError::from(e))
    }
}

/// The toroidal grid `C_n x C_m` (Cartesian product of cycles).
pub fn torus(n: usize, m: usize) -> Result<Graph, FamilyError> {
    for (name, value) in [("n", n), ("m", m)] {
        if value < 2 {
            return Err(FamilyError::ParameterTooSmall { name, value, min: 2 });
        }
    }
    let cn = Graph::cycle(n).expect("n >= 2");
    let cm = Graph::cycle(m).expect("m >= 2");
    Ok(cn.cartesian_product(&cm))
}

/// Whether `(n, m)` (with `n <= m`) is one of the four toroidal grids that
/// are distance-regular: (2,2), (2,4), (3,3), (4,4). All other grids are
/// highly regular but not distance-regular.
pub fn torus_is_exception(n: usize, m: usize) -> bool {
    let (a, b) = if n <= m { (n, m) } else { (m, n) };
    matches!((a, b), (2, 2) | (2, 4) | (3, 3) | (4, 4))
}

/// Complement construction: for a connected highly-regular graph with
/// `3 <= diam < infinity`, the complement is a connected highly-regular graph
/// of diameter 2 that is not distance-regular. The conclusion is re-checked
/// on the output; a violation is an internal error.
pub fn complement_construction(g: &Graph) -> Result<Graph, FamilyError> {
    let report = analyze_hrg(g).map_err(|_| FamilyError::NotHrg)?;
    if !report.is_hrg {
        return Err(FamilyError::NotHrg);
    }
    if !g.is_connected() {
        return Err(FamilyError::NotConnected);
    }
    let diameter = g.distances().diameter();
    match diameter {
        Distance::Finite(d) if d >= 3 => {}
        _ => return Err(FamilyError::DiameterTooSmall { diameter }),
    }

    let complement = g.complement();
    let c_report = analyze_hrg(&complement)
        .ok()
        .filter(|r| r.is_hrg)
        .ok_or_else(|| {
            FamilyError::Internal(String::from("complement of an HRG must be an HRG"))
        })?;
    let classification = classify_distance_regularity_with(&complement, &c_report)?;
    if classification.diameter != 2 || classification.drg_direct {
        return Err(FamilyError::Internal(String::from(
            "complement is not an HRG of diameter 2 that avoids distance regularity",
        )));
    }
    Ok(complement)
}

/// Product construction: the Cartesian product of a connected highly-regular
/// graph that is not distance-regular with any connected highly-regular graph
/// is again highly regular and not distance-regular. Re-checked on output.
pub fn product_construction(g1: &Graph, g2: &Graph) -> Result<Graph, FamilyError> {
    let c1 = classify_distance_regularity_with(g1, &analyze_hrg(g1)?)?;
    if c1.drg_direct {
        return Err(FamilyError::FactorIsDrg);
    }
    let r2 = analyze_hrg(g2)?;
    if !r2.is_hrg {
        return Err(FamilyError::NotHrg);
    }
    if !g2.is_connected() {
        return Err(FamilyError::NotConnected);
    }

    let product = g1.cartesian_product(g2);
    let classification = classify_distance_regularity_with(&product, &analyze_hrg(&product)?)?;
    if classification.drg_direct {
        return Err(FamilyError::Internal(String::from(
            "product of a non-DRG HRG with an HRG came out distance-regular",
        )));
    }
    Ok(product)
}

/// A member of the fixed-valency family: the product
/// `C_2^{r1} x (torus factors of valency 3) x (torus factors of valency 4)`
/// with `r1 + 3 r2 + 4 r3 = k` and `(r2, r3) != (0, 0)`.
///
/// `factors1` lists `r2` values `m` selecting `T(2, m)` (valency 3, so
/// `m >= 3` and not the cube case `m = 4`); `factors2` lists `r3` pairs
/// `(n, m)` with `3 <= n <= m` avoiding the exceptions (3,3) and (4,4).
/// The result is asserted connected, `k`-regular, highly regular, and not
/// distance-regular.
pub fn p_family_member(
    k: usize,
    r1: usize,
    r2: usize,
    r3: usize,
    factors1: &[usize],
    factors2: &[(usize, usize)],
) -> Result<Graph, FamilyError> {
    if k <= 4 {
        return Err(FamilyError::ParameterTooSmall { name: "k", value: k, min: 5 });
    }
    if r2 == 0 && r3 == 0 {
        return Err(FamilyError::NoIrregularFactor);
    }
    if r1 + 3 * r2 + 4 * r3 != k {
        return Err(FamilyError::ValencyMismatch {
            expected: k,
            found: r1 + 3 * r2 + 4 * r3,
        });
    }
    if factors1.len() != r2 {
        return Err(FamilyError::ArityMismatch {
            expected: r2,
            found: factors1.len(),
        });
    }
    if factors2.len() != r3 {
        return Err(FamilyError::ArityMismatch {
            expected: r3,
            found: factors2.len(),
        });
    }

    let mut factors: Vec<Graph> = Vec::new();
    for _ in 0..r1 {
        factors.push(Graph::cycle(2).expect("C2 exists"));
    }
    for &m in factors1 {
        if m < 3 || torus_is_exception(2, m) {
            return Err(FamilyError::BadFactor { n: 2, m });
        }
        factors.push(torus(2, m)?);
    }
    for &(n, m) in factors2 {
        if n < 3 || m < n || torus_is_exception(n, m) {
            return Err(FamilyError::BadFactor { n, m });
        }
        factors.push(torus(n, m)?);
    }

    let mut iter = factors.into_iter();
    let first = iter.next().expect("(r2, r3) != (0, 0) forces a factor");
    let product = iter.fold(first, |acc, g| acc.cartesian_product(&g));

    if product.valency() != Some(k) {
        return Err(FamilyError::Internal(alloc::format!(
            "constructed valency {:?} differs from target {k}",
            product.valency()
        )));
    }
    let classification = classify_distance_regularity_with(&product, &analyze_hrg(&product)?)?;
    if classification.drg_direct {
        return Err(FamilyError::Internal(String::from(
            "family member came out distance-regular",
        )));
    }
    Ok(product)
}
