//! Separators of points, degree tuples, point removal and the
//! Cayley-Bacharach, complete intersection and almost complete intersection
//! predicates for reduced schemes.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::different::{minimal_generators, start_window, sweep, Different};
use crate::error::{Error, Result};
use crate::hilbert::HilbertMatrix;
use crate::ring::{BiDegree, BiPoly};
use crate::scheme::{
    acm_window, condition_rows, hf, ideal_kernel, in_point_power, is_acm, poly_from_integers, top_condition_positions,
    tuples, FatPointScheme,
};

/// Bidegrees of a minimal set of separators, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeTuple(Vec<BiDegree>);

impl DegreeTuple {
    pub fn new(mut degrees: Vec<BiDegree>) -> Self {
        degrees.sort_by_key(|d| (d.i, d.j));
        DegreeTuple(degrees)
    }

    pub fn degrees(&self) -> &[BiDegree] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether `deg` lies above one of the degrees.
    pub fn covers(&self, deg: BiDegree) -> bool {
        self.0.iter().any(|d| d.precedes(deg))
    }
}

impl fmt::Display for DegreeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

fn check_index(y: &FatPointScheme, k: usize) -> Result<()> {
    if k >= y.len() {
        return Err(Error::Precondition(format!("point index {k} out of range for {} points", y.len())));
    }
    Ok(())
}

fn require_reduced(x: &FatPointScheme) -> Result<()> {
    if !x.is_reduced() {
        return Err(Error::Precondition("the scheme is not reduced".into()));
    }
    Ok(())
}

/// Degree tuple of entry `k` of an ACM scheme from the multiplicities in its
/// row and column.
pub fn degree_tuple_acm(y: &FatPointScheme, k: usize) -> Result<DegreeTuple> {
    check_index(y, k)?;
    if !is_acm(y) {
        return Err(Error::Precondition("the scheme is not ACM".into()));
    }
    let m = y.multiplicity(k) as i64;
    let sums = |entries: Vec<usize>| -> Vec<i64> {
        (0..m).map(|l| entries.iter().map(|&e| (y.multiplicity(e) as i64 - l).max(0)).sum()).collect()
    };
    let a = sums(y.entries_in_col(y.col_of(k)).collect());
    let b = sums(y.entries_in_row(y.row_of(k)).collect());
    let m = m as usize;
    Ok(DegreeTuple::new((0..m).map(|l| BiDegree::new(a[m - 1 - l] - 1, b[l] - 1)).collect()))
}

/// Minimal separators of entry `k`: minimal generators of `I_{Y′}/I_Y` where
/// `Y′` lowers the multiplicity of the point by one.
pub fn minimal_separators(y: &FatPointScheme, k: usize) -> Result<Vec<(BiPoly, BiDegree)>> {
    check_index(y, k)?;
    let smaller = y.decrement(k);
    let top = top_condition_positions(y, k);
    let cache: RefCell<HashMap<BiDegree, Vec<Vec<BigInt>>>> = RefCell::default();
    let project = |deg: BiDegree, v: Vec<BigInt>| -> Vec<BigInt> {
        let mut cache = cache.borrow_mut();
        let rows = cache.entry(deg).or_insert_with(|| {
            let all = condition_rows(y, deg);
            top.iter().map(|&t| all[t].clone()).collect()
        });
        rows.iter().map(|r| r.iter().zip(&v).filter(|(_, c)| !c.is_zero()).map(|(a, c)| a * c).sum()).collect()
    };
    let s = sweep(start_window(y), |d| ideal_kernel(&smaller, d), project)?;
    let mut out: Vec<_> = s.found.into_iter().map(|(d, v)| (poly_from_integers(d, &v), d)).collect();
    out.sort_by_key(|(_, d)| (d.i, d.j));
    Ok(out)
}

/// Degree tuple of entry `k` computed by linear algebra.
pub fn separator_degrees(y: &FatPointScheme, k: usize) -> Result<DegreeTuple> {
    Ok(DegreeTuple::new(minimal_separators(y, k)?.into_iter().map(|(_, d)| d).collect()))
}

/// Whether `f` lies in `℘_p^{m−1}` but not in `℘_p^m` at entry `k`, and in
/// `℘_q^{m_q}` at every other entry.
pub fn is_separator(f: &BiPoly, y: &FatPointScheme, k: usize) -> Result<bool> {
    check_index(y, k)?;
    if !f.is_bihomogeneous() {
        return Err(Error::Precondition(format!("{f} is not bihomogeneous")));
    }
    let p = y.point(k);
    let m = y.multiplicity(k);
    let others = (0..y.len()).filter(|&e| e != k).all(|e| in_point_power(f, y.point(e), y.multiplicity(e)));
    Ok(others && in_point_power(f, p, m - 1) && !in_point_power(f, p, m))
}

/// `HF` of the reduced scheme with entry `k` removed: `HF_X` minus one on
/// the bidegrees above a minimal separator degree.
pub fn hf_remove_point(x: &FatPointScheme, k: usize, rows: usize, cols: usize) -> Result<HilbertMatrix> {
    require_reduced(x)?;
    let degrees = separator_degrees(x, k)?;
    let h = hf(x, rows, cols);
    Ok(HilbertMatrix::from_fn(rows, cols, |i, j| {
        h.get(i, j) - i64::from(degrees.covers(BiDegree::new(i as i64, j as i64)))
    }))
}

/// `HF` of the reduced scheme with entry `k` removed, computed directly.
pub fn hf_remove_point_direct(x: &FatPointScheme, k: usize, rows: usize, cols: usize) -> Result<HilbertMatrix> {
    require_reduced(x)?;
    check_index(x, k)?;
    Ok(hf(&x.decrement(k), rows, cols))
}

/// Cayley-Bacharach property: every point has the same degree tuple. ACM
/// schemes use the closed formula; others compare point deletions.
pub fn is_cbp(x: &FatPointScheme) -> Result<bool> {
    require_reduced(x)?;
    if x.len() <= 1 {
        return Ok(true);
    }
    if !is_acm(x) {
        return is_cbp_by_deletion(x);
    }
    let first = degree_tuple_acm(x, 0)?;
    for k in 1..x.len() {
        if degree_tuple_acm(x, k)? != first {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Cayley-Bacharach property from the Hilbert functions of all point
/// deletions, compared on the verification window of `x`.
pub fn is_cbp_by_deletion(x: &FatPointScheme) -> Result<bool> {
    require_reduced(x)?;
    let (rows, cols) = acm_window(x);
    let mut windows = (0..x.len()).map(|k| hf(&x.decrement(k), rows, cols).into_data());
    let Some(first) = windows.next() else {
        return Ok(true);
    };
    Ok(windows.all(|w| w == first))
}

/// Cayley-Bacharach property from linear-algebra separator degrees.
pub fn is_cbp_by_separators(x: &FatPointScheme) -> Result<bool> {
    require_reduced(x)?;
    let tuples: Vec<DegreeTuple> = (0..x.len()).map(|k| separator_degrees(x, k)).collect::<Result<_>>()?;
    Ok(tuples.windows(2).all(|w| w[0] == w[1]))
}

/// Complete intersection: two minimal generators, of bidegrees `(d1,0)` and
/// `(0,d2)`.
pub fn is_ci(x: &FatPointScheme) -> Result<bool> {
    require_reduced(x)?;
    let g = minimal_generators(x)?;
    let mut d = g.degrees();
    d.sort_by_key(|d| (d.j, d.i));
    Ok(matches!(d.as_slice(), [a, b] if a.j == 0 && a.i > 0 && b.i == 0 && b.j > 0))
}

/// Almost complete intersection: ACM with a row tuple taking exactly two
/// values. Fails when this disagrees with the minimal generator count.
pub fn is_aci(x: &FatPointScheme) -> Result<bool> {
    require_reduced(x)?;
    if !is_acm(x) {
        return Ok(false);
    }
    let mut values = tuples(x).alpha;
    values.dedup();
    let by_tuple = values.len() == 2;
    let count = minimal_generators(x)?.len();
    if by_tuple != (count == 3) {
        return Err(Error::Inconsistent(format!(
            "row tuple has {} distinct values but the ideal has {count} minimal generators",
            values.len()
        )));
    }
    Ok(by_tuple)
}

/// Whether `ϑ_X` contains no separator of any point in a bidegree strictly
/// below `(2r−2, 2t−2)`.
///
/// A separator times `x0` or `y0` is again a separator in the normalized
/// coordinates, so only the two maximal bidegrees strictly below need to be
/// checked. A separator of entry `k` in `ϑ` means the unit vector `e_k` lies
/// in the span of the evaluation images of `ϑ`.
pub fn cbp_different_criterion(x: &FatPointScheme) -> Result<bool> {
    require_reduced(x)?;
    let theta = Different::new(x)?;
    let t = tuples(x);
    let corners = [BiDegree::new(2 * t.r - 3, 2 * t.t - 2), BiDegree::new(2 * t.r - 2, 2 * t.t - 3)];
    for deg in corners.into_iter().filter(|d| d.is_nonnegative()) {
        let span = theta.span(deg);
        for k in 0..x.len() {
            let mut e = vec![BigInt::zero(); x.len()];
            e[k] = BigInt::from(1);
            if span.contains(e) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
