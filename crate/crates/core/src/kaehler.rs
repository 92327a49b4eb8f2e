//! Hilbert functions of the module of Kähler differentials `Ω¹` of the
//! bihomogeneous coordinate ring of a fat point scheme.
//!
//! Two independent routes are provided. The sequence route combines the
//! Hilbert functions of `Y` and of its thickening `V`. The presentation route
//! computes `Ω¹ = Ω¹_S / (dI + I·Ω¹_S)` degree by degree from a basis of the
//! ideal. The remaining functions are closed forms in terms of the row
//! tuples of the scheme.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hilbert::{first_difference, HilbertMatrix, IntMatrix};
use crate::ideal::DegreewiseIdeal;
use crate::linalg::integer_rank;
use crate::ring::BiDegree;
use crate::scheme::{binom2, hf, ideal_dim, is_acm, tuples, FatPointScheme, TupleBundle};

/// Both routes to `HF_Ω` plus derived data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaReport {
    pub via_sequence: HilbertMatrix,
    pub via_oracle: Option<HilbertMatrix>,
    pub stable_value: i64,
    pub first_difference: IntMatrix,
}

impl OmegaReport {
    /// `None` without an oracle matrix.
    pub fn agrees(&self) -> Option<bool> {
        self.via_oracle.as_ref().map(|o| o.data() == self.via_sequence.data())
    }
}

pub fn omega_report(y: &FatPointScheme, rows: usize, cols: usize, with_oracle: bool) -> OmegaReport {
    let via_sequence = hf_omega(y, rows, cols);
    OmegaReport {
        first_difference: first_difference(via_sequence.data()),
        via_oracle: with_oracle.then(|| hf_omega_oracle(y, rows, cols)),
        stable_value: omega_stable_value(y),
        via_sequence,
    }
}

/// `2·H_Y(i−1,j) + 2·H_Y(i,j−1) + H_Y(i,j) − H_V(i,j)` entrywise, with `H_Y`
/// zero off the first quadrant. Both windows must have the same shape.
pub fn sequence_formula(hy: &HilbertMatrix, hv: &HilbertMatrix) -> HilbertMatrix {
    HilbertMatrix::from_fn(hy.rows(), hy.cols(), |i, j| {
        let (a, b) = (i as i64, j as i64);
        2 * hy.at(a - 1, b) + 2 * hy.at(a, b - 1) + hy.at(a, b) - hv.at(a, b)
    })
}

/// `HF_Ω` of a fat point scheme from the Hilbert functions of `Y` and of its
/// thickening.
pub fn hf_omega(y: &FatPointScheme, rows: usize, cols: usize) -> HilbertMatrix {
    let hy = hf(y, rows, cols);
    let hv = hf(&y.thicken(), rows, cols);
    let t = tuples(y);
    let bound = |a: i64| (a - 1).max(0) as usize;
    sequence_formula(&hy, &hv).with_bounds(bound(t.l + t.r), bound(t.l_prime + t.t), omega_stable_value(y))
}

/// Partial derivatives of a coefficient vector in bidegree `(i,j)` with
/// respect to `X0, X1` (landing in `(i−1,j)`) and `Y0, Y1` (in `(i,j−1)`).
/// Only the nonzero entries are returned, as `(index, value)` pairs.
fn sparse_partials(v: &[BigInt], deg: BiDegree) -> [Vec<(usize, BigInt)>; 4] {
    let (i, j) = (deg.i as usize, deg.j as usize);
    let mut out: [Vec<(usize, BigInt)>; 4] = Default::default();
    for (idx, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let (p, q) = (idx / (j + 1), idx % (j + 1));
        if i > p {
            out[0].push((p * (j + 1) + q, c * (i - p)));
        }
        if p > 0 {
            out[1].push(((p - 1) * (j + 1) + q, c * p));
        }
        if j > q {
            out[2].push((p * j + q, c * (j - q)));
        }
        if q > 0 {
            out[3].push((p * j + q - 1, c * q));
        }
    }
    out
}

fn apply_rows(rows: &[Vec<BigInt>], v: &[(usize, BigInt)]) -> Vec<BigInt> {
    rows.iter().map(|r| v.iter().filter(|(k, _)| !r[*k].is_zero()).map(|(k, x)| &r[*k] * x).sum()).collect()
}

/// One entry of the presentation route.
///
/// `Ω¹` in bidegree `(i,j)` is `R_{i−1,j}dX0 ⊕ R_{i−1,j}dX1 ⊕ R_{i,j−1}dY0 ⊕
/// R_{i,j−1}dY1` modulo the images of `dF`, `F ∈ I_{i,j}`. Classes in `R` are
/// represented by their images under the quotient rows of the ideal.
pub fn hf_omega_oracle_value(ideal: &impl DegreewiseIdeal, deg: BiDegree) -> i64 {
    if !deg.is_nonnegative() {
        return 0;
    }
    let dx = deg - BiDegree::new(1, 0);
    let dy = deg - BiDegree::new(0, 1);
    let nx = ideal.quotient_rows(dx);
    let ny = ideal.quotient_rows(dy);
    let hx = if dx.is_nonnegative() { integer_rank(nx.clone(), dx.dim()) as i64 } else { 0 };
    let hy = if dy.is_nonnegative() { integer_rank(ny.clone(), dy.dim()) as i64 } else { 0 };
    let images: Vec<Vec<BigInt>> = ideal
        .basis_vectors(deg)
        .iter()
        .map(|f| {
            let [f0, f1, g0, g1] = sparse_partials(f, deg);
            let mut row = apply_rows(&nx, &f0);
            row.extend(apply_rows(&nx, &f1));
            row.extend(apply_rows(&ny, &g0));
            row.extend(apply_rows(&ny, &g1));
            row
        })
        .collect();
    let width = 2 * nx.len() + 2 * ny.len();
    let relations = if width == 0 { 0 } else { integer_rank(images, width) as i64 };
    2 * hx + 2 * hy - relations
}

/// `HF_Ω` of `S/I` computed from its presentation.
pub fn hf_omega_oracle(ideal: &impl DegreewiseIdeal, rows: usize, cols: usize) -> HilbertMatrix {
    HilbertMatrix::from_fn(rows, cols, |i, j| hf_omega_oracle_value(ideal, BiDegree::new(i as i64, j as i64)))
}

/// `4·Σ C(m+1, 2) − Σ (m+1)`.
pub fn omega_stable_value(y: &FatPointScheme) -> i64 {
    y.multiplicities().iter().map(|&m| 4 * binom2(m as i64 + 1) - (m as i64 + 1)).sum()
}

/// Which closed rule produced a special value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialRule {
    /// `I_{i,j} = 0`, value `4ij + 2i + 2j`.
    EmptyIdealComponent,
    /// `HF_Y(i0−1,j0) = HF_Y(i0,j0) = HF_Y(i0,j0−1)` at some `(i0,j0) ⪯ (i,j)`,
    /// value `5·HF_Y(i,j) − HF_V(i,j)`.
    StableNeighbours { i0: i64, j0: i64 },
}

/// `HF_Ω(i,j)` from one of the two special rules, or an error when neither
/// applies.
pub fn omega_special_values(y: &FatPointScheme, deg: BiDegree) -> Result<(i64, SpecialRule)> {
    if !deg.is_nonnegative() {
        return Err(Error::Precondition(format!("{deg} is not in the first quadrant")));
    }
    let (i, j) = (deg.i, deg.j);
    if ideal_dim(y, deg) == 0 {
        return Ok((4 * i * j + 2 * i + 2 * j, SpecialRule::EmptyIdealComponent));
    }
    let h = hf(y, i as usize + 1, j as usize + 1);
    for i0 in 0..=i {
        for j0 in 0..=j {
            let centre = h.at(i0, j0);
            if h.at(i0 - 1, j0) == centre && h.at(i0, j0 - 1) == centre {
                let v = hf(&y.thicken(), i as usize + 1, j as usize + 1).at(i, j);
                return Ok((5 * h.at(i, j) - v, SpecialRule::StableNeighbours { i0, j0 }));
            }
        }
    }
    Err(Error::Precondition(format!(
        "at {deg} the ideal component is nonzero and no bidegree below has equal neighbouring values"
    )))
}

/// Direction in which one index is large.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `i ≥ l + r − 1`; the fixed index is `j`.
    LargeI,
    /// `j ≥ l′ + t − 1`; the fixed index is `i`.
    LargeJ,
}

fn at(v: &[i64], k: i64) -> i64 {
    if k >= 1 && (k as usize) <= v.len() {
        v[k as usize - 1]
    } else {
        0
    }
}

fn large_index_value(star: &[i64], hat: &[i64], j: i64) -> i64 {
    let head: i64 = (1..=j).map(|k| at(star, k)).sum();
    let h = (j + 1).min(hat.iter().copied().max().unwrap_or(0));
    let tail: i64 = (1..=h).map(|k| hat.iter().filter(|&&a| a >= k).count() as i64).sum();
    4 * head + 2 * at(star, j + 1) - tail
}

/// Value of `HF_Ω` once one index is large; it depends only on the other
/// index `fixed`.
pub fn hf_omega_closed(y: &FatPointScheme, direction: Direction, fixed: i64) -> Result<i64> {
    if fixed < 0 {
        return Err(Error::Precondition("the fixed index must be nonnegative".into()));
    }
    let t = tuples(y);
    Ok(match direction {
        Direction::LargeI => large_index_value(&t.alpha_star, &t.alpha_hat, fixed),
        Direction::LargeJ => large_index_value(&t.beta_star, &t.beta_hat, fixed),
    })
}

/// `HF_Ω(i,j)` from the large-index formulas; rejects bidegrees where
/// neither index is large enough.
pub fn hf_omega_closed_entry(y: &FatPointScheme, deg: BiDegree) -> Result<i64> {
    let t = tuples(y);
    if deg.i >= t.l + t.r - 1 {
        hf_omega_closed(y, Direction::LargeI, deg.j)
    } else if deg.j >= t.l_prime + t.t - 1 {
        hf_omega_closed(y, Direction::LargeJ, deg.i)
    } else {
        Err(Error::Precondition(format!(
            "{deg} has i < l+r-1 = {} and j < l'+t-1 = {}",
            t.l + t.r - 1,
            t.l_prime + t.t - 1
        )))
    }
}

/// The closed formula for `HF_Ω` when the thickening `V` is ACM and the
/// tuple of `V` is `(α̂_1, …, α̂_r, α_1, …, α_l)`.
fn acm_thickening_value(alpha: &[i64], alpha_hat: &[i64], i: i64, j: i64) -> i64 {
    let l = alpha.len() as i64;
    let r = alpha_hat.len() as i64;
    let c = |k: i64, jj: i64| (jj + 1).min(alpha[k as usize]).max(0);
    let sum = |from: i64, to: i64, f: &dyn Fn(i64) -> i64| (from..=to).map(f).sum::<i64>();
    2 * sum(0, (i - 1).min(l - 1), &|k| c(k, j))
        + 2 * sum(0, i.min(l - 1), &|k| c(k, j - 1))
        + sum(0, i.min(l - 1), &|k| c(k, j))
        - sum(0, i.min(r - 1), &|k| (j + 1).min(alpha_hat[k as usize]))
        - sum(r, i.min(l + r - 1), &|k| c(k - r, j))
}

fn acm_thickening_window(alpha: &[i64], alpha_hat: &[i64], rows: usize, cols: usize) -> HilbertMatrix {
    HilbertMatrix::from_fn(rows, cols, |i, j| acm_thickening_value(alpha, alpha_hat, i as i64, j as i64))
}

/// Checks `α̂_1 ≥ … ≥ α̂_r ≥ α_1`.
fn check_hat_order(t: &TupleBundle) -> Result<()> {
    for k in 1..t.alpha_hat.len() {
        if t.alpha_hat[k - 1] < t.alpha_hat[k] {
            return Err(Error::Precondition(format!(
                "alpha_hat is not non-increasing: alpha_hat_{} = {} < alpha_hat_{} = {}",
                k,
                t.alpha_hat[k - 1],
                k + 1,
                t.alpha_hat[k]
            )));
        }
    }
    if let (Some(&last), Some(&first)) = (t.alpha_hat.last(), t.alpha.first()) {
        if last < first {
            return Err(Error::Precondition(format!("alpha_hat_r = {last} < alpha_1 = {first}")));
        }
    }
    Ok(())
}

/// `HF_Ω` from the closed formula valid when the thickening is ACM.
pub fn hf_omega_acm_thickening(y: &FatPointScheme, rows: usize, cols: usize) -> Result<HilbertMatrix> {
    if !is_acm(&y.thicken()) {
        return Err(Error::Precondition("the thickening is not ACM".into()));
    }
    let t = tuples(y);
    check_hat_order(&t)?;
    Ok(acm_thickening_window(&t.alpha, &t.alpha_hat, rows, cols))
}

/// `HF_Ω` of `m·X` for a reduced `d1 × d2` grid `X`, `d1 ≤ d2`.
pub fn hf_omega_equi_ci(d1: i64, d2: i64, m: i64, rows: usize, cols: usize) -> Result<HilbertMatrix> {
    if d1 < 1 || d2 < 1 || m < 1 {
        return Err(Error::Precondition("d1, d2 and m must be positive".into()));
    }
    if d1 > d2 {
        return Err(Error::Precondition(format!("d1 = {d1} > d2 = {d2}; swap the inputs")));
    }
    let alpha: Vec<i64> = (1..=m).rev().flat_map(|k| std::iter::repeat_n(k * d2, d1 as usize)).collect();
    let alpha_hat = vec![(m + 1) * d2; d1 as usize];
    Ok(acm_thickening_window(&alpha, &alpha_hat, rows, cols))
}

/// The block pattern of `ΔHF_Ω` for `m·X`, `X` a reduced `d1 × d2` grid, as
/// a `(m+1)d1 × (m+1)d2` matrix; all other entries vanish.
pub fn delta_template_ci(d1: usize, d2: usize, m: usize) -> IntMatrix {
    let mut out = vec![vec![0i64; (m + 1) * d2]; (m + 1) * d1];
    let fill = |row: &mut Vec<i64>, start: usize, len: usize, first: i64, rest: i64| {
        for (k, x) in row[start..start + len].iter_mut().enumerate() {
            *x = if k == 0 { first } else { rest };
        }
    };
    for block in 0..=m {
        for s in 0..d1 {
            let row = &mut out[block * d1 + s];
            let lead = s == 0;
            if block == m {
                let v = if lead { 1 } else { -1 };
                fill(row, 0, d2, v, v);
                continue;
            }
            let width = (m - block) * d2;
            match (block, lead) {
                (0, true) => fill(row, 0, width, 0, 2),
                _ => fill(row, 0, width, 2, 4),
            }
            match (block, lead) {
                (0, _) | (_, false) => fill(row, width, d2, 1, -1),
                (_, true) => fill(row, width, d2, 3, 1),
            }
        }
    }
    out
}

/// `HF_Ω(i,j)` of `m·X` for an almost complete intersection `X` whose row
/// tuple consists of `a` copies of `d1` and `b` copies of `d2`, `d1 > d2`,
/// valid for `i ≥ (m+1)(a+b) − 1`.
pub fn hf_omega_aci(a: i64, b: i64, d1: i64, d2: i64, m: i64, j: i64, i: i64) -> Result<i64> {
    if a < 1 || b < 1 || m < 1 || d2 < 1 || d1 <= d2 {
        return Err(Error::Precondition("need a, b, m >= 1 and d1 > d2 >= 1".into()));
    }
    if i < (m + 1) * (a + b) - 1 {
        return Err(Error::Precondition(format!("i = {i} < (m+1)(a+b)-1 = {}", (m + 1) * (a + b) - 1)));
    }
    if j < 0 {
        return Err(Error::Precondition("j must be nonnegative".into()));
    }
    let mut alpha: Vec<i64> = (1..=m)
        .flat_map(|k| std::iter::repeat_n(k * d1, a as usize).chain(std::iter::repeat_n(k * d2, b as usize)))
        .collect();
    alpha.sort_unstable_by(|x, y| y.cmp(x));
    let star = crate::scheme::conjugate(&alpha);
    let head: i64 = (1..=j).map(|k| at(&star, k)).sum();
    let delta = if j < (m + 1) * d2 {
        (j + 1) * (a + b)
    } else if j < (m + 1) * d1 {
        (j + 1) * a + (m + 1) * b * d2
    } else {
        (m + 1) * (a * d1 + b * d2)
    };
    Ok(4 * head + 2 * at(&star, j + 1) - delta)
}
