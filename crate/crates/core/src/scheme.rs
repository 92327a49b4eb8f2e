//! Fat point schemes in P¹×P¹: point conditions, vanishing ideals degree by
//! degree, Hilbert functions, row/column tuples and the ACM test.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hilbert::{first_difference, HilbertMatrix};
use crate::linalg::{bareiss, clear_denominators, integer_rank, RationalMatrix};
use crate::ring::{monomial_basis, q, BiDegree, BiPoly, LinearChange, Monomial, Var, Q};

/// A point `[a0:a1]×[b0:b1]`, stored with the first nonzero coordinate of
/// each pair scaled to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointP1P1 {
    x: [Q; 2],
    y: [Q; 2],
}

fn normalize_pair(c: [Q; 2]) -> Result<[Q; 2]> {
    let lead = c
        .iter()
        .find(|v| !v.is_zero())
        .cloned()
        .ok_or_else(|| Error::MalformedScheme("a coordinate pair is (0,0)".into()))?;
    Ok(c.map(|v| v / &lead))
}

impl PointP1P1 {
    pub fn new(x: [Q; 2], y: [Q; 2]) -> Result<Self> {
        Ok(PointP1P1 { x: normalize_pair(x)?, y: normalize_pair(y)? })
    }

    pub fn from_integers(a0: i64, a1: i64, b0: i64, b1: i64) -> Result<Self> {
        PointP1P1::new([q(a0), q(a1)], [q(b0), q(b1)])
    }

    /// The grid point `[1:i]×[1:j]`.
    pub fn grid(i: i64, j: i64) -> Self {
        PointP1P1::from_integers(1, i, 1, j).expect("nonzero pairs")
    }

    pub fn x(&self) -> &[Q; 2] {
        &self.x
    }

    pub fn y(&self) -> &[Q; 2] {
        &self.y
    }
}

impl fmt::Display for PointP1P1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]x[{}:{}]", self.x[0], self.x[1], self.y[0], self.y[1])
    }
}

/// Distinct points of P¹×P¹ with positive multiplicities.
///
/// The distinct first components `Q_0, Q_1, …` and second components
/// `R_0, R_1, …` are indexed in order of first appearance in the entry list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatPointScheme {
    entries: Vec<(PointP1P1, u32)>,
    xs: Vec<[Q; 2]>,
    ys: Vec<[Q; 2]>,
    row_of: Vec<usize>,
    col_of: Vec<usize>,
}

impl FatPointScheme {
    pub fn new(entries: Vec<(PointP1P1, u32)>) -> Result<Self> {
        for (k, (p, m)) in entries.iter().enumerate() {
            if *m == 0 {
                return Err(Error::MalformedScheme(format!("point {p} has multiplicity 0")));
            }
            if entries[..k].iter().any(|(o, _)| o == p) {
                return Err(Error::MalformedScheme(format!("duplicate point {p}")));
            }
        }
        let mut xs: Vec<[Q; 2]> = Vec::new();
        let mut ys: Vec<[Q; 2]> = Vec::new();
        let mut row_of = Vec::with_capacity(entries.len());
        let mut col_of = Vec::with_capacity(entries.len());
        for (p, _) in &entries {
            row_of.push(index_or_push(&mut xs, p.x()));
            col_of.push(index_or_push(&mut ys, p.y()));
        }
        Ok(FatPointScheme { entries, xs, ys, row_of, col_of })
    }

    pub fn empty() -> Self {
        FatPointScheme::new(Vec::new()).expect("empty scheme")
    }

    /// Reduced scheme on the given points.
    pub fn reduced(points: Vec<PointP1P1>) -> Result<Self> {
        FatPointScheme::new(points.into_iter().map(|p| (p, 1)).collect())
    }

    /// `Σ m P_ij` over grid points `P_ij = [1:i]×[1:j]`.
    pub fn from_grid(entries: &[(i64, i64, u32)]) -> Result<Self> {
        FatPointScheme::new(entries.iter().map(|&(i, j, m)| (PointP1P1::grid(i, j), m)).collect())
    }

    pub fn entries(&self) -> &[(PointP1P1, u32)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn point(&self, k: usize) -> &PointP1P1 {
        &self.entries[k].0
    }

    pub fn multiplicity(&self, k: usize) -> u32 {
        self.entries[k].1
    }

    pub fn multiplicities(&self) -> Vec<u32> {
        self.entries.iter().map(|e| e.1).collect()
    }

    pub fn is_reduced(&self) -> bool {
        self.entries.iter().all(|e| e.1 == 1)
    }

    /// `Σ m(m+1)/2`.
    pub fn degree(&self) -> i64 {
        self.entries.iter().map(|&(_, m)| binom2(m as i64 + 1)).sum()
    }

    /// Distinct first components.
    pub fn first_components(&self) -> &[[Q; 2]] {
        &self.xs
    }

    /// Distinct second components.
    pub fn second_components(&self) -> &[[Q; 2]] {
        &self.ys
    }

    /// Index of the first component of entry `k`.
    pub fn row_of(&self, k: usize) -> usize {
        self.row_of[k]
    }

    /// Index of the second component of entry `k`.
    pub fn col_of(&self, k: usize) -> usize {
        self.col_of[k]
    }

    /// Entries whose first component is `Q_row`.
    pub fn entries_in_row(&self, row: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&k| self.row_of[k] == row)
    }

    /// Entries whose second component is `R_col`.
    pub fn entries_in_col(&self, col: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&k| self.col_of[k] == col)
    }

    /// Same points, every multiplicity raised by one.
    pub fn thicken(&self) -> Self {
        self.map_multiplicities(|_, m| m + 1)
    }

    /// Same points, every multiplicity set to `m`.
    pub fn equimultiple(&self, m: u32) -> Self {
        self.map_multiplicities(|_, _| m)
    }

    /// Entry `k` with multiplicity `m`; the point is dropped when `m == 0`.
    pub fn with_multiplicity(&self, k: usize, m: u32) -> Self {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .filter_map(|(e, (p, old))| {
                let new = if e == k { m } else { *old };
                (new > 0).then(|| (p.clone(), new))
            })
            .collect();
        FatPointScheme::new(entries).expect("subscheme of a valid scheme")
    }

    /// Entry `k` with multiplicity lowered by one.
    pub fn decrement(&self, k: usize) -> Self {
        self.with_multiplicity(k, self.multiplicity(k) - 1)
    }

    /// Applies a projective coordinate change to every point: the new
    /// coordinates are `xmat · (a0, a1)` and `ymat · (b0, b1)`.
    pub fn transform_points(&self, xmat: &[[Q; 2]; 2], ymat: &[[Q; 2]; 2]) -> Result<Self> {
        let act =
            |m: &[[Q; 2]; 2], c: &[Q; 2]| [&m[0][0] * &c[0] + &m[0][1] * &c[1], &m[1][0] * &c[0] + &m[1][1] * &c[1]];
        let entries = self
            .entries
            .iter()
            .map(|(p, m)| Ok((PointP1P1::new(act(xmat, p.x()), act(ymat, p.y()))?, *m)))
            .collect::<Result<_>>()?;
        FatPointScheme::new(entries)
    }

    fn map_multiplicities(&self, f: impl Fn(usize, u32) -> u32) -> Self {
        let entries = self.entries.iter().enumerate().map(|(k, (p, m))| (p.clone(), f(k, *m))).collect();
        FatPointScheme::new(entries).expect("same support")
    }
}

fn index_or_push(list: &mut Vec<[Q; 2]>, c: &[Q; 2]) -> usize {
    match list.iter().position(|e| e == c) {
        Some(k) => k,
        None => {
            list.push(c.clone());
            list.len() - 1
        }
    }
}

pub(crate) fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// The reduced `d1 × d2` grid `{[1:i]×[1:j] : 1 ≤ i ≤ d1, 1 ≤ j ≤ d2}`.
pub fn grid_ci(d1: u32, d2: u32) -> FatPointScheme {
    let entries = (1..=d1 as i64).flat_map(|i| (1..=d2 as i64).map(move |j| (PointP1P1::grid(i, j), 1))).collect();
    FatPointScheme::new(entries).expect("distinct grid points")
}

/// Every multiplicity of `x` set to `m`.
pub fn equimultiple(x: &FatPointScheme, m: u32) -> FatPointScheme {
    x.equimultiple(m)
}

/// Same points, multiplicities raised by one.
pub fn thicken(y: &FatPointScheme) -> FatPointScheme {
    y.thicken()
}

/// `T[u][p]` = coefficient of `X0^(d−u) X1^u` in the image of
/// `X0^(d−p) X1^p` under the substitution moving `c` to `[1:0]`.
fn pair_transform(c: &[Q; 2], d: i64) -> Vec<Vec<Q>> {
    let change = LinearChange::new(LinearChange::pair_to_origin(c), LinearChange::identity().ymat().clone())
        .expect("pair substitutions are invertible");
    let d = d as u32;
    let mut t = vec![vec![Q::zero(); d as usize + 1]; d as usize + 1];
    for p in 0..=d {
        let image = change.apply(&BiPoly::term(Monomial::new(d - p, p, 0, 0), Q::one()));
        for (m, c) in image.terms() {
            t[m.exponent(Var::X1) as usize][p as usize] = c.clone();
        }
    }
    t
}

/// Rows `(u, v)`, `u + v ≤ m−1`, as `(u, v, TX row, TY row)` pieces; a row
/// is the tensor product of its two pieces.
fn condition_pieces(x: &[Q; 2], y: &[Q; 2], m: u32, deg: BiDegree) -> impl Iterator<Item = (i64, i64, Vec<Q>, Vec<Q>)> {
    let tx = pair_transform(x, deg.i);
    let ty = pair_transform(y, deg.j);
    let m = m as i64;
    (0..m).flat_map(move |u| (0..m - u).map(move |v| (u, v))).map(move |(u, v)| {
        let rx = if u <= deg.i { tx[u as usize].clone() } else { vec![Q::zero(); tx.len()] };
        let ry = if v <= deg.j { ty[v as usize].clone() } else { vec![Q::zero(); ty.len()] };
        (u, v, rx, ry)
    })
}

fn tensor<T: Clone>(a: &[T], b: &[T]) -> Vec<T>
where
    for<'x> &'x T: std::ops::Mul<&'x T, Output = T>,
{
    a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
}

/// The `m(m+1)/2 × dim S_deg` matrix whose kernel is `(℘_p^m)_deg`: after
/// moving `p` to `[1:0]×[1:0]`, the rows read the coefficients of
/// `X0^(i−u) X1^u Y0^(j−v) Y1^v` for `u + v ≤ m−1`.
pub fn point_conditions(p: &PointP1P1, m: u32, deg: BiDegree) -> Result<RationalMatrix> {
    if m < 1 {
        return Err(Error::Precondition("multiplicity must be at least 1".into()));
    }
    if !deg.is_nonnegative() {
        return Err(Error::Precondition(format!("bidegree {deg} is not in the first quadrant")));
    }
    let rows = condition_pieces(p.x(), p.y(), m, deg).map(|(_, _, rx, ry)| tensor(&rx, &ry)).collect();
    RationalMatrix::from_rows(deg.dim(), rows)
}

/// All point conditions of `y` in bidegree `deg`, stacked in entry order.
pub fn condition_matrix(y: &FatPointScheme, deg: BiDegree) -> RationalMatrix {
    let rows = y
        .entries()
        .iter()
        .flat_map(|(p, m)| condition_pieces(p.x(), p.y(), *m, deg))
        .map(|(_, _, rx, ry)| tensor(&rx, &ry))
        .collect();
    RationalMatrix::from_rows(deg.dim(), rows).expect("uniform rows")
}

/// Integer rows spanning the same row space as `condition_matrix`, one per
/// condition (identically zero conditions included), in the same order.
pub fn condition_rows(y: &FatPointScheme, deg: BiDegree) -> Vec<Vec<BigInt>> {
    if !deg.is_nonnegative() {
        return Vec::new();
    }
    let tx: Vec<Vec<Vec<BigInt>>> = y
        .first_components()
        .iter()
        .map(|c| pair_transform(c, deg.i).iter().map(|r| clear_denominators(r)).collect())
        .collect();
    let ty: Vec<Vec<Vec<BigInt>>> = y
        .second_components()
        .iter()
        .map(|c| pair_transform(c, deg.j).iter().map(|r| clear_denominators(r)).collect())
        .collect();
    let n = deg.dim();
    let mut out = Vec::new();
    for k in 0..y.len() {
        let m = y.multiplicity(k) as i64;
        let (a, b) = (&tx[y.row_of(k)], &ty[y.col_of(k)]);
        for u in 0..m {
            for v in 0..m - u {
                if u > deg.i || v > deg.j {
                    out.push(vec![BigInt::zero(); n]);
                } else {
                    out.push(tensor(&a[u as usize], &b[v as usize]));
                }
            }
        }
    }
    out
}

/// Rows of the conditions of `y` that are the top-order conditions
/// `u + v = m−1` at entry `k`, as positions in `condition_rows`.
pub fn top_condition_positions(y: &FatPointScheme, k: usize) -> Vec<usize> {
    let start: i64 = (0..k).map(|e| binom2(y.multiplicity(e) as i64 + 1)).sum();
    let m = y.multiplicity(k) as i64;
    // The block of entry `k` runs over `u` outer and `v < m − u` inner.
    (0..m).map(|u| (start + (0..u).map(|w| m - w).sum::<i64>() + m - 1 - u) as usize).collect()
}

/// `HF_Y(deg)`; zero off the first quadrant.
pub fn hf_value(y: &FatPointScheme, deg: BiDegree) -> i64 {
    if !deg.is_nonnegative() {
        return 0;
    }
    integer_rank(condition_rows(y, deg), deg.dim()) as i64
}

/// `dim (I_Y)_deg`.
pub fn ideal_dim(y: &FatPointScheme, deg: BiDegree) -> usize {
    deg.dim() - hf_value(y, deg) as usize
}

/// Primitive integer coefficient vectors of a basis of `(I_Y)_deg`.
pub fn ideal_kernel(y: &FatPointScheme, deg: BiDegree) -> Vec<Vec<BigInt>> {
    if !deg.is_nonnegative() {
        return Vec::new();
    }
    let rows: Vec<_> = condition_rows(y, deg).into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    bareiss(rows, deg.dim()).kernel()
}

/// A basis of `(I_Y)_deg` as polynomials.
pub fn ideal_basis(y: &FatPointScheme, deg: BiDegree) -> Vec<BiPoly> {
    ideal_kernel(y, deg).iter().map(|v| poly_from_integers(deg, v)).collect()
}

/// Reads an integer coefficient vector indexed by `monomial_basis(deg)`.
pub fn poly_from_integers(deg: BiDegree, v: &[BigInt]) -> BiPoly {
    let coeffs: Vec<Q> = v.iter().map(|x| Q::from_integer(x.clone())).collect();
    BiPoly::from_coefficients(deg, &coeffs)
}

/// Integer coefficient vector of a bihomogeneous polynomial, scaled to clear
/// denominators.
pub fn integer_coefficients(f: &BiPoly, deg: BiDegree) -> Vec<BigInt> {
    clear_denominators(&f.coefficients(deg))
}

/// Whether every term of `f` lies in `℘_p^m` (bihomogeneous `f`).
pub fn in_point_power(f: &BiPoly, p: &PointP1P1, m: u32) -> bool {
    if m == 0 || f.is_zero() {
        return true;
    }
    let deg = f.bidegree().expect("bihomogeneous input");
    let c = point_conditions(p, m, deg).expect("valid degree");
    c.apply(&f.coefficients(deg)).iter().all(Zero::is_zero)
}

/// `l + r + 2` rows and `l′ + t + 2` columns.
pub fn default_window(y: &FatPointScheme) -> (usize, usize) {
    let t = tuples(y);
    ((t.l + t.r + 2) as usize, (t.l_prime + t.t + 2) as usize)
}

/// `HF_Y` on a `rows × cols` window with its stabilization data.
pub fn hf(y: &FatPointScheme, rows: usize, cols: usize) -> HilbertMatrix {
    let t = tuples(y);
    HilbertMatrix::from_fn(rows, cols, |i, j| hf_value(y, BiDegree::new(i as i64, j as i64))).with_bounds(
        (t.l + t.r - 1).max(0) as usize,
        (t.l_prime + t.t - 1).max(0) as usize,
        y.degree(),
    )
}

/// Tuples attached to the rows and columns of the support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleBundle {
    /// `α_{Q_i} = (a_{i0}, a_{i1}, …)` per first component, in index order.
    pub alpha_rows: Vec<Vec<i64>>,
    /// `β_{R_j}` per second component.
    pub beta_cols: Vec<Vec<i64>>,
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    pub alpha_star: Vec<i64>,
    pub beta_star: Vec<i64>,
    pub alpha_hat: Vec<i64>,
    pub beta_hat: Vec<i64>,
    pub nu: Vec<i64>,
    pub nu_prime: Vec<i64>,
    pub l: i64,
    pub l_prime: i64,
    pub r: i64,
    pub t: i64,
}

/// `(a_0, a_1, …)` with `a_k = Σ max(m − k, 0)` over the given multiplicities,
/// up to the last positive entry.
fn truncation_sums(ms: &[u32]) -> Vec<i64> {
    let top = ms.iter().copied().max().unwrap_or(0) as i64;
    (0..top).map(|k| ms.iter().map(|&m| (m as i64 - k).max(0)).sum()).collect()
}

/// `λ*_k = #{entries ≥ k}` for `k = 1, …, max λ`.
pub fn conjugate(lambda: &[i64]) -> Vec<i64> {
    let top = lambda.iter().copied().max().unwrap_or(0);
    (1..=top).map(|k| lambda.iter().filter(|&&a| a >= k).count() as i64).collect()
}

pub fn tuples(y: &FatPointScheme) -> TupleBundle {
    let alpha_rows: Vec<Vec<i64>> = (0..y.first_components().len())
        .map(|r| truncation_sums(&y.entries_in_row(r).map(|k| y.multiplicity(k)).collect::<Vec<_>>()))
        .collect();
    let beta_cols: Vec<Vec<i64>> = (0..y.second_components().len())
        .map(|c| truncation_sums(&y.entries_in_col(c).map(|k| y.multiplicity(k)).collect::<Vec<_>>()))
        .collect();
    let nu: Vec<i64> = (0..alpha_rows.len()).map(|r| y.entries_in_row(r).count() as i64).collect();
    let nu_prime: Vec<i64> = (0..beta_cols.len()).map(|c| y.entries_in_col(c).count() as i64).collect();
    let sorted = |rows: &[Vec<i64>]| {
        let mut v: Vec<i64> = rows.iter().flatten().copied().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    };
    let alpha = sorted(&alpha_rows);
    let beta = sorted(&beta_cols);
    TupleBundle {
        alpha_star: conjugate(&alpha),
        beta_star: conjugate(&beta),
        alpha_hat: alpha_rows.iter().zip(&nu).map(|(a, n)| a[0] + n).collect(),
        beta_hat: beta_cols.iter().zip(&nu_prime).map(|(b, n)| b[0] + n).collect(),
        l: alpha.len() as i64,
        l_prime: beta.len() as i64,
        r: alpha_rows.len() as i64,
        t: beta_cols.len() as i64,
        alpha,
        beta,
        alpha_rows,
        beta_cols,
        nu,
        nu_prime,
    }
}

/// A `(1,0)`-form `L1 = X0 + c1·X1` and a `(0,1)`-form `L2 = Y0 + c2·Y1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NzdPair {
    pub c1: i64,
    pub c2: i64,
}

impl NzdPair {
    pub fn l1(&self) -> BiPoly {
        &BiPoly::var(Var::X0) + &BiPoly::var(Var::X1).scale(&q(self.c1))
    }

    pub fn l2(&self) -> BiPoly {
        &BiPoly::var(Var::Y0) + &BiPoly::var(Var::Y1).scale(&q(self.c2))
    }

    /// The substitution whose new coordinates are `X0' = L1, X1' = X1,
    /// Y0' = L2, Y1' = Y1`, acting on point coordinates.
    pub fn point_matrices(&self) -> ([[Q; 2]; 2], [[Q; 2]; 2]) {
        ([[q(1), q(self.c1)], [q(0), q(1)]], [[q(1), q(self.c2)], [q(0), q(1)]])
    }
}

/// Candidates `c = 0, 1, 2, …` with `c0 + c·c1 ≠ 0` for every pair.
fn avoiding_values(pairs: &[[Q; 2]]) -> impl Iterator<Item = i64> + '_ {
    (0i64..).filter(move |&c| pairs.iter().all(|p| !(&p[0] + &p[1] * q(c)).is_zero()))
}

/// Verification window for the regular-sequence certificate: the default
/// window grown by one row and one column.
pub fn acm_window(y: &FatPointScheme) -> (usize, usize) {
    let (r, c) = default_window(y);
    (r + 1, c + 1)
}

/// Searches for `L1, L2` forming a regular sequence on the coordinate ring,
/// certified by `HF_{S/(I+⟨L1,L2⟩)} = ΔHF_Y` on the verification window.
pub fn find_nzd_pair(y: &FatPointScheme, budget: usize) -> Option<NzdPair> {
    let (rows, cols) = acm_window(y);
    let h = hf(y, rows, cols);
    let delta = first_difference(h.data());
    if delta.iter().flatten().any(|&d| d < 0) {
        return None;
    }
    let c1 = avoiding_values(y.first_components()).next().expect("infinitely many values");
    let conditions: Vec<Vec<Vec<Vec<BigInt>>>> =
        (0..rows).map(|i| (0..cols).map(|j| condition_rows(y, BiDegree::new(i as i64, j as i64))).collect()).collect();
    avoiding_values(y.second_components()).take(budget).find_map(|c2| {
        let pair = NzdPair { c1, c2 };
        let ok = (0..rows).all(|i| {
            (0..cols).all(|j| {
                let deg = BiDegree::new(i as i64, j as i64);
                let image = multiplication_image_rank(&conditions[i][j], deg, &pair);
                h.get(i, j) - image as i64 == delta[i][j]
            })
        });
        ok.then_some(pair)
    })
}

/// Rank of `L1·S_{i−1,j} + L2·S_{i,j−1}` modulo `I_Y` in bidegree `deg`,
/// read through the condition rows of `deg`.
fn multiplication_image_rank(cond: &[Vec<BigInt>], deg: BiDegree, pair: &NzdPair) -> usize {
    let ncond = cond.len();
    if ncond == 0 {
        return 0;
    }
    let col = |m: &Monomial| -> Vec<BigInt> {
        let idx = m.basis_index();
        cond.iter().map(|r| r[idx].clone()).collect()
    };
    let combine = |a: Vec<BigInt>, b: Vec<BigInt>, c: i64| -> Vec<BigInt> {
        let c = BigInt::from(c);
        a.into_iter().zip(b).map(|(x, y)| x + &c * y).collect()
    };
    let mut vectors = Vec::new();
    for m in monomial_basis(deg - BiDegree::new(1, 0)) {
        let a = col(&m.mul(&Monomial::var(Var::X0)));
        let b = col(&m.mul(&Monomial::var(Var::X1)));
        vectors.push(combine(a, b, pair.c1));
    }
    for m in monomial_basis(deg - BiDegree::new(0, 1)) {
        let a = col(&m.mul(&Monomial::var(Var::Y0)));
        let b = col(&m.mul(&Monomial::var(Var::Y1)));
        vectors.push(combine(a, b, pair.c2));
    }
    integer_rank(vectors, ncond)
}

/// The regular-sequence certificate with `degree(Y) + 1` candidate `L2`.
pub fn acm_certificate(y: &FatPointScheme) -> Option<NzdPair> {
    find_nzd_pair(y, y.degree() as usize + 1)
}

pub fn is_acm(y: &FatPointScheme) -> bool {
    acm_certificate(y).is_some()
}
