//! Exact dense linear algebra over the rationals.
//!
//! Rows are scaled to integers and reduced by fraction-free (Bareiss)
//! elimination. Pivots are chosen deterministically: the current column is
//! scanned top-down for the first nonzero entry, columns left to right.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::Q;

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, Q::one());
        }
        m
    }

    /// Builds from row vectors; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Q>>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Dimension(format!("row of length {} in a matrix with {cols} columns", bad.len())));
        }
        let n = rows.len();
        Ok(RationalMatrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let rows = rows.iter().map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect()).collect();
        RationalMatrix::from_rows(cols, rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = RationalMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Appends the rows of `other` below `self`.
    pub fn stack(&self, other: &RationalMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::Dimension(format!("cannot stack {} columns on {}", other.cols, self.cols)));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(RationalMatrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// `self · v`.
    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        (0..self.rows).map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Each row multiplied by the lcm of its denominators.
    pub fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| clear_denominators(self.row(r))).collect()
    }
}

/// Scales a rational vector by the lcm of its denominators.
pub fn clear_denominators(v: &[Q]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Divides an integer vector by the gcd of its entries and makes its first
/// nonzero entry positive.
pub fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return;
    }
    let flip = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    let g = if flip { -g } else { g };
    if !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Row echelon form produced by fraction-free elimination.
#[derive(Clone, Debug)]
pub struct Echelon {
    /// The first `rank` rows of the eliminated matrix.
    pub rows: Vec<Vec<BigInt>>,
    /// Pivot column of each row, strictly increasing.
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Non-pivot columns in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols).filter(|&c| !is_pivot[c]).collect()
    }

    /// Primitive integer vectors spanning the right null space, one per
    /// non-pivot column `c`, each with zero entries at the other non-pivot
    /// columns and a positive entry at `c`. Dividing by that entry gives
    /// the reduced echelon kernel basis.
    pub fn kernel(&self) -> Vec<Vec<BigInt>> {
        let r = self.rank();
        let d = match r {
            0 => BigInt::one(),
            _ => self.rows[r - 1][self.pivots[r - 1]].clone(),
        };
        let mut out = Vec::with_capacity(self.cols - r);
        for c in self.free_columns() {
            let mut y = vec![BigInt::zero(); r];
            for k in (0..r).rev() {
                let row = &self.rows[k];
                let mut acc = &d * &row[c];
                for l in k + 1..r {
                    if !y[l].is_zero() {
                        acc -= &row[self.pivots[l]] * &y[l];
                    }
                }
                y[k] = acc / &row[self.pivots[k]];
            }
            let mut v = vec![BigInt::zero(); self.cols];
            v[c] = d.clone();
            for (k, yk) in y.into_iter().enumerate() {
                v[self.pivots[k]] = -yk;
            }
            make_primitive(&mut v);
            if v[c].is_negative() {
                v.iter_mut().for_each(|x| *x = -&*x);
            }
            out.push(v);
        }
        out
    }
}

/// Fraction-free Gaussian elimination of an integer matrix with `cols`
/// columns. Stops early once every row carries a pivot.
pub fn bareiss(mut a: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    let mut tmp = BigInt::zero();
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = &pivot_row[c];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            let factor_zero = factor.is_zero();
            for k in c + 1..cols {
                let x = &mut row[k];
                if factor_zero {
                    if x.is_zero() {
                        continue;
                    }
                    *x *= piv;
                } else {
                    tmp.clone_from(&factor);
                    tmp *= &pivot_row[k];
                    *x *= piv;
                    *x -= &tmp;
                }
                if !prev.is_one() {
                    *x /= &prev;
                }
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots, cols }
}

/// Rank of an integer matrix given by rows of length `cols`.
pub fn integer_rank(rows: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let rows: Vec<_> = rows.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    if rows.is_empty() {
        return 0;
    }
    bareiss(rows, cols).rank()
}

/// The Mersenne prime `2^61 − 1`.
const MODULUS: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    acc
}

/// Rank of the rows reduced modulo `2^61 − 1`. This never exceeds the
/// rational rank, so a full modular rank certifies the rational one.
pub fn modular_rank(rows: &[Vec<BigInt>], cols: usize) -> usize {
    let m = BigInt::from(MODULUS);
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.mod_floor(&m).try_into().expect("residue fits in u64")).collect())
        .collect();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        let inv = pow_mod(a[r][c], MODULUS - 2);
        let pivot: Vec<u64> = a[r].iter().map(|&x| mul_mod(x, inv)).collect();
        for row in a.iter_mut().skip(r + 1) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for k in c..cols {
                row[k] = (row[k] + MODULUS - mul_mod(f, pivot[k])) % MODULUS;
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

/// Exact rank over the rationals.
pub fn rank_exact(m: &RationalMatrix) -> usize {
    integer_rank(m.integer_rows(), m.cols)
}

/// Reduced echelon basis of the right null space of `m`; there is one vector
/// per non-pivot column, holding 1 there and 0 at the other non-pivot columns.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<Q>> {
    let e = bareiss(m.integer_rows(), m.cols);
    e.free_columns()
        .into_iter()
        .zip(e.kernel())
        .map(|(c, v)| {
            let lead = v[c].clone();
            v.into_iter().map(|x| Q::new(x, lead.clone())).collect()
        })
        .collect()
}

/// Dimension of the span of equally long vectors.
pub fn span_dim(vectors: &[Vec<Q>]) -> Result<usize> {
    let Some(n) = vectors.first().map(Vec::len) else {
        return Ok(0);
    };
    let m = RationalMatrix::from_rows(n, vectors.to_vec())?;
    Ok(rank_exact(&m))
}

/// A growing set of independent integer vectors kept in echelon form; used
/// for greedy selection where vectors are accepted one at a time.
#[derive(Clone, Debug)]
pub struct IncrementalSpan {
    len: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl IncrementalSpan {
    pub fn new(len: usize) -> Self {
        IncrementalSpan { len, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn vector_len(&self) -> usize {
        self.len
    }

    /// The residue of `v` after elimination against the stored rows; zero
    /// exactly when `v` lies in the span.
    pub fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let mut tmp = BigInt::zero();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = std::mem::take(&mut v[*p]);
            let lead = &row[*p];
            // Entries before the pivot are zero in `row` but still scale.
            for k in (0..self.len).filter(|&k| k != *p) {
                if row[k].is_zero() {
                    if !v[k].is_zero() {
                        v[k] *= lead;
                    }
                    continue;
                }
                tmp.clone_from(&f);
                tmp *= &row[k];
                v[k] *= lead;
                v[k] -= &tmp;
            }
            make_primitive(&mut v);
        }
        v
    }

    pub fn contains(&self, v: Vec<BigInt>) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` when it is independent of the stored rows; reports whether
    /// the span grew.
    pub fn insert(&mut self, v: Vec<BigInt>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        make_primitive(&mut v);
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, v));
        true
    }

    /// `insert` for rational input.
    pub fn insert_rational(&mut self, v: &[Q]) -> bool {
        self.insert(clear_denominators(v))
    }
}
