//! Finite windows of bigraded Hilbert functions.

use serde::{Deserialize, Serialize};

/// A plain integer matrix, row-major.
pub type IntMatrix = Vec<Vec<i64>>;

/// A `rows × cols` window of a bigraded function indexed from `(0,0)`,
/// together with the indices from which it is known to be constant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertMatrix {
    data: IntMatrix,
    /// Entries with `i >= row_bound` and `j >= col_bound` equal `eventual`.
    pub row_bound: Option<usize>,
    pub col_bound: Option<usize>,
    pub eventual: Option<i64>,
}

impl HilbertMatrix {
    /// Panics when the rows have different lengths.
    pub fn new(data: IntMatrix) -> Self {
        if let Some(first) = data.first() {
            assert!(data.iter().all(|r| r.len() == first.len()), "ragged matrix");
        }
        HilbertMatrix { data, row_bound: None, col_bound: None, eventual: None }
    }

    /// Fills a window from a function of `(i, j)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        HilbertMatrix::new((0..rows).map(|i| (0..cols).map(|j| f(i, j)).collect()).collect())
    }

    pub fn with_bounds(mut self, row_bound: usize, col_bound: usize, eventual: i64) -> Self {
        self.row_bound = Some(row_bound);
        self.col_bound = Some(col_bound);
        self.eventual = Some(eventual);
        self
    }

    pub fn rows(&self) -> usize {
        self.data.len()
    }

    pub fn cols(&self) -> usize {
        self.data.first().map_or(0, Vec::len)
    }

    pub fn data(&self) -> &IntMatrix {
        &self.data
    }

    pub fn into_data(self) -> IntMatrix {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i][j]
    }

    /// Entry at possibly negative indices; zero off the first quadrant.
    pub fn at(&self, i: i64, j: i64) -> i64 {
        if i < 0 || j < 0 {
            0
        } else {
            self.data[i as usize][j as usize]
        }
    }

    /// The top-left `rows × cols` corner.
    pub fn truncate(&self, rows: usize, cols: usize) -> HilbertMatrix {
        let data = self.data[..rows].iter().map(|r| r[..cols].to_vec()).collect();
        HilbertMatrix { data, ..self.clone() }
    }
}

/// `ΔH(i,j) = H(i,j) − H(i−1,j) − H(i,j−1) + H(i−1,j−1)`, with `H` zero off
/// the first quadrant.
pub fn first_difference(h: &[Vec<i64>]) -> IntMatrix {
    let at = |i: usize, j: usize, di: usize, dj: usize| -> i64 {
        if i < di || j < dj {
            0
        } else {
            h[i - di][j - dj]
        }
    };
    (0..h.len())
        .map(|i| (0..h[i].len()).map(|j| at(i, j, 0, 0) - at(i, j, 1, 0) - at(i, j, 0, 1) + at(i, j, 1, 1)).collect())
        .collect()
}
