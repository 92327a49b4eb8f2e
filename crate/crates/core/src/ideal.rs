//! Bihomogeneous ideals presented one bidegree at a time.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::hilbert::HilbertMatrix;
use crate::linalg::{bareiss, integer_rank, make_primitive};
use crate::ring::{monomial_basis, BiDegree, BiPoly};
use crate::scheme::{condition_rows, ideal_kernel, integer_coefficients, FatPointScheme};

/// An ideal `I ⊆ S` known through its homogeneous components.
pub trait DegreewiseIdeal {
    /// Integer rows whose common kernel inside `S_deg` is `I_deg`.
    fn quotient_rows(&self, deg: BiDegree) -> Vec<Vec<BigInt>>;

    /// A basis of `I_deg` as integer coefficient vectors.
    fn basis_vectors(&self, deg: BiDegree) -> Vec<Vec<BigInt>>;

    /// `dim (S/I)_deg`; zero off the first quadrant.
    fn hf_value(&self, deg: BiDegree) -> i64 {
        if !deg.is_nonnegative() {
            return 0;
        }
        integer_rank(self.quotient_rows(deg), deg.dim()) as i64
    }
}

impl DegreewiseIdeal for FatPointScheme {
    fn quotient_rows(&self, deg: BiDegree) -> Vec<Vec<BigInt>> {
        condition_rows(self, deg).into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect()
    }

    fn basis_vectors(&self, deg: BiDegree) -> Vec<Vec<BigInt>> {
        ideal_kernel(self, deg)
    }
}

/// The ideal generated by explicit bihomogeneous polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedIdeal {
    gens: Vec<(BiPoly, BiDegree)>,
}

impl GeneratedIdeal {
    /// Zero polynomials are dropped; non-bihomogeneous input is rejected.
    pub fn new(gens: Vec<BiPoly>) -> crate::Result<Self> {
        let mut out = Vec::new();
        for g in gens {
            if g.is_zero() {
                continue;
            }
            let d = g
                .bidegree()
                .ok_or_else(|| crate::Error::Precondition(format!("generator {g} is not bihomogeneous")))?;
            out.push((g, d));
        }
        Ok(GeneratedIdeal { gens: out })
    }

    pub fn generators(&self) -> impl Iterator<Item = &BiPoly> {
        self.gens.iter().map(|(g, _)| g)
    }

    /// Products of each generator with every monomial reaching `deg`.
    fn spanning_vectors(&self, deg: BiDegree) -> Vec<Vec<BigInt>> {
        let mut out = Vec::new();
        for (g, d) in &self.gens {
            for m in monomial_basis(deg - *d) {
                out.push(integer_coefficients(&g.mul_monomial(&m), deg));
            }
        }
        out
    }

    /// The ideal generated by all pairwise products of generators.
    pub fn square(&self) -> GeneratedIdeal {
        let mut gens = Vec::new();
        for (a, (f, df)) in self.gens.iter().enumerate() {
            for (g, dg) in &self.gens[a..] {
                gens.push((f * g, *df + *dg));
            }
        }
        GeneratedIdeal { gens }
    }
}

impl DegreewiseIdeal for GeneratedIdeal {
    fn quotient_rows(&self, deg: BiDegree) -> Vec<Vec<BigInt>> {
        if !deg.is_nonnegative() {
            return Vec::new();
        }
        let basis = self.basis_vectors(deg);
        bareiss(basis, deg.dim()).kernel()
    }

    fn basis_vectors(&self, deg: BiDegree) -> Vec<Vec<BigInt>> {
        if !deg.is_nonnegative() {
            return Vec::new();
        }
        let mut rows = bareiss(self.spanning_vectors(deg), deg.dim()).rows;
        rows.iter_mut().for_each(|r| make_primitive(r));
        rows
    }
}

/// `HF_{S/I}` on a `rows × cols` window.
pub fn hf_ideal(ideal: &impl DegreewiseIdeal, rows: usize, cols: usize) -> HilbertMatrix {
    HilbertMatrix::from_fn(rows, cols, |i, j| ideal.hf_value(BiDegree::new(i as i64, j as i64)))
}
