//! Minimal generators of `I_Y` and the Kähler different `ϑ_Y`, the ideal of
//! `R_Y` generated by the 2-minors of the Jacobian matrix with respect to
//! `(X1, Y1)`.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hilbert::HilbertMatrix;
use crate::linalg::{integer_rank, modular_rank, IncrementalSpan};
use crate::ring::{BiDegree, BiPoly, Var};
use crate::scheme::{
    acm_certificate, condition_rows, hf_value, ideal_kernel, integer_coefficients, poly_from_integers, tuples,
    FatPointScheme, NzdPair,
};

/// Bihomogeneous generators with the window on which they were verified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    pub gens: Vec<(BiPoly, BiDegree)>,
    /// Every bidegree `⪯ search_window` was swept.
    pub search_window: BiDegree,
    /// Two consecutive enlargements of the window added nothing.
    pub verified: bool,
}

impl GeneratorSet {
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn degrees(&self) -> Vec<BiDegree> {
        self.gens.iter().map(|(_, d)| *d).collect()
    }

    pub fn polys(&self) -> Vec<BiPoly> {
        self.gens.iter().map(|(g, _)| g.clone()).collect()
    }
}

/// Coefficient vector of `var · f` for `f` given in bidegree `from`.
pub(crate) fn shift(v: &[BigInt], from: BiDegree, var: Var) -> Vec<BigInt> {
    let j = from.j as usize;
    let to = from + var.bidegree();
    let mut out = vec![BigInt::zero(); to.dim()];
    for (idx, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let (p, q) = (idx / (j + 1), idx % (j + 1));
        let at = match var {
            Var::X0 => p * (j + 1) + q,
            Var::X1 => (p + 1) * (j + 1) + q,
            Var::Y0 => p * (j + 2) + q,
            Var::Y1 => p * (j + 2) + q + 1,
        };
        out[at] = c.clone();
    }
    out
}

/// New elements found by a generator sweep with their bidegrees, and the
/// final window.
pub(crate) struct Sweep {
    pub found: Vec<(BiDegree, Vec<BigInt>)>,
    pub window: BiDegree,
}

/// Minimal generators of a module `J / K` with `J` given by `basis` and `K`
/// the kernel of `project`. At each bidegree the projected shifts of
/// `J_{i−1,j}` and `J_{i,j−1}` span a subspace; basis vectors extending it
/// are new generators. The window grows from `start` by `(1,1)` until two
/// consecutive enlargements add nothing, and fails past `4·start`.
pub(crate) fn sweep(
    start: BiDegree,
    basis: impl Fn(BiDegree) -> Vec<Vec<BigInt>>,
    project: impl Fn(BiDegree, Vec<BigInt>) -> Vec<BigInt>,
) -> Result<Sweep> {
    let start = BiDegree::new(start.i.max(1), start.j.max(1));
    let cap = BiDegree::new(4 * start.i, 4 * start.j);
    let mut cache: HashMap<BiDegree, Vec<Vec<BigInt>>> = HashMap::new();
    let mut get = |d: BiDegree| -> Vec<Vec<BigInt>> {
        if !d.is_nonnegative() {
            return Vec::new();
        }
        cache.entry(d).or_insert_with(|| basis(d)).clone()
    };
    let mut found = Vec::new();
    let mut visit = |deg: BiDegree, found: &mut Vec<(BiDegree, Vec<BigInt>)>| -> bool {
        let here = get(deg);
        if here.is_empty() {
            return false;
        }
        let images: Vec<Vec<BigInt>> = here.iter().map(|v| project(deg, v.clone())).collect();
        let len = images[0].len();
        let target = integer_rank(images.clone(), len);
        let lower = [(Var::X0, Var::X1, BiDegree::new(1, 0)), (Var::Y0, Var::Y1, BiDegree::new(0, 1))];
        let shifts: Vec<Vec<BigInt>> = lower
            .into_iter()
            .flat_map(|(a, b, step)| {
                let from = deg - step;
                get(from).into_iter().flat_map(move |v| [shift(&v, from, a), shift(&v, from, b)])
            })
            .map(|v| project(deg, v))
            .collect();
        if modular_rank(&shifts, len) == target {
            return false;
        }
        let mut span = IncrementalSpan::new(len);
        for v in shifts {
            if span.dim() == target {
                break;
            }
            span.insert(v);
        }
        let before = found.len();
        for (v, img) in here.into_iter().zip(images) {
            if span.dim() == target {
                break;
            }
            if span.insert(img) {
                found.push((deg, v));
            }
        }
        found.len() > before
    };
    for i in 0..=start.i {
        for j in 0..=start.j {
            visit(BiDegree::new(i, j), &mut found);
        }
    }
    let mut window = start;
    let mut quiet = 0;
    while quiet < 2 {
        let next = window + BiDegree::new(1, 1);
        if next.i > cap.i || next.j > cap.j {
            return Err(Error::CapReached(window));
        }
        let mut added = false;
        for i in 0..=next.i {
            for j in 0..=next.j {
                if i > window.i || j > window.j {
                    added |= visit(BiDegree::new(i, j), &mut found);
                }
            }
        }
        quiet = if added { 0 } else { quiet + 1 };
        window = next;
    }
    found.sort_by_key(|(d, _)| (d.i + d.j, -d.i));
    Ok(Sweep { found, window })
}

/// The sweep starting window `(l + r, l′ + t)`.
pub(crate) fn start_window(y: &FatPointScheme) -> BiDegree {
    let t = tuples(y);
    BiDegree::new(t.l + t.r, t.l_prime + t.t)
}

/// A minimal bihomogeneous system of generators of `I_Y`.
pub fn minimal_generators(y: &FatPointScheme) -> Result<GeneratorSet> {
    let s = sweep(start_window(y), |d| ideal_kernel(y, d), |_, v| v)?;
    Ok(GeneratorSet {
        gens: s.found.into_iter().map(|(d, v)| (poly_from_integers(d, &v), d)).collect(),
        search_window: s.window,
        verified: true,
    })
}

/// `∂(F,G)/∂(X1,Y1)`.
pub fn jacobian_minor(f: &BiPoly, g: &BiPoly) -> BiPoly {
    &(&f.partial(Var::X1) * &g.partial(Var::Y1)) - &(&f.partial(Var::Y1) * &g.partial(Var::X1))
}

/// All nonzero 2-minors of the Jacobian of `gens` with respect to `(X1, Y1)`.
pub fn jacobian_minors(gens: &[BiPoly]) -> Vec<BiPoly> {
    let mut out = Vec::new();
    for (a, f) in gens.iter().enumerate() {
        for g in &gens[a + 1..] {
            let m = jacobian_minor(f, g);
            if !m.is_zero() {
                out.push(m);
            }
        }
    }
    out
}

/// Degreewise bases of `ϑ` modulo `I_Y`. Since `ϑ` is an ideal, a bidegree
/// is spanned by the variable shifts of the bases one step below together
/// with the minors of exactly that bidegree.
struct ThetaLevels<'a> {
    y: &'a FatPointScheme,
    minors: Vec<(BiDegree, Vec<BigInt>)>,
    memo: HashMap<BiDegree, (IncrementalSpan, Vec<Vec<BigInt>>)>,
}

impl<'a> ThetaLevels<'a> {
    fn new(y: &'a FatPointScheme, minors: &[BiPoly]) -> Self {
        let minors = minors
            .iter()
            .map(|f| {
                let d = f.bidegree().expect("minors of bihomogeneous forms are bihomogeneous");
                (d, integer_coefficients(f, d))
            })
            .collect();
        ThetaLevels { y, minors, memo: HashMap::new() }
    }

    /// The span of the condition-row images of `ϑ_deg` and the coefficient
    /// vectors of a basis of `ϑ_deg` modulo `I_Y`.
    fn level(&mut self, deg: BiDegree) -> &(IncrementalSpan, Vec<Vec<BigInt>>) {
        if !self.memo.contains_key(&deg) {
            let steps = [(BiDegree::new(1, 0), [Var::X0, Var::X1]), (BiDegree::new(0, 1), [Var::Y0, Var::Y1])];
            let lower: Vec<_> = steps.iter().map(|(s, _)| deg - *s).filter(|d| d.is_nonnegative()).collect();
            for d in lower {
                self.level(d);
            }
            let computed = self.compute(deg, &steps);
            self.memo.insert(deg, computed);
        }
        &self.memo[&deg]
    }

    fn compute(&self, deg: BiDegree, steps: &[(BiDegree, [Var; 2])]) -> (IncrementalSpan, Vec<Vec<BigInt>>) {
        let rows = condition_rows(self.y, deg);
        let mut span = IncrementalSpan::new(rows.len());
        let mut basis = Vec::new();
        if !deg.is_nonnegative() || rows.is_empty() {
            return (span, basis);
        }
        let cap = hf_value(self.y, deg) as usize;
        let shifted = steps.iter().flat_map(|(step, vars)| {
            let from = deg - *step;
            let below = self.memo.get(&from).map(|(_, b)| b.as_slice()).unwrap_or_default();
            below.iter().flat_map(move |v| vars.iter().map(move |&var| shift(v, from, var)))
        });
        let own = self.minors.iter().filter(|(d, _)| *d == deg).map(|(_, v)| v.clone());
        for v in shifted.chain(own) {
            if span.dim() == cap {
                break;
            }
            let image = rows.iter().map(|r| r.iter().zip(&v).map(|(a, b)| a * b).sum()).collect();
            if span.insert(image) {
                basis.push(v);
            }
        }
        (span, basis)
    }

    fn hf(&mut self, rows: usize, cols: usize) -> HilbertMatrix {
        HilbertMatrix::from_fn(rows, cols, |i, j| self.level(BiDegree::new(i as i64, j as i64)).0.dim() as i64)
    }
}

/// `ϑ` in the given bidegree as a span of images under the condition rows,
/// so that its dimension is `dim (ϑ_Y)_deg` inside `R_Y`.
pub fn theta_span(y: &FatPointScheme, minors: &[BiPoly], deg: BiDegree) -> IncrementalSpan {
    if !deg.is_nonnegative() {
        return IncrementalSpan::new(0);
    }
    ThetaLevels::new(y, minors).level(deg).0.clone()
}

/// `HF_ϑ` for explicit generators of `I_Y`, in the coordinates of `y`.
/// Every generator must lie in `I_Y`; `X0, Y0` should be a regular sequence.
pub fn different_hf_from_generators(
    y: &FatPointScheme,
    gens: &[BiPoly],
    rows: usize,
    cols: usize,
) -> Result<HilbertMatrix> {
    for g in gens {
        let d = g.bidegree().ok_or_else(|| Error::Precondition(format!("{g} is not bihomogeneous")))?;
        let v = integer_coefficients(g, d);
        let inside =
            condition_rows(y, d).iter().all(|r| r.iter().zip(&v).map(|(a, b)| a * b).sum::<BigInt>().is_zero());
        if !inside {
            return Err(Error::Precondition(format!("{g} does not vanish on the scheme")));
        }
    }
    Ok(ThetaLevels::new(y, &jacobian_minors(gens)).hf(rows, cols))
}

/// The Kähler different of an ACM scheme with the data needed to reproduce
/// it: the coordinate change making `X0, Y0` a regular sequence, the
/// transformed scheme and its minimal generators.
#[derive(Clone, Debug)]
pub struct Different {
    pub normalization: NzdPair,
    pub scheme: FatPointScheme,
    pub generators: GeneratorSet,
    pub minors: Vec<BiPoly>,
}

impl Different {
    pub fn new(y: &FatPointScheme) -> Result<Self> {
        let pair = acm_certificate(y).ok_or_else(|| Error::Precondition("the scheme is not ACM".into()))?;
        let (xm, ym) = pair.point_matrices();
        let scheme = y.transform_points(&xm, &ym)?;
        let generators = minimal_generators(&scheme)?;
        if !generators.verified {
            return Err(Error::Inconsistent("generator search did not stabilize".into()));
        }
        let minors = jacobian_minors(&generators.polys());
        Ok(Different { normalization: pair, scheme, generators, minors })
    }

    pub fn span(&self, deg: BiDegree) -> IncrementalSpan {
        theta_span(&self.scheme, &self.minors, deg)
    }

    /// Bidegrees of a minimal bihomogeneous system of generators of `ϑ_Y`
    /// in `R_Y`, ordered by total degree. They occur among the bidegrees of
    /// the minors, which generate `ϑ_Y`.
    pub fn generator_degrees(&self) -> Result<Vec<BiDegree>> {
        let Some(top) =
            self.minors.iter().filter_map(BiPoly::bidegree).reduce(|a, b| BiDegree::new(a.i.max(b.i), a.j.max(b.j)))
        else {
            return Ok(Vec::new());
        };
        let levels = RefCell::new(ThetaLevels::new(&self.scheme, &self.minors));
        let rows: RefCell<HashMap<BiDegree, Vec<Vec<BigInt>>>> = RefCell::default();
        let project = |deg: BiDegree, v: Vec<BigInt>| -> Vec<BigInt> {
            let mut rows = rows.borrow_mut();
            let rows = rows.entry(deg).or_insert_with(|| condition_rows(&self.scheme, deg));
            rows.iter().map(|r| r.iter().zip(&v).map(|(a, b)| a * b).sum()).collect()
        };
        let s = sweep(top, |d| levels.borrow_mut().level(d).1.clone(), project)?;
        Ok(s.found.into_iter().map(|(d, _)| d).collect())
    }

    pub fn hf(&self, rows: usize, cols: usize) -> HilbertMatrix {
        let (t1, t2) = theta_stable_bounds(&self.scheme);
        ThetaLevels::new(&self.scheme, &self.minors).hf(rows, cols).with_bounds(
            t1,
            t2,
            theta_stable_value(&self.scheme),
        )
    }
}

/// `HF_ϑ` of an ACM scheme on a `rows × cols` window.
pub fn kaehler_different_hf(y: &FatPointScheme, rows: usize, cols: usize) -> Result<HilbertMatrix> {
    Ok(Different::new(y)?.hf(rows, cols))
}

/// The number of points of multiplicity one.
pub fn theta_stable_value(y: &FatPointScheme) -> i64 {
    y.multiplicities().iter().filter(|&&m| m == 1).count() as i64
}

/// `(t1, t2)` from which `HF_ϑ` equals the number of simple points: twice
/// the largest minimal separator degree of a simple point. `(0, 0)` when
/// there is none.
pub fn theta_stable_bounds(y: &FatPointScheme) -> (usize, usize) {
    let simple = (0..y.len()).filter(|&k| y.multiplicity(k) == 1);
    let col_sum = |k: usize| y.entries_in_col(y.col_of(k)).map(|e| y.multiplicity(e) as usize).sum::<usize>();
    let row_sum = |k: usize| y.entries_in_row(y.row_of(k)).map(|e| y.multiplicity(e) as usize).sum::<usize>();
    simple.fold((0, 0), |(a, b), k| (a.max(2 * (col_sum(k) - 1)), b.max(2 * (row_sum(k) - 1))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::{grid_ci, hf};

    #[test]
    fn generators_of_small_schemes() {
        let single =
            FatPointScheme::new(vec![(crate::scheme::PointP1P1::from_integers(1, 0, 1, 0).unwrap(), 1)]).unwrap();
        let g = minimal_generators(&single).unwrap();
        assert_eq!(g.degrees(), vec![BiDegree::new(1, 0), BiDegree::new(0, 1)]);
        assert_eq!(g.gens[0].0, BiPoly::var(Var::X1));
        assert_eq!(g.gens[1].0, BiPoly::var(Var::Y1));
        let ci = minimal_generators(&grid_ci(2, 3)).unwrap();
        assert_eq!(ci.degrees(), vec![BiDegree::new(2, 0), BiDegree::new(0, 3)]);
        assert!(ci.verified);
    }

    #[test]
    fn shifts_match_multiplication() {
        let f: BiPoly = "X0^2*Y1 - 3*X0*X1*Y0 + X1^2*Y1".parse().unwrap();
        let d = f.bidegree().unwrap();
        for var in Var::ALL {
            let expected = integer_coefficients(&(&f * &BiPoly::var(var)), d + var.bidegree());
            assert_eq!(shift(&integer_coefficients(&f, d), d, var), expected);
        }
    }

    #[test]
    fn theta_of_five_points() {
        let x = FatPointScheme::from_grid(&[(1, 1, 1), (1, 2, 1), (1, 3, 1), (2, 1, 1), (2, 2, 1)]).unwrap();
        let h = kaehler_different_hf(&x, 6, 6).unwrap();
        assert_eq!(h.data()[0], vec![0, 0, 0, 0, 1, 1]);
        assert_eq!(h.data()[1], vec![0, 0, 1, 2, 3, 3]);
        assert_eq!(h.data()[2], vec![0, 1, 3, 4, 5, 5]);
    }

    #[test]
    fn theta_of_a_grid_is_a_shifted_hf() {
        let x = grid_ci(2, 3);
        let h = kaehler_different_hf(&x, 6, 7).unwrap();
        let hx = hf(&x, 6, 7);
        for i in 0..6 {
            for j in 0..7 {
                assert_eq!(h.get(i, j), hx.at(i as i64 - 1, j as i64 - 2));
            }
        }
        let d = Different::new(&x).unwrap();
        assert_eq!(d.generator_degrees().unwrap(), [BiDegree::new(1, 2)]);
    }

    #[test]
    fn stable_data() {
        let y = FatPointScheme::from_grid(&[(1, 1, 2), (1, 2, 2), (2, 3, 1), (3, 1, 1), (3, 2, 2)]).unwrap();
        assert_eq!(theta_stable_value(&y), 2);
        assert!(kaehler_different_hf(&y, 3, 3).is_err());
    }
}
