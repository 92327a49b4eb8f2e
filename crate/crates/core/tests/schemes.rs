mod common;

use fatpoints::different::different_hf_from_generators;
use fatpoints::linalg::integer_rank;
use fatpoints::scheme::{condition_rows, default_window, in_point_power, integer_coefficients};
use fatpoints::{
    cbp_different_criterion, hf_remove_point, hf_remove_point_direct, ideal_dim, is_cbp, minimal_generators,
    monomial_basis, tuples, BiDegree, BiPoly, Different, Monomial,
};

use common::*;

fn times(m: Monomial, f: &BiPoly) -> BiPoly {
    f.mul_monomial(&m)
}

#[test]
fn generators_vanish_and_generate() {
    let mut r = rng(21);
    for _ in 0..8 {
        let y = random_scheme(&mut r, 4, 2);
        let g = minimal_generators(&y).unwrap();
        for (f, _) in &g.gens {
            assert!((0..y.len()).all(|k| in_point_power(f, y.point(k), y.multiplicity(k))));
        }
        let (rows, cols) = default_window(&y);
        for i in 0..rows as i64 {
            for j in 0..cols as i64 {
                let deg = BiDegree::new(i, j);
                let products: Vec<_> = g
                    .gens
                    .iter()
                    .filter(|(_, d)| d.precedes(deg))
                    .flat_map(|(f, d)| monomial_basis(deg - *d).into_iter().map(move |m| times(m, f)))
                    .map(|p| integer_coefficients(&p, deg))
                    .collect();
                assert_eq!(integer_rank(products, deg.dim()), ideal_dim(&y, deg), "{y:?} at {deg}");
            }
        }
    }
}

#[test]
fn different_ignores_redundant_generators() {
    let mut r = rng(22);
    for _ in 0..10 {
        let y = random_acm(&mut r, 4, 1..=2, |_| true);
        let d = Different::new(&y).unwrap();
        let (rows, cols) = default_window(&y);
        let mut gens = d.generators.polys();
        let first = gens[0].clone();
        let last = gens[gens.len() - 1].clone();
        gens.push(times(Monomial::new(1, 0, 0, 0), &first));
        gens.push(times(Monomial::new(0, 1, 1, 0), &last));
        gens.push(&times(Monomial::new(0, 0, 1, 0), &first) + &times(Monomial::new(0, 0, 0, 1), &first));
        let with_extra = different_hf_from_generators(&d.scheme, &gens, rows, cols).unwrap();
        assert_eq!(with_extra.data(), d.hf(rows, cols).data(), "{y:?}");
    }
}

/// `HF_ϑ` from every monomial multiple of every minor, without reusing
/// lower bidegrees.
fn theta_by_products(d: &Different, rows: usize, cols: usize) -> Vec<Vec<i64>> {
    (0..rows as i64)
        .map(|i| {
            (0..cols as i64)
                .map(|j| {
                    let deg = BiDegree::new(i, j);
                    let conditions = condition_rows(&d.scheme, deg);
                    let images: Vec<_> = d
                        .minors
                        .iter()
                        .filter_map(|f| f.bidegree().filter(|e| e.precedes(deg)).map(|e| (f, e)))
                        .flat_map(|(f, e)| monomial_basis(deg - e).into_iter().map(move |m| times(m, f)))
                        .map(|p| {
                            let v = integer_coefficients(&p, deg);
                            conditions.iter().map(|r| r.iter().zip(&v).map(|(a, b)| a * b).sum()).collect()
                        })
                        .collect();
                    integer_rank(images, conditions.len()) as i64
                })
                .collect()
        })
        .collect()
}

#[test]
fn different_matches_products_of_minors() {
    let mut r = rng(23);
    for _ in 0..6 {
        let y = random_acm(&mut r, 4, 1..=2, |_| true);
        let d = Different::new(&y).unwrap();
        assert_eq!(d.hf(5, 5).data(), &theta_by_products(&d, 5, 5), "{y:?}");
    }
}

#[test]
fn different_is_monotone() {
    let mut r = rng(24);
    for _ in 0..10 {
        let y = random_acm(&mut r, 5, 1..=2, |_| true);
        let (rows, cols) = default_window(&y);
        let h = Different::new(&y).unwrap().hf(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                assert!(h.at(i as i64 - 1, j as i64) <= h.get(i, j), "{y:?} at ({i},{j})");
                assert!(h.at(i as i64, j as i64 - 1) <= h.get(i, j), "{y:?} at ({i},{j})");
            }
        }
    }
}

#[test]
fn removing_a_point_matches_direct_computation() {
    let mut r = rng(25);
    for _ in 0..20 {
        let x = random_scheme(&mut r, 6, 1);
        let (rows, cols) = default_window(&x);
        for k in 0..x.len() {
            let formula = hf_remove_point(&x, k, rows, cols).unwrap();
            let direct = hf_remove_point_direct(&x, k, rows, cols).unwrap();
            assert_eq!(formula.data(), direct.data(), "{x:?} without {k}");
        }
    }
}

#[test]
fn different_criterion_detects_cayley_bacharach() {
    let mut r = rng(26);
    for _ in 0..10 {
        let x = random_acm(&mut r, 6, 1..=1, |_| true);
        assert_eq!(cbp_different_criterion(&x).unwrap(), is_cbp(&x).unwrap(), "{x:?}");
    }
}

#[test]
fn different_of_reduced_points_vanishes_low_and_fills_up() {
    let mut r = rng(27);
    for _ in 0..8 {
        let x = random_acm(&mut r, 6, 1..=1, |_| true);
        let t = tuples(&x);
        let (rr, tt) = (t.r as usize, t.t as usize);
        let (rows, cols) = (2 * rr + 1, 2 * tt + 1);
        let h = Different::new(&x).unwrap().hf(rows, cols);
        if rr >= 2 {
            assert!((0..tt.saturating_sub(1)).all(|j| h.get(0, j) == 0), "{x:?}");
        }
        if tt >= 2 {
            assert!((0..rr.saturating_sub(1)).all(|i| h.get(i, 0) == 0), "{x:?}");
        }
        for i in 2 * rr - 2..rows {
            for j in 2 * tt - 2..cols {
                assert_eq!(h.get(i, j), x.len() as i64, "{x:?} at ({i},{j})");
            }
        }
    }
}

#[test]
fn different_growth_persists_past_generator_degrees() {
    let mut r = rng(28);
    for _ in 0..8 {
        let x = random_acm(&mut r, 6, 1..=1, |_| true);
        let d = Different::new(&x).unwrap();
        let gens = d.generator_degrees().unwrap();
        let (rows, cols) = default_window(&x);
        let h = d.hf(rows + 2, cols);
        for j in 0..cols {
            let i0 = gens.iter().filter(|g| g.j <= j as i64).map(|g| g.i as usize).max().unwrap_or(0);
            for i in i0..rows {
                if h.get(i, j) == h.get(i + 1, j) {
                    assert_eq!(h.get(i + 1, j), h.get(i + 2, j), "{x:?} at ({i},{j})");
                }
            }
        }
    }
}
