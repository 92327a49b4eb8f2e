//! Fixtures and seeded random schemes shared by the integration tests.
#![allow(dead_code)]

use fatpoints::ring::{q, qq};
use fatpoints::{is_acm, FatPointScheme, PointP1P1, Q};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `2P11 + 2P12 + P23 + P31 + 2P32` on the grid `[1:i]×[1:j]`.
pub fn mixed_scheme() -> FatPointScheme {
    FatPointScheme::from_grid(&[(1, 1, 2), (1, 2, 2), (2, 3, 1), (3, 1, 1), (3, 2, 2)]).unwrap()
}

/// The eight-point almost complete intersection with row tuple `(3,3,2)`.
pub fn aci8() -> FatPointScheme {
    let pts = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2)];
    FatPointScheme::from_grid(&pts.map(|(i, j)| (i, j, 1))).unwrap()
}

/// Reduced grid points with the given row lengths.
pub fn staircase(rows: &[i64]) -> FatPointScheme {
    let entries: Vec<_> =
        rows.iter().enumerate().flat_map(|(i, &n)| (1..=n).map(move |j| (i as i64 + 1, j, 1))).collect();
    FatPointScheme::from_grid(&entries).unwrap()
}

/// Small pairwise distinct points of P¹, including ones at infinity and with
/// fractional coordinates.
fn coordinate_pool() -> Vec<[Q; 2]> {
    let mut out: Vec<[Q; 2]> = (-2..=3).map(|a| [q(1), q(a)]).collect();
    out.push([q(0), q(1)]);
    out.push([q(1), qq(1, 2)]);
    out.push([q(1), qq(-2, 3)]);
    out
}

fn distinct_coordinates(rng: &mut TestRng, n: usize) -> Vec<[Q; 2]> {
    let mut pool = coordinate_pool();
    pool.shuffle(rng);
    pool.truncate(n);
    pool
}

/// Up to `max_points` points on random coordinates with multiplicities in
/// `1..=max_mult`.
pub fn random_scheme(rng: &mut TestRng, max_points: usize, max_mult: u32) -> FatPointScheme {
    let n = rng.gen_range(1..=max_points);
    let xs = distinct_coordinates(rng, 3.min(n));
    let ys = distinct_coordinates(rng, 3.min(n));
    let mut cells: Vec<(usize, usize)> = (0..xs.len()).flat_map(|a| (0..ys.len()).map(move |b| (a, b))).collect();
    cells.shuffle(rng);
    let entries = cells
        .into_iter()
        .take(n)
        .map(|(a, b)| (PointP1P1::new(xs[a].clone(), ys[b].clone()).unwrap(), rng.gen_range(1..=max_mult)))
        .collect();
    FatPointScheme::new(entries).unwrap()
}

/// A staircase support with row lengths non-increasing, at most
/// `max_points` points, on random coordinates.
pub fn random_staircase(rng: &mut TestRng, max_points: usize) -> FatPointScheme {
    let mut rows = Vec::new();
    let mut left = max_points;
    let mut width = rng.gen_range(1..=3.min(max_points));
    while left > 0 && width > 0 && rows.len() < 3 {
        let w = width.min(left);
        rows.push(w);
        left -= w;
        width = rng.gen_range(0..=w);
    }
    let xs = distinct_coordinates(rng, rows.len());
    let ys = distinct_coordinates(rng, rows[0]);
    let entries = rows
        .iter()
        .enumerate()
        .flat_map(|(a, &w)| (0..w).map(move |b| (a, b)))
        .map(|(a, b)| (PointP1P1::new(xs[a].clone(), ys[b].clone()).unwrap(), 1))
        .collect();
    FatPointScheme::new(entries).unwrap()
}

/// A random ACM scheme whose multiplicities satisfy `accept`, found by
/// drawing staircase supports and multiplicities until the certificate
/// succeeds.
pub fn random_acm(
    rng: &mut TestRng,
    max_points: usize,
    mults: std::ops::RangeInclusive<u32>,
    accept: impl Fn(&FatPointScheme) -> bool,
) -> FatPointScheme {
    loop {
        let support = random_staircase(rng, max_points);
        let entries = support.entries().iter().map(|(p, _)| (p.clone(), rng.gen_range(mults.clone()))).collect();
        let y = FatPointScheme::new(entries).unwrap();
        if accept(&y) && is_acm(&y) {
            return y;
        }
    }
}
