//! Fixtures shared by the benchmarks in `benches/`.

use fatpoints::FatPointScheme;

/// `2P11 + 2P12 + P23 + P31 + 2P32` on the grid `[1:i]×[1:j]`.
pub fn mixed_scheme() -> FatPointScheme {
    FatPointScheme::from_grid(&[(1, 1, 2), (1, 2, 2), (2, 3, 1), (3, 1, 1), (3, 2, 2)]).expect("distinct points")
}

/// Eight reduced points with row lengths `(3, 3, 2)`.
pub fn aci8() -> FatPointScheme {
    let pts = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2)];
    FatPointScheme::from_grid(&pts.map(|(i, j)| (i, j, 1))).expect("distinct points")
}

/// A dense integer matrix with entries from a fixed linear congruential
/// sequence in `-50..50`.
pub fn dense_rows(rows: usize, cols: usize) -> Vec<Vec<i64>> {
    let mut state: u64 = 0x2545_f491_4f6c_dd1d;
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    state = state.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1_442_695_040_888_963_407);
                    ((state >> 33) % 100) as i64 - 50
                })
                .collect()
        })
        .collect()
}
