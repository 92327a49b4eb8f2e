//! Bigraded Hilbert functions of fat point schemes in P¹×P¹, of their
//! modules of Kähler differentials and of their Kähler differents.
//!
//! Every Hilbert function value is the rank of an exact rational matrix:
//! a form of bidegree `(i,j)` lies in `℘^m` exactly when, after moving the
//! point to `[1:0]×[1:0]`, its coefficients of low order in `X1, Y1` vanish.

pub mod different;
pub mod error;
pub mod hilbert;
pub mod ideal;
pub mod io;
pub mod kaehler;
pub mod linalg;
pub mod ring;
pub mod scheme;
pub mod separators;

pub use different::{
    jacobian_minors, kaehler_different_hf, minimal_generators, theta_stable_bounds, theta_stable_value, Different,
    GeneratorSet,
};
pub use error::{Error, Result};
pub use hilbert::{first_difference, HilbertMatrix, IntMatrix};
pub use ideal::{hf_ideal, DegreewiseIdeal, GeneratedIdeal};
pub use io::{parse_scheme, read_scheme, scheme_to_json, SchemeInput};
pub use kaehler::{
    delta_template_ci, hf_omega, hf_omega_aci, hf_omega_acm_thickening, hf_omega_closed, hf_omega_closed_entry,
    hf_omega_equi_ci, hf_omega_oracle, omega_report, omega_special_values, omega_stable_value, sequence_formula,
    Direction, OmegaReport, SpecialRule,
};
pub use linalg::{kernel_basis, rank_exact, span_dim, RationalMatrix};
pub use ring::{apply_change, evaluate, monomial_basis, BiDegree, BiPoly, LinearChange, Monomial, Var, Q};
pub use scheme::{
    acm_certificate, default_window, equimultiple, find_nzd_pair, grid_ci, hf, ideal_basis, ideal_dim, is_acm,
    point_conditions, thicken, tuples, FatPointScheme, NzdPair, PointP1P1, TupleBundle,
};
pub use separators::{
    cbp_different_criterion, degree_tuple_acm, hf_remove_point, hf_remove_point_direct, is_aci, is_cbp,
    is_cbp_by_deletion, is_cbp_by_separators, is_ci, is_separator, minimal_separators, separator_degrees, DegreeTuple,
};
