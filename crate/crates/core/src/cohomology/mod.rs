//! Hochschild and Leibniz cochains, the comparison maps between them, and the
//! cone and pushout complexes computing the cohomology of each bracketed variety.

mod cochains;
mod complex;
mod report;

pub use cochains::{
    alpha, alpha_prime, beta, beta_prime, cochain_dim, hochschild_coboundary, leibniz_coboundary, me_module,
    theta, theta_prime,
};
pub use complex::{
    build_complex, cohomology_dims, cohomology_table, restricted_h2, variety_shape, ChainMap, Col, Complex,
    DegreeRow, Ingredients, Kind, Shape, Slot, SlotPair,
};
pub(crate) use complex::require_variety;
pub use report::{cohomology_report, CohomologyReport};
