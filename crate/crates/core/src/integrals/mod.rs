//! Polynomial-in-momenta integrals of geodesic flows.

pub mod jets;
pub mod metric;
pub mod momentum;

pub use jets::{determining_system, integral_dimension, integral_dimension_report, DeterminingSystem, IntegralReport};
pub use metric::{flat, linear_factor, warped_product, revolution, Metric};
pub use momentum::{geodesic_hamiltonian, poisson_bracket, MomentumPolynomial};
