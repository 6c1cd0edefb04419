pub mod algebra;
pub mod presets;
pub mod spectrum;
pub mod invariants;
pub mod cohomology;
pub mod graded;

pub use algebra::{Element, JacobiResidual, LieAlgebra};
