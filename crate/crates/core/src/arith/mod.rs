pub mod expfun;
pub mod field;
pub mod gcd;
pub mod linalg;
pub mod poly;
pub mod ratfun;
pub mod rational;

pub use expfun::ExpFunction;
pub use field::Field;
pub use linalg::{ExactMatrix, Echelon};
pub use poly::{Polynomial, VarSet};
pub use ratfun::RationalFunction;
pub use rational::Rational;
