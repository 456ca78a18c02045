//! Exact linear algebra over prime fields and the integers.

mod fp;
mod integer;

pub use fp::PrimeFieldMatrix;
pub use integer::{smith_normal_form, IntegerMatrix, SmithDecomposition};
