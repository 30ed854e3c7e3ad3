//! Exact dense linear algebra over cyclotomic fields.

mod algebra;
mod echelon;
mod mat;

pub use algebra::{algebra_closure, coordinates, jacobson_radical, MatAlgebra};
pub use echelon::{column_basis, complete_basis, independent_columns, kernel_basis, rank, rref, solve_linear, Echelon};
pub use mat::Mat;
