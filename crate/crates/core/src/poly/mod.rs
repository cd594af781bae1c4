//! Exact arithmetic: integer polynomials, cyclotomic fields and linear
//! algebra over `Q` and `Q(ζ_e)`.

mod cyclotomic;
mod int_poly;
mod matrix;

pub use cyclotomic::{eval_at_root, Cyclotomic, CyclotomicField};
pub use int_poly::{cyclotomic_poly, euler_phi, x_pow_minus_one, IntPolynomial};
pub use matrix::{CyclotomicMatrix, Field, Matrix, RationalMatrix};
