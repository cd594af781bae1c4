//! Exact computation of graded Springer characters for Weyl groups, Green
//! polynomials of `GL_n` and their values at roots of unity, together with
//! checkers for the cyclic refinement of the induction theorem for Springer
//! representations.

pub mod error;
pub mod poly;
pub mod rootsys;
pub mod symfun;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
