//! PBW normal forms in `U(gl(n)_t)` and matrix calculus over the algebra.

mod context;
mod element;
mod matrix;
pub(crate) mod rewrite;

pub use context::{
    bracket, default_degree_cap, e, set_default_degree_cap, AlgebraContext, GeneratorIndex, DEFAULT_DEGREE_CAP,
};
pub use element::{AlgebraElement, PbwMonomial};
pub use matrix::{
    adjoint_action, combine_powers, conjugate_element, elem_sym, elem_sym_all, matrix_poly_from_roots, matrix_power,
    matrix_power_opposite, matrix_powers, monic_coefficients, ScalarMatrix, SquareMatrixOverAlgebra, Variant,
};
