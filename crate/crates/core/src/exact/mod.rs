//! Exact arithmetic substrate: rationals, dense matrices, univariate and
//! sparse multivariate polynomials. No floating point anywhere.

pub mod matrix;
pub mod poly;
pub mod rational;
pub mod smith;
pub mod tensor;
pub mod unipoly;

pub use matrix::{vec_ops, Matrix, ShapeError};
pub use poly::{cmp_monomials, mono_degree, mono_div, mono_divides, mono_lcm, mono_mul, Monomial, MonomialOrder, MultiPoly};
pub use rational::{format_rational, parse_rational, rat, rint, rone, rzero, Rational};
pub use smith::{invariant_factors, similar};
pub use tensor::Tensor3;
pub use unipoly::UniPoly;
