//! Closed-form solvers for the start systems.

pub mod binomial;
pub mod primitive;

pub use binomial::{solve_binomial, BinomialSystem};
pub use primitive::{reduce_to_edge_monomials, solve_primitive};
