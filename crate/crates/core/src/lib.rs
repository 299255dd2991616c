//! Directed acyclic decomposition of Kuramoto oscillator networks.
//!
//! A Kuramoto network is turned into a Laurent polynomial system whose
//! support is the *adjacency polytope* `conv{e_i - e_j}`. Every facet of that
//! polytope induces a directed acyclic spanning subnetwork together with a
//! smaller "facet subsystem". The sum of the facet root counts bounds the
//! number of complex synchronization configurations, and a degeneration
//! homotopy carries the facet solutions to all solutions of the full system.
//!
//! The crate is organised bottom-up:
//!
//! * [`network`] — the network data model and the algebraic systems;
//! * [`polytope`] — exact facet enumeration, triangulation and volumes;
//! * [`facets`] — facet subnetworks, their topological checks and subsystems;
//! * [`solver`] — closed-form solvers for primitive and binomial systems;
//! * [`homotopy`] — path tracking and the full [`homotopy::solve_network`] pipeline;
//! * [`postprocess`] — deduplication, real and stability classification;
//! * [`cli`] — the command-line front end used by the `kuramoto-facets` binary.

pub mod cli;
pub mod error;
pub mod facets;
pub mod homotopy;
pub mod linalg;
pub mod network;
pub mod polytope;
pub mod postprocess;
pub mod solver;

pub use error::{Error, Result};
pub use num_complex::Complex64;
