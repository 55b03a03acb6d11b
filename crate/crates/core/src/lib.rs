//! Monodromy toolkit for the Artin graph of the cubic threefold.
//!
//! * [`artin_graph`]: the comparability graph on `{0,1}^k`, chain and cycle checks.
//! * [`milnor_lattice`]: the intersection form on vanishing cycles and its
//!   nondegenerate quotient.
//! * [`symplectic_rep`]: transvections, relation checks and the quadratic refinement.
//! * [`curves`]: curve patterns on surfaces and exact minimal-genus search.

pub mod artin_graph;
pub mod cli;
pub mod curves;
pub mod linalg;
pub mod manifest;
pub mod milnor_lattice;
pub mod pipeline;
pub mod standard;
pub mod symplectic_rep;

mod error;

pub use error::{Error, Result};
