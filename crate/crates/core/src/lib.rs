//! Domination polynomials of graphs: exact enumeration, closed forms for
//! joins, coronas and clique cover products, irrelevant-edge reduction, and
//! exhaustive D-equivalence classes of small graphs.

pub mod cli;
pub mod domsets;
pub mod equiv;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod poly;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use graph::{CliqueCover, Graph};
pub use poly::DominationPolynomial;
