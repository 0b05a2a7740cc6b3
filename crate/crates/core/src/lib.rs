//! Solutions, scores and axiom checks for coalitional rankings.
//!
//! A coalitional ranking is a weak order over multisets of coalitions; a
//! solution lifts it to a relation over individuals. The crate computes the
//! Borda-type scores, the inversion score and their hybrids exactly, checks
//! axioms on concrete instances, and fuzzes solutions against axioms with
//! deterministic, thread-count independent output.

pub mod axioms;
pub mod document;
pub mod error;
pub mod exec;
pub mod model;
pub mod oracles;
pub mod relation;
pub mod scores;
pub mod solutions;

pub use axioms::{AxiomId, AxiomInstance, GenParams, Verdict, Witness};
pub use error::{Error, Result};
pub use exec::Execution;
pub use model::{Coalition, CoalitionMultiset, CoalitionalRanking, Individual, Permutation};
pub use oracles::BordaType;
pub use relation::{PairwiseRelation, Tiers};
pub use scores::{Rational, ScoreMap};
pub use solutions::{SolutionId, TieOrder};
