//! Edge ideals and Stanley–Reisner rings: graded Betti numbers through
//! Hochster's formula, combinatorial closed forms to check them against, and
//! classifiers for vertex decomposability, shellability and the
//! (sequentially) Cohen–Macaulay property.
//!
//! All Betti tables are stored for the quotient ring `S/I`, so `β_{0,0} = 1`.

pub mod classify;
pub mod complex;
pub mod error;
pub mod formulas;
pub mod genfun;
pub mod graph;
pub mod hochster;
pub mod homology;
pub mod linalg;
pub mod random;
pub mod verify;
pub mod vertex_set;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use graph::{Chordality, Graph, Partition};
pub use hochster::{
    betti_table, betti_table_component_ideal, betti_table_graph, BettiOptions, BettiTable,
    ResolutionSummary,
};
pub use homology::HomologyProfile;
pub use linalg::FieldSpec;
pub use vertex_set::VertexSet;
