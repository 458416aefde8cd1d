//! Linear syzygy graphs of squarefree monomial ideals.
//!
//! Generators are indexed from 0 in the API and from 1 in text output;
//! variables are always 1-based.

pub mod caps;
pub mod check;
pub mod complex;
pub mod error;
pub mod field;
pub mod generators;
pub mod graph;
pub mod homology;
pub mod linalg;
pub mod monomial;
pub mod oracle;
pub mod structure;
pub mod text;
pub mod verify;

pub use caps::Caps;
pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use field::FieldSpec;
pub use graph::{GraphShape, SyzygyGraph};
pub use monomial::{MonomialIdeal, SqfMonomial};
pub use oracle::BettiTable;
