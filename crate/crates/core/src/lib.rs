//! Exact arithmetic for Brauer diagram categories.
//!
//! - [`diagram`]: m-n-diagrams, composition with loop counting, enumeration.
//! - [`algebra`]: rational linear combinations and the `p^k` product.
//! - [`term`]: terms of the free symmetric self-adjunction on one object,
//!   their links, and equality.
//! - [`matrix`], [`rep`]: exact matrices and the representation of diagrams
//!   and terms.
//! - [`verify`]: batch law checks, parallel when the `parallel` feature is on.

pub mod algebra;
pub mod diagram;
pub mod matrix;
pub mod par;
pub mod rational;
pub mod render;
pub mod rep;
pub mod term;
pub mod verify;

pub use algebra::{brauer_dimension, tl_dimension, AlgebraElement, LoopValue};
pub use diagram::{
    compose, compose_weighted, enumerate_diagrams, Diagram, Vertex, WeightedDiagram,
};
pub use matrix::{kron, orthogonal_check, rank_of_span, ExactMatrix};
pub use par::Execution;
pub use rational::Rational;
pub use rep::{
    commutant_check, faithfulness_report, invariant_term, rep_term, represent, represent_element,
    InvariantTerm,
};
pub use term::{parse, terms_equal, verify_axioms, CheckedTerm, Obj, Term};
