//! Exact genus-zero correlators for the vertex operator algebras `V_{J,r}`
//! attached to type-B Jordan algebras `J = C1 ⊕ h`.
//!
//! Correlators are computed two ways: from closed forms summed over
//! derangements and pairing diagrams ([`closed_form`]), and by brute-force
//! commutation in the induced Fock module ([`fock`]). [`verify`] compares
//! them coefficient by coefficient.

#![allow(clippy::needless_range_loop)]

pub mod closed_form;
pub mod combinatorics;
pub mod error;
pub mod fock;
pub mod jordan;
pub mod scalars;
pub mod series;
pub mod verify;

pub use closed_form::{CorrelatorTerm, PairSequence, SequenceFile, Var};
pub use combinatorics::{Derangement, Diagram, Endpoint, Sign, SignAssignment};
pub use error::{Error, ParseError, Result};
pub use fock::{FockModule, FockState, QuadElement, QuadGenerator};
pub use jordan::{BilinearSpace, TensorElement, Vector};
pub use scalars::{CentralPoly, Rational};
