//! Invariants for studying rational-move equivalence of links.
//!
//! The crate covers five families of computation, all exact:
//!
//! * [`diagram`]: unoriented PD-code diagrams, braid closures and the embedded corpus.
//! * [`coloring`]: the group of Fox `n`-colorings via Smith normal form.
//! * [`kei`]: finite involutive quandles (Kei), their presentations, and a
//!   congruence-closure enumerator for finitely presented Kei and Burnside quotients.
//! * [`braid`]: the reduced Burau representation of `B3`, the finite quotient
//!   `B3 / <<s1^5>>` by coset enumeration, and its conjugacy census.
//! * [`tangle`]: rational tangle arithmetic, algebraic tangle expressions and
//!   the coloring-based embedding obstruction.
//! * [`jones`]: the Kauffman bracket and exact evaluation of the Jones polynomial
//!   at `t = exp(i*pi/5)`.

pub mod braid;
pub mod coloring;
pub mod diagram;
pub mod error;
pub mod jones;
pub mod kei;
pub mod poly;
pub mod random;
pub mod suite;
pub mod tangle;
mod unionfind;

pub use braid::{LaurentMatrix2, QuotientGroup};
pub use coloring::{AbelianGroupStructure, ColoringMatrix};
pub use diagram::{BraidWord, LinkDiagram};
pub use error::{Error, Result};
pub use jones::CyclotomicValue;
pub use kei::{EnumerationResult, FiniteGroup, FiniteKei, KeiPresentation, LeftNormedWord};
pub use poly::LaurentPoly;
pub use tangle::{RationalTangle, TangleExpr};

/// Default element cap for Kei enumeration.
pub const DEFAULT_KEI_CAP: usize = 20_000;
