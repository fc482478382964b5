//! 2-tangles: rational tangle fractions, algebraic expression trees, their
//! closures as link diagrams, and a coloring obstruction to embedding.
//!
//! Ends are NW, NE, SW, SE. The 0-tangle joins NW-NE and SW-SE, the
//! infinity tangle NW-SW and NE-SE. The positive crossing `x+` has its
//! under-strand from SW to NE and fraction `+1`.

mod expr;
mod obstruction;
mod ports;
mod rational;

pub use expr::{apply_rational_move, Closure, TangleExpr};
pub use obstruction::{embedding_obstruction, EmbeddingReport, EmbeddingVerdict};
pub use ports::PortGraph;
pub use rational::{fraction_of_twists, twists_of_fraction, RationalTangle};
