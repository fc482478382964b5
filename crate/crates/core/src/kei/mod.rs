//! Involutive quandles (Kei): finite tables, presentations and enumeration.

mod enumerate;
mod group;
mod iso;
mod presentation;
mod table;
mod word;

pub use enumerate::{burnside_kei, enumerate, satisfies, EnumerationResult, EnumerationSummary, Outcome};
pub use group::FiniteGroup;
pub use iso::{fingerprint, generating_set, kei_isomorphic};
pub use presentation::{core_group_presentation, fundamental_kei, r_n_relation, GroupPresentation, KeiPresentation};
pub use table::{AxiomViolation, FiniteKei};
pub use word::{phi_eval, LeftNormedWord};
