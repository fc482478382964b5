//! The braid group `B3`: exact equality through the reduced Burau
//! representation, and the finite quotient `B3 / <<s1^5>>`.
//!
//! Two 3-braids are 5-move equivalent as 3-tangles exactly when they agree in
//! the quotient, since a 5-move replaces `s_i^k` by `s_i^{k-5}` and `s2` is
//! conjugate to `s1`.

mod burau;
mod identities;
mod quotient;
pub mod todd_coxeter;

pub use crate::diagram::BraidWord;
pub use burau::{braid_equal, burau_image, LaurentMatrix2};
pub use identities::{parse_power_word, verify_braid_identities, IdentityReport, Relation, StepReport};
pub use quotient::{
    conjugacy_census, coxeter_quotient, quotient_image, shared_quotient, ConjugacyCensus, ConjugacyClass,
    QuotientGroup, COSET_CAP,
};
