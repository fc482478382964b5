//! The Kauffman bracket, the Jones polynomial, and exact evaluation of the
//! latter at `t = exp(i pi / 5)`, where `t^5 = -1`.
//!
//! Values live in `Z[zeta_20]` with `s = t^(1/2) = exp(i pi / 10)`. A 5-move
//! multiplies the Jones polynomial at this root by a unit, so a zero value
//! cannot be reached from a trivial link, all of which evaluate to powers of
//! the nonzero `-s - s^-1`. Every primitive 10th root `t` with `t^5 = -1` is a
//! Galois conjugate of this one, so the zero test does not depend on the choice.

mod bracket;
mod cyclotomic;

use serde::Serialize;

use crate::diagram::LinkDiagram;
use crate::error::Result;

pub use bracket::{in_t, jones, kauffman_bracket, MAX_BRACKET_CROSSINGS};
pub use cyclotomic::{eval_at_fifth_root, CyclotomicValue, GALOIS_EXPONENTS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FiveMoveVerdict {
    NotFiveMoveTrivializable,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiveMoveReport {
    pub value_coordinates: CyclotomicValue,
    pub value_complex: (f64, f64),
    pub is_zero: bool,
    pub verdict: FiveMoveVerdict,
}

/// Zero Jones value at `t = exp(i pi / 5)` proves the link is not 5-move
/// equivalent to any trivial link.
pub fn five_move_obstruction(d: &LinkDiagram) -> Result<FiveMoveReport> {
    let v = eval_at_fifth_root(&jones(d, &[])?);
    let is_zero = v.is_zero();
    Ok(FiveMoveReport {
        value_complex: v.to_complex(),
        value_coordinates: v,
        is_zero,
        verdict: if is_zero {
            FiveMoveVerdict::NotFiveMoveTrivializable
        } else {
            FiveMoveVerdict::Inconclusive
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::corpus;
    use crate::poly::LaurentPoly;

    #[test]
    fn verdicts() {
        let fig8 = five_move_obstruction(&corpus::get("4_1").unwrap()).unwrap();
        assert!(fig8.is_zero);
        assert_eq!(fig8.verdict, FiveMoveVerdict::NotFiveMoveTrivializable);
        for name in ["unknot", "3_1"] {
            let r = five_move_obstruction(&corpus::get(name).unwrap()).unwrap();
            assert_eq!(r.verdict, FiveMoveVerdict::Inconclusive, "{name}");
        }
    }

    #[test]
    fn trivial_links_are_nonzero() {
        let base = LaurentPoly::from_terms([(1, -1), (-1, -1)]);
        for m in 1..=5usize {
            let v = jones(&LinkDiagram::unlink(m), &[]).unwrap();
            assert_eq!(v, base.pow(m as u32 - 1));
            let value = eval_at_fifth_root(&v);
            assert!(!value.is_zero());
            for k in GALOIS_EXPONENTS {
                assert!(!value.galois(k).is_zero());
            }
        }
    }
}
