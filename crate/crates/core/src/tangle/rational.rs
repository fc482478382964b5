use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// A rational tangle: its fraction `p/q` (reduced, `q >= 0`, infinity stored
/// as `1/0`) and a twist word realizing it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalTangle {
    p: BigInt,
    q: BigInt,
    twists: Vec<i64>,
}

fn normalize(p: BigInt, q: BigInt) -> (BigInt, BigInt) {
    if q.is_zero() {
        return (BigInt::one(), BigInt::zero());
    }
    let g = p.gcd(&q);
    let (mut p, mut q) = (p / &g, q / &g);
    if q.is_negative() {
        p = -p;
        q = -q;
    }
    (p, q)
}

/// Continued-fraction value of a twist word: `a_k + 1/(a_{k-1} + ... + 1/a_1)`.
/// The empty word is the 0-tangle.
pub fn fraction_of_twists(tw: &[i64]) -> RationalTangle {
    let (mut p, mut q) = (BigInt::zero(), BigInt::one());
    if let Some((&first, rest)) = tw.split_first() {
        p = BigInt::from(first);
        for &a in rest {
            let next = BigInt::from(a) * &p + &q;
            q = std::mem::replace(&mut p, next);
        }
    }
    let (p, q) = normalize(p, q);
    RationalTangle {
        p,
        q,
        twists: tw.to_vec(),
    }
}

/// A twist word for `p/q` from the floor continued fraction. `q = 0` gives infinity.
pub fn twists_of_fraction(p: &BigInt, q: &BigInt) -> Vec<i64> {
    let (p, q) = normalize(p.clone(), q.clone());
    if q.is_zero() {
        return vec![0, 0];
    }
    if p.is_zero() {
        return Vec::new();
    }
    // p/q = c0 + 1/(c1 + 1/(...)); the twist word lists the terms innermost first
    let (mut num, mut den) = (p, q);
    let mut terms = Vec::new();
    while !den.is_zero() {
        let (c, r) = num.div_mod_floor(&den);
        terms.push(i64::try_from(c).expect("continued fraction term fits in i64"));
        num = std::mem::replace(&mut den, r);
    }
    terms.reverse();
    terms
}

impl RationalTangle {
    pub fn from_fraction(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        let (p, q) = normalize(p.into(), q.into());
        let twists = twists_of_fraction(&p, &q);
        RationalTangle { p, q, twists }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.p
    }

    pub fn denominator(&self) -> &BigInt {
        &self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q.is_zero()
    }

    pub fn twist_word(&self) -> &[i64] {
        &self.twists
    }

    /// Quarter-turn rotation: `p/q` becomes `-q/p`.
    pub fn rotate(&self) -> Self {
        Self::from_fraction(-self.q.clone(), self.p.clone())
    }

    /// Mirror image: `p/q` becomes `-p/q`.
    pub fn mirror(&self) -> Self {
        RationalTangle {
            p: if self.q.is_zero() {
                self.p.clone()
            } else {
                -self.p.clone()
            },
            q: self.q.clone(),
            twists: self.twists.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for RationalTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            write!(f, "inf")
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl Serialize for RationalTangle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RationalTangle", 2)?;
        st.serialize_field("fraction", &self.to_string())?;
        st.serialize_field("twist_word", &self.twists)?;
        st.end()
    }
}
