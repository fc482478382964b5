use std::fmt;
use std::ops::Mul;

use serde::Serialize;

use crate::diagram::BraidWord;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// A 2x2 matrix over `Z[t, t^-1]`, row major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentMatrix2 {
    pub entries: [[LaurentPoly; 2]; 2],
}

fn p(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

impl LaurentMatrix2 {
    pub fn identity() -> Self {
        LaurentMatrix2 {
            entries: [
                [LaurentPoly::one(), LaurentPoly::zero()],
                [LaurentPoly::zero(), LaurentPoly::one()],
            ],
        }
    }

    /// Reduced Burau image of `s_i^{+-1}` for `letter` in `{1, -1, 2, -2}`.
    pub fn generator(letter: i32) -> Self {
        let entries = match letter {
            1 => [[p(&[(1, -1)]), p(&[(0, 1)])], [p(&[]), p(&[(0, 1)])]],
            -1 => [[p(&[(-1, -1)]), p(&[(-1, 1)])], [p(&[]), p(&[(0, 1)])]],
            2 => [[p(&[(0, 1)]), p(&[])], [p(&[(1, 1)]), p(&[(1, -1)])]],
            -2 => [[p(&[(0, 1)]), p(&[])], [p(&[(0, 1)]), p(&[(-1, -1)])]],
            _ => panic!("{letter} is not a generator of B3"),
        };
        LaurentMatrix2 { entries }
    }

    pub fn determinant(&self) -> LaurentPoly {
        let [[a, b], [c, d]] = &self.entries;
        &(a * d) - &(b * c)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// `self * other - other * self == 0`.
    pub fn commutes_with(&self, other: &LaurentMatrix2) -> bool {
        self * other == other * self
    }
}

impl Mul for &LaurentMatrix2 {
    type Output = LaurentMatrix2;

    fn mul(self, rhs: &LaurentMatrix2) -> LaurentMatrix2 {
        let a = &self.entries;
        let b = &rhs.entries;
        let cell = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        LaurentMatrix2 {
            entries: [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]],
        }
    }
}

impl fmt::Debug for LaurentMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            e[0][0].format_in("t"),
            e[0][1].format_in("t"),
            e[1][0].format_in("t"),
            e[1][1].format_in("t")
        )
    }
}

impl Serialize for LaurentMatrix2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x.format_in("t")).collect())
            .collect();
        rows.serialize(s)
    }
}

pub(crate) fn require_b3(w: &BraidWord) -> Result<()> {
    if w.strands() != 3 {
        return Err(Error::UnsupportedStrandCount(w.strands()));
    }
    Ok(())
}

/// The reduced Burau matrix of a 3-strand braid. Faithful on `B3`, so two
/// words are equal braids iff their images agree.
pub fn burau_image(w: &BraidWord) -> Result<LaurentMatrix2> {
    require_b3(w)?;
    let gens: Vec<LaurentMatrix2> = [1, -1, 2, -2].iter().map(|&l| LaurentMatrix2::generator(l)).collect();
    let idx = |l: i32| match l {
        1 => 0,
        -1 => 1,
        2 => 2,
        _ => 3,
    };
    let mut m = LaurentMatrix2::identity();
    for &l in w.letters() {
        m = &m * &gens[idx(l)];
    }
    Ok(m)
}

/// Exact equality in `B3`.
pub fn braid_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    Ok(burau_image(u)? == burau_image(v)?)
}
