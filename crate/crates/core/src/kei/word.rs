use std::fmt;

use crate::error::{Error, Result};

use super::table::FiniteKei;

/// `x1 * x2 * ... * xk`, read as `(...((x1*x2)*x3)...)*xk`. Letters are
/// generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeftNormedWord {
    letters: Vec<usize>,
}

impl LeftNormedWord {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Parse("a left-normed word needs at least one letter".into()));
        }
        Ok(LeftNormedWord { letters })
    }

    pub fn generator(g: usize) -> Self {
        LeftNormedWord { letters: vec![g] }
    }

    /// The alternating word of length `len` starting with `first`.
    pub fn alternating(first: usize, second: usize, len: usize) -> Self {
        assert!(len >= 1);
        let letters = (0..len).map(|i| if i % 2 == 0 { first } else { second }).collect();
        LeftNormedWord { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max_letter(&self) -> usize {
        *self.letters.iter().max().unwrap()
    }

    /// Renames letters through `map`.
    pub fn map_letters(&self, map: &[usize]) -> Self {
        LeftNormedWord {
            letters: self.letters.iter().map(|&l| map[l]).collect(),
        }
    }

    /// Value in `k` when generator `i` is sent to `images[i]`.
    pub fn eval(&self, k: &FiniteKei, images: &[usize]) -> usize {
        let mut v = images[self.letters[0]];
        for &l in &self.letters[1..] {
            v = k.op(v, images[l]);
        }
        v
    }

    /// Parses `a*b*a` style text against a list of generator names.
    pub fn parse(text: &str, names: &[String]) -> Result<Self> {
        let letters = text
            .split('*')
            .map(|t| {
                let t = t.trim();
                names
                    .iter()
                    .position(|n| n == t)
                    .ok_or_else(|| Error::Parse(format!("unknown generator {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(letters)
    }

    pub fn format(&self, names: &[String]) -> String {
        let parts: Vec<&str> = self.letters.iter().map(|&l| names[l].as_str()).collect();
        parts.join("*")
    }
}

impl fmt::Display for LeftNormedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| format!("x{l}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// The isomorphism from the free Kei on `a = 0`, `b = 1` onto the dihedral
/// Kei of the integers: `phi(a) = 0`, `phi(b) = 1`, `phi(w*l) = 2 phi(l) - phi(w)`.
pub fn phi_eval(w: &LeftNormedWord) -> Result<i64> {
    let value = |l: usize| match l {
        0 => Ok(0i64),
        1 => Ok(1i64),
        _ => Err(Error::Parse(format!("letter {l} is not a or b"))),
    };
    let mut v = value(w.letters[0])?;
    for &l in &w.letters[1..] {
        v = 2 * value(l)? - v;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> LeftNormedWord {
        let names = vec!["a".to_string(), "b".to_string()];
        LeftNormedWord::parse(s, &names).unwrap()
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi_eval(&w("a")).unwrap(), 0);
        assert_eq!(phi_eval(&w("b")).unwrap(), 1);
        assert_eq!(phi_eval(&w("a*b")).unwrap(), 2);
        assert_eq!(phi_eval(&w("b*a*b")).unwrap(), 3);
        assert_eq!(phi_eval(&w("a*b*a*b")).unwrap(), 4);
        assert_eq!(phi_eval(&w("b*a")).unwrap(), -1);
    }

    #[test]
    fn phi_rejects_third_letter() {
        assert!(phi_eval(&LeftNormedWord::new(vec![0, 2]).unwrap()).is_err());
    }

    #[test]
    fn empty_word_rejected() {
        assert!(LeftNormedWord::new(vec![]).is_err());
    }

    #[test]
    fn eval_in_dihedral() {
        // phi lands in Z; reducing mod 7 must agree with evaluation in R_7
        let k = FiniteKei::dihedral(7);
        for word in ["a*b*a*b", "b*a*b*a*b", "b*b*a"] {
            let x = w(word);
            let expect = phi_eval(&x).unwrap().rem_euclid(7) as usize;
            assert_eq!(x.eval(&k, &[0, 1]), expect, "{word}");
        }
    }

    #[test]
    fn format_round_trip() {
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let word = LeftNormedWord::parse("z * x*y", &names).unwrap();
        assert_eq!(word.letters(), &[2, 0, 1]);
        assert_eq!(word.format(&names), "z*x*y");
    }
}
