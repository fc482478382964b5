use std::fmt;

use crate::error::{Error, Result};

/// A word in the braid group on `strands` strands. Letter `+i` is the generator
/// `s_i`, `-i` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Parse("a braid needs at least one strand".into()));
        }
        if let Some(&bad) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands)
        {
            return Err(Error::Parse(format!("letter {bad} is not a generator of B_{strands}")));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Parses whitespace-separated signed generator indices (`"1 1 2 -1"`).
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let letters = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("not a braid letter: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    /// Parses a word and takes the smallest strand count that fits (at least 2).
    pub fn parse_auto(text: &str) -> Result<Self> {
        let w = Self::parse(usize::MAX, text)?;
        let strands = w
            .letters
            .iter()
            .map(|l| l.unsigned_abs() as usize + 1)
            .max()
            .unwrap_or(2)
            .max(2);
        Self::new(strands, w.letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn pow(&self, k: usize) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.repeat(k),
        }
    }

    /// Integer power; negative exponents use the inverse word.
    pub fn zpow(&self, k: i64) -> BraidWord {
        if k >= 0 {
            self.pow(k as usize)
        } else {
            self.inverse().pow(k.unsigned_abs() as usize)
        }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| -l).collect(),
        }
    }

    /// Inserts `s_i^e` (|e| copies of the letter) before position `at`.
    pub fn insert_power(&self, at: usize, generator: i32, exponent: i32) -> BraidWord {
        let letter = if exponent >= 0 { generator } else { -generator };
        let mut letters = self.letters.clone();
        let block = std::iter::repeat_n(letter, exponent.unsigned_abs() as usize);
        letters.splice(at..at, block);
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// The half twist on three strands, `s1 s2 s1`.
    pub fn delta3() -> BraidWord {
        BraidWord {
            strands: 3,
            letters: vec![1, 2, 1],
        }
    }

    /// Image in the symmetric group: `perm[p]` is where the strand starting at
    /// position `p` ends up.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect(); // at[pos] = strand
        for l in &self.letters {
            let i = l.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    pub fn permutation_cycles(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for s in 0..perm.len() {
            if !seen[s] {
                cycles += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                }
            }
        }
        cycles
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(BraidWord::new(3, vec![1, -2]).is_ok());
        assert!(BraidWord::new(3, vec![3]).is_err());
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(BraidWord::parse(3, "1 x").is_err());
        assert_eq!(BraidWord::parse(3, "1 1 2 -1").unwrap().letters(), &[1, 1, 2, -1]);
        assert_eq!(BraidWord::parse_auto("1 -3").unwrap().strands(), 4);
        assert_eq!(BraidWord::parse_auto("").unwrap().strands(), 2);
    }

    #[test]
    fn permutations() {
        let w = BraidWord::new(3, vec![1, 2]).unwrap();
        assert_eq!(w.permutation_cycles(), 1);
        assert_eq!(w.pow(3).permutation_cycles(), 3);
        assert_eq!(BraidWord::delta3().permutation(), vec![2, 1, 0]);
    }

    #[test]
    fn insertion() {
        let w = BraidWord::new(3, vec![1, 2]).unwrap();
        assert_eq!(w.insert_power(1, 2, -3).letters(), &[1, -2, -2, -2, 2]);
        assert_eq!(w.inverse().letters(), &[-2, -1]);
        assert_eq!(w.zpow(-2).letters(), &[-2, -1, -2, -1]);
    }
}
