use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

use super::group::FiniteGroup;

/// A finite Kei as a full operation table: `op(a, b) = a * b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteKei {
    size: usize,
    table: Vec<usize>,
}

/// A failed instance of one of the three Kei axioms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    /// 1: `a*a = a`, 2: `(a*b)*b = a`, 3: `(a*b)*c = (a*c)*(b*c)`.
    pub axiom: u8,
    pub elements: Vec<usize>,
}

impl FiniteKei {
    /// Wraps a table without checking the axioms. Entries must be in range.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::Parse("a Kei needs at least one element".into()));
        }
        let mut table = Vec::with_capacity(size * size);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != size {
                return Err(Error::Parse(format!(
                    "row {i} has {} entries, expected {size}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= size) {
                return Err(Error::Parse(format!("entry {bad} in row {i} is out of range")));
            }
            table.extend(row);
        }
        Ok(FiniteKei { size, table })
    }

    pub(crate) fn from_fn(size: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                table.push(f(a, b));
            }
        }
        FiniteKei { size, table }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    /// `Z_n` with `i * j = 2j - i mod n`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1);
        Self::from_fn(n, |i, j| (2 * j + n - i) % n)
    }

    /// The trivial Kei on `n` elements, `a * b = a`.
    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |a, _| a)
    }

    /// Core Kei of a group: `a * b = b a^-1 b`.
    pub fn core(g: &FiniteGroup) -> Self {
        Self::from_fn(g.order(), |a, b| g.mul(g.mul(b, g.inv(a)), b))
    }

    /// Coordinatewise product; element `(x, y)` is `x * other.size() + y`.
    pub fn product(&self, other: &FiniteKei) -> FiniteKei {
        let m = other.size;
        Self::from_fn(self.size * m, |a, b| self.op(a / m, b / m) * m + other.op(a % m, b % m))
    }

    /// Every violated axiom instance.
    pub fn check_axioms(&self) -> Vec<AxiomViolation> {
        let n = self.size;
        let mut out = Vec::new();
        for a in 0..n {
            if self.op(a, a) != a {
                out.push(AxiomViolation {
                    axiom: 1,
                    elements: vec![a],
                });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.op(self.op(a, b), b) != a {
                    out.push(AxiomViolation {
                        axiom: 2,
                        elements: vec![a, b],
                    });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    if self.op(ab, c) != self.op(self.op(a, c), self.op(b, c)) {
                        out.push(AxiomViolation {
                            axiom: 3,
                            elements: vec![a, b, c],
                        });
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.check_axioms().is_empty()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// Closure of `seeds` under the operation.
    pub fn subkei_generated(&self, seeds: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.size];
        let mut elems: Vec<usize> = Vec::new();
        for &s in seeds {
            if !inside[s] {
                inside[s] = true;
                elems.push(s);
            }
        }
        let mut grew = true;
        while grew {
            grew = false;
            let snapshot = elems.clone();
            for &a in &snapshot {
                for &b in &snapshot {
                    let c = self.op(a, b);
                    if !inside[c] {
                        inside[c] = true;
                        elems.push(c);
                        grew = true;
                    }
                }
            }
        }
        elems.sort_unstable();
        elems
    }

    /// Text form: the size on the first line, then one row per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.size);
        for row in self.table.chunks(self.size) {
            let parts: Vec<String> = row.iter().map(usize::to_string).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut nums = text.split_whitespace().map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("not a table entry: {t:?}")))
        });
        let size = nums.next().ok_or_else(|| Error::Parse("empty Kei table".into()))??;
        let entries = nums.collect::<Result<Vec<_>>>()?;
        if entries.len() != size * size {
            return Err(Error::Parse(format!(
                "expected {} entries for a Kei of size {size}, got {}",
                size * size,
                entries.len()
            )));
        }
        Self::from_rows(entries.chunks(size.max(1)).map(<[usize]>::to_vec).collect())
    }
}

impl fmt::Debug for FiniteKei {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteKei({}) {:?}", self.size, self.rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_formula() {
        let k = FiniteKei::dihedral(3);
        assert_eq!(k.op(1, 0), 2);
        assert_eq!(FiniteKei::dihedral(1).size(), 1);
    }

    #[test]
    fn dihedral_axioms() {
        for n in 1..=12 {
            assert!(FiniteKei::dihedral(n).check_axioms().is_empty(), "n = {n}");
        }
    }

    #[test]
    fn broken_idempotency() {
        let mut rows = FiniteKei::dihedral(3).rows();
        rows[0][0] = 1;
        let k = FiniteKei::from_rows(rows).unwrap();
        let v = k.check_axioms();
        assert!(v.contains(&AxiomViolation {
            axiom: 1,
            elements: vec![0]
        }));
    }

    #[test]
    fn broken_distributivity() {
        // Z_3 with the single entry 0*1 changed from 2 to 0
        let rows = vec![vec![0, 0, 1], vec![2, 1, 0], vec![1, 0, 2]];
        let k = FiniteKei::from_rows(rows).unwrap();
        let v = k.check_axioms();
        assert!(v.iter().any(|x| x.axiom == 3), "{v:?}");
    }

    #[test]
    fn core_of_cyclic_is_dihedral() {
        for n in 1..10 {
            let core = FiniteKei::core(&FiniteGroup::cyclic(n));
            assert_eq!(core, FiniteKei::dihedral(n));
        }
        assert_eq!(FiniteKei::core(&FiniteGroup::cyclic(1)).size(), 1);
    }

    #[test]
    fn core_of_s3() {
        let k = FiniteKei::core(&FiniteGroup::symmetric(3));
        assert_eq!(k.size(), 6);
        assert!(k.check_axioms().is_empty());
    }

    #[test]
    fn text_round_trip() {
        let k = FiniteKei::dihedral(5);
        assert_eq!(FiniteKei::parse_text(&k.to_text()).unwrap(), k);
        assert!(FiniteKei::parse_text("2\n0 1 1").is_err());
    }

    #[test]
    fn generated_subkei() {
        let k = FiniteKei::dihedral(6);
        assert_eq!(k.subkei_generated(&[0, 2]), vec![0, 2, 4]);
        assert_eq!(k.subkei_generated(&[0, 1]).len(), 6);
    }
}
