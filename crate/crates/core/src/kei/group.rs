use crate::error::{Error, Result};

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mult: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a multiplication table: closure, identity, inverses, associativity.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if rows.iter().any(|r| r.len() != order || r.iter().any(|&x| x >= order)) {
            return Err(Error::NotAGroup(
                "table is not square or has entries out of range".into(),
            ));
        }
        let mult: Vec<usize> = rows.into_iter().flatten().collect();
        let m = |a: usize, b: usize| mult[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverse = vec![0; order];
        for (x, slot) in inverse.iter_mut().enumerate() {
            *slot = (0..order)
                .find(|&y| m(x, y) == identity && m(y, x) == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {x} has no inverse")))?;
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::NotAGroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order,
            mult,
            identity,
            inverse,
        })
    }

    /// Trusted constructor for tables built by this crate.
    pub(crate) fn from_parts(order: usize, mult: Vec<usize>, identity: usize) -> Self {
        let mut inverse = vec![0; order];
        for x in 0..order {
            for y in 0..order {
                if mult[x * order + y] == identity {
                    inverse[x] = y;
                    break;
                }
            }
        }
        FiniteGroup {
            order,
            mult,
            identity,
            inverse,
        }
    }

    pub fn cyclic(n: usize) -> Self {
        let mult = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Self::from_parts(n, mult, 0)
    }

    /// Direct product; element `(g, h)` is `g * other.order() + h`.
    pub fn product(&self, other: &FiniteGroup) -> Self {
        let m = other.order;
        let order = self.order * m;
        let mut mult = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                mult.push(self.mul(a / m, b / m) * m + other.mul(a % m, b % m));
            }
        }
        Self::from_parts(order, mult, self.identity * m + other.identity)
    }

    /// The symmetric group on `k` letters, elements in lexicographic order of
    /// permutations; composition `(p * q)(i) = q(p(i))`.
    pub fn symmetric(k: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = vec![(0..k).collect()];
        // lexicographic enumeration via next_permutation
        loop {
            let mut p = perms.last().unwrap().clone();
            let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
                break;
            };
            let j = (i + 1..k).rev().find(|&j| p[j] > p[i]).unwrap();
            p.swap(i, j);
            p[i + 1..].reverse();
            perms.push(p);
        }
        let index = |p: &Vec<usize>| perms.binary_search(p).unwrap();
        let order = perms.len();
        let mut mult = Vec::with_capacity(order * order);
        for p in &perms {
            for q in &perms {
                let r: Vec<usize> = (0..k).map(|i| q[p[i]]).collect();
                mult.push(index(&r));
            }
        }
        Self::from_parts(order, mult, 0)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}
