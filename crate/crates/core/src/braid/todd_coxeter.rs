//! Coset enumeration over the trivial subgroup, HLT strategy.
//!
//! Columns: generator `g` acts through column `2g`, its inverse through `2g + 1`.
//! Relators are written in those column indices.

use crate::error::{Error, Result};

const NONE: usize = usize::MAX;

/// A completed coset table: `action[c][col]` for live cosets `0..order`,
/// coset 0 being the identity.
#[derive(Clone, Debug)]
pub struct CosetTable {
    pub order: usize,
    pub action: Vec<Vec<usize>>,
}

struct Enumerator {
    cols: usize,
    table: Vec<usize>,
    parent: Vec<usize>,
    cap: usize,
}

impl Enumerator {
    fn rows(&self) -> usize {
        self.parent.len()
    }

    fn get(&self, c: usize, x: usize) -> usize {
        self.table[c * self.cols + x]
    }

    fn set(&mut self, c: usize, x: usize, d: usize) {
        self.table[c * self.cols + x] = d;
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn rep(&mut self, mut c: usize) -> usize {
        while self.parent[c] != c {
            let up = self.parent[self.parent[c]];
            self.parent[c] = up;
            c = up;
        }
        c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<()> {
        if self.rows() >= self.cap {
            return Err(Error::EnumerationFailure(format!(
                "coset table exceeded {} rows",
                self.cap
            )));
        }
        let d = self.rows();
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.cols));
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(())
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (keep, kill) = (a.min(b), a.max(b));
            self.parent[kill] = keep;
            queue.push(kill);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let dead = queue[i];
            i += 1;
            for x in 0..self.cols {
                let d = self.get(dead, x);
                if d == NONE {
                    continue;
                }
                self.set(d, x ^ 1, NONE);
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mu_x = self.get(mu, x);
                if mu_x != NONE {
                    self.merge(nu, mu_x, &mut queue);
                } else {
                    let nu_inv = self.get(nu, x ^ 1);
                    if nu_inv != NONE {
                        self.merge(mu, nu_inv, &mut queue);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, x ^ 1, mu);
                    }
                }
            }
        }
    }

    /// Traces `rel` around coset `c` from both ends, defining cosets until it closes.
    fn scan_and_fill(&mut self, c: usize, rel: &[usize]) -> Result<()> {
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0, rel.len());
        loop {
            while i < j && self.get(f, rel[i]) != NONE {
                f = self.get(f, rel[i]);
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i && self.get(b, rel[j - 1] ^ 1) != NONE {
                b = self.get(b, rel[j - 1] ^ 1);
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, rel[i], b);
                self.set(b, rel[i] ^ 1, f);
                return Ok(());
            }
            self.define(f, rel[i])?;
        }
    }
}

/// Enumerates the group `< gens | relators >`, failing once `cap` rows have
/// been allocated.
pub fn enumerate_cosets(gens: usize, relators: &[Vec<usize>], cap: usize) -> Result<CosetTable> {
    let cols = 2 * gens;
    let mut e = Enumerator {
        cols,
        table: vec![NONE; cols],
        parent: vec![0],
        cap,
    };
    let mut c = 0;
    while c < e.rows() {
        for rel in relators {
            if !e.alive(c) {
                break;
            }
            e.scan_and_fill(c, rel)?;
        }
        for x in 0..cols {
            if e.alive(c) && e.get(c, x) == NONE {
                e.define(c, x)?;
            }
        }
        c += 1;
    }

    let live: Vec<usize> = (0..e.rows()).filter(|&c| e.alive(c)).collect();
    let mut index = vec![NONE; e.rows()];
    for (i, &c) in live.iter().enumerate() {
        index[c] = i;
    }
    let mut action = Vec::with_capacity(live.len());
    for &c in &live {
        let row = (0..cols)
            .map(|x| {
                let d = e.rep(e.get(c, x));
                index[d]
            })
            .collect();
        action.push(row);
    }
    Ok(CosetTable {
        order: live.len(),
        action,
    })
}
