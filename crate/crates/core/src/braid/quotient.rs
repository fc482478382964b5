use std::collections::VecDeque;
use std::sync::OnceLock;

use serde::Serialize;

use crate::diagram::BraidWord;
use crate::error::Result;
use crate::kei::FiniteGroup;

use super::burau::require_b3;
use super::todd_coxeter::enumerate_cosets;

/// Coset cap for the quotient enumeration.
pub const COSET_CAP: usize = 100_000;

/// Column order of the coset table: `s1, s1^-1, s2, s2^-1`.
const LETTERS: [i32; 4] = [1, -1, 2, -2];

fn column(letter: i32) -> usize {
    (letter.unsigned_abs() as usize - 1) * 2 + usize::from(letter < 0)
}

/// `B3 / <<s1^5>>` as a multiplication table. Element 0 is the identity.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    group: FiniteGroup,
    // action[e][col]: e times the letter of that column
    action: Vec<[usize; 4]>,
    words: Vec<BraidWord>,
}

impl QuotientGroup {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.group.mul(a, b)
    }

    pub fn inv(&self, a: usize) -> usize {
        self.group.inv(a)
    }

    /// Images of `s1` and `s2`.
    pub fn generators(&self) -> [usize; 2] {
        [self.action[0][column(1)], self.action[0][column(2)]]
    }

    /// A shortest word over `s1^{+-1}, s2^{+-1}` representing `e`.
    pub fn word(&self, e: usize) -> &BraidWord {
        &self.words[e]
    }

    /// Image of a 3-strand braid word.
    pub fn image(&self, w: &BraidWord) -> Result<usize> {
        require_b3(w)?;
        Ok(self.trace(0, w.letters()))
    }

    fn trace(&self, start: usize, letters: &[i32]) -> usize {
        letters.iter().fold(start, |e, &l| self.action[e][column(l)])
    }

    pub fn power(&self, e: usize, k: u64) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, e))
    }

    pub fn element_order(&self, e: usize) -> usize {
        let mut x = e;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, e);
            k += 1;
        }
        k
    }

    pub fn is_central(&self, e: usize) -> bool {
        self.generators().iter().all(|&g| self.mul(e, g) == self.mul(g, e))
    }

    /// Some `h` with `h^-1 a h = b`.
    pub fn conjugator(&self, a: usize, b: usize) -> Option<usize> {
        (0..self.order()).find(|&h| self.mul(self.mul(self.inv(h), a), h) == b)
    }
}

/// Builds the quotient by coset enumeration of `< s1, s2 | s1 s2 s1 = s2 s1 s2, s1^5 >`.
pub fn coxeter_quotient() -> Result<QuotientGroup> {
    let braid: Vec<usize> = [1, 2, 1, -2, -1, -2].iter().map(|&l| column(l)).collect();
    let fifth = vec![column(1); 5];
    let table = enumerate_cosets(2, &[braid, fifth], COSET_CAP)?;
    let n = table.order;
    let action: Vec<[usize; 4]> = table.action.iter().map(|r| [r[0], r[1], r[2], r[3]]).collect();

    // shortest words by breadth-first search from the identity
    let mut words: Vec<Option<BraidWord>> = vec![None; n];
    words[0] = Some(BraidWord::identity(3));
    let mut queue = VecDeque::from([0usize]);
    while let Some(e) = queue.pop_front() {
        for l in LETTERS {
            let f = action[e][column(l)];
            if words[f].is_none() {
                let mut letters = words[e].as_ref().unwrap().letters().to_vec();
                letters.push(l);
                words[f] = Some(BraidWord::new(3, letters).expect("valid letters"));
                queue.push_back(f);
            }
        }
    }
    let words: Vec<BraidWord> = words
        .into_iter()
        .map(|w| w.expect("coset table is connected"))
        .collect();

    let mut q = QuotientGroup {
        group: FiniteGroup::cyclic(1),
        action,
        words,
    };
    // right-regular action: a * b traces b's word from a
    let mut mult = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            mult[a * n + b] = q.trace(a, q.words[b].letters());
        }
    }
    q.group = FiniteGroup::from_parts(n, mult, 0);
    Ok(q)
}

/// A process-wide copy of [`coxeter_quotient`].
pub fn shared_quotient() -> &'static QuotientGroup {
    static Q: OnceLock<QuotientGroup> = OnceLock::new();
    Q.get_or_init(|| coxeter_quotient().expect("the quotient has 600 elements"))
}

/// Image of `w` in the shared quotient.
pub fn quotient_image(w: &BraidWord) -> Result<usize> {
    shared_quotient().image(w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    pub size: usize,
    pub element_order: usize,
    pub min_length: usize,
    /// A shortest representative, as signed generator indices.
    pub representative: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyCensus {
    pub group_order: usize,
    pub classes: Vec<ConjugacyClass>,
}

impl ConjugacyCensus {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn count_with_length_at_most(&self, k: usize) -> usize {
        self.classes.iter().filter(|c| c.min_length <= k).count()
    }
}

/// Conjugacy classes, each with the length of its shortest member. Classes
/// are sorted by that length, then by size.
pub fn conjugacy_census(g: &QuotientGroup) -> ConjugacyCensus {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = Vec::new();
        for h in 0..n {
            let y = g.mul(g.mul(g.inv(h), x), h);
            if class_of[y] == usize::MAX {
                class_of[y] = id;
                members.push(y);
            }
        }
        let best = *members.iter().min_by_key(|&&y| (g.word(y).len(), y)).unwrap();
        classes.push(ConjugacyClass {
            size: members.len(),
            element_order: g.element_order(x),
            min_length: g.word(best).len(),
            representative: g.word(best).to_string(),
        });
    }
    classes.sort_by(|a, b| (a.min_length, a.size, &a.representative).cmp(&(b.min_length, b.size, &b.representative)));
    ConjugacyCensus {
        group_order: n,
        classes,
    }
}
