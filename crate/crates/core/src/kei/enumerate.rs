//! Enumeration of finitely presented Kei.
//!
//! A Kei generated by `g_0..g_{m-1}` carries the `m` involutions
//! `x -> x * g_k`, so it can be built like a coset table with one
//! involutive column per generator. Every element `y` is reached from a seed
//! by a path `g_i . j_1 ... j_r`, and right multiplication by `y` is the letter
//! sequence `j_r ... j_1 i j_1 ... j_r`. The engine grows the table in layers
//! and, between layers, traces to a fixpoint:
//!
//! * the presentation relations at the seeds,
//! * `x * y` being independent of the path chosen for `y`, at every `x`,
//! * `r_n(u, w)` for every pair of elements when an exponent is set.
//!
//! Traces fill single gaps and merge elements through a union-find; a total
//! table at a fixpoint is the presented Kei.

use serde::Serialize;

use crate::unionfind::UnionFind;

use super::presentation::{r_n_relation, KeiPresentation};
use super::table::FiniteKei;
use super::word::LeftNormedWord;

const NONE: usize = usize::MAX;

/// Result of an enumeration run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// The presented Kei, with the image of every presentation generator.
    Completed {
        kei: FiniteKei,
        generator_images: Vec<usize>,
    },
    /// The table needed more than `cap` rows (merged rows included).
    CapExceeded { cap: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationResult {
    pub outcome: Outcome,
    /// Number of element merges performed.
    pub deductions: usize,
    /// Largest number of live elements at any point.
    pub peak_elements: usize,
}

impl EnumerationResult {
    pub fn kei(&self) -> Option<&FiniteKei> {
        match &self.outcome {
            Outcome::Completed { kei, .. } => Some(kei),
            Outcome::CapExceeded { .. } => None,
        }
    }

    pub fn generator_images(&self) -> Option<&[usize]> {
        match &self.outcome {
            Outcome::Completed { generator_images, .. } => Some(generator_images),
            Outcome::CapExceeded { .. } => None,
        }
    }

    pub fn size(&self) -> Option<usize> {
        self.kei().map(FiniteKei::size)
    }

    pub fn is_completed(&self) -> bool {
        self.kei().is_some()
    }
}

/// JSON-facing summary of a run.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct EnumerationSummary {
    pub completed: bool,
    pub size: Option<usize>,
    pub cap: Option<usize>,
    pub deductions: usize,
    pub peak_elements: usize,
}

impl EnumerationResult {
    pub fn summary(&self) -> EnumerationSummary {
        EnumerationSummary {
            completed: self.is_completed(),
            size: self.size(),
            cap: match self.outcome {
                Outcome::CapExceeded { cap } => Some(cap),
                Outcome::Completed { .. } => None,
            },
            deductions: self.deductions,
            peak_elements: self.peak_elements,
        }
    }
}

/// A seed followed by right multiplications by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
struct PointWord {
    head: usize,
    ops: Vec<usize>,
}

impl PointWord {
    fn from_word(w: &LeftNormedWord) -> Self {
        let mut p = PointWord {
            head: w.letters()[0],
            ops: Vec::new(),
        };
        p.push_ops(&w.letters()[1..]);
        p
    }

    /// Appends letters, cancelling `x.k.k = x` and `g.g = g` at the seed.
    fn push_ops(&mut self, letters: &[usize]) {
        for &l in letters {
            if self.ops.last() == Some(&l) {
                self.ops.pop();
            } else if self.ops.is_empty() && l == self.head {
                continue;
            } else {
                self.ops.push(l);
            }
        }
    }

    /// Letters of right multiplication by this element.
    fn operator(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.ops.iter().rev().copied().collect();
        out.push(self.head);
        out.extend_from_slice(&self.ops);
        out
    }

    fn mentions(&self, g: usize) -> bool {
        self.head == g || self.ops.contains(&g)
    }

    fn substitute(&self, g: usize, by: &PointWord) -> PointWord {
        let mut out = if self.head == g {
            by.clone()
        } else {
            PointWord {
                head: self.head,
                ops: Vec::new(),
            }
        };
        let op = by.operator();
        for &l in &self.ops {
            if l == g {
                out.push_ops(&op);
            } else {
                out.push_ops(&[l]);
            }
        }
        out
    }

    fn remap(&self, map: &[usize]) -> PointWord {
        PointWord {
            head: map[self.head],
            ops: self.ops.iter().map(|&l| map[l]).collect(),
        }
    }
}

/// Presentation after eliminating generators defined by other generators.
struct Reduced {
    generators: usize,
    relations: Vec<(PointWord, PointWord)>,
    /// Every original generator as a word in the kept ones.
    images: Vec<PointWord>,
}

fn eliminate(p: &KeiPresentation) -> Reduced {
    let m = p.generator_count();
    let mut relations: Vec<(PointWord, PointWord)> = p
        .relations()
        .iter()
        .map(|(l, r)| (PointWord::from_word(l), PointWord::from_word(r)))
        .collect();
    let mut images: Vec<PointWord> = (0..m).map(|g| PointWord { head: g, ops: vec![] }).collect();
    let mut eliminated = vec![false; m];
    loop {
        relations.retain(|(l, r)| l != r);
        let found = relations.iter().enumerate().find_map(|(i, (l, r))| {
            if l.ops.is_empty() && !r.mentions(l.head) {
                Some((i, l.head, r.clone()))
            } else if r.ops.is_empty() && !l.mentions(r.head) {
                Some((i, r.head, l.clone()))
            } else {
                None
            }
        });
        let Some((i, g, by)) = found else { break };
        relations.remove(i);
        eliminated[g] = true;
        for (l, r) in relations.iter_mut() {
            *l = l.substitute(g, &by);
            *r = r.substitute(g, &by);
        }
        for img in images.iter_mut() {
            *img = img.substitute(g, &by);
        }
    }
    let mut map = vec![NONE; m];
    let mut next = 0;
    for g in 0..m {
        if !eliminated[g] {
            map[g] = next;
            next += 1;
        }
    }
    Reduced {
        generators: next,
        relations: relations.iter().map(|(l, r)| (l.remap(&map), r.remap(&map))).collect(),
        images: images.iter().map(|w| w.remap(&map)).collect(),
    }
}

struct Engine {
    m: usize,
    next: Vec<usize>,
    uf: UnionFind,
    seeds: Vec<usize>,
    queue: Vec<(usize, usize)>,
    live: usize,
    merges: usize,
    peak: usize,
}

/// Largest forest for which `pass` materializes all columns.
const COLUMN_LIMIT: usize = 6000;

struct Alt {
    y: usize,
    /// `Some(x)` for an edge `x . via = y`, `None` for the seed of generator `via`.
    from: Option<usize>,
    via: usize,
    letters: Vec<usize>,
}

struct Columns {
    index: Vec<usize>,
    nb: Vec<usize>,
    cols: Vec<usize>,
}

/// Breadth-first spanning forest from the seeds.
struct Forest {
    order: Vec<usize>,
    parent: Vec<(usize, usize)>,
    /// Right-multiplication letters for each element in `order` (indexed by id).
    operator: Vec<Vec<usize>>,
}

impl Engine {
    fn new(m: usize) -> Self {
        let mut e = Engine {
            m,
            next: Vec::new(),
            uf: UnionFind::new(0),
            seeds: Vec::new(),
            queue: Vec::new(),
            live: 0,
            merges: 0,
            peak: 0,
        };
        for k in 0..m {
            let s = e.new_element();
            e.set(s, k, s);
            e.seeds.push(s);
        }
        e
    }

    fn new_element(&mut self) -> usize {
        let id = self.uf.push();
        self.next.extend(std::iter::repeat_n(NONE, self.m));
        self.live += 1;
        self.peak = self.peak.max(self.live);
        id
    }

    #[inline]
    fn get(&mut self, x: usize, k: usize) -> Option<usize> {
        let e = self.next[x * self.m + k];
        if e == NONE {
            None
        } else {
            Some(self.uf.find(e))
        }
    }

    #[inline]
    fn set(&mut self, x: usize, k: usize, y: usize) {
        self.next[x * self.m + k] = y;
        self.next[y * self.m + k] = x;
    }

    fn coincide(&mut self, a: usize, b: usize) {
        self.queue.push((a, b));
        while let Some((a, b)) = self.queue.pop() {
            let Some((keep, kill)) = self.uf.union(a, b) else {
                continue;
            };
            self.merges += 1;
            self.live -= 1;
            for k in 0..self.m {
                let e = self.next[kill * self.m + k];
                if e == NONE {
                    continue;
                }
                self.next[kill * self.m + k] = NONE;
                let e = self.uf.find(e);
                match self.get(keep, k) {
                    None => self.set(keep, k, e),
                    Some(f) if f != e => self.queue.push((f, e)),
                    Some(_) => {}
                }
            }
        }
    }

    /// Traces `start . letters = end`, filling a single gap or merging the
    /// two ends. Returns whether the table changed.
    fn scan(&mut self, start: usize, letters: &[usize], end: usize) -> bool {
        let mut x = self.uf.find(start);
        let mut i = 0;
        while i < letters.len() {
            match self.get(x, letters[i]) {
                Some(y) => {
                    x = y;
                    i += 1;
                }
                None => break,
            }
        }
        let mut y = self.uf.find(end);
        let mut j = letters.len();
        while j > i {
            match self.get(y, letters[j - 1]) {
                Some(z) => {
                    y = z;
                    j -= 1;
                }
                None => break,
            }
        }
        if i == j {
            if x != y {
                self.coincide(x, y);
                return true;
            }
            false
        } else if j == i + 1 {
            self.set(x, letters[i], y);
            true
        } else {
            false
        }
    }

    fn forest(&mut self) -> Forest {
        let n = self.uf.len();
        let mut seen = vec![false; n];
        let mut parent = vec![(NONE, NONE); n];
        let mut operator: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut path: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut order = Vec::with_capacity(self.live);
        for k in 0..self.m {
            let s = self.uf.find(self.seeds[k]);
            if seen[s] {
                continue;
            }
            seen[s] = true;
            parent[s] = (NONE, k);
            operator[s] = vec![k];
            order.push(s);
        }
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for k in 0..self.m {
                if let Some(y) = self.get(x, k) {
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = (x, k);
                        let mut p = path[x].clone();
                        p.push(k);
                        let mut op: Vec<usize> = p.iter().rev().copied().collect();
                        op.push(operator[root_of(&parent, x)][0]);
                        op.extend_from_slice(&p);
                        path[y] = p;
                        operator[y] = op;
                        order.push(y);
                    }
                }
            }
        }
        Forest {
            order,
            parent,
            operator,
        }
    }

    /// Alternative operator words: right multiplication by `y` must also be
    /// the letters `w`, which come from a merged seed or a non-tree edge.
    fn alternatives(&mut self, f: &Forest) -> Vec<Alt> {
        let mut alts = Vec::new();
        for k in 0..self.m {
            let s = self.uf.find(self.seeds[k]);
            if f.parent[s] != (NONE, k) {
                alts.push(Alt {
                    y: s,
                    from: None,
                    via: k,
                    letters: vec![k],
                });
            }
        }
        for &x in &f.order {
            for k in 0..self.m {
                let Some(y) = self.get(x, k) else { continue };
                if y < x || f.parent[y] == (x, k) || f.parent[x] == (y, k) {
                    continue;
                }
                let mut w = vec![k];
                w.extend_from_slice(&f.operator[x]);
                w.push(k);
                alts.push(Alt {
                    y,
                    from: Some(x),
                    via: k,
                    letters: w,
                });
            }
        }
        alts
    }

    /// Right-multiplication columns over the forest order, or `None` when the
    /// table is too large to hold them. `cols[y * n + x]` is the index of
    /// `x * y`, `NONE` where the defining path runs into a gap.
    fn columns(&mut self, f: &Forest) -> Option<Columns> {
        let n = f.order.len();
        if n > COLUMN_LIMIT {
            return None;
        }
        let m = self.m;
        let mut index = vec![NONE; self.uf.len()];
        for (i, &x) in f.order.iter().enumerate() {
            index[x] = i;
        }
        let mut nb = vec![NONE; n * m];
        for (i, &x) in f.order.iter().enumerate() {
            for k in 0..m {
                if let Some(y) = self.get(x, k) {
                    nb[i * m + k] = index[y];
                }
            }
        }
        let mut cols = vec![NONE; n * n];
        for (yi, &y) in f.order.iter().enumerate() {
            let (p, j) = f.parent[y];
            if p == NONE {
                for xi in 0..n {
                    cols[yi * n + xi] = nb[xi * m + j];
                }
            } else {
                let pi = index[p];
                for xi in 0..n {
                    let a = nb[xi * m + j];
                    if a == NONE {
                        continue;
                    }
                    let b = cols[pi * n + a];
                    if b != NONE {
                        cols[yi * n + xi] = nb[b * m + j];
                    }
                }
            }
        }
        Some(Columns { index, nb, cols })
    }

    /// Merges `a` and `b` (forest indices) if they differ.
    fn agree(&mut self, f: &Forest, a: usize, b: usize) -> bool {
        let (a, b) = (self.uf.find(f.order[a]), self.uf.find(f.order[b]));
        if a != b {
            self.coincide(a, b);
            true
        } else {
            false
        }
    }

    fn is_total(&mut self) -> bool {
        let n = self.uf.len();
        (0..n).all(|x| self.uf.find(x) != x || (0..self.m).all(|k| self.next[x * self.m + k] != NONE))
    }

    /// One pass over every relation family. Column lookups decide most
    /// instances; letter traces handle the rest and fill single gaps.
    fn pass(&mut self, relations: &[(Vec<usize>, usize, usize)], burnside: Option<u32>) -> bool {
        let mut changed = false;
        for (letters, start, end) in relations {
            let (s, e) = (self.seeds[*start], self.seeds[*end]);
            changed |= self.scan(s, letters, e);
        }
        let f = self.forest();
        let alts = self.alternatives(&f);
        let cols = self.columns(&f);
        let n = f.order.len();
        let lookup = |y: usize, x: usize| match &cols {
            Some(c) if x != NONE => c.cols[y * n + x],
            _ => NONE,
        };
        for (yi, &y) in f.order.iter().enumerate() {
            let v = lookup(yi, yi);
            changed |= if v != NONE {
                self.agree(&f, v, yi)
            } else {
                self.scan(y, &f.operator[y], y)
            };
        }
        let mut buf = Vec::new();
        for alt in &alts {
            let yi = cols.as_ref().map_or(NONE, |c| c.index[alt.y]);
            let from = alt.from.and_then(|p| cols.as_ref().map(|c| c.index[p]));
            buf.clear();
            for (xi, &x) in f.order.iter().enumerate() {
                let tree = if yi == NONE { NONE } else { lookup(yi, xi) };
                let other = match (&cols, from) {
                    (Some(c), None) => c.nb[xi * self.m + alt.via],
                    (Some(c), Some(pi)) => {
                        let a = c.nb[xi * self.m + alt.via];
                        let b = if a == NONE { NONE } else { lookup(pi, a) };
                        if b == NONE {
                            NONE
                        } else {
                            c.nb[b * self.m + alt.via]
                        }
                    }
                    (None, _) => NONE,
                };
                if tree != NONE && other != NONE {
                    changed |= self.agree(&f, tree, other);
                } else {
                    if buf.is_empty() {
                        buf.extend_from_slice(&f.operator[alt.y]);
                        buf.extend_from_slice(&alt.letters);
                    }
                    changed |= self.scan(x, &buf, x);
                }
            }
        }
        if let Some(e) = burnside {
            let e = e as usize;
            for (ui, &u) in f.order.iter().enumerate() {
                for (wi, &w) in f.order.iter().enumerate() {
                    if u == w {
                        continue;
                    }
                    // odd: w . (W_u W_w ...) = u, even: u . (W_w W_u ...) = u
                    let (start, first, second) = if e % 2 == 1 { (wi, ui, wi) } else { (ui, wi, ui) };
                    let mut z = start;
                    for i in 0..e - 1 {
                        if z == NONE {
                            break;
                        }
                        z = lookup(if i % 2 == 0 { first } else { second }, z);
                    }
                    if z != NONE {
                        changed |= self.agree(&f, z, ui);
                        continue;
                    }
                    buf.clear();
                    for i in 0..e - 1 {
                        let v = f.order[if i % 2 == 0 { first } else { second }];
                        buf.extend_from_slice(&f.operator[v]);
                    }
                    changed |= self.scan(f.order[start], &buf, u);
                }
            }
        }
        changed
    }

    /// Defines up to `limit` missing entries, in breadth-first order.
    /// New elements get their own entries defined too, so one call can reach
    /// several layers deep.
    fn define(&mut self, limit: usize) -> usize {
        let mut queue = self.forest().order;
        let mut made = 0;
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for k in 0..self.m {
                if made == limit {
                    return made;
                }
                if self.get(x, k).is_none() {
                    let y = self.new_element();
                    self.set(x, k, y);
                    queue.push(y);
                    made += 1;
                }
            }
        }
        made
    }

    fn trace(&mut self, start: usize, letters: &[usize]) -> usize {
        let mut x = self.uf.find(start);
        for &l in letters {
            x = self.get(x, l).expect("table is total");
        }
        x
    }
}

fn root_of(parent: &[(usize, usize)], mut x: usize) -> usize {
    while parent[x].0 != NONE {
        x = parent[x].0;
    }
    x
}

/// Enumerates the Kei presented by `p`, giving up once `cap` table rows have
/// been allocated.
pub fn enumerate(p: &KeiPresentation, cap: usize) -> EnumerationResult {
    let reduced = eliminate(p);
    let mut engine = Engine::new(reduced.generators);
    let relations: Vec<(Vec<usize>, usize, usize)> = reduced
        .relations
        .iter()
        .map(|(l, r)| {
            let mut letters = l.ops.clone();
            letters.extend(r.ops.iter().rev());
            (letters, l.head, r.head)
        })
        .collect();
    let burnside = p.burnside();
    loop {
        while engine.pass(&relations, burnside) {}
        if engine.is_total() {
            break;
        }
        // rows are never reclaimed, so the cap bounds table space
        let room = cap.saturating_sub(engine.uf.len());
        if room == 0 {
            return EnumerationResult {
                outcome: Outcome::CapExceeded { cap },
                deductions: engine.merges,
                peak_elements: engine.peak,
            };
        }
        let batch = room.min(engine.live.max(engine.uf.len() / 2).max(32));
        engine.define(batch);
    }

    // compact in discovery order and read off the operation
    let forest = engine.forest();
    let mut ids: Vec<usize> = forest.order.clone();
    ids.sort_unstable();
    let mut index = vec![NONE; engine.uf.len()];
    for (i, &x) in ids.iter().enumerate() {
        index[x] = i;
    }
    let n = ids.len();
    let mut rows = vec![vec![0; n]; n];
    for (b, &y) in ids.iter().enumerate() {
        let op = forest.operator[y].clone();
        for (a, &x) in ids.iter().enumerate() {
            rows[a][b] = index[engine.trace(x, &op)];
        }
    }
    let kei = if n == 0 {
        FiniteKei::from_fn(0, |_, _| 0)
    } else {
        FiniteKei::from_rows(rows).expect("entries are in range")
    };
    let generator_images = reduced
        .images
        .iter()
        .map(|w| {
            let seed = engine.seeds[w.head];
            index[engine.trace(seed, &w.ops)]
        })
        .collect();
    EnumerationResult {
        outcome: Outcome::Completed { kei, generator_images },
        deductions: engine.merges,
        peak_elements: engine.peak,
    }
}

/// `BQ_n(L)`: the fundamental Kei of `d` with `r_n` imposed on all pairs.
pub fn burnside_kei(d: &crate::diagram::LinkDiagram, n: u32, cap: usize) -> EnumerationResult {
    enumerate(&super::presentation::fundamental_kei(d).with_burnside(n), cap)
}

/// Checks a completed table against a presentation: every relation under the
/// generator images, and `r_n(u, w)` for all ordered pairs.
pub fn satisfies(p: &KeiPresentation, kei: &FiniteKei, images: &[usize]) -> bool {
    let rel_ok = p
        .relations()
        .iter()
        .all(|(l, r)| l.eval(kei, images) == r.eval(kei, images));
    let burnside_ok = p.burnside().is_none_or(|n| {
        let (l, r) = r_n_relation(n);
        (0..kei.size()).all(|u| (0..kei.size()).all(|w| l.eval(kei, &[u, w]) == r.eval(kei, &[u, w])))
    });
    rel_ok && burnside_ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::corpus;
    use crate::kei::presentation::fundamental_kei;

    fn size(p: &KeiPresentation) -> usize {
        enumerate(p, 5000).size().expect("completes")
    }

    #[test]
    fn elimination_substitutes_operators() {
        // c = a*b turns x*c into x*b*a*b
        let w = PointWord { head: 0, ops: vec![2] };
        let c = PointWord { head: 0, ops: vec![1] };
        assert_eq!(w.substitute(2, &c).ops, vec![1, 0, 1]);
        // and g*g collapses at the seed
        let mut p = PointWord { head: 1, ops: vec![] };
        p.push_ops(&[1, 0, 0]);
        assert!(p.ops.is_empty());
    }

    #[test]
    fn elimination_of_trefoil() {
        let r = eliminate(&fundamental_kei(&corpus::get("3_1").unwrap()));
        assert_eq!(r.generators, 2);
        assert_eq!(r.images.len(), 3);
    }

    #[test]
    fn free_on_one_generator() {
        assert_eq!(size(&KeiPresentation::free(1)), 1);
        assert_eq!(size(&KeiPresentation::free(0)), 0);
    }

    #[test]
    fn small_quotients() {
        assert_eq!(size(&KeiPresentation::q(2, 2)), 2);
        assert_eq!(size(&KeiPresentation::q(2, 3)), 3);
        assert_eq!(size(&KeiPresentation::q(3, 2)), 3);
        assert_eq!(size(&KeiPresentation::q(2, 5)), 5);
    }

    #[test]
    fn knot_keis() {
        for (name, n) in [("3_1", 3), ("4_1", 5), ("unknot", 1)] {
            let p = fundamental_kei(&corpus::get(name).unwrap());
            let res = enumerate(&p, 5000);
            let k = res.kei().unwrap();
            assert_eq!(k.size(), n, "{name}");
            assert!(k.is_valid());
            assert!(satisfies(&p, k, res.generator_images().unwrap()));
        }
    }

    #[test]
    fn free_kei_hits_cap() {
        let res = enumerate(&KeiPresentation::free(2), 100);
        assert_eq!(res.outcome, Outcome::CapExceeded { cap: 100 });
    }

    #[test]
    fn deterministic() {
        let a = enumerate(&KeiPresentation::q(3, 3), 5000);
        let b = enumerate(&KeiPresentation::q(3, 3), 5000);
        assert_eq!(a, b);
    }
}
