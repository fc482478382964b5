/// Plain union-find with path halving. `union` keeps the smaller index as root,
/// which the enumerators rely on to keep the earliest-defined representative.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn push(&mut self) -> usize {
        let id = self.parent.len();
        self.parent.push(id);
        id
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `Some((kept, removed))` when two classes were joined.
    pub fn union(&mut self, a: usize, b: usize) -> Option<(usize, usize)> {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return None;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.parent[kill] = keep;
        Some((keep, kill))
    }

    /// Numbers the classes `0..k` in order of their smallest member and
    /// returns every element's class number together with `k`.
    pub fn dense_labels(&mut self) -> (Vec<usize>, usize) {
        let mut ids = vec![usize::MAX; self.len()];
        let mut next = 0;
        let labels = (0..self.len())
            .map(|x| {
                let r = self.find(x);
                if ids[r] == usize::MAX {
                    ids[r] = next;
                    next += 1;
                }
                ids[r]
            })
            .collect();
        (labels, next)
    }
}
