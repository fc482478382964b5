//! Tangle diagrams as port graphs.
//!
//! Vertices are crossing slots (`4c + k`, slots counterclockwise, 0 and 2 on
//! the under-strand) followed by the boundary points. `mate` is the perfect
//! matching given by the strands. Crossing-free closed strands are counted in
//! `loops`.

use num_bigint::BigInt;

use crate::coloring::{kernel_mod, AbelianGroupStructure};
use crate::diagram::LinkDiagram;
use crate::unionfind::UnionFind;

pub const NW: usize = 0;
pub const NE: usize = 1;
pub const SW: usize = 2;
pub const SE: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PortGraph {
    crossings: usize,
    ends: usize,
    mate: Vec<usize>,
    loops: usize,
}

impl PortGraph {
    fn end(&self, e: usize) -> usize {
        4 * self.crossings + e
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings
    }

    pub fn loops(&self) -> usize {
        self.loops
    }

    fn arcs(pairs: &[(usize, usize)]) -> PortGraph {
        let mut mate = vec![usize::MAX; 4];
        for &(a, b) in pairs {
            mate[a] = b;
            mate[b] = a;
        }
        PortGraph {
            crossings: 0,
            ends: 4,
            mate,
            loops: 0,
        }
    }

    pub fn zero() -> PortGraph {
        Self::arcs(&[(NW, NE), (SW, SE)])
    }

    pub fn infinity() -> PortGraph {
        Self::arcs(&[(NW, SW), (NE, SE)])
    }

    /// One crossing whose under-strand runs SW to NE.
    pub fn positive_crossing() -> PortGraph {
        // slots counterclockwise from SW: SW, SE, NE, NW
        let mut mate = vec![0; 8];
        for (slot, end) in [SW, SE, NE, NW].into_iter().enumerate() {
            mate[slot] = 4 + end;
            mate[4 + end] = slot;
        }
        PortGraph {
            crossings: 1,
            ends: 4,
            mate,
            loops: 0,
        }
    }

    pub fn negative_crossing() -> PortGraph {
        Self::positive_crossing().mirror()
    }

    /// Renames vertices through `perm` (old id to new id).
    fn permute(&self, perm: &[usize]) -> PortGraph {
        let mut mate = vec![0; self.mate.len()];
        for (v, &m) in self.mate.iter().enumerate() {
            mate[perm[v]] = perm[m];
        }
        PortGraph { mate, ..self.clone() }
    }

    /// Switches every crossing: slot `k` moves to position `k - 1`.
    pub fn mirror(&self) -> PortGraph {
        let n = self.mate.len();
        let perm: Vec<usize> = (0..n)
            .map(|v| {
                if v < 4 * self.crossings {
                    4 * (v / 4) + (v % 4 + 3) % 4
                } else {
                    v
                }
            })
            .collect();
        self.permute(&perm)
    }

    /// Quarter turn counterclockwise: the point at NW moves to SW, SW to SE,
    /// SE to NE and NE to NW.
    pub fn rotate(&self) -> PortGraph {
        assert_eq!(self.ends, 4);
        let base = 4 * self.crossings;
        let mut perm: Vec<usize> = (0..self.mate.len()).collect();
        perm[base + NW] = base + SW;
        perm[base + SW] = base + SE;
        perm[base + SE] = base + NE;
        perm[base + NE] = base + NW;
        self.permute(&perm)
    }

    /// Joins strands through pairs of boundary points. `glue` pairs up
    /// vertices of the combined graph, `keep` lists the surviving boundary
    /// points in their new order.
    fn glue(crossings: usize, mate: &[usize], glue: &[(usize, usize)], keep: &[usize], loops: usize) -> PortGraph {
        let n = mate.len();
        let mut partner = vec![usize::MAX; n];
        for &(a, b) in glue {
            partner[a] = b;
            partner[b] = a;
        }
        let mut new_id: Vec<usize> = (0..4 * crossings).collect();
        new_id.resize(n, usize::MAX);
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = 4 * crossings + i;
        }
        let mut visited = vec![false; n];
        let mut out = vec![usize::MAX; 4 * crossings + keep.len()];
        for v in 0..n {
            if new_id[v] == usize::MAX {
                continue;
            }
            let mut u = mate[v];
            while partner[u] != usize::MAX {
                visited[u] = true;
                let w = partner[u];
                visited[w] = true;
                u = mate[w];
            }
            out[new_id[v]] = new_id[u];
        }
        // glued points not reached from a surviving vertex lie on closed loops
        let mut extra = 0;
        for v in 0..n {
            if partner[v] != usize::MAX && !visited[v] {
                extra += 1;
                let mut u = v;
                while !visited[u] {
                    visited[u] = true;
                    let w = mate[u];
                    visited[w] = true;
                    u = partner[w];
                }
            }
        }
        PortGraph {
            crossings,
            ends: keep.len(),
            mate: out,
            loops: loops + extra,
        }
    }

    /// Horizontal composition: `self` on the left, `right` on the right.
    pub fn compose(&self, right: &PortGraph) -> PortGraph {
        assert!(self.ends == 4 && right.ends == 4);
        let (ca, cb) = (self.crossings, right.crossings);
        let c = ca + cb;
        // combined ids: A slots, B slots, A ends, B ends
        let a_id = |v: usize| if v < 4 * ca { v } else { 4 * c + (v - 4 * ca) };
        let b_id = |v: usize| {
            if v < 4 * cb {
                4 * ca + v
            } else {
                4 * c + 4 + (v - 4 * cb)
            }
        };
        let mut mate = vec![0; 4 * c + 8];
        for (v, &m) in self.mate.iter().enumerate() {
            mate[a_id(v)] = a_id(m);
        }
        for (v, &m) in right.mate.iter().enumerate() {
            mate[b_id(v)] = b_id(m);
        }
        let (ae, be) = (4 * c, 4 * c + 4);
        Self::glue(
            c,
            &mate,
            &[(ae + NE, be + NW), (ae + SE, be + SW)],
            &[ae + NW, be + NE, ae + SW, be + SE],
            self.loops + right.loops,
        )
    }

    /// Closes the four ends: numerator joins NW-NE and SW-SE, denominator
    /// joins NW-SW and NE-SE.
    pub fn closure(&self, numerator: bool) -> LinkDiagram {
        let pairs = if numerator {
            [(self.end(NW), self.end(NE)), (self.end(SW), self.end(SE))]
        } else {
            [(self.end(NW), self.end(SW)), (self.end(NE), self.end(SE))]
        };
        let closed = Self::glue(self.crossings, &self.mate, &pairs, &[], self.loops);
        closed.to_diagram()
    }

    fn to_diagram(&self) -> LinkDiagram {
        debug_assert_eq!(self.ends, 0);
        let mut label = vec![usize::MAX; self.mate.len()];
        let mut next = 0;
        for v in 0..self.mate.len() {
            if label[v] == usize::MAX {
                label[v] = next;
                label[self.mate[v]] = next;
                next += 1;
            }
        }
        let crossings = (0..self.crossings)
            .map(|c| [label[4 * c], label[4 * c + 1], label[4 * c + 2], label[4 * c + 3]])
            .collect();
        LinkDiagram::from_dense(crossings, self.loops).expect("closed port graph is a valid diagram")
    }

    /// Fox arcs of the open tangle: returns the arc of every vertex and the
    /// arc count (loops excluded).
    fn fox_arcs(&self) -> (Vec<usize>, usize) {
        let n = self.mate.len();
        let mut uf = UnionFind::new(n);
        for v in 0..n {
            uf.union(v, self.mate[v]);
        }
        for c in 0..self.crossings {
            uf.union(4 * c + 1, 4 * c + 3);
        }
        uf.dense_labels()
    }

    /// Fox `n`-colorings of the tangle in which all four boundary arcs share
    /// one color.
    pub fn constant_boundary_colorings(&self, n: u64) -> AbelianGroupStructure {
        let (arc, arcs) = self.fox_arcs();
        let cols = arcs + self.loops;
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for c in 0..self.crossings {
            let mut row = vec![0i64; cols];
            row[arc[4 * c]] += 1;
            row[arc[4 * c + 2]] += 1;
            row[arc[4 * c + 1]] -= 2;
            rows.push(row.into_iter().map(BigInt::from).collect());
        }
        for e in [NE, SW, SE] {
            let mut row = vec![0i64; cols];
            row[arc[self.end(NW)]] += 1;
            row[arc[self.end(e)]] -= 1;
            rows.push(row.into_iter().map(BigInt::from).collect());
        }
        kernel_mod(&rows, cols, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::col_group;

    #[test]
    fn trivial_closures() {
        let z = PortGraph::zero();
        assert_eq!(z.closure(true).split_circles(), 2);
        assert_eq!(z.closure(false).split_circles(), 1);
        let inf = PortGraph::infinity();
        assert_eq!(inf.closure(true).split_circles(), 1);
        assert_eq!(inf.closure(false).split_circles(), 2);
        assert_eq!(z.rotate(), inf);
    }

    #[test]
    fn rotation_has_order_four() {
        let t = PortGraph::positive_crossing().compose(&PortGraph::negative_crossing().rotate());
        assert_eq!(t.rotate().rotate().rotate().rotate(), t);
        assert_eq!(PortGraph::positive_crossing().rotate(), PortGraph::negative_crossing());
    }

    #[test]
    fn infinity_sum_traps_a_loop() {
        let t = PortGraph::infinity().compose(&PortGraph::infinity());
        assert_eq!(t.loops(), 1);
        assert_eq!(t.closure(false).split_circles(), 3);
    }

    #[test]
    fn three_twists_close_to_a_trefoil() {
        let x = PortGraph::positive_crossing();
        let t = x.compose(&x).compose(&x);
        let d = t.closure(true);
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.count_components(), 1);
        assert_eq!(col_group(&d, 3).unwrap().order(), 9);
        // the denominator closure untwists
        assert_eq!(col_group(&t.closure(false), 3).unwrap().order(), 3);
    }

    #[test]
    fn constant_boundary_counts() {
        assert_eq!(PortGraph::zero().constant_boundary_colorings(5).order(), 5);
        let with_loop = PortGraph::infinity().compose(&PortGraph::infinity());
        assert_eq!(with_loop.constant_boundary_colorings(5).order(), 25);
    }
}
