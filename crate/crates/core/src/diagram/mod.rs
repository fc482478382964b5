//! Unoriented link diagrams in PD form.
//!
//! A crossing is a 4-tuple of edge labels listed counterclockwise. Positions 0 and 2
//! are the two ends of the under-strand, positions 1 and 3 the over-strand. Labels
//! are dense `0..arc_count` and every label occurs exactly twice. Crossing-free
//! components are carried as a separate counter of split circles.

mod braid_word;
pub mod corpus;
mod pd;

use serde::Serialize;

pub use braid_word::BraidWord;
pub use pd::parse_pd;

use crate::error::{Error, Result};
use crate::unionfind::UnionFind;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    crossings: Vec<[usize; 4]>,
    arc_count: usize,
    split_circles: usize,
}

/// Orientation data for one crossing: the positions at which the under- and
/// over-strands enter, and the resulting crossing sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrientedCrossing {
    pub under_in: usize,
    pub over_in: usize,
    pub sign: i32,
}

impl LinkDiagram {
    /// Validates and normalizes a crossing list. Labels may be arbitrary
    /// integers; they are renumbered densely in increasing order.
    pub fn new(crossings: Vec<[i64; 4]>, split_circles: usize) -> Result<Self> {
        let mut labels: Vec<i64> = crossings.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        let mut counts = vec![0usize; labels.len()];
        let index = |l: i64| labels.binary_search(&l).unwrap();
        let dense: Vec<[usize; 4]> = crossings
            .iter()
            .map(|c| {
                let t = [index(c[0]), index(c[1]), index(c[2]), index(c[3])];
                for &l in &t {
                    counts[l] += 1;
                }
                t
            })
            .collect();
        if let Some(i) = counts.iter().position(|&c| c != 2) {
            return Err(Error::MalformedDiagram(format!(
                "arc {} appears {} times (expected 2)",
                labels[i], counts[i]
            )));
        }
        Ok(LinkDiagram {
            crossings: dense,
            arc_count: labels.len(),
            split_circles,
        })
    }

    /// Builds a diagram from already-dense labels.
    pub(crate) fn from_dense(crossings: Vec<[usize; 4]>, split_circles: usize) -> Result<Self> {
        Self::new(
            crossings.into_iter().map(|c| c.map(|l| l as i64)).collect(),
            split_circles,
        )
    }

    /// The trivial link with `m` components.
    pub fn unlink(m: usize) -> Self {
        LinkDiagram {
            crossings: Vec::new(),
            arc_count: 0,
            split_circles: m,
        }
    }

    pub fn crossings(&self) -> &[[usize; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Number of PD edge labels (not Fox arcs; see [`LinkDiagram::fox_arcs`]).
    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn split_circles(&self) -> usize {
        self.split_circles
    }

    /// Switches every crossing by rotating its tuple one step.
    pub fn mirror(&self) -> Self {
        LinkDiagram {
            crossings: self.crossings.iter().map(|&[a, b, c, d]| [b, c, d, a]).collect(),
            arc_count: self.arc_count,
            split_circles: self.split_circles,
        }
    }

    /// Relabels edges by a permutation `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.arc_count);
        LinkDiagram {
            crossings: self.crossings.iter().map(|c| c.map(|l| perm[l])).collect(),
            arc_count: self.arc_count,
            split_circles: self.split_circles,
        }
    }

    /// Each crossing tuple rotated so that it starts at its smaller under-label.
    /// Two diagrams with equal canonical forms are the same unoriented diagram.
    pub fn canonical_form(&self) -> Vec<[usize; 4]> {
        self.crossings
            .iter()
            .map(|&[a, b, c, d]| if a <= c { [a, b, c, d] } else { [c, d, a, b] })
            .collect()
    }

    pub fn count_components(&self) -> usize {
        let mut uf = UnionFind::new(self.arc_count);
        for c in &self.crossings {
            uf.union(c[0], c[2]);
            uf.union(c[1], c[3]);
        }
        (0..self.arc_count).filter(|&l| uf.find(l) == l).count() + self.split_circles
    }

    /// Component index of every edge label, in order of smallest label.
    pub fn component_of_labels(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.arc_count);
        for c in &self.crossings {
            uf.union(c[0], c[2]);
            uf.union(c[1], c[3]);
        }
        uf.dense_labels().0
    }

    /// Fox arcs: edge labels joined through over-crossings. Returns the arc
    /// index of every label and the number of arcs (split circles excluded).
    pub fn fox_arcs(&self) -> (Vec<usize>, usize) {
        let mut uf = UnionFind::new(self.arc_count);
        for c in &self.crossings {
            uf.union(c[1], c[3]);
        }
        uf.dense_labels()
    }

    /// The two (crossing, position) slots of every label.
    fn occurrences(&self) -> Vec<[(usize, usize); 2]> {
        let mut occ = vec![[(usize::MAX, 0); 2]; self.arc_count];
        let mut seen = vec![0usize; self.arc_count];
        for (ci, c) in self.crossings.iter().enumerate() {
            for (p, &l) in c.iter().enumerate() {
                occ[l][seen[l]] = (ci, p);
                seen[l] += 1;
            }
        }
        occ
    }

    /// Orients every component and reports entry positions and signs per crossing.
    ///
    /// By default a component is traversed so that its smallest label runs into
    /// an under-crossing at position 0 when it has one, which reproduces the
    /// orientation implied by PD codes written "from the incoming under-arc".
    /// `flips[k] = true` reverses component `k` (components numbered as in
    /// [`LinkDiagram::component_of_labels`]).
    pub fn orient(&self, flips: &[bool]) -> Vec<OrientedCrossing> {
        let occ = self.occurrences();
        let comp = self.component_of_labels();
        let mut under_in = vec![usize::MAX; self.crossings.len()];
        let mut over_in = vec![usize::MAX; self.crossings.len()];
        let mut done = vec![false; self.arc_count];
        for start in 0..self.arc_count {
            if done[start] {
                continue;
            }
            let [o0, o1] = occ[start];
            let pick = |o: (usize, usize)| o.1 == 0;
            let pick2 = |o: (usize, usize)| o.1 == 2;
            // entry slot of `start`: an incoming under slot, else the end
            // opposite an outgoing under slot
            let mut entry = if !pick(o0) && (pick(o1) || pick2(o0)) { o1 } else { o0 };
            if flips.get(comp[start]).copied().unwrap_or(false) {
                entry = if entry == o0 { o1 } else { o0 };
            }
            let mut label = start;
            loop {
                done[label] = true;
                let (ci, p) = entry;
                if p % 2 == 0 {
                    under_in[ci] = p;
                } else {
                    over_in[ci] = p;
                }
                let out_pos = (p + 2) % 4;
                let next = self.crossings[ci][out_pos];
                let [a, b] = occ[next];
                entry = if a == (ci, out_pos) { b } else { a };
                label = next;
                if label == start {
                    break;
                }
            }
        }
        under_in
            .into_iter()
            .zip(over_in)
            .map(|(u, o)| {
                let sign = if (o + 4 - u) % 4 == 3 { 1 } else { -1 };
                OrientedCrossing {
                    under_in: u,
                    over_in: o,
                    sign,
                }
            })
            .collect()
    }

    pub fn writhe(&self, flips: &[bool]) -> i64 {
        self.orient(flips).iter().map(|c| c.sign as i64).sum()
    }

    /// Serializes as PD text, one `X a b c d` line per crossing (labels 1-based)
    /// and an `O k` line when split circles are present.
    pub fn to_pd_string(&self) -> String {
        let mut out = String::new();
        for c in &self.crossings {
            out.push_str(&format!("X {} {} {} {}\n", c[0] + 1, c[1] + 1, c[2] + 1, c[3] + 1));
        }
        if self.split_circles > 0 || self.crossings.is_empty() {
            out.push_str(&format!("O {}\n", self.split_circles));
        }
        out
    }

    pub fn summary(&self, name: &str) -> DiagramSummary {
        DiagramSummary {
            name: name.to_string(),
            crossings: self.crossing_count(),
            arcs: self.arc_count,
            components: self.count_components(),
        }
    }
}

/// JSON-facing description of a diagram.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DiagramSummary {
    pub name: String,
    pub crossings: usize,
    pub arcs: usize,
    pub components: usize,
}

/// Closure of a braid: strands run upward, letter `+i` is a positive crossing of
/// strands `i` and `i+1`, and the top of each strand is joined to its bottom.
/// Strands untouched by any letter become split circles.
pub fn braid_closure(w: &BraidWord) -> LinkDiagram {
    let n = w.strands();
    let mut uf = UnionFind::new(n);
    let init: Vec<usize> = (0..n).collect();
    let mut cur = init.clone();
    let mut crossings = Vec::with_capacity(w.len());
    for &letter in w.letters() {
        let i = letter.unsigned_abs() as usize;
        let (a, b) = (i - 1, i);
        let (sw, se) = (cur[a], cur[b]);
        let (nw, ne) = (uf.push(), uf.push());
        // counterclockwise from the incoming under-edge
        if letter > 0 {
            crossings.push([se, ne, nw, sw]);
        } else {
            crossings.push([sw, se, ne, nw]);
        }
        cur[a] = nw;
        cur[b] = ne;
    }
    let mut circles = 0;
    for p in 0..n {
        if cur[p] == init[p] {
            circles += 1;
        } else {
            uf.union(cur[p], init[p]);
        }
    }
    let crossings = crossings.into_iter().map(|c| c.map(|l| uf.find(l))).collect();
    LinkDiagram::from_dense(crossings, circles).expect("braid closure is a valid diagram")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> LinkDiagram {
        parse_pd("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3").unwrap()
    }

    #[test]
    fn trefoil_shape() {
        let d = trefoil();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.arc_count(), 6);
        assert_eq!(d.count_components(), 1);
        assert_eq!(d.fox_arcs().1, 3);
    }

    #[test]
    fn unlink_components() {
        for m in 1..5 {
            assert_eq!(LinkDiagram::unlink(m).count_components(), m);
        }
        let d = parse_pd("O 2").unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.split_circles(), 2);
    }

    #[test]
    fn malformed_arc_count() {
        let err = parse_pd("X 1 2 3 4").unwrap_err();
        assert!(matches!(err, Error::MalformedDiagram(_)));
    }

    #[test]
    fn mirror_is_involution_up_to_rotation() {
        let d = parse_pd("X 4 2 5 1 / X 8 6 1 5 / X 6 3 7 4 / X 2 7 3 8").unwrap();
        let mm = d.mirror().mirror();
        assert_ne!(mm.crossings(), d.crossings());
        assert_eq!(mm.canonical_form(), d.canonical_form());
        assert_eq!(d.mirror().count_components(), d.count_components());
        assert_eq!(d.mirror().arc_count(), d.arc_count());
    }

    #[test]
    fn closure_component_counts() {
        let empty = BraidWord::new(3, vec![]).unwrap();
        let d = braid_closure(&empty);
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.split_circles(), 3);

        let t = braid_closure(&BraidWord::new(2, vec![1, 1, 1]).unwrap());
        assert_eq!(t.crossing_count(), 3);
        assert_eq!(t.count_components(), 1);

        let full = BraidWord::new(3, vec![1, 2]).unwrap().pow(6);
        assert_eq!(braid_closure(&full).count_components(), 3);
        let full12 = BraidWord::new(3, vec![1, 2]).unwrap().pow(12);
        assert_eq!(braid_closure(&full12).count_components(), 3);
    }

    #[test]
    fn closure_with_idle_strand() {
        // s1 in B3 leaves strand 3 alone: unknot plus a split circle
        let d = braid_closure(&BraidWord::new(3, vec![1]).unwrap());
        assert_eq!(d.split_circles(), 1);
        assert_eq!(d.count_components(), 2);
    }

    #[test]
    fn positive_braid_has_positive_writhe() {
        let d = braid_closure(&BraidWord::new(2, vec![1, 1, 1]).unwrap());
        assert_eq!(d.writhe(&[]), 3);
        assert_eq!(d.mirror().writhe(&[]), -3);
        let d = braid_closure(&BraidWord::new(3, vec![1, -2, 1, -2]).unwrap());
        assert_eq!(d.writhe(&[]), 0);
    }

    #[test]
    fn incoming_under_orientation_is_default() {
        // every crossing of the table trefoil is negative under its PD orientation
        let d = trefoil();
        assert!(d.orient(&[]).iter().all(|c| c.under_in == 0));
        assert_eq!(d.writhe(&[]), -3);
        // reversing a knot does not change the writhe
        assert_eq!(d.writhe(&[true]), -3);
    }

    #[test]
    fn hopf_orientation_flip_changes_writhe_sign() {
        let d = parse_pd("X 4 1 3 2 / X 2 3 1 4").unwrap();
        let w = d.writhe(&[]);
        assert_eq!(w.abs(), 2);
        assert_eq!(d.writhe(&[false, true]), -w);
    }

    #[test]
    fn summary_json_fields() {
        let s = trefoil().summary("3_1");
        assert_eq!(
            s,
            DiagramSummary {
                name: "3_1".into(),
                crossings: 3,
                arcs: 6,
                components: 1
            }
        );
    }
}
