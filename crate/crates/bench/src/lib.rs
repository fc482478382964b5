//! Fixtures shared by the benchmarks.

use tanglekit::diagram::{braid_closure, corpus};
use tanglekit::{BraidWord, LinkDiagram};

pub fn corpus_diagram(name: &str) -> LinkDiagram {
    corpus::get(name).unwrap_or_else(|| panic!("no corpus record {name}"))
}

/// The closure of `(s1 s2^-1)^k`, an alternating 3-braid with `2k` crossings.
pub fn alternating_closure(k: usize) -> LinkDiagram {
    braid_closure(&BraidWord::new(3, vec![1, -2]).expect("valid word").pow(k))
}
