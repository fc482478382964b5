use serde::Serialize;

use crate::coloring::{col_group, AbelianGroupStructure};
use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};

use super::expr::TangleExpr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EmbeddingVerdict {
    Obstructed,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub modulus: u64,
    /// Colorings of the tangle whose four boundary arcs share a color.
    pub constant_boundary: String,
    pub constant_boundary_order: u128,
    pub target: String,
    pub target_order: u128,
    pub verdict: EmbeddingVerdict,
}

/// Can `t` sit inside any diagram `n`-move equivalent to `target`?
///
/// If `L` contains `t`, colorings of `t` that are constant on its boundary
/// extend to `L` by coloring the rest constantly, so `|Col_n(L)|` is at least
/// their number. `Col_n` is unchanged by rational `n/q`-moves, hence a count
/// above `|Col_n(target)|` rules the embedding out.
pub fn embedding_obstruction(t: &TangleExpr, target: &LinkDiagram, n: u64) -> Result<EmbeddingReport> {
    if n < 2 {
        return Err(Error::InvalidModulus(n));
    }
    let k: AbelianGroupStructure = t.diagram().constant_boundary_colorings(n);
    let col = col_group(target, n)?;
    let verdict = if k.order() > col.order() {
        EmbeddingVerdict::Obstructed
    } else {
        EmbeddingVerdict::Inconclusive
    };
    Ok(EmbeddingReport {
        modulus: n,
        constant_boundary: k.to_string(),
        constant_boundary_order: k.order(),
        target: col.to_string(),
        target_order: col.order(),
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::corpus;

    fn e(s: &str) -> TangleExpr {
        TangleExpr::parse(s).unwrap()
    }

    #[test]
    fn verdicts() {
        let unknot = LinkDiagram::unlink(1);
        let with_circle = e("(comp 0 0 (tw 2 2) (comp 0 0 tinf tinf))");
        let r = embedding_obstruction(&with_circle, &unknot, 5).unwrap();
        assert_eq!(r.verdict, EmbeddingVerdict::Obstructed);
        assert_eq!(r.constant_boundary_order, 25);
        let r = embedding_obstruction(&e("t0"), &unknot, 5).unwrap();
        assert_eq!(r.verdict, EmbeddingVerdict::Inconclusive);
        let fig8 = corpus::get("4_1").unwrap();
        let r = embedding_obstruction(&e("(tw 2 2)"), &fig8, 5).unwrap();
        assert_eq!(r.verdict, EmbeddingVerdict::Inconclusive);
        assert!(matches!(
            embedding_obstruction(&e("t0"), &unknot, 1),
            Err(Error::InvalidModulus(1))
        ));
    }

    #[test]
    fn hopf_and_trefoil_targets() {
        let with_circle = e("(comp 0 0 (tw 2 2) (comp 0 0 tinf tinf))");
        for name in ["hopf", "3_1"] {
            let r = embedding_obstruction(&with_circle, &corpus::get(name).unwrap(), 5).unwrap();
            assert_eq!(r.verdict, EmbeddingVerdict::Obstructed, "{name}");
        }
    }
}
