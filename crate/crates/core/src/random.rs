//! Seeded generators for test and benchmark suites.

use rand::Rng;

use crate::diagram::BraidWord;
use crate::tangle::TangleExpr;

/// A uniformly random word of length `len` over `s_i^{+-1}`.
pub fn braid_word<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    assert!(strands >= 2);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(strands, letters).expect("letters are in range")
}

fn leaf<R: Rng + ?Sized>(rng: &mut R) -> TangleExpr {
    match rng.gen_range(0..6) {
        0 | 1 => TangleExpr::Zero,
        2 => TangleExpr::Infinity,
        3 => TangleExpr::Crossing(true),
        4 => TangleExpr::Crossing(false),
        _ => {
            let len = rng.gen_range(1..=3);
            TangleExpr::Twists((0..len).map(|_| rng.gen_range(-3..=3)).collect())
        }
    }
}

/// A random algebraic tangle of depth at most `max_depth`.
pub fn tangle_expr<R: Rng + ?Sized>(rng: &mut R, max_depth: usize) -> TangleExpr {
    if max_depth == 0 || rng.gen_bool(0.3) {
        return leaf(rng);
    }
    TangleExpr::comp(
        rng.gen_range(0..2),
        rng.gen_range(0..2),
        tangle_expr(rng, max_depth - 1),
        tangle_expr(rng, max_depth - 1),
    )
}

/// Like [`tangle_expr`], with at most `max_crossings` crossings and at least
/// one 0-tangle leaf.
pub fn tangle_with_site<R: Rng + ?Sized>(rng: &mut R, max_depth: usize, max_crossings: usize) -> TangleExpr {
    loop {
        let t = tangle_expr(rng, max_depth);
        if t.crossing_count() <= max_crossings && !t.zero_sites().is_empty() {
            return t;
        }
    }
}
