use std::collections::HashMap;

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::unionfind::UnionFind;

/// Largest crossing count accepted by the state sum.
pub const MAX_BRACKET_CROSSINGS: usize = 16;

/// `delta = -A^2 - A^-2`.
fn delta() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

/// The Kauffman bracket in `A`, normalized so one circle has bracket 1.
///
/// Sums over all `2^c` states: the A-smoothing of `[a, b, c, d]` joins `a-b`
/// and `c-d`, the B-smoothing joins `a-d` and `b-c`. A state with `k`
/// A-smoothings and `l` loops contributes `A^(2k - c) delta^(l - 1)`.
pub fn kauffman_bracket(d: &LinkDiagram) -> Result<LaurentPoly> {
    let n = d.crossing_count();
    if n > MAX_BRACKET_CROSSINGS {
        return Err(Error::TooLarge {
            crossings: n,
            cap: MAX_BRACKET_CROSSINGS,
        });
    }
    if n == 0 && d.split_circles() == 0 {
        return Err(Error::MalformedDiagram("the empty diagram has no bracket".into()));
    }
    // (number of A-smoothings, loops) -> number of states
    let mut tally: HashMap<(usize, usize), u64> = HashMap::new();
    for state in 0u32..(1u32 << n) {
        let mut uf = UnionFind::new(d.arc_count());
        for (i, c) in d.crossings().iter().enumerate() {
            if state >> i & 1 == 0 {
                uf.union(c[0], c[1]);
                uf.union(c[2], c[3]);
            } else {
                uf.union(c[0], c[3]);
                uf.union(c[1], c[2]);
            }
        }
        let loops = (0..d.arc_count()).filter(|&l| uf.find(l) == l).count() + d.split_circles();
        let a_count = n - state.count_ones() as usize;
        *tally.entry((a_count, loops)).or_insert(0) += 1;
    }
    let max_loops = tally.keys().map(|k| k.1).max().unwrap_or(1);
    let delta = delta();
    let mut powers = vec![LaurentPoly::one()];
    for _ in 1..max_loops {
        let next = powers.last().unwrap() * &delta;
        powers.push(next);
    }
    let mut out = LaurentPoly::zero();
    for ((a_count, loops), count) in tally {
        let term = LaurentPoly::monomial(count, 2 * a_count as i64 - n as i64);
        out = &out + &(&term * &powers[loops - 1]);
    }
    Ok(out)
}

/// The Jones polynomial in `s = t^(1/2)`, from `V = (-A^3)^(-w) <D>` and
/// `s = A^-2`. `flips` reverses components before the writhe is taken.
pub fn jones(d: &LinkDiagram, flips: &[bool]) -> Result<LaurentPoly> {
    let bracket = kauffman_bracket(d)?;
    let w = d.writhe(flips);
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let normalized = bracket.shift(-3 * w);
    let normalized = if sign < 0 { -&normalized } else { normalized };
    let half = normalized
        .divide_exponents(2)
        .expect("bracket times (-A^3)^-w has even exponents");
    Ok(half.substitute_power(-1))
}

/// Rewrites a polynomial in `s` with only even exponents as one in `t = s^2`.
pub fn in_t(v: &LaurentPoly) -> Option<LaurentPoly> {
    v.divide_exponents(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_closure, corpus, BraidWord};

    fn t_poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn unknots() {
        assert_eq!(kauffman_bracket(&LinkDiagram::unlink(1)).unwrap(), LaurentPoly::one());
        assert_eq!(kauffman_bracket(&LinkDiagram::unlink(3)).unwrap(), delta().pow(2));
        assert!(kauffman_bracket(&LinkDiagram::unlink(0)).is_err());
        // a one-crossing kink is still the unknot
        let kink = braid_closure(&BraidWord::parse(2, "1").unwrap());
        assert_eq!(jones(&kink, &[]).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn hopf_bracket() {
        let b = kauffman_bracket(&corpus::get("hopf").unwrap()).unwrap();
        assert_eq!(b, t_poly(&[(4, -1), (-4, -1)]));
    }

    #[test]
    fn figure_eight() {
        let v = jones(&corpus::get("4_1").unwrap(), &[]).unwrap();
        let t = in_t(&v).unwrap();
        assert_eq!(t, t_poly(&[(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)]));
    }

    #[test]
    fn trefoil_up_to_mirror() {
        let v = in_t(&jones(&corpus::get("3_1").unwrap(), &[]).unwrap()).unwrap();
        let right = t_poly(&[(1, 1), (3, 1), (4, -1)]);
        assert!(v == right || v == right.substitute_power(-1), "{v}");
        // positive braid closure s1^3 is the right-handed trefoil
        let b = braid_closure(&BraidWord::parse(2, "1 1 1").unwrap());
        assert_eq!(in_t(&jones(&b, &[]).unwrap()).unwrap(), right);
    }

    #[test]
    fn too_large() {
        let big = braid_closure(&BraidWord::parse(2, &"1 ".repeat(17)).unwrap());
        assert!(matches!(
            kauffman_bracket(&big),
            Err(Error::TooLarge { crossings: 17, cap: 16 })
        ));
    }
}
