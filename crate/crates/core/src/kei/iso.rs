//! Isomorphism search between finite Kei.

use super::table::FiniteKei;

/// Per-element data preserved by every isomorphism.
fn element_invariant(k: &FiniteKei, x: usize) -> (usize, usize, Vec<usize>) {
    let n = k.size();
    // fixed points of the right translation by x, and of the row of x
    let col_fixed = (0..n).filter(|&a| k.op(a, x) == a).count();
    let row_fixed = (0..n).filter(|&b| k.op(x, b) == x).count();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for a in 0..n {
        if seen[a] {
            continue;
        }
        let mut len = 0;
        let mut y = a;
        while !seen[y] {
            seen[y] = true;
            y = k.op(y, x);
            len += 1;
        }
        cycles.push(len);
    }
    cycles.sort_unstable();
    (col_fixed, row_fixed, cycles)
}

/// Isomorphism-invariant summary: the sorted multiset of element invariants.
/// Unequal fingerprints prove two tables non-isomorphic.
pub fn fingerprint(k: &FiniteKei) -> Vec<(usize, usize, Vec<usize>)> {
    let mut v: Vec<_> = (0..k.size()).map(|x| element_invariant(k, x)).collect();
    v.sort();
    v
}

/// A small generating set, chosen greedily in element order.
pub fn generating_set(k: &FiniteKei) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut covered = vec![false; k.size()];
    for x in 0..k.size() {
        if covered[x] {
            continue;
        }
        gens.push(x);
        for y in k.subkei_generated(&gens) {
            covered[y] = true;
        }
    }
    gens
}

/// Extends a partial map along the operation. Returns false on a conflict.
fn close_map(k1: &FiniteKei, k2: &FiniteKei, fwd: &mut [Option<usize>], back: &mut [Option<usize>]) -> bool {
    let n = k1.size();
    loop {
        let mapped: Vec<usize> = (0..n).filter(|&a| fwd[a].is_some()).collect();
        let mut grew = false;
        for &a in &mapped {
            for &b in &mapped {
                let c = k1.op(a, b);
                let fc = k2.op(fwd[a].unwrap(), fwd[b].unwrap());
                match fwd[c] {
                    Some(existing) if existing != fc => return false,
                    Some(_) => {}
                    None => {
                        if back[fc].is_some() {
                            return false;
                        }
                        fwd[c] = Some(fc);
                        back[fc] = Some(c);
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return true;
        }
    }
}

/// Finds an isomorphism `f` with `f(a*b) = f(a)*f(b)`, as `f[a]`.
///
/// Backtracks over images of a generating set of `k1`, pruning candidates by
/// element invariants, and closes each partial assignment under the operation.
pub fn kei_isomorphic(k1: &FiniteKei, k2: &FiniteKei) -> Option<Vec<usize>> {
    if k1.size() != k2.size() || fingerprint(k1) != fingerprint(k2) {
        return None;
    }
    let n = k1.size();
    let inv1: Vec<_> = (0..n).map(|x| element_invariant(k1, x)).collect();
    let inv2: Vec<_> = (0..n).map(|x| element_invariant(k2, x)).collect();
    let gens = generating_set(k1);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..n).filter(|&y| inv2[y] == inv1[g]).collect())
        .collect();

    fn search(
        depth: usize,
        gens: &[usize],
        candidates: &[Vec<usize>],
        k1: &FiniteKei,
        k2: &FiniteKei,
        fwd: &[Option<usize>],
        back: &[Option<usize>],
    ) -> Option<Vec<usize>> {
        if depth == gens.len() {
            return if fwd.iter().all(Option::is_some) {
                Some(fwd.iter().map(|x| x.unwrap()).collect())
            } else {
                None
            };
        }
        let g = gens[depth];
        for &y in &candidates[depth] {
            let mut f = fwd.to_vec();
            let mut b = back.to_vec();
            match (f[g], b[y]) {
                (Some(img), _) if img != y => continue,
                (None, Some(_)) => continue,
                _ => {}
            }
            f[g] = Some(y);
            b[y] = Some(g);
            if !close_map(k1, k2, &mut f, &mut b) {
                continue;
            }
            if let Some(found) = search(depth + 1, gens, candidates, k1, k2, &f, &b) {
                return Some(found);
            }
        }
        None
    }

    let found = search(0, &gens, &candidates, k1, k2, &vec![None; n], &vec![None; n])?;
    debug_assert!((0..n).all(|a| (0..n).all(|b| found[k1.op(a, b)] == k2.op(found[a], found[b]))));
    Some(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kei::FiniteGroup;

    #[test]
    fn identity_map() {
        let k = FiniteKei::dihedral(5);
        let f = kei_isomorphic(&k, &k).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(f[k.op(a, b)], k.op(f[a], f[b]));
            }
        }
    }

    #[test]
    fn dihedral_four_is_not_trivial() {
        assert!(kei_isomorphic(&FiniteKei::dihedral(4), &FiniteKei::trivial(4)).is_none());
    }

    #[test]
    fn relabelled_copy() {
        let k = FiniteKei::core(&FiniteGroup::symmetric(3));
        let perm = [3, 5, 0, 1, 4, 2];
        let mut inv = [0; 6];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let k2 = FiniteKei::from_fn(6, |a, b| perm[k.op(inv[a], inv[b])]);
        let f = kei_isomorphic(&k, &k2).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(f[k.op(a, b)], k2.op(f[a], f[b]));
            }
        }
    }

    #[test]
    fn core_of_z5_squared_is_product_of_dihedrals() {
        let g = FiniteGroup::cyclic(5).product(&FiniteGroup::cyclic(5));
        let core = FiniteKei::core(&g);
        let prod = FiniteKei::dihedral(5).product(&FiniteKei::dihedral(5));
        // coordinates line up, so the identity map already works
        assert_eq!(core, prod);
        assert!(kei_isomorphic(&core, &prod).is_some());
    }

    #[test]
    fn generating_sets() {
        assert_eq!(generating_set(&FiniteKei::dihedral(7)), vec![0, 1]);
        assert_eq!(generating_set(&FiniteKei::trivial(4)).len(), 4);
    }
}
