use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tanglekit::coloring::{brute_force_count, col_group, determinant};
use tanglekit::diagram::{braid_closure, corpus, BraidWord};
use tanglekit::tangle::{apply_rational_move, Closure};
use tanglekit::{random, AbelianGroupStructure, LinkDiagram};

#[test]
fn snf_matches_brute_force_on_small_corpus_diagrams() {
    let mut checked = 0;
    for entry in corpus::embedded() {
        if entry.diagram.fox_arcs().1 > 7 {
            continue;
        }
        for n in 2..=5 {
            let snf = col_group(&entry.diagram, n).unwrap().order();
            assert_eq!(snf, brute_force_count(&entry.diagram, n), "{} mod {n}", entry.name);
        }
        checked += 1;
    }
    assert!(checked >= 4);
}

#[test]
fn trivial_links() {
    for n in 2..=7u64 {
        for m in 1..=4 {
            assert_eq!(
                col_group(&LinkDiagram::unlink(m), n).unwrap(),
                AbelianGroupStructure::elementary(n, m)
            );
        }
    }
}

#[test]
fn published_determinants() {
    // knot-table values; 9^2_40 is the two-component link L9a32
    for (name, det) in [
        ("3_1", 3),
        ("4_1", 5),
        ("8_18", 45),
        ("9_40", 75),
        ("9_49", 25),
        ("hopf", 2),
    ] {
        assert_eq!(determinant(&corpus::get(name).unwrap()), det.into(), "{name}");
    }
}

fn b3_word() -> impl Strategy<Value = BraidWord> {
    let letter = prop_oneof![Just(1), Just(-1), Just(2), Just(-2)];
    prop::collection::vec(letter, 0..=10).prop_map(|l| BraidWord::new(3, l).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabel_and_mirror_invariance(w in b3_word(), seed in any::<u64>(), n in 2u64..=7) {
        let d = braid_closure(&w);
        let mut perm: Vec<usize> = (0..d.arc_count()).collect();
        use rand::seq::SliceRandom;
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let base = col_group(&d, n).unwrap();
        prop_assert_eq!(col_group(&d.relabel(&perm), n).unwrap(), base.clone());
        prop_assert_eq!(col_group(&d.mirror(), n).unwrap(), base);
    }

    #[test]
    fn n_move_invariance(w in b3_word(), at in 0usize..=10, gen in 1i32..=2, neg in any::<bool>(), n in 3i32..=5) {
        let at = at.min(w.len());
        let moved = w.insert_power(at, gen, if neg { -n } else { n });
        prop_assert_eq!(
            col_group(&braid_closure(&w), n as u64).unwrap(),
            col_group(&braid_closure(&moved), n as u64).unwrap()
        );
    }
}

#[test]
fn five_halves_move_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..150 {
        let t = random::tangle_with_site(&mut rng, 4, 14);
        for kind in [Closure::Numerator, Closure::Denominator] {
            let before = col_group(&t.closure(kind), 5).unwrap();
            for site in t.zero_sites() {
                for sign in [1, -1] {
                    let moved = apply_rational_move(&t, &site, 5, 2, sign).unwrap();
                    assert_eq!(col_group(&moved.closure(kind), 5).unwrap(), before, "{t} at {site:?}");
                }
            }
        }
    }
}
