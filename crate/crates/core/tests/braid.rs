use proptest::prelude::*;
use tanglekit::braid::{burau_image, conjugacy_census, shared_quotient, verify_braid_identities, Relation};
use tanglekit::BraidWord;

fn b3_word(max: usize) -> impl Strategy<Value = BraidWord> {
    let letter = prop_oneof![Just(1), Just(-1), Just(2), Just(-2)];
    prop::collection::vec(letter, 0..=max).prop_map(|l| BraidWord::new(3, l).unwrap())
}

/// Words equal to the identity in `B3`, to splice into others.
const TRIVIAL_WORDS: [&[i32]; 4] = [&[1, 2, 1, -2, -1, -2], &[1, -1], &[-2, 2], &[2, 1, 2, -1, -2, -1]];

proptest! {
    #[test]
    fn burau_is_multiplicative(u in b3_word(10), v in b3_word(10)) {
        let lhs = burau_image(&u.concat(&v)).unwrap();
        let rhs = &burau_image(&u).unwrap() * &burau_image(&v).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quotient_factors_through_burau(w in b3_word(12), at in 0usize..=12, k in 0usize..4) {
        let at = at.min(w.len());
        let mut letters = w.letters().to_vec();
        letters.splice(at..at, TRIVIAL_WORDS[k].iter().copied());
        let v = BraidWord::new(3, letters).unwrap();
        prop_assert_eq!(burau_image(&w).unwrap(), burau_image(&v).unwrap());
        let q = shared_quotient();
        prop_assert_eq!(q.image(&w).unwrap(), q.image(&v).unwrap());
    }

    #[test]
    fn fifth_powers_die_in_the_quotient(w in b3_word(10), at in 0usize..=10, gen in 1i32..=2, neg in any::<bool>()) {
        let at = at.min(w.len());
        let moved = w.insert_power(at, gen, if neg { -5 } else { 5 });
        let q = shared_quotient();
        prop_assert_eq!(q.image(&w).unwrap(), q.image(&moved).unwrap());
        prop_assert_ne!(burau_image(&w).unwrap(), burau_image(&moved).unwrap());
    }
}

#[test]
fn lagrange() {
    let q = shared_quotient();
    for e in 0..q.order() {
        assert_eq!(600 % q.element_order(e), 0);
    }
}

#[test]
fn multiplication_table_is_a_group() {
    let q = shared_quotient();
    let n = q.order();
    for a in (0..n).step_by(7) {
        for b in (0..n).step_by(5) {
            for c in (0..n).step_by(11) {
                assert_eq!(q.mul(q.mul(a, b), c), q.mul(a, q.mul(b, c)));
            }
        }
        assert_eq!(q.mul(a, q.inv(a)), q.identity());
    }
}

#[test]
fn full_twist_order_and_centre() {
    let q = shared_quotient();
    let d2 = q.image(&BraidWord::new(3, vec![1, 2, 1, 2, 1, 2]).unwrap()).unwrap();
    assert!(q.is_central(d2));
    // (s1 s2)^30 is trivial and the (s1 s2)^6k are distinct, so the full twist has order 10
    assert_eq!(q.element_order(d2), 10);
    let centre: Vec<usize> = (0..q.order()).filter(|&e| q.is_central(e)).collect();
    assert_eq!(centre.len(), 10);
}

#[test]
fn census_matches_class_equation() {
    let c = conjugacy_census(shared_quotient());
    assert_eq!(c.class_count(), 45);
    assert!(c.count_with_length_at_most(8) >= 36);
    for class in &c.classes {
        assert_eq!(600 % class.size, 0);
    }
    // ten central elements give ten singleton classes
    assert_eq!(c.classes.iter().filter(|k| k.size == 1).count(), 10);
}

#[test]
fn braid_identities_report() {
    let r = verify_braid_identities();
    assert!(
        r.all_passed,
        "{:#?}",
        r.steps.iter().filter(|s| !s.passed).collect::<Vec<_>>()
    );
    let conj = r
        .steps
        .iter()
        .find(|s| s.relation == Relation::ConjugateInQuotient && s.part == "ii")
        .unwrap();
    // the first conjugacy holds in B3 itself
    assert!(conj.b3_conjugator.is_some());
    assert!(r.steps.iter().any(|s| s.lhs == "(1 2)^30" && s.passed));
}
