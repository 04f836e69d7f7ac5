mod common;

use bvgroup::forest::{Forest, ForestWord};
use bvgroup::rewrite::{measure, Strategy as Pick};
use common::{common_left_multiples, fw, right_factors, small_forests};
use proptest::prelude::*;

fn word(max_index: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..=max_index, 0..=max_len)
}

proptest! {
    #[test]
    fn word_round_trip(w in word(6, 8)) {
        let f = fw(&w);
        let asc = f.to_word();
        prop_assert!(asc.is_ascending());
        prop_assert_eq!(Forest::from_word(&asc), f.clone());
        let rules = ForestWord::rules();
        let nf = rules.normalize(&w, Pick::Leftmost, 100_000).unwrap().word;
        prop_assert_eq!(nf, asc.0.clone());
        let nf = rules.normalize(&w, Pick::Rightmost, 100_000).unwrap().word;
        prop_assert_eq!(nf, asc.0);
    }

    #[test]
    fn product_is_associative_with_additive_length(a in word(5, 5), b in word(5, 5), c in word(5, 5)) {
        let (a, b, c) = (fw(&a), fw(&b), fw(&c));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b).length(), a.length() + b.length());
        prop_assert_eq!(a.mul(&Forest::trivial()), a.clone());
        prop_assert_eq!(Forest::trivial().mul(&a), a);
    }

    #[test]
    fn measure_drops_on_every_step(w in word(6, 8)) {
        let rules = ForestWord::rules();
        let trace = rules.trace(&w, Pick::Leftmost).unwrap();
        for pair in trace.windows(2) {
            prop_assert!(measure::ascending(&pair[1]) < measure::ascending(&pair[0]));
        }
    }

    #[test]
    fn union_and_intersection(a in word(5, 5), b in word(5, 5)) {
        let (a, b) = (fw(&a), fw(&b));
        let u = a.union(&b);
        prop_assert!(a.is_left_factor_of(&u) && b.is_left_factor_of(&u));
        let x = a.left_divide(&u).unwrap();
        prop_assert_eq!(a.mul(&x), u.clone());
        let i = a.intersection(&b);
        prop_assert!(i.is_left_factor_of(&a) && i.is_left_factor_of(&b));
        // Any common left factor divides the intersection.
        for w in small_forests(4, 2) {
            let c = fw(&w);
            if c.is_left_factor_of(&a) && c.is_left_factor_of(&b) {
                prop_assert!(c.is_left_factor_of(&i));
            }
        }
    }

    #[test]
    fn gcrf_matches_brute_force(a in word(4, 5), b in word(4, 5)) {
        let (f, g) = (fw(&a), fw(&b));
        let (fb, gb, r) = f.gcrf(&g);
        prop_assert_eq!(fb.mul(&r), f.clone());
        prop_assert_eq!(gb.mul(&r), g.clone());
        let common: Vec<Forest> = right_factors(&f).intersection(&right_factors(&g)).cloned().collect();
        prop_assert!(common.contains(&r));
        for c in &common {
            prop_assert!(r.right_divide(c).is_some(), "{} does not divide {}", c, r);
        }
    }

    #[test]
    fn lclm_matches_brute_force(a in word(3, 3), b in word(3, 3)) {
        let (f, g) = (fw(&a), fw(&b));
        let found = common_left_multiples(&f, &g, 4, 3);
        match f.lclm(&g) {
            Some(l) => {
                prop_assert_eq!(l.left.mul(&f), l.multiple.clone());
                prop_assert_eq!(l.right.mul(&g), l.multiple.clone());
                prop_assert!(l.left.is_disjoint(&l.right));
                for m in &found {
                    prop_assert!(m.right_divide(&l.multiple).is_some(), "{} is not a left multiple of {}", m, l.multiple);
                }
            }
            None => prop_assert!(found.is_empty(), "lclm absent but {} is a common left multiple", found[0]),
        }
    }

    #[test]
    fn leaf_count_is_a_homomorphism(a in word(6, 6), b in word(6, 6)) {
        let (f, g) = (fw(&a), fw(&b));
        prop_assert_eq!(f.mul(&g).leaf_count(), f.leaf_count().mul(&g.leaf_count()));
    }
}

#[test]
fn right_division_examples() {
    let f = fw(&[0, 0, 3]);
    assert_eq!(f.right_divide(&Forest::lambda(3)), Some(fw(&[0, 0])));
    assert_eq!(f.right_divide(&Forest::lambda(1)), None);
    assert_eq!(f.right_divide(&f), Some(Forest::trivial()));
}
