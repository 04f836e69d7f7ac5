mod common;

use bvgroup::braid::Flavor;
use bvgroup::forest::{Forest, ForestWord};
use bvgroup::fraction::Fraction;
use bvgroup::random;
use bvgroup::subgroup::{is_member, is_simple_elt, is_simple_forest, simple_product_bound, Membership};
use bvgroup::zappa::MonoidElt;
use common::{fw, rng, small_forests};
use rand::Rng;

const B: Flavor = Flavor::Braided;
const S: Flavor = Flavor::Symmetric;

/// Simple by definition: every caret of the forest is in tree 0.
fn simple_by_trees(f: &Forest) -> bool {
    f.trees().keys().all(|&t| t == 0)
}

#[test]
fn simplicity_criterion_matches_definition() {
    for w in small_forests(4, 4) {
        let f = fw(&w);
        let report = is_simple_forest(&f);
        assert_eq!(report.is_simple, simple_by_trees(&f), "{f}");
        if report.is_simple {
            assert_eq!(report.type_k, Some(f.length()));
        }
    }
}

#[test]
fn product_bound_matches_direct_check() {
    let mut r = rng(21);
    for _ in 0..400 {
        let k = r.gen_range(0..4);
        let x = MonoidElt::new(random::simple_forest(&mut r, k), random::braid_in_bk(&mut r, B, k, 4));
        assert!(is_simple_elt(&x).is_simple);
        let g = random::forest_word(&mut r, 5, 3);
        let product = x.mul(&MonoidElt::from_forest(Forest::from_word(&g), B));
        assert_eq!(simple_product_bound(k, &g), is_simple_elt(&product).is_simple, "k={k}, G={g}");
        if is_simple_elt(&product).is_simple {
            assert_eq!(is_simple_elt(&product).type_k, Some(k + g.0.len()));
        }
    }
}

#[test]
fn unions_of_simple_forests_are_simple() {
    let mut r = rng(22);
    for _ in 0..300 {
        let (a, b) = (random::simple_forest(&mut r, 4), random::simple_forest(&mut r, 4));
        assert!(is_simple_forest(&a.union(&b)).is_simple);
    }
}

#[test]
fn members_are_closed_under_products_and_inverses() {
    for flavor in [B, S] {
        let mut r = rng(23);
        let xs: Vec<Fraction> = (0..120).map(|_| random::simple_balanced(&mut r, flavor, 3, 4)).collect();
        for x in &xs {
            assert!(is_member(x).is_member(), "{x}");
            assert!(is_member(&x.inverse()).is_member());
        }
        for _ in 0..120 {
            let x = &xs[r.gen_range(0..xs.len())];
            let y = &xs[r.gen_range(0..xs.len())];
            assert!(is_member(&x.mul(y)).is_member(), "{x} · {y}");
        }
    }
}

#[test]
fn verdict_survives_fattening() {
    let mut r = rng(24);
    for flavor in [B, S] {
        for n in 0..200 {
            let x = if n % 2 == 0 {
                random::simple_balanced(&mut r, flavor, 3, 4)
            } else {
                random::fraction(&mut r, flavor, 3, 3)
            };
            let j = random::forest(&mut r, 5, 3);
            let gamma = random::braid_word(&mut r, flavor, 6, 3);
            assert_eq!(is_member(&x), is_member(&x.fatten(&j, &gamma)));
        }
    }
}

/// A negative verdict is confirmed by searching small fattenings of the
/// reduced triple for a simple balanced representative.
#[test]
fn non_members_have_no_small_balanced_representative() {
    let js: Vec<Forest> = small_forests(3, 2).iter().map(|w| fw(w)).collect();
    let mut r = rng(25);
    let mut negatives = 0;
    for _ in 0..60 {
        let x = random::fraction(&mut r, B, 3, 3).reduce();
        if is_member(&x).is_member() {
            continue;
        }
        negatives += 1;
        for j in &js {
            for _ in 0..3 {
                let gamma = random::braid_word(&mut r, B, 5, 3);
                let t = x.fatten(j, &gamma);
                let (Some(k), Some(l)) = (
                    is_simple_forest(t.numerator()).type_k,
                    is_simple_forest(t.denominator()).type_k,
                ) else {
                    continue;
                };
                assert!(!(k == l && t.braid().in_bk(k)), "{x} has balanced form {t:?}");
            }
        }
    }
    assert!(negatives > 10);
}

#[test]
fn projection_preserves_membership() {
    let mut r = rng(26);
    for _ in 0..200 {
        let x = random::simple_balanced(&mut r, B, 3, 4);
        let y = random::fraction(&mut r, B, 3, 3);
        for z in [x.clone(), x.mul(&y)] {
            if is_member(&z).is_member() {
                assert!(is_member(&z.project()).is_member());
            }
        }
    }
}

#[test]
fn membership_examples() {
    let lambda1 = Fraction::new(Forest::lambda(1), bvgroup::braid::BraidWord::empty(S), Forest::lambda(0));
    assert_eq!(is_member(&lambda1), Membership::NotMember);
    let w = ForestWord(vec![0, 1, 0]);
    assert!(is_simple_forest(&Forest::from_word(&w)).is_simple);
}
