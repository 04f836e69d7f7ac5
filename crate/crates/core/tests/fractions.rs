mod common;

use bvgroup::braid::Flavor;
use bvgroup::forest::Forest;
use bvgroup::fraction::{Fraction, StripOrder};
use bvgroup::random;
use bvgroup::zappa::{split, try_unsplit};
use common::{bw, denominator_carets, fw, rng, small_forests};
use rand::Rng;

const B: Flavor = Flavor::Braided;
const S: Flavor = Flavor::Symmetric;
const FLAVORS: [Flavor; 2] = [B, S];

#[test]
fn unsplit_inverts_split() {
    let mut r = rng(1);
    for _ in 0..500 {
        let beta = random::braid_word(&mut r, B, 6, 10);
        let i = r.gen_range(0..8);
        assert_eq!(try_unsplit(&split(&beta, i), i), Some(beta.clone()));
    }
    assert_eq!(try_unsplit(&bw("s0", B), 0), None);
}

#[test]
fn monoid_product_is_associative() {
    for flavor in FLAVORS {
        let mut r = rng(2);
        for _ in 0..200 {
            let x = random::monoid_elt(&mut r, flavor, 4, 4);
            let y = random::monoid_elt(&mut r, flavor, 4, 4);
            let z = random::monoid_elt(&mut r, flavor, 4, 4);
            assert!(x.mul(&y).mul(&z).equals(&x.mul(&y.mul(&z))));
        }
    }
}

#[test]
fn monoid_gcrf_is_a_common_factor_and_leaves_nothing_shared() {
    for flavor in FLAVORS {
        let mut r = rng(3);
        for _ in 0..200 {
            let c = random::monoid_elt(&mut r, flavor, 3, 3);
            let x = random::monoid_elt(&mut r, flavor, 3, 3).mul(&c);
            let y = random::monoid_elt(&mut r, flavor, 3, 3).mul(&c);
            let (xb, yb, g) = x.gcrf(&y);
            assert!(xb.mul(&g).equals(&x), "{x:?} {y:?}");
            assert!(yb.mul(&g).equals(&y));
            // c is a common right factor, so the gcrf has at least its carets.
            assert!(g.forest.length() >= c.forest.length());
            // Nothing more can be cancelled: x̄ ȳ⁻¹ is already reduced.
            let q = Fraction::from_pair(&xb, &yb);
            assert_eq!(q.reduce().denominator(), &yb.forest);
        }
    }
}

/// Every representative with a fattening of up to two carets reduces to
/// the same triple.
#[test]
fn reduced_triples_are_unique_among_small_fattenings() {
    let js: Vec<Forest> = small_forests(5, 2).iter().map(|w| fw(w)).collect();
    for flavor in FLAVORS {
        let mut r = rng(4);
        for _ in 0..30 {
            let x = random::fraction(&mut r, flavor, 3, 3).reduce();
            for j in &js {
                let gamma = random::braid_word(&mut r, flavor, 5, 3);
                let fat = x.fatten(j, &gamma);
                assert_eq!(fat.reduce(), x, "fattening by {j}, {gamma}");
                assert_eq!(fat.reduce_with(StripOrder::Descending), x);
            }
        }
    }
}

#[test]
fn group_axioms() {
    for flavor in FLAVORS {
        let mut r = rng(5);
        let id = Fraction::identity(flavor);
        for _ in 0..150 {
            let x = random::fraction(&mut r, flavor, 3, 3);
            let y = random::fraction(&mut r, flavor, 3, 3);
            let z = random::fraction(&mut r, flavor, 3, 3);
            assert!(x.mul(&y).mul(&z).equals(&x.mul(&y.mul(&z))));
            assert!(x.mul(&id).equals(&x) && id.mul(&x).equals(&x));
            assert!(x.mul(&x.inverse()).is_identity());
            assert!(x.inverse().mul(&x).is_identity());
        }
    }
}

#[test]
fn monoid_embeds() {
    let mut r = rng(6);
    for flavor in FLAVORS {
        for _ in 0..200 {
            let x = random::monoid_elt(&mut r, flavor, 3, 4);
            let y = random::monoid_elt(&mut r, flavor, 3, 4);
            let lhs = Fraction::embed(&x).mul(&Fraction::embed(&y));
            assert!(lhs.equals(&Fraction::embed(&x.mul(&y))));
            assert_eq!(Fraction::embed(&x).equals(&Fraction::embed(&y)), x.equals(&y));
        }
    }
}

#[test]
fn prefix_maps_compose_like_fractions() {
    let mut r = rng(8);
    for _ in 0..300 {
        let x = random::fraction(&mut r, S, 3, 3);
        let y = random::fraction(&mut r, S, 3, 3);
        let lhs = x.mul(&y).as_prefix_map();
        let rhs = x.as_prefix_map().compose(&y.as_prefix_map());
        assert!(lhs.same_map(&rhs), "{x} · {y}: {lhs} vs {rhs}");
        assert!(x.inverse().as_prefix_map().same_map(&x.as_prefix_map().inverse()));
    }
}

/// The reduced triple in `V̂` has the fewest carets of any tree-pair
/// representative, which the prefix map exposes independently.
#[test]
fn reduction_is_minimal_in_the_symmetric_flavor() {
    let mut r = rng(9);
    for _ in 0..300 {
        let x = random::fraction(&mut r, S, 4, 4);
        let red = x.reduce();
        assert_eq!(red.denominator().length(), denominator_carets(&x.as_prefix_map()), "{x}");
    }
}

#[test]
fn projection_is_a_homomorphism_and_lifts() {
    let mut r = rng(10);
    for _ in 0..200 {
        let x = random::fraction(&mut r, B, 3, 3);
        let y = random::fraction(&mut r, B, 3, 3);
        assert!(x.mul(&y).project().equals(&x.project().mul(&y.project())));
        let s = x.project();
        assert!(s.lift().project().equals(&s));
    }
}
