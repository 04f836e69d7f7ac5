mod common;

use bvgroup::braid::{handle, BraidWord, Flavor, Gen, Perm};
use bvgroup::hedge::{ascending_nf, descending_nf, Hedge};
use bvgroup::random;
use common::{bw, rng};
use proptest::prelude::*;

const B: Flavor = Flavor::Braided;
const S: Flavor = Flavor::Symmetric;

fn nu_word(max_index: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..=max_index, 0..=max_len)
}

fn gens(max_index: usize, max_len: usize) -> impl Strategy<Value = Vec<Gen>> {
    prop::collection::vec(
        (0..=max_index, any::<bool>()).prop_map(|(index, inverse)| Gen { index, inverse }),
        0..=max_len,
    )
}

/// Composition of nondecreasing surjections, straight from the definition:
/// a hedge sends each position of the finer level to its root.
fn hedge_by_roots(h: &Hedge, k: &Hedge, span: usize) -> Vec<usize> {
    (0..span).map(|j| h.root_of(k.root_of(j))).collect()
}

proptest! {
    #[test]
    fn both_normal_forms_name_the_same_hedge(w in nu_word(5, 7)) {
        let h = Hedge::from_word(&w);
        prop_assert_eq!(Hedge::from_word(&ascending_nf(&w).unwrap()), h.clone());
        prop_assert_eq!(Hedge::from_word(&descending_nf(&w).unwrap()), h.clone());
        prop_assert_eq!(ascending_nf(&w).unwrap(), h.ascending_word());
        prop_assert_eq!(descending_nf(&w).unwrap(), h.descending_word());
    }

    #[test]
    fn hedge_product_composes_root_maps(a in nu_word(4, 4), b in nu_word(4, 4)) {
        let (h, k) = (Hedge::from_word(&a), Hedge::from_word(&b));
        let hk = h.mul(&k);
        let span = 40;
        prop_assert_eq!((0..span).map(|j| hk.root_of(j)).collect::<Vec<_>>(), hedge_by_roots(&h, &k, span));
    }

    #[test]
    fn partitions_round_trip(w in nu_word(6, 6)) {
        let h = Hedge::from_word(&w);
        prop_assert_eq!(Hedge::from_partition(&h.to_partition()), h);
    }

    #[test]
    fn perm_is_a_homomorphism(u in gens(5, 8), v in gens(5, 8)) {
        let (x, y) = (BraidWord::new(u, B), BraidWord::new(v, B));
        prop_assert_eq!(x.concat(&y).perm(), x.perm().compose(&y.perm()));
        prop_assert_eq!(x.inverse().perm(), x.perm().inverse());
    }

    #[test]
    fn backends_agree_on_triviality(u in gens(3, 10)) {
        let x = BraidWord::new(u, B);
        let w = x.concat(&x.inverse());
        prop_assert!(w.is_trivial());
        prop_assert!(handle::is_trivial(w.letters()));
        prop_assert_eq!(x.is_trivial(), handle::is_trivial(x.letters()));
    }

    #[test]
    fn canonical_words_are_canonical(u in gens(4, 8), pad in 0usize..3) {
        let x = BraidWord::new(u, B);
        // The same element written with a detour through a wider group.
        let far = BraidWord::sigma(6 + pad, B);
        let y = far.concat(&x).concat(&far.inverse());
        prop_assert_eq!(x.canonical_word(), y.canonical_word());
        prop_assert!(x.canonical_word().equals(&x));
        prop_assert!(x.in_bk(x.minimal_width() - 1));
    }
}

#[test]
fn braid_relations_hold() {
    for m in 0..6 {
        let lhs = bw(&format!("s{m} s{} s{m}", m + 1), B);
        let rhs = bw(&format!("s{} s{m} s{}", m + 1, m + 1), B);
        assert!(lhs.equals(&rhs));
        assert!(lhs.equals_by_handles(&rhs));
        for n in m + 2..8 {
            let a = bw(&format!("s{m} s{n}"), B);
            let b = bw(&format!("s{n} s{m}"), B);
            assert!(a.equals(&b) && a.equals_by_handles(&b));
        }
        let sq = bw(&format!("s{m} s{m}"), B);
        assert!(!sq.is_trivial());
        assert!(sq.with_flavor(S).is_trivial());
    }
}

#[test]
fn backends_agree_on_random_pairs() {
    let mut r = rng(7);
    for width in [4, 6] {
        for _ in 0..300 {
            let a = random::braid_word(&mut r, B, width - 2, 10);
            let b = random::braid_word(&mut r, B, width - 2, 10);
            assert_eq!(a.equals(&b), a.equals_by_handles(&b), "{a} vs {b}");
        }
    }
}

#[test]
fn strand_deletion_tracks_the_strand() {
    // The residual index is where the strand with top q ends at the bottom.
    let mut r = rng(11);
    for _ in 0..200 {
        let x = random::braid_word(&mut r, B, 5, 10);
        for q in 0..7 {
            let (_, bottom) = x.delete_strand_tracked(q);
            assert_eq!(x.perm().apply(bottom), q);
        }
    }
    assert_eq!(Perm::adjacent(2).apply(3), 2);
}
