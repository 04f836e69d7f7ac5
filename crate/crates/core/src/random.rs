//! Random elements for property checks and the CLI's sampling drivers.
//!
//! Every generator takes the RNG explicitly so runs are reproducible from
//! a seed.

use rand::Rng;

use crate::braid::{BraidWord, Flavor, Gen};
use crate::forest::{Forest, ForestWord};
use crate::fraction::Fraction;
use crate::zappa::MonoidElt;

/// A `λ`-word of length at most `max_len` with indices at most `max_index`.
pub fn forest_word<R: Rng>(rng: &mut R, max_index: usize, max_len: usize) -> ForestWord {
    let len = rng.gen_range(0..=max_len);
    ForestWord((0..len).map(|_| rng.gen_range(0..=max_index)).collect())
}

pub fn forest<R: Rng>(rng: &mut R, max_index: usize, max_len: usize) -> Forest {
    Forest::from_word(&forest_word(rng, max_index, max_len))
}

/// A word of length at most `max_len` in `σ_0^{±1} … σ_{max_index}^{±1}`.
pub fn braid_word<R: Rng>(rng: &mut R, flavor: Flavor, max_index: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    braid_word_exact(rng, flavor, max_index, len)
}

/// A word of exactly `len` letters.
pub fn braid_word_exact<R: Rng>(
    rng: &mut R,
    flavor: Flavor,
    max_index: usize,
    len: usize,
) -> BraidWord {
    let letters = (0..len)
        .map(|_| Gen {
            index: rng.gen_range(0..=max_index),
            inverse: rng.gen_bool(0.5),
        })
        .collect();
    BraidWord::new(letters, flavor)
}

pub fn monoid_elt<R: Rng>(
    rng: &mut R,
    flavor: Flavor,
    max_index: usize,
    max_len: usize,
) -> MonoidElt {
    MonoidElt::new(
        forest(rng, max_index, max_len),
        braid_word(rng, flavor, max_index, max_len),
    )
}

/// A triple `(F, α, G)` with `F` and `G` of equal length, so that the
/// braid lives on the right number of strands.
pub fn fraction<R: Rng>(rng: &mut R, flavor: Flavor, max_index: usize, max_len: usize) -> Fraction {
    let len = rng.gen_range(0..=max_len);
    let f = Forest::from_word(&ForestWord((0..len).map(|_| rng.gen_range(0..=max_index)).collect()));
    let g = Forest::from_word(&ForestWord((0..len).map(|_| rng.gen_range(0..=max_index)).collect()));
    let alpha = braid_word(rng, flavor, max_index + len, max_len);
    Fraction::new(f, alpha, g)
}

/// A simple forest of type `k`: every caret lands in tree 0.
pub fn simple_forest<R: Rng>(rng: &mut R, k: usize) -> Forest {
    Forest::from_word(&ForestWord((1..=k).map(|j| rng.gen_range(0..j)).collect()))
}

/// A braid in the standard copy of `B_{k+1}`.
pub fn braid_in_bk<R: Rng>(rng: &mut R, flavor: Flavor, k: usize, max_len: usize) -> BraidWord {
    if k == 0 {
        return BraidWord::empty(flavor);
    }
    braid_word(rng, flavor, k - 1, max_len)
}

/// A fraction with simple numerator and denominator of one type and a
/// braid on the leaves of tree 0.
pub fn simple_balanced<R: Rng>(
    rng: &mut R,
    flavor: Flavor,
    max_type: usize,
    max_len: usize,
) -> Fraction {
    let k = rng.gen_range(0..=max_type);
    Fraction::new(
        simple_forest(rng, k),
        braid_in_bk(rng, flavor, k, max_len),
        simple_forest(rng, k),
    )
}
