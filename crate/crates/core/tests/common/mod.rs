//! Brute-force oracles shared by the integration tests. None of these call
//! the library's own gcrf, lclm or reduction code.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use bvgroup::braid::{BraidWord, Flavor};
use bvgroup::forest::{Forest, ForestWord};
use bvgroup::fraction::PrefixMap;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fw(letters: &[usize]) -> Forest {
    Forest::from_word(&ForestWord(letters.to_vec()))
}

pub fn bw(text: &str, flavor: Flavor) -> BraidWord {
    BraidWord::parse(text, flavor).unwrap()
}

/// Every right factor `R` of `f` (so `f = X R`), found by peeling carets
/// off the bottom in every possible order.
pub fn right_factors(f: &Forest) -> HashSet<Forest> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = HashSet::new();
    let mut queue = VecDeque::from([(f.clone(), Vec::new())]);
    while let Some((rest, peeled)) = queue.pop_front() {
        let r: Vec<usize> = peeled.iter().rev().copied().collect();
        let r_forest = fw(&r);
        if !seen.insert(r_forest.to_word().0) {
            continue;
        }
        out.insert(r_forest);
        for i in rest.right_carets() {
            let smaller = rest.strip_right_caret(i).unwrap();
            let mut next = peeled.clone();
            next.push(i);
            queue.push_back((smaller, next));
        }
    }
    out
}

/// Every forest given by a word of length at most `len` in `λ_0 … λ_{max}`.
pub fn small_forests(max: usize, len: usize) -> BTreeSet<Vec<usize>> {
    let mut words = BTreeSet::new();
    let mut layer = vec![Vec::new()];
    words.insert(Vec::new());
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for i in 0..=max {
                let mut v: Vec<usize> = w.clone();
                v.push(i);
                let canon = fw(&v).to_word().0;
                if words.insert(canon.clone()) {
                    next.push(canon);
                }
            }
        }
        layer = next;
    }
    words
}

/// Common left multiples `A f = B g` with `A`, `B` from `small_forests`.
pub fn common_left_multiples(f: &Forest, g: &Forest, max: usize, len: usize) -> Vec<Forest> {
    let pool: Vec<Forest> = small_forests(max, len).iter().map(|w| fw(w)).collect();
    let left: HashSet<Forest> = pool.iter().map(|a| a.mul(f)).collect();
    let mut out: Vec<Forest> = pool
        .iter()
        .map(|b| b.mul(g))
        .filter(|m| left.contains(m))
        .collect();
    out.sort_by_key(|m| m.to_word().0);
    out.dedup();
    out
}

/// Caret count of the coarsest tree-pair diagram behind a prefix map,
/// read off the simplified map: each covered copy contributes its number
/// of sources minus one.
pub fn denominator_carets(map: &PrefixMap) -> usize {
    let mut per_copy = std::collections::BTreeMap::<usize, usize>::new();
    for s in map.pairs().keys() {
        *per_copy.entry(s.copy).or_default() += 1;
    }
    per_copy.values().map(|n| n - 1).sum()
}
