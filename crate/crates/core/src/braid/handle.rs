//! Handle reduction, an equality test independent of the Garside form.
//!
//! A `σ_i`-handle is a factor `σ_i^e v σ_i^{−e}` where `v` contains no
//! `σ_i^{±1}` and no `σ_{i−1}^{±1}`. Reducing it deletes the two ends and
//! replaces every `σ_{i+1}^d` in `v` by `σ_{i+1}^{−e} σ_i^d σ_{i+1}^e`.
//! Always reducing the handle that closes first, a word reduces to the
//! empty word exactly when it represents the trivial braid.

use super::Gen;

/// Upper bound on reduction steps before giving up.
pub const STEP_LIMIT: usize = 1_000_000;

/// The handle closing leftmost, as `(open, close)` positions.
fn first_handle(word: &[Gen]) -> Option<(usize, usize)> {
    for close in 1..word.len() {
        let g = word[close];
        for open in (0..close).rev() {
            let h = word[open];
            if h.index == g.index {
                if h.inverse != g.inverse {
                    return Some((open, close));
                }
                break;
            }
            if h.index + 1 == g.index {
                break;
            }
        }
    }
    None
}

fn reduce_handle(word: &[Gen], open: usize, close: usize) -> Vec<Gen> {
    let i = word[open].index;
    let e = word[open].inverse;
    let mut out = Vec::with_capacity(word.len() + 2 * (close - open));
    out.extend_from_slice(&word[..open]);
    for &g in &word[open + 1..close] {
        if g.index == i + 1 {
            out.push(Gen { index: i + 1, inverse: !e });
            out.push(Gen { index: i, inverse: g.inverse });
            out.push(Gen { index: i + 1, inverse: e });
        } else {
            out.push(g);
        }
    }
    out.extend_from_slice(&word[close + 1..]);
    out
}

/// Fully handle-reduces `word`; `None` if the step limit is hit.
pub fn reduce(word: &[Gen]) -> Option<Vec<Gen>> {
    let mut current = word.to_vec();
    for _ in 0..STEP_LIMIT {
        match first_handle(&current) {
            None => return Some(current),
            Some((open, close)) => current = reduce_handle(&current, open, close),
        }
    }
    None
}

/// Whether `word` is the trivial braid.
///
/// # Panics
///
/// Panics if reduction exceeds [`STEP_LIMIT`].
pub fn is_trivial(word: &[Gen]) -> bool {
    reduce(word)
        .expect("handle reduction exceeded its step limit")
        .is_empty()
}
