//! Left-greedy normal form in the braid group `B_n`.
//!
//! Every braid in `B_n` is uniquely `Δ^p A_1 … A_r` with each `A_k` a
//! proper non-trivial permutation braid and each adjacent pair
//! left-weighted. Permutation braids are stored as their permutations,
//! composed with the same convention as [`BraidWord::perm`], so a positive
//! word `AB` has permutation `π_A ∘ π_B`.
//!
//! [`BraidWord::perm`]: super::BraidWord::perm

use super::perm::Perm;
use super::Gen;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GarsideForm {
    pub strands: usize,
    pub power: i64,
    pub factors: Vec<Perm>,
}

impl GarsideForm {
    pub fn identity(strands: usize) -> Self {
        GarsideForm {
            strands: strands.max(1),
            power: 0,
            factors: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.power == 0 && self.factors.is_empty()
    }

    /// Normal form of a word whose letters all lie in `B_strands`.
    pub fn of_word(letters: &[Gen], strands: usize) -> Self {
        let mut nf = GarsideForm::identity(strands);
        for g in letters {
            nf.push(*g);
        }
        nf
    }

    fn delta(&self) -> Perm {
        Perm::longest(self.strands)
    }

    /// `Δ A Δ⁻¹`, which is `s_i ↦ s_{n−2−i}` on generators.
    fn flip(&self, p: &Perm) -> Perm {
        let d = self.delta();
        d.compose(p).compose(&d)
    }

    fn push(&mut self, g: Gen) {
        assert!(
            g.index + 1 < self.strands,
            "generator s{} outside B_{}",
            g.index,
            self.strands
        );
        if g.inverse {
            // σ_i⁻¹ = Δ⁻¹ · (Δ σ_i⁻¹), and Δσ_i⁻¹ is simple.
            self.factors = self.factors.iter().map(|a| self.flip(a)).collect();
            self.power -= 1;
            let x = self.delta().compose(&Perm::adjacent(g.index));
            self.append(x);
        } else {
            self.append(Perm::adjacent(g.index));
        }
    }

    fn append(&mut self, x: Perm) {
        self.factors.push(x);
        for k in (0..self.factors.len() - 1).rev() {
            let (head, tail) = self.factors.split_at_mut(k + 1);
            left_weight(&mut head[k], &mut tail[0]);
        }
        while self.factors.last().is_some_and(Perm::is_identity) {
            self.factors.pop();
        }
        let delta = self.delta();
        while !delta.is_identity() && self.factors.first() == Some(&delta) {
            self.factors.remove(0);
            self.power += 1;
        }
    }

    /// A word for this form: `Δ^p` expanded, then each factor.
    pub fn to_word(&self) -> Vec<Gen> {
        let delta_word = self.delta().reduced_word();
        let mut out = Vec::new();
        if self.power >= 0 {
            for _ in 0..self.power {
                out.extend(delta_word.iter().map(|&i| Gen::pos(i)));
            }
        } else {
            for _ in 0..-self.power {
                out.extend(delta_word.iter().rev().map(|&i| Gen::neg(i)));
            }
        }
        for a in &self.factors {
            out.extend(a.reduced_word().into_iter().map(Gen::pos));
        }
        out
    }
}

/// Moves generators from the front of `b` to the back of `a` while that
/// keeps `a` simple.
fn left_weight(a: &mut Perm, b: &mut Perm) {
    loop {
        let bound = a.support_bound().max(b.support_bound());
        let Some(i) = (0..bound).find(|&i| b.has_left_descent(i) && !a.has_right_descent(i))
        else {
            return;
        };
        let s = Perm::adjacent(i);
        *a = a.compose(&s);
        *b = s.compose(b);
    }
}
