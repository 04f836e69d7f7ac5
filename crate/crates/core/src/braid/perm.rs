//! Finitely supported permutations of `ℕ`.

use std::fmt;

/// A bijection of `ℕ` that fixes all but finitely many points.
///
/// Stored as the images of `0..n` for the smallest `n` beyond which every
/// point is fixed.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity() -> Self {
        Perm::default()
    }

    /// The transposition of `i` and `i + 1`.
    pub fn adjacent(i: usize) -> Self {
        let mut images: Vec<usize> = (0..i + 2).collect();
        images.swap(i, i + 1);
        Perm { images }
    }

    /// Builds a permutation from the images of `0..n`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        Some(Perm { images }.trimmed())
    }

    /// The reversal `j ↦ n − 1 − j` of `0..n`.
    pub fn longest(n: usize) -> Self {
        Perm {
            images: (0..n).rev().collect(),
        }
        .trimmed()
    }

    fn trimmed(mut self) -> Self {
        while let Some(&last) = self.images.last() {
            if last + 1 == self.images.len() {
                self.images.pop();
            } else {
                break;
            }
        }
        self
    }

    pub fn apply(&self, j: usize) -> usize {
        self.images.get(j).copied().unwrap_or(j)
    }

    /// Points beyond this bound are fixed.
    pub fn support_bound(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_empty()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        let n = self.images.len().max(other.images.len());
        Perm {
            images: (0..n).map(|j| self.apply(other.apply(j))).collect(),
        }
        .trimmed()
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (j, &x) in self.images.iter().enumerate() {
            images[x] = j;
        }
        Perm { images }
    }

    /// Images of `0..n`, padding with fixed points.
    pub fn images(&self, n: usize) -> Vec<usize> {
        (0..n.max(self.images.len())).map(|j| self.apply(j)).collect()
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let im = &self.images;
        (0..im.len())
            .map(|a| (a + 1..im.len()).filter(|&b| im[a] > im[b]).count())
            .sum()
    }

    /// `s_i ∘ self` is shorter: value `i + 1` sits left of value `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.apply(i) > inv.apply(i + 1)
    }

    /// `self ∘ s_i` is shorter.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    /// A reduced word `a_1 … a_k` with `self = s_{a_1} ∘ … ∘ s_{a_k}`,
    /// taking the smallest left descent at each step.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut rest = self.clone();
        let mut out = Vec::new();
        while !rest.is_identity() {
            let i = (0..rest.support_bound())
                .find(|&i| rest.has_left_descent(i))
                .expect("a non-identity permutation has a descent");
            out.push(i);
            rest = Perm::adjacent(i).compose(&rest);
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("id");
        }
        let moved: Vec<_> = (0..self.images.len())
            .filter(|&j| self.apply(j) != j)
            .map(|j| format!("{j}↦{}", self.apply(j)))
            .collect();
        f.write_str(&moved.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let s0 = Perm::adjacent(0);
        assert_eq!(s0.apply(0), 1);
        assert_eq!(s0.apply(1), 0);
        assert_eq!(s0.apply(5), 5);
        assert!(s0.compose(&s0).is_identity());
        assert_eq!(Perm::longest(3).length(), 3);
        assert_eq!(Perm::from_images(vec![0, 1, 2]), Some(Perm::identity()));
        assert_eq!(Perm::from_images(vec![0, 0]), None);
    }

    #[test]
    fn reduced_words_rebuild() {
        let p = Perm::from_images(vec![3, 1, 0, 4, 2]).unwrap();
        let w = p.reduced_word();
        assert_eq!(w.len(), p.length());
        let back = w
            .iter()
            .fold(Perm::identity(), |acc, &i| acc.compose(&Perm::adjacent(i)));
        assert_eq!(back, p);
    }
}
