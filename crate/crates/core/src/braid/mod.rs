//! Braid words in `B∞` and `S∞`.
//!
//! A [`BraidWord`] is a word in the generators `σ_i^{±1}` tagged with a
//! [`Flavor`]. In the symmetric flavor `σ_i² = 1`, signs carry no
//! information and are dropped on construction.
//!
//! Words are read left to right as a diagram drawn top to bottom, and
//! [`BraidWord::perm`] sends each bottom position to the top of the strand
//! ending there. With that reading `perm(uv) = perm(u) ∘ perm(v)` and a
//! braid `τ` moves the caret on leaf `j` to leaf `τ(j)`.

mod garside;
pub mod handle;
mod perm;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use garside::GarsideForm;
pub use perm::Perm;

use crate::hedge;
use crate::rewrite::RewriteError;

/// Whether braid words live in the braid group or the symmetric group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Flavor {
    #[default]
    Braided,
    Symmetric,
}

impl Flavor {
    pub fn code(self) -> &'static str {
        match self {
            Flavor::Braided => "B",
            Flavor::Symmetric => "S",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "B" | "b" | "braided" => Ok(Flavor::Braided),
            "S" | "s" | "symmetric" => Ok(Flavor::Symmetric),
            other => Err(format!("unknown flavor `{other}` (expected B or S)")),
        }
    }
}

impl Serialize for Flavor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.code())
    }
}

impl<'de> Deserialize<'de> for Flavor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A generator `σ_index` or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub index: usize,
    pub inverse: bool,
}

impl Gen {
    pub fn pos(index: usize) -> Self {
        Gen {
            index,
            inverse: false,
        }
    }

    pub fn neg(index: usize) -> Self {
        Gen {
            index,
            inverse: true,
        }
    }

    pub fn inv(self) -> Self {
        Gen {
            inverse: !self.inverse,
            ..self
        }
    }

    /// `±(index + 1)`.
    pub fn signed(self) -> i64 {
        let v = self.index as i64 + 1;
        if self.inverse {
            -v
        } else {
            v
        }
    }

    pub fn from_signed(v: i64) -> Option<Self> {
        match v {
            0 => None,
            v if v > 0 => Some(Gen::pos(v as usize - 1)),
            v => Some(Gen::neg((-v) as usize - 1)),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.index)?;
        if self.inverse {
            f.write_str("'")?;
        }
        Ok(())
    }
}

/// A word in `σ_i^{±1}`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BraidWord {
    letters: Vec<Gen>,
    flavor: Flavor,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("bad letter `{0}`")]
    BadLetter(String),
    #[error(transparent)]
    Rewrite(#[from] RewriteError<usize>),
}

impl BraidWord {
    pub fn new(letters: Vec<Gen>, flavor: Flavor) -> Self {
        let letters = match flavor {
            Flavor::Braided => letters,
            Flavor::Symmetric => letters.into_iter().map(|g| Gen::pos(g.index)).collect(),
        };
        BraidWord { letters, flavor }
    }

    pub fn empty(flavor: Flavor) -> Self {
        BraidWord::new(Vec::new(), flavor)
    }

    pub fn sigma(i: usize, flavor: Flavor) -> Self {
        BraidWord::new(vec![Gen::pos(i)], flavor)
    }

    pub fn sigma_inv(i: usize, flavor: Flavor) -> Self {
        BraidWord::new(vec![Gen::neg(i)], flavor)
    }

    /// Positive word `σ_{i1} σ_{i2} …`.
    pub fn positive(indices: &[usize], flavor: Flavor) -> Self {
        BraidWord::new(indices.iter().map(|&i| Gen::pos(i)).collect(), flavor)
    }

    pub fn letters(&self) -> &[Gen] {
        &self.letters
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// The same word read in another flavor.
    pub fn with_flavor(&self, flavor: Flavor) -> Self {
        BraidWord::new(self.letters.clone(), flavor)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Strands touched: one more than the largest moved position.
    pub fn width(&self) -> usize {
        self.letters.iter().map(|g| g.index + 2).max().unwrap_or(1)
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        debug_assert_eq!(self.flavor, other.flavor);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord::new(letters, self.flavor)
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord::new(
            self.letters.iter().rev().map(|g| g.inv()).collect(),
            self.flavor,
        )
    }

    /// Cancels adjacent inverse pairs (adjacent equal letters in the
    /// symmetric flavor).
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Gen> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            let cancels = out.last().is_some_and(|&h| {
                h.index == g.index
                    && (self.flavor == Flavor::Symmetric || h.inverse != g.inverse)
            });
            if cancels {
                out.pop();
            } else {
                out.push(g);
            }
        }
        BraidWord::new(out, self.flavor)
    }

    /// The underlying permutation: bottom position `j` to the top of the
    /// strand ending there.
    pub fn perm(&self) -> Perm {
        self.letters
            .iter()
            .fold(Perm::identity(), |acc, g| acc.compose(&Perm::adjacent(g.index)))
    }

    /// Left-greedy normal form inside `B_strands`.
    ///
    /// # Panics
    ///
    /// Panics if a letter lies outside `B_strands`.
    pub fn garside(&self, strands: usize) -> GarsideForm {
        GarsideForm::of_word(&self.letters, strands)
    }

    /// Equality of the group elements.
    pub fn equals(&self, other: &BraidWord) -> bool {
        assert_eq!(self.flavor, other.flavor, "comparing braids of different flavors");
        match self.flavor {
            Flavor::Symmetric => self.perm() == other.perm(),
            Flavor::Braided => {
                let n = self.width().max(other.width());
                self.garside(n) == other.garside(n)
            }
        }
    }

    /// Equality through handle reduction of `self · other⁻¹`.
    pub fn equals_by_handles(&self, other: &BraidWord) -> bool {
        assert_eq!(self.flavor, other.flavor, "comparing braids of different flavors");
        match self.flavor {
            Flavor::Symmetric => self.perm() == other.perm(),
            Flavor::Braided => handle::is_trivial(self.concat(&other.inverse()).letters()),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.equals(&BraidWord::empty(self.flavor))
    }

    /// The canonical value of this element: the same for every word that
    /// represents it, in any ambient braid group.
    pub fn canonical(&self) -> Canonical {
        match self.flavor {
            Flavor::Symmetric => Canonical::Symmetric(self.perm()),
            Flavor::Braided => {
                let (m, word) = self.narrowest();
                Canonical::Braided(word.garside(m))
            }
        }
    }

    /// Smallest `m` with the element in the standard copy of `B_m`.
    pub fn minimal_width(&self) -> usize {
        match self.flavor {
            Flavor::Symmetric => self.perm().support_bound().max(1),
            Flavor::Braided => self.narrowest().0,
        }
    }

    /// Peels straight strands off the top end while the element stays the
    /// same, returning the final width and a word inside it.
    fn narrowest(&self) -> (usize, BraidWord) {
        let n = self.width();
        let nf = self.garside(n);
        let mut m = n;
        let mut reduced = self.clone();
        while m > 1 {
            let next = reduced.delete_strand(m - 1);
            if next.garside(n) != nf {
                break;
            }
            reduced = next;
            m -= 1;
        }
        (m, reduced)
    }

    /// A fixed word for the element, equal for equal elements.
    pub fn canonical_word(&self) -> BraidWord {
        let letters = match self.canonical() {
            Canonical::Symmetric(p) => p.reduced_word().into_iter().map(Gen::pos).collect(),
            Canonical::Braided(nf) => nf.to_word(),
        };
        BraidWord::new(letters, self.flavor).free_reduce()
    }

    /// Deletes the strand with top `q`, returning the remaining braid and
    /// the bottom position where the deleted strand ended.
    pub fn delete_strand_tracked(&self, q: usize) -> (BraidWord, usize) {
        let mut q = q;
        let mut out = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            let m = g.index;
            if q < m {
                out.push(Gen { index: m - 1, ..g });
            } else if q > m + 1 {
                out.push(g);
            }
            q = Perm::adjacent(m).apply(q);
        }
        (BraidWord::new(out, self.flavor), q)
    }

    pub fn delete_strand(&self, q: usize) -> BraidWord {
        self.delete_strand_tracked(q).0
    }

    /// Each intermediate state when pushing `δ_q` through the word, as
    /// `(emitted prefix, δ index, letters not yet crossed)`.
    pub fn delete_strand_chain(&self, q: usize) -> Vec<(BraidWord, usize, BraidWord)> {
        let mut chain = Vec::with_capacity(self.letters.len() + 1);
        for k in 0..=self.letters.len() {
            let head = BraidWord::new(self.letters[..k].to_vec(), self.flavor);
            let (emitted, residual) = head.delete_strand_tracked(q);
            let rest = BraidWord::new(self.letters[k..].to_vec(), self.flavor);
            chain.push((emitted, residual, rest));
        }
        chain
    }

    /// Membership in the standard copy of `B_{k+1}` (or `S_{k+1}`).
    pub fn in_bk(&self, k: usize) -> bool {
        let n = self.width();
        let mut reduced = self.clone();
        for top in (k + 1..n).rev() {
            reduced = reduced.delete_strand(top);
        }
        self.equals(&reduced)
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|g| g.signed()).collect()
    }

    pub fn from_signed(values: &[i64], flavor: Flavor) -> Result<Self, BraidError> {
        values
            .iter()
            .map(|&v| Gen::from_signed(v).ok_or_else(|| BraidError::BadLetter(v.to_string())))
            .collect::<Result<Vec<_>, _>>()
            .map(|letters| BraidWord::new(letters, flavor))
    }

    /// Parses `s0 s2' s1`; `1` or the empty string is the empty word.
    pub fn parse(text: &str, flavor: Flavor) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let bad = || BraidError::BadLetter(token.to_string());
            let body = token.strip_prefix('s').ok_or_else(bad)?;
            let (digits, inverse) = match body.strip_suffix('\'') {
                Some(d) => (d, true),
                None => (body, false),
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let index: u32 = digits.parse().map_err(|_| bad())?;
            letters.push(Gen {
                index: index as usize,
                inverse,
            });
        }
        Ok(BraidWord::new(letters, flavor))
    }
}

/// Canonical value of a braid: a Garside form at minimal width, or a
/// permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Canonical {
    Braided(GarsideForm),
    Symmetric(Perm),
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        f.write_str(&crate::rewrite::show(&self.letters))
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord[{}]({self})", self.flavor)
    }
}

/// A word in the deletion generators `δ_i`, which multiply like hedges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DeltaWord(pub Vec<usize>);

impl DeltaWord {
    /// The ascending form under `δ_q δ_m → δ_m δ_{q+1}` for `m ≤ q`.
    pub fn normalize(&self) -> Result<DeltaWord, RewriteError<usize>> {
        hedge::ascending_nf(&self.0).map(DeltaWord)
    }

    /// Pushes the whole word through a braid, deleting the strands in
    /// order. Returns the emitted braid and the residual deletion word.
    pub fn act(&self, braid: &BraidWord) -> (BraidWord, DeltaWord) {
        let mut rest = braid.clone();
        let mut residual = Vec::with_capacity(self.0.len());
        for &q in self.0.iter().rev() {
            let (next, r) = rest.delete_strand_tracked(q);
            rest = next;
            residual.push(r);
        }
        residual.reverse();
        (rest, DeltaWord(residual))
    }
}

impl fmt::Display for DeltaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<_> = self.0.iter().map(|i| format!("d{i}")).collect();
        f.write_str(&parts.join(" "))
    }
}
