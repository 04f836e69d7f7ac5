//! The groups of right fractions `B̂V` and `V̂`.
//!
//! An element is stored as a triple `(F, α, G)` meaning `(Fα)G⁻¹`, with
//! `F` and `G` forests and `α` a braid word. Every element has exactly one
//! reduced triple: the one where no caret can be cancelled from the right
//! of both `Fα` and `G` at once. [`Fraction::reduce`] finds it and writes
//! the braid in a canonical word, so reduced triples of equal elements are
//! identical values.

mod prefix;

use std::fmt;

pub use prefix::{LeafAddr, PrefixMap};

use crate::braid::{BraidWord, Flavor};
use crate::forest::{Forest, ForestWord};
use crate::zappa::{act, strip_common, MonoidElt};

/// Order in which candidate carets are tried during reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum StripOrder {
    #[default]
    Ascending,
    Descending,
}

/// The triple `(F, α, G)` standing for `(Fα)G⁻¹`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Fraction {
    numerator: Forest,
    braid: BraidWord,
    denominator: Forest,
    normalized: bool,
}

impl Fraction {
    pub fn new(numerator: Forest, braid: BraidWord, denominator: Forest) -> Self {
        Fraction {
            numerator,
            braid,
            denominator,
            normalized: false,
        }
    }

    /// `x y⁻¹` for monoid elements `x = Fβ`, `y = Gγ`: the triple
    /// `(F, βγ⁻¹, G)`.
    pub fn from_pair(x: &MonoidElt, y: &MonoidElt) -> Self {
        assert_eq!(x.flavor(), y.flavor(), "mixing flavors");
        Fraction::new(
            x.forest.clone(),
            x.braid.concat(&y.braid.inverse()).free_reduce(),
            y.forest.clone(),
        )
    }

    pub fn identity(flavor: Flavor) -> Self {
        Fraction {
            numerator: Forest::trivial(),
            braid: BraidWord::empty(flavor),
            denominator: Forest::trivial(),
            normalized: true,
        }
    }

    pub fn embed_forest(f: Forest, flavor: Flavor) -> Self {
        Fraction::new(f, BraidWord::empty(flavor), Forest::trivial())
    }

    pub fn embed_braid(beta: BraidWord) -> Self {
        Fraction::new(Forest::trivial(), beta, Forest::trivial())
    }

    pub fn embed(x: &MonoidElt) -> Self {
        Fraction::new(x.forest.clone(), x.braid.clone(), Forest::trivial())
    }

    pub fn numerator(&self) -> &Forest {
        &self.numerator
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn denominator(&self) -> &Forest {
        &self.denominator
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn flavor(&self) -> Flavor {
        self.braid.flavor()
    }

    /// `Fα` as a monoid element.
    pub fn numerator_elt(&self) -> MonoidElt {
        MonoidElt::new(self.numerator.clone(), self.braid.clone())
    }

    pub fn denominator_elt(&self) -> MonoidElt {
        MonoidElt::from_forest(self.denominator.clone(), self.flavor())
    }

    pub fn reduce(&self) -> Fraction {
        self.reduce_with(StripOrder::Ascending)
    }

    /// Strips carets until none can be stripped, trying candidate
    /// positions in the given order. The result does not depend on the
    /// order.
    pub fn reduce_with(&self, order: StripOrder) -> Fraction {
        if self.normalized {
            return self.clone();
        }
        let mut f = self.numerator.clone();
        let mut alpha = self.braid.free_reduce();
        let mut g = self.denominator.clone();
        'outer: loop {
            let mut candidates = g.right_carets();
            if order == StripOrder::Descending {
                candidates.reverse();
            }
            for i in candidates {
                if let Some(step) = strip_common(&f, &alpha, &g, i) {
                    (f, alpha, g) = step;
                    continue 'outer;
                }
            }
            break;
        }
        Fraction {
            numerator: f,
            braid: alpha.canonical_word(),
            denominator: g,
            normalized: true,
        }
    }

    pub fn mul(&self, other: &Fraction) -> Fraction {
        assert_eq!(self.flavor(), other.flavor(), "mixing flavors");
        // F α G⁻¹ · H β K⁻¹ with U = G ∪ H = GX = HY, so G⁻¹H = XY⁻¹ and
        // the product is F(α·X) · α^X ((β⁻¹)^Y)⁻¹ · (K(β⁻¹·Y))⁻¹.
        let union = self.denominator.union(&other.numerator);
        let x = self.denominator.left_divide(&union).expect("G divides G ∪ H");
        let y = other.numerator.left_divide(&union).expect("H divides G ∪ H");
        let (ax, alpha_x) = act(&self.braid, &x.to_word().0);
        let (by, beta_y) = act(&other.braid.inverse(), &y.to_word().0);
        let numerator = self.numerator.mul(&Forest::from_word(&ForestWord(ax)));
        let denominator = other
            .denominator
            .mul(&Forest::from_word(&ForestWord(by)));
        Fraction::new(
            numerator,
            alpha_x.concat(&beta_y.inverse()).free_reduce(),
            denominator,
        )
        .reduce()
    }

    pub fn inverse(&self) -> Fraction {
        Fraction {
            numerator: self.denominator.clone(),
            braid: self.braid.inverse(),
            denominator: self.numerator.clone(),
            normalized: false,
        }
    }

    /// Equality of group elements.
    pub fn equals(&self, other: &Fraction) -> bool {
        assert_eq!(self.flavor(), other.flavor(), "mixing flavors");
        let a = self.reduce();
        let b = other.reduce();
        a.numerator == b.numerator && a.denominator == b.denominator && a.braid.equals(&b.braid)
    }

    pub fn is_identity(&self) -> bool {
        self.equals(&Fraction::identity(self.flavor()))
    }

    /// The image in `V̂`: the braid read as a permutation.
    pub fn project(&self) -> Fraction {
        Fraction::new(
            self.numerator.clone(),
            self.braid.with_flavor(Flavor::Symmetric),
            self.denominator.clone(),
        )
        .reduce()
    }

    /// The same triple read in the braided flavor; a preimage of a
    /// symmetric element under [`Fraction::project`].
    pub fn lift(&self) -> Fraction {
        Fraction::new(
            self.numerator.clone(),
            self.braid.with_flavor(Flavor::Braided),
            self.denominator.clone(),
        )
    }

    /// Another representative of the same element: `(FαJγ)(GJγ)⁻¹`.
    ///
    /// `γ⁻¹` is written as a canonical word so that the two copies of `γ`
    /// do not simply cancel letter by letter.
    pub fn fatten(&self, j: &Forest, gamma: &BraidWord) -> Fraction {
        let (moved, alpha_j) = act(&self.braid, &j.to_word().0);
        let numerator = self.numerator.mul(&Forest::from_word(&ForestWord(moved)));
        let braid = alpha_j
            .concat(gamma)
            .concat(&gamma.inverse().canonical_word());
        Fraction::new(numerator, braid, self.denominator.mul(j))
    }

    /// The triple as a prefix substitution on infinite binary addresses.
    /// Leaves of the denominator are sent to leaves of the numerator
    /// through the braid's permutation.
    pub fn as_prefix_map(&self) -> PrefixMap {
        PrefixMap::from_triple(&self.numerator, &self.braid.perm(), &self.denominator)
    }

    /// `NUM / DEN` text: numerator monoid word, then denominator word.
    pub fn text(&self) -> String {
        format!("{} / {}", self.numerator_elt(), self.denominator_elt())
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fraction[{}]({})", self.flavor(), self.text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: Flavor = Flavor::Braided;
    const S: Flavor = Flavor::Symmetric;

    fn fw(letters: &[usize]) -> Forest {
        Forest::from_word(&ForestWord(letters.to_vec()))
    }

    fn bw(text: &str) -> BraidWord {
        BraidWord::parse(text, B).unwrap()
    }

    fn frac(f: &[usize], a: &str, g: &[usize]) -> Fraction {
        Fraction::new(fw(f), bw(a), fw(g))
    }

    #[test]
    fn construction_examples() {
        let x = MonoidElt::new(Forest::lambda(0), bw(""));
        assert_eq!(Fraction::from_pair(&x, &x), frac(&[0], "", &[0]));
        let y = MonoidElt::new(Forest::lambda(0), bw("s0"));
        assert_eq!(Fraction::from_pair(&y, &y), frac(&[0], "", &[0]));
        let z = MonoidElt::new(fw(&[0, 1]), bw("s0 s1 s0"));
        let w = MonoidElt::new(fw(&[0, 1]), bw(""));
        assert_eq!(Fraction::from_pair(&z, &w), frac(&[0, 1], "s0 s1 s0", &[0, 1]));
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(frac(&[0], "", &[0]).reduce(), Fraction::identity(B));
        let t = frac(&[0, 1], "s0 s1 s0", &[0, 1]);
        let r = t.reduce();
        assert_eq!((r.numerator(), r.denominator()), (t.numerator(), t.denominator()));
        assert!(r.braid().equals(t.braid()));
    }

    #[test]
    fn group_examples() {
        let x = frac(&[0, 2], "s1 s0'", &[1]);
        assert!(x.mul(&x.inverse()).is_identity());
        assert!(Fraction::identity(B).mul(&x).equals(&x));
        let e = Fraction::embed(&MonoidElt::new(Forest::lambda(0), bw("s0")));
        let sq = MonoidElt::new(Forest::lambda(0), bw("s0"));
        assert!(e.mul(&e).equals(&Fraction::embed(&sq.mul(&sq))));
        assert!(e.mul(&e).equals(&frac(&[0, 1], "s0 s1 s0", &[])));
    }

    #[test]
    fn equality_examples() {
        let x = frac(&[0], "s0", &[0]);
        assert!(x.equals(&x));
        assert!(!x.is_identity());
        assert!(!x.project().is_identity());
        let fat = x.fatten(&fw(&[1, 3]), &bw("s2 s0'"));
        assert!(fat.equals(&x));
        assert_eq!(fat.reduce(), x.reduce());
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(Fraction::embed_forest(Forest::trivial(), B).reduce(), Fraction::identity(B));
        assert!(!Fraction::embed_forest(Forest::lambda(0), B)
            .equals(&Fraction::embed_forest(Forest::lambda(1), B)));
        let e = Fraction::embed(&MonoidElt::new(Forest::lambda(0), bw("s0"))).reduce();
        assert_eq!(e, Fraction::new(Forest::lambda(0), bw("s0"), Forest::trivial()).reduce());
        assert_eq!(e.braid(), &bw("s0"));
    }

    #[test]
    fn projection_examples() {
        assert_eq!(Fraction::identity(B).project(), Fraction::identity(S));
        assert!(frac(&[0], "s0 s0", &[0]).project().is_identity());
        assert!(!frac(&[0], "s0 s0", &[0]).is_identity());
    }

    #[test]
    fn prefix_map_example() {
        let m = frac(&[0], "s0", &[0]).project().as_prefix_map();
        assert_eq!(m.to_string(), "0.0 ↦ 0.1, 0.1 ↦ 0.0");
        assert!(Fraction::identity(S).as_prefix_map().is_identity());
    }
}
