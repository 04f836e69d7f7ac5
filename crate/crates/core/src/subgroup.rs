//! Simple elements and the subgroups `BV ⊂ B̂V` and `V ⊂ V̂`.
//!
//! A forest is simple of type `k` when all `k` of its carets lie in tree 0.
//! A monoid element `Fβ` is simple of type `k` when `F` is, and `β` only
//! moves the `k + 1` leaves of tree 0. `BV` (or `V`) is the set of
//! fractions with a representative whose numerator and denominator are
//! simple of one type.
//!
//! Membership is decided on the reduced triple. Left factors of simple
//! elements are simple, so if the reduced triple has a non-simple forest
//! then so does every representative. The braid condition on the reduced
//! triple is checked too; that it is necessary is not proved here, and the
//! test suite checks it on random members.

use std::fmt;

use crate::braid::{BraidWord, Flavor, Gen};
use crate::forest::{Forest, ForestWord};
use crate::fraction::Fraction;
use crate::zappa::{MixedLetter, MonoidElt};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimplicityReport {
    pub is_simple: bool,
    /// Number of carets, when simple.
    pub type_k: Option<usize>,
    /// Whether the braid lies in `B_{k+1}`; absent for bare forests and
    /// for non-simple forests.
    pub braid_ok: Option<bool>,
}

impl SimplicityReport {
    fn not_simple() -> Self {
        SimplicityReport {
            is_simple: false,
            type_k: None,
            braid_ok: None,
        }
    }
}

/// `i_j < j` for every letter of the ascending word, counting from 1.
pub fn is_simple_forest(f: &Forest) -> SimplicityReport {
    let word = f.to_word();
    if word.0.iter().enumerate().all(|(j, &i)| i < j + 1) {
        SimplicityReport {
            is_simple: true,
            type_k: Some(word.0.len()),
            braid_ok: None,
        }
    } else {
        SimplicityReport::not_simple()
    }
}

pub fn is_simple_elt(x: &MonoidElt) -> SimplicityReport {
    let forest = is_simple_forest(&x.forest);
    let Some(k) = forest.type_k else {
        return forest;
    };
    let braid_ok = x.braid.in_bk(k);
    SimplicityReport {
        is_simple: braid_ok,
        type_k: braid_ok.then_some(k),
        braid_ok: Some(braid_ok),
    }
}

/// Verdict of [`is_member`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Member { type_k: usize },
    NotMember,
}

impl Membership {
    pub fn is_member(self) -> bool {
        matches!(self, Membership::Member { .. })
    }
}

/// Decides membership in `BV` (braided flavor) or `V` (symmetric).
pub fn is_member(x: &Fraction) -> Membership {
    let r = x.reduce();
    let (Some(k), Some(l)) = (
        is_simple_forest(r.numerator()).type_k,
        is_simple_forest(r.denominator()).type_k,
    ) else {
        return Membership::NotMember;
    };
    if k == l && r.braid().in_bk(k) {
        Membership::Member { type_k: k }
    } else {
        Membership::NotMember
    }
}

/// Whether `x G` is simple for `x` simple of type `k` and `G = λ_{i_1} ⋯
/// λ_{i_n}`: true iff `i_j ≤ k + j − 1` for all `j`.
pub fn simple_product_bound(k: usize, g: &ForestWord) -> bool {
    g.0.iter().enumerate().all(|(j, &i)| i <= k + j)
}

/// One instance of a defining relation.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub family: &'static str,
    pub lhs: Vec<MixedLetter>,
    pub rhs: Vec<MixedLetter>,
    pub ok: bool,
    pub lhs_nf: Fraction,
    pub rhs_nf: Fraction,
}

impl fmt::Display for RelationCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |w: &[MixedLetter]| {
            if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
            }
        };
        if self.ok {
            write!(f, "OK   {}  {} = {}", self.family, side(&self.lhs), side(&self.rhs))
        } else {
            write!(
                f,
                "FAIL {}  {} = {}  [{} vs {}]",
                self.family,
                side(&self.lhs),
                side(&self.rhs),
                self.lhs_nf,
                self.rhs_nf
            )
        }
    }
}

#[derive(Clone, Debug)]
pub struct PresentationReport {
    pub flavor: Flavor,
    pub bound: usize,
    pub checks: Vec<RelationCheck>,
}

impl PresentationReport {
    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.ok)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// The group element of a word in `λ_i` and `σ_i^{±1}`, built as a
/// product of one-letter fractions.
pub fn evaluate(word: &[MixedLetter], flavor: Flavor) -> Fraction {
    word.iter().fold(Fraction::identity(flavor), |acc, letter| {
        let g = match *letter {
            MixedLetter::Lambda(i) => Fraction::embed_forest(Forest::lambda(i), flavor),
            MixedLetter::Sigma(s) => Fraction::embed_braid(BraidWord::new(vec![s], flavor)),
        };
        acc.mul(&g)
    })
}

/// Every defining relation of `V̂` (symmetric) or `B̂V` (braided) with
/// indices at most `bound`, as `(family, lhs, rhs)`.
pub fn relation_instances(bound: usize, flavor: Flavor) -> Vec<(&'static str, Vec<MixedLetter>, Vec<MixedLetter>)> {
    use MixedLetter::{Lambda as L, Sigma as S};
    let signs: &[bool] = match flavor {
        Flavor::Braided => &[false, true],
        Flavor::Symmetric => &[false],
    };
    let s = |i, inverse| S(Gen { index: i, inverse });
    let mut out = Vec::new();
    for q in 0..=bound {
        for m in 0..q {
            out.push(("ll", vec![L(q), L(m)], vec![L(m), L(q + 1)]));
        }
    }
    if flavor == Flavor::Symmetric {
        for m in 0..=bound {
            out.push(("ss=1", vec![s(m, false), s(m, false)], vec![]));
        }
    }
    for m in 0..=bound {
        for n in m + 2..=bound {
            out.push(("far", vec![s(m, false), s(n, false)], vec![s(n, false), s(m, false)]));
        }
        out.push((
            "braid",
            vec![s(m, false), s(m + 1, false), s(m, false)],
            vec![s(m + 1, false), s(m, false), s(m + 1, false)],
        ));
    }
    for &e in signs {
        for q in 0..=bound {
            for m in 0..=bound {
                let (family, rhs) = if m < q {
                    ("sl m<q", vec![L(m), s(q + 1, e)])
                } else if m == q {
                    ("sl m=q", vec![L(m + 1), s(m, e), s(m + 1, e)])
                } else if m == q + 1 {
                    ("sl m=q+1", vec![L(q), s(q + 1, e), s(q, e)])
                } else {
                    ("sl m>q+1", vec![L(m), s(q, e)])
                };
                out.push((family, vec![s(q, e), L(m)], rhs));
            }
        }
    }
    out
}

/// Checks every relation from [`relation_instances`] by comparing the two
/// sides as group elements, spreading the work over threads.
pub fn verify_presentation(bound: usize, flavor: Flavor) -> PresentationReport {
    let instances = relation_instances(bound, flavor);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(8);
    let chunk = instances.len().div_ceil(workers).max(1);
    let checks = std::thread::scope(|scope| {
        let handles: Vec<_> = instances
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|(family, lhs, rhs)| {
                            let a = evaluate(lhs, flavor).reduce();
                            let b = evaluate(rhs, flavor).reduce();
                            RelationCheck {
                                family,
                                lhs: lhs.clone(),
                                rhs: rhs.clone(),
                                ok: a.equals(&b),
                                lhs_nf: a,
                                rhs_nf: b,
                            }
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    PresentationReport {
        flavor,
        bound,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: Flavor = Flavor::Braided;

    fn fw(letters: &[usize]) -> Forest {
        Forest::from_word(&ForestWord(letters.to_vec()))
    }

    fn bw(text: &str) -> BraidWord {
        BraidWord::parse(text, B).unwrap()
    }

    #[test]
    fn simple_forest_examples() {
        assert_eq!(is_simple_forest(&Forest::trivial()).type_k, Some(0));
        assert_eq!(is_simple_forest(&fw(&[0, 1, 0])).type_k, Some(3));
        assert!(!is_simple_forest(&Forest::lambda(1)).is_simple);
    }

    #[test]
    fn simple_elt_examples() {
        let r = is_simple_elt(&MonoidElt::new(fw(&[0]), bw("s0")));
        assert_eq!((r.is_simple, r.type_k), (true, Some(1)));
        let r = is_simple_elt(&MonoidElt::new(fw(&[0]), bw("s1")));
        assert_eq!((r.is_simple, r.braid_ok), (false, Some(false)));
        let r = is_simple_elt(&MonoidElt::new(fw(&[0, 1]), bw("s0 s1 s0")));
        assert_eq!(r.type_k, Some(2));
    }

    #[test]
    fn membership_examples() {
        assert_eq!(is_member(&Fraction::identity(B)), Membership::Member { type_k: 0 });
        let x = Fraction::new(fw(&[0]), bw("s0"), fw(&[0]));
        assert_eq!(is_member(&x), Membership::Member { type_k: 1 });
        let y = Fraction::new(fw(&[1]), bw(""), fw(&[0]));
        assert_eq!(is_member(&y), Membership::NotMember);
    }

    #[test]
    fn product_bound_examples() {
        assert!(simple_product_bound(1, &ForestWord(vec![1])));
        assert!(!simple_product_bound(0, &ForestWord(vec![1])));
        assert!(simple_product_bound(2, &ForestWord(vec![0, 3])));
        let x = MonoidElt::new(fw(&[0, 1]), bw("s1"));
        let p = x.mul(&MonoidElt::from_forest(fw(&[0, 3]), B));
        assert!(is_simple_elt(&p).is_simple);
    }

    #[test]
    fn presentation_examples() {
        use MixedLetter::{Lambda as L, Sigma as S};
        let pairs = [
            (vec![S(Gen::pos(0)), L(0)], vec![L(1), S(Gen::pos(0)), S(Gen::pos(1))]),
            (vec![S(Gen::pos(2)), L(0)], vec![L(0), S(Gen::pos(3))]),
            (vec![S(Gen::pos(0)), L(3)], vec![L(3), S(Gen::pos(0))]),
        ];
        for (l, r) in pairs {
            assert!(evaluate(&l, B).equals(&evaluate(&r, B)));
        }
        assert!(verify_presentation(3, B).passed());
        assert!(verify_presentation(3, Flavor::Symmetric).passed());
    }
}
