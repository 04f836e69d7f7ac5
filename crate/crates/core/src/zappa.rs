//! Forests with braids hanging from their leaves.
//!
//! A braid `α` and a forest `u` act on each other: `α · u` moves the carets
//! of `u` along the strands of `α`, and `α^u` doubles the strands of `α`
//! under each caret of `u`. Together they make `ℱ × B∞` (or `ℱ × S∞`) a
//! monoid with product `(u, α)(v, β) = (u(α·v), α^v β)`.
//!
//! On generators:
//!
//! * `σ_q^ε · λ_m = λ_{σ_q(m)}`
//! * `(σ_q^ε)^{λ_m}` is `σ_{q+1}^ε` for `m < q`, `σ_q^ε σ_{q+1}^ε` for
//!   `m = q`, `σ_{q+1}^ε σ_q^ε` for `m = q + 1` and `σ_q^ε` for `m > q + 1`.
//!
//! Longer words are handled one letter at a time.

use std::fmt;

use rand::Rng;

use crate::braid::{BraidWord, Flavor, Gen, Perm};
use crate::forest::{Forest, ForestWord};
use crate::hedge::Hedge;
use crate::rewrite::{RewriteSystem, RuleSchema};

/// `(σ_q^ε)^{λ_m}` for a single letter.
pub fn split_letter(g: Gen, m: usize) -> Vec<Gen> {
    let q = g.index;
    let at = |index| Gen { index, ..g };
    if m < q {
        vec![at(q + 1)]
    } else if m == q {
        vec![at(q), at(q + 1)]
    } else if m == q + 1 {
        vec![at(q + 1), at(q)]
    } else {
        vec![at(q)]
    }
}

/// `β^{λ_i}`: the strand of `β` ending at bottom `i` is doubled.
pub fn split(beta: &BraidWord, i: usize) -> BraidWord {
    let mut pieces = Vec::with_capacity(beta.len());
    let mut j = i;
    for &g in beta.letters().iter().rev() {
        pieces.push(split_letter(g, j));
        j = Perm::adjacent(g.index).apply(j);
    }
    let letters = pieces.into_iter().rev().flatten().collect();
    BraidWord::new(letters, beta.flavor())
}

/// The inverse of [`split`] on its image: `Some(β')` with
/// `split(β', i) = β` when the strands ending at `i` and `i + 1` are a
/// doubled strand.
pub fn try_unsplit(beta: &BraidWord, i: usize) -> Option<BraidWord> {
    let p = beta.perm();
    let t = p.apply(i);
    if p.apply(i + 1) != t + 1 {
        return None;
    }
    let candidate = beta.delete_strand(t);
    split(&candidate, i).equals(beta).then_some(candidate)
}

/// `β · F`, by threading `β` through the ascending word of `F`.
pub fn act_on_forest(beta: &BraidWord, f: &Forest) -> Forest {
    Forest::from_word(&ForestWord(act(beta, &f.to_word().0).0))
}

/// `β^F`.
pub fn act_on_braid(beta: &BraidWord, f: &Forest) -> BraidWord {
    act(beta, &f.to_word().0).1
}

/// Both actions on a `λ`-word at once: `α u = (α·u)(α^u)`.
pub fn act(beta: &BraidWord, word: &[usize]) -> (Vec<usize>, BraidWord) {
    let mut a = beta.clone();
    let mut out = Vec::with_capacity(word.len());
    for &i in word {
        out.push(a.perm().apply(i));
        a = split(&a, i);
    }
    (out, a)
}

/// `β^H` for a hedge, through its ascending `ν`-word.
pub fn act_on_braid_by_hedge(beta: &BraidWord, h: &Hedge) -> BraidWord {
    h.ascending_word().iter().fold(beta.clone(), |a, &i| split(&a, i))
}

/// An element of `ℱ ⋈ B∞` or `ℱ ⋈ S∞`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonoidElt {
    pub forest: Forest,
    pub braid: BraidWord,
}

impl MonoidElt {
    pub fn new(forest: Forest, braid: BraidWord) -> Self {
        MonoidElt { forest, braid }
    }

    pub fn identity(flavor: Flavor) -> Self {
        MonoidElt::new(Forest::trivial(), BraidWord::empty(flavor))
    }

    pub fn from_forest(forest: Forest, flavor: Flavor) -> Self {
        MonoidElt::new(forest, BraidWord::empty(flavor))
    }

    pub fn from_braid(braid: BraidWord) -> Self {
        MonoidElt::new(Forest::trivial(), braid)
    }

    pub fn flavor(&self) -> Flavor {
        self.braid.flavor()
    }

    pub fn mul(&self, other: &MonoidElt) -> MonoidElt {
        assert_eq!(self.flavor(), other.flavor(), "mixing flavors");
        let (moved, split_braid) = act(&self.braid, &other.forest.to_word().0);
        MonoidElt::new(
            self.forest.mul(&Forest::from_word(&ForestWord(moved))),
            split_braid.concat(&other.braid),
        )
    }

    /// Equality of monoid elements: forests exactly, braids as group
    /// elements.
    pub fn equals(&self, other: &MonoidElt) -> bool {
        self.forest == other.forest && self.braid.equals(&other.braid)
    }

    /// Greatest common right factor: `(x̄, ȳ, r)` with `x = x̄r`, `y = ȳr`.
    ///
    /// The braid of `y` is a unit and is moved into `r` first. The forest
    /// carets are then stripped one at a time, exactly as in the reduction
    /// of fractions.
    pub fn gcrf(&self, other: &MonoidElt) -> (MonoidElt, MonoidElt, MonoidElt) {
        assert_eq!(self.flavor(), other.flavor(), "mixing flavors");
        let flavor = self.flavor();
        let mut f = self.forest.clone();
        let mut alpha = self.braid.concat(&other.braid.inverse()).free_reduce();
        let mut g = other.forest.clone();
        let mut stripped = Vec::new();
        'outer: loop {
            for i in g.right_carets() {
                if let Some(step) = strip_common(&f, &alpha, &g, i) {
                    (f, alpha, g) = step;
                    stripped.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        stripped.reverse();
        let r = MonoidElt::new(Forest::from_word(&ForestWord(stripped)), other.braid.clone());
        (
            MonoidElt::new(f, alpha),
            MonoidElt::from_forest(g, flavor),
            r,
        )
    }

    /// Text form: forest word then braid word, e.g. `l0 l1 s0 s1 s0`.
    pub fn text(&self) -> String {
        match (self.forest.is_trivial(), self.braid.is_empty()) {
            (true, true) => "1".to_string(),
            (false, true) => self.forest.to_string(),
            (true, false) => self.braid.to_string(),
            (false, false) => format!("{} {}", self.forest, self.braid),
        }
    }
}

/// One simultaneous strip: with `G = G'λ_i`, `α = β'^{λ_i}` and
/// `F = F'λ_j` where `λ_j = β'·λ_i`, returns `(F', β', G')`.
pub(crate) fn strip_common(
    f: &Forest,
    alpha: &BraidWord,
    g: &Forest,
    i: usize,
) -> Option<(Forest, BraidWord, Forest)> {
    let g2 = g.strip_right_caret(i)?;
    let beta = try_unsplit(alpha, i)?;
    let j = beta.perm().apply(i);
    let f2 = f.strip_right_caret(j)?;
    Some((f2, beta, g2))
}

impl fmt::Display for MonoidElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

impl fmt::Debug for MonoidElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonoidElt[{}]({})", self.flavor(), self.text())
    }
}

/// A letter of a mixed word in `λ_i` and `σ_i^{±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MixedLetter {
    Lambda(usize),
    Sigma(Gen),
}

impl fmt::Display for MixedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MixedLetter::Lambda(i) => write!(f, "l{i}"),
            MixedLetter::Sigma(g) => g.fmt(f),
        }
    }
}

/// The interleaving rules `σ_q^ε λ_m → λ_{σ_q(m)} (σ_q^ε)^{λ_m}`. Their
/// normal forms put every `λ` before every `σ`.
pub fn interleaving_rules() -> RewriteSystem<MixedLetter> {
    RewriteSystem::new(
        "interleave",
        vec![RuleSchema::pair("pass", |a, b| match (a, b) {
            (MixedLetter::Sigma(g), MixedLetter::Lambda(m)) => {
                let mut out = vec![MixedLetter::Lambda(Perm::adjacent(g.index).apply(m))];
                out.extend(split_letter(g, m).into_iter().map(MixedLetter::Sigma));
                Some(out)
            }
            _ => None,
        })],
        |bound| {
            (0..=bound)
                .flat_map(|i| {
                    [
                        MixedLetter::Lambda(i),
                        MixedLetter::Sigma(Gen::pos(i)),
                        MixedLetter::Sigma(Gen::neg(i)),
                    ]
                })
                .collect()
        },
    )
}

/// Outcome of [`check_axioms`]: how many instances ran and the first
/// failing identity, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub flavor: Flavor,
    pub samples: usize,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the eight mutual-action identities on random instances:
///
/// * (a) `(αβ)·u = α·(β·u)`
/// * (b) `(αβ)^u = α^{β·u} β^u`
/// * (c) `α·(uv) = (α·u)(α^u·v)`
/// * (d) `α^{uv} = (α^u)^v`
/// * (e) `α^1 = α`
/// * (f) `1·u = u`
/// * (g) `α·1 = 1`
/// * (h) `1^u = 1`
pub fn check_axioms<R: Rng>(
    rng: &mut R,
    flavor: Flavor,
    samples: usize,
    max_len: usize,
    max_index: usize,
) -> AxiomReport {
    use crate::random::{braid_word, forest};
    let mut failures = Vec::new();
    let one_b = BraidWord::empty(flavor);
    let one_f = Forest::trivial();
    for n in 0..samples {
        let alpha = braid_word(rng, flavor, max_index, max_len);
        let beta = braid_word(rng, flavor, max_index, max_len);
        let u = forest(rng, max_index, max_len);
        let v = forest(rng, max_index, max_len);
        let ab = alpha.concat(&beta);
        let uv = u.mul(&v);
        let checks = [
            (
                "a",
                act_on_forest(&ab, &u) == act_on_forest(&alpha, &act_on_forest(&beta, &u)),
            ),
            (
                "b",
                act_on_braid(&ab, &u).equals(
                    &act_on_braid(&alpha, &act_on_forest(&beta, &u))
                        .concat(&act_on_braid(&beta, &u)),
                ),
            ),
            (
                "c",
                act_on_forest(&alpha, &uv)
                    == act_on_forest(&alpha, &u)
                        .mul(&act_on_forest(&act_on_braid(&alpha, &u), &v)),
            ),
            (
                "d",
                act_on_braid(&alpha, &uv)
                    .equals(&act_on_braid(&act_on_braid(&alpha, &u), &v)),
            ),
            ("e", act_on_braid(&alpha, &one_f).equals(&alpha)),
            ("f", act_on_forest(&one_b, &u) == u),
            ("g", act_on_forest(&alpha, &one_f) == one_f),
            ("h", act_on_braid(&one_b, &u).equals(&one_b)),
        ];
        for (name, ok) in checks {
            if !ok {
                failures.push(format!(
                    "({name}) sample {n}: α = {alpha}, β = {beta}, u = {u}, v = {v}"
                ));
            }
        }
    }
    AxiomReport {
        flavor,
        samples,
        failures,
    }
}

/// Checks `δ_{σ_q(m)} · σ_q^{λ_m} = σ_q` and that the deletion index
/// comes out as `δ_m`, for all `q, m ≤ bound`. Returns the failing pairs.
pub fn check_co_actions(bound: usize, flavor: Flavor) -> Vec<(usize, usize)> {
    let mut failures = Vec::new();
    for q in 0..=bound {
        for m in 0..=bound {
            let sq = BraidWord::sigma(q, flavor);
            let top = Perm::adjacent(q).apply(m);
            let (rest, residual) = split(&sq, m).delete_strand_tracked(top);
            if !(rest.equals(&sq) && residual == m) {
                failures.push((q, m));
            }
        }
    }
    failures
}
