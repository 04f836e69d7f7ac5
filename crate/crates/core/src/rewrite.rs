//! String rewriting over indexed generator families.
//!
//! A [`RewriteSystem`] is a list of [`RuleSchema`]s, each of which looks at
//! a fixed-size window of letters and either proposes a replacement or
//! declines. Schemas are closures, so one rule value stands for an infinite
//! family such as `λ_q λ_m → λ_m λ_{q+1}` for all `m < q`.
//!
//! Confluence checks enumerate critical pairs over a finite alphabet
//! obtained by bounding the indices. For infinite schemas this is bounded
//! evidence, not a proof; [`RewriteSystem::check_translation_invariance`]
//! supplies the empirical half of the argument that bounded windows are
//! representative.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use thiserror::Error;

/// Letters the engine can rewrite.
pub trait Letter: Clone + Eq + Hash + Ord + fmt::Debug + fmt::Display + Send + Sync {}

impl<T: Clone + Eq + Hash + Ord + fmt::Debug + fmt::Display + Send + Sync> Letter for T {}

type RewriteFn<L> = dyn Fn(&[L]) -> Option<Vec<L>> + Send + Sync;

/// One rule family: a window size and a partial replacement function.
#[derive(Clone)]
pub struct RuleSchema<L> {
    name: String,
    window: usize,
    rewrite: Arc<RewriteFn<L>>,
}

impl<L: Letter> RuleSchema<L> {
    pub fn new(
        name: impl Into<String>,
        window: usize,
        rewrite: impl Fn(&[L]) -> Option<Vec<L>> + Send + Sync + 'static,
    ) -> Self {
        assert!(window > 0, "rule windows are non-empty");
        RuleSchema {
            name: name.into(),
            window,
            rewrite: Arc::new(rewrite),
        }
    }

    /// A rule on two-letter windows.
    pub fn pair(
        name: impl Into<String>,
        rewrite: impl Fn(L, L) -> Option<Vec<L>> + Send + Sync + 'static,
    ) -> Self {
        RuleSchema::new(name, 2, move |w: &[L]| rewrite(w[0].clone(), w[1].clone()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn apply(&self, window: &[L]) -> Option<Vec<L>> {
        (self.rewrite)(window)
    }
}

impl<L> fmt::Debug for RuleSchema<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RuleSchema")
            .field("name", &self.name)
            .field("window", &self.window)
            .finish()
    }
}

/// Redex selection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Leftmost => "leftmost",
            Strategy::Rightmost => "rightmost",
        })
    }
}

/// A located rule application.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Redex<L> {
    pub position: usize,
    pub rule: usize,
    pub len: usize,
    pub replacement: Vec<L>,
}

impl<L: Clone> Redex<L> {
    pub fn contract(&self, word: &[L]) -> Vec<L> {
        let mut out = Vec::with_capacity(word.len() - self.len + self.replacement.len());
        out.extend_from_slice(&word[..self.position]);
        out.extend_from_slice(&self.replacement);
        out.extend_from_slice(&word[self.position + self.len..]);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationReport<L> {
    pub word: Vec<L>,
    pub steps: usize,
    pub strategy: Strategy,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError<L: fmt::Debug> {
    #[error("rewriting did not terminate within {fuel} steps")]
    FuelExhausted { fuel: usize, partial: Vec<L> },
    #[error("fuel must be positive")]
    ZeroFuel,
}

/// The default step budget for a word of length `n`.
pub fn default_fuel(n: usize) -> usize {
    (10 * n * n).max(1)
}

type AlphabetFn<L> = dyn Fn(usize) -> Vec<L> + Send + Sync;
type ShiftFn<L> = dyn Fn(&L) -> L + Send + Sync;
type LabelFn<L> = dyn Fn(&L) -> String + Send + Sync;

/// A named set of rule schemas together with a way to enumerate a bounded
/// alphabet for critical-pair checks.
#[derive(Clone)]
pub struct RewriteSystem<L> {
    name: String,
    rules: Vec<RuleSchema<L>>,
    alphabet: Arc<AlphabetFn<L>>,
    shift: Option<Arc<ShiftFn<L>>>,
    label: Option<Arc<LabelFn<L>>>,
}

impl<L> fmt::Debug for RewriteSystem<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RewriteSystem")
            .field("name", &self.name)
            .field("rules", &self.rules)
            .finish()
    }
}

/// A critical pair: a peak word with two distinct one-step reducts from
/// overlapping redexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair<L> {
    pub peak: Vec<L>,
    pub left: Vec<L>,
    pub right: Vec<L>,
    pub rules: (String, String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JoinOutcome<L> {
    /// Both sides reach `word`, in `steps` total rewriting steps.
    Joined { word: Vec<L>, steps: usize },
    /// No common descendant was found.
    Diverged { left: Vec<L>, right: Vec<L> },
    /// One side ran out of fuel.
    OutOfFuel { side: Vec<L> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck<L> {
    pub pair: CriticalPair<L>,
    pub outcome: JoinOutcome<L>,
}

impl<L: Letter> PairCheck<L> {
    pub fn joined(&self) -> bool {
        matches!(self.outcome, JoinOutcome::Joined { .. })
    }
}

/// Space-separated letters, `1` for the empty word.
pub fn show<L: fmt::Display>(word: &[L]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfluenceReport<L> {
    pub system: String,
    pub bound: usize,
    pub checks: Vec<PairCheck<L>>,
}

impl<L: Letter> ConfluenceReport<L> {
    pub fn is_confluent(&self) -> bool {
        self.checks.iter().all(PairCheck::joined)
    }

    pub fn first_failure(&self) -> Option<&PairCheck<L>> {
        self.checks.iter().find(|c| !c.joined())
    }
}

/// Cap on the number of words explored when normal forms disagree.
const JOIN_SEARCH_LIMIT: usize = 20_000;

impl<L: Letter> RewriteSystem<L> {
    /// `alphabet(bound)` lists the letters with indices up to `bound`.
    pub fn new(
        name: impl Into<String>,
        rules: Vec<RuleSchema<L>>,
        alphabet: impl Fn(usize) -> Vec<L> + Send + Sync + 'static,
    ) -> Self {
        RewriteSystem {
            name: name.into(),
            rules,
            alphabet: Arc::new(alphabet),
            shift: None,
            label: None,
        }
    }

    /// How letters are printed in reports; defaults to `Display`.
    pub fn with_labels(mut self, label: impl Fn(&L) -> String + Send + Sync + 'static) -> Self {
        self.label = Some(Arc::new(label));
        self
    }

    pub fn show(&self, word: &[L]) -> String {
        match &self.label {
            None => show(word),
            Some(_) if word.is_empty() => "1".to_string(),
            Some(label) => word.iter().map(|l| label(l)).collect::<Vec<_>>().join(" "),
        }
    }

    /// One report line: `PEAK → {L, R} JOIN at W (steps)`.
    pub fn describe(&self, check: &PairCheck<L>) -> String {
        let p = &check.pair;
        let head = format!(
            "{} → {{{}, {}}}",
            self.show(&p.peak),
            self.show(&p.left),
            self.show(&p.right)
        );
        match &check.outcome {
            JoinOutcome::Joined { word, steps } => {
                format!("{head} JOIN at {} ({steps})", self.show(word))
            }
            JoinOutcome::Diverged { left, right } => {
                format!("{head} FAIL {} ≠ {}", self.show(left), self.show(right))
            }
            JoinOutcome::OutOfFuel { side } => format!("{head} FUEL at {}", self.show(side)),
        }
    }

    /// Index translation `i ↦ i + 1` on letters, for the invariance check.
    pub fn with_shift(mut self, shift: impl Fn(&L) -> L + Send + Sync + 'static) -> Self {
        self.shift = Some(Arc::new(shift));
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rules(&self) -> &[RuleSchema<L>] {
        &self.rules
    }

    pub fn alphabet(&self, bound: usize) -> Vec<L> {
        (self.alphabet)(bound)
    }

    /// Every redex in `word`, ordered by position then rule.
    pub fn redexes(&self, word: &[L]) -> Vec<Redex<L>> {
        let mut out = Vec::new();
        for position in 0..word.len() {
            for (rule, schema) in self.rules.iter().enumerate() {
                let len = schema.window;
                if position + len > word.len() {
                    continue;
                }
                if let Some(replacement) = schema.apply(&word[position..position + len]) {
                    out.push(Redex {
                        position,
                        rule,
                        len,
                        replacement,
                    });
                }
            }
        }
        out
    }

    fn select(&self, word: &[L], strategy: Strategy) -> Option<Redex<L>> {
        let try_at = |position: usize| {
            self.rules.iter().enumerate().find_map(|(rule, schema)| {
                let len = schema.window;
                if position + len > word.len() {
                    return None;
                }
                schema
                    .apply(&word[position..position + len])
                    .map(|replacement| Redex {
                        position,
                        rule,
                        len,
                        replacement,
                    })
            })
        };
        match strategy {
            Strategy::Leftmost => (0..word.len()).find_map(try_at),
            Strategy::Rightmost => (0..word.len()).rev().find_map(try_at),
        }
    }

    /// One rewriting step, if `word` is reducible.
    pub fn step(&self, word: &[L], strategy: Strategy) -> Option<Vec<L>> {
        self.select(word, strategy).map(|r| r.contract(word))
    }

    pub fn is_irreducible(&self, word: &[L]) -> bool {
        self.select(word, Strategy::Leftmost).is_none()
    }

    pub fn normalize(
        &self,
        word: &[L],
        strategy: Strategy,
        fuel: usize,
    ) -> Result<NormalizationReport<L>, RewriteError<L>> {
        if fuel == 0 {
            return Err(RewriteError::ZeroFuel);
        }
        let mut current = word.to_vec();
        let mut steps = 0;
        while let Some(next) = self.step(&current, strategy) {
            if steps == fuel {
                return Err(RewriteError::FuelExhausted {
                    fuel,
                    partial: current,
                });
            }
            current = next;
            steps += 1;
        }
        Ok(NormalizationReport {
            word: current,
            steps,
            strategy,
        })
    }

    /// Normalizes with the default fuel, returning every intermediate word.
    pub fn trace(&self, word: &[L], strategy: Strategy) -> Result<Vec<Vec<L>>, RewriteError<L>> {
        let fuel = default_fuel(word.len());
        let mut chain = vec![word.to_vec()];
        while let Some(next) = self.step(chain.last().unwrap(), strategy) {
            if chain.len() > fuel {
                return Err(RewriteError::FuelExhausted {
                    fuel,
                    partial: chain.pop().unwrap(),
                });
            }
            chain.push(next);
        }
        Ok(chain)
    }

    /// All critical pairs among words whose letters come from
    /// `alphabet(bound)`.
    ///
    /// Two redexes form a critical pair when they overlap and together
    /// cover the whole word; longer peaks only add context, which cannot
    /// break joinability.
    pub fn critical_pairs(&self, bound: usize) -> Vec<CriticalPair<L>> {
        let max_window = self.rules.iter().map(|r| r.window).max().unwrap_or(0);
        if max_window == 0 {
            return Vec::new();
        }
        let alphabet = self.alphabet(bound);
        let mut out = Vec::new();
        let mut words: Vec<Vec<L>> = vec![Vec::new()];
        for _len in 1..=(2 * max_window - 1) {
            words = words
                .iter()
                .flat_map(|w| {
                    alphabet.iter().map(move |a| {
                        let mut next = w.clone();
                        next.push(a.clone());
                        next
                    })
                })
                .collect();
            for word in &words {
                let redexes = self.redexes(word);
                for (x, r) in redexes.iter().enumerate() {
                    for s in &redexes[x + 1..] {
                        let overlap = s.position < r.position + r.len;
                        let covers = r.position == 0
                            && (r.position + r.len).max(s.position + s.len) == word.len();
                        if !(overlap && covers) {
                            continue;
                        }
                        out.push(CriticalPair {
                            peak: word.clone(),
                            left: r.contract(word),
                            right: s.contract(word),
                            rules: (
                                self.rules[r.rule].name.clone(),
                                self.rules[s.rule].name.clone(),
                            ),
                        });
                    }
                }
            }
        }
        out
    }

    /// Decides whether `left` and `right` have a common descendant.
    pub fn join(&self, left: &[L], right: &[L], fuel: usize) -> JoinOutcome<L> {
        let a = match self.normalize(left, Strategy::Leftmost, fuel) {
            Ok(r) => r,
            Err(_) => return JoinOutcome::OutOfFuel { side: left.to_vec() },
        };
        let b = match self.normalize(right, Strategy::Leftmost, fuel) {
            Ok(r) => r,
            Err(_) => return JoinOutcome::OutOfFuel { side: right.to_vec() },
        };
        if a.word == b.word {
            return JoinOutcome::Joined {
                word: a.word,
                steps: a.steps + b.steps,
            };
        }
        // Different normal forms along one strategy do not yet refute
        // joinability for a system that is not known to be confluent.
        match self.common_descendant(left, right) {
            Some((word, steps)) => JoinOutcome::Joined { word, steps },
            None => JoinOutcome::Diverged {
                left: a.word,
                right: b.word,
            },
        }
    }

    fn descendants(&self, start: &[L]) -> HashMap<Vec<L>, usize> {
        let mut seen = HashMap::from([(start.to_vec(), 0)]);
        let mut queue = VecDeque::from([start.to_vec()]);
        while let Some(word) = queue.pop_front() {
            if seen.len() >= JOIN_SEARCH_LIMIT {
                break;
            }
            let depth = seen[&word];
            for r in self.redexes(&word) {
                let next = r.contract(&word);
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), depth + 1);
                    queue.push_back(next);
                }
            }
        }
        seen
    }

    fn common_descendant(&self, left: &[L], right: &[L]) -> Option<(Vec<L>, usize)> {
        let a = self.descendants(left);
        let b = self.descendants(right);
        a.iter()
            .filter_map(|(w, da)| b.get(w).map(|db| (w.clone(), da + db)))
            .min_by(|x, y| x.1.cmp(&y.1).then_with(|| x.0.cmp(&y.0)))
    }

    pub fn check_local_confluence(&self, bound: usize, fuel: Option<usize>) -> ConfluenceReport<L> {
        let checks = self
            .critical_pairs(bound)
            .into_iter()
            .map(|pair| {
                let budget = fuel.unwrap_or_else(|| default_fuel(pair.peak.len() + 2));
                let outcome = self.join(&pair.left, &pair.right, budget);
                PairCheck { pair, outcome }
            })
            .collect();
        ConfluenceReport {
            system: self.name.clone(),
            bound,
            checks,
        }
    }

    /// For every critical pair at `bound`, checks that the pair with all
    /// indices translated up by one joins exactly when the original does.
    /// Returns the peaks where the two verdicts differ.
    ///
    /// # Panics
    ///
    /// Panics if the system was built without a shift.
    pub fn check_translation_invariance(&self, bound: usize) -> Vec<Vec<L>> {
        let shift = self.shift.as_ref().expect("system has no index shift");
        let mut mismatches = Vec::new();
        for pair in self.critical_pairs(bound) {
            let moved = |w: &[L]| w.iter().map(|l| shift(l)).collect::<Vec<_>>();
            let fuel = default_fuel(pair.peak.len() + 2);
            let here = matches!(self.join(&pair.left, &pair.right, fuel), JoinOutcome::Joined { .. });
            let (l, r, p) = (moved(&pair.left), moved(&pair.right), moved(&pair.peak));
            // The shifted peak must itself still be a critical peak.
            let reducts: HashSet<Vec<L>> = self.redexes(&p).iter().map(|x| x.contract(&p)).collect();
            let still_peak = reducts.contains(&l) && reducts.contains(&r);
            let there = matches!(self.join(&l, &r, fuel), JoinOutcome::Joined { .. });
            if here != there || !still_peak {
                mismatches.push(pair.peak);
            }
        }
        mismatches
    }
}

/// Termination measures for the index-shuffling rules.
pub mod measure {
    /// For `x_q x_m → x_m x_{q+1}` (with `m ≤ q` or `m < q`).
    ///
    /// With `s_k = i_k − k`, a step replaces the adjacent pair `(A, B)`
    /// by `(B + 1, A)` where `B < A`. The sum of the `s_k` rises by one
    /// and their maximum does not rise, so `n · max − sum` drops by at
    /// least one and is never negative.
    pub fn ascending(word: &[usize]) -> u64 {
        if word.is_empty() {
            return 0;
        }
        let shifted: Vec<i64> = word
            .iter()
            .enumerate()
            .map(|(k, &i)| i as i64 - k as i64)
            .collect();
        let max = *shifted.iter().max().unwrap();
        let sum: i64 = shifted.iter().sum();
        (word.len() as i64 * max - sum) as u64
    }

    /// For `x_a x_b → x_{b−1} x_a` with `a < b`: the index sum drops by one.
    pub fn index_sum(word: &[usize]) -> u64 {
        word.iter().map(|&i| i as u64).sum()
    }
}
