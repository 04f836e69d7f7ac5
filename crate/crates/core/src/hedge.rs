//! Hedges: the leaf-count shadow of forests.
//!
//! A [`Hedge`] assigns a positive integer to every natural number, with
//! only finitely many values above one. Reading `H(i)` as "root `i` has
//! `H(i)` leaves" turns a hedge into a nondecreasing surjection on `ℕ`
//! (its leaf-root function) and into a partition of `ℕ` into intervals
//! ([`IntervalPartition`]). The product is composition of leaf-root
//! functions, matching grafting of forests.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::rewrite::{default_fuel, RewriteError, RewriteSystem, RuleSchema, Strategy};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Hedge {
    values: BTreeMap<usize, usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HedgeError {
    #[error("word is not in descending run-length form at position {0}")]
    NotDescending(usize),
    #[error("run length must be positive at position {0}")]
    EmptyRun(usize),
    #[error(transparent)]
    Rewrite(#[from] RewriteError<usize>),
}

impl Hedge {
    pub fn identity() -> Self {
        Hedge::default()
    }

    /// `ν_i`: value 2 at `i`.
    pub fn nu(i: usize) -> Self {
        Hedge {
            values: BTreeMap::from([(i, 2)]),
        }
    }

    /// Builds a hedge from `(index, value)` pairs; values of 1 are dropped.
    ///
    /// # Panics
    ///
    /// Panics on a zero value.
    pub fn from_values(values: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Hedge {
            values: values
                .into_iter()
                .inspect(|&(_, v)| assert!(v > 0, "hedge values are positive"))
                .filter(|&(_, v)| v > 1)
                .collect(),
        }
    }

    pub fn value(&self, i: usize) -> usize {
        self.values.get(&i).copied().unwrap_or(1)
    }

    /// The stored values, all at least 2.
    pub fn values(&self) -> &BTreeMap<usize, usize> {
        &self.values
    }

    pub fn is_identity(&self) -> bool {
        self.values.is_empty()
    }

    /// Total excess `Σ (H(i) − 1)`, the length of any word for `H`.
    pub fn length(&self) -> usize {
        self.values.values().map(|v| v - 1).sum()
    }

    /// The leaf-root function: the root owning leaf `j`.
    pub fn root_of(&self, j: usize) -> usize {
        let mut offset = 0;
        for (&t, &v) in &self.values {
            if j < t + offset {
                break;
            }
            if j < t + offset + v {
                return t;
            }
            offset += v - 1;
        }
        j - offset
    }

    /// First leaf of root `i`.
    pub fn block_start(&self, i: usize) -> usize {
        i + self.values.range(..i).map(|(_, v)| v - 1).sum::<usize>()
    }

    /// Product: `(HK)(i)` sums `K` over the leaves of root `i` of `H`.
    pub fn mul(&self, other: &Hedge) -> Hedge {
        let mut values = self.values.clone();
        for (&j, &v) in &other.values {
            *values.entry(self.root_of(j)).or_insert(1) += v - 1;
        }
        Hedge { values }
    }

    /// Evaluates a word in the generators `ν_i`.
    pub fn from_word(word: &[usize]) -> Hedge {
        word.iter()
            .fold(Hedge::identity(), |h, &i| h.mul(&Hedge::nu(i)))
    }

    /// The hedge with value `n + 1` at `i` for each run `ν_i^n` of a
    /// descending run-length word.
    pub fn from_descending(runs: &[(usize, usize)]) -> Result<Hedge, HedgeError> {
        for (k, &(_, n)) in runs.iter().enumerate() {
            if n == 0 {
                return Err(HedgeError::EmptyRun(k));
            }
        }
        for (k, pair) in runs.windows(2).enumerate() {
            if pair[0].0 <= pair[1].0 {
                return Err(HedgeError::NotDescending(k + 1));
            }
        }
        Ok(Hedge::from_values(runs.iter().map(|&(i, n)| (i, n + 1))))
    }

    /// Descending run-length form `ν_{i1}^{n1} … ν_{ik}^{nk}`, `i1 > … > ik`.
    pub fn descending_runs(&self) -> Vec<(usize, usize)> {
        self.values.iter().rev().map(|(&i, &v)| (i, v - 1)).collect()
    }

    /// Descending word, runs expanded.
    pub fn descending_word(&self) -> Vec<usize> {
        self.descending_runs()
            .into_iter()
            .flat_map(|(i, n)| std::iter::repeat(i).take(n))
            .collect()
    }

    /// The strictly increasing word for this hedge.
    ///
    /// Root `i` with `H(i) = v` contributes `ν_s, ν_{s+1}, …, ν_{s+v−2}`
    /// where `s` is the position of root `i` after the earlier roots have
    /// been expanded, i.e. the index of its first leaf.
    pub fn ascending_word(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length());
        for (&i, &v) in &self.values {
            let s = self.block_start(i);
            out.extend(s..s + v - 1);
        }
        out
    }

    pub fn to_partition(&self) -> IntervalPartition {
        IntervalPartition {
            blocks: self
                .values
                .iter()
                .map(|(&i, &v)| {
                    let s = self.block_start(i);
                    (s, s + v - 1)
                })
                .collect(),
        }
    }

    pub fn from_partition(p: &IntervalPartition) -> Hedge {
        let mut excess = 0;
        let mut values = BTreeMap::new();
        for &(a, b) in &p.blocks {
            values.insert(a - excess, b - a + 1);
            excess += b - a;
        }
        Hedge { values }
    }

    /// Pointwise minimum: the greatest common left factor.
    pub fn min(&self, other: &Hedge) -> Hedge {
        Hedge::from_values(
            self.values
                .iter()
                .filter_map(|(&i, &v)| other.values.get(&i).map(|&w| (i, v.min(w)))),
        )
    }

    /// Pointwise maximum: the least common right multiple.
    pub fn max(&self, other: &Hedge) -> Hedge {
        let mut values = self.values.clone();
        for (&i, &w) in &other.values {
            let e = values.entry(i).or_insert(1);
            *e = (*e).max(w);
        }
        Hedge { values }
    }

    /// Least common left multiple, through the join of partitions.
    pub fn lclm(&self, other: &Hedge) -> Hedge {
        Hedge::from_partition(&self.to_partition().join(&other.to_partition()))
    }

    /// Greatest common right factor, through the meet of partitions.
    pub fn gcrf(&self, other: &Hedge) -> Hedge {
        Hedge::from_partition(&self.to_partition().meet(&other.to_partition()))
    }

    /// `self` is a left factor of `other`: pointwise `≤`.
    pub fn divides_left(&self, other: &Hedge) -> bool {
        self.values.iter().all(|(&i, &v)| v <= other.value(i))
    }

    /// `self` is a right factor of `other`: its partition refines theirs.
    pub fn divides_right(&self, other: &Hedge) -> bool {
        self.to_partition().refines(&other.to_partition())
    }

    /// `ν_q ν_m → ν_m ν_{q+1}` for `m ≤ q`; normal forms strictly increase.
    pub fn rules() -> RewriteSystem<usize> {
        RewriteSystem::new(
            "hedge",
            vec![RuleSchema::pair("shuffle", |q, m| {
                (m <= q).then(|| vec![m, q + 1])
            })],
            |bound| (0..=bound).collect(),
        )
        .with_shift(|i| i + 1)
        .with_labels(|i| format!("n{i}"))
    }

    /// `ν_a ν_b → ν_{b−1} ν_a` for `a < b`; normal forms do not increase.
    pub fn inverse_rules() -> RewriteSystem<usize> {
        RewriteSystem::new(
            "hedge-inverse",
            vec![RuleSchema::pair("unshuffle", |a, b| {
                (a < b).then(|| vec![b - 1, a])
            })],
            |bound| (0..=bound).collect(),
        )
        .with_shift(|i| i + 1)
        .with_labels(|i| format!("n{i}"))
    }
}

/// Ascending (strictly increasing) normal form of a `ν`-word.
pub fn ascending_nf(word: &[usize]) -> Result<Vec<usize>, RewriteError<usize>> {
    Hedge::rules()
        .normalize(word, Strategy::Leftmost, default_fuel(word.len()))
        .map(|r| r.word)
}

/// Descending (nonincreasing) normal form of a `ν`-word.
pub fn descending_nf(word: &[usize]) -> Result<Vec<usize>, RewriteError<usize>> {
    Hedge::inverse_rules()
        .normalize(word, Strategy::Leftmost, default_fuel(word.len()))
        .map(|r| r.word)
}

/// Collapses a nonincreasing word into runs `(index, count)`.
pub fn runs(word: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &i in word {
        match out.last_mut() {
            Some((j, n)) if *j == i => *n += 1,
            _ => out.push((i, 1)),
        }
    }
    out
}

impl fmt::Display for Hedge {
    /// Descending run-length form, e.g. `n3^2 n0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        for (k, (i, n)) in self.descending_runs().into_iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "n{i}")?;
            if n > 1 {
                write!(f, "^{n}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Hedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hedge({self})")
    }
}

/// A partition of `ℕ` into finite intervals. Only blocks with at least two
/// elements are stored, as inclusive `(start, end)` pairs in order.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct IntervalPartition {
    blocks: Vec<(usize, usize)>,
}

impl IntervalPartition {
    /// Normalizes arbitrary intervals: singletons dropped, sorted. Fails on
    /// overlapping blocks or reversed bounds.
    pub fn new(blocks: impl IntoIterator<Item = (usize, usize)>) -> Option<Self> {
        let mut blocks: Vec<_> = blocks.into_iter().filter(|(a, b)| a != b).collect();
        if blocks.iter().any(|(a, b)| a > b) {
            return None;
        }
        blocks.sort_unstable();
        if blocks.windows(2).any(|w| w[0].1 >= w[1].0) {
            return None;
        }
        Some(IntervalPartition { blocks })
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    /// The block containing `x`.
    pub fn block_of(&self, x: usize) -> (usize, usize) {
        self.blocks
            .iter()
            .copied()
            .find(|&(a, b)| a <= x && x <= b)
            .unwrap_or((x, x))
    }

    /// Finest partition coarser than both: merge blocks that share points.
    pub fn join(&self, other: &IntervalPartition) -> IntervalPartition {
        let mut all: Vec<_> = self.blocks.iter().chain(&other.blocks).copied().collect();
        all.sort_unstable();
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (a, b) in all {
            match out.last_mut() {
                Some(last) if a <= last.1 => last.1 = last.1.max(b),
                _ => out.push((a, b)),
            }
        }
        IntervalPartition { blocks: out }
    }

    /// Coarsest common refinement: pairwise intersections.
    pub fn meet(&self, other: &IntervalPartition) -> IntervalPartition {
        let mut out = Vec::new();
        for &(a, b) in &self.blocks {
            for &(c, d) in &other.blocks {
                let (lo, hi) = (a.max(c), b.min(d));
                if lo < hi {
                    out.push((lo, hi));
                }
            }
        }
        out.sort_unstable();
        IntervalPartition { blocks: out }
    }

    /// Every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &IntervalPartition) -> bool {
        self.blocks.iter().all(|&(a, b)| {
            let (c, d) = other.block_of(a);
            c <= a && b <= d
        })
    }
}
