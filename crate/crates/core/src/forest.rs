//! Binary forests under leaf-to-root grafting.
//!
//! A [`Forest`] is an infinite sequence of finite binary trees, all but
//! finitely many of them trivial. Trees are stored as explicit sets of node
//! addresses so that the divisibility lattice (union, intersection, left
//! division) is plain set arithmetic. The generator `λ_i` is the forest
//! with a single caret on tree `i`; every forest has a unique ascending
//! word `λ_{i0} λ_{i1} … λ_{ik}` with `i0 ≤ i1 ≤ … ≤ ik`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::hedge::Hedge;
use crate::rewrite::{RewriteSystem, RuleSchema};

/// A node address: the path from the root, `false` for left and `true`
/// for right. The empty address is the root.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Address(Vec<bool>);

impl Address {
    pub fn root() -> Self {
        Address(Vec::new())
    }

    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        Address(bits.into_iter().collect())
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, right: bool) -> Address {
        let mut bits = self.0.clone();
        bits.push(right);
        Address(bits)
    }

    pub fn parent(&self) -> Option<Address> {
        if self.0.is_empty() {
            None
        } else {
            Some(Address(self.0[..self.0.len() - 1].to_vec()))
        }
    }

    pub fn is_prefix_of(&self, other: &Address) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn concat(&self, suffix: &Address) -> Address {
        let mut bits = self.0.clone();
        bits.extend_from_slice(&suffix.0);
        Address(bits)
    }

    /// `other` with this address removed from its front, if it is a prefix.
    pub fn strip_from(&self, other: &Address) -> Option<Address> {
        other
            .0
            .strip_prefix(self.0.as_slice())
            .map(|rest| Address(rest.to_vec()))
    }

    /// Parses a string over `{0,1}`.
    pub fn parse(text: &str) -> Option<Address> {
        text.chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Address)
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// A finite binary tree, closed under prefixes and sibling-complete.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    nodes: BTreeSet<Address>,
}

impl Tree {
    pub fn trivial() -> Self {
        Tree {
            nodes: BTreeSet::from([Address::root()]),
        }
    }

    pub fn caret() -> Self {
        Tree {
            nodes: BTreeSet::from([
                Address::root(),
                Address::from_bits([false]),
                Address::from_bits([true]),
            ]),
        }
    }

    /// Builds a tree from a node set, checking the tree invariants.
    pub fn from_nodes(nodes: impl IntoIterator<Item = Address>) -> Option<Self> {
        let mut set: BTreeSet<Address> = nodes.into_iter().collect();
        set.insert(Address::root());
        for node in &set {
            if let Some(parent) = node.parent() {
                if !set.contains(&parent) {
                    return None;
                }
                let last = *node.bits().last().unwrap();
                if !set.contains(&parent.child(!last)) {
                    return None;
                }
            }
        }
        Some(Tree { nodes: set })
    }

    pub fn nodes(&self) -> &BTreeSet<Address> {
        &self.nodes
    }

    pub fn contains(&self, address: &Address) -> bool {
        self.nodes.contains(address)
    }

    pub fn is_trivial(&self) -> bool {
        self.nodes.len() == 1
    }

    pub fn caret_count(&self) -> usize {
        (self.nodes.len() - 1) / 2
    }

    pub fn is_leaf(&self, address: &Address) -> bool {
        self.nodes.contains(address) && !self.nodes.contains(&address.child(false))
    }

    /// Leaves in left-to-right order. Lexicographic order on addresses is
    /// preorder, so filtering the node set suffices.
    pub fn leaves(&self) -> Vec<Address> {
        self.nodes.iter().filter(|a| self.is_leaf(a)).cloned().collect()
    }

    pub fn leaf_count(&self) -> usize {
        self.caret_count() + 1
    }

    /// Internal nodes (caret tops) in preorder.
    pub fn carets(&self) -> impl Iterator<Item = &Address> {
        self.nodes
            .iter()
            .filter(move |a| self.nodes.contains(&a.child(false)))
    }

    /// The full subtree hanging below `at`, re-rooted.
    pub fn subtree(&self, at: &Address) -> Tree {
        Tree {
            nodes: self
                .nodes
                .range(at.clone()..)
                .take_while(|a| at.is_prefix_of(a))
                .filter_map(|a| at.strip_from(a))
                .collect(),
        }
    }

    fn graft(&mut self, at: &Address, sub: &Tree) {
        debug_assert!(self.is_leaf(at));
        for node in &sub.nodes {
            self.nodes.insert(at.concat(node));
        }
    }

    fn leftmost_leaf(&self, from: &Address) -> Address {
        let mut cur = from.clone();
        loop {
            let next = cur.child(false);
            if !self.nodes.contains(&next) {
                return cur;
            }
            cur = next;
        }
    }

    /// The leaf following the subtree at `node` in left-to-right order.
    fn next_leaf_after(&self, node: &Address) -> Option<Address> {
        let mut cur = node.clone();
        loop {
            let bits = cur.bits();
            match bits.last() {
                None => return None,
                Some(false) => {
                    let sibling = cur.parent().unwrap().child(true);
                    return Some(self.leftmost_leaf(&sibling));
                }
                Some(true) => cur = cur.parent().unwrap(),
            }
        }
    }

    /// Tries to cover the leaves of `self` by an antichain of nodes whose
    /// subtrees are, in order, `bottom(start)`, `bottom(start + 1)`, …
    /// Returns the tree above the antichain and the number of bottom trees
    /// consumed. The choice at every step is forced: the candidates for a
    /// given leftmost leaf are nested, so at most one has the right size.
    fn split_over<'a>(
        &self,
        start: usize,
        bottom: impl Fn(usize) -> &'a Tree,
    ) -> Option<(Tree, usize)> {
        let mut frontier = Vec::new();
        let mut pos = Some(self.leftmost_leaf(&Address::root()));
        let mut k = start;
        while let Some(leaf) = pos {
            let want = bottom(k);
            let mut cand = leaf;
            let found = loop {
                let sub = self.subtree(&cand);
                if sub.nodes.len() == want.nodes.len() {
                    break (sub == *want).then_some(cand);
                }
                if sub.nodes.len() > want.nodes.len() {
                    break None;
                }
                match cand.bits().last() {
                    Some(false) => cand = cand.parent().unwrap(),
                    _ => break None,
                }
            }?;
            pos = self.next_leaf_after(&found);
            frontier.push(found);
            k += 1;
        }
        let top = self
            .nodes
            .iter()
            .filter(|a| !frontier.iter().any(|f| f.is_prefix_of(a) && f != *a))
            .cloned()
            .collect();
        Some((Tree { nodes: top }, k - start))
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.nodes.iter()).finish()
    }
}

/// An element of the forest monoid.
///
/// Trees are indexed by `ℕ`; only the non-trivial ones are stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Forest {
    trees: BTreeMap<usize, Tree>,
}

static TRIVIAL_TREE: std::sync::OnceLock<Tree> = std::sync::OnceLock::new();

fn trivial_tree() -> &'static Tree {
    TRIVIAL_TREE.get_or_init(Tree::trivial)
}

impl Forest {
    pub fn trivial() -> Self {
        Forest::default()
    }

    /// The forest with a single caret, on tree `i`.
    pub fn lambda(i: usize) -> Self {
        Forest {
            trees: BTreeMap::from([(i, Tree::caret())]),
        }
    }

    /// Builds a forest from explicit trees, dropping trivial ones.
    pub fn from_trees(trees: impl IntoIterator<Item = (usize, Tree)>) -> Self {
        Forest {
            trees: trees.into_iter().filter(|(_, t)| !t.is_trivial()).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.trees.is_empty()
    }

    /// Tree `i`; trivial when not stored.
    pub fn tree(&self, i: usize) -> &Tree {
        self.trees.get(&i).unwrap_or_else(|| trivial_tree())
    }

    /// The non-trivial trees, by index.
    pub fn trees(&self) -> &BTreeMap<usize, Tree> {
        &self.trees
    }

    /// Number of carets.
    pub fn length(&self) -> usize {
        self.trees.values().map(Tree::caret_count).sum()
    }

    /// Largest index of a non-trivial tree.
    pub fn max_tree(&self) -> Option<usize> {
        self.trees.keys().next_back().copied()
    }

    /// Global leaf numbers covered by non-trivial trees lie below this bound.
    pub fn leaf_span(&self) -> usize {
        self.max_tree().map_or(0, |t| t + 1 + self.length())
    }

    /// Locates global leaf `n` as (tree index, address).
    pub fn leaf(&self, n: usize) -> (usize, Address) {
        let mut next_tree = 0;
        let mut next_leaf = 0;
        for (&t, tree) in &self.trees {
            let gap = t - next_tree;
            if n < next_leaf + gap {
                return (next_tree + (n - next_leaf), Address::root());
            }
            next_leaf += gap;
            let count = tree.leaf_count();
            if n < next_leaf + count {
                return (t, tree.leaves().swap_remove(n - next_leaf));
            }
            next_leaf += count;
            next_tree = t + 1;
        }
        (next_tree + (n - next_leaf), Address::root())
    }

    /// Global number of the first leaf of tree `t`.
    pub fn first_leaf_of_tree(&self, t: usize) -> usize {
        t + self.trees.range(..t).map(|(_, tr)| tr.caret_count()).sum::<usize>()
    }

    /// Global number of the leaf at `address` in tree `t`.
    pub fn leaf_number(&self, t: usize, address: &Address) -> Option<usize> {
        let tree = self.tree(t);
        let rank = tree.leaves().iter().position(|a| a == address)?;
        Some(self.first_leaf_of_tree(t) + rank)
    }

    /// Grafting product: tree `i` of `other` is hung on leaf `i` of `self`.
    pub fn mul(&self, other: &Forest) -> Forest {
        let spots: Vec<_> = other
            .trees
            .iter()
            .map(|(&j, sub)| (self.leaf(j), sub))
            .collect();
        let mut out = self.clone();
        for ((t, at), sub) in spots {
            out.trees
                .entry(t)
                .or_insert_with(Tree::trivial)
                .graft(&at, sub);
        }
        out
    }

    /// `self · λ_i`: a caret hung on leaf `i`.
    pub fn with_caret_at(&self, i: usize) -> Forest {
        let (t, at) = self.leaf(i);
        let mut out = self.clone();
        out.trees
            .entry(t)
            .or_insert_with(Tree::trivial)
            .graft(&at, &Tree::caret());
        out
    }

    pub fn from_word(word: &ForestWord) -> Forest {
        word.0
            .iter()
            .fold(Forest::trivial(), |f, &i| f.with_caret_at(i))
    }

    /// The unique ascending word. Carets are listed in preorder, each
    /// labelled by the number of leaves to its left.
    pub fn to_word(&self) -> ForestWord {
        let mut letters = Vec::with_capacity(self.length());
        for (&t, tree) in &self.trees {
            let base = self.first_leaf_of_tree(t);
            let leaves = tree.leaves();
            for caret in tree.carets() {
                let first = tree.leftmost_leaf(caret);
                let rank = leaves.iter().position(|a| *a == first).unwrap();
                letters.push(base + rank);
            }
        }
        ForestWord(letters)
    }

    pub fn union(&self, other: &Forest) -> Forest {
        let mut trees = self.trees.clone();
        for (&i, t) in &other.trees {
            trees
                .entry(i)
                .and_modify(|mine| mine.nodes.extend(t.nodes.iter().cloned()))
                .or_insert_with(|| t.clone());
        }
        Forest { trees }
    }

    /// Greatest common left factor.
    pub fn intersection(&self, other: &Forest) -> Forest {
        Forest::from_trees(self.trees.iter().filter_map(|(&i, t)| {
            other.trees.get(&i).map(|u| {
                (
                    i,
                    Tree {
                        nodes: t.nodes.intersection(&u.nodes).cloned().collect(),
                    },
                )
            })
        }))
    }

    /// Index-wise node containment, which is left divisibility.
    pub fn is_left_factor_of(&self, other: &Forest) -> bool {
        self.trees
            .iter()
            .all(|(i, t)| other.trees.get(i).is_some_and(|u| t.nodes.is_subset(&u.nodes)))
    }

    /// The unique `X` with `self · X = other`, if `self` is a left factor.
    pub fn left_divide(&self, other: &Forest) -> Option<Forest> {
        if !self.is_left_factor_of(other) {
            return None;
        }
        let mut trees = BTreeMap::new();
        for (&t, big) in &other.trees {
            let base = self.first_leaf_of_tree(t);
            for (rank, leaf) in self.tree(t).leaves().iter().enumerate() {
                let sub = big.subtree(leaf);
                if !sub.is_trivial() {
                    trees.insert(base + rank, sub);
                }
            }
        }
        Some(Forest { trees })
    }

    /// Whether `λ_i` is a right factor: leaves `i` and `i+1` are siblings.
    pub fn has_right_caret(&self, i: usize) -> bool {
        let (t0, a0) = self.leaf(i);
        let (t1, a1) = self.leaf(i + 1);
        t0 == t1
            && a0.bits().last() == Some(&false)
            && a1.bits().last() == Some(&true)
            && a0.parent() == a1.parent()
    }

    /// `F'` with `F = F' λ_i`, if leaves `i` and `i+1` are siblings.
    pub fn strip_right_caret(&self, i: usize) -> Option<Forest> {
        if !self.has_right_caret(i) {
            return None;
        }
        let (t, a0) = self.leaf(i);
        let parent = a0.parent().unwrap();
        let mut out = self.clone();
        let tree = out.trees.get_mut(&t).unwrap();
        tree.nodes.remove(&parent.child(false));
        tree.nodes.remove(&parent.child(true));
        if tree.is_trivial() {
            out.trees.remove(&t);
        }
        Some(out)
    }

    /// The unique `X` with `X · other = self`, if `other` is a right factor.
    pub fn right_divide(&self, other: &Forest) -> Option<Forest> {
        other
            .to_word()
            .0
            .iter()
            .rev()
            .try_fold(self.clone(), |acc, &i| acc.strip_right_caret(i))
    }

    /// All `i` for which `λ_i` is a right factor, ascending.
    pub fn right_carets(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (&t, tree) in &self.trees {
            let base = self.first_leaf_of_tree(t);
            let leaves = tree.leaves();
            for (rank, pair) in leaves.windows(2).enumerate() {
                if pair[0].parent() == pair[1].parent() {
                    out.push(base + rank);
                }
            }
        }
        out
    }

    /// Greatest common right factor: `(F̄, Ḡ, R)` with `F = F̄R`, `G = ḠR`.
    pub fn gcrf(&self, other: &Forest) -> (Forest, Forest, Forest) {
        let mut f = self.clone();
        let mut g = other.clone();
        let mut stripped = Vec::new();
        loop {
            let theirs = g.right_carets();
            let Some(i) = f.right_carets().into_iter().find(|i| theirs.contains(i)) else {
                break;
            };
            f = f.strip_right_caret(i).unwrap();
            g = g.strip_right_caret(i).unwrap();
            stripped.push(i);
        }
        stripped.reverse();
        (f, g, Forest::from_word(&ForestWord(stripped)))
    }

    /// Least common left multiple `L = P·self = Q·other`, when a common
    /// left multiple exists at all.
    ///
    /// Every tree of the least multiple is a single tree of one factor
    /// sitting on a trivial tree of its cofactor, with the matching run of
    /// trees from the other factor hanging below it. Walking both tree
    /// sequences in step, the larger current tree must absorb a run of the
    /// other side's trees, so the construction is forced and fails exactly
    /// when no common left multiple exists.
    pub fn lclm(&self, other: &Forest) -> Option<Lclm> {
        let end_f = self.max_tree().map_or(0, |t| t + 1);
        let end_g = other.max_tree().map_or(0, |t| t + 1);
        let (mut a, mut b, mut j) = (0, 0, 0);
        let mut p = BTreeMap::new();
        let mut q = BTreeMap::new();
        let mut l = BTreeMap::new();
        while a < end_f || b < end_g {
            let fa = self.tree(a);
            let gb = other.tree(b);
            if fa == gb {
                l.insert(j, fa.clone());
                a += 1;
                b += 1;
            } else if fa.nodes.len() > gb.nodes.len() {
                let (top, used) = fa.split_over(b, |k| other.tree(k))?;
                l.insert(j, fa.clone());
                q.insert(j, top);
                a += 1;
                b += used;
            } else {
                let (top, used) = gb.split_over(a, |k| self.tree(k))?;
                l.insert(j, gb.clone());
                p.insert(j, top);
                b += 1;
                a += used;
            }
            j += 1;
        }
        let result = Lclm {
            left: Forest::from_trees(p),
            right: Forest::from_trees(q),
            multiple: Forest::from_trees(l),
        };
        debug_assert_eq!(result.left.mul(self), result.multiple);
        debug_assert_eq!(result.right.mul(other), result.multiple);
        Some(result)
    }

    pub fn is_disjoint(&self, other: &Forest) -> bool {
        self.trees.keys().all(|k| !other.trees.contains_key(k))
    }

    /// Leaf count of each tree: the homomorphism onto hedges.
    pub fn leaf_count(&self) -> Hedge {
        Hedge::from_values(self.trees.iter().map(|(&t, tree)| (t, tree.leaf_count())))
    }
}

/// Result of [`Forest::lclm`]: `multiple = left · F = right · G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lclm {
    pub left: Forest,
    pub right: Forest,
    pub multiple: Forest,
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_word().fmt(f)
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Forest({})", self.to_word())
    }
}

/// A word in the generators `λ_i`.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct ForestWord(pub Vec<usize>);

impl ForestWord {
    pub fn is_ascending(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// The rewriting system `λ_q λ_m → λ_m λ_{q+1}` for `m < q`.
    pub fn rules() -> RewriteSystem<usize> {
        RewriteSystem::new(
            "forest",
            vec![RuleSchema::pair("shuffle", |q, m| {
                (m < q).then(|| vec![m, q + 1])
            })],
            |bound| (0..=bound).collect(),
        )
        .with_shift(|i| i + 1)
        .with_labels(|i| format!("l{i}"))
    }
}

impl fmt::Display for ForestWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "l{i}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(letters: &[usize]) -> Forest {
        Forest::from_word(&ForestWord(letters.to_vec()))
    }

    fn tree(addrs: &[&str]) -> Tree {
        Tree::from_nodes(addrs.iter().map(|a| Address::parse(a).unwrap())).unwrap()
    }

    #[test]
    fn lambda_has_one_caret() {
        assert_eq!(Forest::lambda(0).tree(0), &tree(&["", "0", "1"]));
        assert_eq!(Forest::lambda(3).tree(3), &tree(&["", "0", "1"]));
        assert!(Forest::lambda(3).tree(0).is_trivial());
        assert_ne!(Forest::lambda(0), Forest::lambda(1));
    }

    #[test]
    fn grafting_examples() {
        let l0 = Forest::lambda(0);
        assert_eq!(l0.mul(&Forest::trivial()), l0);
        assert_eq!(Forest::trivial().mul(&l0), l0);
        assert_eq!(l0.mul(&l0).tree(0), &tree(&["", "0", "1", "00", "01"]));
        assert_eq!(
            Forest::lambda(1).mul(&Forest::lambda(0)),
            Forest::lambda(0).mul(&Forest::lambda(2))
        );
    }

    #[test]
    fn word_round_trip_examples() {
        assert_eq!(word(&[1, 0]).to_word(), ForestWord(vec![0, 2]));
        assert_eq!(Forest::trivial().to_word(), ForestWord(vec![]));
        // After λ0λ0 the leaves are 00, 01, 1, so λ2 splits "1".
        assert_eq!(word(&[0, 0, 2]).tree(0), &tree(&["", "0", "1", "00", "01", "10", "11"]));
    }

    #[test]
    fn lengths() {
        assert_eq!(Forest::trivial().length(), 0);
        assert_eq!(Forest::lambda(5).length(), 1);
        assert_eq!(word(&[0, 1, 0]).length(), 3);
    }

    #[test]
    fn union_and_intersection() {
        let f = word(&[0, 3, 3]);
        assert_eq!(f.union(&f), f);
        assert!(Forest::lambda(0).intersection(&Forest::lambda(1)).is_trivial());
        assert_eq!(Forest::lambda(0).union(&Forest::lambda(1)), word(&[0, 2]));
        assert_eq!(Forest::lambda(0).union(&Forest::lambda(1)), word(&[1, 0]));
    }

    #[test]
    fn left_division() {
        let f = word(&[0, 1, 4]);
        assert_eq!(f.left_divide(&f), Some(Forest::trivial()));
        assert_eq!(Forest::lambda(0).left_divide(&word(&[0, 1])), Some(Forest::lambda(1)));
        assert_eq!(Forest::lambda(1).left_divide(&Forest::lambda(0)), None);
    }

    #[test]
    fn strip_right_caret_examples() {
        assert_eq!(Forest::lambda(0).strip_right_caret(0), Some(Forest::trivial()));
        // λ0λ1 = {ε,0,1,10,11}: leaves 0, 10, 11.
        assert_eq!(word(&[0, 1]).strip_right_caret(0), None);
        assert_eq!(word(&[0, 1]).strip_right_caret(1), Some(Forest::lambda(0)));
    }

    #[test]
    fn gcrf_examples() {
        let f = word(&[0, 2, 2]);
        assert_eq!(f.gcrf(&f), (Forest::trivial(), Forest::trivial(), f.clone()));
        assert_eq!(
            Forest::lambda(0).gcrf(&Forest::lambda(1)),
            (Forest::lambda(0), Forest::lambda(1), Forest::trivial())
        );
        assert_eq!(
            word(&[0, 0]).gcrf(&word(&[1, 0])),
            (Forest::lambda(0), Forest::lambda(1), Forest::lambda(0))
        );
    }

    #[test]
    fn lclm_examples() {
        let f = word(&[0, 0, 3]);
        let l = f.lclm(&f).unwrap();
        assert_eq!((l.left, l.right, l.multiple), (Forest::trivial(), Forest::trivial(), f));
        // Leaf 1 cannot be the sibling of both leaf 0 and leaf 2.
        assert_eq!(Forest::lambda(0).lclm(&Forest::lambda(1)), None);
        // λ0λ0 sits inside a tree that λ0λ1 cannot share.
        assert_eq!(word(&[0, 0]).lclm(&word(&[0, 1])), None);
        let l = Forest::lambda(0).lclm(&word(&[0, 0])).unwrap();
        assert_eq!(l.multiple, word(&[0, 0]));
        assert_eq!(l.left, Forest::lambda(0));
        assert_eq!(l.right, Forest::trivial());
    }

    #[test]
    fn leaf_location() {
        let f = word(&[0, 0, 4]);
        // tree 0 has leaves 00, 01, 1; tree 1 trivial (leaf 3); tree 2 gets λ4.
        assert_eq!(f.leaf(2), (0, Address::parse("1").unwrap()));
        assert_eq!(f.leaf(3), (1, Address::root()));
        assert_eq!(f.leaf(4), (2, Address::parse("0").unwrap()));
        assert_eq!(f.leaf(6), (3, Address::root()));
        assert_eq!(f.leaf_number(2, &Address::parse("1").unwrap()), Some(5));
    }

    #[test]
    fn leaf_counts() {
        assert!(Forest::trivial().leaf_count().is_identity());
        assert_eq!(word(&[0, 0]).leaf_count().value(0), 3);
        assert_eq!(word(&[0, 0]).leaf_count().value(1), 1);
    }
}
