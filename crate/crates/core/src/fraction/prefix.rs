//! Elements of `V̂` as prefix substitutions on addresses `i.v`, where `i`
//! picks a copy of the Cantor set and `v` is a binary string inside it.

use std::collections::BTreeMap;
use std::fmt;

use crate::braid::Perm;
use crate::forest::{Address, Forest};

/// A node `i.v`: copy `i`, path `v`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LeafAddr {
    pub copy: usize,
    pub path: Address,
}

impl LeafAddr {
    pub fn new(copy: usize, path: Address) -> Self {
        LeafAddr { copy, path }
    }

    pub fn root(copy: usize) -> Self {
        LeafAddr::new(copy, Address::root())
    }

    fn is_prefix_of(&self, other: &LeafAddr) -> bool {
        self.copy == other.copy && self.path.is_prefix_of(&other.path)
    }

    fn extend(&self, suffix: &Address) -> LeafAddr {
        LeafAddr::new(self.copy, self.path.concat(suffix))
    }
}

impl fmt::Display for LeafAddr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            write!(f, "{}", self.copy)
        } else {
            write!(f, "{}.{}", self.copy, self.path)
        }
    }
}

/// A bijection between two prefix-free covers of `⊔ᵢ {0,1}^ω`.
///
/// Sources cover copies `0..tail` exactly; every copy `c ≥ tail` is moved
/// whole to copy `c + shift`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrefixMap {
    pairs: BTreeMap<LeafAddr, LeafAddr>,
    tail: usize,
    shift: isize,
}

impl PrefixMap {
    pub fn identity() -> Self {
        PrefixMap {
            pairs: BTreeMap::new(),
            tail: 0,
            shift: 0,
        }
    }

    /// Leaf `n` of `g` goes to leaf `perm(n)` of `f`.
    pub fn from_triple(f: &Forest, perm: &Perm, g: &Forest) -> Self {
        let lf = f.length();
        let lg = g.length();
        let span = g
            .leaf_span()
            .max(f.leaf_span() + lg.saturating_sub(lf))
            .max(perm.support_bound());
        let mut pairs = BTreeMap::new();
        for n in 0..span {
            let (sc, sp) = g.leaf(n);
            let (tc, tp) = f.leaf(perm.apply(n));
            pairs.insert(LeafAddr::new(sc, sp), LeafAddr::new(tc, tp));
        }
        // Leaf `span` of g sits on copy `span − |g|`, which is past every
        // non-trivial tree and every moved leaf.
        let tail = span - lg;
        debug_assert!(span >= lg);
        let map = PrefixMap {
            pairs,
            tail,
            shift: lg as isize - lf as isize,
        };
        map.simplified()
    }

    pub fn tail(&self) -> usize {
        self.tail
    }

    pub fn shift(&self) -> isize {
        self.shift
    }

    pub fn pairs(&self) -> &BTreeMap<LeafAddr, LeafAddr> {
        &self.pairs
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.pairs.iter().all(|(s, t)| s == t)
    }

    fn shifted(&self, copy: usize) -> usize {
        (copy as isize + self.shift) as usize
    }

    /// The image of `addr`, if `addr` lies at or below a source.
    pub fn image(&self, addr: &LeafAddr) -> Option<LeafAddr> {
        if addr.copy >= self.tail {
            return Some(LeafAddr::new(self.shifted(addr.copy), addr.path.clone()));
        }
        // The only candidate source is the greatest one not after `addr`.
        let (s, t) = self.pairs.range(..=addr.clone()).next_back()?;
        if s.is_prefix_of(addr) {
            Some(t.extend(&s.path.strip_from(&addr.path).unwrap()))
        } else {
            None
        }
    }

    /// Sources strictly below `addr`, with their images.
    fn below<'a>(&'a self, addr: &'a LeafAddr) -> impl Iterator<Item = (&'a LeafAddr, &'a LeafAddr)> {
        self.pairs
            .range(addr.clone()..)
            .take_while(move |(s, _)| addr.is_prefix_of(s))
    }

    /// Writes every copy below `copies` out as explicit pairs.
    fn expanded(&self, copies: usize) -> PrefixMap {
        let mut out = self.clone();
        while out.tail < copies {
            out.pairs.insert(
                LeafAddr::root(out.tail),
                LeafAddr::root(out.shifted(out.tail)),
            );
            out.tail += 1;
        }
        out
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PrefixMap) -> PrefixMap {
        // Expand `other` until its tail lands inside `self`'s tail.
        let need = (self.tail as isize - other.shift).max(0) as usize;
        let inner = other.expanded(other.tail.max(need));
        let mut pairs = BTreeMap::new();
        for (s, t) in &inner.pairs {
            if let Some(image) = self.image(t) {
                pairs.insert(s.clone(), image);
            } else {
                for (s2, t2) in self.below(t) {
                    let rest = t.path.strip_from(&s2.path).unwrap();
                    pairs.insert(s.extend(&rest), t2.clone());
                }
            }
        }
        PrefixMap {
            pairs,
            tail: inner.tail,
            shift: self.shift + other.shift,
        }
        .simplified()
    }

    pub fn inverse(&self) -> PrefixMap {
        let pairs = self.pairs.iter().map(|(s, t)| (t.clone(), s.clone())).collect();
        PrefixMap {
            pairs,
            tail: self.shifted(self.tail),
            shift: -self.shift,
        }
        .simplified()
    }

    /// Equality as functions, after refining both to a common cover.
    pub fn same_map(&self, other: &PrefixMap) -> bool {
        if self.shift != other.shift {
            return false;
        }
        let copies = self.tail.max(other.tail);
        let a = self.expanded(copies);
        let b = other.expanded(copies);
        let agree = |x: &PrefixMap, y: &PrefixMap| {
            x.pairs
                .iter()
                .all(|(s, t)| y.image(s).map_or(true, |u| u == *t))
        };
        agree(&a, &b) && agree(&b, &a)
    }

    /// Merges sibling pairs `u0 ↦ w0, u1 ↦ w1` into `u ↦ w` and folds
    /// trailing whole-copy pairs into the tail, giving a canonical form.
    pub fn simplified(&self) -> PrefixMap {
        let mut pairs = self.pairs.clone();
        loop {
            let mut merged = None;
            for (s, t) in &pairs {
                let (Some(&false), Some(&false)) = (s.path.bits().last(), t.path.bits().last()) else {
                    continue;
                };
                let sp = LeafAddr::new(s.copy, s.path.parent().unwrap());
                let tp = LeafAddr::new(t.copy, t.path.parent().unwrap());
                let s1 = sp.extend(&Address::from_bits([true]));
                let t1 = tp.extend(&Address::from_bits([true]));
                if pairs.get(&s1) == Some(&t1) {
                    merged = Some((s.clone(), s1, sp, tp));
                    break;
                }
            }
            match merged {
                Some((s0, s1, sp, tp)) => {
                    pairs.remove(&s0);
                    pairs.remove(&s1);
                    pairs.insert(sp, tp);
                }
                None => break,
            }
        }
        let mut tail = self.tail;
        while tail > 0 {
            let root = LeafAddr::root(tail - 1);
            let moved = (tail as isize - 1 + self.shift) >= 0
                && pairs.get(&root) == Some(&LeafAddr::root((tail as isize - 1 + self.shift) as usize));
            if !moved {
                break;
            }
            pairs.remove(&root);
            tail -= 1;
        }
        PrefixMap {
            pairs,
            tail,
            shift: self.shift,
        }
    }
}

impl fmt::Display for PrefixMap {
    /// Moved pairs only, e.g. `0.0 ↦ 0.1, 0.1 ↦ 0.0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let moved: Vec<_> = self
            .pairs
            .iter()
            .filter(|(s, t)| s != t)
            .map(|(s, t)| format!("{s} ↦ {t}"))
            .collect();
        let mut parts = moved;
        if self.shift != 0 {
            parts.push(format!("c ↦ c{:+} for c ≥ {}", self.shift, self.tail));
        }
        if parts.is_empty() {
            f.write_str("id")
        } else {
            f.write_str(&parts.join(", "))
        }
    }
}
