//! Serde support for the value types.
//!
//! Shapes:
//!
//! * forest: `{"trees": {"0": ["", "0", "1"]}}`, addresses as bit strings
//! * braid word: signed integers, `±(i + 1)` for `σ_i^{±1}`
//! * hedge: `{"values": {"3": 3}}`
//! * monoid element: `{"forest": …, "braid": …, "flavor": "B"}`
//! * fraction: `{"F": …, "alpha": …, "G": …, "flavor": "S", "normalized": true}`
//!
//! A braid word read on its own is braided; the enclosing `flavor` field
//! decides otherwise.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::braid::{BraidWord, Flavor};
use crate::forest::{Address, Forest, Tree};
use crate::fraction::Fraction;
use crate::hedge::Hedge;
use crate::zappa::MonoidElt;

#[derive(Serialize, Deserialize)]
struct ForestRepr {
    trees: BTreeMap<usize, Vec<String>>,
}

impl Serialize for Forest {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let trees = self
            .trees()
            .iter()
            .map(|(&i, t)| (i, t.nodes().iter().map(|a| a.to_string()).collect()))
            .collect();
        ForestRepr { trees }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Forest {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = ForestRepr::deserialize(d)?;
        let mut trees = Vec::new();
        for (i, nodes) in repr.trees {
            let addrs = nodes
                .iter()
                .map(|n| Address::parse(n).ok_or_else(|| D::Error::custom(format!("bad address `{n}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            let tree = Tree::from_nodes(addrs)
                .ok_or_else(|| D::Error::custom(format!("tree {i} is not a binary tree")))?;
            trees.push((i, tree));
        }
        Ok(Forest::from_trees(trees))
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_signed().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let values = Vec::<i64>::deserialize(d)?;
        BraidWord::from_signed(&values, Flavor::Braided).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct HedgeRepr {
    values: BTreeMap<usize, usize>,
}

impl Serialize for Hedge {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        HedgeRepr {
            values: self.values().clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Hedge {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = HedgeRepr::deserialize(d)?;
        if let Some((i, _)) = repr.values.iter().find(|(_, &v)| v == 0) {
            return Err(D::Error::custom(format!("hedge value at {i} is zero")));
        }
        Ok(Hedge::from_values(repr.values))
    }
}

#[derive(Serialize, Deserialize)]
struct MonoidRepr {
    forest: Forest,
    braid: BraidWord,
    flavor: Flavor,
}

impl Serialize for MonoidElt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MonoidRepr {
            forest: self.forest.clone(),
            braid: self.braid.clone(),
            flavor: self.flavor(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonoidElt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = MonoidRepr::deserialize(d)?;
        Ok(MonoidElt::new(repr.forest, repr.braid.with_flavor(repr.flavor)))
    }
}

#[derive(Serialize, Deserialize)]
struct FractionRepr {
    #[serde(rename = "F")]
    numerator: Forest,
    alpha: BraidWord,
    #[serde(rename = "G")]
    denominator: Forest,
    flavor: Flavor,
    #[serde(default)]
    normalized: bool,
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FractionRepr {
            numerator: self.numerator().clone(),
            alpha: self.braid().clone(),
            denominator: self.denominator().clone(),
            flavor: self.flavor(),
            normalized: self.is_normalized(),
        }
        .serialize(s)
    }
}

/// A triple claiming to be normalized is checked against its reduction.
impl<'de> Deserialize<'de> for Fraction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = FractionRepr::deserialize(d)?;
        let t = Fraction::new(repr.numerator, repr.alpha.with_flavor(repr.flavor), repr.denominator);
        if !repr.normalized {
            return Ok(t);
        }
        let r = t.reduce();
        if r.numerator() == t.numerator() && r.denominator() == t.denominator() && r.braid() == t.braid() {
            Ok(r)
        } else {
            Err(D::Error::custom("triple is marked normalized but is not reduced"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::ForestWord;
    use serde_json::{json, to_value};

    fn fw(letters: &[usize]) -> Forest {
        Forest::from_word(&ForestWord(letters.to_vec()))
    }

    #[test]
    fn shapes() {
        assert_eq!(to_value(Forest::lambda(0)).unwrap(), json!({"trees": {"0": ["", "0", "1"]}}));
        let b = BraidWord::parse("s0 s2' s1", Flavor::Braided).unwrap();
        assert_eq!(to_value(&b).unwrap(), json!([1, -3, 2]));
        assert_eq!(to_value(Hedge::from_values([(3, 3)])).unwrap(), json!({"values": {"3": 3}}));
        let x = MonoidElt::new(Forest::lambda(1), b.with_flavor(Flavor::Symmetric));
        assert_eq!(
            to_value(&x).unwrap(),
            json!({"forest": {"trees": {"1": ["", "0", "1"]}}, "braid": [1, 3, 2], "flavor": "S"})
        );
        let t = Fraction::new(fw(&[0]), b, fw(&[0, 0]));
        let v = to_value(&t).unwrap();
        assert_eq!(v["normalized"], json!(false));
        assert_eq!(v["G"], json!({"trees": {"0": ["", "0", "00", "01", "1"]}}));
    }

    #[test]
    fn round_trips() {
        let t = Fraction::new(fw(&[0, 2]), BraidWord::parse("s1 s0'", Flavor::Symmetric).unwrap(), fw(&[1])).reduce();
        let back: Fraction = serde_json::from_value(to_value(&t).unwrap()).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.flavor(), Flavor::Symmetric);
        let bad = json!({"trees": {"0": ["", "0"]}});
        assert!(serde_json::from_value::<Forest>(bad).is_err());
        let fake = json!({"F": {"trees": {"0": ["", "0", "1"]}}, "alpha": [], "G": {"trees": {"0": ["", "0", "1"]}}, "flavor": "B", "normalized": true});
        assert!(serde_json::from_value::<Fraction>(fake).is_err());
    }
}
