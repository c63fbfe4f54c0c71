//! Weights with multiplicities.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ring::{format_rational, parse_rational, Rational};

/// A weight in exact coordinates.
pub type Weight = Vec<Rational>;

/// Finite multiset of weights; multiplicities are always positive.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WeightMultiset {
    counts: BTreeMap<Weight, u64>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        WeightMultiset::default()
    }

    pub fn insert(&mut self, w: Weight, mult: u64) {
        if mult > 0 {
            *self.counts.entry(w).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, w: &[Rational]) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    /// Sum of all multiplicities (the dimension of the representation).
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Number of distinct weights.
    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Distinct weights in ascending lexicographic order with multiplicities.
    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.counts.iter().map(|(w, c)| (w, *c))
    }

    /// Coordinate length, or `None` when empty.
    pub fn rank(&self) -> Option<usize> {
        self.counts.keys().next().map(Vec::len)
    }

    /// Applies `f` to every weight; images that coincide add up.
    pub fn map(&self, mut f: impl FnMut(&Weight) -> Weight) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (w, c) in &self.counts {
            out.insert(f(w), *c);
        }
        out
    }

    pub fn negated(&self) -> WeightMultiset {
        self.map(|w| w.iter().map(|x| -x.clone()).collect())
    }

    pub fn is_negation_closed(&self) -> bool {
        self.negated() == *self
    }

    pub fn union(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.insert(w.clone(), c);
        }
        out
    }

    /// `self` scaled by an integer multiplicity.
    pub fn times(&self, k: u64) -> WeightMultiset {
        WeightMultiset { counts: self.counts.iter().filter(|_| k > 0).map(|(w, c)| (w.clone(), c * k)).collect() }
    }

    /// Removes `other` once; fails if any multiplicity would go negative.
    pub fn subtract(&self, other: &WeightMultiset) -> Result<WeightMultiset> {
        let mut out = self.counts.clone();
        for (w, c) in other.iter() {
            let have = out.get(w).copied().unwrap_or(0);
            if have < c {
                return Err(Error::NotACharacter(format!(
                    "weight {} needed with multiplicity {c}, present {have}",
                    format_weight(w)
                )));
            }
            if have == c {
                out.remove(w);
            } else {
                out.insert(w.clone(), have - c);
            }
        }
        Ok(WeightMultiset { counts: out })
    }

    /// One weight per line: tab-separated coordinates, then the multiplicity.
    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        for (w, c) in &self.counts {
            for x in w {
                s.push_str(&format_rational(x));
                s.push('\t');
            }
            s.push_str(&c.to_string());
            s.push('\n');
        }
        s
    }

    pub fn from_tsv(text: &str) -> Result<WeightMultiset> {
        let mut out = WeightMultiset::new();
        for (lineno, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
            let (mult, coords) = fields.split_last().expect("nonempty line");
            let mult: u64 = mult
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: bad multiplicity {mult:?}", lineno + 1)))?;
            let w = coords.iter().map(|x| parse_rational(x)).collect::<Result<Weight>>()?;
            out.insert(w, mult);
        }
        Ok(out)
    }
}

impl FromIterator<Weight> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = Weight>>(iter: I) -> Self {
        let mut out = WeightMultiset::new();
        for w in iter {
            out.insert(w, 1);
        }
        out
    }
}

pub fn format_weight(w: &[Rational]) -> String {
    let parts: Vec<String> = w.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}
