//! Individuals, coalitions, coalition multisets and coalitional rankings.
//!
//! Classes are stored worst-first: class `k = 1` is the worst equivalence
//! class and `k = l` the best. Everything that reads or writes a best-first
//! listing (the text notation here, the JSON document loader) converts at
//! the boundary.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest multiplicity a single coalition may carry within one class.
pub const MAX_MULTIPLICITY: u64 = (1 << 31) - 1;
/// Largest number of equivalence classes in a ranking.
pub const MAX_CLASSES: usize = 10_000;

const RESERVED: &[char] = &['{', '}', ',', '>', '*'];

/// An individual, identified by an opaque whitespace-free token.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Individual(String);

impl Individual {
    pub fn new(id: impl Into<String>) -> Result<Self> {
        let id = id.into();
        if id.is_empty() {
            return Err(Error::domain("individual id must be non-empty"));
        }
        if id
            .chars()
            .any(|c| c.is_whitespace() || RESERVED.contains(&c))
        {
            return Err(Error::domain(format!(
                "individual id {id:?} contains whitespace or one of {{ }} , > *"
            )));
        }
        Ok(Individual(id))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for Individual {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        Individual::new(value)
    }
}

impl From<Individual> for String {
    fn from(value: Individual) -> Self {
        value.0
    }
}

impl FromStr for Individual {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Individual::new(s)
    }
}

impl fmt::Display for Individual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A set of individuals. The empty coalition is allowed.
///
/// Ordering is lexicographic over the sorted member list, which gives every
/// multiset a canonical iteration order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coalition(BTreeSet<Individual>);

impl Coalition {
    pub fn empty() -> Self {
        Coalition(BTreeSet::new())
    }

    pub fn new(members: impl IntoIterator<Item = Individual>) -> Self {
        Coalition(members.into_iter().collect())
    }

    /// Builds a coalition from token strings, rejecting duplicates.
    pub fn parse_members<S: AsRef<str>>(members: &[S]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for m in members {
            let id = Individual::new(m.as_ref())?;
            if !set.insert(id) {
                return Err(Error::domain(format!(
                    "duplicate member {:?} in coalition",
                    m.as_ref()
                )));
            }
        }
        Ok(Coalition(set))
    }

    pub fn contains(&self, x: &Individual) -> bool {
        self.0.contains(x)
    }

    pub fn members(&self) -> impl Iterator<Item = &Individual> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True iff `x` is a member and `y` is not.
    pub fn separates(&self, x: &Individual, y: &Individual) -> bool {
        self.contains(x) && !self.contains(y)
    }

    fn mapped(&self, f: impl Fn(&Individual) -> Individual) -> Coalition {
        Coalition(self.0.iter().map(f).collect())
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for Coalition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|rest| rest.strip_suffix('}'))
            .ok_or_else(|| Error::parse(format!("coalition {s:?} must be written {{a,b,...}}")))?;
        if inner.trim().is_empty() {
            return Ok(Coalition::empty());
        }
        let members: Vec<&str> = inner.split(',').map(str::trim).collect();
        Coalition::parse_members(&members)
    }
}

/// A multiset of coalitions; absent coalitions have multiplicity zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoalitionMultiset(BTreeMap<Coalition, u64>);

impl CoalitionMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// The multiset holding `coalition` exactly once.
    pub fn single(coalition: Coalition) -> Self {
        let mut m = Self::new();
        m.0.insert(coalition, 1);
        m
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (Coalition, u64)>) -> Result<Self> {
        let mut m = Self::new();
        for (c, n) in entries {
            m.insert(c, n)?;
        }
        Ok(m)
    }

    /// Adds `count` copies of `coalition`. Adding zero copies is a no-op.
    pub fn insert(&mut self, coalition: Coalition, count: u64) -> Result<()> {
        if count == 0 {
            return Ok(());
        }
        let slot = self.0.entry(coalition).or_insert(0);
        let total = *slot + count;
        if total > MAX_MULTIPLICITY {
            return Err(Error::resource(format!(
                "multiplicity {total} exceeds cap {MAX_MULTIPLICITY}"
            )));
        }
        *slot = total;
        Ok(())
    }

    /// Removes one copy of `coalition`; returns false if it was absent.
    pub fn remove_one(&mut self, coalition: &Coalition) -> bool {
        match self.0.get_mut(coalition) {
            Some(n) if *n > 1 => {
                *n -= 1;
                true
            }
            Some(_) => {
                self.0.remove(coalition);
                true
            }
            None => false,
        }
    }

    pub fn multiplicity(&self, coalition: &Coalition) -> u64 {
        self.0.get(coalition).copied().unwrap_or(0)
    }

    /// Total multiplicity `|m|`.
    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of distinct coalitions.
    pub fn distinct(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Coalition, u64)> {
        self.0.iter().map(|(c, n)| (c, *n))
    }

    /// Coalitions in canonical order, each repeated by its multiplicity.
    pub fn expanded(&self) -> impl Iterator<Item = &Coalition> {
        self.0
            .iter()
            .flat_map(|(c, n)| std::iter::repeat_n(c, *n as usize))
    }

    /// Number of coalitions (with multiplicity) that contain `x`.
    pub fn count_containing(&self, x: &Individual) -> u64 {
        self.iter()
            .filter(|(c, _)| c.contains(x))
            .map(|(_, n)| n)
            .sum()
    }

    /// Pointwise sum `m + m'`.
    pub fn sum(&self, other: &CoalitionMultiset) -> Result<CoalitionMultiset> {
        let mut out = self.clone();
        for (c, n) in other.iter() {
            out.insert(c.clone(), n)?;
        }
        Ok(out)
    }

    /// Truncated difference `m ∖ m'`, pointwise `max(0, m(a) - m'(a))`.
    pub fn difference(&self, other: &CoalitionMultiset) -> CoalitionMultiset {
        let entries = self
            .iter()
            .filter_map(|(c, n)| {
                let left = n.saturating_sub(other.multiplicity(c));
                (left > 0).then(|| (c.clone(), left))
            })
            .collect();
        CoalitionMultiset(entries)
    }

    /// Every individual appearing in some coalition.
    pub fn individuals(&self) -> BTreeSet<Individual> {
        self.0.keys().flat_map(|c| c.members().cloned()).collect()
    }

    fn mapped(&self, f: impl Fn(&Individual) -> Individual) -> CoalitionMultiset {
        let mut out = BTreeMap::new();
        for (c, n) in self.iter() {
            *out.entry(c.mapped(&f)).or_insert(0) += n;
        }
        CoalitionMultiset(out)
    }
}

impl fmt::Display for CoalitionMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, n)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
            if n > 1 {
                write!(f, "*{n}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for CoalitionMultiset {
    type Err = Error;

    /// Parses `{a,b} {c}*2 {}`: coalitions separated by whitespace, an
    /// optional `*n` suffix repeating a coalition `n` times.
    fn from_str(s: &str) -> Result<Self> {
        let mut m = CoalitionMultiset::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let close = rest
                .find('}')
                .ok_or_else(|| Error::parse(format!("unterminated coalition in {s:?}")))?;
            let coalition: Coalition = rest[..=close].parse()?;
            rest = rest[close + 1..].trim_start();
            let mut count = 1;
            if let Some(after) = rest.strip_prefix('*') {
                let end = after
                    .find(|c: char| !c.is_ascii_digit())
                    .unwrap_or(after.len());
                count = after[..end]
                    .parse::<u64>()
                    .map_err(|_| Error::parse(format!("bad multiplicity in {s:?}")))?;
                if count == 0 {
                    return Err(Error::parse("multiplicity must be positive"));
                }
                rest = after[end..].trim_start();
            }
            m.insert(coalition, count)?;
        }
        Ok(m)
    }
}

/// An ordered sequence of nonempty coalition multisets over a finite
/// universe of individuals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalitionalRanking {
    /// Worst-first: `classes[0]` is class `k = 1`.
    classes: Vec<CoalitionMultiset>,
    universe: BTreeSet<Individual>,
}

impl CoalitionalRanking {
    /// Builds a ranking from classes listed worst-first. The universe is
    /// `declared` plus every individual appearing in some coalition.
    pub fn from_worst_first(
        classes: Vec<CoalitionMultiset>,
        declared: impl IntoIterator<Item = Individual>,
    ) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::domain(
                "a coalitional ranking needs at least one class",
            ));
        }
        if classes.len() > MAX_CLASSES {
            return Err(Error::resource(format!(
                "{} classes exceeds cap {MAX_CLASSES}",
                classes.len()
            )));
        }
        if let Some(k) = classes.iter().position(CoalitionMultiset::is_empty) {
            return Err(Error::domain(format!("class {} is empty", k + 1)));
        }
        let mut universe: BTreeSet<Individual> = declared.into_iter().collect();
        for class in &classes {
            universe.extend(class.individuals());
        }
        Ok(CoalitionalRanking { classes, universe })
    }

    /// Builds a ranking from classes listed best-first.
    pub fn from_best_first(
        mut classes: Vec<CoalitionMultiset>,
        declared: impl IntoIterator<Item = Individual>,
    ) -> Result<Self> {
        classes.reverse();
        Self::from_worst_first(classes, declared)
    }

    /// Returns a copy whose universe also includes `extra`.
    pub fn with_declared(&self, extra: impl IntoIterator<Item = Individual>) -> Self {
        let mut out = self.clone();
        out.universe.extend(extra);
        out
    }

    /// Number of classes `l`.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Class `k`, 1-based and worst-first.
    pub fn class(&self, k: usize) -> Option<&CoalitionMultiset> {
        k.checked_sub(1).and_then(|i| self.classes.get(i))
    }

    /// All classes, worst-first.
    pub fn classes(&self) -> &[CoalitionMultiset] {
        &self.classes
    }

    /// `(k, class)` pairs, worst-first.
    pub fn indexed_classes(&self) -> impl DoubleEndedIterator<Item = (usize, &CoalitionMultiset)> {
        self.classes.iter().enumerate().map(|(i, c)| (i + 1, c))
    }

    pub fn universe(&self) -> &BTreeSet<Individual> {
        &self.universe
    }

    /// Total multiplicity over all classes.
    pub fn total_coalitions(&self) -> u64 {
        self.classes.iter().map(CoalitionMultiset::total).sum()
    }

    /// Number of coalitions containing `x`, with multiplicity.
    pub fn count_containing(&self, x: &Individual) -> u64 {
        self.classes.iter().map(|c| c.count_containing(x)).sum()
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if (1..=self.class_count()).contains(&k) {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "class index {k} outside 1..={}",
                self.class_count()
            )))
        }
    }

    /// Class-wise sum of two rankings with the same number of classes.
    pub fn sum(&self, other: &CoalitionalRanking) -> Result<CoalitionalRanking> {
        if self.class_count() != other.class_count() {
            return Err(Error::domain(format!(
                "cannot sum rankings with {} and {} classes",
                self.class_count(),
                other.class_count()
            )));
        }
        let classes = self
            .classes
            .iter()
            .zip(&other.classes)
            .map(|(a, b)| a.sum(b))
            .collect::<Result<Vec<_>>>()?;
        let universe = self.universe.union(&other.universe).cloned().collect();
        Ok(CoalitionalRanking { classes, universe })
    }

    /// `r + (m)_k`: adds `m` to the `k`-th-worst class.
    pub fn with_added(&self, m: &CoalitionMultiset, k: usize) -> Result<CoalitionalRanking> {
        self.check_index(k)?;
        let mut out = self.clone();
        out.classes[k - 1] = out.classes[k - 1].sum(m)?;
        out.universe.extend(m.individuals());
        Ok(out)
    }

    /// `r + (1_S)_k`.
    pub fn with_coalition(&self, s: &Coalition, k: usize) -> Result<CoalitionalRanking> {
        self.with_added(&CoalitionMultiset::single(s.clone()), k)
    }

    /// `r^σ`, where `m^σ(S) = m(σ(S))`: every member `x` is replaced by
    /// `σ⁻¹(x)`.
    pub fn permuted(&self, sigma: &Permutation) -> Result<CoalitionalRanking> {
        if let Some(missing) = self.universe.iter().find(|x| !sigma.covers(x)) {
            return Err(Error::domain(format!(
                "permutation is not defined on {missing}"
            )));
        }
        let classes = self
            .classes
            .iter()
            .map(|m| m.mapped(|x| sigma.inverse_of(x).clone()))
            .collect();
        Ok(CoalitionalRanking {
            classes,
            universe: self.universe.clone(),
        })
    }

    /// Every class has total multiplicity exactly one.
    pub fn is_linear(&self) -> bool {
        self.classes.iter().all(|c| c.total() == 1)
    }

    /// `x` and `y` belong to the same number of coalitions.
    pub fn is_symmetric_pair(&self, x: &Individual, y: &Individual) -> Result<bool> {
        if x == y {
            return Err(Error::domain(
                "symmetric pair needs two distinct individuals",
            ));
        }
        Ok(self.count_containing(x) == self.count_containing(y))
    }

    /// Returns a copy with class `k` removed; fails if that would leave no
    /// class.
    pub fn without_class(&self, k: usize) -> Result<CoalitionalRanking> {
        self.check_index(k)?;
        let mut classes = self.classes.clone();
        classes.remove(k - 1);
        Self::from_worst_first(classes, self.universe.iter().cloned())
    }

    /// Returns a copy with one copy of `s` removed from class `k`; fails if
    /// the class would become empty or does not hold `s`.
    pub fn without_coalition(&self, s: &Coalition, k: usize) -> Result<CoalitionalRanking> {
        self.check_index(k)?;
        let mut out = self.clone();
        if !out.classes[k - 1].remove_one(s) {
            return Err(Error::domain(format!("class {k} does not contain {s}")));
        }
        if out.classes[k - 1].is_empty() {
            return Err(Error::domain(format!("class {k} would become empty")));
        }
        Ok(out)
    }

    /// Returns a copy whose universe drops `x`; fails if `x` still appears
    /// in a coalition.
    pub fn without_individual(&self, x: &Individual) -> Result<CoalitionalRanking> {
        if self.count_containing(x) > 0 {
            return Err(Error::domain(format!("{x} appears in a coalition")));
        }
        let mut out = self.clone();
        out.universe.remove(x);
        Ok(out)
    }
}

impl fmt::Display for CoalitionalRanking {
    /// Best-first notation: `{a,b} {c} > {a}*2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, class) in self.classes.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" > ")?;
            }
            write!(f, "{class}")?;
        }
        Ok(())
    }
}

impl FromStr for CoalitionalRanking {
    type Err = Error;

    /// Parses the best-first notation produced by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let classes = s
            .split('>')
            .map(str::parse::<CoalitionMultiset>)
            .collect::<Result<Vec<_>>>()?;
        CoalitionalRanking::from_best_first(classes, [])
    }
}

/// A bijection on a finite set of individuals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    forward: BTreeMap<Individual, Individual>,
    inverse: BTreeMap<Individual, Individual>,
}

impl Permutation {
    /// Builds a permutation from `(x, σ(x))` pairs.
    pub fn new(pairs: impl IntoIterator<Item = (Individual, Individual)>) -> Result<Self> {
        let mut forward = BTreeMap::new();
        let mut inverse = BTreeMap::new();
        for (from, to) in pairs {
            if forward.insert(from.clone(), to.clone()).is_some() {
                return Err(Error::domain(format!("{from} mapped twice")));
            }
            if inverse.insert(to.clone(), from).is_some() {
                return Err(Error::domain(format!(
                    "{to} is the image of two individuals"
                )));
            }
        }
        if forward.keys().ne(inverse.keys()) {
            return Err(Error::domain("permutation domain and image differ"));
        }
        Ok(Permutation { forward, inverse })
    }

    pub fn identity(universe: &BTreeSet<Individual>) -> Self {
        let forward: BTreeMap<_, _> = universe.iter().map(|x| (x.clone(), x.clone())).collect();
        Permutation {
            inverse: forward.clone(),
            forward,
        }
    }

    /// The transposition of `x` and `y`, identity elsewhere on `universe`.
    pub fn swap(universe: &BTreeSet<Individual>, x: &Individual, y: &Individual) -> Result<Self> {
        if !universe.contains(x) || !universe.contains(y) {
            return Err(Error::domain("swap endpoints must belong to the universe"));
        }
        Permutation::new(universe.iter().map(|z| {
            let image = if z == x {
                y.clone()
            } else if z == y {
                x.clone()
            } else {
                z.clone()
            };
            (z.clone(), image)
        }))
    }

    pub fn covers(&self, x: &Individual) -> bool {
        self.forward.contains_key(x)
    }

    /// `σ(x)`; individuals outside the domain map to themselves.
    pub fn apply<'a>(&'a self, x: &'a Individual) -> &'a Individual {
        self.forward.get(x).unwrap_or(x)
    }

    /// `σ⁻¹(x)`; individuals outside the domain map to themselves.
    pub fn inverse_of<'a>(&'a self, x: &'a Individual) -> &'a Individual {
        self.inverse.get(x).unwrap_or(x)
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
        }
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Individual, &Individual)> {
        self.forward.iter()
    }

    pub fn is_identity_on(&self, x: &Individual) -> bool {
        self.apply(x) == x
    }

    /// Drops `x` from the domain; only valid when `σ(x) = x`.
    pub(crate) fn without_fixed_point(&self, x: &Individual) -> Option<Permutation> {
        if !self.is_identity_on(x) {
            return None;
        }
        let mut out = self.clone();
        out.forward.remove(x);
        out.inverse.remove(x);
        Some(out)
    }
}

#[cfg(test)]
pub(crate) fn id(s: &str) -> Individual {
    Individual::new(s).unwrap()
}
