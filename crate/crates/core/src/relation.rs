//! Complete reflexive relations over individuals and their tier view.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::model::Individual;

/// A complete reflexive binary relation, stored as the verdict for every
/// ordered pair. `Ordering::Greater` at `(x, y)` means `x` is strictly
/// above `y`. Transitivity is not assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairwiseRelation {
    ground: Vec<Individual>,
    cells: Vec<Ordering>,
}

impl PairwiseRelation {
    /// Builds the relation from a verdict function evaluated once per
    /// unordered pair `{x, y}` with `x < y` lexicographically.
    pub fn from_fn<F>(ground: &BTreeSet<Individual>, mut verdict: F) -> Result<Self>
    where
        F: FnMut(&Individual, &Individual) -> Result<Ordering>,
    {
        let ground: Vec<Individual> = ground.iter().cloned().collect();
        let n = ground.len();
        let mut cells = vec![Ordering::Equal; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let v = verdict(&ground[i], &ground[j])?;
                cells[i * n + j] = v;
                cells[j * n + i] = v.reverse();
            }
        }
        Ok(PairwiseRelation { ground, cells })
    }

    /// Universal indifference.
    pub fn indifference(ground: &BTreeSet<Individual>) -> Self {
        let n = ground.len();
        PairwiseRelation {
            ground: ground.iter().cloned().collect(),
            cells: vec![Ordering::Equal; n * n],
        }
    }

    pub fn ground(&self) -> &[Individual] {
        &self.ground
    }

    fn index(&self, x: &Individual) -> Result<usize> {
        self.ground
            .binary_search(x)
            .map_err(|_| Error::domain(format!("{x} is not in the relation's ground set")))
    }

    fn at(&self, i: usize, j: usize) -> Ordering {
        self.cells[i * self.ground.len() + j]
    }

    /// The verdict `R|{x,y}` seen from `x`.
    pub fn restrict(&self, x: &Individual, y: &Individual) -> Result<Ordering> {
        Ok(self.at(self.index(x)?, self.index(y)?))
    }

    /// `x R y`.
    pub fn weakly_above(&self, x: &Individual, y: &Individual) -> Result<bool> {
        Ok(self.restrict(x, y)? != Ordering::Less)
    }

    /// `x P y`.
    pub fn strictly_above(&self, x: &Individual, y: &Individual) -> Result<bool> {
        Ok(self.restrict(x, y)? == Ordering::Greater)
    }

    /// First `(a, b, c)` in lexicographic order with `a R b`, `b R c` and
    /// not `a R c`.
    pub fn intransitive_triple(&self) -> Option<[Individual; 3]> {
        let n = self.ground.len();
        for a in 0..n {
            for b in 0..n {
                if a == b || self.at(a, b) == Ordering::Less {
                    continue;
                }
                for c in 0..n {
                    if c == a || c == b || self.at(b, c) == Ordering::Less {
                        continue;
                    }
                    if self.at(a, c) == Ordering::Less {
                        return Some([
                            self.ground[a].clone(),
                            self.ground[b].clone(),
                            self.ground[c].clone(),
                        ]);
                    }
                }
            }
        }
        None
    }

    /// The ordered partition best-first, or the intransitivity witness.
    pub fn tiers(&self) -> Tiers {
        if let Some(triple) = self.intransitive_triple() {
            return Tiers::Intransitive(triple);
        }
        let mut order: Vec<usize> = (0..self.ground.len()).collect();
        // Stable sort keeps lexicographic order inside a tier.
        order.sort_by(|&i, &j| self.at(j, i));
        let mut tiers: Vec<Vec<Individual>> = Vec::new();
        let mut prev: Option<usize> = None;
        for i in order {
            match prev {
                Some(p) if self.at(p, i) == Ordering::Equal => {
                    tiers.last_mut().unwrap().push(self.ground[i].clone())
                }
                _ => tiers.push(vec![self.ground[i].clone()]),
            }
            prev = Some(i);
        }
        Tiers::Ordered(tiers)
    }

    /// Full pairwise matrix, one row per individual; cell `>` means the row
    /// individual is strictly above the column individual.
    pub fn matrix(&self) -> String {
        let width = self
            .ground
            .iter()
            .map(|x| x.as_str().chars().count())
            .max()
            .unwrap_or(1);
        let mut out = format!("{:width$}", "");
        for x in &self.ground {
            out.push_str(&format!(" {x:width$}"));
        }
        out.push('\n');
        for (i, x) in self.ground.iter().enumerate() {
            out.push_str(&format!("{x:width$}"));
            for j in 0..self.ground.len() {
                let sym = match self.at(i, j) {
                    Ordering::Greater => ">",
                    Ordering::Less => "<",
                    Ordering::Equal => "=",
                };
                out.push_str(&format!(" {sym:width$}"));
            }
            out.push('\n');
        }
        out
    }
}

/// The tier view of a relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tiers {
    /// Tiers best-first; members of a tier are lexicographically sorted.
    Ordered(Vec<Vec<Individual>>),
    Intransitive([Individual; 3]),
}

impl fmt::Display for Tiers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tiers::Ordered(tiers) => {
                let text: Vec<String> = tiers
                    .iter()
                    .map(|t| {
                        t.iter()
                            .map(Individual::as_str)
                            .collect::<Vec<_>>()
                            .join(" = ")
                    })
                    .collect();
                f.write_str(&text.join(" > "))
            }
            Tiers::Intransitive([a, b, c]) => {
                write!(f, "intransitive: {a} R {b}, {b} R {c}, not {a} R {c}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::id;

    fn ground(ids: &[&str]) -> BTreeSet<Individual> {
        ids.iter().map(|s| id(s)).collect()
    }

    #[test]
    fn indifference_is_one_tier() {
        let rel = PairwiseRelation::indifference(&ground(&["b", "a", "c"]));
        assert_eq!(rel.restrict(&id("a"), &id("c")).unwrap(), Ordering::Equal);
        assert_eq!(rel.tiers().to_string(), "a = b = c");
    }

    #[test]
    fn reflexive_query_is_indifferent() {
        let rel =
            PairwiseRelation::from_fn(&ground(&["a", "b"]), |_, _| Ok(Ordering::Greater)).unwrap();
        assert_eq!(rel.restrict(&id("a"), &id("a")).unwrap(), Ordering::Equal);
        assert_eq!(rel.restrict(&id("b"), &id("a")).unwrap(), Ordering::Less);
        assert!(rel.restrict(&id("a"), &id("q")).is_err());
    }

    #[test]
    fn cycle_is_reported_with_witness() {
        let g = ground(&["x", "y", "z"]);
        let rel = PairwiseRelation::from_fn(&g, |a, b| {
            Ok(match (a.as_str(), b.as_str()) {
                ("x", "y") | ("y", "z") => Ordering::Greater,
                ("x", "z") => Ordering::Less,
                _ => unreachable!(),
            })
        })
        .unwrap();
        assert_eq!(
            rel.tiers(),
            Tiers::Intransitive([id("x"), id("y"), id("z")])
        );
    }

    #[test]
    fn tiers_group_ties() {
        let g = ground(&["A", "B", "C"]);
        let score = |x: &Individual| match x.as_str() {
            "A" => 3,
            "B" => 3,
            _ => 8,
        };
        let rel = PairwiseRelation::from_fn(&g, |a, b| Ok(score(b).cmp(&score(a)))).unwrap();
        assert_eq!(rel.tiers().to_string(), "A = B > C");
        assert!(rel.matrix().contains("C < <"));
    }
}
