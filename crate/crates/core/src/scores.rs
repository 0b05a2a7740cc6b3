//! Score functions over coalitional rankings.
//!
//! Every score sums a per-coalition weight over the coalitions containing
//! an individual, counted with multiplicity. Weights depend only on the
//! class index `k` (worst-first) and, for the second and third Borda
//! types, on the total multiplicities of the other classes.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::model::{CoalitionalRanking, Individual};

pub type Rational = BigRational;

/// Exact scores for every individual of a ranking's universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreMap {
    values: BTreeMap<Individual, Rational>,
}

impl ScoreMap {
    fn zeros(r: &CoalitionalRanking) -> BTreeMap<Individual, Rational> {
        r.universe()
            .iter()
            .map(|x| (x.clone(), Rational::zero()))
            .collect()
    }

    pub(crate) fn from_values(values: BTreeMap<Individual, Rational>) -> Self {
        ScoreMap { values }
    }

    pub fn get(&self, x: &Individual) -> Result<&Rational> {
        self.values
            .get(x)
            .ok_or_else(|| Error::domain(format!("{x} is not in the universe")))
    }

    /// Lexicographic iteration over `(individual, score)`.
    pub fn iter(&self) -> impl Iterator<Item = (&Individual, &Rational)> {
        self.values.iter()
    }

    /// Compares `x` against `y`; `Greater` means `x` is better. Set
    /// `lower_is_better` for the inversion score.
    pub fn compare(
        &self,
        x: &Individual,
        y: &Individual,
        lower_is_better: bool,
    ) -> Result<Ordering> {
        let ord = self.get(x)?.cmp(self.get(y)?);
        Ok(if lower_is_better { ord.reverse() } else { ord })
    }
}

/// Sums `weight(k) * m_k(S)` over every class `k` and coalition `S ∋ x`.
fn class_weighted(r: &CoalitionalRanking, weight: impl Fn(usize) -> Rational) -> ScoreMap {
    let mut values = ScoreMap::zeros(r);
    for (k, class) in r.indexed_classes() {
        let w = weight(k);
        if w.is_zero() {
            continue;
        }
        for (coalition, n) in class.iter() {
            let add = &w * Rational::from_integer(BigInt::from(n));
            for x in coalition.members() {
                *values.get_mut(x).expect("member is in universe") += &add;
            }
        }
    }
    ScoreMap { values }
}

/// `below[k] = Σ_{k' < k} |m_{k'}|` and `above[k] = Σ_{k' > k} |m_{k'}|`,
/// indexed by `k - 1`.
fn coalitions_below_above(r: &CoalitionalRanking) -> (Vec<u64>, Vec<u64>) {
    let totals: Vec<u64> = r.classes().iter().map(|c| c.total()).collect();
    let all: u64 = totals.iter().sum();
    let mut below = Vec::with_capacity(totals.len());
    let mut above = Vec::with_capacity(totals.len());
    let mut acc = 0;
    for t in &totals {
        below.push(acc);
        acc += t;
        above.push(all - acc);
    }
    (below, above)
}

fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// First Borda type: a coalition in class `k` is worth `k - 1`, the number
/// of classes below it.
pub fn score_b1(r: &CoalitionalRanking) -> ScoreMap {
    class_weighted(r, |k| int(k as u64 - 1))
}

/// Second Borda type: a coalition is worth the number of coalitions (with
/// multiplicity) in strictly lower classes.
pub fn score_b2(r: &CoalitionalRanking) -> ScoreMap {
    let (below, _) = coalitions_below_above(r);
    class_weighted(r, |k| int(below[k - 1]))
}

/// Third Borda type: coalitions below minus coalitions above.
pub fn score_b3(r: &CoalitionalRanking) -> ScoreMap {
    let (below, above) = coalitions_below_above(r);
    class_weighted(r, |k| {
        int(BigInt::from(below[k - 1]) - BigInt::from(above[k - 1]))
    })
}

/// Inversion score: for each coalition holding `x`, the number of
/// coalitions without `x` in strictly higher classes. Lower is better.
pub fn inversion_score(r: &CoalitionalRanking) -> ScoreMap {
    let mut values = ScoreMap::zeros(r);
    for (x, score) in values.iter_mut() {
        let mut without_above: u64 = 0;
        let mut total = BigInt::zero();
        // Walk best-first so `without_above` covers classes k' > k.
        for (_, class) in r.indexed_classes().rev() {
            let with_x = class.count_containing(x);
            total += BigInt::from(with_x) * BigInt::from(without_above);
            without_above += class.total() - with_x;
        }
        *score = int(total);
    }
    ScoreMap { values }
}

/// A coalition in class `k` is worth `k`; equals `score_b1` plus the
/// number of coalitions held by the individual.
pub fn score_tilde_b1(r: &CoalitionalRanking) -> ScoreMap {
    class_weighted(r, |k| int(k as u64))
}

/// Evenly increasing class scores `α + (k - 1)β`, with `β > 0`.
pub fn score_alpha_beta(
    r: &CoalitionalRanking,
    alpha: &Rational,
    beta: &Rational,
) -> Result<ScoreMap> {
    if !beta.is_positive() {
        return Err(Error::domain(format!("beta must be positive, got {beta}")));
    }
    Ok(class_weighted(r, |k| alpha + beta * int(k as u64 - 1)))
}

/// Per-class appearance counts of one individual, best class first,
/// without the worst class: `(x_l, ..., x_2)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CountVector(pub Vec<u64>);

impl CountVector {
    /// Lexicographic comparison from the best class.
    pub fn compare(&self, other: &CountVector) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl std::fmt::Display for CountVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn nwl_vector(r: &CoalitionalRanking, x: &Individual) -> CountVector {
    CountVector(
        r.indexed_classes()
            .rev()
            .filter(|(k, _)| *k > 1)
            .map(|(_, class)| class.count_containing(x))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::id;

    const EXAMPLE: &str = "{A,B}*2 {B,C} > {A,B} {C} > {A} {B}*2 {B,C} {C}";
    const DISCUSSION: &str = "{1,3} {2,3} {2} > {1} {2}*2 {3} > {1,3} {1}*3 {3}";

    fn r(s: &str) -> CoalitionalRanking {
        s.parse().unwrap()
    }

    fn ints(m: &ScoreMap) -> Vec<(String, i64)> {
        m.iter()
            .map(|(x, v)| {
                assert!(v.is_integer());
                (x.to_string(), v.to_integer().try_into().unwrap())
            })
            .collect()
    }

    fn triple(m: &ScoreMap) -> Vec<i64> {
        ints(m).into_iter().map(|(_, v)| v).collect()
    }

    #[test]
    fn example_scores() {
        let e = r(EXAMPLE);
        assert_eq!(triple(&score_b1(&e)), vec![5, 7, 3]);
        assert_eq!(triple(&score_b2(&e)), vec![19, 26, 12]);
        assert_eq!(triple(&inversion_score(&e)), vec![3, 3, 8]);
        // Direct evaluation of the third-type summands.
        assert_eq!(triple(&score_b3(&e)), vec![11, 8, -1]);
    }

    #[test]
    fn single_class_scores_vanish() {
        let single = r("{a,b} {c}");
        for m in [score_b1(&single), score_b2(&single), score_b3(&single)] {
            assert_eq!(triple(&m), vec![0, 0, 0]);
        }
        assert_eq!(triple(&score_tilde_b1(&single)), vec![1, 1, 1]);
    }

    #[test]
    fn absent_individual_scores_zero() {
        let ranking = r("{a} > {b}").with_declared([id("z")]);
        assert_eq!(score_b1(&ranking).get(&id("z")).unwrap(), &Rational::zero());
        assert_eq!(
            inversion_score(&ranking).get(&id("z")).unwrap(),
            &Rational::zero()
        );
    }

    #[test]
    fn linear_b2_counts_one_below() {
        let lin = r("{x} > {y}");
        assert_eq!(triple(&score_b2(&lin)), vec![1, 0]);
        assert_eq!(triple(&inversion_score(&r("{y} > {x}"))), vec![1, 0]);
    }

    #[test]
    fn inversion_zero_when_everything_holds_x() {
        let all = r("{x,y} > {x} > {x,z}");
        assert_eq!(
            inversion_score(&all).get(&id("x")).unwrap(),
            &Rational::zero()
        );
    }

    #[test]
    fn discussion_b1_scores() {
        assert_eq!(triple(&score_b1(&r(DISCUSSION))), vec![3, 6, 5]);
    }

    #[test]
    fn discussion_alpha_beta_scores() {
        let d = r(DISCUSSION);
        let ab = |a: i64, b: i64| triple(&score_alpha_beta(&d, &int(a), &int(b)).unwrap());
        assert_eq!(ab(5, 4), vec![42, 44, 45]);
        assert_eq!(ab(3, 1), vec![21, 18, 20]);
        assert_eq!(ab(0, 1), triple(&score_b1(&d)));
    }

    #[test]
    fn alpha_beta_rejects_nonpositive_beta() {
        let d = r(DISCUSSION);
        assert!(score_alpha_beta(&d, &int(1), &int(0)).is_err());
        assert!(score_alpha_beta(&d, &int(1), &int(-2)).is_err());
    }

    #[test]
    fn tilde_b1_cases() {
        let r1 = r("{x,y} {z} > {x} {y}");
        assert_eq!(triple(&score_tilde_b1(&r1)), vec![3, 3, 2]);
        let r1p = r("{x,y} {z} > {x} {x,z} {y}");
        let s = score_tilde_b1(&r1p);
        assert_eq!(s.get(&id("x")).unwrap(), &int(4));
        assert_eq!(s.get(&id("y")).unwrap(), &int(3));
    }

    #[test]
    fn nwl_vectors() {
        let r4 = r("{x,y} > {x} {y} > {y} {x}");
        assert_eq!(nwl_vector(&r4, &id("x")), CountVector(vec![1, 1]));
        assert_eq!(nwl_vector(&r4, &id("y")), CountVector(vec![1, 1]));
        let r4p = r("{x,y} {x} > {y}*2 > {x}");
        let (vx, vy) = (nwl_vector(&r4p, &id("x")), nwl_vector(&r4p, &id("y")));
        assert_eq!(vx, CountVector(vec![2, 0]));
        assert_eq!(vy, CountVector(vec![1, 2]));
        assert_eq!(vx.compare(&vy), Ordering::Greater);
        assert!(nwl_vector(&r("{x} {y}"), &id("x")).0.is_empty());
    }
}
