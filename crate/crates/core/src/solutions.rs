//! The catalog of social ranking solutions.
//!
//! Score-based solutions (`b1`, `b2`, `b3`, `bi`, `tilde-b1`, `ab:α,β`)
//! always produce total preorders. The hybrids are defined pair by pair
//! and carry no transitivity guarantee.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{CoalitionalRanking, Individual};
use crate::relation::PairwiseRelation;
use crate::scores::{self, CountVector, Rational, ScoreMap};

/// A strict total order ▷ on individuals used by the tie-breaking variants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TieOrder {
    /// Lexicographic order of ids; `a ▷ b` iff `a < b`.
    Lexicographic,
    /// Listed best-first.
    Explicit(Vec<Individual>),
}

impl TieOrder {
    pub fn explicit(order: Vec<Individual>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for x in &order {
            if !seen.insert(x) {
                return Err(Error::domain(format!("{x} listed twice in tie order")));
            }
        }
        Ok(TieOrder::Explicit(order))
    }

    fn check_covers(&self, r: &CoalitionalRanking) -> Result<()> {
        if let TieOrder::Explicit(order) = self {
            if let Some(missing) = r.universe().iter().find(|x| !order.contains(x)) {
                return Err(Error::domain(format!("tie order does not rank {missing}")));
            }
        }
        Ok(())
    }

    /// `Greater` iff `x ▷ y`.
    fn compare(&self, x: &Individual, y: &Individual) -> Ordering {
        match self {
            TieOrder::Lexicographic => y.cmp(x),
            TieOrder::Explicit(order) => {
                let pos = |z: &Individual| order.iter().position(|o| o == z);
                pos(y).cmp(&pos(x))
            }
        }
    }
}

impl fmt::Display for TieOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TieOrder::Lexicographic => Ok(()),
            TieOrder::Explicit(order) => {
                let ids: Vec<&str> = order.iter().map(Individual::as_str).collect();
                write!(f, ":{}", ids.join(","))
            }
        }
    }
}

/// `(α, β)` with `β > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaBeta {
    alpha: Rational,
    beta: Rational,
}

impl AlphaBeta {
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self> {
        if !beta.is_positive() {
            return Err(Error::domain(format!("beta must be positive, got {beta}")));
        }
        Ok(AlphaBeta { alpha, beta })
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }
}

/// Identifies one social ranking solution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum SolutionId {
    B1,
    B2,
    B3,
    Bi,
    TildeB1,
    AlphaBeta(AlphaBeta),
    Nwl,
    Const,
    /// B1 with indifferences broken by ▷.
    B1TieBreak(TieOrder),
    /// ▷-priority on two-class rankings, B1 otherwise.
    B1Colon(TieOrder),
    /// Indifference on buddy pairs, B1 otherwise.
    B1ColonConst,
    /// Non-worst lexcel on three-class rankings, B1 otherwise.
    B1ColonNwl,
}

impl SolutionId {
    /// One representative of every solution, with lexicographic tie orders
    /// and `(α, β) = (1, 1)`.
    pub fn catalog() -> Vec<SolutionId> {
        vec![
            SolutionId::B1,
            SolutionId::B2,
            SolutionId::B3,
            SolutionId::Bi,
            SolutionId::TildeB1,
            SolutionId::AlphaBeta(AlphaBeta::new(int(1), int(1)).unwrap()),
            SolutionId::Nwl,
            SolutionId::Const,
            SolutionId::B1TieBreak(TieOrder::Lexicographic),
            SolutionId::B1Colon(TieOrder::Lexicographic),
            SolutionId::B1ColonConst,
            SolutionId::B1ColonNwl,
        ]
    }

    /// Prepares the per-ranking data this solution needs.
    pub fn prepare<'a>(&'a self, r: &'a CoalitionalRanking) -> Result<Prepared<'a>> {
        let scores = match self {
            SolutionId::B1
            | SolutionId::B1TieBreak(_)
            | SolutionId::B1Colon(_)
            | SolutionId::B1ColonConst
            | SolutionId::B1ColonNwl => Some(scores::score_b1(r)),
            SolutionId::B2 => Some(scores::score_b2(r)),
            SolutionId::B3 => Some(scores::score_b3(r)),
            SolutionId::Bi => Some(scores::inversion_score(r)),
            SolutionId::TildeB1 => Some(scores::score_tilde_b1(r)),
            SolutionId::AlphaBeta(ab) => Some(scores::score_alpha_beta(r, &ab.alpha, &ab.beta)?),
            SolutionId::Nwl | SolutionId::Const => None,
        };
        if let SolutionId::B1TieBreak(order) | SolutionId::B1Colon(order) = self {
            order.check_covers(r)?;
        }
        let nwl = match self {
            SolutionId::Nwl => true,
            SolutionId::B1ColonNwl => r.class_count() == 3,
            _ => false,
        };
        let nwl = nwl.then(|| {
            r.universe()
                .iter()
                .map(|x| (x.clone(), scores::nwl_vector(r, x)))
                .collect()
        });
        Ok(Prepared {
            id: self,
            ranking: r,
            scores,
            nwl,
        })
    }

    /// The verdict on `{x, y}` seen from `x`.
    pub fn compare(
        &self,
        r: &CoalitionalRanking,
        x: &Individual,
        y: &Individual,
    ) -> Result<Ordering> {
        self.prepare(r)?.compare(x, y)
    }

    /// The full relation over the ranking's universe.
    pub fn evaluate(&self, r: &CoalitionalRanking) -> Result<PairwiseRelation> {
        let prepared = self.prepare(r)?;
        PairwiseRelation::from_fn(r.universe(), |x, y| prepared.compare(x, y))
    }

    /// The score function behind this solution, if it is score-based:
    /// the scores and whether lower is better.
    pub fn scores(&self, r: &CoalitionalRanking) -> Option<Result<(ScoreMap, bool)>> {
        match self {
            SolutionId::B1 => Some(Ok((scores::score_b1(r), false))),
            SolutionId::B2 => Some(Ok((scores::score_b2(r), false))),
            SolutionId::B3 => Some(Ok((scores::score_b3(r), false))),
            SolutionId::Bi => Some(Ok((scores::inversion_score(r), true))),
            SolutionId::TildeB1 => Some(Ok((scores::score_tilde_b1(r), false))),
            SolutionId::AlphaBeta(ab) => {
                Some(scores::score_alpha_beta(r, &ab.alpha, &ab.beta).map(|s| (s, false)))
            }
            _ => None,
        }
    }

    /// Whether the result is always a total preorder.
    pub fn is_score_based(&self) -> bool {
        matches!(
            self,
            SolutionId::B1
                | SolutionId::B2
                | SolutionId::B3
                | SolutionId::Bi
                | SolutionId::TildeB1
                | SolutionId::AlphaBeta(_)
        )
    }
}

/// A solution bound to one ranking, ready to answer pair queries.
pub struct Prepared<'a> {
    id: &'a SolutionId,
    ranking: &'a CoalitionalRanking,
    scores: Option<ScoreMap>,
    nwl: Option<BTreeMap<Individual, CountVector>>,
}

impl Prepared<'_> {
    fn score_cmp(&self, x: &Individual, y: &Individual) -> Result<Ordering> {
        let lower_is_better = matches!(self.id, SolutionId::Bi);
        self.scores
            .as_ref()
            .expect("score-based solution has scores")
            .compare(x, y, lower_is_better)
    }

    fn nwl_cmp(&self, x: &Individual, y: &Individual) -> Result<Ordering> {
        let vectors = self.nwl.as_ref().expect("nwl vectors prepared");
        let get = |z: &Individual| {
            vectors
                .get(z)
                .ok_or_else(|| Error::domain(format!("{z} is not in the universe")))
        };
        Ok(get(x)?.compare(get(y)?))
    }

    pub fn compare(&self, x: &Individual, y: &Individual) -> Result<Ordering> {
        for z in [x, y] {
            if !self.ranking.universe().contains(z) {
                return Err(Error::domain(format!("{z} is not in the universe")));
            }
        }
        if x == y {
            return Ok(Ordering::Equal);
        }
        let r = self.ranking;
        match self.id {
            SolutionId::Const => Ok(Ordering::Equal),
            SolutionId::Nwl => self.nwl_cmp(x, y),
            SolutionId::B1TieBreak(order) => match self.score_cmp(x, y)? {
                Ordering::Equal => Ok(order.compare(x, y)),
                strict => Ok(strict),
            },
            SolutionId::B1Colon(order) => {
                if r.class_count() != 2 {
                    return self.score_cmp(x, y);
                }
                // Orient the pair so that `hi ▷ lo`.
                let (hi, lo, flip) = if order.compare(x, y) == Ordering::Greater {
                    (x, y, false)
                } else {
                    (y, x, true)
                };
                let best = r.class(2).expect("two classes");
                let favoured = best.iter().any(|(s, _)| s.separates(hi, lo));
                let verdict = if favoured {
                    Ordering::Greater
                } else {
                    Ordering::Equal
                };
                Ok(if flip { verdict.reverse() } else { verdict })
            }
            SolutionId::B1ColonConst => {
                if buddy_count(r, x, y) > r.class_count() as u64 {
                    Ok(Ordering::Equal)
                } else {
                    self.score_cmp(x, y)
                }
            }
            SolutionId::B1ColonNwl => {
                if r.class_count() == 3 {
                    self.nwl_cmp(x, y)
                } else {
                    self.score_cmp(x, y)
                }
            }
            _ => self.score_cmp(x, y),
        }
    }
}

fn buddy_count(r: &CoalitionalRanking, x: &Individual, y: &Individual) -> u64 {
    r.classes()
        .iter()
        .flat_map(|c| c.iter())
        .filter(|(s, _)| s.contains(x) && s.contains(y))
        .map(|(_, n)| n)
        .sum()
}

/// `{x, y}` jointly belong to more coalitions than there are classes.
pub fn is_buddy_pair(r: &CoalitionalRanking, x: &Individual, y: &Individual) -> Result<bool> {
    if x == y {
        return Err(Error::domain("buddy pair needs two distinct individuals"));
    }
    Ok(buddy_count(r, x, y) > r.class_count() as u64)
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_order(list: Option<&str>) -> Result<TieOrder> {
    match list {
        None => Ok(TieOrder::Lexicographic),
        Some(list) => {
            let ids = list
                .split(',')
                .map(|s| Individual::new(s.trim()))
                .collect::<Result<Vec<_>>>()?;
            TieOrder::explicit(ids)
        }
    }
}

impl FromStr for SolutionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let no_arg = |id: SolutionId| match arg {
            None => Ok(id),
            Some(_) => Err(Error::parse(format!("solution {head:?} takes no argument"))),
        };
        match head {
            "b1" => no_arg(SolutionId::B1),
            "b2" => no_arg(SolutionId::B2),
            "b3" => no_arg(SolutionId::B3),
            "bi" => no_arg(SolutionId::Bi),
            "tilde-b1" => no_arg(SolutionId::TildeB1),
            "nwl" => no_arg(SolutionId::Nwl),
            "const" => no_arg(SolutionId::Const),
            "b1-colon-const" => no_arg(SolutionId::B1ColonConst),
            "b1-colon-nwl" => no_arg(SolutionId::B1ColonNwl),
            "b1-tb" => Ok(SolutionId::B1TieBreak(parse_order(arg)?)),
            "b1-colon" => Ok(SolutionId::B1Colon(parse_order(arg)?)),
            "ab" => {
                let arg =
                    arg.ok_or_else(|| Error::parse("ab needs parameters: ab:<alpha>,<beta>"))?;
                let (a, b) = arg
                    .split_once(',')
                    .ok_or_else(|| Error::parse("ab needs two parameters: ab:<alpha>,<beta>"))?;
                Ok(SolutionId::AlphaBeta(AlphaBeta::new(
                    parse_rational(a)?,
                    parse_rational(b)?,
                )?))
            }
            _ => Err(Error::parse(format!("unknown solution {s:?}"))),
        }
    }
}

impl TryFrom<String> for SolutionId {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        value.parse()
    }
}

impl From<SolutionId> for String {
    fn from(value: SolutionId) -> Self {
        value.to_string()
    }
}

impl fmt::Display for SolutionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolutionId::B1 => f.write_str("b1"),
            SolutionId::B2 => f.write_str("b2"),
            SolutionId::B3 => f.write_str("b3"),
            SolutionId::Bi => f.write_str("bi"),
            SolutionId::TildeB1 => f.write_str("tilde-b1"),
            SolutionId::AlphaBeta(ab) => write!(f, "ab:{},{}", ab.alpha, ab.beta),
            SolutionId::Nwl => f.write_str("nwl"),
            SolutionId::Const => f.write_str("const"),
            SolutionId::B1TieBreak(order) => write!(f, "b1-tb{order}"),
            SolutionId::B1Colon(order) => write!(f, "b1-colon{order}"),
            SolutionId::B1ColonConst => f.write_str("b1-colon-const"),
            SolutionId::B1ColonNwl => f.write_str("b1-colon-nwl"),
        }
    }
}
