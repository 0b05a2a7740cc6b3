//! Independent cross-checks for the score formulas.
//!
//! `swap_distance_oracle` searches the space of adjacent-coalition swaps
//! directly, without the inversion formula. The Banzhaf pipeline builds the
//! characteristic game from class weights and sums marginal contributions
//! over every subset of the universe; it never calls into `scores`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::model::{Coalition, CoalitionalRanking, Individual};
use crate::relation::PairwiseRelation;
use crate::scores::ScoreMap;

/// Largest linear ranking the swap search accepts.
pub const SWAP_ORACLE_MAX_CLASSES: usize = 12;
/// Default universe cap for the Banzhaf subset enumeration.
pub const BANZHAF_MAX_UNIVERSE: usize = 12;

/// Minimum number of adjacent swaps of the coalition sequence after which
/// every coalition containing `x` sits above every coalition without it.
pub fn swap_distance_oracle(r: &CoalitionalRanking, x: &Individual) -> Result<u64> {
    if !r.is_linear() {
        return Err(Error::domain("swap-distance oracle needs a linear ranking"));
    }
    let l = r.class_count();
    if l > SWAP_ORACLE_MAX_CLASSES {
        return Err(Error::resource(format!(
            "swap-distance oracle is capped at {SWAP_ORACLE_MAX_CLASSES} classes, got {l}"
        )));
    }
    // Best-first coalition sequence, each coalition replaced by a small id.
    let sequence: Vec<&Coalition> = r
        .classes()
        .iter()
        .rev()
        .map(|class| class.expanded().next().expect("linear class"))
        .collect();
    let distinct: Vec<&Coalition> = {
        let set: BTreeSet<&Coalition> = sequence.iter().copied().collect();
        set.into_iter().collect()
    };
    let holds_x: Vec<bool> = distinct.iter().map(|c| c.contains(x)).collect();
    let ids: Vec<u64> = sequence
        .iter()
        .map(|c| distinct.binary_search(c).unwrap() as u64)
        .collect();

    let at = |state: u64, i: usize| ((state >> (4 * i)) & 0xF) as usize;
    let supported = |state: u64| {
        let mut seen_without = false;
        for i in 0..l {
            if holds_x[at(state, i)] {
                if seen_without {
                    return false;
                }
            } else {
                seen_without = true;
            }
        }
        true
    };
    let start = ids
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, id)| acc | (id << (4 * i)));

    let mut visited = HashSet::from([start]);
    let mut frontier = vec![start];
    let mut depth = 0;
    loop {
        if frontier.iter().any(|&s| supported(s)) {
            return Ok(depth);
        }
        let mut next = Vec::new();
        for &state in &frontier {
            for i in 0..l.saturating_sub(1) {
                let (a, b) = (at(state, i) as u64, at(state, i + 1) as u64);
                if a == b {
                    continue;
                }
                let cleared = state & !(0xFF << (4 * i));
                let swapped = cleared | (b << (4 * i)) | (a << (4 * (i + 1)));
                if visited.insert(swapped) {
                    next.push(swapped);
                }
            }
        }
        // A sorted arrangement always exists, so the search cannot run dry.
        debug_assert!(!next.is_empty());
        frontier = next;
        depth += 1;
    }
}

/// The three characteristic games built from a ranking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BordaType {
    /// `v(S) = Σ_k (k - 1) m_k(S)`.
    First,
    /// `v(S) = Σ_k m_k(S) Σ_{k'<k} |m_{k'}|`.
    Second,
    /// `v(S) = Σ_k m_k(S) (Σ_{k'<k} |m_{k'}| - Σ_{k'>k} |m_{k'}|)`.
    Third,
}

impl TryFrom<u8> for BordaType {
    type Error = Error;

    fn try_from(t: u8) -> Result<Self> {
        match t {
            1 => Ok(BordaType::First),
            2 => Ok(BordaType::Second),
            3 => Ok(BordaType::Third),
            _ => Err(Error::domain(format!(
                "Borda type must be 1, 2 or 3, got {t}"
            ))),
        }
    }
}

impl BordaType {
    pub const ALL: [BordaType; 3] = [BordaType::First, BordaType::Second, BordaType::Third];

    pub fn index(self) -> u8 {
        match self {
            BordaType::First => 1,
            BordaType::Second => 2,
            BordaType::Third => 3,
        }
    }
}

/// Per-class weight of the characteristic game, indexed worst-first.
fn class_weights(r: &CoalitionalRanking, t: BordaType) -> Vec<BigInt> {
    let sizes: Vec<BigInt> = r
        .classes()
        .iter()
        .map(|c| BigInt::from(c.total()))
        .collect();
    (0..sizes.len())
        .map(|i| {
            let lower: BigInt = sizes[..i].iter().sum();
            let higher: BigInt = sizes[i + 1..].iter().sum();
            match t {
                BordaType::First => BigInt::from(i),
                BordaType::Second => lower,
                BordaType::Third => lower - higher,
            }
        })
        .collect()
}

/// `v^{Bt}(S)`; zero for coalitions absent from every class.
pub fn characteristic_value(r: &CoalitionalRanking, t: BordaType, s: &Coalition) -> BigInt {
    class_weights(r, t)
        .iter()
        .zip(r.classes())
        .map(|(w, class)| w * BigInt::from(class.multiplicity(s)))
        .sum()
}

/// The characteristic game tabulated over every subset of the universe,
/// indexed by bitmask over the lexicographically sorted universe.
struct Game {
    players: Vec<Individual>,
    values: Vec<BigInt>,
}

impl Game {
    fn build(r: &CoalitionalRanking, t: BordaType, cap: usize) -> Result<Game> {
        let players: Vec<Individual> = r.universe().iter().cloned().collect();
        if players.len() > cap {
            return Err(Error::resource(format!(
                "Banzhaf enumeration is capped at {cap} individuals, got {}",
                players.len()
            )));
        }
        let bit: BTreeMap<&Individual, usize> =
            players.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut values = vec![BigInt::zero(); 1 << players.len()];
        let weights = class_weights(r, t);
        for (w, class) in weights.iter().zip(r.classes()) {
            for (s, n) in class.iter() {
                let mask = s.members().fold(0usize, |m, x| m | (1 << bit[x]));
                values[mask] += w * BigInt::from(n);
            }
        }
        Ok(Game { players, values })
    }

    fn banzhaf(&self, player: usize) -> BigRational {
        let n = self.players.len();
        let bit = 1usize << player;
        let mut total = BigInt::zero();
        for mask in 0..self.values.len() {
            if mask & bit == 0 {
                total += &self.values[mask | bit] - &self.values[mask];
            }
        }
        BigRational::new(total, BigInt::one() << (n - 1))
    }
}

/// Banzhaf value of `x` in the game `v^{Bt}`.
pub fn banzhaf(r: &CoalitionalRanking, t: BordaType, x: &Individual) -> Result<BigRational> {
    let game = Game::build(r, t, BANZHAF_MAX_UNIVERSE)?;
    let player = game
        .players
        .binary_search(x)
        .map_err(|_| Error::domain(format!("{x} is not in the universe")))?;
    Ok(game.banzhaf(player))
}

/// Banzhaf values of every individual, with an explicit universe cap.
pub fn banzhaf_values(
    r: &CoalitionalRanking,
    t: BordaType,
    cap: usize,
    exec: Execution,
) -> Result<ScoreMap> {
    let game = Game::build(r, t, cap)?;
    let indices: Vec<usize> = (0..game.players.len()).collect();
    let values = exec.map_collect(&indices, |&i| game.banzhaf(i));
    Ok(ScoreMap::from_values(
        game.players.iter().cloned().zip(values).collect(),
    ))
}

/// `x R y` iff `β_x ≥ β_y`.
pub fn rank_by_banzhaf(r: &CoalitionalRanking, t: BordaType) -> Result<PairwiseRelation> {
    let values = banzhaf_values(r, t, BANZHAF_MAX_UNIVERSE, Execution::default())?;
    PairwiseRelation::from_fn(r.universe(), |x, y| values.compare(x, y, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::id;
    use crate::scores;
    use crate::solutions::SolutionId;

    const EXAMPLE: &str = "{A,B}*2 {B,C} > {A,B} {C} > {A} {B}*2 {B,C} {C}";

    fn r(s: &str) -> CoalitionalRanking {
        s.parse().unwrap()
    }

    #[test]
    fn swap_oracle_basics() {
        assert_eq!(swap_distance_oracle(&r("{x} > {y}"), &id("x")).unwrap(), 0);
        assert_eq!(swap_distance_oracle(&r("{y} > {x}"), &id("x")).unwrap(), 1);
        assert_eq!(swap_distance_oracle(&r("{y} > {x}"), &id("y")).unwrap(), 0);
        assert_eq!(
            swap_distance_oracle(&r("{y} > {z} > {x} > {x,y}"), &id("x")).unwrap(),
            4
        );
    }

    #[test]
    fn swap_oracle_rejects_nonlinear_and_oversized() {
        assert!(matches!(
            swap_distance_oracle(&r("{x} {y}"), &id("x")),
            Err(Error::Domain(_))
        ));
        let long = vec!["{a}"; 13].join(" > ");
        assert!(matches!(
            swap_distance_oracle(&r(&long), &id("a")),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn characteristic_values_on_example() {
        let e = r(EXAMPLE);
        let ab: Coalition = "{A,B}".parse().unwrap();
        assert_eq!(
            characteristic_value(&e, BordaType::First, &ab),
            BigInt::from(5)
        );
        let none: Coalition = "{A,C}".parse().unwrap();
        assert_eq!(
            characteristic_value(&e, BordaType::First, &none),
            BigInt::zero()
        );
    }

    #[test]
    fn decomposition_into_coalition_values() {
        let e = r(EXAMPLE);
        let b1 = scores::score_b1(&e);
        let mut coalitions: BTreeSet<Coalition> = BTreeSet::new();
        for class in e.classes() {
            coalitions.extend(class.iter().map(|(c, _)| c.clone()));
        }
        let a = id("A");
        let summed: BigInt = coalitions
            .iter()
            .filter(|c| c.contains(&a))
            .map(|c| characteristic_value(&e, BordaType::First, c))
            .sum();
        assert_eq!(BigRational::from_integer(summed), *b1.get(&a).unwrap());
    }

    #[test]
    fn banzhaf_matches_b_t_on_example() {
        let e = r(EXAMPLE);
        for (t, id) in [
            (1, SolutionId::B1),
            (2, SolutionId::B2),
            (3, SolutionId::B3),
        ] {
            let t = BordaType::try_from(t).unwrap();
            assert_eq!(rank_by_banzhaf(&e, t).unwrap(), id.evaluate(&e).unwrap());
        }
        let rel = rank_by_banzhaf(&e, BordaType::First).unwrap();
        assert_eq!(rel.tiers().to_string(), "B > A > C");
        let b = banzhaf(&e, BordaType::First, &id("A")).unwrap()
            - banzhaf(&e, BordaType::First, &id("B")).unwrap();
        assert_eq!(b, BigRational::new(BigInt::from(-2), BigInt::from(2)));
    }

    #[test]
    fn banzhaf_difference_for_idle_individual() {
        let ranking = r("{a} > {b}").with_declared([id("z")]);
        let diff = banzhaf(&ranking, BordaType::Second, &id("z")).unwrap()
            - banzhaf(&ranking, BordaType::Second, &id("a")).unwrap();
        assert_eq!(diff, BigRational::new(BigInt::from(-1), BigInt::from(2)));
        let solo = r("{a}");
        assert_eq!(
            rank_by_banzhaf(&solo, BordaType::First)
                .unwrap()
                .tiers()
                .to_string(),
            "a"
        );
    }

    #[test]
    fn banzhaf_cap() {
        let wide = CoalitionalRanking::from_worst_first(
            vec!["{a}".parse().unwrap()],
            (0..13).map(|i| id(&format!("p{i}"))),
        )
        .unwrap();
        assert!(matches!(
            banzhaf(&wide, BordaType::First, &id("a")),
            Err(Error::Resource(_))
        ));
    }
}
