//! Seeded random instances.
//!
//! Instance `i` of a run is drawn from its own ChaCha8 stream
//! (`seed_from_u64(seed)` then `set_stream(i)`), so the sequence does not
//! depend on how iterations are scheduled.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{Coalition, CoalitionMultiset, CoalitionalRanking, Individual, Permutation};

use super::checks::DCONT_STAR_MAX_GAMMA;
use super::{AxiomId, AxiomInstance};

/// Names used for generated universes, in order.
pub const NAME_POOL: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

/// Bounds for fuzzed instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenParams {
    pub seed: u64,
    /// At most 5; at least 2.
    pub max_individuals: usize,
    /// At most 5; at least 2 so every axiom can be instantiated.
    pub max_classes: usize,
    /// Distinct coalitions per class, at most 3.
    pub max_class_size: usize,
    /// At most 2.
    pub max_multiplicity: u64,
    pub allow_empty_coalition: bool,
}

impl GenParams {
    pub fn with_seed(seed: u64) -> Self {
        GenParams {
            seed,
            ..GenParams::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let checks = [
            ("max_individuals", self.max_individuals as u64, 2, 5),
            ("max_classes", self.max_classes as u64, 2, 5),
            ("max_class_size", self.max_class_size as u64, 1, 3),
            ("max_multiplicity", self.max_multiplicity, 1, 2),
        ];
        for (name, value, lo, hi) in checks {
            if !(lo..=hi).contains(&value) {
                return Err(Error::domain(format!(
                    "{name} = {value} must lie in {lo}..={hi}"
                )));
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> Shape {
        Shape {
            max_individuals: self.max_individuals,
            max_classes: self.max_classes,
            max_class_size: self.max_class_size,
            max_multiplicity: self.max_multiplicity,
            allow_empty_coalition: self.allow_empty_coalition,
        }
    }

    /// The RNG for iteration `i`.
    pub fn rng(&self, i: u64) -> ChaCha8Rng {
        stream_rng(self.seed, i)
    }
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            seed: 0,
            max_individuals: 5,
            max_classes: 5,
            max_class_size: 3,
            max_multiplicity: 2,
            allow_empty_coalition: false,
        }
    }
}

pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Unchecked bounds for the generator helpers. `max_individuals` may be
/// up to the size of `NAME_POOL`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape {
    pub max_individuals: usize,
    pub max_classes: usize,
    pub max_class_size: usize,
    pub max_multiplicity: u64,
    pub allow_empty_coalition: bool,
}

/// A universe of 2..=`max` pool names.
pub fn random_universe<R: Rng>(rng: &mut R, max: usize) -> Vec<Individual> {
    let max = max.clamp(2, NAME_POOL.len());
    let n = rng.random_range(2..=max);
    NAME_POOL[..n]
        .iter()
        .map(|s| Individual::new(*s).unwrap())
        .collect()
}

/// Two distinct members of `universe`.
pub fn random_pair<R: Rng>(rng: &mut R, universe: &[Individual]) -> (Individual, Individual) {
    let i = rng.random_range(0..universe.len());
    let mut j = rng.random_range(0..universe.len() - 1);
    if j >= i {
        j += 1;
    }
    (universe[i].clone(), universe[j].clone())
}

/// Each member joins with probability 1/2.
pub fn random_coalition<R: Rng>(
    rng: &mut R,
    universe: &[Individual],
    allow_empty: bool,
) -> Coalition {
    loop {
        let c = Coalition::new(universe.iter().filter(|_| rng.random_bool(0.5)).cloned());
        if allow_empty || !c.is_empty() {
            return c;
        }
    }
}

/// A coalition containing `x` and not `y`; others join with probability 1/2.
pub fn random_separating<R: Rng>(
    rng: &mut R,
    universe: &[Individual],
    x: &Individual,
    y: &Individual,
) -> Coalition {
    Coalition::new(
        universe
            .iter()
            .filter(|z| *z == x || (*z != y && rng.random_bool(0.5)))
            .cloned(),
    )
}

/// A nonempty multiset of up to `max_distinct` distinct coalitions, each
/// with multiplicity up to `max_multiplicity`.
pub fn random_multiset<R: Rng>(
    rng: &mut R,
    universe: &[Individual],
    shape: &Shape,
) -> CoalitionMultiset {
    let distinct = rng.random_range(1..=shape.max_class_size.max(1));
    let mut m = CoalitionMultiset::new();
    for _ in 0..distinct {
        let c = random_coalition(rng, universe, shape.allow_empty_coalition);
        let n = rng.random_range(1..=shape.max_multiplicity.max(1));
        if m.multiplicity(&c) == 0 {
            m.insert(c, n).expect("small multiplicity");
        }
    }
    m
}

/// A ranking with `l` classes drawn over `universe` (declared in full).
pub fn random_ranking_with<R: Rng>(
    rng: &mut R,
    universe: &[Individual],
    l: usize,
    shape: &Shape,
) -> CoalitionalRanking {
    let classes = (0..l)
        .map(|_| random_multiset(rng, universe, shape))
        .collect();
    CoalitionalRanking::from_worst_first(classes, universe.iter().cloned())
        .expect("generated classes are nonempty")
}

fn class_count<R: Rng>(rng: &mut R, min: usize, shape: &Shape) -> usize {
    rng.random_range(min..=shape.max_classes.max(min))
}

/// A random ranking within `shape`, with its universe.
pub fn random_ranking<R: Rng>(rng: &mut R, shape: &Shape) -> CoalitionalRanking {
    let universe = random_universe(rng, shape.max_individuals);
    let l = class_count(rng, 1, shape);
    random_ranking_with(rng, &universe, l, shape)
}

/// A linear ranking with `x`, `y` symmetric: `y`'s membership pattern is a
/// shuffle of `x`'s, so both join the same number of coalitions.
pub fn random_linear_symmetric<R: Rng>(
    rng: &mut R,
    universe: &[Individual],
    x: &Individual,
    y: &Individual,
    l: usize,
    allow_empty: bool,
) -> CoalitionalRanking {
    loop {
        let with_x: Vec<bool> = (0..l).map(|_| rng.random_bool(0.5)).collect();
        let mut with_y = with_x.clone();
        with_y.shuffle(rng);
        let coalitions: Vec<Coalition> = (0..l)
            .map(|k| {
                Coalition::new(
                    universe
                        .iter()
                        .filter(|z| {
                            if *z == x {
                                with_x[k]
                            } else if *z == y {
                                with_y[k]
                            } else {
                                rng.random_bool(0.5)
                            }
                        })
                        .cloned(),
                )
            })
            .collect();
        if !allow_empty && coalitions.iter().any(Coalition::is_empty) {
            continue;
        }
        let classes = coalitions
            .into_iter()
            .map(CoalitionMultiset::single)
            .collect();
        return CoalitionalRanking::from_worst_first(classes, universe.iter().cloned())
            .expect("generated classes are nonempty");
    }
}

fn random_permutation<R: Rng>(rng: &mut R, universe: &[Individual]) -> Permutation {
    let mut image = universe.to_vec();
    image.shuffle(rng);
    Permutation::new(universe.iter().cloned().zip(image)).expect("shuffle is a bijection")
}

/// Draws one instance of `axiom` from `rng`.
pub fn random_instance<R: Rng>(rng: &mut R, axiom: AxiomId, shape: &Shape) -> AxiomInstance {
    let universe = random_universe(rng, shape.max_individuals);
    let (x, y) = random_pair(rng, &universe);
    let needs_two = matches!(
        axiom,
        AxiomId::Dcont | AxiomId::DcontStar | AxiomId::Can | AxiomId::Mon
    );
    let l = class_count(rng, if needs_two { 2 } else { 1 }, shape);
    match axiom {
        AxiomId::Nt => AxiomInstance::Nt {
            ranking: random_ranking_with(rng, &universe, l, shape),
            sigma: random_permutation(rng, &universe),
            x,
            y,
        },
        AxiomId::Econ => AxiomInstance::Econ {
            first: random_ranking_with(rng, &universe, l, shape),
            second: random_ranking_with(rng, &universe, l, shape),
            x,
            y,
        },
        AxiomId::Ipp => AxiomInstance::Ipp {
            ranking: random_ranking_with(rng, &universe, l, shape),
            s: random_separating(rng, &universe, &x, &y),
            x,
            y,
        },
        AxiomId::Dcont => AxiomInstance::Dcont {
            ranking: random_ranking_with(rng, &universe, l, shape),
            s: random_coalition(rng, &universe, shape.allow_empty_coalition),
            k1: rng.random_range(1..l),
            x,
            y,
        },
        AxiomId::DcontStar => {
            let ranking = random_ranking_with(rng, &universe, l, shape);
            let mut gamma = random_multiset(rng, &universe, shape);
            while gamma.total() > DCONT_STAR_MAX_GAMMA {
                let first = gamma.iter().next().map(|(c, _)| c.clone()).unwrap();
                gamma.remove_one(&first);
            }
            AxiomInstance::DcontStar {
                ranking,
                gamma,
                k1: rng.random_range(1..l),
                x,
                y,
            }
        }
        AxiomId::Cu => AxiomInstance::Cu {
            ranking: random_linear_symmetric(
                rng,
                &universe,
                &x,
                &y,
                l,
                shape.allow_empty_coalition,
            ),
            x,
            y,
        },
        AxiomId::Can => AxiomInstance::Can {
            ranking: random_ranking_with(rng, &universe, l, shape),
            s: random_separating(rng, &universe, &x, &y),
            t: random_separating(rng, &universe, &y, &x),
            k1: rng.random_range(2..=l),
            k2: rng.random_range(2..=l),
            x,
            y,
        },
        AxiomId::Mon => AxiomInstance::Mon {
            ranking: random_ranking_with(rng, &universe, l, shape),
            s: random_separating(rng, &universe, &x, &y),
            k_hat: rng.random_range(1..l),
            x,
            y,
        },
    }
}

/// Instance `i` of the run described by `params`.
pub fn instance(params: &GenParams, axiom: AxiomId, i: u64) -> AxiomInstance {
    random_instance(&mut params.rng(i), axiom, &params.shape())
}

/// Individuals mentioned anywhere in the instance besides the universe.
pub(crate) fn mentioned(instance: &AxiomInstance) -> BTreeSet<Individual> {
    let (x, y) = instance.pair();
    let mut out: BTreeSet<Individual> = [x.clone(), y.clone()].into();
    for r in instance.rankings() {
        for class in r.classes() {
            out.extend(class.individuals());
        }
    }
    for c in instance.added_coalitions() {
        out.extend(c.members().cloned());
    }
    out
}
