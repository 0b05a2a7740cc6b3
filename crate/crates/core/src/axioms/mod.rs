//! Instance-level axiom checks, random instance generation, fuzzing with
//! witness minimization, and the fixed counterexample fixtures.
//!
//! An axiom is a universally quantified statement; a checker decides one
//! instance of it. Passing many generated instances is evidence, not proof.

mod checks;
pub mod fixtures;
mod fuzz;
pub mod generate;
mod minimize;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Coalition, CoalitionMultiset, CoalitionalRanking, Individual, Permutation};
use crate::solutions::SolutionId;

pub use checks::{
    check, check_can, check_cu, check_dcont, check_dcont_star, check_econ, check_ipp, check_mon,
    check_nt, DCONT_STAR_MAX_GAMMA,
};
pub use fuzz::{fuzz, FirstFailure, FuzzReport};
pub use generate::GenParams;
pub use minimize::minimize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    Nt,
    Econ,
    Ipp,
    Dcont,
    DcontStar,
    Cu,
    Can,
    Mon,
}

impl AxiomId {
    pub const ALL: [AxiomId; 8] = [
        AxiomId::Nt,
        AxiomId::Econ,
        AxiomId::Ipp,
        AxiomId::Dcont,
        AxiomId::DcontStar,
        AxiomId::Cu,
        AxiomId::Can,
        AxiomId::Mon,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AxiomId::Nt => "nt",
            AxiomId::Econ => "econ",
            AxiomId::Ipp => "ipp",
            AxiomId::Dcont => "dcont",
            AxiomId::DcontStar => "dcont-star",
            AxiomId::Cu => "cu",
            AxiomId::Can => "can",
            AxiomId::Mon => "mon",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase().replace('_', "-");
        AxiomId::ALL
            .into_iter()
            .find(|a| a.as_str() == lower)
            .ok_or_else(|| {
                Error::parse(format!(
                    "unknown axiom {s:?}; expected one of nt, econ, ipp, dcont, dcont-star, cu, can, mon"
                ))
            })
    }
}

/// One concrete instance of an axiom's quantifiers. Class indices are
/// 1-based and worst-first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom", rename_all = "kebab-case", deny_unknown_fields)]
pub enum AxiomInstance {
    Nt {
        ranking: CoalitionalRanking,
        sigma: Permutation,
        x: Individual,
        y: Individual,
    },
    Econ {
        first: CoalitionalRanking,
        second: CoalitionalRanking,
        x: Individual,
        y: Individual,
    },
    Ipp {
        ranking: CoalitionalRanking,
        s: Coalition,
        x: Individual,
        y: Individual,
    },
    Dcont {
        ranking: CoalitionalRanking,
        s: Coalition,
        k1: usize,
        x: Individual,
        y: Individual,
    },
    DcontStar {
        ranking: CoalitionalRanking,
        gamma: CoalitionMultiset,
        k1: usize,
        x: Individual,
        y: Individual,
    },
    Cu {
        ranking: CoalitionalRanking,
        x: Individual,
        y: Individual,
    },
    Can {
        ranking: CoalitionalRanking,
        s: Coalition,
        t: Coalition,
        k1: usize,
        k2: usize,
        x: Individual,
        y: Individual,
    },
    Mon {
        ranking: CoalitionalRanking,
        s: Coalition,
        k_hat: usize,
        x: Individual,
        y: Individual,
    },
}

impl AxiomInstance {
    pub fn axiom(&self) -> AxiomId {
        match self {
            AxiomInstance::Nt { .. } => AxiomId::Nt,
            AxiomInstance::Econ { .. } => AxiomId::Econ,
            AxiomInstance::Ipp { .. } => AxiomId::Ipp,
            AxiomInstance::Dcont { .. } => AxiomId::Dcont,
            AxiomInstance::DcontStar { .. } => AxiomId::DcontStar,
            AxiomInstance::Cu { .. } => AxiomId::Cu,
            AxiomInstance::Can { .. } => AxiomId::Can,
            AxiomInstance::Mon { .. } => AxiomId::Mon,
        }
    }

    pub fn pair(&self) -> (&Individual, &Individual) {
        match self {
            AxiomInstance::Nt { x, y, .. }
            | AxiomInstance::Econ { x, y, .. }
            | AxiomInstance::Ipp { x, y, .. }
            | AxiomInstance::Dcont { x, y, .. }
            | AxiomInstance::DcontStar { x, y, .. }
            | AxiomInstance::Cu { x, y, .. }
            | AxiomInstance::Can { x, y, .. }
            | AxiomInstance::Mon { x, y, .. } => (x, y),
        }
    }

    /// The rankings of the instance; two for ECON, one otherwise.
    pub fn rankings(&self) -> Vec<&CoalitionalRanking> {
        match self {
            AxiomInstance::Econ { first, second, .. } => vec![first, second],
            AxiomInstance::Nt { ranking, .. }
            | AxiomInstance::Ipp { ranking, .. }
            | AxiomInstance::Dcont { ranking, .. }
            | AxiomInstance::DcontStar { ranking, .. }
            | AxiomInstance::Cu { ranking, .. }
            | AxiomInstance::Can { ranking, .. }
            | AxiomInstance::Mon { ranking, .. } => vec![ranking],
        }
    }

    pub(crate) fn rankings_mut(&mut self) -> Vec<&mut CoalitionalRanking> {
        match self {
            AxiomInstance::Econ { first, second, .. } => vec![first, second],
            AxiomInstance::Nt { ranking, .. }
            | AxiomInstance::Ipp { ranking, .. }
            | AxiomInstance::Dcont { ranking, .. }
            | AxiomInstance::DcontStar { ranking, .. }
            | AxiomInstance::Cu { ranking, .. }
            | AxiomInstance::Can { ranking, .. }
            | AxiomInstance::Mon { ranking, .. } => vec![ranking],
        }
    }

    /// Coalitions added by the axiom on top of the ranking.
    pub(crate) fn added_coalitions(&self) -> Vec<&Coalition> {
        match self {
            AxiomInstance::Ipp { s, .. }
            | AxiomInstance::Dcont { s, .. }
            | AxiomInstance::Mon { s, .. } => vec![s],
            AxiomInstance::Can { s, t, .. } => vec![s, t],
            AxiomInstance::DcontStar { gamma, .. } => gamma.iter().map(|(c, _)| c).collect(),
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for AxiomInstance {
    /// One readable line per component, rankings in best-first notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = self.pair();
        writeln!(f, "axiom: {}", self.axiom())?;
        writeln!(f, "pair: {x} {y}")?;
        match self {
            AxiomInstance::Econ { first, second, .. } => {
                writeln!(f, "r1: {first}")?;
                writeln!(f, "r2: {second}")?;
            }
            other => writeln!(f, "r: {}", other.rankings()[0])?,
        }
        match self {
            AxiomInstance::Nt { sigma, .. } => {
                let moved: Vec<String> = sigma
                    .pairs()
                    .filter(|(a, b)| a != b)
                    .map(|(a, b)| format!("{a}->{b}"))
                    .collect();
                writeln!(
                    f,
                    "sigma: {}",
                    if moved.is_empty() {
                        "id".into()
                    } else {
                        moved.join(" ")
                    }
                )
            }
            AxiomInstance::Ipp { s, .. } => writeln!(f, "S: {s}"),
            AxiomInstance::Dcont { s, k1, .. } => writeln!(f, "S: {s}\nk1: {k1}"),
            AxiomInstance::DcontStar { gamma, k1, .. } => writeln!(f, "gamma: {gamma}\nk1: {k1}"),
            AxiomInstance::Can { s, t, k1, k2, .. } => {
                writeln!(f, "S: {s}\nT: {t}\nk1: {k1}\nk2: {k2}")
            }
            AxiomInstance::Mon { s, k_hat, .. } => writeln!(f, "S: {s}\nk_hat: {k_hat}"),
            AxiomInstance::Econ { .. } | AxiomInstance::Cu { .. } => Ok(()),
        }
    }
}

/// A way to distribute `Γ` over classes `k₁` (lower) and `k₁ + 1` (upper).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub lower: CoalitionMultiset,
    pub upper: CoalitionMultiset,
}

/// A failing instance together with the solution it refutes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witness {
    pub format_version: u32,
    pub solution: SolutionId,
    pub instance: AxiomInstance,
}

impl Witness {
    pub fn new(solution: SolutionId, instance: AxiomInstance) -> Self {
        Witness {
            format_version: crate::document::FORMAT_VERSION,
            solution,
            instance,
        }
    }

    /// Re-runs the checker on the stored instance.
    pub fn replay(&self) -> Result<Verdict> {
        check(&self.solution, &self.instance)
    }

    /// Single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serializes")
    }

    pub fn from_json(text: &str) -> Result<Witness> {
        serde_json::from_str(text).map_err(Error::json)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Verdict {
    /// `split` is set only by DCONT* when its premise held.
    Pass {
        split: Option<Split>,
    },
    Fail {
        witness: Witness,
        reason: String,
    },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass { .. })
    }

    pub fn is_fail(&self) -> bool {
        !self.is_pass()
    }

    pub(crate) fn pass() -> Verdict {
        Verdict::Pass { split: None }
    }
}
