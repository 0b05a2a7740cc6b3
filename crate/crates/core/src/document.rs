//! The JSON ranking file format, and serde support for model types.
//!
//! Files list classes best-first; `CoalitionalRanking` stores them
//! worst-first. `RankingDocument::into_ranking` and `from_ranking` are the
//! only places that flip the order.

use std::collections::BTreeSet;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::model::{Coalition, CoalitionMultiset, CoalitionalRanking, Individual, Permutation};

pub const FORMAT_VERSION: u32 = 1;

fn one() -> u64 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalitionEntry {
    pub members: Vec<String>,
    #[serde(default = "one")]
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankingDocument {
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub individuals: Option<Vec<String>>,
    pub classes_best_to_worst: Vec<Vec<CoalitionEntry>>,
}

fn entries_to_multiset(entries: &[CoalitionEntry]) -> Result<CoalitionMultiset> {
    let mut m = CoalitionMultiset::new();
    for entry in entries {
        if entry.multiplicity == 0 {
            return Err(Error::domain("multiplicity must be positive"));
        }
        m.insert(
            Coalition::parse_members(&entry.members)?,
            entry.multiplicity,
        )?;
    }
    Ok(m)
}

fn multiset_to_entries(m: &CoalitionMultiset) -> Vec<CoalitionEntry> {
    m.iter()
        .map(|(c, n)| CoalitionEntry {
            members: c.members().map(|x| x.to_string()).collect(),
            multiplicity: n,
        })
        .collect()
}

impl RankingDocument {
    /// Parses a document; syntax errors carry line and column.
    pub fn parse(text: &str) -> Result<RankingDocument> {
        serde_json::from_str(text).map_err(Error::json)
    }

    pub fn into_ranking(self) -> Result<CoalitionalRanking> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::domain(format!(
                "unsupported format_version {}, expected {FORMAT_VERSION}",
                self.format_version
            )));
        }
        if self.classes_best_to_worst.is_empty() {
            return Err(Error::domain(
                "classes_best_to_worst must hold at least one class",
            ));
        }
        let classes = self
            .classes_best_to_worst
            .iter()
            .enumerate()
            .map(|(i, class)| {
                if class.is_empty() {
                    return Err(Error::domain(format!(
                        "class {} (best-first) is empty",
                        i + 1
                    )));
                }
                entries_to_multiset(class)
            })
            .collect::<Result<Vec<_>>>()?;
        let declared = match &self.individuals {
            None => None,
            Some(ids) => {
                let mut set = BTreeSet::new();
                for id in ids {
                    if !set.insert(Individual::new(id.as_str())?) {
                        return Err(Error::domain(format!("individual {id} listed twice")));
                    }
                }
                Some(set)
            }
        };
        let ranking =
            CoalitionalRanking::from_best_first(classes, declared.iter().flatten().cloned())?;
        if let Some(declared) = declared {
            if let Some(stray) = ranking.universe().difference(&declared).next() {
                return Err(Error::domain(format!(
                    "{stray} appears in a coalition but not in individuals"
                )));
            }
        }
        Ok(ranking)
    }

    /// Always lists the universe explicitly so idle individuals survive.
    pub fn from_ranking(r: &CoalitionalRanking) -> RankingDocument {
        RankingDocument {
            format_version: FORMAT_VERSION,
            individuals: Some(r.universe().iter().map(|x| x.to_string()).collect()),
            classes_best_to_worst: r.classes().iter().rev().map(multiset_to_entries).collect(),
        }
    }
}

/// Reads a ranking from JSON text.
pub fn parse_ranking(text: &str) -> Result<CoalitionalRanking> {
    RankingDocument::parse(text)?.into_ranking()
}

/// Pretty JSON of a ranking, with a trailing newline.
pub fn ranking_to_json(r: &CoalitionalRanking) -> String {
    let mut out = serde_json::to_string_pretty(&RankingDocument::from_ranking(r))
        .expect("document serializes");
    out.push('\n');
    out
}

impl Serialize for CoalitionalRanking {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RankingDocument::from_ranking(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for CoalitionalRanking {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        RankingDocument::deserialize(d)?
            .into_ranking()
            .map_err(D::Error::custom)
    }
}

impl Serialize for Coalition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.members())
    }
}

impl<'de> Deserialize<'de> for Coalition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<String>::deserialize(d)?;
        Coalition::parse_members(&members).map_err(D::Error::custom)
    }
}

impl Serialize for CoalitionMultiset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        multiset_to_entries(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for CoalitionMultiset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<CoalitionEntry>::deserialize(d)?;
        entries_to_multiset(&entries).map_err(D::Error::custom)
    }
}

impl Serialize for Permutation {
    /// A list of `[x, σ(x)]` pairs in lexicographic order of `x`.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.pairs())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<(Individual, Individual)>::deserialize(d)?;
        Permutation::new(pairs).map_err(D::Error::custom)
    }
}
