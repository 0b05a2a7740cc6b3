//! The fixed counterexample and score fixtures, CE-1 to CE-12.

use std::fmt;

use crate::model::{CoalitionalRanking, Individual, Permutation};
use crate::relation::PairwiseRelation;
use crate::scores::{self, Rational, ScoreMap};
use crate::solutions::{AlphaBeta, SolutionId, TieOrder};

use super::generate::{random_linear_symmetric, random_pair, random_universe, stream_rng};
use super::{check, AxiomInstance, Verdict};

pub const EXAMPLE_RANKING: &str = "{A,B}*2 {B,C} > {A,B} {C} > {A} {B}*2 {B,C} {C}";
pub const DISCUSSION_RANKING: &str = "{1,3} {2,3} {2} > {1} {2}*2 {3} > {1,3} {1}*3 {3}";

/// Seed and size of the CE-12 agreement sample.
pub const AGREEMENT_SEED: u64 = 12;
pub const AGREEMENT_SAMPLE: u64 = 500;

fn r(s: &str) -> CoalitionalRanking {
    s.parse().expect("fixture ranking parses")
}

fn i(s: &str) -> Individual {
    Individual::new(s).expect("fixture id")
}

/// An axiom instance that the named solution is expected to fail.
#[derive(Debug, Clone)]
pub struct AxiomFixture {
    pub id: &'static str,
    pub solution: SolutionId,
    pub instance: AxiomInstance,
    pub notes: Vec<String>,
}

/// CE-1 to CE-9.
pub fn axiom_fixtures() -> Vec<AxiomFixture> {
    let (x, y) = (i("x"), i("y"));
    let econ = |first: &str, second: &str| AxiomInstance::Econ {
        first: r(first),
        second: r(second),
        x: x.clone(),
        y: y.clone(),
    };
    let symmetric = r("{x} {y} > {x,y}");
    let swap = Permutation::swap(symmetric.universe(), &x, &y).expect("x, y in universe");
    let printed = econ("{x,y} > {x,y}", "{x,y} > {x}");
    let printed_verdict = match check(&SolutionId::B1ColonConst, &printed) {
        Ok(v) if v.is_pass() => "pass",
        Ok(_) => "fail",
        Err(_) => "error",
    };
    vec![
        AxiomFixture {
            id: "CE-1",
            solution: SolutionId::B2,
            instance: econ("{x} > {y} > {y} > {z}", "{z} > {z} > {z} > {z}*2"),
            notes: vec![],
        },
        AxiomFixture {
            id: "CE-2",
            solution: SolutionId::B3,
            instance: econ("{x} > {y}*3 > {z}*3", "{z} > {z} > {z}"),
            notes: vec![],
        },
        AxiomFixture {
            id: "CE-3",
            solution: SolutionId::Bi,
            instance: econ("{x} > {y}*2 > {x}", "{z}*2 > {z} > {z}"),
            notes: vec!["x I y at r1 and at r2, x P y at r1+r2".into()],
        },
        AxiomFixture {
            id: "CE-4",
            solution: SolutionId::B1ColonConst,
            instance: econ("{x,y} > {x,y}", "{x} > {x,y}"),
            notes: vec![
                "r2 is oriented {x} > {x,y}: x P y at r2, and {x,y} appears three times in r1+r2, a buddy pair".into(),
                format!(
                    "the opposite orientation r2 = {{x,y}} > {{x}} gives x I y at r2 and the check returns {printed_verdict}"
                ),
            ],
        },
        AxiomFixture {
            id: "CE-5",
            solution: SolutionId::TildeB1,
            instance: AxiomInstance::Ipp {
                ranking: r("{x,y} {z} > {x} {y}"),
                s: "{x,z}".parse().unwrap(),
                x: x.clone(),
                y: y.clone(),
            },
            notes: vec![],
        },
        AxiomFixture {
            id: "CE-6",
            solution: SolutionId::B1TieBreak(
                TieOrder::explicit(vec![x.clone(), y.clone()]).expect("distinct"),
            ),
            instance: AxiomInstance::Nt {
                ranking: symmetric,
                sigma: swap,
                x: x.clone(),
                y: y.clone(),
            },
            notes: vec!["r is unchanged by swapping x and y, yet the tie-break ranks x first".into()],
        },
        AxiomFixture {
            id: "CE-7",
            solution: SolutionId::Const,
            instance: AxiomInstance::Mon {
                ranking: r("{x,y} > {y}"),
                s: "{x}".parse().unwrap(),
                k_hat: 1,
                x: x.clone(),
                y: y.clone(),
            },
            notes: vec![],
        },
        AxiomFixture {
            id: "CE-8",
            solution: SolutionId::Const,
            instance: AxiomInstance::Cu {
                ranking: r("{x} > {y}"),
                x: x.clone(),
                y: y.clone(),
            },
            notes: vec![],
        },
        AxiomFixture {
            id: "CE-9",
            solution: SolutionId::Nwl,
            instance: AxiomInstance::Can {
                ranking: r("{x,y} > {y} > {x}"),
                s: "{x}".parse().unwrap(),
                t: "{y}".parse().unwrap(),
                k1: 3,
                k2: 2,
                x: x.clone(),
                y: y.clone(),
            },
            notes: vec![
                "upper side {x,y} {x} > {y}*2 > {x}, lower side {x,y} > {x} {y} > {x} {y}".into(),
            ],
        },
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureResult {
    pub id: String,
    pub title: String,
    /// Single tokens without spaces, so records stay one field each.
    pub expected: String,
    pub actual: String,
    pub detail: Option<String>,
    pub notes: Vec<String>,
}

impl FixtureResult {
    pub fn ok(&self) -> bool {
        self.expected == self.actual
    }

    pub fn status(&self) -> &'static str {
        if self.ok() {
            "green"
        } else {
            "red"
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub results: Vec<FixtureResult>,
}

impl SuiteReport {
    pub fn all_green(&self) -> bool {
        self.results.iter().all(FixtureResult::ok)
    }

    pub fn green_count(&self) -> usize {
        self.results.iter().filter(|r| r.ok()).count()
    }

    /// `fixture_id status expected actual`, one line per fixture.
    pub fn records(&self) -> String {
        self.results
            .iter()
            .map(|r| format!("{} {} {} {}\n", r.id, r.status(), r.expected, r.actual))
            .collect()
    }

    pub fn get(&self, id: &str) -> Option<&FixtureResult> {
        self.results.iter().find(|r| r.id == id)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            writeln!(f, "{} [{}] {}", r.id, r.status(), r.title)?;
            writeln!(f, "  expected: {}", r.expected)?;
            writeln!(f, "  actual:   {}", r.actual)?;
            if let Some(detail) = &r.detail {
                writeln!(f, "  detail:   {detail}")?;
            }
            for note in &r.notes {
                writeln!(f, "  note:     {note}")?;
            }
        }
        writeln!(f, "{}/{} green", self.green_count(), self.results.len())
    }
}

fn tiers_token(rel: &PairwiseRelation) -> String {
    rel.tiers().to_string().replace(' ', "")
}

fn ints_token(m: &ScoreMap) -> String {
    m.iter()
        .map(|(_, v)| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn run_axiom_fixture(f: &AxiomFixture) -> FixtureResult {
    let (actual, detail) = match check(&f.solution, &f.instance) {
        Ok(Verdict::Fail { reason, .. }) => ("fail".to_string(), Some(reason)),
        Ok(Verdict::Pass { .. }) => ("pass".to_string(), None),
        Err(e) => ("error".to_string(), Some(e.to_string())),
    };
    FixtureResult {
        id: f.id.into(),
        title: format!("{} fails {}", f.solution, f.instance.axiom()),
        expected: "fail".into(),
        actual,
        detail,
        notes: f.notes.clone(),
    }
}

fn example_fixture() -> FixtureResult {
    let e = r(EXAMPLE_RANKING);
    let expected = "b1=5,7,3;b2=19,26,12;bi=3,3,8;b3=11,8,-1;\
                    rank:b1=B>A>C;rank:b2=B>A>C;rank:b3=A>B>C;rank:bi=A=B>C";
    let mut parts = vec![
        format!("b1={}", ints_token(&scores::score_b1(&e))),
        format!("b2={}", ints_token(&scores::score_b2(&e))),
        format!("bi={}", ints_token(&scores::inversion_score(&e))),
        format!("b3={}", ints_token(&scores::score_b3(&e))),
    ];
    for id in [
        SolutionId::B1,
        SolutionId::B2,
        SolutionId::B3,
        SolutionId::Bi,
    ] {
        let rank = id
            .evaluate(&e)
            .map(|rel| tiers_token(&rel))
            .unwrap_or_else(|e| e.to_string());
        parts.push(format!("rank:{id}={rank}"));
    }
    FixtureResult {
        id: "CE-10".into(),
        title: "example scores and orderings".into(),
        expected: expected.into(),
        actual: parts.join(";"),
        detail: None,
        notes: vec!["third-type raw scores are evaluated directly from the class weights".into()],
    }
}

fn discussion_fixture() -> FixtureResult {
    let d = r(DISCUSSION_RANKING);
    let ab = |a: i64, b: i64| {
        let (a, b) = (
            Rational::from_integer(a.into()),
            Rational::from_integer(b.into()),
        );
        SolutionId::AlphaBeta(AlphaBeta::new(a, b).expect("positive beta"))
    };
    let parts: Vec<String> = [SolutionId::B1, ab(5, 4), ab(3, 1)]
        .into_iter()
        .map(|id| {
            let rank = id
                .evaluate(&d)
                .map(|rel| tiers_token(&rel))
                .unwrap_or_else(|e| e.to_string());
            format!("{id}={rank}")
        })
        .collect();
    FixtureResult {
        id: "CE-11".into(),
        title: "evenly increasing class scores reorder individuals".into(),
        expected: "b1=2>3>1;ab:5,4=3>2>1;ab:3,1=1>3>2".into(),
        actual: parts.join(";"),
        detail: None,
        notes: vec![],
    }
}

/// Generated sample for CE-12: up to 5 individuals, up to 8 classes.
pub fn agreement_sample(
    seed: u64,
    count: u64,
) -> Vec<(CoalitionalRanking, Individual, Individual)> {
    (0..count)
        .map(|n| {
            let mut rng = stream_rng(seed, n);
            let universe = random_universe(&mut rng, 5);
            let (x, y) = random_pair(&mut rng, &universe);
            let l = rand::Rng::random_range(&mut rng, 1..=8);
            let ranking = random_linear_symmetric(&mut rng, &universe, &x, &y, l, false);
            (ranking, x, y)
        })
        .collect()
}

/// Whether the four Borda-type solutions give the same `{x,y}` verdict.
pub fn four_way_agreement(r: &CoalitionalRanking, x: &Individual, y: &Individual) -> bool {
    let verdicts: Vec<_> = [
        SolutionId::B1,
        SolutionId::B2,
        SolutionId::B3,
        SolutionId::Bi,
    ]
    .iter()
    .map(|id| id.compare(r, x, y).ok())
    .collect();
    verdicts[0].is_some() && verdicts.iter().all(|v| *v == verdicts[0])
}

fn agreement_fixture() -> FixtureResult {
    let sample = agreement_sample(AGREEMENT_SEED, AGREEMENT_SAMPLE);
    let agree = sample
        .iter()
        .filter(|(r, x, y)| four_way_agreement(r, x, y))
        .count();
    FixtureResult {
        id: "CE-12".into(),
        title: "four Borda-type solutions agree on linear symmetric pairs".into(),
        expected: format!("agree={AGREEMENT_SAMPLE}/{AGREEMENT_SAMPLE}"),
        actual: format!("agree={agree}/{AGREEMENT_SAMPLE}"),
        detail: Some(format!("seed {AGREEMENT_SEED}, up to 8 classes")),
        notes: vec![],
    }
}

/// Runs CE-1 to CE-12 in order.
pub fn run_fixture_suite() -> SuiteReport {
    let mut results: Vec<FixtureResult> = axiom_fixtures().iter().map(run_axiom_fixture).collect();
    results.push(example_fixture());
    results.push(discussion_fixture());
    results.push(agreement_fixture());
    SuiteReport { results }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_is_green() {
        let report = run_fixture_suite();
        let ids: Vec<&str> = report.results.iter().map(|r| r.id.as_str()).collect();
        let expected: Vec<String> = (1..=12).map(|n| format!("CE-{n}")).collect();
        assert_eq!(ids, expected);
        for r in &report.results {
            assert!(r.ok(), "{} expected {} got {}", r.id, r.expected, r.actual);
        }
        assert!(report.to_string().ends_with("12/12 green\n"));
    }

    #[test]
    fn records_have_four_fields() {
        for line in run_fixture_suite().records().lines() {
            assert_eq!(line.split(' ').count(), 4, "{line}");
        }
    }

    #[test]
    fn ce4_documents_both_orientations() {
        let report = run_fixture_suite();
        let ce4 = report.get("CE-4").unwrap();
        assert!(ce4
            .notes
            .iter()
            .any(|n| n.contains("{x,y} > {x}") && n.ends_with("pass")));
    }

    #[test]
    fn ce9_sides_match_the_note() {
        let f = &axiom_fixtures()[8];
        if let AxiomInstance::Can {
            ranking,
            s,
            t,
            k1,
            k2,
            ..
        } = &f.instance
        {
            let upper = ranking
                .with_coalition(s, *k1)
                .unwrap()
                .with_coalition(t, *k2)
                .unwrap();
            let lower = ranking
                .with_coalition(s, k1 - 1)
                .unwrap()
                .with_coalition(t, k2 - 1)
                .unwrap();
            assert_eq!(upper, r("{x,y} {x} > {y}*2 > {x}"));
            assert_eq!(lower, r("{x,y} > {x} {y} > {x} {y}"));
        } else {
            panic!("CE-9 is a CAN instance");
        }
    }
}
