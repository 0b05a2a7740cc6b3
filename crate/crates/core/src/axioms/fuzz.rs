use std::fmt;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::solutions::SolutionId;

use super::generate::instance;
use super::{check, minimize, AxiomId, GenParams, Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstFailure {
    /// Smallest failing iteration index.
    pub iteration: u64,
    pub reason: String,
    pub original: Witness,
    pub minimized: Witness,
    /// Reason reported by the checker on the minimized instance.
    pub minimized_reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzReport {
    pub solution: SolutionId,
    pub axiom: AxiomId,
    pub seed: u64,
    pub iterations: u64,
    pub passed: u64,
    pub failed: u64,
    pub first_failure: Option<FirstFailure>,
}

#[derive(Default)]
struct Tally {
    passed: u64,
    failed: u64,
    first: Option<(u64, (Witness, String))>,
    error: Option<(u64, Error)>,
}

fn earliest<T>(a: Option<(u64, T)>, b: Option<(u64, T)>) -> Option<(u64, T)> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
        (a, b) => a.or(b),
    }
}

impl Tally {
    fn merge(self, other: Tally) -> Tally {
        Tally {
            passed: self.passed + other.passed,
            failed: self.failed + other.failed,
            first: earliest(self.first, other.first),
            error: earliest(self.error, other.error),
        }
    }
}

/// Checks `iterations` generated instances of `axiom` against `solution`.
/// The counts, the first failure and its minimization depend only on the
/// arguments, never on `exec`.
pub fn fuzz(
    solution: &SolutionId,
    axiom: AxiomId,
    params: &GenParams,
    iterations: u64,
    exec: Execution,
) -> Result<FuzzReport> {
    params.validate()?;
    if iterations == 0 {
        return Err(Error::domain("iterations must be at least 1"));
    }
    let tally = exec.map_reduce(
        0..iterations,
        Tally::default,
        |i| match check(solution, &instance(params, axiom, i)) {
            Ok(Verdict::Pass { .. }) => Tally {
                passed: 1,
                ..Tally::default()
            },
            Ok(Verdict::Fail { witness, reason }) => Tally {
                failed: 1,
                first: Some((i, (witness, reason))),
                ..Tally::default()
            },
            Err(e) => Tally {
                error: Some((i, e)),
                ..Tally::default()
            },
        },
        Tally::merge,
    );
    if let Some((i, e)) = tally.error {
        return Err(Error::domain(format!("iteration {i}: {e}")));
    }
    let first_failure = tally.first.map(|(iteration, (original, reason))| {
        let minimized = minimize(&original);
        let minimized_reason = match minimized.replay() {
            Ok(Verdict::Fail { reason, .. }) => reason,
            _ => unreachable!("minimized witnesses keep failing"),
        };
        FirstFailure {
            iteration,
            reason,
            original,
            minimized,
            minimized_reason,
        }
    });
    Ok(FuzzReport {
        solution: solution.clone(),
        axiom,
        seed: params.seed,
        iterations,
        passed: tally.passed,
        failed: tally.failed,
        first_failure,
    })
}

impl fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "fuzz {} {} seed={} iterations={}",
            self.solution, self.axiom, self.seed, self.iterations
        )?;
        writeln!(f, "passed: {}", self.passed)?;
        writeln!(f, "failed: {}", self.failed)?;
        if let Some(first) = &self.first_failure {
            writeln!(f, "first failure: iteration {}", first.iteration)?;
            writeln!(f, "reason: {}", first.reason)?;
            writeln!(f, "minimized witness:")?;
            for line in first.minimized.instance.to_string().lines() {
                writeln!(f, "  {line}")?;
            }
            writeln!(f, "  reason: {}", first.minimized_reason)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b1_econ_is_clean_and_b2_econ_is_not() {
        let p = GenParams::with_seed(7);
        let b1 = fuzz(
            &SolutionId::B1,
            AxiomId::Econ,
            &p,
            500,
            Execution::Sequential,
        )
        .unwrap();
        assert_eq!((b1.passed, b1.failed), (500, 0));
        let b2 = fuzz(
            &SolutionId::B2,
            AxiomId::Econ,
            &p,
            2000,
            Execution::Sequential,
        )
        .unwrap();
        assert!(b2.failed > 0);
        let first = b2.first_failure.unwrap();
        assert!(first.minimized.replay().unwrap().is_fail());
        assert!(first.original.replay().unwrap().is_fail());
    }

    #[test]
    fn execution_mode_does_not_change_the_report() {
        let p = GenParams::with_seed(11);
        let seq = fuzz(
            &SolutionId::Const,
            AxiomId::Mon,
            &p,
            300,
            Execution::Sequential,
        )
        .unwrap();
        let par = fuzz(
            &SolutionId::Const,
            AxiomId::Mon,
            &p,
            300,
            Execution::Parallel,
        )
        .unwrap();
        assert_eq!(seq, par);
        assert_eq!(seq.to_string(), par.to_string());
        assert_eq!(seq.first_failure.unwrap().iteration, 0);
    }

    #[test]
    fn rejects_bad_arguments() {
        let p = GenParams::with_seed(1);
        assert!(fuzz(&SolutionId::B1, AxiomId::Nt, &p, 0, Execution::Sequential).is_err());
        let wide = GenParams {
            max_individuals: 9,
            ..p
        };
        assert!(fuzz(
            &SolutionId::B1,
            AxiomId::Nt,
            &wide,
            1,
            Execution::Sequential
        )
        .is_err());
    }
}
