use std::fmt::{self, Write as _};
use std::fs;
use std::path::Path;

use coalrank::axioms::fixtures::run_fixture_suite;
use coalrank::axioms::{fuzz as run_fuzz, AxiomId, GenParams, Verdict, Witness};
use coalrank::document::parse_ranking;
use coalrank::oracles::{banzhaf_values, swap_distance_oracle, BANZHAF_MAX_UNIVERSE};
use coalrank::relation::PairwiseRelation;
use coalrank::{BordaType, CoalitionalRanking, Error, Execution, Individual, SolutionId, Tiers};

pub const UNIVERSE_CAP_VAR: &str = "COALRANK_MAX_UNIVERSE";

/// Text to print and the process exit code.
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Resource(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Resource(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Resource(_) => CliError::Resource(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<CoalitionalRanking, CliError> {
    parse_ranking(&read(path)?).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn solution(text: &str) -> Result<SolutionId, CliError> {
    Ok(text.parse()?)
}

fn individual(r: &CoalitionalRanking, name: &str) -> Result<Individual, CliError> {
    let x: Individual = name.parse()?;
    if !r.universe().contains(&x) {
        return Err(CliError::Usage(format!("{x} is not in the universe")));
    }
    Ok(x)
}

pub fn scores(file: &Path, id: &str) -> Result<Outcome, CliError> {
    let r = load(file)?;
    let id = solution(id)?;
    let Some(scores) = id.scores(&r) else {
        return Err(CliError::Usage(format!(
            "{id} is not score-based; use `rank` or `compare`"
        )));
    };
    let (scores, _) = scores?;
    let mut out = String::new();
    for (x, v) in scores.iter() {
        writeln!(out, "{x} {v}").unwrap();
    }
    Ok(Outcome::ok(out))
}

fn render(rel: &PairwiseRelation) -> String {
    match rel.tiers() {
        Tiers::Ordered(_) => format!("{}\n", rel.tiers()),
        intransitive @ Tiers::Intransitive(_) => format!("{}{intransitive}\n", rel.matrix()),
    }
}

pub fn rank(file: &Path, id: &str) -> Result<Outcome, CliError> {
    let r = load(file)?;
    let rel = solution(id)?.evaluate(&r)?;
    Ok(Outcome::ok(render(&rel)))
}

fn symbol(ord: std::cmp::Ordering) -> &'static str {
    match ord {
        std::cmp::Ordering::Greater => ">",
        std::cmp::Ordering::Equal => "=",
        std::cmp::Ordering::Less => "<",
    }
}

pub fn compare(file: &Path, x: &str, y: &str, id: Option<&str>) -> Result<Outcome, CliError> {
    let r = load(file)?;
    let (x, y) = (individual(&r, x)?, individual(&r, y)?);
    let ids = match id {
        Some(id) => vec![solution(id)?],
        None => SolutionId::catalog(),
    };
    let mut out = String::new();
    for id in ids {
        let ord = id.compare(&r, &x, &y)?;
        writeln!(out, "{id}: {x} {} {y}", symbol(ord)).unwrap();
    }
    Ok(Outcome::ok(out))
}

fn universe_cap() -> Result<usize, CliError> {
    match std::env::var(UNIVERSE_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{UNIVERSE_CAP_VAR}={v} is not a count"))),
        Err(_) => Ok(BANZHAF_MAX_UNIVERSE),
    }
}

pub fn banzhaf(file: &Path, t: u8) -> Result<Outcome, CliError> {
    let r = load(file)?;
    let t = BordaType::try_from(t)?;
    let values = banzhaf_values(&r, t, universe_cap()?, Execution::default())?;
    let induced = PairwiseRelation::from_fn(r.universe(), |x, y| values.compare(x, y, false))?;
    let borda = match t {
        BordaType::First => SolutionId::B1,
        BordaType::Second => SolutionId::B2,
        BordaType::Third => SolutionId::B3,
    };
    let agree = induced == borda.evaluate(&r)?;
    let mut out = String::new();
    for (x, v) in values.iter() {
        writeln!(out, "{x} {v}").unwrap();
    }
    writeln!(out, "ranking: {}", induced.tiers()).unwrap();
    writeln!(out, "agreement: {}", if agree { "yes" } else { "no" }).unwrap();
    Ok(Outcome::ok(out))
}

pub fn oracle_verify(file: &Path) -> Result<Outcome, CliError> {
    let r = load(file)?;
    if !r.is_linear() {
        return Err(CliError::Usage(
            "oracle-verify needs a linear ranking (one coalition per class)".into(),
        ));
    }
    let formula = coalrank::scores::inversion_score(&r);
    let mut out = String::new();
    let mut all_ok = true;
    for x in r.universe() {
        let f = formula.get(x)?;
        let o = swap_distance_oracle(&r, x)?;
        let ok = *f == coalrank::Rational::from_integer(o.into());
        all_ok &= ok;
        let status = if ok { "ok" } else { "MISMATCH" };
        writeln!(out, "{x}: formula={f} oracle={o} {status}").unwrap();
    }
    Ok(Outcome {
        text: out,
        code: if all_ok { 0 } else { 1 },
    })
}

pub struct FuzzArgs<'a> {
    pub solution: &'a str,
    pub axiom: &'a str,
    pub params: GenParams,
    pub iterations: u64,
    /// `Some(true)` for `--expect-pass`, `Some(false)` for `--expect-fail`.
    pub expect_pass: Option<bool>,
    pub witness_out: Option<&'a Path>,
    pub sequential: bool,
}

pub fn fuzz(args: FuzzArgs<'_>) -> Result<Outcome, CliError> {
    let id = solution(args.solution)?;
    let axiom: AxiomId = args.axiom.parse()?;
    let exec = if args.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let report = run_fuzz(&id, axiom, &args.params, args.iterations, exec)?;
    let mut out = report.to_string();
    if let Some(first) = &report.first_failure {
        let json = first.minimized.to_json();
        writeln!(out, "witness: {json}").unwrap();
        if let Some(path) = args.witness_out {
            fs::write(path, format!("{json}\n"))
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        }
    }
    let found = report.failed > 0;
    let code = match args.expect_pass {
        Some(true) if found => 1,
        Some(false) if !found => 1,
        _ => 0,
    };
    Ok(Outcome { text: out, code })
}

pub fn replay(path: &Path) -> Result<Outcome, CliError> {
    let text = read(path)?;
    let witness = Witness::from_json(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let instance = witness.instance.to_string();
    let mut out = format!("solution: {}\n{}\n", witness.solution, instance.trim_end());
    let code = match witness.replay()? {
        Verdict::Fail { reason, .. } => {
            writeln!(out, "verdict: fail\nreason: {reason}").unwrap();
            0
        }
        Verdict::Pass { .. } => {
            writeln!(out, "verdict: pass").unwrap();
            1
        }
    };
    Ok(Outcome { text: out, code })
}

pub fn suite(records: bool) -> Outcome {
    let report = run_fixture_suite();
    let text = if records {
        report.records()
    } else {
        report.to_string()
    };
    Outcome {
        text,
        code: if report.all_green() { 0 } else { 1 },
    }
}
