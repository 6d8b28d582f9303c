//! Registry of named verifications, grouped into suites, and the runner that
//! evaluates a selection of them into ordered reports.

mod algebra;
mod related;
mod structure;
mod support;
mod theorems;

use std::fmt::Write as _;

use crate::arith::{rat, ratio, Rat};
use crate::error::Error;
use crate::par::{self, Mode};
use crate::report::{CheckReport, Cutoffs, Status, Tally};

pub const SUITES: [&str; 10] =
    ["core", "u2", "u3", "dims", "thm-i0", "thm-i2", "thm-il", "related-sw", "related-bf", "sl2-verma"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Suite names; `all` selects every suite.
    pub suites: Vec<String>,
    pub max_degree: usize,
    pub max_weight: i64,
    pub lambda_samples: Vec<Rat>,
    pub format: Format,
    pub fail_fast: bool,
    pub mode: Mode,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            suites: vec!["all".into()],
            max_degree: 3,
            max_weight: 8,
            lambda_samples: default_lambdas(),
            format: Format::Text,
            fail_fast: false,
            mode: Mode::default(),
        }
    }
}

pub fn default_lambdas() -> Vec<Rat> {
    vec![rat(2), rat(-1), ratio(1, 2), ratio(1, 3)]
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.max_degree < 2 {
            return Err(Error::Config(format!("max degree {} is below 2", self.max_degree)));
        }
        if self.max_weight < self.max_degree as i64 {
            return Err(Error::Config(format!(
                "max weight {} is below max degree {}",
                self.max_weight, self.max_degree
            )));
        }
        if self.lambda_samples.is_empty() {
            return Err(Error::Config("at least one λ sample is needed".into()));
        }
        for s in &self.suites {
            if s != "all" && !SUITES.contains(&s.as_str()) {
                return Err(Error::Config(format!("unknown suite `{s}`")));
            }
        }
        Ok(())
    }

    fn selects(&self, suite: &str) -> bool {
        self.suites.iter().any(|s| s == "all" || s == suite)
    }
}

type Body = fn(&RunConfig, &mut Tally) -> Result<(), Error>;

pub struct CheckDef {
    pub id: &'static str,
    pub description: &'static str,
    /// Degree cutoff the check raises the configured one to.
    pub min_degree: usize,
    body: Body,
}

impl CheckDef {
    const fn new(id: &'static str, description: &'static str, body: Body) -> Self {
        CheckDef { id, description, min_degree: 0, body }
    }

    const fn at_degree(mut self, d: usize) -> Self {
        self.min_degree = d;
        self
    }

    pub fn suite(&self) -> &'static str {
        self.id.split('/').next().unwrap_or(self.id)
    }

    fn cutoffs(&self, cfg: &RunConfig) -> Cutoffs {
        Cutoffs { max_degree: cfg.max_degree.max(self.min_degree), max_weight: cfg.max_weight }
    }

    pub fn run(&self, cfg: &RunConfig) -> CheckReport {
        let mut t = Tally::new();
        let mut local = cfg.clone();
        local.max_degree = cfg.max_degree.max(self.min_degree);
        if let Err(e) = (self.body)(&local, &mut t) {
            t.fail(format!("error: {e}"));
        }
        t.finish(self.id, self.cutoffs(cfg))
    }
}

fn registry() -> Vec<CheckDef> {
    let mut all = Vec::new();
    all.extend(algebra::checks());
    all.extend(structure::checks());
    all.extend(theorems::checks());
    all.extend(related::checks());
    all.sort_by_key(|c| c.id);
    all
}

/// Every registered check, ordered by id.
pub fn list_checks() -> Vec<CheckDef> {
    registry()
}

/// Runs the selected checks; reports come back ordered by id.
pub fn run(cfg: &RunConfig) -> Result<Vec<CheckReport>, Error> {
    cfg.validate()?;
    let selected: Vec<CheckDef> = registry().into_iter().filter(|c| cfg.selects(c.suite())).collect();
    if cfg.fail_fast {
        let mut out = Vec::new();
        for c in &selected {
            let r = c.run(cfg);
            let stop = r.status == Status::Fail;
            out.push(r);
            if stop {
                break;
            }
        }
        return Ok(out);
    }
    let refs: Vec<&CheckDef> = selected.iter().collect();
    Ok(par::map(cfg.mode, refs, |c| c.run(cfg)))
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.status != Status::Fail)
}

pub fn render(reports: &[CheckReport], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(reports).expect("reports serialize"),
        Format::Text => render_text(reports),
    }
}

fn render_text(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(
            out,
            "[{:<7}] {} ({} ms, degree ≤ {}, weight ≤ {})",
            r.status.as_str().to_uppercase(),
            r.check_id,
            r.elapsed_ms,
            r.cutoffs.max_degree,
            r.cutoffs.max_weight
        );
        for w in &r.witnesses {
            let _ = writeln!(out, "    {w}");
        }
    }
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    let skipped = reports.iter().filter(|r| r.status == Status::Skipped).count();
    let _ = writeln!(out, "{} checks: {} passed, {failed} failed, {skipped} skipped", reports.len(), reports.len() - failed - skipped);
    out
}
