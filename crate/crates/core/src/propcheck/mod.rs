//! Seeded property harness.
//!
//! Every registered property owns a ChaCha8 stream seeded from the run seed
//! and its id, so reports do not depend on thread scheduling or on which
//! other properties run alongside it.

mod gen;
mod nat_props;
mod op_props;
mod poly_props;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Case budget of ordinary randomized properties; `--cases` rescales these.
pub const STANDARD_CASES: usize = 500;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Must hold; a failure fails the suite.
    Theorem,
    /// Shows that a printed statement is wrong while its correction holds.
    Erratum,
    /// Records boundary behaviour; never fails.
    Observation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Randomized,
    Exhaustive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Reproduced,
    NotReproduced,
    Recorded,
}

pub struct PropertySpec {
    pub id: &'static str,
    /// The statement being checked.
    pub anchor: &'static str,
    pub kind: Kind,
    pub mode: Mode,
    pub default_cases: usize,
    check: fn(&mut Cx),
}

impl PropertySpec {
    const fn new(
        id: &'static str,
        anchor: &'static str,
        kind: Kind,
        mode: Mode,
        default_cases: usize,
        check: fn(&mut Cx),
    ) -> Self {
        PropertySpec {
            id,
            anchor,
            kind,
            mode,
            default_cases,
            check,
        }
    }

    fn effective_cases(&self, requested: Option<usize>) -> usize {
        match (self.mode, requested) {
            (Mode::Exhaustive, _) | (_, None) => self.default_cases,
            (Mode::Randomized, Some(n)) if self.default_cases == STANDARD_CASES => n,
            (Mode::Randomized, Some(n)) => self.default_cases.min(n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub id: String,
    pub anchor: String,
    pub kind: Kind,
    pub status: Status,
    pub seed: u64,
    pub cases: usize,
    /// Total failing cases; `failures` keeps at most [`MAX_RECORDED`].
    pub failed: usize,
    pub failures: Vec<Failure>,
    pub millis: Option<u64>,
}

pub const MAX_RECORDED: usize = 20;

#[derive(Clone, Copy, Debug, Default)]
pub struct RunConfig {
    pub seed: u64,
    pub cases: Option<usize>,
    pub timings: bool,
}

/// Per-property execution context.
pub(crate) struct Cx {
    pub rng: ChaCha8Rng,
    pub cases: usize,
    ran: usize,
    failed: usize,
    failures: Vec<Failure>,
    /// Set when the corrected form of an erratum fails.
    broken: bool,
}

impl Cx {
    fn new(seed: u64, id: &str, cases: usize) -> Self {
        Cx {
            rng: ChaCha8Rng::seed_from_u64(seed ^ fnv1a(id)),
            cases,
            ran: 0,
            failed: 0,
            failures: Vec::new(),
            broken: false,
        }
    }

    /// Counts one case; records a failure when `ok` is false.
    pub fn check(
        &mut self,
        ok: bool,
        inputs: impl FnOnce() -> String,
        expected: impl FnOnce() -> String,
        got: impl FnOnce() -> String,
    ) {
        self.ran += 1;
        if !ok {
            self.record(inputs(), expected(), got());
        }
    }

    /// Counts one case whose outcome is an `Err` describing the failure.
    pub fn check_result(&mut self, inputs: impl FnOnce() -> String, r: Result<()>) {
        self.ran += 1;
        if let Err(e) = r {
            self.record(inputs(), "property holds".into(), e.to_string());
        }
    }

    fn record(&mut self, inputs: String, expected: String, got: String) {
        self.failed += 1;
        if self.failures.len() < MAX_RECORDED {
            self.failures.push(Failure {
                inputs,
                expected,
                got,
            });
        }
    }

    /// For errata: the corrected statement failed on `inputs`.
    pub fn corrected_fails(&mut self, inputs: String, detail: String) {
        self.broken = true;
        self.record(
            format!("corrected form: {inputs}"),
            "corrected form holds".into(),
            detail,
        );
    }
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

/// Converts a boolean into the `Result` shape used by `check_result`.
pub(crate) fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Verification(msg()))
    }
}

pub fn registry() -> Vec<&'static PropertySpec> {
    poly_props::SPECS
        .iter()
        .chain(nat_props::SPECS)
        .chain(op_props::SPECS)
        .collect()
}

pub fn find(id: &str) -> Result<&'static PropertySpec> {
    registry()
        .into_iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownProperty(id.to_string()))
}

fn execute(spec: &PropertySpec, cfg: &RunConfig) -> PropertyReport {
    let start = Instant::now();
    let mut cx = Cx::new(cfg.seed, spec.id, spec.effective_cases(cfg.cases));
    (spec.check)(&mut cx);
    let status = match spec.kind {
        Kind::Theorem if cx.failed == 0 => Status::Pass,
        Kind::Theorem => Status::Fail,
        Kind::Erratum if !cx.broken && cx.failed > 0 => Status::Reproduced,
        Kind::Erratum => Status::NotReproduced,
        Kind::Observation => Status::Recorded,
    };
    PropertyReport {
        id: spec.id.to_string(),
        anchor: spec.anchor.to_string(),
        kind: spec.kind,
        status,
        seed: cfg.seed,
        cases: cx.ran,
        failed: cx.failed,
        failures: cx.failures,
        millis: cfg.timings.then(|| start.elapsed().as_millis() as u64),
    }
}

pub fn run_property(id: &str, cfg: &RunConfig) -> Result<PropertyReport> {
    Ok(execute(find(id)?, cfg))
}

/// Runs the whole registry, or the listed ids, in registry order.
pub fn run_all(cfg: &RunConfig, filter: Option<&[String]>) -> Result<Vec<PropertyReport>> {
    let specs: Vec<&PropertySpec> = match filter {
        None => registry(),
        Some(ids) => {
            let reg = registry();
            for id in ids {
                if !reg.iter().any(|s| s.id == id) {
                    return Err(Error::UnknownProperty(id.clone()));
                }
            }
            reg.into_iter()
                .filter(|s| ids.iter().any(|i| i == s.id))
                .collect()
        }
    };
    Ok(specs.par_iter().map(|s| execute(s, cfg)).collect())
}

/// True unless some theorem-kind property failed.
pub fn suite_passed(reports: &[PropertyReport]) -> bool {
    reports.iter().all(|r| r.status != Status::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let reg = registry();
        for (i, a) in reg.iter().enumerate() {
            assert!(
                reg[i + 1..].iter().all(|b| b.id != a.id),
                "duplicate id {}",
                a.id
            );
        }
    }

    #[test]
    fn unknown_id_is_an_error() {
        let cfg = RunConfig::default();
        assert_eq!(
            run_property("NOPE", &cfg),
            Err(Error::UnknownProperty("NOPE".into()))
        );
        assert!(run_all(&cfg, Some(&["NOPE".to_string()])).is_err());
    }

    #[test]
    fn same_seed_same_report() {
        let cfg = RunConfig {
            seed: 7,
            cases: Some(40),
            timings: false,
        };
        let a = run_all(&cfg, Some(&["P1.4".into(), "PDO4.2".into()])).unwrap();
        let b = run_all(&cfg, Some(&["PDO4.2".into(), "P1.4".into()])).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
        assert_eq!(a[0].id, "P1.4");
    }

    #[test]
    fn case_budgets() {
        let p14 = find("P1.4").unwrap();
        assert_eq!(p14.effective_cases(None), STANDARD_CASES);
        assert_eq!(p14.effective_cases(Some(30)), 30);
        let p2 = find("P2").unwrap();
        assert_eq!(p2.effective_cases(Some(500)), 200);
        assert_eq!(p2.effective_cases(Some(30)), 30);
        assert_eq!(
            find("N5").unwrap().effective_cases(Some(3)),
            find("N5").unwrap().default_cases
        );
    }
}
