//! Acceptance criteria 1-8. Prints one line per criterion and exits
//! nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use pastrev_core::propcheck::{run_all, suite_passed, PropertyReport, RunConfig, Status};

const BIN: &str = env!("CARGO_BIN_EXE_pastrev");
const SEED: u64 = 42;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn pastrev(args: &[&str]) -> (String, i32) {
    let out = Command::new(BIN).args(args).output().expect("run pastrev");
    (
        String::from_utf8(out.stdout).expect("utf-8"),
        out.status.code().unwrap_or(-1),
    )
}

fn run(ids: &[&str], cases: Option<usize>) -> Vec<PropertyReport> {
    let cfg = RunConfig {
        seed: SEED,
        cases,
        timings: false,
    };
    let ids: Vec<String> = ids.iter().map(|s| s.to_string()).collect();
    run_all(&cfg, Some(&ids)).expect("known ids")
}

fn within(start: Instant, budget: Duration) -> Outcome {
    let took = start.elapsed();
    if took <= budget {
        Ok(format!("{} ms", took.as_millis()))
    } else {
        Err(format!(
            "took {} ms, budget {} ms",
            took.as_millis(),
            budget.as_millis()
        ))
    }
}

/// Every report must have `want` status and at least the listed case count.
fn expect(reports: &[PropertyReport], want: Status, min_cases: &[(&str, usize)]) -> Outcome {
    for r in reports {
        if r.status != want {
            return Err(format!(
                "{} is {:?} with {} failures",
                r.id, r.status, r.failed
            ));
        }
    }
    for (id, n) in min_cases {
        let r = reports
            .iter()
            .find(|r| r.id == *id)
            .ok_or(format!("{id} missing"))?;
        if r.cases < *n {
            return Err(format!("{id} ran {} cases, need {n}", r.cases));
        }
    }
    Ok(format!("{} properties", reports.len()))
}

fn games() -> Outcome {
    const NINES: [&str; 9] = [
        "9 x 9 + 7 = 88",
        "98 x 9 + 6 = 888",
        "987 x 9 + 5 = 8888",
        "9876 x 9 + 4 = 88888",
        "98765 x 9 + 3 = 888888",
        "987654 x 9 + 2 = 8888888",
        "9876543 x 9 + 1 = 88888888",
        "98765432 x 9 + 0 = 888888888",
        "987654321 x 9 - 1 = 8888888888",
    ];
    const REPUNITS: [&str; 9] = [
        "1 x 1 = 1",
        "11 x 11 = 121",
        "111 x 111 = 12321",
        "1111 x 1111 = 1234321",
        "11111 x 11111 = 123454321",
        "111111 x 111111 = 12345654321",
        "1111111 x 1111111 = 1234567654321",
        "11111111 x 11111111 = 123456787654321",
        "111111111 x 111111111 = 12345678987654321",
    ];
    let start = Instant::now();
    for (game, printed) in [("nines", NINES), ("repunits", REPUNITS)] {
        let (out, code) = pastrev(&["nat", "games", game, "--rows", "9", "--format", "text"]);
        if code != 0 {
            return Err(format!("{game}: exit {code}"));
        }
        let rows: Vec<&str> = out.lines().map(str::trim_start).collect();
        if rows != printed {
            return Err(format!("{game}: got {rows:?}"));
        }
    }
    within(start, Duration::from_secs(1))
}

fn polynomial_suite() -> Outcome {
    let start = Instant::now();
    let ids = [
        "P1.1", "P1.2", "P1.3", "P1.4", "P1.5", "P1.6", "P1.7", "P2", "P3.1", "P3.2", "P3.3",
        "P3.4", "P3.5", "P4.1", "P4.2", "P5",
    ];
    let reports = run(&ids, Some(500));
    let mut min: Vec<(&str, usize)> = ids.iter().map(|id| (*id, 500)).collect();
    min[7] = ("P2", 200);
    expect(&reports, Status::Pass, &min)?;
    within(start, Duration::from_secs(30))
}

fn chebyshev() -> Outcome {
    let start = Instant::now();
    let pass = run(&["CHEB-L1", "CHEB-SOKO"], None);
    expect(&pass, Status::Pass, &[("CHEB-L1", 330), ("CHEB-SOKO", 100)])?;
    let err = run(&["ERR-SOKOEQ"], None);
    expect(&err, Status::Reproduced, &[])?;
    if !err[0]
        .failures
        .iter()
        .any(|f| f.inputs.starts_with("P = x^2+3x+1,"))
    {
        return Err("z^2+3z+1 is not among the recorded witnesses".into());
    }
    within(start, Duration::from_secs(10))
}

fn numerals() -> Outcome {
    let start = Instant::now();
    let reports = run(&["N1", "N2", "N3", "N4", "N5"], None);
    expect(&reports, Status::Pass, &[("N4", 999), ("N5", 90_000)])?;
    within(start, Duration::from_secs(20))
}

fn operator_suite() -> Outcome {
    let start = Instant::now();
    let ids = [
        "PDO1.1",
        "PDO1.2",
        "PDO1.3",
        "PDO2",
        "PDO3.1",
        "PDO3.2",
        "PDO4.1",
        "PDO4.2",
        "PDO5",
        "PDOC1.1",
        "PDOC1.3",
        "PDOC1.4",
        "PDOC1.6",
        "PDOC1.7",
        "PDOC1.8",
        "PDOC1.2R",
        "WEYL",
        "REMARK-KER",
        "PDO-ORD1",
    ];
    let reports = run(&ids, None);
    expect(
        &reports,
        Status::Pass,
        &[
            ("PDO2", 200),
            ("PDOC1.2R", 100),
            ("PDO-ORD1", 100),
            ("REMARK-KER", 1),
        ],
    )?;
    within(start, Duration::from_secs(30))
}

fn division() -> Outcome {
    let reports = run(&["PDO2", "PDO5", "PDO-DIV"], None);
    expect(
        &reports,
        Status::Pass,
        &[("PDO2", 200), ("PDO5", 500), ("PDO-DIV", 500)],
    )
}

fn determinism() -> Outcome {
    let (a, code_a) = pastrev(&["verify", "--seed", "42"]);
    let (b, code_b) = pastrev(&["verify", "--seed", "42"]);
    if (code_a, code_b) != (0, 0) {
        return Err(format!("exit codes {code_a}, {code_b}"));
    }
    if a != b {
        return Err("reports differ".into());
    }
    Ok(format!("{} bytes", a.len()))
}

fn errata() -> Outcome {
    let all = run_all(
        &RunConfig {
            seed: SEED,
            cases: None,
            timings: false,
        },
        None,
    )
    .map_err(|e| e.to_string())?;
    for id in ["ERR-SOKOEQ", "ERR-PDOC1-2"] {
        let r = all
            .iter()
            .find(|r| r.id == id)
            .ok_or(format!("{id} missing"))?;
        if r.status != Status::Reproduced {
            return Err(format!("{id} is {:?}", r.status));
        }
    }
    if !suite_passed(&all) {
        return Err("suite failed".into());
    }
    Ok("both reproduced, suite passed".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("games fidelity", games),
        ("polynomial suite", polynomial_suite),
        ("chebyshev reduction", chebyshev),
        ("numeral suite", numerals),
        ("operator suite", operator_suite),
        ("division soundness", division),
        ("determinism", determinism),
        ("errata", errata),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} ({name}): PASS [{detail}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL [{why}]", i + 1);
            }
        }
    }
    match within(start, Duration::from_secs(90)) {
        Ok(t) => println!("total: {t}"),
        Err(why) => {
            failed += 1;
            println!("total: FAIL [{why}]");
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
