//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qkraw_core::qscalar::QBase;
use qkraw_core::verify::{run_suite, Suite, SuiteParams, SuiteReport};

struct Outcome {
    pass: bool,
    detail: String,
}

fn params(suite: Suite, level: u32) -> SuiteParams {
    SuiteParams { level, ..SuiteParams::defaults(suite) }
}

fn q(num: i64, den: i64) -> QBase {
    QBase::from_ratio(num, den).unwrap()
}

fn run(suite: Suite, p: &SuiteParams) -> SuiteReport {
    let r = run_suite(suite, p).unwrap_or_else(|e| panic!("{suite}: {e}"));
    for c in r.checks.iter().filter(|c| !c.pass) {
        eprintln!("    failed check [{suite}] {}: {:?} > {:?}", c.description, c.max_deviation, c.tolerance);
    }
    r
}

fn summarize(reports: &[SuiteReport]) -> Outcome {
    let pass = reports.iter().all(|r| r.pass);
    let dev = reports.iter().filter_map(SuiteReport::max_deviation).reduce(f64::max);
    let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
    let detail = match dev {
        Some(d) => format!("{checks} checks, max deviation {d:.3e}"),
        None => format!("{checks} checks, exact"),
    };
    Outcome { pass, detail }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let mut out = f();
    let took = start.elapsed();
    if let Some(limit) = limit {
        if took > limit {
            out.pass = false;
            out.detail.push_str(&format!("; exceeded {}s budget", limit.as_secs()));
        }
    }
    (out, took)
}

fn oracle_h() -> Outcome {
    summarize(&[run(Suite::OracleH, &params(Suite::OracleH, 3))])
}

fn uni_match() -> Outcome {
    let reports: Vec<_> = [q(1, 2), q(3, 5)]
        .into_iter()
        .map(|qb| {
            let p = SuiteParams { q: qb, trunc: 24, tol: 1e-10, zero_tol: 1e-12, ..params(Suite::UniMatch, 4) };
            run(Suite::UniMatch, &p)
        })
        .collect();
    summarize(&reports)
}

fn bi_match() -> Outcome {
    let p = SuiteParams { trunc: 32, tol: 1e-9, zero_tol: 1e-12, ..params(Suite::BiMatch, 3) };
    summarize(&[run(Suite::BiMatch, &p)])
}

fn unitarity() -> Outcome {
    let u = SuiteParams { trunc: 24, tol: 1e-9, ..params(Suite::Unitarity, 2) };
    let d = SuiteParams { tol: 1e-8, ..params(Suite::DualOrth, 3) };
    summarize(&[run(Suite::Unitarity, &u), run(Suite::DualOrth, &d)])
}

fn hopf() -> Outcome {
    summarize(&[
        run(Suite::Hexagon, &params(Suite::Hexagon, 0)),
        run(Suite::Hopf, &params(Suite::Hopf, 0)),
        run(Suite::Comodule, &params(Suite::Comodule, 2)),
    ])
}

fn confluence() -> Outcome {
    let p = SuiteParams { seed: 7, count: 500, ..params(Suite::Confluence, 0) };
    summarize(&[run(Suite::Confluence, &p)])
}

fn q_one() -> Outcome {
    summarize(&[run(Suite::QOne, &params(Suite::QOne, 12))])
}

fn wall() -> Outcome {
    let p = SuiteParams { q: q(1, 2), tol: 1e-8, ..params(Suite::WallIdentity, 2) };
    summarize(&[run(Suite::WallIdentity, &p)])
}

fn multinomial() -> Outcome {
    summarize(&[run(Suite::Multinomial, &params(Suite::Multinomial, 5))])
}

fn relations() -> Outcome {
    let reports: Vec<_> = [q(1, 2), q(7, 10)]
        .into_iter()
        .map(|qb| {
            let p = SuiteParams { q: qb, trunc: 24, zero_tol: 1e-12, ..params(Suite::Relations, 0) };
            run(Suite::Relations, &p)
        })
        .collect();
    summarize(&reports)
}

type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria: [Criterion; 10] = [
        ("1  coaction oracle equals h_mn, N ≤ 3 (exact)", Some(secs(30)), oracle_h),
        ("2  π1, π2 shift operators vs closed form, N ≤ 4, k ≤ 12, q ∈ {0.5, 0.6}", Some(secs(120)), uni_match),
        ("3  π21 shift operators vs bivariate closed form, N ≤ 3, K = 32", None, bi_match),
        ("4  π121 completeness N ≤ 2, K = 24; dual orthogonality N ≤ 3", None, unitarity),
        ("5  Hopf identities, hexagon, comodule axiom N ≤ 2 (exact)", None, hopf),
        ("6  confluence of two reduction strategies, 500 words (exact)", None, confluence),
        ("7  q = 1 specialization of q-binomials and q-multinomials, n ≤ 12", None, q_one),
        ("8  Wall product identity, N ≤ 2, q = 1/2", Some(secs(60)), wall),
        ("9  multinomial balance [N m][m a] = [N n][n a], N ≤ 5 (exact)", None, multinomial),
        ("10 relations and det_q − 1 annihilated on the safe window", None, relations),
    ];
    let mut failed = 0;
    for (name, limit, f) in criteria {
        let (out, took) = timed(limit, f);
        let tag = if out.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] {name}: {} ({:.2}s)", out.detail, took.as_secs_f64());
        failed += usize::from(!out.pass);
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
