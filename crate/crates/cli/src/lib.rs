//! Harness that runs the algver verification suites and emits reports.

pub mod config;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod registry;
pub mod report;
pub mod suites;

use std::time::Instant;

use config::{Format, SuiteConfig, VerifyArgs};
use error::CliResult;
use fixtures::FixtureSource;
use registry::Registry;
use report::{Report, RunInfo};
use suites::Ctx;

/// Runs every suite of `cfg` in parallel and assembles the report in suite order.
pub fn run_suite(cfg: &SuiteConfig, timings: bool) -> CliResult<Report> {
    let registry = Registry::load(suites::CHECK_IDS)?;
    let ctx = Ctx { cfg, fixtures: FixtureSource { dir: cfg.fixtures.clone() } };
    let selected = cfg.suite.expand();
    let results: Vec<_> = std::thread::scope(|scope| {
        let ctx = &ctx;
        let handles: Vec<_> = selected
            .iter()
            .map(|&s| {
                scope.spawn(move || {
                    let start = Instant::now();
                    let r = suites::run_suite(s, ctx);
                    (r, start.elapsed())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite worker panicked")).collect()
    });
    let run = RunInfo { suite: cfg.suite.as_str().to_string(), field: cfg.field.as_ref().map(ToString::to_string), trials: cfg.trials, seed: cfg.seed };
    let mut report = Report::new(Some(run));
    for (suite, (entries, elapsed)) in selected.iter().zip(results) {
        if timings {
            eprintln!("{}: {:.3} s", suite.as_str(), elapsed.as_secs_f64());
        }
        report.extend(suite.as_str(), entries?, &registry);
    }
    Ok(report)
}

/// `algver verify`: returns the process exit status.
pub fn verify(args: &VerifyArgs) -> u8 {
    let outcome = SuiteConfig::from_args(args).and_then(|cfg| run_suite(&cfg, args.timings)).and_then(|report| {
        let text = report.emit(args.format);
        match &args.report {
            Some(path) => std::fs::write(path, &text)?,
            None => print!("{text}"),
        }
        Ok(report)
    });
    match outcome {
        Ok(report) if report.passed() => 0,
        Ok(report) => {
            if args.report.is_some() || args.format == Format::Json {
                eprintln!("{} check(s) failed", report.summary.fail);
            }
            1
        }
        Err(e) => {
            eprintln!("algver: {e}");
            e.exit_code()
        }
    }
}
