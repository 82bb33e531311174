//! Command implementations behind the `quintic` binary.
//!
//! Exit codes: 0 verdict, 1 parse or usage error, 2 precondition failure
//! (wrong degree, reducible, repeated roots), 3 exact and numeric pipelines
//! disagree (or no verdict could be reached), 4 numeric failure.

mod parse;
mod report;

pub use parse::{parse_polynomial, ParseError};
pub use report::{OracleSection, Report, TransformSection};

use crate::error::Error;
use crate::galois::classify;
use crate::oracle::{cross_check, OracleConfig};
use crate::selftest::{run_selftest, SelftestConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;
pub const EXIT_NUMERIC: i32 = 4;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        CommandOutput { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        CommandOutput { code, stdout: String::new(), stderr }
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::ZeroPolynomial | Error::WrongDegree { .. } | Error::ReduciblePolynomial { .. } | Error::RepeatedRoots => {
            EXIT_PRECONDITION
        }
        Error::NoConvergence { .. } | Error::DegenerateRoots { .. } | Error::SingularMatrix => EXIT_NUMERIC,
        Error::Inconclusive => EXIT_DISAGREE,
    }
}

fn explain(err: &Error) -> String {
    match err {
        Error::WrongDegree { found, .. } => format!("error: only quintics are supported (input has degree {found})"),
        Error::ZeroPolynomial => "error: the zero polynomial has no Galois group".into(),
        Error::ReduciblePolynomial { factor } => format!(
            "error: the polynomial is reducible over Q (it has the factor {factor}); \
             the classification applies to irreducible quintics only"
        ),
        Error::RepeatedRoots => "error: the polynomial has a repeated root (discriminant 0)".into(),
        other => format!("error: {other}"),
    }
}

fn parse_input(input: &str) -> Result<crate::UniPoly, CommandOutput> {
    parse_polynomial(input).map_err(|e| CommandOutput::fail(EXIT_PARSE, format!("parse error {e}\n")))
}

/// `quintic classify [--json] <poly>`.
pub fn classify_command(input: &str, json: bool) -> CommandOutput {
    let p = match parse_input(input) {
        Ok(p) => p,
        Err(out) => return out,
    };
    match classify(&p) {
        Ok(verdict) => {
            let report = Report::new(&p, &verdict);
            CommandOutput::ok(if json { report.to_json() } else { report.to_text() })
        }
        Err(e) => CommandOutput::fail(exit_code_for(&e), explain(&e) + "\n"),
    }
}

/// `quintic oracle [--json] [--tol T] [--max-den N] [--rat-tol W] <poly>`.
pub fn oracle_command(input: &str, json: bool, config: &OracleConfig) -> CommandOutput {
    let p = match parse_input(input) {
        Ok(p) => p,
        Err(out) => return out,
    };
    let verdict = match classify(&p) {
        Ok(v) => v,
        Err(e) => return CommandOutput::fail(exit_code_for(&e), explain(&e) + "\n"),
    };
    let check = match cross_check(&p, config) {
        Ok(c) => c,
        Err(e) => return CommandOutput::fail(exit_code_for(&e), explain(&e) + "\n"),
    };
    let agrees = check.agrees();
    let mut report = Report::new(&p, &verdict);
    report.oracle = Some(OracleSection::new(config, &check));
    let stdout = if json { report.to_json() } else { report.to_text() };
    if agrees {
        CommandOutput::ok(stdout)
    } else {
        CommandOutput {
            code: EXIT_DISAGREE,
            stdout,
            stderr: format!(
                "error: exact and numeric pipelines disagree (max relative deviation {:e}, tolerance {:e}, rational-root bits agree: {})\n",
                check.max_relative_deviation, config.tol, check.rational_root_bits_agree
            ),
        }
    }
}

/// `quintic selftest [--count N] [--seed S]`.
pub fn selftest_command(config: &SelftestConfig) -> CommandOutput {
    let summary = run_selftest(config);
    let text = summary.to_text();
    if summary.all_passed() {
        CommandOutput::ok(text)
    } else {
        CommandOutput { code: EXIT_DISAGREE, stdout: text, stderr: "error: selftest failed\n".into() }
    }
}
