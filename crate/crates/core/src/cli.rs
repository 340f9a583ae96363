//! Command-line front end. [`run`] returns the process exit code: 0 on
//! success, 1 when a check fails, 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::dyck::{count_ci_tilings, encode_pairing, list_ci_tilings, AugPath, DyckPath, PartialPairing};
use crate::exact::Rational;
use crate::formulas::{corollary_checks, det_formula_for_graph, theorem1_eval, Expansion, Jets, Mode, RatioResult};
use crate::graph::{green_data, response_data, AnnularGraph, GraphError};
use crate::oracle::{enumerate_groves, ratio_bar, ratio_dot};

#[derive(Parser, Debug)]
#[command(name = "groves", version, about = "Exact grove ratios on annular graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Encode a partial pairing as an augmented Dyck path.
    Encode {
        #[arg(long)]
        pairing: String,
        #[arg(long)]
        n: u32,
    },
    /// List the paths above a path with their tiling coefficients.
    Mus {
        #[arg(long)]
        lambda: String,
    },
    /// Count cover-inclusive Dyck tilings between two paths.
    Tilings {
        #[arg(long)]
        lower: String,
        #[arg(long)]
        upper: String,
        #[arg(long)]
        list: bool,
    },
    /// Evaluate one ratio on a graph.
    Eval {
        /// Fixture name (FIX-A, FIX-B, FIX-C) or a graph file.
        #[arg(long)]
        graph: String,
        #[arg(long)]
        pairing: String,
        #[arg(long, value_enum)]
        mode: EvalMode,
        /// Print the per-path Pfaffian breakdown (pf modes only).
        #[arg(long)]
        terms: bool,
    },
    /// Compare every evaluator on every pairing of a graph.
    Verify {
        #[arg(long)]
        graph: String,
        /// Refuse graphs with more nodes than this.
        #[arg(long, default_value_t = 8)]
        max_n: u32,
    },
    /// Print the formal polynomial for a path and check its corollaries.
    Symbolic {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum)]
        mode: SymbolicMode,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EvalMode {
    PfG,
    PfL,
    DetG,
    DetL,
    OracleBar,
    OracleDot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SymbolicMode {
    G,
    L,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn failed(e: impl std::fmt::Display) -> CliError {
    CliError::Failed(e.to_string())
}

/// Parse `args` (program name first) and execute, writing the report to
/// `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn load_graph(spec: &str) -> Result<AnnularGraph, CliError> {
    match AnnularGraph::fixture(spec) {
        Ok(g) => Ok(g),
        Err(GraphError::UnknownFixture(_)) => {
            let text = std::fs::read_to_string(Path::new(spec)).map_err(|e| usage(format!("{spec}: {e}")))?;
            AnnularGraph::parse(&text).map_err(usage)
        }
        Err(e) => Err(failed(e)),
    }
}

fn io(e: std::io::Error) -> CliError {
    failed(e)
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Encode { pairing, n } => {
            let tau = PartialPairing::parse(&pairing, n).map_err(usage)?;
            let path = encode_pairing(&tau).map_err(usage)?;
            writeln!(out, "{path}").map_err(io)?;
        }
        Command::Mus { lambda } => {
            let lambda = AugPath::parse(&lambda).map_err(usage)?;
            let lower = lambda.core();
            for mu in lambda.paths_above() {
                let c = count_ci_tilings(&lower, &mu.core()).map_err(failed)?;
                writeln!(out, "{mu}\t{c}").map_err(io)?;
            }
        }
        Command::Tilings { lower, upper, list } => {
            let lower = DyckPath::parse(&lower).map_err(usage)?;
            let upper = DyckPath::parse(&upper).map_err(usage)?;
            if list {
                let tilings = list_ci_tilings(&lower, &upper).map_err(usage)?;
                writeln!(out, "{}", tilings.len()).map_err(io)?;
                for t in tilings {
                    write!(out, "\n{t}").map_err(io)?;
                }
            } else {
                writeln!(out, "{}", count_ci_tilings(&lower, &upper).map_err(usage)?).map_err(io)?;
            }
        }
        Command::Eval { graph, pairing, mode, terms } => {
            let g = load_graph(&graph)?;
            let tau = PartialPairing::parse(&pairing, g.node_count() as u32).map_err(usage)?;
            if terms && !matches!(mode, EvalMode::PfG | EvalMode::PfL) {
                return Err(usage("--terms applies to pf-g and pf-l only"));
            }
            eval(&g, &tau, mode, terms, out)?;
        }
        Command::Verify { graph, max_n } => {
            let g = load_graph(&graph)?;
            if g.node_count() as u32 > max_n {
                return Err(usage(format!("graph has {} nodes, above --max-n {max_n}", g.node_count())));
            }
            return verify(&g, out);
        }
        Command::Symbolic { lambda, mode } => {
            let lambda = AugPath::parse(&lambda).map_err(usage)?;
            let report = corollary_checks(&lambda).map_err(failed)?;
            let yes = |b: bool| if b { "yes" } else { "no" };
            match mode {
                SymbolicMode::G => {
                    writeln!(out, "{}", report.poly_g.display_with("G")).map_err(io)?;
                    writeln!(out, "integer coefficients: {}", yes(report.integral_g)).map_err(io)?;
                    writeln!(out, "coboundary invariant: {}", yes(report.coboundary_invariant)).map_err(io)?;
                    if !(report.integral_g && report.coboundary_invariant) {
                        return Ok(1);
                    }
                }
                SymbolicMode::L => {
                    writeln!(out, "{}", report.poly_l.display_with("L")).map_err(io)?;
                    writeln!(out, "integer coefficients: {}", yes(report.integral_l)).map_err(io)?;
                    if !report.integral_l {
                        return Ok(1);
                    }
                }
            }
        }
    }
    Ok(0)
}

fn pf_value(g: &AnnularGraph, tau: &PartialPairing, mode: Mode) -> Result<RatioResult<Rational>, CliError> {
    let lambda = encode_pairing(tau).map_err(usage)?;
    let jets = match mode {
        Mode::G => Jets::from_green(&green_data(g).map_err(failed)?, g.node_count()),
        Mode::L => Jets::from_response(&response_data(g).map_err(failed)?),
    };
    theorem1_eval(&lambda, &jets, mode).map_err(failed)
}

fn eval(
    g: &AnnularGraph,
    tau: &PartialPairing,
    mode: EvalMode,
    terms: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let value = match mode {
        EvalMode::PfG | EvalMode::PfL => {
            let m = if matches!(mode, EvalMode::PfG) { Mode::G } else { Mode::L };
            let r = pf_value(g, tau, m)?;
            if terms {
                for t in &r.terms {
                    writeln!(out, "{}\t{}\t{}", t.mu, t.coefficient, t.pfaffian).map_err(io)?;
                }
            }
            r.value
        }
        EvalMode::DetG | EvalMode::DetL => {
            let m = if matches!(mode, EvalMode::DetG) { Mode::G } else { Mode::L };
            let lambda = encode_pairing(tau).map_err(usage)?;
            det_formula_for_graph(&lambda, g, m, Expansion::Full).map_err(failed)?
        }
        EvalMode::OracleBar | EvalMode::OracleDot => {
            let tally = enumerate_groves(g).map_err(failed)?;
            if matches!(mode, EvalMode::OracleBar) {
                ratio_bar(&tally, tau).map_err(failed)?
            } else {
                ratio_dot(&tally, tau).map_err(failed)?
            }
        }
    };
    writeln!(out, "{value}").map_err(io)
}

fn verify(g: &AnnularGraph, out: &mut dyn Write) -> Result<i32, CliError> {
    let n = g.node_count() as u32;
    let tally = enumerate_groves(g).map_err(failed)?;
    let jets_g = Jets::from_green(&green_data(g).map_err(failed)?, n as usize);
    let jets_l = Jets::from_response(&response_data(g).map_err(failed)?);
    let mut failures = 0usize;
    writeln!(out, "pairing\tpath\tbar\tdot\tstatus").map_err(io)?;
    for tau in PartialPairing::all_encodable(n) {
        let lambda = encode_pairing(&tau).map_err(failed)?;
        let bar = ratio_bar(&tally, &tau).map_err(failed)?;
        let dot = ratio_dot(&tally, &tau).map_err(failed)?;
        let computed = [
            theorem1_eval(&lambda, &jets_g, Mode::G).map(|r| r.value),
            det_formula_for_graph(&lambda, g, Mode::G, Expansion::Full),
            theorem1_eval(&lambda, &jets_l, Mode::L).map(|r| r.value),
            det_formula_for_graph(&lambda, g, Mode::L, Expansion::Full),
        ];
        let expected = [&bar, &bar, &dot, &dot];
        let ok = computed.iter().zip(expected).all(|(c, e)| c.as_ref().is_ok_and(|v| v == e));
        if !ok {
            failures += 1;
        }
        writeln!(out, "{tau}\t{lambda}\t{bar}\t{dot}\t{}", if ok { "pass" } else { "FAIL" }).map_err(io)?;
    }
    writeln!(out, "{failures} failure(s)").map_err(io)?;
    Ok(if failures == 0 { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("groves").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn encode_and_tilings() {
        assert_eq!(call(&["encode", "--pairing", "1,3|2,4", "--n", "4"]), (0, "DFUO\n".into()));
        assert_eq!(call(&["tilings", "--lower", "UDUDUD", "--upper", "UUUDDD"]), (0, "2\n".into()));
    }

    #[test]
    fn eval_fixture() {
        assert_eq!(call(&["eval", "--graph", "FIX-A", "--pairing", "1,3|2,4", "--mode", "pf-g"]), (0, "1/8\n".into()));
        assert_eq!(
            call(&["eval", "--graph", "fix-a", "--pairing", "1,3|2,4", "--mode", "oracle-bar"]),
            (0, "1/8\n".into())
        );
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["encode", "--pairing", "1,3|2,4"]).0, 2);
        assert_eq!(call(&["encode", "--pairing", "1,3|2,4", "--n", "4", "--bogus"]).0, 2);
        assert_eq!(call(&["encode", "--pairing", "1,2,3", "--n", "4"]).0, 2);
        assert_eq!(call(&["eval", "--graph", "/nonexistent", "--pairing", "1,4", "--mode", "pf-g"]).0, 2);
        assert_eq!(call(&["verify", "--graph", "FIX-B", "--max-n", "4"]).0, 2);
        assert_eq!(call(&["eval", "--graph", "FIX-A", "--pairing", "1,4", "--mode", "det-g", "--terms"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
    }

    #[test]
    fn verify_small_fixture() {
        let (code, text) = call(&["verify", "--graph", "FIX-A"]);
        assert_eq!(code, 0, "{text}");
        assert!(text.ends_with("0 failure(s)\n"));
    }
}
