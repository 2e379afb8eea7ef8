//! Command-line front end. [`run`] parses arguments, executes one command
//! and returns the process exit code:
//! 0 success, 1 usage or validation error, 2 internal invariant breach.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::bounds::{evaluate, superpose_exact, BoundsOptions, DEFAULT_PARTITION_CAP};
use crate::classify::{classify_set, OrthoClass, PairConditions, CLASSIFY_TOLERANCE};
use crate::concurrence::{
    concurrence, concurrence_from_purity, pair_concurrence, pair_concurrence_closed_form,
};
use crate::error::Result;
use crate::figure::{figure1, write_csv, DEFAULT_SAMPLES};
use crate::io::{load_state, load_superposition};
use crate::state::{inner_product, PureState};
use crate::verify::{verify, EnsembleSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BREACH: i32 = 2;

/// Disagreement between two routes to the same quantity that counts as a breach.
pub const ROUTE_TOLERANCE: f64 = 1e-9;

/// Slack allowed on bracket and dominance checks.
pub const BRACKET_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(name = "cbounds", version, about = "Concurrence of bipartite pure states and of their superpositions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Concurrence of a state, by the concurrence vector and by purity.
    Concurrence { state: PathBuf },
    /// Overlap, marginal overlaps and pair concurrence C(ψ, φ).
    Pair { first: PathBuf, second: PathBuf },
    /// Orthogonality class of two or more states.
    Classify {
        #[arg(required = true, num_args = 2..)]
        states: Vec<PathBuf>,
        #[arg(long, default_value_t = CLASSIFY_TOLERANCE)]
        tol: f64,
    },
    /// Exact concurrence of a superposition and its bounds.
    Bounds {
        superposition: PathBuf,
        /// Use the bounds of a weaker class than the detected one.
        #[arg(long)]
        force_class: Option<OrthoClass>,
        #[arg(long)]
        two_qubit_refine: bool,
        /// Also report the reference pair bounds.
        #[arg(long)]
        reference: bool,
        #[arg(long, default_value_t = CLASSIFY_TOLERANCE)]
        tol: f64,
    },
    /// Monte Carlo check of every bound on a random ensemble.
    Verify {
        #[arg(long)]
        class: OrthoClass,
        #[arg(long, num_args = 2, value_names = ["A", "B"], default_values_t = [3, 3])]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_PARTITION_CAP)]
        partition_cap: usize,
    },
    /// CSV sweep of the 3x3 two-state example.
    Figure1 {
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Do not insert x = 1/√2 into the grid.
        #[arg(long)]
        no_anchor: bool,
    },
}

struct Outcome {
    code: i32,
    text: String,
}

fn json_out<T: Serialize>(value: &T, code: i32) -> Result<Outcome> {
    Ok(Outcome {
        code,
        text: serde_json::to_string_pretty(value)? + "\n",
    })
}

fn load_warned(path: &PathBuf, err: &mut dyn Write) -> Result<PureState> {
    let (s, w) = load_state(path)?;
    if let Some(w) = w {
        let _ = writeln!(err, "warning: {}: {w}", path.display());
    }
    Ok(s)
}

fn breach_if(bad: bool) -> i32 {
    if bad {
        EXIT_BREACH
    } else {
        EXIT_OK
    }
}

fn execute(cmd: Command, err: &mut dyn Write) -> Result<Outcome> {
    match cmd {
        Command::Concurrence { state } => {
            let s = load_warned(&state, err)?;
            let (v, p) = (concurrence(&s), concurrence_from_purity(&s));
            let diff = (v - p).abs();
            json_out(
                &json!({
                    "dims": [s.dim_a(), s.dim_b()],
                    "concurrence": v,
                    "concurrence_purity": p,
                    "difference": diff,
                }),
                // The purity route loses precision like sqrt(eps) near product states.
                breach_if(diff > 1e-6),
            )
        }
        Command::Pair { first, second } => {
            let x = load_warned(&first, err)?;
            let y = load_warned(&second, err)?;
            let o = inner_product(&x, &y)?;
            let cond = PairConditions::of(&x, &y)?;
            let (c, closed) = (pair_concurrence(&x, &y)?, pair_concurrence_closed_form(&x, &y)?);
            let diff = (c - closed).abs();
            json_out(
                &json!({
                    "overlap": [o.re, o.im],
                    "overlap_abs": o.norm(),
                    "trace_a": cond.trace_a,
                    "trace_b": cond.trace_b,
                    "class": cond.class(CLASSIFY_TOLERANCE),
                    "pair_concurrence": c,
                    "pair_concurrence_closed_form": closed,
                    "difference": diff,
                }),
                breach_if(diff > ROUTE_TOLERANCE),
            )
        }
        Command::Classify { states, tol } => {
            let set: Vec<PureState> = states.iter().map(|p| load_warned(p, err)).collect::<Result<_>>()?;
            let mut pairs = Vec::new();
            for i in 0..set.len() {
                for j in i + 1..set.len() {
                    let c = PairConditions::of(&set[i], &set[j])?;
                    pairs.push(json!({
                        "pair": [i, j],
                        "class": c.class(tol),
                        "overlap_abs": c.overlap,
                        "trace_a": c.trace_a,
                        "trace_b": c.trace_b,
                    }));
                }
            }
            json_out(&json!({ "class": classify_set(&set, tol)?, "pairs": pairs }), EXIT_OK)
        }
        Command::Bounds {
            superposition,
            force_class,
            two_qubit_refine,
            reference,
            tol,
        } => {
            let (s, warnings) = load_superposition(&superposition)?;
            for w in warnings {
                let _ = writeln!(err, "warning: {}: {w}", superposition.display());
            }
            let opts = BoundsOptions {
                tol,
                two_qubit_refine,
                reference,
                ..BoundsOptions::default()
            };
            let report = evaluate(&s, &opts, force_class)?;
            let exact = superpose_exact(&s)?;
            let route_gap = (exact.exact - exact.expansion).abs();
            let mut bad = !report.brackets(BRACKET_TOLERANCE) || route_gap > ROUTE_TOLERANCE;
            if let (Some(rl), Some(ru)) = (report.reference_lower, report.reference_upper) {
                bad |= report.upper > ru + BRACKET_TOLERANCE || report.lower < rl - BRACKET_TOLERANCE;
            }
            if bad {
                let _ = writeln!(
                    err,
                    "error: invariant breach (bracket slack {:e}, route gap {route_gap:e})",
                    report.bracket_slack()
                );
            }
            json_out(&report, breach_if(bad))
        }
        Command::Verify {
            class,
            dims,
            m,
            trials,
            seed,
            tol,
            partition_cap,
        } => {
            let spec = EnsembleSpec {
                dim_a: dims[0],
                dim_b: dims[1],
                m,
                class,
                trials,
                seed,
                tolerance: tol,
                partition_cap,
            };
            let report = verify(&spec)?;
            json_out(&report, breach_if(!report.passed()))
        }
        Command::Figure1 {
            samples,
            out,
            no_anchor,
        } => {
            let rows = figure1(samples, !no_anchor)?;
            let bad = rows.iter().any(|r| {
                r.lower > r.exact + BRACKET_TOLERANCE
                    || r.exact > r.upper + BRACKET_TOLERANCE
                    || r.upper > r.ref_upper + BRACKET_TOLERANCE
                    || r.lower < r.ref_lower - BRACKET_TOLERANCE
            });
            let text = match out {
                Some(path) => {
                    let mut w = BufWriter::new(File::create(&path)?);
                    write_csv(&mut w, &rows)?;
                    w.flush()?;
                    String::new()
                }
                None => {
                    let mut buf = Vec::new();
                    write_csv(&mut buf, &rows)?;
                    String::from_utf8(buf).expect("ascii csv")
                }
            };
            if bad {
                let _ = writeln!(err, "error: bracket or dominance breach in figure rows");
            }
            Ok(Outcome {
                code: breach_if(bad),
                text,
            })
        }
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match execute(cli.command, err) {
        Ok(o) => {
            if let Err(e) = out.write_all(o.text.as_bytes()) {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("cbounds").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--class", "nonsense"]).0, EXIT_USAGE);
        assert_eq!(call(&["concurrence", "/nonexistent/state.json"]).0, EXIT_USAGE);
        let (code, _, err) = call(&["verify", "--class", "arbitrary", "--m", "7"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("partition cap"));
        assert_eq!(call(&["figure1", "--samples", "1"]).0, EXIT_USAGE);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("figure1"));
    }

    #[test]
    fn small_verify_run() {
        let (code, out, _) = call(&["verify", "--class", "orthogonal", "--dims", "2", "3", "--trials", "5"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["violations"], 0);
        assert_eq!(v["trials_run"], 5);
    }
}
