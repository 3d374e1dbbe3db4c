//! Command-line front end. [`run`] is the whole program minus process I/O.

mod goldens;

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::corpus;
use crate::error::{Error, Result};
use crate::pmcore::{
    parse_polymatroid, to_document, Limits, Polymatroid, DEFAULT_MAX_CHAINS, DEFAULT_MAX_N,
};
use crate::pmcore::polymatroid::ABSOLUTE_MAX_N;
use crate::polytope::{check_indicator_relation, check_valuative_g, SignedDecomposition};
use crate::qsym::QSymFn;
use crate::rational::render_rational;
use crate::registry::{Input, Options, Registry};

pub use goldens::GOLDENS;

/// Exact invariants of discrete polymatroids.
#[derive(Debug, Parser)]
#[command(name = "polyinv", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Clone, Args)]
pub struct Flags {
    /// Input document: a path, `-` for stdin, or inline JSON. Repeat for `sum`.
    #[arg(long, short, global = true, value_name = "PATH|-")]
    pub input: Vec<String>,
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Ground-set size cap for subset enumeration.
    #[arg(long, global = true, value_name = "K")]
    pub max_n: Option<usize>,
    /// Ground-set size cap for chain enumeration.
    #[arg(long, global = true, value_name = "K")]
    pub max_chains: Option<usize>,
    /// Required to raise either cap above its default.
    #[arg(long, global = true)]
    pub allow_large: bool,
    /// Grid denominator for `decomp-check`.
    #[arg(long, global = true, value_name = "N", default_value_t = 2)]
    pub grid_denom: u64,
    /// Schur degree cutoff, or the number of terms for `rees`.
    #[arg(long, global = true, value_name = "D")]
    pub truncate: Option<usize>,
}

impl Default for Flags {
    fn default() -> Self {
        Flags {
            input: Vec::new(),
            json: false,
            max_n: None,
            max_chains: None,
            allow_large: false,
            grid_denom: 2,
            truncate: None,
        }
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Check the polymatroid axioms.
    Validate,
    /// Symmetric function P[X].
    P,
    /// H[X](q,t).
    H,
    /// Quasi-symmetric G[X] in the U basis.
    G,
    /// Tutte polynomial.
    Tutte,
    /// Rank generating function.
    Rankgen,
    /// H of direct powers, up to --truncate (default 2).
    Rees,
    /// Matroid quasi-symmetric function F in the M basis.
    F,
    /// tau of a qsym document, or of G[X].
    Tau,
    /// xi of a qsym document, or of G[X].
    Xi,
    /// theta of a qsym document, or of G[X].
    Theta,
    /// Dual matroid, as a rank-table document.
    Dual,
    /// Direct sum of all inputs, as a rank-table document.
    Sum,
    /// Check a signed decomposition of base polytopes.
    DecompCheck,
    /// Recompute every bundled example and compare with the stored output.
    Examples {
        /// Write the current outputs into this directory instead of comparing.
        #[arg(long, value_name = "DIR")]
        write: Option<PathBuf>,
    },
}

impl Command {
    fn invariant_name(&self) -> Option<&'static str> {
        Some(match self {
            Command::P => "p",
            Command::H => "h",
            Command::G => "g",
            Command::Tutte => "tutte",
            Command::Rankgen => "rankgen",
            Command::Rees => "rees",
            Command::F => "f",
            Command::Tau => "tau",
            Command::Xi => "xi",
            Command::Theta => "theta",
            _ => return None,
        })
    }

    fn from_name(name: &str) -> Result<Command> {
        Cli::try_parse_from(["polyinv", name])
            .map(|c| c.command)
            .map_err(|_| Error::Unknown {
                kind: "subcommand",
                name: name.to_string(),
            })
    }
}

/// Exit status plus the text destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 64,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(0, text)
            };
        }
    };
    match dispatch(&cli, stdin) {
        Ok(out) => out,
        Err(e) => Outcome::error(&e),
    }
}

fn limits(flags: &Flags) -> Result<Limits> {
    let max_n = flags.max_n.unwrap_or(DEFAULT_MAX_N);
    let max_chains = flags.max_chains.unwrap_or(DEFAULT_MAX_CHAINS);
    if (max_n > DEFAULT_MAX_N || max_chains > DEFAULT_MAX_CHAINS) && !flags.allow_large {
        return Err(Error::Malformed(format!(
            "raising --max-n above {DEFAULT_MAX_N} or --max-chains above {DEFAULT_MAX_CHAINS} requires --allow-large"
        )));
    }
    if max_n > ABSOLUTE_MAX_N || max_chains > ABSOLUTE_MAX_N {
        return Err(Error::Malformed(format!("caps cannot exceed {ABSOLUTE_MAX_N}")));
    }
    Ok(Limits { max_n, max_chains })
}

fn read_documents(flags: &Flags, stdin: &mut dyn Read) -> Result<Vec<String>> {
    let read_stdin = |stdin: &mut dyn Read| -> Result<String> {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Error::Malformed(format!("cannot read stdin: {e}")))?;
        Ok(s)
    };
    if flags.input.is_empty() {
        return Ok(vec![read_stdin(stdin)?]);
    }
    flags
        .input
        .iter()
        .map(|src| {
            let trimmed = src.trim_start();
            if src == "-" {
                read_stdin(stdin)
            } else if trimmed.starts_with('{') || trimmed.starts_with('[') {
                Ok(src.clone())
            } else {
                std::fs::read_to_string(src).map_err(|e| Error::Malformed(format!("cannot read `{src}`: {e}")))
            }
        })
        .collect()
}

fn single(docs: &[String]) -> Result<&str> {
    match docs {
        [one] => Ok(one),
        _ => Err(Error::Malformed(format!("expected one input document, got {}", docs.len()))),
    }
}

/// Reads a polymatroid or `{"type": "qsym", ...}` document. Polymatroids are
/// checked against the axioms.
pub fn parse_input(text: &str) -> Result<Input> {
    let doc: Value = serde_json::from_str(text)?;
    if doc.get("type").and_then(Value::as_str) == Some("qsym") {
        return Ok(Input::QSym(serde_json::from_value::<QSymFn>(doc)?));
    }
    Ok(Input::Polymatroid(checked(&doc)?))
}

fn checked(doc: &Value) -> Result<Polymatroid> {
    let pm = parse_polymatroid(doc)?;
    pm.validate().map_err(Error::Invalid)?;
    Ok(pm)
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome> {
    if let Command::Examples { write } = &cli.command {
        return examples(write.as_deref());
    }
    let docs = read_documents(&cli.flags, stdin)?;
    execute(&cli.command, &cli.flags, &docs)
}

fn pretty(v: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

/// Runs one non-`examples` command on already-loaded documents.
pub fn execute(command: &Command, flags: &Flags, docs: &[String]) -> Result<Outcome> {
    let limits = limits(flags)?;
    if let Some(name) = command.invariant_name() {
        let input = parse_input(single(docs)?)?;
        let opts = Options {
            limits,
            truncate: flags.truncate,
        };
        let out = Registry::standard().get(name)?.compute(&input, &opts)?;
        let text = if flags.json { pretty(&out)? } else { format!("{out}\n") };
        return Ok(Outcome::ok(0, text));
    }
    match command {
        Command::Validate => {
            let doc: Value = serde_json::from_str(single(docs)?)?;
            let pm = parse_polymatroid(&doc)?;
            let verdict = pm.validate();
            let text = match (&verdict, flags.json) {
                (Ok(()), true) => pretty(&json!({
                    "valid": true, "n": pm.n(), "rank": pm.total_rank(), "matroid": pm.is_matroid(),
                }))?,
                (Err(v), true) => pretty(&json!({"valid": false, "violation": v.to_string()}))?,
                (Ok(()), false) => format!(
                    "ok: {} on {} elements, rank {}\n",
                    if pm.is_matroid() { "matroid" } else { "polymatroid" },
                    pm.n(),
                    pm.total_rank()
                ),
                (Err(v), false) => format!("invalid: {v}\n"),
            };
            Ok(Outcome::ok(if verdict.is_ok() { 0 } else { 2 }, text))
        }
        Command::Dual => {
            let pm = checked(&serde_json::from_str(single(docs)?)?)?;
            Ok(Outcome::ok(0, pretty(&to_document(&pm.dual()?))?))
        }
        Command::Sum => {
            let mut acc = Polymatroid::empty();
            for d in docs {
                acc = acc.direct_sum(&checked(&serde_json::from_str(d)?)?)?;
            }
            Ok(Outcome::ok(0, pretty(&to_document(&acc))?))
        }
        Command::DecompCheck => decomp_check(single(docs)?, flags, &limits),
        _ => unreachable!("invariant commands handled above"),
    }
}

fn decomp_check(text: &str, flags: &Flags, limits: &Limits) -> Result<Outcome> {
    let dec = SignedDecomposition::from_document(&serde_json::from_str(text)?)?;
    let grid = check_indicator_relation(&dec, flags.grid_denom)?;
    let val = check_valuative_g(&dec, limits)?;
    let code = if grid.holds && val.holds { 0 } else { 2 };
    let witness = grid
        .witness
        .as_ref()
        .map(|(p, v)| (p.iter().map(render_rational).collect::<Vec<_>>(), render_rational(v)));
    if flags.json {
        let out = json!({
            "indicator": {
                "holds": grid.holds,
                "grid_denom": flags.grid_denom,
                "points_checked": grid.points_checked,
                "witness": witness.as_ref().map(|(p, v)| json!({"point": p, "value": v})),
            },
            "valuative_g": {"holds": val.holds, "residue": val.residue},
        });
        return Ok(Outcome::ok(code, pretty(&out)?));
    }
    let mut out = String::new();
    match &witness {
        None => writeln!(
            out,
            "indicator relation: holds on grid 1/{} ({} points)",
            flags.grid_denom, grid.points_checked
        ),
        Some((p, v)) => writeln!(out, "indicator relation: fails at ({}) with value {v}", p.join(", ")),
    }
    .expect("write to string");
    if val.holds {
        out.push_str("valuative G: holds\n");
    } else {
        writeln!(out, "valuative G: fails, residue {}", val.residue).expect("write to string");
    }
    Ok(Outcome::ok(code, out))
}

/// Output of one bundled example, exactly as the CLI renders it.
pub fn render_example(fixture: &str, command: &str) -> Result<Outcome> {
    let doc = corpus::document(fixture)?.to_string();
    execute(&Command::from_name(command)?, &Flags::default(), &[doc])
}

fn examples(write: Option<&std::path::Path>) -> Result<Outcome> {
    let mut out = String::new();
    let mut failures = 0;
    for &(fixture, command, expected) in GOLDENS {
        let got = render_example(fixture, command)?.stdout;
        if let Some(dir) = write {
            let path = dir.join(format!("{fixture}.{command}.txt"));
            std::fs::write(&path, &got)
                .map_err(|e| Error::Malformed(format!("cannot write `{}`: {e}", path.display())))?;
            writeln!(out, "wrote {}", path.display()).expect("write to string");
        } else if got == expected {
            writeln!(out, "ok    {fixture} {command}").expect("write to string");
        } else {
            failures += 1;
            writeln!(out, "FAIL  {fixture} {command}\n  expected: {}\n  got:      {}", expected.trim_end(), got.trim_end())
                .expect("write to string");
        }
    }
    if write.is_none() {
        writeln!(out, "{} examples, {failures} mismatches", GOLDENS.len()).expect("write to string");
    }
    Ok(Outcome::ok(if failures == 0 { 0 } else { 2 }, out))
}
