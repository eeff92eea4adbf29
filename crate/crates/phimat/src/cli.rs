//! Command-line front end: parse instance files, run checks, render
//! reports as text or JSON.
//!
//! Exit codes: 0 when every check passes, 1 when a check ran and failed
//! (the report names the first witness), 2 for input or usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog;
use crate::correspondence::{
    matroid_to_whitehead_capped, roundtrip_matroid_capped, roundtrip_phi_capped,
    whitehead_to_matroid_capped, CorrespondenceReport,
};
use crate::error::{Error, Result};
use crate::instance::{emit_matroid, emit_phi, parse_instance, Instance, InstanceKind};
use crate::matroid::{ClosureAxiomReport, Matroid};
use crate::report::Witness;
use crate::whitehead::{
    AxiomReport, PhiSystem, PropertyReport, PropositionId, DEFAULT_EXHAUSTIVE_CAP,
    MAX_EXHAUSTIVE_CAP,
};

#[derive(Parser)]
#[command(
    name = "phimat",
    version,
    about = "Check phi-class geometries and matroids, and translate between them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Raise the exhaustive-check ground-size cap (default 10, max 12).
    #[arg(long, global = true, value_name = "N")]
    max_size: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmitKind {
    Flats,
    Independents,
    Rank,
}

#[derive(Subcommand)]
enum Command {
    /// Check axioms, maximality and the proposition suite of an instance.
    Check { file: PathBuf },
    /// Print the closure (common region) of a subset.
    Closure {
        file: PathBuf,
        /// Subset as whitespace-separated labels, e.g. --set "a b".
        #[arg(long)]
        set: String,
    },
    /// Print the phi-dimension (rank, for matroid files) of a subset.
    Dim {
        file: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// List the phi-prime subsets of a phi-system.
    Primes { file: PathBuf },
    /// List the phi-axial subsets of a phi-system.
    Axials { file: PathBuf },
    /// Translate a phi-system into its matroid, verifying every obligation.
    ToMatroid {
        file: PathBuf,
        /// Also print the resulting matroid in the chosen view.
        #[arg(long, value_enum)]
        emit: Option<EmitKind>,
    },
    /// Translate a matroid into a phi-system (flats become classes).
    FromMatroid {
        file: PathBuf,
        /// Also print the result: flats emit the phi-system file.
        #[arg(long, value_enum)]
        emit: Option<EmitKind>,
    },
    /// Run the round-trip appropriate to the file kind.
    Roundtrip { file: PathBuf },
    /// Print a named catalog instance in the file format.
    Catalog { name: String },
    /// Check the proposition suite of a phi-system.
    Props {
        file: PathBuf,
        /// Run a single proposition (W.12.21, W.12.23, W.12.37, Lemma1,
        /// W.13.11, tau).
        #[arg(long)]
        which: Option<String>,
    },
}

/// Parses arguments, runs the command, and writes the report to `out`.
pub fn run_command<I, T, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = write!(out, "{e}");
            return code;
        }
    };
    let format = cli.format;
    match execute(cli, out) {
        Ok(code) => code,
        Err(err) => {
            let code = err.exit_code();
            match format {
                Format::Text => {
                    let _ = writeln!(out, "error: {err}");
                }
                Format::Json => {
                    let payload =
                        serde_json::json!({ "error": err.to_string(), "exit_code": code });
                    let _ = writeln!(out, "{}", to_pretty(&payload));
                }
            }
            code
        }
    }
}

fn to_pretty<S: Serialize>(value: &S) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn load(file: &PathBuf) -> Result<Instance> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::Parse {
        line: 0,
        reason: format!("cannot read {}: {e}", file.display()),
    })?;
    parse_instance(&text)
}

fn parse_set(instance: &Instance, set: &str) -> Result<crate::sets::Subset> {
    instance.ground().subset_from_labels(set.split_whitespace())
}

fn cap_of(cli_max: Option<usize>) -> Result<usize> {
    match cli_max {
        None => Ok(DEFAULT_EXHAUSTIVE_CAP),
        Some(n) if n <= MAX_EXHAUSTIVE_CAP => Ok(n),
        Some(n) => Err(Error::SizeOutOfRange {
            n,
            lo: 1,
            hi: MAX_EXHAUSTIVE_CAP,
        }),
    }
}

fn execute<W: Write>(cli: Cli, out: &mut W) -> Result<i32> {
    let cap = cap_of(cli.max_size)?;
    let format = cli.format;
    match cli.command {
        Command::Check { file } => match load(&file)? {
            Instance::Phi(sys) => check_phi(&sys, cap, format, out),
            Instance::Matroid(m) => check_matroid(&m, cap, format, out),
        },
        Command::Closure { file, set } => {
            let instance = load(&file)?;
            let u = parse_set(&instance, &set)?;
            let closed = match &instance {
                Instance::Phi(sys) => sys.common_region(&u)?,
                Instance::Matroid(m) => m.closure(&u)?,
            };
            emit_labels(format, "closure", &u, closed.labels(), out)?;
            Ok(0)
        }
        Command::Dim { file, set } => {
            let instance = load(&file)?;
            let u = parse_set(&instance, &set)?;
            let value = match &instance {
                Instance::Phi(sys) => sys.dimension(&u)?,
                Instance::Matroid(m) => m.rank(&u)?,
            };
            match format {
                Format::Text => writeln!(out, "{value}").ok(),
                Format::Json => {
                    let payload = serde_json::json!({ "set": u.labels(), "dimension": value });
                    writeln!(out, "{}", to_pretty(&payload)).ok()
                }
            };
            Ok(0)
        }
        Command::Primes { file } => list_family(&file, format, true, out),
        Command::Axials { file } => list_family(&file, format, false, out),
        Command::ToMatroid { file, emit } => {
            let Instance::Phi(sys) = load(&file)? else {
                return Err(Error::Parse {
                    line: 0,
                    reason: "to-matroid requires a phi-system file".into(),
                });
            };
            let (m, report) = whitehead_to_matroid_capped(&sys, cap)?;
            let emitted = emit.map(|kind| emit_view(&m, kind));
            write_correspondence(format, &report, emitted.as_deref(), out);
            Ok(exit_of(report.overall()))
        }
        Command::FromMatroid { file, emit } => {
            let Instance::Matroid(m) = load(&file)? else {
                return Err(Error::Parse {
                    line: 0,
                    reason: "from-matroid requires a matroid file".into(),
                });
            };
            let (sys, report) = matroid_to_whitehead_capped(&m, cap)?;
            let emitted = emit.map(|kind| match kind {
                EmitKind::Flats => emit_phi(&sys),
                EmitKind::Independents => emit_matroid(&m, InstanceKind::MatroidIndependents),
                EmitKind::Rank => rank_listing(&m),
            });
            write_correspondence(format, &report, emitted.as_deref(), out);
            Ok(exit_of(report.overall()))
        }
        Command::Roundtrip { file } => {
            let report = match load(&file)? {
                Instance::Phi(sys) => roundtrip_phi_capped(&sys, cap)?,
                Instance::Matroid(m) => roundtrip_matroid_capped(&m, cap)?,
            };
            write_correspondence(format, &report, None, out);
            Ok(exit_of(report.overall()))
        }
        Command::Catalog { name } => {
            let entry = catalog::entry(&name)?;
            write!(out, "{}", entry.instance.emit()).ok();
            Ok(0)
        }
        Command::Props { file, which } => {
            let Instance::Phi(sys) = load(&file)? else {
                return Err(Error::Parse {
                    line: 0,
                    reason: "props requires a phi-system file".into(),
                });
            };
            let reports: Vec<PropertyReport> = match which {
                Some(name) => {
                    let id: PropositionId = name.parse().map_err(|reason| Error::Parse {
                        line: 0,
                        reason,
                    })?;
                    vec![sys.check_proposition_capped(id, cap)?]
                }
                None => sys.check_all_propositions(cap)?,
            };
            let overall = reports.iter().all(|r| r.passed());
            match format {
                Format::Text => {
                    for r in &reports {
                        writeln!(out, "{r}").ok();
                    }
                    writeln!(out, "overall: {}", pass_str(overall)).ok();
                }
                Format::Json => {
                    let payload =
                        serde_json::json!({ "propositions": reports, "overall": overall });
                    writeln!(out, "{}", to_pretty(&payload)).ok();
                }
            }
            Ok(exit_of(overall))
        }
    }
}

fn exit_of(pass: bool) -> i32 {
    if pass {
        0
    } else {
        1
    }
}

fn pass_str(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

fn emit_labels<W: Write>(
    format: Format,
    key: &str,
    input: &crate::sets::Subset,
    labels: Vec<&str>,
    out: &mut W,
) -> Result<()> {
    match format {
        Format::Text => {
            writeln!(out, "{}", labels.join(" ")).ok();
        }
        Format::Json => {
            let payload = serde_json::json!({ "set": input.labels(), key: labels });
            writeln!(out, "{}", to_pretty(&payload)).ok();
        }
    }
    Ok(())
}

fn list_family<W: Write>(
    file: &PathBuf,
    format: Format,
    primes: bool,
    out: &mut W,
) -> Result<i32> {
    let Instance::Phi(sys) = load(file)? else {
        return Err(Error::Parse {
            line: 0,
            reason: "primes/axials require a phi-system file".into(),
        });
    };
    let fam = if primes { sys.primes() } else { sys.axials() };
    match format {
        Format::Json => {
            let key = if primes { "primes" } else { "axials" };
            let payload = serde_json::json!({ key: fam });
            writeln!(out, "{}", to_pretty(&payload)).ok();
        }
        Format::Text => {
            for s in fam.members() {
                writeln!(out, "{}", s.labels().join(" ")).ok();
            }
        }
    }
    Ok(0)
}

fn emit_view(m: &Matroid, kind: EmitKind) -> String {
    match kind {
        EmitKind::Independents => emit_matroid(m, InstanceKind::MatroidIndependents),
        EmitKind::Flats => emit_matroid(m, InstanceKind::MatroidFlats),
        EmitKind::Rank => rank_listing(m),
    }
}

/// Rank of every flat, one line each, in canonical order.
fn rank_listing(m: &Matroid) -> String {
    let mut out = String::new();
    for f in m.flats().members() {
        let r = m.rank(&f).expect("same ground");
        out.push_str(&format!("rank {f}: {r}\n"));
    }
    out
}

#[derive(Serialize)]
struct MaximalityOut {
    canonical: bool,
    strict: bool,
    readings_agree_everywhere: bool,
}

#[derive(Serialize)]
struct PhiCheckOutput {
    axioms: AxiomReport,
    phi_maximal: MaximalityOut,
    propositions: Vec<PropertyReport>,
    overall: bool,
}

fn check_phi<W: Write>(sys: &PhiSystem, cap: usize, format: Format, out: &mut W) -> Result<i32> {
    if sys.ground().size() == 0 {
        return Err(Error::Parse {
            line: 0,
            reason: "check requires a nonempty ground set".into(),
        });
    }
    let axioms = sys.check_axioms_capped(cap)?;
    let full = sys.ground().full_subset();
    let maximality = sys.phi_maximality(&full)?;
    let disagreement = sys.maximality_disagreement();
    let propositions = sys.check_all_propositions(cap)?;

    let overall = axioms.overall()
        && maximality.equivalent_primes_axial
        && propositions.iter().all(|r| r.passed());

    match format {
        Format::Json => {
            let payload = PhiCheckOutput {
                axioms,
                phi_maximal: MaximalityOut {
                    canonical: maximality.equivalent_primes_axial,
                    strict: maximality.all_primes_axial,
                    readings_agree_everywhere: disagreement.is_none(),
                },
                propositions,
                overall,
            };
            writeln!(out, "{}", to_pretty(&payload)).ok();
        }
        Format::Text => {
            writeln!(out, "axioms:").ok();
            for check in axioms.entries() {
                writeln!(out, "  {check}").ok();
            }
            writeln!(
                out,
                "phi-maximal (full set):          {}",
                pass_str(maximality.equivalent_primes_axial)
            )
            .ok();
            writeln!(
                out,
                "phi-maximal (strict reading):    {}",
                pass_str(maximality.all_primes_axial)
            )
            .ok();
            match &disagreement {
                None => {
                    writeln!(out, "maximality readings agree on every subset").ok();
                }
                Some(s) => {
                    writeln!(out, "maximality readings disagree at {s}").ok();
                }
            }
            writeln!(out, "propositions:").ok();
            for r in &propositions {
                writeln!(out, "  {r}").ok();
            }
            writeln!(out, "overall: {}", pass_str(overall)).ok();
        }
    }
    Ok(exit_of(overall))
}

#[derive(Serialize)]
struct MatroidCheckOutput {
    independence_axioms: &'static str,
    closure_axioms: ClosureAxiomReport,
    simple: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    simplicity_witness: Option<Witness>,
    overall: bool,
}

fn check_matroid<W: Write>(m: &Matroid, cap: usize, format: Format, out: &mut W) -> Result<i32> {
    // I1-I3 already validated while loading the file.
    let closure_axioms = m.closure_table().check_closure_axioms(cap)?;
    let witness = m.simplicity_witness();
    let overall = closure_axioms.overall();

    match format {
        Format::Json => {
            let payload = MatroidCheckOutput {
                independence_axioms: "pass",
                closure_axioms,
                simple: witness.is_none(),
                simplicity_witness: witness,
                overall,
            };
            writeln!(out, "{}", to_pretty(&payload)).ok();
        }
        Format::Text => {
            writeln!(out, "independence axioms:             pass (validated at load)").ok();
            writeln!(out, "closure axioms:").ok();
            for check in closure_axioms.entries() {
                writeln!(out, "  {check}").ok();
            }
            match &witness {
                None => {
                    writeln!(out, "simple:                          yes").ok();
                }
                Some(w) => {
                    writeln!(out, "simple:                          no ({w})").ok();
                }
            }
            writeln!(out, "overall: {}", pass_str(overall)).ok();
        }
    }
    Ok(exit_of(overall))
}

fn write_correspondence<W: Write>(
    format: Format,
    report: &CorrespondenceReport,
    emitted: Option<&str>,
    out: &mut W,
) {
    match format {
        Format::Text => {
            writeln!(out, "{report}").ok();
            if let Some(text) = emitted {
                writeln!(out).ok();
                write!(out, "{text}").ok();
            }
        }
        Format::Json => {
            let payload = serde_json::json!({
                "report": report,
                "overall": report.overall(),
                "emit": emitted,
            });
            writeln!(out, "{}", to_pretty(&payload)).ok();
        }
    }
}
