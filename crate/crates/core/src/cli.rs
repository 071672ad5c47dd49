//! The `minsing` command line.
//!
//! Exit status: 0 on success, 1 on domain errors (invalid graph, failed
//! identity, ...), 2 when verification finds a mismatch, 64 on usage errors.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::discriminant::{check_representative, emit_representative};
use crate::dot::export_dot;
use crate::families::{generate_raw, FamilySpec};
use crate::graph::{validate_graph, RawGraph, ResolutionGraph};
use crate::oracle::{contact_trace, default_truncation, oracle_class, parse_binomial_product};
use crate::report::{AnalysisReport, DiscriminantReport, RepresentativeJson};
use crate::{analyze, Analysis, Error};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "minsing",
    version,
    about = "Generic discriminants of minimal surface singularities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a graph is the minimal resolution graph of a minimal singularity
    Validate {
        /// graph file (JSON or text), `-` for standard input
        input: String,
    },
    /// Depths, central elements, canonical cycle and polar branch counts
    Analyze {
        input: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Equisingularity class of the generic discriminant
    Discriminant {
        input: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// A plane curve in the discriminant's equisingularity class
    EmitEquation {
        input: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Re-derive a discriminant report and check it with the blow-up oracle
    Verify {
        /// discriminant report in JSON, `-` for standard input
        report: String,
        /// print the blow-up trace of every pair of representative branches
        #[arg(long)]
        trace: bool,
        /// also check a product of binomials such as `(x^4+y^4)(y^2+x^4)`
        #[arg(long)]
        equation: Option<String>,
    },
    /// Graphviz rendering of the analysed graph
    ExportDot { input: String },
    /// Print the graph of a standard family as JSON
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum FamilyCommand {
    /// chain of n (-2)-curves
    An { n: u32 },
    /// single curve of weight n
    Cone { n: u32 },
    /// Hirzebruch-Jung chain of n/q
    Cyclic { n: u32, q: u32 },
    /// centre with arms of (-2)-curves, lengths comma separated
    Star {
        #[arg(value_delimiter = ',', required = true)]
        arms: Vec<u32>,
    },
}

impl FamilyCommand {
    fn spec(&self) -> FamilySpec {
        match self {
            FamilyCommand::An { n } => FamilySpec::AnChain(*n),
            FamilyCommand::Cone { n } => FamilySpec::ConeRnc(*n),
            FamilyCommand::Cyclic { n, q } => FamilySpec::CyclicQuotient(*n, *q),
            FamilyCommand::Star { arms } => FamilySpec::Star(arms.clone()),
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_input(&mut self, path: &str) -> Result<String, Failure> {
        let mut text = String::new();
        if path == "-" {
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
        } else {
            text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
        }
        Ok(text)
    }

    fn graph(&mut self, path: &str) -> Result<ResolutionGraph, Failure> {
        let text = self.read_input(path)?;
        let raw = RawGraph::parse(&text).map_err(Error::from)?;
        Ok(validate_graph(&raw).map_err(Error::from)?)
    }

    fn analysis(&mut self, path: &str) -> Result<Analysis, Failure> {
        let g = self.graph(path)?;
        Ok(analyze(&g)?)
    }

    fn print(&mut self, text: &str) -> Result<(), Failure> {
        self.out
            .write_all(text.as_bytes())
            .and_then(|_| {
                if text.ends_with('\n') {
                    Ok(())
                } else {
                    self.out.write_all(b"\n")
                }
            })
            .map_err(|e| Failure::Usage(format!("cannot write output: {e}")))
    }
}

fn dispatch(command: &Command, io: &mut Io<'_>) -> Result<(), Failure> {
    match command {
        Command::Validate { input } => {
            let g = io.graph(input)?;
            io.print(&format!("ok: {} vertices, {} edges", g.len(), g.edges().len()))
        }
        Command::Analyze { input, format } => {
            let report = AnalysisReport::new(&io.analysis(input)?);
            match format {
                Format::Json => io.print(&report.to_json()),
                Format::Table => io.print(&report.to_table()),
            }
        }
        Command::Discriminant { input, format } => {
            let a = io.analysis(input)?;
            let rep = emit_representative(&a.class).map_err(Error::from)?;
            let report = DiscriminantReport::new(&a, Some(&rep));
            match format {
                Format::Json => io.print(&report.to_json()),
                Format::Table => io.print(&report.to_table()),
            }
        }
        Command::EmitEquation { input, format } => {
            let a = io.analysis(input)?;
            let rep = emit_representative(&a.class).map_err(Error::from)?;
            match format {
                Format::Json => io.print(
                    &serde_json::to_string_pretty(&RepresentativeJson::new(&rep)).expect("representative serialises"),
                ),
                Format::Table => {
                    let mut text = String::new();
                    for (id, x, y) in rep.parametrizations() {
                        text.push_str(&format!("{id}: x = {x}, y = {y}\n"));
                    }
                    text.push_str(&rep.polynomial());
                    io.print(&text)
                }
            }
        }
        Command::Verify {
            report,
            trace,
            equation,
        } => verify(io, report, *trace, equation.as_deref()),
        Command::ExportDot { input } => {
            let a = io.analysis(input)?;
            io.print(&export_dot(&a.depths, &a.counts))
        }
        Command::Family { family } => {
            let raw = generate_raw(&family.spec()).map_err(Error::from)?;
            validate_graph(&raw).map_err(Error::from)?;
            io.print(&raw.to_json())
        }
    }
}

fn verify(io: &mut Io<'_>, path: &str, trace: bool, equation: Option<&str>) -> Result<(), Failure> {
    let text = io.read_input(path)?;
    let stored = DiscriminantReport::from_json(&text).map_err(|e| Failure::Usage(e.to_string()))?;
    let raw = stored.graph.to_raw().map_err(Error::from)?;
    let a = analyze(&validate_graph(&raw).map_err(Error::from)?)?;
    let fresh = DiscriminantReport::new(&a, None);
    if let Some(diff) = stored.first_difference(&fresh) {
        return Err(Failure::Mismatch(format!("report disagrees with the graph: {diff}")));
    }
    io.print(&format!(
        "class: {} branches and {} contacts re-derived",
        fresh.branches.len(),
        fresh.contacts.len()
    ))?;

    let max_depth = a.class.branches().iter().map(|b| b.depth).max().unwrap_or(1);
    let rep = match &stored.representative {
        Some(r) => {
            let branches = r.emitted_branches().map_err(|e| Failure::Usage(e.to_string()))?;
            check_representative(branches, &a.class, default_truncation(max_depth)).map_err(|e| {
                let e = Error::from(e);
                Failure::Mismatch(format!("representative: {}: {e}", e.kind()))
            })?
        }
        None => emit_representative(&a.class).map_err(Error::from)?,
    };
    if let Some(d) = &rep.verification.discrepancy {
        return Err(Failure::Mismatch(format!("representative: {d}")));
    }
    io.print(&format!(
        "representative: {} branches and {} pairs agree",
        rep.verification.branches_checked, rep.verification.pairs_checked
    ))?;

    if trace {
        let params = rep.param_branches();
        for i in 0..params.len() {
            for j in i + 1..params.len() {
                let t = contact_trace(&params[i], &params[j]).map_err(Error::from)?;
                let mut text = format!(
                    "{} / {}: contact {}, intersection {}\n",
                    params[i].id, params[j].id, t.contact, t.noether_sum
                );
                for (k, step) in t.steps.iter().enumerate() {
                    text.push_str(&format!(
                        "  point {k}: multiplicities {}, {}; directions {} {}; {}\n",
                        step.multiplicities.0,
                        step.multiplicities.1,
                        step.directions.0,
                        step.directions.1,
                        step.chart.as_deref().unwrap_or("separated")
                    ));
                }
                io.print(&text)?;
            }
        }
    }

    if let Some(eq) = equation {
        let branches = parse_binomial_product(eq, default_truncation(max_depth)).map_err(Error::from)?;
        let theirs = oracle_class(&branches).map_err(Error::from)?.shape();
        let ours = a.class.shape();
        if !ours.equivalent(&theirs) {
            return Err(Failure::Mismatch(format!(
                "equation has class {}, graph gives {}",
                theirs.canonical_form(),
                ours.canonical_form()
            )));
        }
        io.print(&format!("equation: equisingular ({})", ours.canonical_form()))?;
    }
    Ok(())
}

/// Run the command line with explicit streams; returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let mut io = Io { stdin, out: stdout };
    match dispatch(&cli.command, &mut io) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "error: {}: {e}", e.kind());
            EXIT_DOMAIN
        }
        Err(Failure::Mismatch(msg)) => {
            let _ = writeln!(stderr, "mismatch: {msg}");
            EXIT_MISMATCH
        }
    }
}
