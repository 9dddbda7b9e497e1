use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use mwlforge_core::mwl::tables::TableKind;
use mwlforge_core::weier::Model;

use crate::curvefile::{CurveDecl, CurveSet};
use crate::data::MeetsFile;
use crate::error::{CliError, CliResult, ExitKind};
use crate::render::render_text;
use crate::report::{self, EmbeddingChoice, Lattice, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "mwlforge", version, about = "Mordell-Weil lattices of elliptic fibrations from Niemeier frames")]
pub struct RunConfig {
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Frame invariants of an embedding of A5 + A1.
    Frame {
        #[arg(long, value_enum, ignore_case = true)]
        lattice: Lattice,
        #[arg(long, value_enum, default_value = "i1")]
        embedding: EmbeddingChoice,
    },
    /// Section tables of a frame or of a Weierstrass fibration.
    Tables {
        #[arg(long, value_enum, ignore_case = true, conflicts_with = "fibration")]
        lattice: Option<Lattice>,
        #[arg(long, value_enum, default_value = "i1")]
        embedding: EmbeddingChoice,
        /// `36`, `40` or `40bis`, read from the meets data.
        #[arg(long)]
        fibration: Option<String>,
    },
    /// Singular fibers, section orders and torsion of a Weierstrass model.
    Fibers {
        /// Built-in model name or a curve declared in `--curves`.
        #[arg(long)]
        model: String,
        #[arg(long)]
        curves: Option<PathBuf>,
    },
    /// Verify birational maps and parametrized components.
    VerifyMaps {
        #[arg(long)]
        curves: Option<PathBuf>,
    },
    /// Glue-code automorphisms and orbits of embeddings.
    VerifyAuts {
        #[arg(long, value_enum, ignore_case = true)]
        lattice: Lattice,
    },
    /// Integral equivalence of binary and higher quadratic forms.
    Qform {
        #[arg(long, value_enum, ignore_case = true, required_unless_present = "gram")]
        lattice: Option<Lattice>,
        /// Gram matrix as `a,b;c,d`.
        #[arg(long, requires = "against", conflicts_with = "lattice")]
        gram: Option<String>,
        #[arg(long)]
        against: Option<String>,
        /// Expected outcome; a mismatch fails the run.
        #[arg(long, value_enum)]
        expect: Option<Expectation>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Expectation {
    Equivalent,
    Inequivalent,
}

fn curve_set(path: &Option<PathBuf>) -> CliResult<CurveSet> {
    match path {
        Some(p) => CurveSet::read(p),
        None => CurveSet::builtin(),
    }
}

fn model_fibration<'a>(data: &'a MeetsFile, decl: &CurveDecl, builtin: bool) -> Option<&'a crate::data::Fibration> {
    if !builtin {
        return None;
    }
    let m: Model = decl.curve.name.parse().ok()?;
    data.for_model(m)
}

pub fn run(cfg: &RunConfig) -> CliResult<Report> {
    Ok(match &cfg.command {
        Command::Frame { lattice, embedding } => Report::Frame(report::frame_report(*lattice, *embedding)?),
        Command::Tables {
            lattice,
            embedding,
            fibration,
        } => match (lattice, fibration) {
            (_, Some(f)) => Report::Fibration(report::fibration_report(&MeetsFile::load()?, f)?),
            (Some(l), None) => Report::Table(report::table_report(report::table_kind(*l, *embedding)?)?),
            (None, None) => return Err(CliError::BadInput("tables needs --lattice or --fibration".into())),
        },
        Command::Fibers { model, curves } => {
            let set = curve_set(curves)?;
            let decl = set.curve(model)?;
            let data = MeetsFile::load()?;
            Report::Fibers(report::fibers_report(decl, model_fibration(&data, decl, curves.is_none()))?)
        }
        Command::VerifyMaps { curves } => Report::Maps(report::maps_report(&curve_set(curves)?)?),
        Command::VerifyAuts { lattice } => Report::Auts(report::auts_report(*lattice)?),
        Command::Qform {
            lattice,
            gram,
            against,
            expect,
        } => {
            let expected = expect.map(|e| e == Expectation::Equivalent);
            match (lattice, gram, against) {
                (_, Some(a), Some(b)) => Report::Qform(report::qform_custom(a, b, expected)?),
                (Some(l), _, _) => Report::Qform(report::qform_report(*l)?),
                _ => return Err(CliError::BadInput("qform needs --lattice or --gram with --against".into())),
            }
        }
    })
}

pub fn render(cfg: &RunConfig, r: &Report) -> String {
    match cfg.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => render_text(r),
    }
}

fn emit(cfg: &RunConfig, text: &str) -> CliResult<()> {
    match &cfg.output {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn fail(e: &CliError) -> i32 {
    eprintln!("{}", e.record());
    e.kind().code()
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { ExitKind::BadInput.code() } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let r = match run(&cfg) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    if let Err(e) = emit(&cfg, &render(&cfg, &r)) {
        return fail(&e);
    }
    let failed = r.failed();
    if failed.is_empty() {
        return ExitKind::Pass.code();
    }
    let names: Vec<&str> = failed.iter().map(|c| c.name.as_str()).collect();
    fail(&CliError::Invariant(format!("failed checks: {}", names.join("; "))))
}

/// Every table kind, for callers generating goldens.
pub fn table_kinds() -> [TableKind; 3] {
    TableKind::ALL
}
