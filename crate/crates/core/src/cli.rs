//! Command-line front end. Exit codes: 0 success, 1 domain or I/O error,
//! 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Result;
use crate::export::{self, Format};
use crate::plot::{self, PlotKind, PlotRequest};
use crate::report::{build_report, SpectrumReport, TableOne};
use crate::welldomain::{ModelKind, WellSpec};

#[derive(Debug, Parser)]
#[command(
    name = "flexwell",
    version,
    about = "Square-well bound states under the fourth-order flexural-shear and second-order Schrödinger equations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Eigenvalues of a finite well of strength bL
    Solve {
        #[arg(long, allow_negative_numbers = true)]
        bl: f64,
        #[arg(long, value_enum, default_value_t = ModelArg::Both)]
        model: ModelArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Eigenvalue table for bL = 10, 30 and ∞ (format from the --out extension: .csv, .json, otherwise text)
    Table1 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// SVG figure: stacked eigenfunctions or energy-level bars
    Plot {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, allow_negative_numbers = true)]
        bl: f64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = plot::DEFAULT_SAMPLES_PER_UNIT)]
        samples: usize,
    },
    /// Levels of the infinitely deep well
    Infinite {
        #[arg(long)]
        count: usize,
        #[arg(long, value_enum, default_value_t = ModelArg::Both)]
        model: ModelArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModelArg {
    Both,
    Flex4,
    Schro2,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Modes,
    Bars,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

fn select(report: SpectrumReport, model: ModelArg) -> SpectrumReport {
    match model {
        ModelArg::Both => report,
        ModelArg::Flex4 => report.restricted_to(ModelKind::FlexuralShear4th),
        ModelArg::Schro2 => report.restricted_to(ModelKind::Schrodinger2nd),
    }
}

fn deliver(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => export::write_file(path, text),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| crate::Error::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<()> {
    match command {
        Command::Solve {
            bl,
            model,
            format,
            out,
        } => {
            let report = select(build_report(WellSpec::finite(bl)?, None)?, model);
            deliver(
                &export::render_report(&report, format.into())?,
                out.as_deref(),
                stdout,
            )
        }
        Command::Infinite {
            count,
            model,
            format,
            out,
        } => {
            let report = select(build_report(WellSpec::Infinite, Some(count))?, model);
            deliver(
                &export::render_report(&report, format.into())?,
                out.as_deref(),
                stdout,
            )
        }
        Command::Table1 { out } => {
            let table = TableOne::build()?;
            let extension = out
                .as_deref()
                .and_then(Path::extension)
                .and_then(|e| e.to_str())
                .map(str::to_ascii_lowercase);
            let text = match extension.as_deref() {
                Some("csv") => export::render_table(&table, Format::Csv)?,
                Some("json") => export::render_table(&table, Format::Json)?,
                _ => table.to_string(),
            };
            deliver(&text, out.as_deref(), stdout)
        }
        Command::Plot {
            kind,
            bl,
            out,
            samples,
        } => {
            let kind = match kind {
                KindArg::Modes => PlotKind::Eigenfunctions,
                KindArg::Bars => PlotKind::LevelBars,
            };
            let req = PlotRequest {
                samples_per_unit: samples,
                ..PlotRequest::new(kind, WellSpec::finite(bl)?, out)
            };
            plot::emit_plot(&req)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

pub fn cli_main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
