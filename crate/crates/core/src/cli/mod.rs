//! The `qadj` command line: argument parsing, cap resolution and report output.
//!
//! Exit codes: 0 when every check passed (skipped and reported checks count as
//! passing), 1 when a check failed, 2 for unreadable input or unmet preconditions.

pub mod commands;
pub mod input;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::caps::Caps;
use crate::qhomology::ComplexMode;
use commands::Suite;
use input::{census_inputs, resolve, InputError};
use report::ReportDocument;

#[derive(Parser, Debug)]
#[command(
    name = "qadj",
    version,
    about = "Exact computations with finite quandles"
)]
pub struct Cli {
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Largest number of basis tuples in a chain complex or covering space.
    #[arg(long, global = true)]
    pub cap_cells: Option<u64>,
    /// Largest group order for bar-complex homology.
    #[arg(long, global = true)]
    pub cap_group: Option<usize>,
    /// Add per-check wall-clock times to the report.
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a quandle and print its profile.
    Check { input: String },
    /// Profile, abelianization, family-specific group checks and H2.
    Invariants { input: String },
    /// Rack or quandle homology in one degree.
    Homology {
        input: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Quandle)]
        mode: ModeArg,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=3))]
        degree: u8,
    },
    /// Adjoint group model checks for a connected Alexander quandle.
    Adjoint { input: String },
    /// Run one verification suite.
    Verify {
        input: String,
        #[arg(long, value_enum)]
        suite: SuiteArg,
    },
    /// Build the universal covering of a connected Alexander quandle.
    Covering {
        input: String,
        #[arg(long, default_value_t = 0)]
        base_point: u32,
        /// Write base.qt, total.qt and projection.map here.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Batch checks over a directory of tables and .spec files, or the built-in grid.
    Census { dir: Option<PathBuf> },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Rack,
    Quandle,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SuiteArg {
    Clauwens,
    Homotopy,
    Eisermann,
    Covering,
    Coxeter,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Clauwens => Suite::Clauwens,
            SuiteArg::Homotopy => Suite::Homotopy,
            SuiteArg::Eisermann => Suite::Eisermann,
            SuiteArg::Covering => Suite::Covering,
            SuiteArg::Coxeter => Suite::Coxeter,
        }
    }
}

/// What a run printed and how it ended.
#[derive(Debug, Default)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl RunOutput {
    fn error(message: impl std::fmt::Display) -> RunOutput {
        RunOutput {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

fn resolve_caps(cli: &Cli) -> Result<Caps, String> {
    let mut caps = Caps::from_env()?;
    if let Some(c) = cli.cap_cells {
        caps.cells = c;
    }
    if let Some(g) = cli.cap_group {
        caps.group = g;
    }
    Ok(caps)
}

pub fn run<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                RunOutput {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                RunOutput {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let caps = match resolve_caps(&cli) {
        Ok(c) => c,
        Err(e) => return RunOutput::error(e),
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => return RunOutput::error(e),
    };
    pool.install(|| execute(&cli, &caps))
}

fn finish(doc: &ReportDocument, stderr: String) -> RunOutput {
    RunOutput {
        code: doc.exit_code(),
        stdout: doc.to_text(),
        stderr,
    }
}

fn execute(cli: &Cli, caps: &Caps) -> RunOutput {
    let single = |arg: &str, f: &dyn Fn(&input::Input) -> commands::Outcome| -> RunOutput {
        let input = match resolve(arg) {
            Ok(i) => i,
            Err(e) => return RunOutput::error(e),
        };
        let start = Instant::now();
        let mut checks = match f(&input) {
            Ok(c) => c,
            Err(e) => return RunOutput::error(e),
        };
        let ms = start.elapsed().as_millis();
        let mut doc = ReportDocument::new(&input.name);
        doc.show_timings = cli.timings;
        for c in &mut checks {
            c.elapsed_ms = Some(ms);
        }
        doc.extend(checks);
        finish(&doc, String::new())
    };
    match &cli.command {
        Command::Check { input } => match resolve(input) {
            Ok(_) => single(input, &|i| Ok(commands::check(i))),
            Err(e @ InputError::NotAQuandle { .. }) => {
                let mut doc = ReportDocument::new(input);
                doc.extend(commands::check_failure(&e));
                finish(&doc, format!("{e}\n"))
            }
            Err(e) => RunOutput::error(e),
        },
        Command::Invariants { input } => single(input, &|i| commands::invariants(i, caps)),
        Command::Homology {
            input,
            mode,
            degree,
        } => {
            let mode = match mode {
                ModeArg::Rack => ComplexMode::Rack,
                ModeArg::Quandle => ComplexMode::Quandle,
            };
            single(input, &|i| {
                Ok(vec![commands::homology_check(
                    i,
                    mode,
                    *degree as usize,
                    caps,
                )?])
            })
        }
        Command::Adjoint { input } => single(input, &commands::adjoint),
        Command::Verify { input, suite } => {
            single(input, &|i| commands::verify(i, (*suite).into(), caps))
        }
        Command::Covering {
            input,
            base_point,
            export,
        } => single(input, &|i| {
            commands::covering(i, *base_point, export.as_deref(), caps)
        }),
        Command::Census { dir } => {
            let entries = match census_inputs(dir.as_deref()) {
                Ok(e) => e,
                Err(e) => return RunOutput::error(e),
            };
            let name = dir
                .as_ref()
                .map_or("built-in grid".to_string(), |d| d.display().to_string());
            let mut doc = ReportDocument::new(name);
            doc.show_timings = cli.timings;
            doc.extend(commands::census(&entries, caps, cli.timings));
            finish(&doc, String::new())
        }
    }
}
