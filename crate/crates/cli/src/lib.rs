//! Command-line front end: parses a request, runs the library, renders the
//! report as JSON, CSV or text.
//!
//! Exit status: 0 on success, 1 when the request is rejected, 2 when a
//! computed object fails one of its own invariant checks.

pub mod render;
pub mod report;

use clap::{Parser, Subcommand, ValueEnum};

use wonderful_core::symmetric::SatakeDiagram;
use wonderful_core::weyl::{self, WeylGroup, DEFAULT_CAP};
use wonderful_core::{CartanType, RootSystem};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invariant violated {0}")]
    Invariant(String),
    #[error(transparent)]
    Core(#[from] wonderful_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Invariant(_) => 2,
            CliError::Core(e) if e.is_invariant_violation() => 2,
            CliError::Core(_) => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Orbit poset with dimension data
    Orbits,
    /// Poincaré polynomial and Betti numbers
    Betti,
    /// Torus-fixed points with tangent weights and cell dimensions
    FixedPoints,
    /// Weyl-chamber fan with smoothness and completeness certificates
    Fan,
    /// Restricted roots of a Satake diagram (needs --satake)
    Satake,
    /// Exact Lie-algebra checks for A1 and A2
    Realize,
    /// Orbits, Betti numbers, fixed points, fan and (for A1/A2) realization
    All,
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "wonderful",
    version,
    about = "Structure of wonderful compactifications of adjoint groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Cartan type, e.g. A2, G2, B3xA1
    #[arg(long = "type", global = true)]
    pub ctype: Option<String>,

    /// Satake diagram, e.g. "A2;black=;arrows=(1,2)"
    #[arg(long, global = true)]
    pub satake: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for fan sampling
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,

    /// Sample points for the completeness certificate
    #[arg(long, global = true, default_value_t = 1000)]
    pub samples: usize,

    /// Largest group to enumerate
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,

    /// Largest number of fixed points to list
    #[arg(long, global = true, default_value_t = 100_000)]
    pub fixed_point_limit: usize,

    /// Permit wedge expansions beyond A1
    #[arg(long, global = true)]
    pub allow_heavy: bool,
}

/// Rendered output, plus the name of a failed check when the report itself
/// records a failure (the output is still worth printing).
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub failed: Option<String>,
}

fn setup(cli: &Cli) -> Result<(CartanType, RootSystem), CliError> {
    let text = cli
        .ctype
        .as_deref()
        .ok_or_else(|| CliError::Usage("--type is required".into()))?;
    let ctype = CartanType::parse(text)?;
    let rs = RootSystem::new(&ctype);
    Ok((ctype, rs))
}

fn group(rs: &RootSystem, cap: usize) -> Result<WeylGroup, CliError> {
    Ok(weyl::enumerate(rs, cap)?)
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match (cli.command, &cli.satake) {
        (Command::Satake, None) => return Err(CliError::Usage("satake needs --satake".into())),
        (Command::Satake, Some(_)) | (_, None) => {}
        (_, Some(_)) => {
            return Err(CliError::Usage(
                "--satake only applies to the satake command".into(),
            ))
        }
    }
    if cli.samples == 0 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    let (ctype, rs) = setup(cli)?;
    let fmt = cli.format;
    let settings = report::Settings {
        samples: cli.samples,
        seed: cli.seed,
        fixed_point_limit: cli.fixed_point_limit,
        allow_heavy: cli.allow_heavy,
    };
    let mut failed = None;
    let text = match cli.command {
        Command::Orbits => render::orbits(&report::orbits(&rs)?, fmt)?,
        Command::Betti => render::betti(&report::betti(&rs, &group(&rs, cli.cap)?)?, fmt)?,
        Command::FixedPoints => {
            let r = report::fixed_points(&rs, &group(&rs, cli.cap)?, cli.fixed_point_limit)?;
            render::fixed_points(&r, fmt)?
        }
        Command::Fan => render::fan(
            &report::fan(&rs, &group(&rs, cli.cap)?, cli.samples, cli.seed)?,
            fmt,
        )?,
        Command::Satake => {
            let sd = SatakeDiagram::parse(cli.satake.as_deref().unwrap_or_default())?;
            if sd.ctype != ctype {
                return Err(CliError::Usage(format!(
                    "--type {ctype} does not match the diagram type {}",
                    sd.ctype
                )));
            }
            render::satake(
                &report::satake(&rs, &sd, cli.cap, cli.samples, cli.seed)?,
                fmt,
            )?
        }
        Command::Realize => {
            let r = report::realization(&ctype, cli.allow_heavy)?;
            if !r.all_passed {
                failed = Some("realization".into());
            }
            render::realization(&r, fmt)?
        }
        Command::All => {
            let r = report::all(&rs, &group(&rs, cli.cap)?, &settings)?;
            if r.realization.as_ref().is_some_and(|x| !x.all_passed) {
                failed = Some("realization".into());
            }
            render::all(&r, fmt)?
        }
    };
    Ok(Output { text, failed })
}

/// Parses `args` and runs, returning the exit status and the two streams.
pub fn run_args<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                (0, text, String::new())
            } else {
                (1, String::new(), text)
            };
        }
    };
    match run(&cli) {
        Ok(Output { text, failed: None }) => (0, text, String::new()),
        Ok(Output {
            text,
            failed: Some(check),
        }) => (2, text, format!("error: invariant violated [{check}]\n")),
        Err(e) => (e.exit_code(), String::new(), format!("error: {e}\n")),
    }
}
