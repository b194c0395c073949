use std::path::PathBuf;
use std::process::ExitCode;

use bkcube::commands::{self, StepArgs};
use bkcube::{Format, Streams, EXIT_USAGE};
use bkcube_core::theorems::Engine;
use bkcube_core::Rules;
use clap::{Parser, Subcommand};

/// Connectivity estimates for cubical diagrams.
///
/// BKCUBE_MAX_ITERS (default 32) bounds every iteration loop.
#[derive(Parser)]
#[command(name = "bkcube", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    // test hooks: replace a rule constant to exercise failure paths
    #[arg(long, global = true, hide = true, allow_hyphen_values = true)]
    hbm_offset: Option<i64>,
    #[arg(long, global = true, hide = true, allow_hyphen_values = true)]
    dual_offset: Option<i64>,
    #[arg(long, global = true, hide = true, allow_hyphen_values = true)]
    stable_offset: Option<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// Run every built-in verification and write a report.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parse and execute a .bkc script.
    Run {
        script: PathBuf,
        /// Also emit the derivations.
        #[arg(long, value_enum)]
        trace: Option<Format>,
    },
    /// Iterate the step functor on one profile.
    Step(StepArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let (mut out, mut err) = (stdout.lock(), stderr.lock());
    let mut io = Streams {
        out: &mut out,
        err: &mut err,
    };
    let env = std::env::var("BKCUBE_MAX_ITERS").ok();
    let max_iters = match commands::max_iters_from(env.as_deref()) {
        Ok(n) => n,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    let defaults = Rules::STANDARD;
    let engine = Engine {
        rules: Rules {
            hbm_offset: cli.hbm_offset.unwrap_or(defaults.hbm_offset),
            dual_offset: cli.dual_offset.unwrap_or(defaults.dual_offset),
            stable_offset: cli.stable_offset.unwrap_or(defaults.stable_offset),
        },
        max_iters,
    };
    let code = match &cli.command {
        Command::VerifyPaper { format, out } => {
            commands::verify_paper(&engine, *format, out.as_deref(), &mut io)
        }
        Command::Run { script, trace } => commands::run(&engine, script, *trace, &mut io),
        Command::Step(args) => commands::step(&engine, args, &mut io),
    };
    ExitCode::from(code as u8)
}
