use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hecke::commands::{self, Common, Format, EXIT_CONFIG};

#[derive(Parser)]
#[command(name = "hecke", version, about = "Gradings of the diagrammatic Hecke category")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that every relation is homogeneous. Exit 1 if one is not.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Additional relations (JSON array).
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Derive the universal grading group from the relations.
    Universal {
        #[arg(long)]
        coxeter: PathBuf,
        /// A general grading spec giving degrees on V.
        #[arg(long)]
        grading: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Degree of a diagram.
    Degree {
        #[command(flatten)]
        common: Common,
        diagram: PathBuf,
    },
    /// Scalar by which a character's rescaling acts on a diagram.
    Theta {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        character: PathBuf,
        diagram: PathBuf,
    },
    /// Structure of the group of rational characters of the grading group.
    Classify {
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_CONFIG as u8 } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Verify { common, catalog } => commands::verify(common, catalog.as_ref()),
        Command::Universal {
            coxeter,
            grading,
            format,
        } => commands::universal(coxeter, grading.as_deref(), *format),
        Command::Degree { common, diagram } => commands::degree_cmd(common, diagram),
        Command::Theta {
            common,
            character,
            diagram,
        } => commands::theta(common, character, diagram),
        Command::Classify { common } => commands::classify(common),
    };
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_CONFIG as u8)
        }
    }
}
