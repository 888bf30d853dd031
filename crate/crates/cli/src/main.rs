use std::process::ExitCode;

use adjalg_cli::commands::{run, Cli};
use adjalg_cli::ErrorKind;
use clap::error::ErrorKind as ClapKind;
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ClapKind::DisplayHelp | ClapKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(ErrorKind::Usage.exit_code()),
            };
        }
    };
    match run(&cli.command) {
        Ok(out) => match out.path {
            Some(path) => match std::fs::write(&path, out.text) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    ExitCode::from(ErrorKind::Usage.exit_code())
                }
            },
            None => {
                print!("{}", out.text);
                ExitCode::SUCCESS
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.kind.exit_code())
        }
    }
}
