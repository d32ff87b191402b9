use std::process::ExitCode;

use arlab::args::{Cli, Format};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match arlab::run(&cli) {
        Ok(out) => {
            print!("{}", out.render(cli.format));
            if cli.format == Format::Json {
                println!();
            }
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&e.to_json()).expect("error serializes")),
                Format::Table => eprintln!("error: {e}"),
            }
            ExitCode::from(2)
        }
    }
}
