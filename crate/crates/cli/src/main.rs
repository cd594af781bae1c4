mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(err) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
        {
            eprintln!("error: cannot start worker pool: {err}");
            return ExitCode::from(2);
        }
    }
    let bound = args::bound(&cli);
    let result = match &cli.command {
        Command::Green(a) => commands::green(a),
        Command::Eval(a) => commands::eval(a, bound),
        Command::Verify { check, run } => commands::verify(check, run, bound),
        Command::Regular(a) => commands::regular(a),
        Command::ConfigValidate(a) => commands::config_validate(a, bound),
    };
    match result {
        Ok(out) => {
            println!("{}", out.render(cli.format));
            if out.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
