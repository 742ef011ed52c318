use std::process::ExitCode;

use clap::Parser;
use repcoalg::cli::{parse_field_name, render, run, Args, JobSpec, EXIT_INPUT};

fn main() -> ExitCode {
    let args = Args::parse();
    let input = match std::fs::read_to_string(&args.input) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("cannot read {}: {e}", args.input.display());
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let field = match args.field.as_deref().map(|f| parse_field_name(f).ok_or(f)) {
        None => None,
        Some(Ok(f)) => Some(f),
        Some(Err(f)) => {
            eprintln!("unknown field '{f}', expected Q or F<p>");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let job = JobSpec {
        input,
        input_name: args.input.display().to_string(),
        command: args.cmd,
        max_len: args.max_len,
        ext_cutoff: args.ext_cutoff,
        arity: args.arity,
        seed: args.seed,
        field,
    };
    let outcome = run(&job);
    let text = render(&outcome.doc, args.format);
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_INPUT);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(outcome.exit)
}
