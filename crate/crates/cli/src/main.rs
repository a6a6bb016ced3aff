use chain_conic_cli::args::{resolve_tolerance, Cli, Command};
use chain_conic_cli::commands::{cmd_generate, cmd_render, cmd_verify};
use chain_conic_cli::report::error_doc;
use chain_conic_cli::sweep::run_sweep;
use clap::Parser;
use std::io::Write;

fn emit(text: &str, out: Option<&str>) -> i32 {
    let result = match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("cannot write output: {e}");
            2
        }
    }
}

fn main() {
    let cli = Cli::parse(); // exits 2 by itself on bad flags
    let (text, code, out) = match &cli.command {
        Command::Generate(args) => {
            let (text, code) = cmd_generate(args);
            (text, code, args.out.clone())
        }
        Command::Verify(args) => match resolve_tolerance(args.tol) {
            Ok(tol) => {
                let (text, code) = cmd_verify(args, tol);
                (text, code, args.out.clone())
            }
            Err(msg) => (
                serde_json::to_string_pretty(&error_doc("InvalidConfiguration", &msg)).unwrap()
                    + "\n",
                2,
                None,
            ),
        },
        Command::Sweep(args) => match resolve_tolerance(args.tol) {
            Ok(tol) => {
                let (text, code) = run_sweep(args, tol);
                (text, code, args.out.clone())
            }
            Err(msg) => (
                serde_json::to_string_pretty(&error_doc("InvalidConfiguration", &msg)).unwrap()
                    + "\n",
                2,
                None,
            ),
        },
        Command::Render(args) => {
            let (text, code) = cmd_render(args);
            (text, code, args.out.clone())
        }
    };
    let io_code = emit(&text, out.as_deref());
    std::process::exit(if code != 0 { code } else { io_code });
}
