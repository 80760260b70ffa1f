use std::io;
use std::process::ExitCode;

use clap::Parser;
use crbc_cli::{configure_threads, run, Cli, EXIT_INVALID};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = std::env::var("CRBC_THREADS").ok();
    let result = configure_threads(threads.as_deref())
        .and_then(|()| run(cli, &mut io::stdout().lock(), &mut io::stderr()));
    match result {
        Ok(code) => ExitCode::from(code),
        // output closed early, e.g. piped into `head`
        Err(e)
            if e.downcast_ref::<io::Error>()
                .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}
