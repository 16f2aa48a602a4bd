use std::io;
use std::process::ExitCode;

use clap::Parser;
use maxseg_cli::{run, Cli, EXIT_ERROR, EXIT_OK};

fn main() -> ExitCode {
    // Exit status 2 means "infeasible", so usage errors must not use clap's default.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { EXIT_OK } as u8);
        }
    };
    let stdin = io::stdin().lock();
    let mut out = io::BufWriter::new(io::stdout().lock());
    let mut err = io::stderr().lock();
    let status = run(&cli, stdin, &mut out, &mut err);
    if let Err(e) = io::Write::flush(&mut out) {
        eprintln!("error: Io: {e}");
        return ExitCode::from(EXIT_ERROR as u8);
    }
    ExitCode::from(status as u8)
}
