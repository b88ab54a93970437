use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = io::stdout();
    let err = io::stderr();
    let code = teamlogic::cli::run(std::env::args_os(), &mut out.lock(), &mut err.lock());
    let _ = io::stdout().flush();
    ExitCode::from(code)
}
