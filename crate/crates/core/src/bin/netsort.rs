use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(netsort::cli::run(std::env::args_os()))
}
