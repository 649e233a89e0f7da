use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(cweyl_cli::run(std::env::args_os()))
}
