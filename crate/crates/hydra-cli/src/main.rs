use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(hydra_cli::cli::run(std::env::args_os()) as u8)
}
