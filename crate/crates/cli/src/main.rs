use std::panic;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = panic::catch_unwind(|| desitter_cli::main_with_args(std::env::args_os())).unwrap_or(1);
    ExitCode::from(code as u8)
}
