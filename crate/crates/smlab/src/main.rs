use std::process::ExitCode;

fn main() -> ExitCode {
    smlab::cli::main_with_args(std::env::args_os())
}
