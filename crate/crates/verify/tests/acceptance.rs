//! One PASS/FAIL line per acceptance criterion; exits non-zero if any fails.
//!
//! Invoked as `acceptance --as-cli ARGS..` it runs the `smlab` entry point
//! instead, so the determinism criterion compares separate processes.

use std::ffi::OsString;
use std::process::{Command, ExitCode};

fn main() -> ExitCode {
    let args: Vec<OsString> = std::env::args_os().collect();
    if args.get(1).is_some_and(|a| a == "--as-cli") {
        return smlab::cli::main_with_args(std::iter::once(OsString::from("smlab")).chain(args[2..].iter().cloned()));
    }
    // cargo may pass harness flags such as --nocapture; none apply here.
    if args.iter().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let exe = std::env::current_exe().expect("test binary path");
    let cli = || {
        let mut c = Command::new(&exe);
        c.arg("--as-cli");
        c
    };
    let results = smlab_verify::evaluate(&cli);
    for c in &results {
        println!("{}", c.line());
    }
    let failed = results.iter().filter(|c| !c.outcome.ok).count();
    println!("acceptance: {} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
