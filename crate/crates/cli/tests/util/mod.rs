//! Launches the compiled `ordcalc` binary and captures one run.

use std::process::Command;

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn ordcalc(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_ordcalc"))
        .args(args)
        .output()
        .expect("failed to launch ordcalc");
    Run {
        stdout: String::from_utf8(out.stdout).expect("stdout was not utf-8"),
        stderr: String::from_utf8(out.stderr).expect("stderr was not utf-8"),
        code: out.status.code().unwrap_or(-1),
    }
}
