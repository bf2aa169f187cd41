// Shared by the integration tests of this crate.
#![allow(dead_code)]

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

pub struct Output {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the binary with `stdin` piped in.
pub fn fdkit(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fdkit"))
        .args(args)
        .env_remove("FDKIT_LIMIT")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn fdkit");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Output {
        status: out.status.code().expect("exited"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

pub const STUDENT: &str = "scheme R(STUDENT, DEPARTMENT, SUPERVISOR)\nfd DEPARTMENT -> SUPERVISOR\n";
pub const RUNNING: &str = "scheme R(A, B, C, D, E)\nfd E -> C D\n";
pub const EIGHT_ELEMENT_INSTANCE: &str = "elements: p1 p2 p3 p4 p5 p6 p7 p8\n\
                                     set: p1 p2 p3\nset: p2 p3 p4\nset: p1 p7 p8\nset: p5 p6 p7\n";
