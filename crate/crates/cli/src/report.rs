//! The JSON document printed by every command.

use std::fmt::Display;
use std::process::ExitCode;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_VERIFICATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INPUT: u8 = 3;

pub fn digest(bytes: impl AsRef<[u8]>) -> Option<String> {
    Some(hex::encode(Sha256::digest(bytes.as_ref())))
}

#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn verification(e: impl Display) -> Self {
        Self { code: EXIT_VERIFICATION, message: e.to_string() }
    }

    pub fn usage(e: impl Display) -> Self {
        Self { code: EXIT_USAGE, message: e.to_string() }
    }

    pub fn input(e: impl Display) -> Self {
        Self { code: EXIT_INPUT, message: e.to_string() }
    }
}

#[derive(Serialize)]
pub struct Report {
    schema_version: u32,
    command: Vec<String>,
    input_digest: Option<String>,
    results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    exit_code: u8,
}

impl Report {
    pub fn new(command: Vec<String>, input_digest: Option<String>) -> Self {
        Self { schema_version: SCHEMA_VERSION, command, input_digest, results: Value::Null, error: None, exit_code: 0 }
    }

    pub fn ok(mut self, results: Value) -> Self {
        self.results = results;
        self
    }

    pub fn fail(self, failure: Failure) -> Self {
        self.fail_with(Value::Null, failure)
    }

    pub fn fail_with(mut self, results: Value, failure: Failure) -> Self {
        self.results = results;
        self.exit_code = failure.code;
        self.error = Some(failure.message);
        self
    }

    pub fn emit(self) -> ExitCode {
        let text = serde_json::to_string_pretty(&self).expect("report serializes");
        println!("{text}");
        if let Some(e) = &self.error {
            eprintln!("error: {e}");
        }
        ExitCode::from(self.exit_code)
    }
}
