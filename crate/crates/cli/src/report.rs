//! The JSON report envelope shared by all commands.

use serde::Serialize;
use sha2::{Digest, Sha256};

pub const TOOL: &str = env!("CARGO_PKG_NAME");
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize)]
pub struct ReportFile<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    /// `sha256:` digest of the input file, or of the generated file for generators.
    pub input_digest: Option<String>,
    pub warnings: Vec<String>,
    pub result: T,
}

impl<T: Serialize> ReportFile<T> {
    pub fn new(command: &'static str, input_digest: Option<String>, result: T) -> Self {
        ReportFile { tool: TOOL, version: VERSION, command, input_digest, warnings: Vec::new(), result }
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn digest(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    let mut s = String::with_capacity(7 + 64);
    s.push_str("sha256:");
    for b in hash {
        s.push_str(&format!("{b:02x}"));
    }
    s
}
