use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use spc_core::Error;

/// Failure classes, each with its own exit code.
#[derive(Debug)]
pub enum Fail {
    /// A check ran and did not hold (exit 1).
    Failed(String),
    /// Bad arguments or unreadable input (exit 2).
    Usage(String),
    /// The solver ran out of budget before deciding (exit 3).
    Budget(u64),
}

impl Fail {
    pub fn code(&self) -> u8 {
        match self {
            Fail::Failed(_) => 1,
            Fail::Usage(_) => 2,
            Fail::Budget(_) => 3,
        }
    }
}

impl fmt::Display for Fail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fail::Failed(m) | Fail::Usage(m) => f.write_str(m),
            Fail::Budget(b) => write!(f, "undecided: search budget of {b} nodes exhausted (raise --budget)"),
        }
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        match e {
            Error::BudgetExceeded { budget } => Fail::Budget(budget),
            other => Fail::Usage(other.to_string()),
        }
    }
}

pub fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Serialize)]
pub struct Report {
    command: &'static str,
    input_digest: BTreeMap<&'static str, String>,
    results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
}

impl Report {
    pub fn new<const N: usize>(command: &'static str, inputs: [(&'static str, String); N], results: Value) -> Report {
        Report { command, input_digest: inputs.into_iter().collect(), results, timing_ms: None }
    }

    pub fn with_timing(mut self, elapsed: Option<Duration>) -> Report {
        self.timing_ms = elapsed.map(|d| d.as_millis());
        self
    }

    pub fn print(&self) {
        println!("{}", serde_json::to_string_pretty(self).expect("report serializes"));
    }
}
