//! The two failure classes the process reports through its exit code.

use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Failure {
    /// Bad invocation or unreadable input; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// Valid input that fails a mathematical check; exit code 1.
    #[error("{message}")]
    Domain { message: String, details: Option<Value> },
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain { .. } => 1,
        }
    }
}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    Failure::Usage(msg.into()).into()
}

pub fn domain(msg: impl Into<String>) -> anyhow::Error {
    Failure::Domain { message: msg.into(), details: None }.into()
}

pub fn domain_with(msg: impl Into<String>, details: Value) -> anyhow::Error {
    Failure::Domain { message: msg.into(), details: Some(details) }.into()
}
