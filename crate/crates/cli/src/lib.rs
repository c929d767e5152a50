//! Reports and artifact writers behind the `bigon` binary.

pub mod export;
pub mod report;
