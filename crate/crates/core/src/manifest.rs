//! Run manifests attached to every emitted result.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub version: String,
    /// sha256 of each input, keyed by input name.
    pub input_hashes: BTreeMap<String, String>,
    pub wall_time_ms: u128,
    pub verdicts: Vec<String>,
}

impl RunManifest {
    pub fn new(command: impl Into<String>) -> Self {
        RunManifest {
            command: command.into(),
            parameters: BTreeMap::new(),
            version: VERSION.to_string(),
            input_hashes: BTreeMap::new(),
            wall_time_ms: 0,
            verdicts: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn input(&mut self, name: &str, bytes: &[u8]) {
        self.input_hashes
            .insert(name.to_string(), sha256_hex(bytes));
    }

    pub fn verdict(&mut self, v: impl Into<String>) {
        self.verdicts.push(v.into());
    }

    /// The manifest with timing zeroed, for comparing runs.
    pub fn untimed(&self) -> RunManifest {
        RunManifest {
            wall_time_ms: 0,
            ..self.clone()
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// A result together with the manifest describing how it was produced.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report<T> {
    pub manifest: RunManifest,
    pub result: T,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hashes_are_stable() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
        let mut a = RunManifest::new("x").param("k", 4);
        a.input("p", b"abc");
        a.wall_time_ms = 17;
        let mut b = a.clone();
        b.wall_time_ms = 3;
        assert_eq!(a.untimed(), b.untimed());
    }
}
