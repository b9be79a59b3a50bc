//! Run configuration and provenance stamped into every output artifact.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::transforms::{SURVIVE_SIGMAS, VANISH_SIGMAS};

/// Environment variable holding the default worker thread count.
pub const THREADS_ENV: &str = "GRH_THREADS";

/// Lowercase hex SHA-256.
pub fn digest_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// σ thresholds for statistical decisions.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub vanish_sigmas: f64,
    pub survive_sigmas: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            vanish_sigmas: VANISH_SIGMAS,
            survive_sigmas: SURVIVE_SIGMAS,
        }
    }
}

/// Everything needed to rerun a subcommand. Thread count is deliberately
/// absent: results do not depend on it.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_weight: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub tolerances: Tolerances,
    /// Remaining flags, as given.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub args: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub outputs: Vec<String>,
}

impl RunConfig {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            ..Self::default()
        }
    }

    pub fn arg(mut self, key: &str, value: impl ToString) -> Self {
        self.args.push((key.to_string(), value.to_string()));
        self
    }
}

/// Provenance block: the tool version, the configuration, and a digest of
/// the inputs (the canonical configuration JSON plus any input files).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    pub config: RunConfig,
    pub input_digest: String,
}

impl Provenance {
    pub fn new(config: RunConfig, inputs: &[&[u8]]) -> Self {
        let mut bytes = serde_json::to_vec(&config).expect("serializable");
        for i in inputs {
            bytes.extend_from_slice(&(i.len() as u64).to_le_bytes());
            bytes.extend_from_slice(i);
        }
        Self {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            input_digest: digest_hex(&bytes),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_known_value() {
        assert_eq!(
            digest_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn provenance_is_deterministic() {
        let c = RunConfig::new("det factorial").arg("k", 3);
        assert_eq!(Provenance::new(c.clone(), &[b"x"]), Provenance::new(c.clone(), &[b"x"]));
        assert_ne!(Provenance::new(c.clone(), &[b"x"]).input_digest, Provenance::new(c, &[b"y"]).input_digest);
    }
}
