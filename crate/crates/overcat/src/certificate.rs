//! Certificate emission: canonical JSON bytes, content hashes, and the
//! envelope shared by every CLI subcommand.
//!
//! Canonical form is serde_json with sorted object keys (the default
//! map representation) and no insignificant whitespace; hashes are
//! SHA-256 over those bytes. Re-running a command on the same inputs
//! reproduces the certificate byte for byte.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Canonical JSON value of any serializable payload: object keys are
/// sorted because serde_json maps are BTree-backed.
pub fn canonical_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable payload")
}

/// Canonical bytes: compact encoding of the canonical value.
pub fn canonical_bytes<T: Serialize>(v: &T) -> Vec<u8> {
    serde_json::to_string(&canonical_value(v))
        .expect("canonical value encodes")
        .into_bytes()
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    let digest = h.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// The envelope written by every subcommand. `inputs` maps each input
/// name to the SHA-256 of its canonical bytes; `replay` embeds the
/// canonicalized inputs so `check-witness` can re-run the verdict
/// without the original files.
#[derive(Debug, Clone, Serialize, serde::Deserialize)]
pub struct Certificate {
    /// Subcommand echo, e.g. "overlimit".
    pub command: String,
    /// Input name -> SHA-256 of canonical bytes.
    pub inputs: BTreeMap<String, String>,
    /// "positive" or "negative"; negatives carry a witness in `result`.
    pub verdict: String,
    /// The full machine-readable result, including any witness.
    pub result: Value,
    /// Inline canonical inputs for replay.
    pub replay: Value,
    /// Budget statement the verdict is relative to.
    pub budget: String,
    pub engine: String,
}

pub fn engine_version() -> String {
    format!("overcat {}", env!("CARGO_PKG_VERSION"))
}

impl Certificate {
    pub fn new(
        command: &str,
        inputs: BTreeMap<String, Value>,
        verdict: &str,
        result: Value,
        budget: &str,
    ) -> Certificate {
        let hashes = inputs
            .iter()
            .map(|(k, v)| (k.clone(), sha256_hex(&canonical_bytes(v))))
            .collect();
        Certificate {
            command: command.to_string(),
            inputs: hashes,
            verdict: verdict.to_string(),
            result,
            replay: Value::Object(inputs.into_iter().collect()),
            budget: budget.to_string(),
            engine: engine_version(),
        }
    }

    /// Canonical bytes of the certificate plus a trailing newline.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = canonical_bytes(self);
        out.push(b'\n');
        out
    }

    /// Write to a file, or to stdout when no path is given.
    pub fn emit(&self, out: Option<&Path>) -> io::Result<()> {
        let bytes = self.to_bytes();
        match out {
            Some(p) => fs::write(p, bytes),
            None => io::stdout().write_all(&bytes),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_bytes_sort_keys() {
        let v: Value = serde_json::from_str(r#"{"b":1,"a":{"d":2,"c":3}}"#).unwrap();
        assert_eq!(
            String::from_utf8(canonical_bytes(&v)).unwrap(),
            r#"{"a":{"c":3,"d":2},"b":1}"#
        );
    }

    #[test]
    fn hash_is_stable() {
        assert_eq!(
            sha256_hex(b"overcat"),
            sha256_hex(b"overcat"),
        );
        assert_eq!(sha256_hex(b"").len(), 64);
    }

    #[test]
    fn certificate_bytes_are_reproducible() {
        let mk = || {
            Certificate::new(
                "validate",
                BTreeMap::from([("doc".to_string(), serde_json::json!({"k": 1}))]),
                "positive",
                serde_json::json!({"ok": true}),
                "candidates=1000000",
            )
        };
        assert_eq!(mk().to_bytes(), mk().to_bytes());
    }
}
