//! Canonical JSON reports.
//!
//! Keys are sorted (serde_json's default map is ordered), rationals are
//! `"p/q"` strings and words are `.`-joined tokens with `'` for dotted
//! letters, so identical inputs give identical bytes.

use std::path::Path;

use leibniz_gsb::freealg::{format_rational, Rational};
use leibniz_gsb::words::{Alphabet, Word};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    /// `sha256:` digest over the input bytes and the arguments that shape
    /// the computation.
    pub digest: String,
    pub inputs: Value,
    pub letter_order: Option<String>,
    pub results: Value,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(command: &str, digest: String, inputs: Value) -> Self {
        Report {
            command: command.to_string(),
            digest,
            inputs,
            letter_order: None,
            results: json!({}),
            warnings: Vec::new(),
        }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": { "digest": self.digest, "arguments": self.inputs },
            "letter_order": self.letter_order,
            "results": self.results,
            "warnings": self.warnings,
        })
    }

    /// Pretty-printed canonical JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn emit(&self, path: &Path) -> Result<(), CliError> {
        std::fs::write(path, self.to_json()).map_err(|source| CliError::Io { path: path.display().to_string(), source })
    }
}

/// `sha256:<hex>` over length-prefixed parts.
pub fn digest(parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p);
    }
    let hex: String = h.finalize().iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

pub fn rational(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn vector(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn word(alphabet: &Alphabet, w: &Word) -> Value {
    Value::String(alphabet.format_word_dotted(w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skeleton() {
        let r = Report::new("basis", digest(&[]), json!({}));
        let text = r.to_json();
        assert!(text.ends_with("}\n"));
        let keys: Vec<String> = r.to_value().as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["command", "inputs", "letter_order", "results", "warnings"]);
        assert_eq!(text, Report::new("basis", digest(&[]), json!({})).to_json());
    }

    #[test]
    fn digest_separates_parts() {
        assert_ne!(digest(&[b"ab", b"c"]), digest(&[b"a", b"bc"]));
    }
}
