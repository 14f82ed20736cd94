//! Reproducibility manifest embedded in every output file.
//!
//! Identical config and tool version must yield byte-identical numeric
//! output, so the file header carries only deterministic fields (version,
//! command line, digests); the wall-clock timestamp appears on the console
//! report only.

use serde::Serialize;
use sha2::{Digest, Sha256};
use vacbi_core::units::CONSTANTS;

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub tool: String,
    pub command: String,
    pub config_digest: String,
    pub constants_digest: String,
    #[serde(skip)]
    pub timestamp_unix: u64,
}

impl RunManifest {
    pub fn new(command: String, config_bytes: &[u8]) -> Self {
        Self {
            tool: format!("vacbi {}", env!("CARGO_PKG_VERSION")),
            command,
            config_digest: hex_digest(config_bytes),
            constants_digest: constants_digest(),
            timestamp_unix: std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        }
    }

    /// `#`-prefixed header block for table files; deterministic.
    pub fn header(&self, columns: &str) -> String {
        format!(
            "# {}\n# command: {}\n# config sha256: {}\n# constants sha256: {}\n# columns: {}\n",
            self.tool, self.command, self.config_digest, self.constants_digest, columns
        )
    }
}

fn hex_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

/// Digest of the frozen constants table; changes whenever any constant
/// changes, invalidating cross-version comparisons.
pub fn constants_digest() -> String {
    let c = CONSTANTS;
    let canonical = format!(
        "electron_mass={:.17e};hbar_c={:.17e};hbar={:.17e};fine_structure={:.17e};joule={:.17e}",
        c.electron_mass, c.hbar_c, c.hbar, c.fine_structure, c.joule_in_ev
    );
    hex_digest(canonical.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digests_are_stable_and_input_sensitive() {
        let a = RunManifest::new("total".into(), b"config-a");
        let b = RunManifest::new("total".into(), b"config-a");
        assert_eq!(a.config_digest, b.config_digest);
        assert_eq!(a.constants_digest, b.constants_digest);
        let c = RunManifest::new("total".into(), b"config-b");
        assert_ne!(a.config_digest, c.config_digest);
        // header omits the timestamp
        assert!(!a.header("x,y").contains("timestamp"));
    }
}
