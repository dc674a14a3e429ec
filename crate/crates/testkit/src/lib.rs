//! Shared test support: seeded random-graph generators and slow-but-obvious
//! oracle implementations, kept deliberately independent of the main crate's
//! algorithms (different algorithms, different code paths).

use std::path::PathBuf;

pub mod gen;
pub mod oracle;

/// Absolute path of a bundled dataset in the repository's `data/` directory.
pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}
