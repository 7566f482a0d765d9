//! Partition files: `{"N1": [..], "N2": [..]}`; a missing `N2` means empty.

use std::fs;
use std::path::{Path, PathBuf};

use probe_block_core::probe::ProbePartition;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionFile {
    #[serde(rename = "N1")]
    pub n1: Vec<usize>,
    #[serde(rename = "N2", default)]
    pub n2: Vec<usize>,
}

#[derive(Debug, Error)]
pub enum PartitionError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
}

impl PartitionFile {
    pub fn to_partition(&self) -> ProbePartition {
        ProbePartition::new(self.n1.clone(), self.n2.clone())
    }

    pub fn from_partition(p: &ProbePartition) -> Self {
        PartitionFile {
            n1: p.n1().to_vec(),
            n2: p.n2().to_vec(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

pub fn parse_partition(text: &str) -> Result<PartitionFile, serde_json::Error> {
    serde_json::from_str(text)
}

pub fn read_partition(path: &Path) -> Result<PartitionFile, PartitionError> {
    let text = fs::read_to_string(path).map_err(|source| PartitionError::Io {
        path: path.into(),
        source,
    })?;
    parse_partition(&text).map_err(|source| PartitionError::Json {
        path: path.into(),
        source,
    })
}
