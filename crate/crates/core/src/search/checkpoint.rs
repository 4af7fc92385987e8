use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Counters, SpaceDescriptor};
use crate::error::{Error, Result};

pub const CHECKPOINT_VERSION: u32 = 1;

/// Resumable position of a sharded enumeration: shards before `next_shard`
/// are folded into `state`; `stack` is the decision prefix of the next shard.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchCheckpoint {
    pub version: u32,
    pub space: SpaceDescriptor,
    pub task: String,
    pub split_depth: usize,
    pub next_shard: usize,
    pub stack: Vec<bool>,
    pub counters: Counters,
    pub state: serde_json::Value,
}

impl SearchCheckpoint {
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_string_pretty(self)?)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        let value: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))?;
        let version = value.get("version").and_then(|v| v.as_u64());
        if version != Some(CHECKPOINT_VERSION as u64) {
            return Err(Error::Checkpoint(format!(
                "version {version:?} is not the supported version {CHECKPOINT_VERSION}"
            )));
        }
        serde_json::from_value(value)
            .map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))
    }

    /// Errors unless the checkpoint was written by the same kind of run.
    pub fn ensure_matches(
        &self,
        space: &SpaceDescriptor,
        task: &str,
        split_depth: usize,
    ) -> Result<()> {
        if &self.space != space {
            return Err(Error::Checkpoint(format!(
                "checkpoint is for n={} r={} {} but the run is n={} r={} {}",
                self.space.n, self.space.r, self.space.mode, space.n, space.r, space.mode
            )));
        }
        if self.task != task || self.split_depth != split_depth {
            return Err(Error::Checkpoint(format!(
                "checkpoint task `{}` (split {}) does not match `{task}` (split {split_depth})",
                self.task, self.split_depth
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::SpaceMode;

    fn sample() -> SearchCheckpoint {
        SearchCheckpoint {
            version: CHECKPOINT_VERSION,
            space: SpaceDescriptor {
                n: 7,
                r: 3,
                mode: SpaceMode::LeftCompressed,
            },
            task: "density:P3".into(),
            split_depth: 10,
            next_shard: 3,
            stack: vec![true, false],
            counters: Counters::default(),
            state: serde_json::json!({"x": 1}),
        }
    }

    #[test]
    fn round_trip_and_mismatch() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ck.json");
        let ck = sample();
        ck.save(&path).unwrap();
        let back = SearchCheckpoint::load(&path).unwrap();
        assert_eq!(back, ck);
        let other = SpaceDescriptor {
            n: 8,
            ..ck.space.clone()
        };
        assert!(back.ensure_matches(&other, "density:P3", 10).is_err());
        assert!(back.ensure_matches(&ck.space, "density:P3", 10).is_ok());
        let mut bad = serde_json::to_value(&ck).unwrap();
        bad["version"] = 99.into();
        std::fs::write(&path, bad.to_string()).unwrap();
        assert!(matches!(
            SearchCheckpoint::load(&path),
            Err(Error::Checkpoint(_))
        ));
    }
}
