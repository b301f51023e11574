//! Run configuration: a JSON file whose fields can each be overridden by flags.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use cpstrata_core::ballmodels::{circle_count, CircleWeights};
use cpstrata_core::chambers::{Boundary, ChamberLabel};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryConvention {
    #[default]
    Strict,
    Inclusive,
}

impl From<BoundaryConvention> for Boundary {
    fn from(b: BoundaryConvention) -> Self {
        match b {
            BoundaryConvention::Strict => Boundary::Strict,
            BoundaryConvention::Inclusive => Boundary::Inclusive,
        }
    }
}

/// Contents of a `--config` file. Weight keys are `"<n>:<chamber>"`, e.g. `"4:C_2"`,
/// and values use the `a,b;a,b` form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default)]
    pub degree_cap: Option<u32>,
    #[serde(default)]
    pub weights: BTreeMap<String, String>,
    #[serde(default)]
    pub boundary_convention: Option<BoundaryConvention>,
    #[serde(default)]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub format: Option<Format>,
}

fn parse_key(key: &str) -> Result<(usize, ChamberLabel)> {
    let (n, ch) = key.split_once(':').with_context(|| format!("weight key `{key}` is not `n:chamber`"))?;
    Ok((n.trim().parse()?, ch.trim().parse()?))
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let cfg: Self = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(cap) = self.degree_cap {
            if cap < 2 {
                bail!("degree_cap must be at least 2, got {cap}");
            }
        }
        for (key, value) in &self.weights {
            let (n, chamber) = parse_key(key)?;
            let w: CircleWeights = value.parse()?;
            let expected = circle_count(n, chamber)?;
            if w.len() != expected {
                bail!("weights for {key}: expected {expected} pairs, found {}", w.len());
            }
        }
        Ok(())
    }

    /// Configured weights for a model, or unit weights.
    pub fn weights_for(&self, n: usize, chamber: ChamberLabel) -> Result<CircleWeights> {
        for (key, value) in &self.weights {
            if parse_key(key)? == (n, chamber) {
                return Ok(value.parse()?);
            }
        }
        Ok(CircleWeights::uniform(circle_count(n, chamber)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_validates() {
        let cfg: RunConfig = serde_json::from_str(
            r#"{"degree_cap": 12, "weights": {"4:C_2": "2,1;1,-1"}, "boundary_convention": "inclusive", "format": "csv"}"#,
        )
        .unwrap();
        cfg.validate().unwrap();
        assert_eq!(cfg.weights_for(4, ChamberLabel::C(2)).unwrap().pairs(), &[(2, 1), (1, -1)]);
        assert_eq!(cfg.weights_for(4, ChamberLabel::C(1)).unwrap().pairs(), &[(1, 1)]);

        let bad = RunConfig { degree_cap: Some(1), ..Default::default() };
        assert!(bad.validate().is_err());
        let mut wrong = RunConfig::default();
        wrong.weights.insert("4:C_3".into(), "1,1".into());
        assert!(wrong.validate().is_err());
        assert!(serde_json::from_str::<RunConfig>(r#"{"cap": 3}"#).is_err());
    }
}
