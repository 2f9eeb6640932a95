//! Sweep configuration: families with parameter ranges and a pair source.

use std::path::Path;

use jk_core::rep::{Family, Group, RepSpec};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// One family with inclusive parameter ranges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyRange {
    pub family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<Group>,
    pub n_min: usize,
    pub n_max: usize,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub n_step: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m_min: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m_max: Option<usize>,
}

fn one() -> usize {
    1
}

fn is_one(x: &usize) -> bool {
    *x == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum PairSource {
    Canonical,
    Random { seeds: Vec<u64>, bound: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub families: Vec<FamilyRange>,
    pub pair_source: PairSource,
    /// Worker threads; 0 or absent means one per available processor.
    #[serde(default)]
    pub parallelism: usize,
    #[serde(default)]
    pub fail_fast: bool,
}

impl FamilyRange {
    /// All specs in the range, each checked against its family's constraints.
    pub fn specs(&self) -> Result<Vec<RepSpec>, CliError> {
        let bad = |msg: String| Err(CliError::Input(format!("family {}: {msg}", self.family)));
        if self.n_min > self.n_max || self.n_step == 0 {
            return bad(format!("empty n range {}..={} step {}", self.n_min, self.n_max, self.n_step));
        }
        let ms: Vec<Option<usize>> = if self.family.is_sum() {
            match (self.m_min, self.m_max) {
                (Some(lo), Some(hi)) if lo <= hi => (lo..=hi).map(Some).collect(),
                (Some(_), Some(_)) => return bad("empty m range".into()),
                _ => return bad("m_min and m_max are required".into()),
            }
        } else {
            if self.m_min.is_some() || self.m_max.is_some() {
                return bad("m range does not apply".into());
            }
            vec![None]
        };
        let mut out = Vec::new();
        for n in (self.n_min..=self.n_max).step_by(self.n_step) {
            for &m in &ms {
                let spec = RepSpec { family: self.family, n, m, group: self.group };
                spec.validate().map_err(|e| CliError::Input(e.to_string()))?;
                out.push(spec);
            }
        }
        Ok(out)
    }
}

impl SweepConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        let cfg: SweepConfig =
            serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.families.is_empty() {
            return Err(CliError::Input("no families configured".into()));
        }
        if let PairSource::Random { seeds, bound } = &self.pair_source {
            if seeds.is_empty() {
                return Err(CliError::Input("random pair source needs at least one seed".into()));
            }
            if *bound == 0 {
                return Err(CliError::Input("random pair source needs bound >= 1".into()));
            }
        }
        for f in &self.families {
            f.specs()?;
        }
        Ok(())
    }

    /// All specs, sorted and deduplicated.
    pub fn specs(&self) -> Result<Vec<RepSpec>, CliError> {
        let mut all = Vec::new();
        for f in &self.families {
            all.extend(f.specs()?);
        }
        all.sort();
        all.dedup();
        Ok(all)
    }
}
