//! Suite configuration files.
//!
//! ```toml
//! [suite]
//! nmax = 5
//! order = 15
//! only = ["EQ6", "EQ7"]
//!
//! [build]
//! fin3_length = "k"
//! ```

use std::path::Path;

use serde::Deserialize;

use qhall_core::closedform::{Fin3Length, Mutation};
use qhall_core::verify::{CheckId, SuiteConfig};

use crate::{CliError, CliResult};

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default)]
    pub suite: SuiteSection,
    #[serde(default)]
    pub build: BuildSection,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteSection {
    pub nmax: Option<u32>,
    pub order: Option<u64>,
    pub kmax: Option<u32>,
    pub bijection_weight: Option<u64>,
    pub last_max: Option<u32>,
    pub mu_part_max: Option<u32>,
    pub only: Option<Vec<String>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuildSection {
    /// `"k"` or `"unbounded"`.
    pub fin3_length: Option<String>,
    /// `"drop_triangular_prefactor"`; for testing the harness.
    pub mutation: Option<String>,
}

pub fn parse_only(names: &[String]) -> CliResult<Vec<CheckId>> {
    names
        .iter()
        .map(|s| CheckId::from_name(s.trim()).ok_or_else(|| CliError::Usage(format!("unknown check {:?}", s))))
        .collect()
}

pub fn parse_fin3_length(s: &str) -> CliResult<Fin3Length> {
    match s {
        "k" => Ok(Fin3Length::K),
        "unbounded" => Ok(Fin3Length::Unbounded),
        _ => Err(CliError::Config(format!("fin3_length must be \"k\" or \"unbounded\", got {:?}", s))),
    }
}

pub fn parse_mutation(s: &str) -> CliResult<Mutation> {
    match s {
        "drop_triangular_prefactor" => Ok(Mutation::DropTriangularPrefactor),
        _ => Err(CliError::Config(format!("unknown mutation {:?}", s))),
    }
}

impl ConfigFile {
    pub fn parse(text: &str) -> CliResult<ConfigFile> {
        toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> CliResult<ConfigFile> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        ConfigFile::parse(&text)
    }

    /// Overlays the file on `base`.
    pub fn apply(&self, base: SuiteConfig) -> CliResult<SuiteConfig> {
        let s = &self.suite;
        let mut options = base.options;
        if let Some(f) = &self.build.fin3_length {
            options.fin3_length = parse_fin3_length(f)?;
        }
        if let Some(m) = &self.build.mutation {
            options.mutation = Some(parse_mutation(m)?);
        }
        Ok(SuiteConfig {
            nmax: s.nmax.unwrap_or(base.nmax),
            order: s.order.unwrap_or(base.order),
            kmax: s.kmax.unwrap_or(base.kmax),
            bijection_weight: s.bijection_weight.unwrap_or(base.bijection_weight),
            last_max: s.last_max.unwrap_or(base.last_max),
            mu_part_max: s.mu_part_max.unwrap_or(base.mu_part_max),
            only: match &s.only {
                Some(names) => parse_only(names)?,
                None => base.only,
            },
            options,
        })
    }
}
