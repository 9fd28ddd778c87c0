//! Flat `key = value` configuration files. Command-line flags win over file
//! values, which win over `JESMAN_PRECISION` and the built-in defaults.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{bail, Context, Result};

pub const PRECISION_ENV: &str = "JESMAN_PRECISION";
pub const DEFAULT_PRECISION_BITS: u32 = 256;

const KEYS: [&str; 7] = ["format", "precision_bits", "jobs", "cap", "m_max", "output", "form"];

#[derive(Debug, Default, Clone)]
pub struct FileConfig {
    values: BTreeMap<String, String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                bail!("config line {}: expected key = value", i + 1);
            };
            let key = k.trim().replace('-', "_");
            if !KEYS.contains(&key.as_str()) {
                bail!("config line {}: unknown key {key:?}", i + 1);
            }
            values.insert(key, v.trim().to_string());
        }
        Ok(FileConfig { values })
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: std::fmt::Display,
    {
        match self.values.get(key) {
            None => Ok(None),
            Some(v) => v.parse().map(Some).map_err(|e| anyhow::anyhow!("config key {key}: {e}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format {s:?}")),
        }
    }
}

/// Settings shared by every subcommand after merging flags, file and environment.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub format: Format,
    pub precision_bits: u32,
    pub jobs: Option<usize>,
    pub output: Option<PathBuf>,
    pub timing: bool,
    pub file: FileConfig,
}

impl RunConfig {
    pub fn resolve(
        format: Option<Format>,
        precision_bits: Option<u32>,
        jobs: Option<usize>,
        output: Option<PathBuf>,
        timing: bool,
        file: FileConfig,
    ) -> Result<Self> {
        let env_prec = match std::env::var(PRECISION_ENV) {
            Ok(v) => Some(v.trim().parse::<u32>().with_context(|| format!("{PRECISION_ENV}={v}"))?),
            Err(_) => None,
        };
        let precision_bits = precision_bits
            .or(file.get("precision_bits")?)
            .or(env_prec)
            .unwrap_or(DEFAULT_PRECISION_BITS);
        if precision_bits < 64 {
            bail!("precision must be at least 64 bits, got {precision_bits}");
        }
        let jobs = jobs.or(file.get("jobs")?);
        if jobs == Some(0) {
            bail!("jobs must be at least 1");
        }
        Ok(RunConfig {
            format: format.or(file.get("format")?).unwrap_or(Format::Text),
            precision_bits,
            jobs,
            output: output.or(file.get("output")?),
            timing,
            file,
        })
    }

    /// Flag value, else file value, else `default`.
    pub fn pick<T: FromStr>(&self, flag: Option<T>, key: &str, default: T) -> Result<T>
    where
        T::Err: std::fmt::Display,
    {
        Ok(match flag {
            Some(v) => v,
            None => self.file.get(key)?.unwrap_or(default),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_dashes() {
        let c = FileConfig::parse("# scan settings\nm-max = 30\ncap=12 # short\n\n").unwrap();
        assert_eq!(c.get::<u64>("m_max").unwrap(), Some(30));
        assert_eq!(c.get::<u32>("cap").unwrap(), Some(12));
        assert_eq!(c.get::<u32>("jobs").unwrap(), None);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_lines() {
        assert!(FileConfig::parse("colour = red").is_err());
        assert!(FileConfig::parse("cap 12").is_err());
        assert!(FileConfig::parse("cap = twelve").unwrap().get::<u32>("cap").is_err());
    }

    #[test]
    fn flags_override_file() {
        let file = FileConfig::parse("format = json\nprecision_bits = 96\njobs = 3").unwrap();
        let rc = RunConfig::resolve(Some(Format::Text), None, None, None, false, file).unwrap();
        assert_eq!(rc.format, Format::Text);
        assert_eq!(rc.precision_bits, 96);
        assert_eq!(rc.jobs, Some(3));
        assert_eq!(rc.pick(Some(7u32), "cap", 40).unwrap(), 7);
        assert_eq!(rc.pick(None, "cap", 40u32).unwrap(), 40);
    }

    #[test]
    fn low_precision_rejected() {
        assert!(RunConfig::resolve(None, Some(32), None, None, false, FileConfig::default()).is_err());
    }
}
