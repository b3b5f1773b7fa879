//! Layered configuration: built-in defaults, then an optional key=value
//! file, then environment variables, with command-line flags applied last
//! by the caller.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config file {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {reason}")]
    Parse {
        path: PathBuf,
        line: usize,
        reason: String,
    },
}

/// Output encoding shared by every command: json is the machine format,
/// md and csv are renderings of the same records.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Md,
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "md" | "markdown" => Ok(OutputFormat::Md),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format {other:?}, expected md, csv, or json")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Md => "md",
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Highest dimension the exhaustive trace search will attempt.
    pub degree_budget: usize,
    /// Prime powers covered by the scan stage of `verify`.
    pub scan_q_list: Vec<u64>,
    pub output_format: OutputFormat,
    /// Directory for cached remote records.
    pub cache_dir: PathBuf,
    /// Remote lookups are opt-in so verification stays reproducible offline.
    pub network_enabled: bool,
    pub lmfdb_base_url: String,
}

/// File name probed in the working directory when no --config is given.
pub const DEFAULT_CONFIG_FILE: &str = "weilmax.conf";

impl Default for Config {
    fn default() -> Self {
        Config {
            degree_budget: 6,
            scan_q_list: vec![4, 9, 16, 25, 49, 64, 81, 121, 169],
            output_format: OutputFormat::Md,
            cache_dir: PathBuf::from(".weilmax-cache"),
            network_enabled: false,
            lmfdb_base_url: "https://www.lmfdb.org".to_string(),
        }
    }
}

impl Config {
    /// Loads the file at `path`, or the default path if it exists, over the
    /// built-in defaults. A missing default file is not an error.
    pub fn load(path: Option<&Path>) -> Result<Config, ConfigError> {
        let mut config = Config::default();
        let chosen = match path {
            Some(p) => Some(p.to_path_buf()),
            None => {
                let p = PathBuf::from(DEFAULT_CONFIG_FILE);
                p.exists().then_some(p)
            }
        };
        if let Some(p) = chosen {
            let text = std::fs::read_to_string(&p).map_err(|source| ConfigError::Io {
                path: p.clone(),
                source,
            })?;
            config.apply_file(&p, &text)?;
        }
        config.apply_env();
        Ok(config)
    }

    fn apply_file(&mut self, path: &Path, text: &str) -> Result<(), ConfigError> {
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |reason: String| ConfigError::Parse {
                path: path.to_path_buf(),
                line: idx + 1,
                reason,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err("expected key=value".to_string()))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "degree_budget" => {
                    self.degree_budget = value
                        .parse()
                        .map_err(|e| err(format!("degree_budget: {e}")))?;
                }
                "scan_q_list" => {
                    let qs: Result<Vec<u64>, _> = value
                        .split(',')
                        .map(|s| s.trim().parse::<u64>())
                        .collect();
                    self.scan_q_list = qs.map_err(|e| err(format!("scan_q_list: {e}")))?;
                }
                "output_format" => {
                    self.output_format = value.parse().map_err(err)?;
                }
                "cache_dir" => self.cache_dir = PathBuf::from(value),
                "network_enabled" => {
                    self.network_enabled = match value {
                        "true" | "1" | "yes" | "on" => true,
                        "false" | "0" | "no" | "off" => false,
                        other => return Err(err(format!("network_enabled: bad boolean {other:?}"))),
                    };
                }
                "lmfdb_base_url" => self.lmfdb_base_url = value.to_string(),
                other => return Err(err(format!("unknown key {other:?}"))),
            }
        }
        Ok(())
    }

    fn apply_env(&mut self) {
        if let Ok(url) = std::env::var("LMFDB_BASE_URL") {
            self.lmfdb_base_url = url;
        }
        if let Ok(dir) = std::env::var("LMFDB_CACHE_DIR") {
            self.cache_dir = PathBuf::from(dir);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn defaults_are_documented_values() {
        let c = Config::default();
        assert_eq!(c.degree_budget, 6);
        assert_eq!(c.scan_q_list, vec![4, 9, 16, 25, 49, 64, 81, 121, 169]);
        assert_eq!(c.output_format, OutputFormat::Md);
        assert!(!c.network_enabled);
    }

    #[test]
    fn file_overrides_defaults() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("weilmax.conf");
        let mut f = std::fs::File::create(&path).unwrap();
        writeln!(f, "# comment").unwrap();
        writeln!(f, "degree_budget = 4").unwrap();
        writeln!(f, "scan_q_list = 4, 9").unwrap();
        writeln!(f, "output_format = json").unwrap();
        writeln!(f, "network_enabled = yes").unwrap();
        let c = Config::load(Some(&path)).unwrap();
        assert_eq!(c.degree_budget, 4);
        assert_eq!(c.scan_q_list, vec![4, 9]);
        assert_eq!(c.output_format, OutputFormat::Json);
        assert!(c.network_enabled);
    }

    #[test]
    fn bad_lines_are_located() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("weilmax.conf");
        std::fs::write(&path, "degree_budget = 4\nnonsense\n").unwrap();
        match Config::load(Some(&path)).unwrap_err() {
            ConfigError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other}"),
        }
        std::fs::write(&path, "mystery = 1\n").unwrap();
        assert!(Config::load(Some(&path)).is_err());
    }

    #[test]
    fn format_round_trips_through_strings() {
        for f in [OutputFormat::Md, OutputFormat::Csv, OutputFormat::Json] {
            assert_eq!(f.to_string().parse::<OutputFormat>().unwrap(), f);
        }
        assert!("yaml".parse::<OutputFormat>().is_err());
    }
}
