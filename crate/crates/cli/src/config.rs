//! Optional key=value config file mirroring the long flag names.
//!
//! Lines are `key=value`; blank lines and `#` comments are ignored. Flags
//! win over config entries, config entries win over built-in defaults.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use crate::UsageError;

#[derive(Debug, Default, Clone)]
pub struct ConfigOverlay {
    entries: BTreeMap<String, String>,
}

impl ConfigOverlay {
    pub fn load(path: &Path) -> Result<Self, UsageError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| UsageError(format!("cannot read config {}: {e}", path.display())))?;
        let mut entries = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(UsageError(format!(
                    "config {}:{}: expected key=value, got {line:?}",
                    path.display(),
                    lineno + 1
                )));
            };
            entries.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(Self { entries })
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    /// Flag value if given, else parsed config entry, else `None`.
    pub fn resolve_opt<T: FromStr>(
        &self,
        key: &str,
        flag: Option<T>,
    ) -> Result<Option<T>, UsageError> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.entries.get(key) {
            None => Ok(None),
            Some(raw) => raw.parse::<T>().map(Some).map_err(|_| {
                UsageError(format!("config entry {key}={raw} does not parse"))
            }),
        }
    }

    /// As [`resolve_opt`], but the value is required.
    pub fn resolve<T: FromStr>(&self, key: &str, flag: Option<T>) -> Result<T, UsageError> {
        self.resolve_opt(key, flag)?
            .ok_or_else(|| UsageError(format!("missing required --{key} (flag or config)")))
    }

    /// As [`resolve_opt`], with a fallback default.
    pub fn resolve_or<T: FromStr>(
        &self,
        key: &str,
        flag: Option<T>,
        default: T,
    ) -> Result<T, UsageError> {
        Ok(self.resolve_opt(key, flag)?.unwrap_or(default))
    }
}
