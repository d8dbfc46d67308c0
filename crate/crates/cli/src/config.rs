//! Flat `key = value` configuration files.
//!
//! Blank lines and lines starting with `#` are ignored. List values are
//! comma separated. Keys not consumed by the command are rejected so that
//! typos do not pass silently.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::Path;
use std::str::FromStr;

use crate::Failure;

#[derive(Debug, Default)]
pub struct KeyValues {
    source: String,
    entries: BTreeMap<String, (usize, String)>,
}

impl KeyValues {
    pub fn load(path: &Path) -> Result<Self, Failure> {
        let source = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{source}: {e}")))?;
        Self::parse(&text, source)
    }

    pub fn parse(text: &str, source: String) -> Result<Self, Failure> {
        let mut entries = BTreeMap::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Failure::Input(format!("{source}:{}: expected 'key = value'", k + 1)))?;
            let key = key.trim().to_ascii_lowercase().replace('-', "_");
            if entries.insert(key.clone(), (k + 1, value.trim().to_owned())).is_some() {
                return Err(Failure::Input(format!("{source}:{}: duplicate key '{key}'", k + 1)));
            }
        }
        Ok(Self { source, entries })
    }

    pub fn take<T>(&mut self, key: &str) -> Result<Option<T>, Failure>
    where
        T: FromStr,
        T::Err: Display,
    {
        match self.entries.remove(key) {
            None => Ok(None),
            Some((line, value)) => value
                .parse()
                .map(Some)
                .map_err(|e| Failure::Input(format!("{}:{line}: {key}: {e}", self.source))),
        }
    }

    pub fn take_list<T>(&mut self, key: &str) -> Result<Option<Vec<T>>, Failure>
    where
        T: FromStr,
        T::Err: Display,
    {
        match self.entries.remove(key) {
            None => Ok(None),
            Some((line, value)) => value
                .split(',')
                .map(|v| v.trim())
                .filter(|v| !v.is_empty())
                .map(|v| {
                    v.parse()
                        .map_err(|e| Failure::Input(format!("{}:{line}: {key}: {e}", self.source)))
                })
                .collect::<Result<Vec<_>, _>>()
                .map(Some),
        }
    }

    /// Errors if any key was never consumed.
    pub fn finish(self) -> Result<(), Failure> {
        match self.entries.into_iter().next() {
            None => Ok(()),
            Some((key, (line, _))) => Err(Failure::Input(format!("{}:{line}: unknown key '{key}'", self.source))),
        }
    }
}
