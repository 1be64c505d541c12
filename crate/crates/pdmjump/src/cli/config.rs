//! Line-oriented `key = value` configuration files.
//!
//! Keys mirror the long flag names without the leading dashes; `#` starts a
//! comment. Unknown keys are a hard error naming the offending line, and a
//! duplicated key keeps its last value with a warning.

use std::collections::BTreeMap;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("config syntax error on line {line}: {message}")]
    Syntax { line: usize, message: String },
}

/// Every key a config file may set.
pub const KNOWN_KEYS: [&str; 17] = [
    "mu",
    "a",
    "k",
    "u0",
    "mode",
    "epsilon",
    "energy",
    "segments",
    "half-width",
    "from",
    "to",
    "steps",
    "out",
    "format",
    "alpha",
    "beta",
    "constraint",
];

/// Raw per-key values from a config file; flags override these at dispatch.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConfigFragment {
    values: BTreeMap<String, String>,
}

impl ConfigFragment {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn set(&mut self, key: &str, value: &str) -> Option<String> {
        self.values.insert(key.to_string(), value.to_string())
    }

    /// Renders back to config-file text, keys in [`KNOWN_KEYS`] order;
    /// `parse_config(fragment.render())` reproduces the fragment.
    pub fn render(&self) -> String {
        let mut text = String::new();
        for key in KNOWN_KEYS {
            if let Some(value) = self.get(key) {
                text.push_str(key);
                text.push_str(" = ");
                text.push_str(value);
                text.push('\n');
            }
        }
        text
    }
}

/// Parses config text into a fragment plus duplicate-key warnings.
pub fn parse_config(text: &str) -> Result<(ConfigFragment, Vec<String>), ConfigError> {
    let mut fragment = ConfigFragment::default();
    let mut warnings = Vec::new();
    for (index, raw_line) in text.lines().enumerate() {
        let line = index + 1;
        let content = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        let content = content.trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once('=') else {
            return Err(ConfigError::Syntax {
                line,
                message: format!("expected `key = value`, got `{content}`"),
            });
        };
        let key = key.trim();
        let value = value.trim();
        if !KNOWN_KEYS.contains(&key) {
            return Err(ConfigError::Syntax {
                line,
                message: format!("unknown key `{key}`"),
            });
        }
        if value.is_empty() {
            return Err(ConfigError::Syntax {
                line,
                message: format!("missing value for key `{key}`"),
            });
        }
        if fragment.set(key, value).is_some() {
            warnings.push(format!(
                "duplicate key `{key}` on line {line} overrides the earlier value"
            ));
        }
    }
    Ok((fragment, warnings))
}
