//! TOML serialization of the generator config.

use crate::error::{Error, Result};
use crate::genrand::GeneratorConfig;

/// Parses a TOML generator config; unknown keys are rejected.
pub fn parse_generator_config(text: &str) -> Result<GeneratorConfig> {
    toml::from_str(text).map_err(|e| Error::Parse(format!("generator config: {e}")))
}

pub fn generator_config_to_toml(cfg: &GeneratorConfig) -> String {
    toml::to_string_pretty(cfg).expect("generator configs always serialize")
}
