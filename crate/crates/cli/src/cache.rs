use std::fs;
use std::path::PathBuf;

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::CliError;

/// Directory of JSON results keyed by file name. Results are always
/// rendered from the parsed JSON, so a hit renders exactly like a miss.
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Cache { dir }
    }

    pub fn load_or_compute<T, F>(&self, name: &str, compute: F) -> Result<T, CliError>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T, CliError>,
    {
        let path = self.dir.as_ref().map(|d| d.join(name));
        if let Some(path) = &path {
            if let Ok(text) = fs::read_to_string(path) {
                // unreadable entries are recomputed and overwritten
                if let Ok(value) = serde_json::from_str(&text) {
                    return Ok(value);
                }
            }
        }
        let text = serde_json::to_string_pretty(&compute()?)?;
        if let Some(path) = &path {
            if let Some(parent) = path.parent() {
                fs::create_dir_all(parent)?;
            }
            let tmp = path.with_extension("json.tmp");
            fs::write(&tmp, &text)?;
            fs::rename(&tmp, path)?;
        }
        Ok(serde_json::from_str(&text)?)
    }
}
