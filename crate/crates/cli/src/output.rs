use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;

/// Bumped whenever the layout of any artifact changes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
struct Artifact<'a, R: Serialize> {
    schema_version: u32,
    command: &'a str,
    input: &'a Value,
    result: &'a R,
}

/// Pretty JSON with a trailing newline. Floats use the shortest
/// representation that parses back to the same `f64`.
pub fn render<R: Serialize>(command: &str, input: &Value, result: &R) -> Result<String> {
    let artifact = Artifact { schema_version: SCHEMA_VERSION, command, input, result };
    let mut text = serde_json::to_string_pretty(&artifact)?;
    text.push('\n');
    Ok(text)
}

/// Writes to `out` through a sibling temporary file and a rename, or to
/// `stdout` when `out` is `None`.
pub fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        None => {
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
        Some(path) => {
            let dir = match path.parent() {
                Some(p) if !p.as_os_str().is_empty() => p,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir)
                .with_context(|| format!("creating temporary file in {}", dir.display()))?;
            tmp.write_all(text.as_bytes())?;
            tmp.as_file().sync_all()?;
            tmp.persist(path).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    Ok(())
}
