//! `--config FILE` support. The file is a JSON object whose keys are long
//! option names of the chosen subcommand; its entries are spliced in as
//! options ahead of the real command line, so explicit flags win and
//! unknown keys are rejected by the same parser as unknown flags.

use std::ffi::OsString;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::Value;

/// Splices the contents of every `--config FILE` (or `--config=FILE`) into
/// `args` right after the subcommand name.
pub fn expand(args: Vec<OsString>) -> Result<Vec<OsString>> {
    let mut rest = Vec::with_capacity(args.len());
    let mut config: Option<OsString> = None;
    let mut it = args.into_iter();
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--config" {
            config = Some(it.next().context("--config needs a file argument")?);
        } else if let Some(path) = s.strip_prefix("--config=") {
            config = Some(path.into());
        } else {
            rest.push(a);
        }
    }
    let Some(path) = config else {
        return Ok(rest);
    };
    let injected = config_args(Path::new(&path))?;
    let Some(pos) = subcommand_position(&rest) else {
        bail!("--config needs a subcommand");
    };
    let mut out = rest[..=pos].to_vec();
    out.extend(injected);
    out.extend_from_slice(&rest[pos + 1..]);
    Ok(out)
}

/// Index of the first argument after the program name that is not a global
/// option or its value.
fn subcommand_position(args: &[OsString]) -> Option<usize> {
    let mut i = 1;
    while i < args.len() {
        let s = args[i].to_string_lossy();
        if s == "--workers" {
            i += 2;
        } else if s.starts_with('-') {
            i += 1;
        } else {
            return Some(i);
        }
    }
    None
}

fn config_args(path: &Path) -> Result<Vec<OsString>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
    let value: Value = serde_json::from_str(&text).with_context(|| format!("parsing config {}", path.display()))?;
    let Value::Object(map) = value else {
        bail!("config {} must be a JSON object", path.display());
    };
    let mut out = Vec::new();
    for (key, v) in map {
        let flag = format!("--{}", key.replace('_', "-"));
        match v {
            Value::Bool(true) => out.push(flag.into()),
            Value::Bool(false) | Value::Null => {}
            Value::Number(n) => out.extend([flag.into(), n.to_string().into()]),
            Value::String(s) => out.extend([flag.into(), s.into()]),
            Value::Array(items) => {
                let parts = items
                    .iter()
                    .map(|x| match x {
                        Value::Number(n) => Ok(n.to_string()),
                        Value::String(s) => Ok(s.clone()),
                        _ => bail!("config key {key:?}: arrays may hold only numbers and strings"),
                    })
                    .collect::<Result<Vec<_>>>()?;
                out.extend([flag.into(), parts.join(",").into()]);
            }
            Value::Object(_) => bail!("config key {key:?}: nested objects are not supported"),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn os(v: &[&str]) -> Vec<OsString> {
        v.iter().map(OsString::from).collect()
    }

    #[test]
    fn splices_after_subcommand() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        write!(f, r#"{{"budget": 100, "target": "H", "weights": [0.5, 1], "quiet": false}}"#).unwrap();
        let p = f.path().to_str().unwrap().to_string();
        let out = expand(os(&["dyckanyon", "--workers", "2", "synth", "--config", &p, "--seed", "3"])).unwrap();
        let expected = os(&[
            "dyckanyon", "--workers", "2", "synth", "--budget", "100", "--target", "H", "--weights", "0.5,1", "--seed",
            "3",
        ]);
        assert_eq!(out, expected);
    }

    #[test]
    fn no_config_is_identity() {
        let args = os(&["dyckanyon", "gap", "--params", "3,1,2,4,-1"]);
        assert_eq!(expand(args.clone()).unwrap(), args);
    }

    #[test]
    fn rejects_non_object() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        write!(f, "[1, 2]").unwrap();
        let p = f.path().to_str().unwrap().to_string();
        assert!(expand(os(&["dyckanyon", "gap", "--config", &p])).is_err());
    }
}
