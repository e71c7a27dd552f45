use std::io::Read;
use std::path::Path;

use anyhow::{Context, Result};

/// Text of one graph input: `-` reads standard input, an existing path reads
/// the file, anything else is taken as a literal graph6 line.
pub fn read_input(arg: &str) -> Result<String> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
        return Ok(text);
    }
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).with_context(|| format!("reading {arg}"));
    }
    Ok(format!("{arg}\n"))
}

/// Human label for diagnostics.
pub fn label(arg: &str) -> &str {
    if arg == "-" {
        "<stdin>"
    } else {
        arg
    }
}
