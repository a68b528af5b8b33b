use std::fs;
use std::io::Read;
use std::path::Path;

use factorlab::graph::{parse_graph, Format};
use factorlab::rational::parse_q;
use factorlab::{Error, MultiGraph, VertexFn};

use crate::{FormatArg, GraphInput};

/// A failure with its exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(Error),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(e) if e.is_scale() => 2,
            _ => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) | CliError::Io(s) => f.write_str(s),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Usage(format!("bad JSON: {e}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn read_text(path: &Path) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
    }
}

/// An edge list starts with a line of two integers; graph6 is one token.
pub fn guess_format(text: &str) -> Format {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.split_whitespace().count() >= 2 => Format::Edgelist,
        Some(l) if l.chars().all(|c| c.is_ascii_digit()) => Format::Edgelist,
        _ => Format::Graph6,
    }
}

pub fn to_format(f: FormatArg) -> Format {
    match f {
        FormatArg::Graph6 => Format::Graph6,
        FormatArg::Edgelist => Format::Edgelist,
    }
}

pub fn load_graph(input: &GraphInput) -> CliResult<MultiGraph> {
    let text = read_text(&input.input)?;
    let format = input.format.map(to_format).unwrap_or_else(|| guess_format(&text));
    Ok(parse_graph(&text, format)?)
}

/// A vertex function given as a constant or `@path`.
pub fn vertex_fn(spec: &str, n: usize) -> CliResult<VertexFn> {
    if let Some(path) = spec.strip_prefix('@') {
        let text = read_text(Path::new(path))?;
        return Ok(VertexFn::parse(&text, n)?);
    }
    Ok(VertexFn::constant(n, parse_q(spec)?))
}
