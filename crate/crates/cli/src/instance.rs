use std::fmt;
use std::path::PathBuf;

use thiserror::Error;
use twinless::instances::builtin;
use twinless::io::parse_edge_list;
use twinless::{DirectedGraph, GenerateError, GeneratorSpec, ParseError};

/// Where an instance comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceSpec {
    File(PathBuf),
    Builtin(String),
    Generated(GeneratorSpec),
}

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("unknown builtin `{0}` (expected fig1a, fig1b or fig1c)")]
    UnknownBuiltin(String),
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error("no instance given: pass a file path, --builtin or --gen")]
    Missing,
    #[error("give exactly one of a file path, --builtin and --gen")]
    Ambiguous,
}

impl InstanceSpec {
    pub fn from_args(
        path: Option<PathBuf>,
        builtin: Option<String>,
        generated: Option<String>,
    ) -> Result<Self, InstanceError> {
        match (path, builtin, generated) {
            (Some(p), None, None) => Ok(Self::File(p)),
            (None, Some(b), None) => Ok(Self::Builtin(b)),
            (None, None, Some(g)) => Ok(Self::Generated(g.parse()?)),
            (None, None, None) => Err(InstanceError::Missing),
            _ => Err(InstanceError::Ambiguous),
        }
    }

    pub fn load(&self) -> Result<DirectedGraph, InstanceError> {
        match self {
            Self::File(path) => {
                let display = path.display().to_string();
                let text = std::fs::read_to_string(path).map_err(|source| InstanceError::Io {
                    path: display.clone(),
                    source,
                })?;
                parse_edge_list(&text).map_err(|source| InstanceError::Parse {
                    path: display,
                    source,
                })
            }
            Self::Builtin(name) => {
                builtin(name).ok_or_else(|| InstanceError::UnknownBuiltin(name.clone()))
            }
            Self::Generated(spec) => Ok(spec.generate()?),
        }
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::File(p) => write!(f, "{}", p.display()),
            Self::Builtin(name) => f.write_str(name),
            Self::Generated(spec) => write!(f, "{spec}"),
        }
    }
}
