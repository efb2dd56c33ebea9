//! Algebra files.
//!
//! A TOML document with the implication table in row-major order:
//!
//! ```toml
//! size = 3
//! names = ["0", "a", "1"]
//! arrow = [
//!   [2, 2, 2],
//!   [0, 2, 2],
//!   [0, 1, 2],
//! ]
//! ```
//!
//! `arrow[a][b]` is the index of `a → b`. `names` is optional.

use std::fmt::Write as _;
use std::path::Path;

use hilbert_depth::{validate, FiniteHilbertAlgebra, ValidationReport};
use serde::Deserialize;

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub size: usize,
    pub arrow: Vec<Vec<usize>>,
    #[serde(default)]
    pub names: Option<Vec<String>>,
}

/// Why a file could not be turned into an algebra.
#[derive(Debug)]
pub enum LoadError {
    /// Unreadable file, bad syntax, or a table of the wrong shape.
    Parse(String),
    /// Well-formed table that fails the axioms.
    Invalid(ValidationReport),
}

impl std::fmt::Display for LoadError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LoadError::Parse(msg) => write!(f, "parse error: {msg}"),
            LoadError::Invalid(report) => write!(f, "{report}"),
        }
    }
}

impl std::error::Error for LoadError {}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile, LoadError> {
        let file: AlgebraFile =
            toml::from_str(text).map_err(|e| LoadError::Parse(e.to_string()))?;
        if file.arrow.len() != file.size {
            return Err(LoadError::Parse(format!(
                "size is {} but arrow has {} rows",
                file.size,
                file.arrow.len()
            )));
        }
        if let Some(names) = &file.names {
            if names.len() != file.size {
                return Err(LoadError::Parse(format!(
                    "size is {} but {} names are given",
                    file.size,
                    names.len()
                )));
            }
            let mut sorted = names.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != names.len() {
                return Err(LoadError::Parse("names must be distinct".into()));
            }
        }
        Ok(file)
    }

    pub fn read(path: &Path) -> Result<AlgebraFile, LoadError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| LoadError::Parse(format!("{}: {e}", path.display())))?;
        AlgebraFile::parse(&text)
    }

    /// Runs the axiom check. Shape and range problems are parse errors.
    pub fn validate(&self) -> Result<ValidationReport, LoadError> {
        validate(&self.arrow).map_err(|e| LoadError::Parse(e.to_string()))
    }

    pub fn to_algebra(&self) -> Result<FiniteHilbertAlgebra, LoadError> {
        let report = self.validate()?;
        if !report.is_ok() {
            return Err(LoadError::Invalid(report));
        }
        let algebra =
            FiniteHilbertAlgebra::new(&self.arrow).map_err(|e| LoadError::Parse(e.to_string()))?;
        match &self.names {
            Some(names) => algebra
                .with_names(names.clone())
                .map_err(|e| LoadError::Parse(e.to_string())),
            None => Ok(algebra),
        }
    }

    pub fn from_algebra(algebra: &FiniteHilbertAlgebra) -> AlgebraFile {
        AlgebraFile {
            size: algebra.size(),
            arrow: algebra.table(),
            names: algebra.names().map(<[String]>::to_vec),
        }
    }

    /// Serializes with one table row per line.
    pub fn to_toml(&self) -> String {
        let mut out = String::new();
        writeln!(out, "size = {}", self.size).unwrap();
        if let Some(names) = &self.names {
            let quoted: Vec<String> = names
                .iter()
                .map(|n| toml::Value::String(n.clone()).to_string())
                .collect();
            writeln!(out, "names = [{}]", quoted.join(", ")).unwrap();
        }
        writeln!(out, "arrow = [").unwrap();
        for row in &self.arrow {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            writeln!(out, "  [{}],", cells.join(", ")).unwrap();
        }
        writeln!(out, "]").unwrap();
        out
    }
}

pub fn load(path: &Path) -> Result<FiniteHilbertAlgebra, LoadError> {
    AlgebraFile::read(path)?.to_algebra()
}
