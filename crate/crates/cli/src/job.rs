//! Job descriptions: everything a run needs, read from a JSON file and
//! overridden field by field from the command line.

use std::path::Path;

use relideal::multipoly::text::{parse_poly, parse_rational, parse_univariate};
use relideal::{Error, ExactInt, Perm, PermGroup, Rationals, TriangularBasis, UniPoly};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// An integer that may be written as a JSON number or, when large, a string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Int {
    Small(i64),
    Big(String),
}

impl Int {
    pub fn to_exact(&self) -> Result<ExactInt, CliError> {
        match self {
            Int::Small(v) => Ok(ExactInt::from(*v)),
            Int::Big(s) => s.trim().parse().map_err(|_| CliError::input(format!("`{}` is not an integer", s))),
        }
    }

    pub fn from_exact(v: &ExactInt) -> Int {
        match i64::try_from(v) {
            Ok(s) => Int::Small(s),
            Err(_) => Int::Big(v.to_string()),
        }
    }
}

/// A generator in cycle notation or as a one-based image list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Generator {
    Cycles(String),
    Images(Vec<u32>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub n: usize,
    #[serde(default)]
    pub generators: Vec<Generator>,
}

impl GroupSpec {
    pub fn build(&self) -> Result<PermGroup, CliError> {
        let gens = self
            .generators
            .iter()
            .map(|g| match g {
                Generator::Cycles(s) => Perm::parse_cycles(s, self.n),
                Generator::Images(v) => Perm::from_one_based(v),
            })
            .collect::<relideal::Result<Vec<_>>>()?;
        for g in &gens {
            if g.degree() != self.n {
                return Err(Error::ArityMismatch { expected: self.n, found: g.degree() }.into());
            }
        }
        Ok(PermGroup::generate(self.n, gens)?)
    }

    pub fn from_group(g: &PermGroup) -> GroupSpec {
        GroupSpec {
            n: g.degree(),
            generators: g.generators().iter().map(|p| Generator::Cycles(p.to_cycles())).collect(),
        }
    }
}

/// Unknown fields are ignored, so golden files and the JSON output of
/// `compute` can be fed back in directly.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<Int>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precision: Option<u32>,
    /// Residues modulo the prime: `x_i ≡ labeling[i-1]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labeling: Option<Vec<Int>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
}

impl JobSpec {
    pub fn load(path: &Path) -> Result<JobSpec, CliError> {
        let text = read(path)?;
        serde_json::from_str(&text).map_err(|e| CliError::input(format!("{}: {}", path.display(), e)))
    }

    pub fn f(&self) -> Result<UniPoly<Rationals>, CliError> {
        let s = self.f.as_deref().ok_or_else(|| CliError::input("no polynomial f given"))?;
        let f = parse_univariate(s)?;
        if f.degree().unwrap_or(0) < 1 {
            return Err(CliError::input("f must have positive degree"));
        }
        if !f.is_monic() {
            return Err(CliError::input("f must be monic"));
        }
        Ok(f)
    }

    pub fn group(&self) -> Result<PermGroup, CliError> {
        self.group.as_ref().ok_or_else(|| CliError::input("no group given"))?.build()
    }

    pub fn prime(&self) -> Result<Option<ExactInt>, CliError> {
        self.prime.as_ref().map(Int::to_exact).transpose()
    }

    pub fn labeling(&self) -> Result<Option<Vec<ExactInt>>, CliError> {
        self.labeling.as_ref().map(|v| v.iter().map(Int::to_exact).collect()).transpose()
    }

    pub fn basis(&self, n: Option<usize>) -> Result<Option<TriangularBasis>, CliError> {
        let Some(lines) = &self.basis else { return Ok(None) };
        let n = n.unwrap_or(lines.len());
        let polys = lines.iter().map(|s| parse_poly(s, Some(n))).collect::<relideal::Result<Vec<_>>>()?;
        Ok(Some(TriangularBasis::new(polys)?))
    }
}

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {}", path.display(), e)))
}

/// Comma- or space-separated integers.
pub fn parse_int_list(s: &str) -> Result<Vec<Int>, CliError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            let v: ExactInt = t.parse().map_err(|_| CliError::input(format!("`{}` is not an integer", t)))?;
            Ok(Int::from_exact(&v))
        })
        .collect()
}

/// A basis file: either JSON with a `basis` array or one polynomial per line
/// (blank lines and `#` comments skipped, an optional `name =` prefix dropped).
pub fn read_basis_lines(path: &Path) -> Result<Vec<String>, CliError> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        let job: JobSpec =
            serde_json::from_str(&text).map_err(|e| CliError::input(format!("{}: {}", path.display(), e)))?;
        return job.basis.ok_or_else(|| CliError::input(format!("{}: no basis", path.display())));
    }
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_once('=').map_or(l, |(_, r)| r).trim().to_string())
        .collect())
}

/// The value accepted for a coordinate in a point set.
pub fn parse_value(v: &serde_json::Value) -> Result<relideal::Rational, CliError> {
    match v {
        serde_json::Value::Number(n) => Ok(parse_rational(&n.to_string())?),
        serde_json::Value::String(s) => Ok(parse_rational(s)?),
        other => Err(CliError::input(format!("`{}` is not a number", other))),
    }
}
