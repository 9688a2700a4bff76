//! Plain-text corpus manifests.
//!
//! One entry per line, `name | variables | polynomial | expected`, where
//! `variables` is a comma-separated list and `expected` (optional) lists the
//! multidegrees, with `*` for an entry that is not checked. Blank lines and
//! lines starting with `#` are ignored.

use crate::field::PrimeField;
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub variables: Vec<String>,
    pub text: String,
    pub polynomial: Polynomial,
    /// Expected multidegrees; `None` entries are wildcards.
    pub expected: Option<Vec<Option<u64>>>,
}

impl CorpusEntry {
    /// Whether `f` is a plane curve without coordinate-line components.
    pub fn is_plane_curve(&self) -> bool {
        self.polynomial.arity() == 3 && (0..3).all(|i| !self.polynomial.divisible_by_variable(i))
    }

    pub fn to_manifest_line(&self) -> String {
        let mut line = format!("{} | {} | {}", self.name, self.variables.join(","), self.text);
        if let Some(exp) = &self.expected {
            let items: Vec<String> = exp
                .iter()
                .map(|e| e.map_or_else(|| "*".to_string(), |v| v.to_string()))
                .collect();
            line.push_str(" | ");
            line.push_str(&items.join(","));
        }
        line
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn parse(text: &str, field: PrimeField) -> Result<Corpus> {
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            entries.push(parse_line(line, idx + 1, field)?);
        }
        Ok(Corpus { entries })
    }

    pub fn to_manifest(&self) -> String {
        self.entries.iter().map(|e| e.to_manifest_line() + "\n").collect()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

fn parse_line(line: &str, number: usize, field: PrimeField) -> Result<CorpusEntry> {
    let err = |message: String| Error::Manifest { line: number, message };
    let fields: Vec<&str> = line.split('|').map(str::trim).collect();
    if !(3..=4).contains(&fields.len()) {
        return Err(err(format!("expected 3 or 4 '|'-separated fields, found {}", fields.len())));
    }
    let name = fields[0];
    if name.is_empty() {
        return Err(err("empty name".into()));
    }
    let variables: Vec<String> = fields[1].split(',').map(|v| v.trim().to_string()).collect();
    if variables.iter().any(String::is_empty) {
        return Err(err("empty variable name".into()));
    }
    let polynomial =
        parse_polynomial(fields[2], &variables, field).map_err(|e| err(e.to_string()))?;
    let expected = match fields.get(3).filter(|s| !s.is_empty()) {
        None => None,
        Some(s) => Some(
            s.split(',')
                .map(|item| match item.trim() {
                    "*" => Ok(None),
                    v => v
                        .parse::<u64>()
                        .map(Some)
                        .map_err(|_| err(format!("bad expected multidegree '{v}'"))),
                })
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    if let Some(exp) = &expected {
        if exp.len() != variables.len() {
            return Err(err(format!(
                "{} expected multidegrees for {} variables",
                exp.len(),
                variables.len()
            )));
        }
    }
    Ok(CorpusEntry {
        name: name.to_string(),
        variables,
        text: fields[2].to_string(),
        polynomial,
        expected,
    })
}

const DEFAULT_MANIFEST: &str = "\
# plane curves
cuspidal-cubic | x0,x1,x2 | 4*x1^3 - x0*x1^2 - 18*x0*x1*x2 + 27*x0*x2^2 + 4*x0^2*x2 | 1,3,2
nodal-cubic | x0,x1,x2 | x1^2*x2 - x0^3 - x0^2*x2 | 1,3,2
smooth-conic | x0,x1,x2 | x0^2 + x1^2 + x2^2 + x0*x1 + x1*x2 + x0*x2 | 1,2,4
tangent-conic | x0,x1,x2 | x0^2 - x1*x2 | 1,2,0
three-lines | x0,x1,x2 | (x0 + 2*x1 + 3*x2)*(x0 - 5*x1 + 7*x2)*(3*x0 + x1 - 4*x2) | 1,3,6
# birational families
dolgachev-2 | x0,x1,x2 | x1^2 + x0*x1 + x0*x2 | 1,2,1
dolgachev-3 | x0,x1,x2,x3 | x1^2 + x0*x1 + x0*x2 + x0*x3 | 1,2,2,1
cremona-2 | x0,x1,x2 | x1*x2 + x0*x2 + x0*x1 | 1,2,1
cremona-3 | x0,x1,x2,x3 | x1*x2*x3 + x0*x2*x3 + x0*x1*x3 + x0*x1*x2 | 1,3,3,1
family-a-2 | x0,x1,x2 | x1^2 + x1*x2 + x0*(x1 + x2) | *,*,1
family-b-2 | x0,x1,x2 | (x0 + x1)^3 + x1^2*x2 | *,*,1
family-c-2 | x0,x1,x2 | x0^2 + x1^2 + x2^2 - 2*x0*x1 - 2*x0*x2 - 2*x1*x2 | *,*,1
";

/// The built-in corpus.
pub fn default_corpus(field: PrimeField) -> Corpus {
    Corpus::parse(DEFAULT_MANIFEST, field).expect("built-in manifest parses")
}
