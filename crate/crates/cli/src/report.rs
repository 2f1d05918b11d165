//! Machine-readable run reports.
//!
//! Reports are emitted through `serde_json::Value`, whose maps are sorted, so
//! parsing an emitted report and serializing it again reproduces it byte for
//! byte. Big integers are carried as arbitrary-precision JSON numbers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use detcurve::oracle::{EqualityReport, EscalationReport, EscalationVerdict};
use detcurve::{MinorValue, Monomial, MonomialMatrix, SparsePolynomial, VariableSet};

/// An integer of any size, serialized as a bare JSON number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigNum(String);

impl BigNum {
    pub fn new(value: impl fmt::Display) -> Self {
        BigNum(value.to_string())
    }
}

impl Serialize for BigNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let number = serde_json::Number::from_str(&self.0).map_err(serde::ser::Error::custom)?;
        number.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BigNum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let number = serde_json::Number::deserialize(deserializer)?;
        Ok(BigNum(number.to_string()))
    }
}

/// A polynomial, rendered and as `[exponent-vector, coefficient]` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyReport {
    pub rendered: String,
    pub terms: Vec<(Vec<BigNum>, BigNum)>,
}

fn exponents(m: &Monomial) -> Vec<BigNum> {
    m.exponents().iter().map(BigNum::new).collect()
}

impl PolyReport {
    pub fn from_poly(p: &SparsePolynomial, vars: &VariableSet) -> Self {
        PolyReport {
            rendered: p.render(vars),
            terms: p
                .terms()
                .rev()
                .map(|(m, c)| (exponents(m), BigNum::new(c)))
                .collect(),
        }
    }

    /// Keeps the binomial's printed orientation in `rendered`.
    pub fn from_minor(m: &MinorValue, arity: usize, vars: &VariableSet) -> Self {
        PolyReport {
            rendered: m.render(vars),
            ..Self::from_poly(&SparsePolynomial::from_minor(m, arity), vars)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixReport {
    pub rendered: String,
    /// `rows[r][c]` is the exponent vector of entry `(r, c)`.
    pub rows: Vec<Vec<Vec<BigNum>>>,
}

impl MatrixReport {
    pub fn new(a: &MonomialMatrix, vars: &VariableSet) -> Self {
        MatrixReport {
            rendered: a.render(vars),
            rows: (0..2)
                .map(|r| a.row(r).iter().map(exponents).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemReport {
    pub variables: Vec<String>,
    pub f: PolyReport,
    pub f1: PolyReport,
    pub f2: PolyReport,
    pub matrix: MatrixReport,
    pub case: String,
    #[serde(rename = "M1")]
    pub m1: PolyReport,
    #[serde(rename = "M2")]
    pub m2: PolyReport,
    /// 1-based columns of `M1` and `M2`.
    pub minor_columns: [[usize; 2]; 2],
    pub variant: String,
    pub triple: Vec<PolyReport>,
    pub affine: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: Option<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleVerdict {
    Equal,
    EqualUpToUnmatchedPoints,
    NotEqual,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleEntry {
    pub field: String,
    /// What is compared, e.g. `V(f,f1,f2) vs C`.
    pub comparison: String,
    pub coordinates: Vec<String>,
    pub verdict: OracleVerdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension_degree: Option<usize>,
    /// Equality needed an extension degree beyond the requested `K`.
    #[serde(default)]
    pub escalated: bool,
    pub left_count: usize,
    pub right_count: usize,
    pub left_minus_right: Vec<String>,
    pub right_minus_left: Vec<String>,
}

impl OracleEntry {
    pub fn from_equality(comparison: impl Into<String>, coordinates: Vec<String>, r: &EqualityReport) -> Self {
        OracleEntry {
            field: r.field.clone(),
            comparison: comparison.into(),
            coordinates,
            verdict: if r.equal() {
                OracleVerdict::Equal
            } else {
                OracleVerdict::NotEqual
            },
            extension_degree: None,
            escalated: false,
            left_count: r.left_count,
            right_count: r.right_count,
            left_minus_right: r.left_minus_right.clone(),
            right_minus_left: r.right_minus_left.clone(),
        }
    }

    pub fn from_escalation(
        comparison: impl Into<String>,
        coordinates: Vec<String>,
        r: &EscalationReport,
        requested: usize,
    ) -> Self {
        let mut entry = Self::from_equality(comparison, coordinates, &r.report);
        entry.extension_degree = Some(r.verdict.ext());
        entry.verdict = match &r.verdict {
            EscalationVerdict::Equal { ext } => {
                entry.escalated = *ext > requested;
                OracleVerdict::Equal
            }
            EscalationVerdict::Unmatched { .. } => OracleVerdict::EqualUpToUnmatchedPoints,
            EscalationVerdict::NotContained { .. } => OracleVerdict::NotEqual,
        };
        entry
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    CheckFailed,
    InputError,
    Inconclusive,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::CheckFailed => 1,
            Status::InputError => 2,
            Status::Inconclusive => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub input: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<BTreeMap<String, BigNum>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub system: Option<SystemReport>,
    /// Command-specific results (column verdicts, form matches, Valla's pair).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    pub checks: Vec<Check>,
    pub oracle: Vec<OracleEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub status: Status,
    pub exit_code: u8,
}

impl RunReport {
    pub fn new(command: &str, input: BTreeMap<String, Value>) -> Self {
        RunReport {
            command: command.to_string(),
            input,
            params: None,
            system: None,
            details: None,
            checks: Vec::new(),
            oracle: Vec::new(),
            error: None,
            status: Status::Pass,
            exit_code: 0,
        }
    }

    /// Derives the status from checks and oracle entries.
    pub fn finish(mut self) -> Self {
        self.status = if self.error.is_some() {
            Status::InputError
        } else if !self.checks.iter().all(|c| c.passed)
            || self.oracle.iter().any(|o| o.verdict == OracleVerdict::NotEqual)
        {
            Status::CheckFailed
        } else if self
            .oracle
            .iter()
            .any(|o| o.verdict == OracleVerdict::EqualUpToUnmatchedPoints)
        {
            Status::Inconclusive
        } else {
            Status::Pass
        };
        self.exit_code = self.status.exit_code();
        self
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }
}
