//! JSON documents for algebras and tool reports.
//!
//! Rationals travel as lowest-terms strings matching
//! `-?[0-9]+(/[1-9][0-9]*)?` — never as floating-point numbers — and all
//! indices are 1-based. Emission is deterministic: tensor entries are
//! sorted by `(i, j, k)`, map keys are sorted, and parsing normalizes a
//! document (duplicates summed, zeros dropped, rationals reduced), so
//! `parse ∘ emit` is the identity on emitted documents.

use crate::classify::{CanonicalForm, Family, ReductionTranscript};
use crate::error::Error;
use crate::identities::IdentityReport;
use crate::nullfiliform::AutomorphismParams;
use crate::scalar::{format_scalar, parse_scalar};
use crate::tensor::BilinearMap;
use crate::tp::{AlphaParams, QuadraticForm, SolutionSpace};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

/// Wire form of an algebra: a product tensor and an optional bracket on
/// the same space, plus a free-form metadata map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub dim: usize,
    pub dot: Vec<EntryDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket: Option<Vec<EntryDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<BTreeMap<String, serde_json::Value>>,
}

fn entries_from_map(map: &BilinearMap) -> Vec<EntryDoc> {
    map.entries()
        .map(|(i, j, k, c)| EntryDoc {
            i,
            j,
            k,
            c: format_scalar(c),
        })
        .collect()
}

fn map_from_entries(dim: usize, entries: &[EntryDoc], field: &str) -> Result<BilinearMap, Error> {
    let mut map = BilinearMap::zero(dim).map_err(|e| Error::Document {
        location: "dim".to_string(),
        message: e.to_string(),
    })?;
    for (idx, entry) in entries.iter().enumerate() {
        let c = parse_scalar(&entry.c).map_err(|e| Error::Document {
            location: format!("{field}[{idx}].c"),
            message: e.to_string(),
        })?;
        map.add_entry(entry.i, entry.j, entry.k, c)
            .map_err(|e| Error::Document {
                location: format!("{field}[{idx}]"),
                message: e.to_string(),
            })?;
    }
    Ok(map)
}

impl AlgebraDocument {
    pub fn from_parts(
        dot: &BilinearMap,
        bracket: Option<&BilinearMap>,
        meta: Option<BTreeMap<String, serde_json::Value>>,
    ) -> Self {
        AlgebraDocument {
            dim: dot.dim(),
            dot: entries_from_map(dot),
            bracket: bracket.map(entries_from_map),
            meta,
        }
    }

    /// Parse and normalize a document from JSON text.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let raw: AlgebraDocument =
            serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let (dot, bracket) = raw.to_maps()?;
        Ok(AlgebraDocument::from_parts(
            &dot,
            bracket.as_ref(),
            raw.meta,
        ))
    }

    /// Deterministic single-line JSON.
    pub fn emit(&self) -> String {
        serde_json::to_string(self).expect("document serialization cannot fail")
    }

    /// Validate and convert to tensors.
    pub fn to_maps(&self) -> Result<(BilinearMap, Option<BilinearMap>), Error> {
        let dot = map_from_entries(self.dim, &self.dot, "dot")?;
        let bracket = match &self.bracket {
            Some(entries) => Some(map_from_entries(self.dim, entries, "bracket")?),
            None => None,
        };
        Ok((dot, bracket))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessDoc {
    pub identity: String,
    pub at: Vec<usize>,
    pub residual: Vec<String>,
}

/// Identity flags and, for each failed identity, its first failing tuple.
#[derive(Clone, Debug, Serialize)]
pub struct ChecksDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub commutative: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub associative: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub antisymmetric: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jacobi: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leibniz: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transposed_leibniz: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mixed_trivial: Option<bool>,
    pub witnesses: Vec<WitnessDoc>,
}

impl From<&IdentityReport> for ChecksDoc {
    fn from(report: &IdentityReport) -> Self {
        ChecksDoc {
            commutative: report.commutative,
            associative: report.associative,
            antisymmetric: report.antisymmetric,
            jacobi: report.jacobi,
            leibniz: report.leibniz,
            transposed_leibniz: report.transposed_leibniz,
            mixed_trivial: report.mixed_trivial,
            witnesses: report
                .witnesses
                .iter()
                .map(|w| WitnessDoc {
                    identity: w.identity.name().to_string(),
                    at: w.at.clone(),
                    residual: w.residual.iter().map(format_scalar).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CanonicalDoc {
    pub tag: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
}

impl From<&CanonicalForm> for CanonicalDoc {
    fn from(form: &CanonicalForm) -> Self {
        match form {
            CanonicalForm::Trivial => CanonicalDoc {
                tag: "Trivial".to_string(),
                s: None,
                modulus: None,
            },
            CanonicalForm::S2 => CanonicalDoc {
                tag: "S2".to_string(),
                s: None,
                modulus: None,
            },
            CanonicalForm::S3 { modulus } => CanonicalDoc {
                tag: "S3".to_string(),
                s: None,
                modulus: Some(format_scalar(modulus)),
            },
            CanonicalForm::S { s, modulus } => CanonicalDoc {
                tag: "S".to_string(),
                s: Some(*s),
                modulus: modulus.as_ref().map(format_scalar),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TermDoc {
    pub u: usize,
    pub v: usize,
    pub c: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstraintDoc {
    pub terms: Vec<TermDoc>,
}

impl From<&QuadraticForm> for ConstraintDoc {
    fn from(q: &QuadraticForm) -> Self {
        ConstraintDoc {
            terms: q
                .terms
                .iter()
                .map(|(&(u, v), c)| TermDoc {
                    u,
                    v,
                    c: format_scalar(c),
                })
                .collect(),
        }
    }
}

/// Wire form of a solved bracket space: nullspace dimension and basis,
/// plus the Jacobi identity of the general element as quadratic
/// constraints on the basis coordinates.
#[derive(Clone, Debug, Serialize)]
pub struct SolutionDoc {
    pub dimension: usize,
    pub basis: Vec<Vec<EntryDoc>>,
    pub residual_constraints: Vec<ConstraintDoc>,
}

impl From<&SolutionSpace> for SolutionDoc {
    fn from(sol: &SolutionSpace) -> Self {
        SolutionDoc {
            dimension: sol.dimension(),
            basis: sol.basis.iter().map(entries_from_map).collect(),
            residual_constraints: sol
                .residual_constraints
                .iter()
                .map(ConstraintDoc::from)
                .collect(),
        }
    }
}

fn params_strings(params: &AutomorphismParams) -> Vec<String> {
    params.coeffs().iter().map(format_scalar).collect()
}

fn alpha_strings(alpha: &AlphaParams) -> Vec<String> {
    alpha.values().iter().map(format_scalar).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct StepDoc {
    pub params: Vec<String>,
    pub alpha: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TranscriptDoc {
    pub steps: Vec<StepDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<&ReductionTranscript> for TranscriptDoc {
    fn from(t: &ReductionTranscript) -> Self {
        TranscriptDoc {
            steps: t
                .steps
                .iter()
                .map(|s| StepDoc {
                    params: params_strings(&s.params),
                    alpha: alpha_strings(&s.result),
                })
                .collect(),
            note: t.note.clone(),
        }
    }
}

/// Top-level report emitted by `verify`, `solve` and `classify`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ReportDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<ChecksDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub canonical: Option<CanonicalDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solution: Option<SolutionDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transcript: Option<TranscriptDoc>,
}

impl ReportDocument {
    pub fn emit(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IsomorphismDocument {
    pub isomorphic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

impl IsomorphismDocument {
    pub fn new(isomorphic: bool, witness: Option<&AutomorphismParams>) -> Self {
        IsomorphismDocument {
            isomorphic,
            witness: witness.map(params_strings),
        }
    }

    pub fn emit(&self) -> String {
        serde_json::to_string(self).expect("serialization cannot fail")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyDoc {
    pub tag: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    pub has_modulus: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableDocument {
    pub dim: usize,
    pub families: Vec<FamilyDoc>,
}

impl TableDocument {
    pub fn new(dim: usize, families: &[Family]) -> Self {
        TableDocument {
            dim,
            families: families
                .iter()
                .map(|f| match f {
                    Family::Trivial => FamilyDoc {
                        tag: "Trivial".to_string(),
                        s: None,
                        has_modulus: false,
                    },
                    Family::S2 => FamilyDoc {
                        tag: "S2".to_string(),
                        s: None,
                        has_modulus: false,
                    },
                    Family::S3 => FamilyDoc {
                        tag: "S3".to_string(),
                        s: None,
                        has_modulus: true,
                    },
                    Family::S { s, has_modulus } => FamilyDoc {
                        tag: "S".to_string(),
                        s: Some(*s),
                        has_modulus: *has_modulus,
                    },
                })
                .collect(),
        }
    }

    pub fn emit(&self) -> String {
        serde_json::to_string(self).expect("serialization cannot fail")
    }
}

/// Parse a comma-separated list of rationals into family parameters
/// `alpha_2..alpha_n` for dimension `dim`. The list length must be exactly
/// `dim - 1`; a short list is an error, never zero-filled. `field` names
/// the argument in error locations.
pub fn parse_alpha_csv(dim: usize, text: &str, field: &str) -> Result<AlphaParams, Error> {
    let mut values = Vec::new();
    for (idx, piece) in text.split(',').enumerate() {
        let value = parse_scalar(piece).map_err(|e| Error::Document {
            location: format!("{field}[{idx}]"),
            message: e.to_string(),
        })?;
        values.push(value);
    }
    if dim >= 2 && values.len() != dim - 1 {
        return Err(Error::Document {
            location: field.to_string(),
            message: format!(
                "expected {} comma-separated values for alpha_2..alpha_{dim}, got {}",
                dim - 1,
                values.len()
            ),
        });
    }
    AlphaParams::new(dim, values)
}

/// The machine-parsable error object printed on standard error by the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct ErrorDocument {
    pub error: ErrorBody,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

impl ErrorDocument {
    pub fn from_error(err: &Error) -> Self {
        ErrorDocument {
            error: ErrorBody {
                kind: err.kind().to_string(),
                message: err.to_string(),
            },
        }
    }

    pub fn usage(message: String) -> Self {
        ErrorDocument {
            error: ErrorBody {
                kind: "usage".to_string(),
                message,
            },
        }
    }

    pub fn emit(&self) -> String {
        serde_json::to_string(self).expect("serialization cannot fail")
    }
}
