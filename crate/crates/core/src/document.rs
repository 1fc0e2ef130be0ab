//! The shared monoid JSON document: ambient rank, generator arrays, optional
//! base-ring assertions and certificate hints. Canonical serialization sorts
//! object keys, so byte-stable round trips come for free.

use crate::bounds::RingProfile;
use crate::classes::CertificateHints;
use crate::lattice::ExponentVector;
use crate::monoid::{AffineMonoid, MonoidError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("json error at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported schema version {0}")]
    SchemaVersion(u32),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonoidDocument {
    pub schema_version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub ambient_rank: usize,
    pub generators: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assertions: Option<RingProfile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hints: Option<CertificateHints>,
}

impl MonoidDocument {
    pub fn from_json(input: &str) -> Result<Self, DocumentError> {
        let doc: MonoidDocument =
            serde_json::from_str(input).map_err(|e| DocumentError::Json {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            })?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(DocumentError::SchemaVersion(doc.schema_version));
        }
        // surface invariant violations at parse time
        doc.to_monoid()?;
        Ok(doc)
    }

    pub fn to_monoid(&self) -> Result<AffineMonoid, MonoidError> {
        let gens = self
            .generators
            .iter()
            .map(|g| ExponentVector::from_i64(g))
            .collect();
        let m = AffineMonoid::new(self.ambient_rank, gens)?;
        Ok(match &self.name {
            Some(n) => m.with_name(n.clone()),
            None => m,
        })
    }

    pub fn from_monoid(m: &AffineMonoid) -> Self {
        MonoidDocument {
            schema_version: SCHEMA_VERSION,
            name: m.name().map(|s| s.to_string()),
            ambient_rank: m.ambient_rank(),
            generators: m
                .generators()
                .iter()
                .map(|g| g.to_i64_vec().expect("generator entries fit i64"))
                .collect(),
            assertions: None,
            hints: None,
        }
    }

    /// Canonical serialization: keys sorted, generators in input order,
    /// newline-terminated.
    pub fn canonical_json(&self) -> String {
        canonical_json_string(self)
    }
}

/// Serialize any value with recursively sorted object keys plus a trailing
/// newline. serde_json's default map is ordered, so converting through
/// `Value` canonicalizes key order.
pub fn canonical_json_string<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable value");
    let mut s = serde_json::to_string_pretty(&v).expect("serializable value");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_byte_stable() {
        let doc = MonoidDocument {
            schema_version: SCHEMA_VERSION,
            name: Some("example".into()),
            ambient_rank: 2,
            generators: vec![vec![2, 0], vec![1, 1]],
            assertions: Some(RingProfile::of_dimension(3)),
            hints: None,
        };
        let first = doc.canonical_json();
        let parsed = MonoidDocument::from_json(&first).unwrap();
        assert_eq!(parsed.canonical_json(), first);
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = MonoidDocument::from_json("{\n  \"schema_version\": 1,").unwrap_err();
        match err {
            DocumentError::Json { line, .. } => assert!(line >= 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn invalid_monoids_rejected_at_parse() {
        let text = r#"{"schema_version":1,"ambient_rank":2,"generators":[[0,0]]}"#;
        assert!(matches!(
            MonoidDocument::from_json(text),
            Err(DocumentError::Monoid(_))
        ));
    }
}
