//! Certificate interchange format:
//! `{"schema":"balance-cert/1","kind":"simply_balanced","I":[...]}` or
//! `{"schema":"balance-cert/1","kind":"two_part","W":[...],"X":[...]}`,
//! vertex arrays sorted ascending.

use serde::{Deserialize, Serialize};

use super::BalanceCertificate;
use crate::error::{Error, Result};
use crate::set::VertexSet;

pub const CERT_SCHEMA: &str = "balance-cert/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub kind: String,
    #[serde(rename = "I", default, skip_serializing_if = "Option::is_none")]
    pub independent: Option<Vec<usize>>,
    #[serde(rename = "W", default, skip_serializing_if = "Option::is_none")]
    pub internal: Option<Vec<usize>>,
    #[serde(rename = "X", default, skip_serializing_if = "Option::is_none")]
    pub external: Option<Vec<usize>>,
}

impl From<&BalanceCertificate> for CertificateDoc {
    fn from(cert: &BalanceCertificate) -> Self {
        let mut doc = CertificateDoc {
            schema: Some(CERT_SCHEMA.to_string()),
            kind: cert.kind().to_string(),
            independent: None,
            internal: None,
            external: None,
        };
        match cert {
            BalanceCertificate::SimplyBalanced { independent } => doc.independent = Some(independent.to_vec()),
            BalanceCertificate::TwoPart { internal, external } => {
                doc.internal = Some(internal.to_vec());
                doc.external = Some(external.to_vec());
            }
        }
        doc
    }
}

impl CertificateDoc {
    /// Binds the document to a graph with `n` vertices.
    pub fn into_certificate(self, n: usize) -> Result<BalanceCertificate> {
        if let Some(schema) = &self.schema {
            if schema != CERT_SCHEMA {
                return Err(Error::Malformed(format!("unsupported schema {schema:?}")));
            }
        }
        let set = |name: &str, vs: Option<Vec<usize>>| -> Result<VertexSet> {
            let vs = vs.ok_or_else(|| Error::Malformed(format!("missing field {name}")))?;
            if vs.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Malformed(format!("{name} must be strictly increasing")));
            }
            VertexSet::try_from_vertices(n, vs)
                .ok_or_else(|| Error::Malformed(format!("{name} names a vertex outside 0..{n}")))
        };
        match self.kind.as_str() {
            "simply_balanced" => {
                if self.internal.is_some() || self.external.is_some() {
                    return Err(Error::Malformed("simply_balanced takes only I".into()));
                }
                Ok(BalanceCertificate::SimplyBalanced { independent: set("I", self.independent)? })
            }
            "two_part" => {
                if self.independent.is_some() {
                    return Err(Error::Malformed("two_part takes only W and X".into()));
                }
                Ok(BalanceCertificate::TwoPart {
                    internal: set("W", self.internal)?,
                    external: set("X", self.external)?,
                })
            }
            other => Err(Error::Malformed(format!("unknown kind {other:?}"))),
        }
    }
}

/// Compact single-line JSON.
pub fn certificate_to_json(cert: &BalanceCertificate) -> String {
    serde_json::to_string(&CertificateDoc::from(cert)).expect("certificate serializes")
}

pub fn certificate_from_json(text: &str, n: usize) -> Result<BalanceCertificate> {
    let doc: CertificateDoc = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    doc.into_certificate(n)
}
