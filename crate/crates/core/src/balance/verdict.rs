use std::fmt;

use serde::{Deserialize, Serialize};

use super::BalanceCertificate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Balanceable,
    SimplyBalanceable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Fails,
    Undecided,
}

/// Why a `Fails` verdict is trustworthy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Refutation {
    ExhaustiveSearch,
    ParityCondition,
    IndependenceBound,
}

/// The rule that produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Oracle,
    Edgeless,
    NecessaryConditions,
    OneRegular,
    TwoRegular,
    RegularIndependence,
    CubicConstruction,
    FourRegularConstruction,
    NoTheorem,
}

macro_rules! kebab_display {
    ($($t:ty),*) => {$(
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let s = serde_json::to_value(self).expect("unit variants serialize");
                f.write_str(s.as_str().expect("unit variants serialize to strings"))
            }
        }
    )*};
}

kebab_display!(Property, Status, Refutation, Method);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub property: Property,
    pub status: Status,
    pub certificate: Option<BalanceCertificate>,
    pub refutation: Option<Refutation>,
    pub method: Method,
    pub note: Option<String>,
}

impl Verdict {
    pub fn holds(property: Property, certificate: BalanceCertificate, method: Method) -> Self {
        Self { property, status: Status::Holds, certificate: Some(certificate), refutation: None, method, note: None }
    }

    pub fn fails(property: Property, refutation: Refutation, method: Method) -> Self {
        Self { property, status: Status::Fails, certificate: None, refutation: Some(refutation), method, note: None }
    }

    pub fn undecided(property: Property, method: Method, note: impl Into<String>) -> Self {
        Self {
            property,
            status: Status::Undecided,
            certificate: None,
            refutation: None,
            method,
            note: Some(note.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn is_decided(&self) -> bool {
        self.status != Status::Undecided
    }
}
