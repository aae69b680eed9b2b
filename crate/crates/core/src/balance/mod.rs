//! Balance arithmetic, certificates and their verifier.
//!
//! A graph is balanceable iff it has a vertex set `W` whose induced edge count
//! is essentially half of `m` and a set `X` whose cut `e(X, V \ X)` is
//! essentially half of `m`. It is simply balanceable iff some independent set
//! has degree sum essentially half of `m`; taking `W = V \ I`, `X = I` then
//! witnesses balanceability.

mod json;
mod oracle;
mod verdict;

pub use json::{certificate_from_json, certificate_to_json, CertificateDoc, CERT_SCHEMA};
pub use oracle::{
    decide_balanceable_oracle, decide_simply_balanceable_oracle, find_externally_balanced_partition,
    find_internally_balanced_set, DEFAULT_ORACLE_CAP, MAX_ORACLE_CAP,
};
pub use verdict::{Method, Property, Refutation, Status, Verdict};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// `l ∈ {⌊k/2⌋, ⌈k/2⌉}`.
#[inline]
pub fn essentially_half(l: usize, k: usize) -> bool {
    l == k / 2 || l == k.div_ceil(2)
}

/// Edge counts relative to a vertex set `X`: inside `X`, across the cut, inside `V \ X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BalanceCounts {
    pub internal: usize,
    pub cut: usize,
    pub external_complement: usize,
}

impl BalanceCounts {
    pub fn total(&self) -> usize {
        self.internal + self.cut + self.external_complement
    }
}

pub fn balance_counts(g: &Graph, x: &VertexSet) -> BalanceCounts {
    let mut inside_twice = 0;
    let mut cut = 0;
    let mut outside_twice = 0;
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        let into_x = nb.intersection_len(x);
        if x.contains(v) {
            inside_twice += into_x;
            cut += nb.len() - into_x;
        } else {
            outside_twice += nb.len() - into_x;
        }
    }
    BalanceCounts { internal: inside_twice / 2, cut, external_complement: outside_twice / 2 }
}

/// Machine-checkable witness of (simple) balanceability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BalanceCertificate {
    /// An independent set whose degree sum is essentially half of `m`.
    SimplyBalanced { independent: VertexSet },
    /// `internal` (`W`) spans essentially half the edges; `external` (`X`) cuts essentially half.
    TwoPart { internal: VertexSet, external: VertexSet },
}

impl BalanceCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            BalanceCertificate::SimplyBalanced { .. } => "simply_balanced",
            BalanceCertificate::TwoPart { .. } => "two_part",
        }
    }

    fn universe(&self) -> usize {
        match self {
            BalanceCertificate::SimplyBalanced { independent } => independent.universe(),
            BalanceCertificate::TwoPart { internal, .. } => internal.universe(),
        }
    }

    /// The `(W, X)` form; an independent set `I` becomes `W = V \ I`, `X = I`.
    pub fn to_two_part(&self) -> (VertexSet, VertexSet) {
        match self {
            BalanceCertificate::SimplyBalanced { independent } => (independent.complement(), independent.clone()),
            BalanceCertificate::TwoPart { internal, external } => (internal.clone(), external.clone()),
        }
    }

    /// Relabels through `original[new] = old` into a universe of size `n`.
    pub fn pull_back(&self, original: &[usize], n: usize) -> BalanceCertificate {
        let map = |s: &VertexSet| VertexSet::from_vertices(n, s.iter().map(|v| original[v]));
        match self {
            BalanceCertificate::SimplyBalanced { independent } => {
                BalanceCertificate::SimplyBalanced { independent: map(independent) }
            }
            BalanceCertificate::TwoPart { internal, external } => {
                BalanceCertificate::TwoPart { internal: map(internal), external: map(external) }
            }
        }
    }

    /// Whether the certificate verifies against `g`; malformed input counts as not verifying.
    pub fn verifies(&self, g: &Graph) -> bool {
        verify_certificate(g, self).is_ok_and(|v| v.valid)
    }
}

/// Verifier outcome; `diagnostic` explains a rejection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub valid: bool,
    pub diagnostic: Option<String>,
}

impl Verification {
    fn accept() -> Self {
        Self { valid: true, diagnostic: None }
    }

    fn reject(msg: String) -> Self {
        Self { valid: false, diagnostic: Some(msg) }
    }
}

/// Checks a certificate against `g` in time linear in the size of the graph.
pub fn verify_certificate(g: &Graph, cert: &BalanceCertificate) -> Result<Verification> {
    if cert.universe() != g.n() {
        return Err(Error::Malformed(format!("certificate is over {} vertices, graph has {}", cert.universe(), g.n())));
    }
    let m = g.m();
    let range = format!("{{{}, {}}}", m / 2, m.div_ceil(2));
    Ok(match cert {
        BalanceCertificate::SimplyBalanced { independent } => {
            if let Some(v) = independent.iter().find(|&v| !g.neighbors(v).is_disjoint(independent)) {
                Verification::reject(format!("vertex {v} has a neighbor inside I"))
            } else {
                let sum = g.degree_sum(independent);
                if essentially_half(sum, m) {
                    Verification::accept()
                } else {
                    Verification::reject(format!("degree sum of I is {sum}, need one of {range}"))
                }
            }
        }
        BalanceCertificate::TwoPart { internal, external } => {
            let e_w = g.edges_within(internal);
            let cut = balance_counts(g, external).cut;
            if !essentially_half(e_w, m) {
                Verification::reject(format!("e(W) = {e_w}, need one of {range}"))
            } else if !essentially_half(cut, m) {
                Verification::reject(format!("e(X, V \\ X) = {cut}, need one of {range}"))
            } else {
                Verification::accept()
            }
        }
    })
}
