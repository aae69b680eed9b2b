use balance_lab::balance::{balance_counts, CertificateDoc};
use balance_lab::reduction::ReductionReport;
use balance_lab::{BalanceCertificate, Graph, Verdict};
use serde::Serialize;

#[derive(Serialize)]
pub struct VerdictOut {
    pub property: String,
    pub status: String,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refutation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDoc>,
}

impl From<&Verdict> for VerdictOut {
    fn from(v: &Verdict) -> Self {
        VerdictOut {
            property: v.property.to_string(),
            status: v.status.to_string(),
            method: v.method.to_string(),
            refutation: v.refutation.map(|r| r.to_string()),
            note: v.note.clone(),
            certificate: v.certificate.as_ref().map(CertificateDoc::from),
        }
    }
}

pub fn verdict_text(v: &Verdict) -> String {
    let mut s = format!("property: {}\nstatus: {}\nmethod: {}\n", v.property, v.status, v.method);
    if let Some(r) = v.refutation {
        s.push_str(&format!("refutation: {r}\n"));
    }
    if let Some(n) = &v.note {
        s.push_str(&format!("note: {n}\n"));
    }
    if let Some(c) = &v.certificate {
        s.push_str(&format!("certificate: {}\n", balance_lab::balance::certificate_to_json(c)));
    }
    s
}

/// `e(W)` and the cut of `X` for a certificate, in its two-part form.
pub fn counts(g: &Graph, cert: &BalanceCertificate) -> (usize, usize) {
    let (w, x) = cert.to_two_part();
    (g.edges_within(&w), balance_counts(g, &x).cut)
}

#[derive(Serialize)]
pub struct ReportOut {
    pub m: usize,
    pub n_prime: usize,
    pub edge_colorable_4: bool,
    pub alpha_prime: usize,
    pub simply_balanceable_prime: String,
    pub equivalence_ok: bool,
}

impl From<&ReductionReport> for ReportOut {
    fn from(r: &ReductionReport) -> Self {
        ReportOut {
            m: r.m,
            n_prime: r.n_prime,
            edge_colorable_4: r.edge_colorable_4,
            alpha_prime: r.alpha_prime,
            simply_balanceable_prime: r.simply_balanceable_prime.status.to_string(),
            equivalence_ok: r.equivalence_ok,
        }
    }
}

pub fn report_text(r: &ReductionReport) -> String {
    format!(
        "m: {}\nn_prime: {}\nedge_colorable_4: {}\nalpha_prime: {}\nsimply_balanceable_prime: {}\nequivalence_ok: {}\n",
        r.m, r.n_prime, r.edge_colorable_4, r.alpha_prime, r.simply_balanceable_prime.status, r.equivalence_ok
    )
}
