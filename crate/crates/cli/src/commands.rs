use std::fmt;
use std::fs;
use std::io::{self, Read};
use std::path::Path;

use anyhow::{bail, Context, Result};
use balance_lab::balance::{certificate_from_json, certificate_to_json, verify_certificate, Method};
use balance_lab::characterize::{decide, DecideOptions};
use balance_lab::construct::{cubic_balance_certificate, four_regular_certificate};
use balance_lab::generate::{self, Family};
use balance_lab::io::{parse_graph6, parse_graph_text, write_graph6};
use balance_lab::reduction::{hardness_instance, reduction_equivalence_check};
use balance_lab::{BalanceCertificate, Error, Graph, Status, Verdict};
use serde::Serialize;

use crate::output::{self, ReportOut, VerdictOut};
use crate::{
    BatchArgs, CertifyArgs, CheckArgs, ConstructorArg, DecisionArgs, FamilyArg, Format, GenArgs, GraphInput, ReduceArgs,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_REJECTED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_UNDECIDED: u8 = 3;
pub const EXIT_DEFECT: u8 = 4;

/// An internal inconsistency: a constructed certificate that does not verify.
#[derive(Debug)]
pub struct Defect(pub String);

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Defect {}

pub fn library_exit_code(e: &Error) -> u8 {
    match e {
        Error::Graph6(_)
        | Error::EdgeList { .. }
        | Error::InvalidGraph(_)
        | Error::EmptyGraph
        | Error::NoSuchRegularGraph { .. }
        | Error::Precondition(_)
        | Error::Malformed(_) => EXIT_INPUT,
        Error::Inapplicable(_) | Error::BudgetExhausted(_) | Error::OverCap { .. } | Error::RetryBudget(_) => {
            EXIT_UNDECIDED
        }
        Error::ConstructionFailed(_) => EXIT_DEFECT,
    }
}

/// Exit code for an error chain; anything unrecognized (I/O included) is an input error.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<Error>() {
            return library_exit_code(e);
        }
        if cause.downcast_ref::<Defect>().is_some() {
            return EXIT_DEFECT;
        }
    }
    EXIT_INPUT
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn load_graph(input: &GraphInput) -> Result<Graph> {
    if let Some(s) = &input.graph6 {
        return Ok(parse_graph6(s.trim())?);
    }
    let text = match &input.input {
        Some(path) => read_file(path)?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin")?;
            s
        }
    };
    Ok(parse_graph_text(&text)?)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable output")
}

fn verdict_exit(v: &Verdict) -> u8 {
    if v.is_decided() {
        EXIT_OK
    } else {
        EXIT_UNDECIDED
    }
}

fn options(d: &DecisionArgs) -> DecideOptions {
    DecideOptions { strategy: d.method.into(), cap: d.cap }
}

#[derive(Serialize)]
struct VerificationOut {
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    diagnostic: Option<String>,
}

pub fn check(args: CheckArgs) -> Result<u8> {
    let g = load_graph(&args.graph)?;
    if let Some(path) = &args.certificate {
        let cert = certificate_from_json(&read_file(path)?, g.n())?;
        let ver = verify_certificate(&g, &cert)?;
        match args.format {
            Format::Json => {
                println!("{}", json(&VerificationOut { valid: ver.valid, diagnostic: ver.diagnostic.clone() }))
            }
            Format::Text if ver.valid => {
                let (w, c) = output::counts(&g, &cert);
                println!("valid: {} certificate, e(W) = {w}, cut = {c}, m = {}", cert.kind(), g.m());
            }
            Format::Text => println!("invalid: {}", ver.diagnostic.as_deref().unwrap_or("rejected")),
        }
        return Ok(if ver.valid { EXIT_OK } else { EXIT_REJECTED });
    }
    let verdict = decide(&g, args.decision.property.into(), options(&args.decision))?;
    match args.format {
        Format::Text => print!("{}", output::verdict_text(&verdict)),
        Format::Json => println!("{}", json(&VerdictOut::from(&verdict))),
    }
    Ok(verdict_exit(&verdict))
}

fn construct(g: &Graph, which: ConstructorArg) -> Result<BalanceCertificate> {
    let k = g.regular_degree();
    let cert = match (which, k) {
        (ConstructorArg::Cubic | ConstructorArg::Auto, Some(3)) => cubic_balance_certificate(g)?,
        (ConstructorArg::FourRegular | ConstructorArg::Auto, Some(4)) => four_regular_certificate(g)?,
        (ConstructorArg::Cubic, _) => bail!(Error::Inapplicable("graph is not cubic".into())),
        (ConstructorArg::FourRegular, _) => bail!(Error::Inapplicable("graph is not 4-regular".into())),
        (ConstructorArg::Auto, _) => {
            bail!(Error::Inapplicable("constructors need a cubic or 4-regular graph".into()))
        }
    };
    Ok(cert)
}

#[derive(Serialize)]
struct CertifyOut {
    kind: String,
    internal_edges: usize,
    cut_edges: usize,
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    out: Option<String>,
}

pub fn certify(args: CertifyArgs) -> Result<u8> {
    let g = load_graph(&args.graph)?;
    let cert = construct(&g, args.constructor)?;
    let text = certificate_to_json(&cert);
    let reread = match &args.out {
        Some(path) => {
            write_file(path, &format!("{text}\n"))?;
            read_file(path)?
        }
        None => {
            println!("{text}");
            text.clone()
        }
    };
    let mut verified = None;
    if args.verify {
        let back = certificate_from_json(&reread, g.n())?;
        let ver = verify_certificate(&g, &back)?;
        if back != cert || !ver.valid {
            bail!(Defect(format!(
                "certificate failed verification: {}",
                ver.diagnostic.unwrap_or_else(|| "round trip changed the certificate".into())
            )));
        }
        verified = Some(true);
    }
    let (w, c) = output::counts(&g, &cert);
    let summary = CertifyOut {
        kind: cert.kind().to_string(),
        internal_edges: w,
        cut_edges: c,
        m: g.m(),
        verified,
        out: args.out.as_ref().map(|p| p.display().to_string()),
    };
    // With no --out the certificate owns stdout; the summary goes to stderr.
    let line = match args.format {
        Format::Json => json(&summary),
        Format::Text => {
            let mut s = format!("{} certificate: e(W) = {w}, cut = {c}, m = {}", summary.kind, g.m());
            if verified.is_some() {
                s.push_str(", verified");
            }
            if let Some(p) = &summary.out {
                s.push_str(&format!(", written to {p}"));
            }
            s
        }
    };
    if args.out.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ReduceOut {
    graph6: String,
    n: usize,
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<ReportOut>,
}

pub fn reduce(args: ReduceArgs) -> Result<u8> {
    let g = load_graph(&args.graph)?;
    let instance = hardness_instance(&g)?;
    let g6 = write_graph6(&instance.graph);
    let report = if args.verify_equivalence { Some(reduction_equivalence_check(&g)?) } else { None };
    if let Some(path) = &args.out {
        write_file(path, &format!("{g6}\n"))?;
    }
    match args.format {
        Format::Json => {
            let out = ReduceOut {
                graph6: g6,
                n: instance.graph.n(),
                m: instance.graph.m(),
                report: report.as_ref().map(ReportOut::from),
            };
            println!("{}", json(&out));
        }
        Format::Text => {
            if args.out.is_none() {
                println!("{g6}");
            }
            if let Some(r) = &report {
                print!("{}", output::report_text(r));
            }
        }
    }
    match &report {
        Some(r) if !r.equivalence_ok => bail!(Defect("equivalence check failed".into())),
        _ => Ok(EXIT_OK),
    }
}

#[derive(Serialize)]
struct BatchLine {
    line: usize,
    graph6: String,
    #[serde(flatten)]
    verdict: Option<VerdictOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize, Default)]
struct BatchSummary {
    holds: usize,
    fails: usize,
    undecided: usize,
    errors: usize,
}

#[derive(Serialize)]
struct BatchOut {
    results: Vec<BatchLine>,
    summary: BatchSummary,
}

pub fn batch(args: BatchArgs) -> Result<u8> {
    let text = read_file(&args.input)?;
    let opts = options(&args.decision);
    let property = args.decision.property.into();
    let mut summary = BatchSummary::default();
    let mut results = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let s = raw.trim();
        if s.is_empty() {
            continue;
        }
        let line = idx + 1;
        let outcome = parse_graph6(s).and_then(|g| decide(&g, property, opts));
        let entry = match outcome {
            Ok(v) => {
                match v.status {
                    Status::Holds => summary.holds += 1,
                    Status::Fails => summary.fails += 1,
                    Status::Undecided => summary.undecided += 1,
                }
                BatchLine { line, graph6: s.to_string(), verdict: Some(VerdictOut::from(&v)), error: None }
            }
            Err(e) if e.is_undecided() => {
                summary.undecided += 1;
                let v = Verdict::undecided(property, Method::NoTheorem, e.to_string());
                BatchLine { line, graph6: s.to_string(), verdict: Some(VerdictOut::from(&v)), error: None }
            }
            Err(e) => {
                summary.errors += 1;
                BatchLine { line, graph6: s.to_string(), verdict: None, error: Some(e.to_string()) }
            }
        };
        if args.format == Format::Text {
            match (&entry.verdict, &entry.error) {
                (Some(v), _) => println!("{line}\t{}\t{}\t{}", entry.graph6, v.status, v.method),
                (None, Some(e)) => println!("{line}\t{}\terror\t{e}", entry.graph6),
                (None, None) => unreachable!(),
            }
        }
        results.push(entry);
    }
    let code = if summary.errors > 0 { EXIT_INPUT } else { EXIT_OK };
    match args.format {
        Format::Text => println!(
            "summary: holds {}, fails {}, undecided {}, errors {}",
            summary.holds, summary.fails, summary.undecided, summary.errors
        ),
        Format::Json => println!("{}", json(&BatchOut { results, summary })),
    }
    Ok(code)
}

pub fn gen(args: GenArgs) -> Result<u8> {
    let family = match args.family {
        FamilyArg::Cycle { n } => Family::Cycle(n),
        FamilyArg::Complete { n } => Family::Complete(n),
        FamilyArg::CompleteBipartite { a, b } => Family::CompleteBipartite(a, b),
        FamilyArg::Circulant { n, connections } => Family::Circulant(n, connections),
        FamilyArg::Hypercube { d } => Family::Hypercube(d),
        FamilyArg::Petersen => Family::Petersen,
        FamilyArg::RandomRegular { n, k } => Family::RandomRegular { n, k, seed: args.seed },
    };
    let g = generate::generate(&family)?;
    let line = write_graph6(&g);
    match &args.out {
        Some(path) => write_file(path, &format!("{line}\n"))?,
        None => println!("{line}"),
    }
    Ok(EXIT_OK)
}
