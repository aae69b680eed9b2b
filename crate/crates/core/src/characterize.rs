//! Theorem-backed deciders. Exact search is used only where a characterization
//! reduces the question to an independence-number fact.

use serde::{Deserialize, Serialize};

use crate::balance::{
    decide_balanceable_oracle, decide_simply_balanceable_oracle, verify_certificate, BalanceCertificate, Method,
    Property, Refutation, Verdict, DEFAULT_ORACLE_CAP,
};
use crate::construct::{cubic_balance_certificate, four_regular_certificate, independent_set_of_size};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::independent_set_at_least;
use crate::set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    /// An even graph (all degrees even) can only be balanceable when `m` is odd or divisible by 4.
    EvenGraphEdgeParity,
    /// A 4-regular graph can only be balanceable when `n` is even.
    FourRegularOddOrder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionCheck {
    pub condition: Condition,
    pub applicable: bool,
    pub satisfied: bool,
}

/// Necessary conditions for balanceability. Inapplicable conditions count as satisfied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessaryConditionReport {
    pub checks: Vec<ConditionCheck>,
}

impl NecessaryConditionReport {
    pub fn all_satisfied(&self) -> bool {
        self.checks.iter().all(|c| c.satisfied)
    }

    pub fn violations(&self) -> impl Iterator<Item = Condition> + '_ {
        self.checks.iter().filter(|c| !c.satisfied).map(|c| c.condition)
    }
}

pub fn necessary_conditions(g: &Graph) -> NecessaryConditionReport {
    let m = g.m();
    let even = (0..g.n()).all(|v| g.degree(v).is_multiple_of(2));
    let four_regular = g.regular_degree() == Some(4);
    NecessaryConditionReport {
        checks: vec![
            ConditionCheck {
                condition: Condition::EvenGraphEdgeParity,
                applicable: even,
                satisfied: !even || m % 2 == 1 || m.is_multiple_of(4),
            },
            ConditionCheck {
                condition: Condition::FourRegularOddOrder,
                applicable: four_regular,
                satisfied: !four_regular || g.n().is_multiple_of(2),
            },
        ],
    }
}

fn checked_holds(g: &Graph, property: Property, cert: BalanceCertificate, method: Method) -> Result<Verdict> {
    let check = verify_certificate(g, &cert)?;
    if !check.valid {
        return Err(Error::ConstructionFailed(format!(
            "{method} produced a rejected certificate: {}",
            check.diagnostic.unwrap_or_default()
        )));
    }
    Ok(Verdict::holds(property, cert, method))
}

/// Simple balanceability of a regular graph.
///
/// * `k = 0`: holds with the empty set.
/// * `k = 1`: holds; one endpoint from each of `⌈m/2⌉` edges.
/// * `k = 2`: holds iff `n ≢ 2 (mod 4)`, with `|I|` equal to `n/4`, `p` or `p + 1`
///   for `n = 4p`, `4p + 1`, `4p + 3`.
/// * `k >= 3`: holds iff `n ≡ 0 (mod 4)` and `α(G) >= n/4`.
pub fn regular_simply_balanceable(g: &Graph) -> Result<Verdict> {
    let p = Property::SimplyBalanceable;
    let k = g.regularity()?.k.ok_or_else(|| Error::Inapplicable("graph is not regular".into()))?;
    let n = g.n();
    match k {
        0 => checked_holds(
            g,
            p,
            BalanceCertificate::SimplyBalanced { independent: VertexSet::empty(n) },
            Method::Edgeless,
        ),
        1 => {
            let take = g.m().div_ceil(2);
            let independent = VertexSet::from_vertices(n, g.edges().take(take).map(|(u, _)| u));
            checked_holds(g, p, BalanceCertificate::SimplyBalanced { independent }, Method::OneRegular)
        }
        2 => {
            let size = match n % 4 {
                0 => n / 4,
                1 => n / 4,
                3 => n / 4 + 1,
                _ => return Ok(Verdict::fails(p, Refutation::ParityCondition, Method::TwoRegular)),
            };
            let independent = independent_set_of_size(g, size)?;
            checked_holds(g, p, BalanceCertificate::SimplyBalanced { independent }, Method::TwoRegular)
        }
        _ => {
            if !n.is_multiple_of(4) {
                return Ok(Verdict::fails(p, Refutation::ParityCondition, Method::RegularIndependence));
            }
            match independent_set_at_least(g, n / 4) {
                Ok(Some(independent)) => {
                    checked_holds(g, p, BalanceCertificate::SimplyBalanced { independent }, Method::RegularIndependence)
                }
                Ok(None) => Ok(Verdict::fails(p, Refutation::IndependenceBound, Method::RegularIndependence)
                    .with_note(format!("independence number below n/4 = {}", n / 4))),
                Err(e @ Error::BudgetExhausted(_)) => {
                    Ok(Verdict::undecided(p, Method::RegularIndependence, e.to_string()))
                }
                Err(e) => Err(e),
            }
        }
    }
}

/// Applies, in order: the edgeless case, necessary conditions, the regular
/// characterizations and the cubic / 4-regular constructions. Anything else is
/// left undecided. Errors signal a defect in a construction, never an answer.
pub fn decide_with_theorems(g: &Graph, property: Property) -> Result<Verdict> {
    if g.m() == 0 {
        let empty = BalanceCertificate::SimplyBalanced { independent: VertexSet::empty(g.n()) };
        return checked_holds(g, property, empty, Method::Edgeless);
    }
    let report = necessary_conditions(g);
    if let Some(violated) = report.violations().next() {
        let name = serde_json::to_value(violated).expect("serializable");
        return Ok(Verdict::fails(property, Refutation::ParityCondition, Method::NecessaryConditions)
            .with_note(format!("violates {}", name.as_str().unwrap_or_default())));
    }

    let Some(k) = g.regular_degree() else {
        return Ok(Verdict::undecided(property, Method::NoTheorem, "no characterization for non-regular graphs"));
    };
    match property {
        Property::SimplyBalanceable => regular_simply_balanceable(g),
        Property::Balanceable => match k {
            1 | 2 => {
                let mut v = regular_simply_balanceable(g)?;
                v.property = Property::Balanceable;
                Ok(v)
            }
            3 => checked_holds(g, property, cubic_balance_certificate(g)?, Method::CubicConstruction),
            4 if g.n().is_multiple_of(4) => {
                checked_holds(g, property, four_regular_certificate(g)?, Method::FourRegularConstruction)
            }
            4 => Ok(Verdict::undecided(property, Method::NoTheorem, "4-regular of order 2 mod 4: both outcomes occur")),
            _ => Ok(Verdict::undecided(property, Method::NoTheorem, format!("no theorem covers {k}-regular graphs"))),
        },
    }
}

/// How a decision may be reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Theorems first, then the oracle when the graph is under the cap.
    #[default]
    Auto,
    Theorem,
    Oracle,
    /// Only the certificate constructors.
    Construct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecideOptions {
    pub strategy: Strategy,
    pub cap: usize,
}

impl Default for DecideOptions {
    fn default() -> Self {
        Self { strategy: Strategy::Auto, cap: DEFAULT_ORACLE_CAP }
    }
}

fn oracle(g: &Graph, property: Property, cap: usize) -> Result<Verdict> {
    match property {
        Property::Balanceable => decide_balanceable_oracle(g, cap),
        Property::SimplyBalanceable => decide_simply_balanceable_oracle(g, cap),
    }
}

pub fn decide(g: &Graph, property: Property, opts: DecideOptions) -> Result<Verdict> {
    match opts.strategy {
        Strategy::Theorem => decide_with_theorems(g, property),
        Strategy::Oracle => {
            if g.n() > opts.cap {
                return Err(Error::OverCap { n: g.n(), cap: opts.cap });
            }
            oracle(g, property, opts.cap)
        }
        Strategy::Auto => {
            let v = decide_with_theorems(g, property)?;
            if v.is_decided() || g.n() > opts.cap {
                return Ok(v);
            }
            let prior = v.note.unwrap_or_default();
            let fallback = oracle(g, property, opts.cap)?;
            Ok(fallback.with_note(format!("oracle fallback ({prior})")))
        }
        Strategy::Construct => {
            if property != Property::Balanceable {
                return Err(Error::Inapplicable("constructors certify balanceability only".into()));
            }
            match g.regular_degree() {
                Some(3) => checked_holds(g, property, cubic_balance_certificate(g)?, Method::CubicConstruction),
                Some(4) => checked_holds(g, property, four_regular_certificate(g)?, Method::FourRegularConstruction),
                _ => Err(Error::Inapplicable("constructors need a cubic or 4-regular graph".into())),
            }
        }
    }
}
