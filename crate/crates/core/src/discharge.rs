//! Executable discharging with rules R1–R4 and the ghost-vertex check.
//!
//! Every vertex starts with `d(x) − 3`. All transfers are computed from the
//! initial classification in a single round.

use std::fmt;
use std::fmt::Write as _;

use thiserror::Error;

use crate::classify::{classify, VertexClass, VertexKind};
use crate::configs::{find_configs, ConfigError, ConfigMatch, SearchMode};
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::mad::mad_exact;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Amount moved by each rule. The defaults are the real rules; other
/// values exist for mutation testing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleAmounts {
    pub r1: Rational,
    pub r2: Rational,
    pub r3: Rational,
    pub r4: Rational,
}

impl Default for RuleAmounts {
    fn default() -> Self {
        let half = Rational::new(1, 2);
        RuleAmounts {
            r1: Rational::integer(1),
            r2: Rational::integer(1),
            r3: half,
            r4: half,
        }
    }
}

impl RuleAmounts {
    pub fn amount(&self, rule: Rule) -> Rational {
        match rule {
            Rule::R1 => self.r1,
            Rule::R2 => self.r2,
            Rule::R3 => self.r3,
            Rule::R4 => self.r4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transfer {
    pub rule: Rule,
    pub from: usize,
    pub to: usize,
    pub amount: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeLedger {
    pub initial: Vec<Rational>,
    pub transfers: Vec<Transfer>,
    pub final_weights: Vec<Rational>,
}

impl ChargeLedger {
    pub fn received(&self, v: usize) -> Rational {
        self.transfers.iter().filter(|t| t.to == v).map(|t| t.amount).sum()
    }

    pub fn given(&self, v: usize) -> Rational {
        self.transfers.iter().filter(|t| t.from == v).map(|t| t.amount).sum()
    }

    pub fn is_conserved(&self) -> bool {
        self.initial.iter().copied().sum::<Rational>() == self.final_weights.iter().copied().sum::<Rational>()
    }

    /// Table of vertex, degree, class, initial, received, given, final.
    pub fn render_table(&self, g: &Graph) -> String {
        let class = classify(g);
        let mut out = String::from("vertex degree class initial received given final\n");
        for (v, c) in class.iter().enumerate() {
            writeln!(
                out,
                "{v} {} {} {} {} {} {}",
                c.degree,
                c.kind,
                self.initial[v],
                self.received(v),
                self.given(v),
                self.final_weights[v]
            )
            .expect("write to string");
        }
        out
    }
}

fn rule_for(donor: usize, taker: &VertexClass) -> Option<Rule> {
    match taker.kind {
        VertexKind::One if donor >= 5 => Some(Rule::R1),
        VertexKind::BadTwo if donor >= 4 => Some(Rule::R2),
        VertexKind::GoodTwo if donor >= 3 => Some(Rule::R3),
        VertexKind::BadThree if donor >= 4 => Some(Rule::R4),
        _ => None,
    }
}

pub fn discharge(g: &Graph) -> ChargeLedger {
    discharge_with(g, &RuleAmounts::default())
}

pub fn discharge_with(g: &Graph, amounts: &RuleAmounts) -> ChargeLedger {
    let class = classify(g);
    let initial: Vec<Rational> = (0..g.n()).map(|v| Rational::integer(g.degree(v) as i64 - 3)).collect();
    let mut transfers = Vec::new();
    for from in 0..g.n() {
        for to in g.neighbors(from) {
            if let Some(rule) = rule_for(g.degree(from), &class[to]) {
                transfers.push(Transfer {
                    rule,
                    from,
                    to,
                    amount: amounts.amount(rule),
                });
            }
        }
    }
    let mut final_weights = initial.clone();
    for t in &transfers {
        final_weights[t.from] -= t.amount;
        final_weights[t.to] += t.amount;
    }
    ChargeLedger {
        initial,
        transfers,
        final_weights,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GhostFailure {
    /// A vertex of degree at least 2 ends negative.
    NegativeCore,
    /// A 1-vertex ends below `d − 3 + d_{V1}`.
    LeafDeficit,
}

impl fmt::Display for GhostFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GhostFailure::NegativeCore => "V1-negative",
            GhostFailure::LeafDeficit => "V2-deficit",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GhostVerdict {
    Pass,
    Fail { vertex: usize, reason: GhostFailure },
}

/// The two hypotheses of the ghost-vertex accounting, with `V1` the
/// vertices of degree at least 2 and `V2` the 1-vertices. Isolated vertices
/// belong to neither part.
pub fn ghost_check(g: &Graph, ledger: &ChargeLedger) -> GhostVerdict {
    for v in 0..g.n() {
        let w = ledger.final_weights[v];
        let reason = match g.degree(v) {
            0 => None,
            1 => {
                let core = g.neighbors(v).filter(|&x| g.degree(x) >= 2).count() as i64;
                (w < Rational::integer(1 - 3 + core)).then_some(GhostFailure::LeafDeficit)
            }
            _ => (w < Rational::zero()).then_some(GhostFailure::NegativeCore),
        };
        if let Some(reason) = reason {
            return GhostVerdict::Fail { vertex: v, reason };
        }
    }
    GhostVerdict::Pass
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DischargeError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("graph has an isolated edge")]
    IsolatedEdge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub graph6: String,
    pub k: usize,
    pub failure: String,
    pub ledger: ChargeLedger,
    pub table: String,
    pub configs: Vec<ConfigMatch>,
}

impl fmt::Display for CounterexampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "counterexample {} k={}: {}", self.graph6, self.k, self.failure)?;
        for m in &self.configs {
            writeln!(f, "  {m}")?;
        }
        write!(f, "{}", self.table)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TheoremVerdict {
    Consistent,
    Counterexample(Box<CounterexampleReport>),
}

/// Checks: no configuration ⇒ ghost check passes, every 1-vertex ends at
/// exactly −1, charge is conserved, and `mad ≥ 3`. Edgeless graphs are
/// consistent by convention.
pub fn verify_discharging_theorem(g: &Graph, k: usize) -> Result<TheoremVerdict, DischargeError> {
    verify_discharging_theorem_with(g, k, &RuleAmounts::default())
}

pub fn verify_discharging_theorem_with(
    g: &Graph,
    k: usize,
    amounts: &RuleAmounts,
) -> Result<TheoremVerdict, DischargeError> {
    if g.has_isolated_edge() {
        return Err(DischargeError::IsolatedEdge);
    }
    let configs = find_configs(g, k, SearchMode::FirstByIndex)?;
    if !configs.is_empty() || g.m() == 0 {
        return Ok(TheoremVerdict::Consistent);
    }
    let ledger = discharge_with(g, amounts);
    let mut failure = None;
    if !ledger.is_conserved() {
        failure = Some("charge not conserved".to_string());
    }
    if failure.is_none() {
        if let GhostVerdict::Fail { vertex, reason } = ghost_check(g, &ledger) {
            failure = Some(format!("ghost check: vertex {vertex} {reason}"));
        }
    }
    if failure.is_none() {
        let leaf = (0..g.n()).find(|&v| g.degree(v) == 1 && ledger.final_weights[v] != Rational::integer(-1));
        if let Some(v) = leaf {
            failure = Some(format!("1-vertex {v} ends at {}", ledger.final_weights[v]));
        }
    }
    if failure.is_none() {
        let mad = mad_exact(g);
        if mad < Rational::integer(3) {
            failure = Some(format!("configuration-free with mad = {mad}"));
        }
    }
    Ok(match failure {
        None => TheoremVerdict::Consistent,
        Some(failure) => TheoremVerdict::Counterexample(Box::new(CounterexampleReport {
            graph6: encode_graph6(g),
            k,
            failure,
            table: ledger.render_table(g),
            ledger,
            configs,
        })),
    })
}
