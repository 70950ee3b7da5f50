use std::fmt;

use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::monomial::Monomial;
use crate::properties::certificate::Certificate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    NormallyTorsionFree,
    Persistence,
    StrongPersistence,
    SymbolicStrongPersistence,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::NormallyTorsionFree => "normally-torsion-free",
            Property::Persistence => "persistence",
            Property::StrongPersistence => "strong-persistence",
            Property::SymbolicStrongPersistence => "symbolic-strong-persistence",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evidence attached to a failed property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureWitness {
    /// A prime that should not be associated (or should be), with the
    /// monomial realizing it as a colon ideal of the relevant power.
    Prime {
        prime: MonomialPrime,
        witness: Option<Monomial>,
    },
    /// `left != right`; `generator` lies in `left` but not in `right`.
    IdealPair {
        left: MonomialIdeal,
        right: MonomialIdeal,
        generator: Monomial,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Checked for every power up to the bound; says nothing beyond it.
    HoldsUpTo {
        bound: u32,
    },
    FailsAt {
        power: u32,
        witness: FailureWitness,
    },
    /// Checked up to the bound and backed by a structural argument that
    /// covers every power.
    Certified {
        bound: u32,
        certificate: Certificate,
    },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        !matches!(self, Verdict::FailsAt { .. })
    }

    pub fn failing_power(&self) -> Option<u32> {
        match self {
            Verdict::FailsAt { power, .. } => Some(*power),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssSnapshot {
    pub power: u32,
    pub primes: Vec<MonomialPrime>,
}

/// Outcome of bounded power-by-power property checks on one ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub ideal: MonomialIdeal,
    pub max_power: u32,
    pub verdicts: Vec<(Property, Verdict)>,
    pub snapshots: Vec<AssSnapshot>,
}

impl PropertyReport {
    pub fn verdict(&self, property: Property) -> Option<&Verdict> {
        self.verdicts
            .iter()
            .find(|(p, _)| *p == property)
            .map(|(_, v)| v)
    }

    pub fn holds(&self) -> bool {
        self.verdicts.iter().all(|(_, v)| v.holds())
    }

    /// Consequences that follow for every power, not just the checked ones:
    /// a certified square-free normally torsion-free ideal is normal and has
    /// the (symbolic) (strong) persistence properties.
    pub fn implied_properties(&self) -> Vec<&'static str> {
        match self.verdict(Property::NormallyTorsionFree) {
            Some(Verdict::Certified { .. }) if self.ideal.is_squarefree() => vec![
                "normal",
                "strong-persistence",
                "persistence",
                "symbolic-strong-persistence",
            ],
            _ => Vec::new(),
        }
    }
}

/// Result of checking one executable claim on one input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Confirmed,
    Violated(String),
    HypothesisNotMet(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub claim: &'static str,
    pub bound: Option<u32>,
    pub outcome: Outcome,
    /// Deterministic, human-readable record of what was checked.
    pub facts: Vec<String>,
}

impl TheoremReport {
    pub(crate) fn new(claim: &'static str, bound: Option<u32>) -> Self {
        TheoremReport {
            claim,
            bound,
            outcome: Outcome::Confirmed,
            facts: Vec::new(),
        }
    }

    pub(crate) fn fact(&mut self, line: impl Into<String>) {
        self.facts.push(line.into());
    }

    /// Records a violation; the first one wins.
    pub(crate) fn violate(&mut self, msg: impl Into<String>) {
        let msg = msg.into();
        self.facts.push(format!("VIOLATION: {msg}"));
        if self.outcome == Outcome::Confirmed {
            self.outcome = Outcome::Violated(msg);
        }
    }

    pub(crate) fn not_met(mut self, msg: impl Into<String>) -> Self {
        let msg = msg.into();
        self.facts.push(format!("hypothesis not met: {msg}"));
        self.outcome = Outcome::HypothesisNotMet(msg);
        self
    }

    pub fn confirmed(&self) -> bool {
        self.outcome == Outcome::Confirmed
    }

    pub fn violated(&self) -> bool {
        matches!(self.outcome, Outcome::Violated(_))
    }
}
