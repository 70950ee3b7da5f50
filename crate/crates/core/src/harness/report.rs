//! Run reports and their JSON and text renderings.

use serde_json::{json, Map, Value as Json};
use sha2::{Digest, Sha256};

use crate::decompose::{Decomposition, PrimeWitness};
use crate::error::Error;
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::properties::{
    AssSnapshot, FailureWitness, Outcome, PropertyReport, TheoremReport, Verdict,
};

pub const SCHEMA: &str = "monideal-report/1";
pub const TOOL: &str = "monideal";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExitCode {
    Holds = 0,
    Refuted = 1,
    HypothesisNotMet = 2,
    InputError = 3,
    Budget = 4,
}

impl ExitCode {
    pub fn code(self) -> i32 {
        self as i32
    }

    pub fn of_error(e: &Error) -> Self {
        match e {
            Error::Budget { .. } | Error::Overflow(_) => ExitCode::Budget,
            _ => ExitCode::InputError,
        }
    }

    pub fn of_outcome(o: &Outcome) -> Self {
        match o {
            Outcome::Confirmed => ExitCode::Holds,
            Outcome::Violated(_) => ExitCode::Refuted,
            Outcome::HypothesisNotMet(_) => ExitCode::HypothesisNotMet,
        }
    }
}

pub fn digest(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

/// Result of one command. Outputs keep insertion order in the text
/// rendering; JSON objects are key-sorted.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub input_digest: Option<String>,
    pub options: Map<String, Json>,
    pub outputs: Map<String, Json>,
    pub lines: Vec<String>,
    pub exit_code: ExitCode,
    pub timing_ms: Option<u128>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            input_digest: None,
            options: Map::new(),
            outputs: Map::new(),
            lines: Vec::new(),
            exit_code: ExitCode::Holds,
            timing_ms: None,
        }
    }

    pub fn output(&mut self, key: &str, value: Json) {
        self.outputs.insert(key.to_string(), value);
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    /// Raises the exit code; the most severe code wins.
    pub fn exit(&mut self, code: ExitCode) {
        if code > self.exit_code {
            self.exit_code = code;
        }
    }

    pub fn error(command: impl Into<String>, e: &Error) -> Self {
        let mut r = RunReport::new(command);
        r.output("error", json!(e.to_string()));
        r.line(format!("error: {e}"));
        r.exit(ExitCode::of_error(e));
        r
    }

    pub fn to_json(&self) -> Json {
        let mut doc = json!({
            "schema": SCHEMA,
            "tool": TOOL,
            "version": VERSION,
            "command": self.command,
            "input_digest": self.input_digest,
            "options": self.options,
            "outputs": self.outputs,
            "exit_code": self.exit_code.code(),
        });
        if let Some(ms) = self.timing_ms {
            doc["timing_ms"] = json!(ms);
        }
        doc
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for l in &self.lines {
            s.push_str(l);
            s.push('\n');
        }
        if let Some(ms) = self.timing_ms {
            s.push_str(&format!("time: {ms} ms\n"));
        }
        s
    }
}

pub fn prime_json(p: &MonomialPrime) -> Json {
    json!(p.var_names())
}

pub fn primes_json(ps: &[MonomialPrime]) -> Json {
    Json::Array(ps.iter().map(prime_json).collect())
}

pub fn ideal_json(i: &MonomialIdeal) -> Json {
    json!(i.generator_strings())
}

pub fn decomposition_json(d: &Decomposition) -> Json {
    Json::Array(d.components.iter().map(|c| json!(c.to_string())).collect())
}

pub fn witness_json(i: &MonomialIdeal, w: &PrimeWitness) -> Json {
    json!({
        "prime": prime_json(w.prime()),
        "witness": i.format_monomial(w.witness()),
    })
}

pub fn theorem_json(r: &TheoremReport) -> Json {
    let (outcome, detail) = match &r.outcome {
        Outcome::Confirmed => ("confirmed", None),
        Outcome::Violated(m) => ("violated", Some(m.clone())),
        Outcome::HypothesisNotMet(m) => ("hypothesis-not-met", Some(m.clone())),
    };
    json!({
        "claim": r.claim,
        "bound": r.bound,
        "outcome": outcome,
        "detail": detail,
        "facts": r.facts,
    })
}

pub fn theorem_lines(r: &TheoremReport) -> Vec<String> {
    let mut out = vec![match &r.outcome {
        Outcome::Confirmed => format!("{}: confirmed", r.claim),
        Outcome::Violated(m) => format!("{}: violated: {m}", r.claim),
        Outcome::HypothesisNotMet(m) => format!("{}: hypothesis not met: {m}", r.claim),
    }];
    out.extend(r.facts.iter().map(|f| format!("  {f}")));
    out
}

fn failure_json(i: &MonomialIdeal, w: &FailureWitness) -> Json {
    match w {
        FailureWitness::Prime { prime, witness } => json!({
            "prime": prime_json(prime),
            "witness": witness.as_ref().map(|h| i.format_monomial(h)),
        }),
        FailureWitness::IdealPair {
            left,
            right,
            generator,
        } => json!({
            "left": ideal_json(left),
            "right": ideal_json(right),
            "generator": i.format_monomial(generator),
        }),
    }
}

pub fn verdict_json(i: &MonomialIdeal, v: &Verdict) -> Json {
    match v {
        Verdict::HoldsUpTo { bound } => json!({"status": "holds-up-to", "bound": bound}),
        Verdict::FailsAt { power, witness } => json!({
            "status": "fails-at",
            "power": power,
            "witness": failure_json(i, witness),
        }),
        Verdict::Certified { bound, certificate } => json!({
            "status": "certified",
            "bound": bound,
            "certificate": certificate.to_string(),
        }),
    }
}

pub fn verdict_line(i: &MonomialIdeal, v: &Verdict) -> String {
    match v {
        Verdict::HoldsUpTo { bound } => format!("holds up to {bound} (bounded check only)"),
        Verdict::Certified { bound, certificate } => {
            format!("holds for all powers (checked up to {bound}; certificate {certificate})")
        }
        Verdict::FailsAt { power, witness } => match witness {
            FailureWitness::Prime { prime, witness } => match witness {
                Some(h) => format!("fails at k = {power}: {prime} via {}", i.format_monomial(h)),
                None => format!("fails at k = {power}: {prime}"),
            },
            FailureWitness::IdealPair { generator, .. } => format!(
                "fails at k = {power}: {} separates the two sides",
                i.format_monomial(generator)
            ),
        },
    }
}

fn snapshot_json(s: &AssSnapshot) -> Json {
    json!({"power": s.power, "primes": primes_json(&s.primes)})
}

pub fn property_json(r: &PropertyReport) -> Json {
    let verdicts: Map<String, Json> = r
        .verdicts
        .iter()
        .map(|(p, v)| (p.name().to_string(), verdict_json(&r.ideal, v)))
        .collect();
    json!({
        "ideal": ideal_json(&r.ideal),
        "max_power": r.max_power,
        "verdicts": verdicts,
        "ass": r.snapshots.iter().map(snapshot_json).collect::<Vec<_>>(),
        "implied": r.implied_properties(),
    })
}
