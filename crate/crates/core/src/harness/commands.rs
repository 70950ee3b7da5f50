//! Command dispatch: one function per subcommand, each filling a
//! [`RunReport`].

use std::fmt;

use serde_json::{json, Map, Value as Json};

use crate::arith::product;
use crate::decompose::{
    all_witnesses, associated_primes, embedded_primes, height, irreducible_decomposition,
    is_unmixed, minimal_primes, witness_for,
};
use crate::error::{Budget, Error, Result};
use crate::harness::eval::Environment;
use crate::harness::parser::parse_ideal_document;
use crate::harness::report::{
    decomposition_json, digest, ideal_json, prime_json, primes_json, property_json, theorem_json,
    theorem_lines, verdict_line, witness_json, ExitCode, RunReport,
};
use crate::harness::reproduce::reproduce_paper;
use crate::harness::sweep::{run_suite, Suite, DEFAULT_COUNT};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::monomial::Monomial;
use crate::properties::theorems::{
    check_beta1_bound, check_deletion_colon_criterion, check_deletion_witness, check_disjoint_ass,
    check_konig_ntf, check_minprime_witness, check_ppsquared_ntf, check_transversal_ntf,
    check_witness_degree, check_witness_nondivisibility, question_4_13_counterexample,
};
use crate::properties::{
    check_corner_divisibility, check_report, corner_elements, Property, TheoremReport,
    DEFAULT_MAX_POWER,
};
use crate::structure::{
    beta1_with_budget, is_t_spread, max_disjoint_generators, symbolic_power, transversal_factors,
};

pub const VERIFY_IDS: [&str; 12] = [
    "thm-disjoint-ass",
    "thm-deletion-colon",
    "cor-beta1-bound",
    "thm-konig-ntf",
    "thm-pp2-ntf",
    "thm-transversal-ntf",
    "prop-corner-nondiv",
    "lemma-deletion-witness",
    "cor-corner-div",
    "prop-witness-degree",
    "prop-minprime-witness",
    "q413-counterexample",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Ass,
    Min,
    Embedded,
    Decompose,
    Height,
    Unmixed,
    Beta1,
    Konig,
    Symbolic,
    Ntf,
    Persistence,
    StrongPersistence,
    SymbolicSp,
    Corners,
    Witness,
    Tspread,
    Verify(String),
    ReproducePaper,
    RandomSweep,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Ass => "ass",
            Command::Min => "min",
            Command::Embedded => "embedded",
            Command::Decompose => "decompose",
            Command::Height => "height",
            Command::Unmixed => "unmixed",
            Command::Beta1 => "beta1",
            Command::Konig => "konig",
            Command::Symbolic => "symbolic",
            Command::Ntf => "ntf",
            Command::Persistence => "persistence",
            Command::StrongPersistence => "strong-persistence",
            Command::SymbolicSp => "symbolic-sp",
            Command::Corners => "corners",
            Command::Witness => "witness",
            Command::Tspread => "tspread",
            Command::Verify(_) => "verify",
            Command::ReproducePaper => "reproduce-paper",
            Command::RandomSweep => "random-sweep",
        }
    }

    /// Whether the command reads an ideal document.
    pub fn needs_document(&self) -> bool {
        match self {
            Command::ReproducePaper | Command::RandomSweep => false,
            Command::Verify(id) => id != "q413-counterexample",
            _ => true,
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Verify(id) => write!(f, "verify {id}"),
            c => f.write_str(c.name()),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Options {
    /// Binding to operate on; the last ideal binding when absent.
    pub ideal: Option<String>,
    /// Second binding, for `verify thm-disjoint-ass`.
    pub with: Option<String>,
    pub power: Option<u32>,
    pub max_power: Option<u32>,
    pub seed: Option<u64>,
    pub budget: Budget,
    pub prime: Option<String>,
    pub monomial: Option<String>,
    pub vars: Vec<String>,
    pub spread: Option<usize>,
    pub count: Option<usize>,
    pub suite: Option<String>,
}

impl Options {
    fn to_json(&self) -> Map<String, Json> {
        let mut m = Map::new();
        let mut put = |k: &str, v: Json| {
            if !v.is_null() {
                m.insert(k.to_string(), v);
            }
        };
        put("ideal", json!(self.ideal));
        put("with", json!(self.with));
        put("power", json!(self.power));
        put("max_power", json!(self.max_power));
        put("seed", json!(self.seed));
        put("prime", json!(self.prime));
        put("monomial", json!(self.monomial));
        if !self.vars.is_empty() {
            put("vars", json!(self.vars));
        }
        put("spread", json!(self.spread));
        put("count", json!(self.count));
        put("suite", json!(self.suite));
        put(
            "budget",
            json!({
                "cells": self.budget.max_cells,
                "generators": self.budget.max_generators,
                "nodes": self.budget.max_nodes,
            }),
        );
        m
    }

    fn power_or(&self, default: u32) -> Result<u32> {
        let t = self.power.unwrap_or(default);
        if t == 0 {
            return Err(Error::domain("--power must be at least 1"));
        }
        Ok(t)
    }

    fn max_power(&self) -> Result<u32> {
        let t = self.max_power.unwrap_or(DEFAULT_MAX_POWER);
        if t == 0 {
            return Err(Error::domain("--max-power must be at least 1"));
        }
        Ok(t)
    }
}

/// Runs `command` on the document `input` (if the command needs one).
/// Never panics on bad input: every failure becomes a report with exit
/// code 3 or 4.
pub fn run_command(input: Option<&str>, command: &Command, opts: &Options) -> RunReport {
    let mut report = RunReport::new(command.to_string());
    report.options = opts.to_json();
    report.input_digest = input.map(|t| digest(t.as_bytes()));
    let result = match (command, input) {
        (Command::ReproducePaper, _) => {
            let mut r = reproduce_paper(&opts.budget);
            r.options = report.options;
            r.input_digest = report.input_digest;
            return r;
        }
        (Command::RandomSweep, _) => random_sweep(&mut report, opts),
        (Command::Verify(id), _) if id == "q413-counterexample" => {
            question_4_13_counterexample().map(|r| theorem(&mut report, &r))
        }
        (_, None) => Err(Error::domain(format!(
            "`{command}` needs an ideal document"
        ))),
        (_, Some(text)) => parse_ideal_document(text)
            .and_then(|doc| doc.evaluate(&opts.budget))
            .and_then(|env| dispatch(&mut report, &env, command, opts)),
    };
    if let Err(e) = result {
        let mut err = RunReport::error(command.to_string(), &e);
        err.options = report.options;
        err.input_digest = report.input_digest;
        return err;
    }
    report
}

fn dispatch(
    report: &mut RunReport,
    env: &Environment,
    command: &Command,
    opts: &Options,
) -> Result<()> {
    let i = env.ideal(opts.ideal.as_deref())?;
    let name = env.ideal_name(opts.ideal.as_deref()).unwrap_or_default();
    report.output("ideal", json!(name));
    report.output("generators", ideal_json(i));
    let budget = &opts.budget;
    match command {
        Command::Ass | Command::Min | Command::Embedded => {
            let t = opts.power_or(1)?;
            let j = powered(i, t, budget)?;
            let primes = match command {
                Command::Ass => associated_primes(&j)?,
                Command::Min => minimal_primes(&j)?,
                _ => embedded_primes(&j)?,
            };
            report.output("power", json!(t));
            report.output("primes", primes_json(&primes));
            for p in &primes {
                report.line(p.to_string());
            }
        }
        Command::Decompose => {
            let t = opts.power_or(1)?;
            let j = powered(i, t, budget)?;
            let d = irreducible_decomposition(&j)?;
            report.output("power", json!(t));
            report.output("components", decomposition_json(&d));
            let primary: Map<String, Json> = d
                .primary_components()?
                .iter()
                .map(|(p, q)| (p.to_string(), ideal_json(q)))
                .collect();
            report.output("primary", Json::Object(primary));
            for c in &d.components {
                report.line(c.to_string());
            }
        }
        Command::Height => {
            let h = height(i)?;
            report.output("height", json!(h));
            report.line(h.to_string());
        }
        Command::Unmixed => {
            let u = is_unmixed(i)?;
            report.output("unmixed", json!(u));
            report.line(u.to_string());
            if !u {
                let ass = associated_primes(i)?;
                let lo = ass.iter().min_by_key(|p| p.height()).expect("nonempty");
                let hi = ass.iter().max_by_key(|p| p.height()).expect("nonempty");
                report.output("witness", json!([prime_json(lo), prime_json(hi)]));
                report.line(format!(
                    "{lo} has height {}, {hi} has height {}",
                    lo.height(),
                    hi.height()
                ));
                report.exit(ExitCode::Refuted);
            }
        }
        Command::Beta1 => {
            let (b, set) = beta1_with_budget(i, budget)?;
            let set: Vec<String> = set.iter().map(|g| i.format_monomial(g)).collect();
            report.output("beta1", json!(b));
            report.output("independent_set", json!(set));
            report.line(format!("{b} via [{}]", set.join(", ")));
        }
        Command::Konig => {
            let disjoint = max_disjoint_generators(i)?;
            let h = height(i)?;
            report.output("konig", json!(disjoint == h));
            report.output("max_disjoint_generators", json!(disjoint));
            report.output("height", json!(h));
            report.line(format!(
                "{} (disjoint generators {disjoint}, height {h})",
                disjoint == h
            ));
            if disjoint != h {
                report.exit(ExitCode::Refuted);
            }
        }
        Command::Symbolic => {
            let k = opts.power_or(2)?;
            let s = symbolic_power(i, k)?;
            budget.check_generators(format!("generators of the symbolic power {k}"), s.len())?;
            report.output("power", json!(k));
            report.output("symbolic_power", ideal_json(&s));
            report.line(s.to_string());
        }
        Command::Ntf | Command::Persistence | Command::StrongPersistence | Command::SymbolicSp => {
            let property = match command {
                Command::Ntf => Property::NormallyTorsionFree,
                Command::Persistence => Property::Persistence,
                Command::StrongPersistence => Property::StrongPersistence,
                _ => Property::SymbolicStrongPersistence,
            };
            let rep = check_report(i, opts.max_power()?, budget, &[property])?;
            let v = rep.verdict(property).expect("requested verdict");
            report.output("report", property_json(&rep));
            report.line(format!("{property}: {}", verdict_line(i, v)));
            for s in &rep.snapshots {
                let ps: Vec<String> = s.primes.iter().map(|p| p.to_string()).collect();
                report.line(format!("  Ass(I^{}) = {{{}}}", s.power, ps.join(", ")));
            }
            let implied = rep.implied_properties();
            if !implied.is_empty() {
                report.line(format!("  implied for all powers: {}", implied.join(", ")));
            }
            if !v.holds() {
                report.exit(ExitCode::Refuted);
            }
        }
        Command::Corners => {
            let t = opts.power_or(1)?;
            let set = corner_elements(i, t, budget)?;
            let cs: Vec<String> = set.corners().iter().map(|z| i.format_monomial(z)).collect();
            report.output("power", json!(t));
            report.output("corners", json!(cs));
            report.output("maximal_associated", json!(!set.is_empty()));
            for c in &cs {
                report.line(c.clone());
            }
        }
        Command::Witness => {
            let t = opts.power_or(1)?;
            report.output("power", json!(t));
            match &opts.prime {
                Some(text) => {
                    let p = MonomialPrime::parse(i.ring(), text)?;
                    match witness_for(i, t, &p, budget)? {
                        Some(w) => {
                            report.output("witness", witness_json(i, &w));
                            report.line(format!("{p}: {}", i.format_monomial(w.witness())));
                        }
                        None => {
                            report.output("witness", Json::Null);
                            report.line(format!("{p} is not associated to I^{t}"));
                            report.exit(ExitCode::Refuted);
                        }
                    }
                }
                None => {
                    let ws = all_witnesses(i, t, budget)?;
                    let mut minimal: Vec<(&MonomialPrime, &Monomial)> = Vec::new();
                    for w in &ws {
                        if !minimal.iter().any(|(p, _)| *p == w.prime()) {
                            minimal.push((w.prime(), w.witness()));
                        }
                    }
                    minimal.sort();
                    report.output(
                        "witnesses",
                        json!(minimal
                            .iter()
                            .map(|(p, h)| json!({"prime": prime_json(p), "witness": i.format_monomial(h)}))
                            .collect::<Vec<_>>()),
                    );
                    for (p, h) in minimal {
                        report.line(format!("{p}: {}", i.format_monomial(h)));
                    }
                }
            }
        }
        Command::Tspread => {
            let t = opts.spread.unwrap_or(2);
            let holds = is_t_spread(i, t)?;
            report.output("spread", json!(t));
            report.output("t_spread", json!(holds));
            report.line(holds.to_string());
            if !holds {
                let bad = i
                    .gens()
                    .iter()
                    .find(|g| {
                        let s: Vec<usize> = g.support_iter().collect();
                        s.windows(2).any(|w| w[1] - w[0] < t)
                    })
                    .expect("a generator breaks the spread");
                report.output("witness", json!(i.format_monomial(bad)));
                report.line(format!("{} is not {t}-spread", i.format_monomial(bad)));
                report.exit(ExitCode::Refuted);
            }
        }
        Command::Verify(id) => {
            let r = verify(env, i, id, opts)?;
            theorem(report, &r);
        }
        Command::ReproducePaper | Command::RandomSweep => unreachable!("handled before dispatch"),
    }
    Ok(())
}

fn powered(i: &MonomialIdeal, t: u32, budget: &Budget) -> Result<MonomialIdeal> {
    let mut acc = i.clone();
    for k in 2..=t {
        acc = product(&acc, i)?;
        budget.check_generators(format!("generators of I^{k}"), acc.len())?;
    }
    Ok(acc)
}

fn theorem(report: &mut RunReport, r: &TheoremReport) {
    report.output("theorem", theorem_json(r));
    for l in theorem_lines(r) {
        report.line(l);
    }
    report.exit(ExitCode::of_outcome(&r.outcome));
}

fn verify(env: &Environment, i: &MonomialIdeal, id: &str, opts: &Options) -> Result<TheoremReport> {
    let budget = &opts.budget;
    match id {
        "thm-disjoint-ass" => {
            let other = opts
                .with
                .as_deref()
                .ok_or_else(|| Error::domain("thm-disjoint-ass needs --with NAME"))?;
            check_disjoint_ass(i, env.ideal(Some(other))?)
        }
        "thm-deletion-colon" => {
            let ys = opts
                .vars
                .iter()
                .map(|v| {
                    i.ring()
                        .index_of(v)
                        .ok_or_else(|| Error::domain(format!("unknown variable `{v}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            check_deletion_colon_criterion(i, opts.power_or(1)?, &ys)
        }
        "cor-beta1-bound" => check_beta1_bound(i, opts.max_power()?, budget),
        "thm-konig-ntf" => check_konig_ntf(i, opts.max_power()?, budget),
        "thm-pp2-ntf" => {
            let v = match &opts.monomial {
                Some(text) => i.ring().monomial(text)?,
                None => match default_v(i)? {
                    Some(v) => v,
                    None => {
                        return Ok(TheoremReport::new("thm-pp2-ntf", Some(opts.max_power()?))
                            .not_met("no generator meets every minimal prime exactly once"))
                    }
                },
            };
            check_ppsquared_ntf(i, &v, opts.max_power()?, budget)
        }
        "thm-transversal-ntf" => match transversal_factors(i) {
            Some(f) => check_transversal_ntf(i.ring(), &f, opts.max_power()?, budget),
            None => Ok(
                TheoremReport::new("thm-transversal-ntf", Some(opts.max_power()?))
                    .not_met("the ideal is not a product of primes in disjoint variables"),
            ),
        },
        "prop-corner-nondiv" => check_witness_nondivisibility(i, opts.power_or(1)?, budget),
        "lemma-deletion-witness" => check_deletion_witness(i, opts.power_or(1)?, budget),
        "cor-corner-div" => check_corner_divisibility(i, opts.power_or(1)?, budget),
        "prop-witness-degree" => check_witness_degree(i, opts.power_or(1)?, budget),
        "prop-minprime-witness" => check_minprime_witness(i),
        other => Err(Error::domain(format!(
            "unknown theorem id `{other}`; expected one of {}",
            VERIFY_IDS.join(", ")
        ))),
    }
}

/// First square-free generator meeting every minimal prime in one variable.
fn default_v(i: &MonomialIdeal) -> Result<Option<Monomial>> {
    if !i.is_squarefree() {
        return Ok(None);
    }
    let min = minimal_primes(i)?;
    Ok(i.gens()
        .iter()
        .find(|g| {
            min.iter()
                .all(|p| g.support_iter().filter(|&x| p.contains_var(x)).count() == 1)
        })
        .cloned())
}

fn random_sweep(report: &mut RunReport, opts: &Options) -> Result<()> {
    let suites: Vec<Suite> = match opts.suite.as_deref() {
        None | Some("all") => Suite::ALL.to_vec(),
        Some(name) => vec![Suite::parse(name).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
            Error::domain(format!(
                "unknown suite `{name}`; expected all or one of {}",
                names.join(", ")
            ))
        })?],
    };
    let seed = opts.seed.unwrap_or(0);
    let count = opts.count.unwrap_or(DEFAULT_COUNT);
    let mut out = Vec::new();
    for s in suites {
        let r = run_suite(s, seed, count, &opts.budget);
        report.line(format!(
            "{}: {} instances, {} passed, {} skipped, {} violations",
            s, r.instances, r.passed, r.skipped, r.violations
        ));
        if let Some((k, msg)) = &r.first_violation {
            report.line(format!("  first violation at instance {k}: {msg}"));
            report.exit(ExitCode::Refuted);
        }
        out.push(json!({
            "suite": s.name(),
            "instances": r.instances,
            "passed": r.passed,
            "skipped": r.skipped,
            "violations": r.violations,
            "first_violation": r.first_violation.map(|(k, m)| json!({"instance": k, "detail": m})),
        }));
    }
    report.output("seed", json!(seed));
    report.output("suites", json!(out));
    Ok(())
}
