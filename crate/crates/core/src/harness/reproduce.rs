//! Fixed reproduction suite for the worked examples, with embedded golden
//! values.

use std::collections::BTreeSet;

use serde_json::json;

use crate::arith::{contraction, deletion, power, product};
use crate::decompose::{associated_primes, associated_primes_total, is_unmixed, minimal_primes};
use crate::error::{Budget, Result};
use crate::graph::{cover_ideal, edge_ideal, GraphSpec};
use crate::harness::report::{ExitCode, RunReport};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::monomial::{Ring, RingContext};
use crate::properties::theorems::{
    check_ppsquared_ntf, check_transversal_ntf, counterexample_graph,
};
use crate::properties::{is_ntf_up_to, structural_ntf_certificate, Property, Verdict};
use crate::structure::is_t_spread;

pub const EXAMPLE_GENERATORS: &str =
    "x1*x3*x6, x1*x3*x7, x1*x4*x6, x1*x4*x7, x1*x5*x7, x2*x4*x7, x2*x5*x7";

pub const EXAMPLE_ASS: &str = "(x1,x2) (x1,x7) (x6,x7) (x1,x4,x5) (x3,x4,x7) (x3,x4,x5)";
pub const EXAMPLE_DELETED_X3_ASS: &str = "(x1,x2) (x4,x5) (x4,x7) (x6,x7) (x1,x7)";

/// One golden comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

fn check(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Check {
    Check {
        name: name.into(),
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

/// Primes listed in `text` (space-separated, e.g. `(x1,x2) (x3)`), as a
/// canonically sorted display string.
fn prime_set(ring: &Ring, text: &str) -> Result<String> {
    let mut primes: Vec<MonomialPrime> = text
        .split_whitespace()
        .map(|p| MonomialPrime::parse(ring, p))
        .collect::<Result<_>>()?;
    primes.sort();
    Ok(show(&primes))
}

fn show(primes: &[MonomialPrime]) -> String {
    primes
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn example_ideal() -> Result<MonomialIdeal> {
    MonomialIdeal::parse(&RingContext::with_vars(7)?, EXAMPLE_GENERATORS)
}

fn labelled(edges: &[(u32, u32)]) -> Result<GraphSpec> {
    let pairs: Vec<(String, String)> = edges
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    GraphSpec::from_labelled_edges(&pairs)
}

fn example_checks(budget: &Budget) -> Result<Vec<Check>> {
    let i = example_ideal()?;
    let r = i.ring().clone();
    let ideal = |s: &str| MonomialIdeal::parse(&r, s);
    let mut out = vec![
        check("example/generators", 7, i.len()),
        check(
            "example/ass",
            prime_set(&r, EXAMPLE_ASS)?,
            show(&associated_primes(&i)?),
        ),
        check("example/2-spread", true, is_t_spread(&i, 2)?),
        check("example/unmixed", false, is_unmixed(&i)?),
    ];

    let v = r.monomial("x1*x3*x6")?;
    let meets: Vec<usize> = minimal_primes(&i)?
        .iter()
        .map(|p| v.support_iter().filter(|&x| p.contains_var(x)).count())
        .collect();
    out.push(check(
        "example/v-in-p-minus-p2",
        true,
        meets.iter().all(|&k| k == 1) && i.contains(&v)?,
    ));

    let d1 = deletion(&i, 0)?;
    let x2x7 = MonomialIdeal::principal(&r, r.monomial("x2*x7")?)?;
    out.push(check("example/delete-x1", "(x2*x4*x7, x2*x5*x7)", &d1));
    out.push(check(
        "example/delete-x1-factors",
        &d1,
        product(&x2x7, &ideal("x4, x5")?)?,
    ));

    let d3 = deletion(&i, 2)?;
    out.push(check(
        "example/delete-x3",
        ideal("x1*x4*x6, x1*x4*x7, x1*x5*x7, x2*x4*x7, x2*x5*x7")?,
        &d3,
    ));
    out.push(check(
        "example/delete-x3-ass",
        prime_set(&r, EXAMPLE_DELETED_X3_ASS)?,
        show(&associated_primes(&d3)?),
    ));
    let g = labelled(&[(1, 2), (4, 5), (4, 7), (6, 7), (1, 7)])?;
    out.push(check("example/g-is-tree", true, g.is_tree()));
    out.push(check(
        "example/delete-x3-is-cover-of-g",
        &d3,
        cover_ideal(&g, &r)?,
    ));

    let d6 = deletion(&i, 5)?;
    out.push(check(
        "example/delete-x6",
        ideal("x1*x3*x7, x1*x4*x7, x1*x5*x7, x2*x4*x7, x2*x5*x7")?,
        &d6,
    ));
    let h = labelled(&[(1, 3), (1, 4), (1, 5), (2, 4), (2, 5)])?;
    let l = edge_ideal(&h, &r)?;
    out.push(check("example/h-is-bipartite", true, h.is_bipartite()));
    out.push(check(
        "example/l-is-edge-ideal-of-h",
        ideal("x1*x3, x1*x4, x1*x5, x2*x4, x2*x5")?,
        &l,
    ));
    let x7 = MonomialIdeal::principal(&r, r.monomial("x7")?)?;
    out.push(check("example/delete-x6-factors", &d6, product(&x7, &l)?));

    let m = MonomialPrime::maximal(&r);
    let mut deleted_max = Vec::new();
    for x in [0usize, 2, 5] {
        for t in 1..=3 {
            let dt = power(&deletion(&i, x)?, t)?;
            if associated_primes_total(&dt)?.contains(&m.without(x)) {
                deleted_max.push(format!("{}^{t}", r.name(x)));
            }
        }
    }
    out.push(check(
        "example/deleted-maximal-unassociated-up-to-3",
        "",
        deleted_max.join(" "),
    ));

    let pp = check_ppsquared_ntf(&i, &v, 3, budget)?;
    out.push(check(
        "example/criterion-with-v",
        "confirmed",
        outcome_word(pp.confirmed(), pp.violated()),
    ));
    let ntf = is_ntf_up_to(&i, 3, budget)?;
    let status = match ntf.verdict(Property::NormallyTorsionFree) {
        Some(Verdict::Certified { .. }) => "certified",
        Some(Verdict::HoldsUpTo { .. }) => "holds-up-to",
        _ => "fails",
    };
    out.push(check("example/ntf-up-to-3", "certified", status));
    out.push(check(
        "example/certificate",
        "deletion-criterion",
        structural_ntf_certificate(&i)
            .map(|c| c.tag())
            .unwrap_or("none"),
    ));
    Ok(out)
}

fn outcome_word(confirmed: bool, violated: bool) -> &'static str {
    match (confirmed, violated) {
        (true, _) => "confirmed",
        (_, true) => "violated",
        _ => "hypothesis-not-met",
    }
}

fn counterexample_checks() -> Result<Vec<Check>> {
    let g = counterexample_graph();
    let r = RingContext::with_vars(6)?;
    let j = cover_ideal(&g, &r)?;
    let mut edges: Vec<MonomialPrime> = g
        .edges()
        .iter()
        .map(|&(a, b)| MonomialPrime::new(&r, [a, b]))
        .collect::<Result<_>>()?;
    edges.sort();
    let m = MonomialPrime::maximal(&r);
    let target = m.without(5);
    let deleted = deletion(&j, 5)?;
    let contracted = contraction(&j, 5)?;
    Ok(vec![
        check(
            "counterexample/min-primes",
            show(&edges),
            show(&minimal_primes(&j)?),
        ),
        check(
            "counterexample/deleted-square-has-x1..x5",
            true,
            associated_primes_total(&power(&deleted, 2)?)?.contains(&target),
        ),
        check(
            "counterexample/square-lacks-maximal",
            false,
            associated_primes(&power(&j, 2)?)?.contains(&m),
        ),
        check(
            "counterexample/x6-set-to-one-square-has-x1..x5",
            true,
            associated_primes(&power(&contracted, 2)?)?.contains(&target),
        ),
    ])
}

fn transversal_checks(budget: &Budget) -> Result<Vec<Check>> {
    let cases: [(usize, &[&[usize]]); 4] = [
        (4, &[&[0, 1], &[2, 3]]),
        (3, &[&[0, 1], &[2]]),
        (6, &[&[0, 1], &[2, 3], &[4, 5]]),
        (6, &[&[0, 1, 2], &[3, 4]]),
    ];
    let mut out = Vec::new();
    for (n, sets) in cases {
        let r = RingContext::with_vars(n)?;
        let factors: Vec<BTreeSet<usize>> =
            sets.iter().map(|s| s.iter().copied().collect()).collect();
        let rep = check_transversal_ntf(&r, &factors, 3, budget)?;
        let label: String = rep_label(&r, &factors);
        out.push(check(
            format!("transversal/{label}/ntf-up-to-3"),
            "confirmed",
            outcome_word(rep.confirmed(), rep.violated()),
        ));
    }
    Ok(out)
}

fn rep_label(ring: &Ring, factors: &[BTreeSet<usize>]) -> String {
    factors
        .iter()
        .map(|f| {
            format!(
                "({})",
                f.iter()
                    .map(|&v| ring.name(v))
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect()
}

pub fn reproduction_checks(budget: &Budget) -> Result<Vec<Check>> {
    let mut all = example_checks(budget)?;
    all.extend(counterexample_checks()?);
    all.extend(transversal_checks(budget)?);
    Ok(all)
}

pub fn reproduce_paper(budget: &Budget) -> RunReport {
    let mut report = RunReport::new("reproduce-paper");
    let checks = match reproduction_checks(budget) {
        Ok(c) => c,
        Err(e) => return RunReport::error("reproduce-paper", &e),
    };
    let failed = checks.iter().filter(|c| !c.passed()).count();
    report.output(
        "checks",
        json!(checks
            .iter()
            .map(|c| json!({
                "name": c.name,
                "expected": c.expected,
                "actual": c.actual,
                "pass": c.passed(),
            }))
            .collect::<Vec<_>>()),
    );
    report.output("passed", json!(checks.len() - failed));
    report.output("failed", json!(failed));
    for c in &checks {
        if c.passed() {
            report.line(format!("PASS {}", c.name));
        } else {
            report.line(format!("FAIL {}", c.name));
            report.line(format!("  - expected: {}", c.expected));
            report.line(format!("  + actual:   {}", c.actual));
        }
    }
    report.line(format!("{} passed, {failed} failed", checks.len() - failed));
    if failed > 0 {
        report.exit(ExitCode::Refuted);
    }
    report
}
