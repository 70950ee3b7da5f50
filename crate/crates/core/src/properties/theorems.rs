//! Executable hypothesis/conclusion checks. Each returns a
//! [`TheoremReport`]; an unmet hypothesis is a non-result, never a refutation.

use std::collections::BTreeSet;

use crate::arith::{colon_monomial, contraction, deletion, power, sum};
use crate::decompose::{
    all_witnesses, ass_of_disjoint_sum, associated_primes, associated_primes_total, is_unmixed,
    minimal_primes,
};
use crate::error::{Budget, Error, Result};
use crate::graph::{cover_ideal, GraphSpec};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::monomial::{Monomial, Ring, RingContext};
use crate::properties::certificate::{maximal_is_associated, structural_ntf_certificate};
use crate::properties::checks::{is_ntf_up_to, PowerTower};
use crate::properties::corners::{check_pairwise_nondivisibility, corner_elements};
use crate::properties::report::{FailureWitness, Property, TheoremReport, Verdict};
use crate::structure::{beta1_with_budget, is_konig, transversal_polymatroidal};

fn join_names(i: &MonomialIdeal, vars: impl IntoIterator<Item = usize>) -> String {
    vars.into_iter()
        .map(|v| i.ring().name(v).to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// `m \ x_v ∈ Ass(R/(I \ x_v)^t)`.
pub fn deleted_maximal_is_associated(i: &MonomialIdeal, v: usize, t: u32) -> Result<bool> {
    let d = power(&deletion(i, v)?, t)?;
    let target = MonomialPrime::maximal(i.ring()).without(v);
    Ok(associated_primes_total(&d)?.contains(&target))
}

/// First variable of `vars` at which the deletion hypothesis fails at
/// some power in `1..=bound`, with that power.
fn deletion_hypothesis_failure(
    i: &MonomialIdeal,
    vars: &[usize],
    bound: u32,
) -> Result<Option<(usize, u32)>> {
    for &v in vars {
        for t in 1..=bound {
            if deleted_maximal_is_associated(i, v, t)? {
                return Ok(Some((v, t)));
            }
        }
    }
    Ok(None)
}

/// `Ass(I1 + I2) = {p1 + p2}` for ideals in disjoint variables.
pub fn check_disjoint_ass(i1: &MonomialIdeal, i2: &MonomialIdeal) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("thm-disjoint-ass", None);
    let formula = ass_of_disjoint_sum(i1, i2)?;
    let direct = associated_primes(&sum(i1, i2)?)?;
    report.fact(format!("I1 = {i1}, I2 = {i2}"));
    report.fact(format!("Ass(I1 + I2) has {} primes", direct.len()));
    if formula != direct {
        report.violate(format!(
            "Ass(I1 + I2) = {} but the pairwise sums give {}",
            format_primes(&direct),
            format_primes(&formula)
        ));
    }
    Ok(report)
}

pub(crate) fn format_primes(primes: &[MonomialPrime]) -> String {
    let parts: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Both sides of the deletion-colon criterion: whether `m` is associated to
/// `I^t` and to `(I^t : ∏ y)`. `None` when some `m \ y ∈ Ass((I \ y)^t)`.
pub fn deletion_colon_sides(
    i: &MonomialIdeal,
    t: u32,
    ys: &[usize],
) -> Result<Option<(bool, bool)>> {
    if t == 0 {
        return Err(Error::domain("power must be at least 1"));
    }
    let distinct: BTreeSet<usize> = ys.iter().copied().collect();
    if distinct.len() != ys.len() {
        return Err(Error::domain("the deleted variables must be distinct"));
    }
    for &y in ys {
        i.ring().check_index(y)?;
        if deleted_maximal_is_associated(i, y, t)? {
            return Ok(None);
        }
    }
    let j = power(i, t)?;
    let y = Monomial::product_of_vars(i.nvars(), ys.iter().copied());
    let in_power = maximal_is_associated(&j)?;
    let in_colon = maximal_is_associated(&colon_monomial(&j, &y)?)?;
    Ok(Some((in_power, in_colon)))
}

/// `m ∈ Ass(I^t)` iff `m ∈ Ass(I^t : ∏ y)` under the deletion hypotheses.
pub fn check_deletion_colon_criterion(
    i: &MonomialIdeal,
    t: u32,
    ys: &[usize],
) -> Result<TheoremReport> {
    let report = TheoremReport::new("thm-deletion-colon", Some(t));
    match deletion_colon_sides(i, t, ys)? {
        None => Ok(report.not_met(format!(
            "m \\ y is associated to (I \\ y)^{t} for some y in [{}]",
            join_names(i, ys.iter().copied())
        ))),
        Some((a, b)) => {
            let mut report = report;
            report.fact(format!(
                "deleted variables: [{}]",
                join_names(i, ys.iter().copied())
            ));
            report.fact(format!("m in Ass(I^{t}): {a}"));
            report.fact(format!("m in Ass(I^{t} : y): {b}"));
            if a != b {
                report.violate(format!("the two memberships differ ({a} vs {b})"));
            }
            Ok(report)
        }
    }
}

/// `t >= β₁(I) + 1` whenever `m ∈ Ass(I^t)` and the deletion hypotheses at
/// the variables of a maximum independent set hold at `t`.
pub fn check_beta1_bound(i: &MonomialIdeal, bound: u32, budget: &Budget) -> Result<TheoremReport> {
    let report = TheoremReport::new("cor-beta1-bound", Some(bound));
    if !i.is_squarefree() {
        return Ok(report.not_met("the ideal is not square-free"));
    }
    let mut report = report;
    let (b1, set) = beta1_with_budget(i, budget)?;
    let vars: BTreeSet<usize> = set.iter().flat_map(|u| u.support_iter()).collect();
    report.fact(format!(
        "beta1 = {b1} via [{}]",
        set.iter()
            .map(|u| i.format_monomial(u))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    let mut tower = PowerTower::new(i, budget);
    let m = MonomialPrime::maximal(i.ring());
    for t in 1..=bound {
        let mut hypothesis = true;
        for &v in &vars {
            if deleted_maximal_is_associated(i, v, t)? {
                hypothesis = false;
                break;
            }
        }
        let associated = tower.ass(t)?.contains(&m);
        report.fact(format!(
            "t = {t}: hypothesis {hypothesis}, m associated {associated}"
        ));
        if hypothesis && associated && t < b1 as u32 + 1 {
            report.violate(format!(
                "m is associated at t = {t} < beta1 + 1 = {}",
                b1 + 1
            ));
        }
    }
    Ok(report)
}

fn ntf_conclusion(
    report: &mut TheoremReport,
    i: &MonomialIdeal,
    bound: u32,
    budget: &Budget,
) -> Result<()> {
    let ntf = is_ntf_up_to(i, bound, budget)?;
    match ntf.verdict(Property::NormallyTorsionFree) {
        Some(Verdict::FailsAt { power, witness }) => {
            let detail = match witness {
                FailureWitness::Prime { prime, .. } => prime.to_string(),
                FailureWitness::IdealPair { generator, .. } => i.format_monomial(generator),
            };
            report.violate(format!("Ass(I^{power}) gains {detail}"));
        }
        Some(Verdict::Certified { certificate, .. }) => {
            report.fact(format!("normally torsion-free up to {bound}"));
            report.fact(format!("certificate: {certificate}"));
        }
        _ => report.fact(format!("normally torsion-free up to {bound}")),
    }
    Ok(())
}

/// Unmixed König ideals whose deletions at a maximum independent set keep
/// `m \ x_i` unassociated are normally torsion-free (checked up to `bound`).
pub fn check_konig_ntf(i: &MonomialIdeal, bound: u32, budget: &Budget) -> Result<TheoremReport> {
    let report = TheoremReport::new("thm-konig-ntf", Some(bound));
    if !i.is_squarefree() {
        return Ok(report.not_met("the ideal is not square-free"));
    }
    if !is_konig(i)? {
        return Ok(report.not_met("the ideal is not König"));
    }
    if !is_unmixed(i)? {
        return Ok(report.not_met("the ideal is not unmixed"));
    }
    let (_, set) = beta1_with_budget(i, budget)?;
    let vars: Vec<usize> = set
        .iter()
        .flat_map(|u| u.support_iter())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if let Some((v, t)) = deletion_hypothesis_failure(i, &vars, bound)? {
        return Ok(report.not_met(format!(
            "m \\ {} is associated to the deleted ideal's power {t}",
            i.ring().name(v)
        )));
    }
    let mut report = report;
    report.fact(format!(
        "deletion hypotheses hold at [{}] up to {bound}",
        join_names(i, vars)
    ));
    ntf_conclusion(&mut report, i, bound, budget)?;
    Ok(report)
}

/// A square-free `v ∈ I` with `|supp(v) ∩ p| = 1` for every minimal prime,
/// plus deletion hypotheses on `supp(v)`, gives normal torsion-freeness.
pub fn check_ppsquared_ntf(
    i: &MonomialIdeal,
    v: &Monomial,
    bound: u32,
    budget: &Budget,
) -> Result<TheoremReport> {
    i.require_proper_nonzero("check_ppsquared_ntf")?;
    if !v.is_squarefree() {
        return Err(Error::domain(format!(
            "{} is not square-free",
            i.format_monomial(v)
        )));
    }
    if !i.contains(v)? {
        return Err(Error::domain(format!(
            "{} is not in the ideal",
            i.format_monomial(v)
        )));
    }
    let report = TheoremReport::new("thm-pp2-ntf", Some(bound));
    if !i.is_squarefree() {
        return Ok(report.not_met("the ideal is not square-free"));
    }
    for p in minimal_primes(i)? {
        let meet = v.support_iter().filter(|&x| p.contains_var(x)).count();
        if meet != 1 {
            return Ok(report.not_met(format!(
                "{} meets {p} in {meet} variables",
                i.format_monomial(v)
            )));
        }
    }
    let vars: Vec<usize> = v.support_iter().collect();
    if let Some((x, t)) = deletion_hypothesis_failure(i, &vars, bound)? {
        return Ok(report.not_met(format!(
            "m \\ {} is associated to the deleted ideal's power {t}",
            i.ring().name(x)
        )));
    }
    let mut report = report;
    report.fact(format!(
        "v = {} lies in p \\ p^2 for every minimal prime",
        i.format_monomial(v)
    ));
    report.fact(format!(
        "deletion hypotheses hold at [{}] up to {bound}",
        join_names(i, vars)
    ));
    ntf_conclusion(&mut report, i, bound, budget)?;
    Ok(report)
}

/// Square-free transversal polymatroidal ideals are normally torsion-free;
/// also walks the inductive step (deleting the first variable of a factor
/// stays transversal, and that variable's product meets each factor once).
pub fn check_transversal_ntf(
    ring: &Ring,
    factors: &[BTreeSet<usize>],
    bound: u32,
    budget: &Budget,
) -> Result<TheoremReport> {
    let t = transversal_polymatroidal(ring, factors)?;
    if !t.squarefree {
        return Err(Error::domain(
            "the variable sets overlap, so the product is not square-free",
        ));
    }
    let i = &t.ideal;
    let mut report = TheoremReport::new("thm-transversal-ntf", Some(bound));
    report.fact(format!("I = {i}"));
    let min = minimal_primes(i)?;
    let mut expected: Vec<MonomialPrime> = t.factors.clone();
    expected.sort();
    if min != expected {
        report.violate(format!(
            "Min(I) = {} but the factors are {}",
            format_primes(&min),
            format_primes(&expected)
        ));
    }
    let reps: Vec<usize> = factors
        .iter()
        .map(|f| *f.iter().next().expect("nonempty"))
        .collect();
    for (k, &x) in reps.iter().enumerate() {
        let d = deletion(i, x)?;
        let mut rest: Vec<BTreeSet<usize>> = factors.to_vec();
        rest[k].remove(&x);
        let rebuilt = if rest[k].is_empty() {
            MonomialIdeal::zero(ring)
        } else {
            transversal_polymatroidal(ring, &rest)?.ideal
        };
        if d != rebuilt {
            report.violate(format!("I \\ {} = {d}, expected {rebuilt}", ring.name(x)));
        }
    }
    report.fact(format!("v = {}", join_names(i, reps.iter().copied())));
    ntf_conclusion(&mut report, i, bound, budget)?;
    if let Some(c) = structural_ntf_certificate(i) {
        report.fact(format!("structural certificate: {}", c.tag()));
    }
    Ok(report)
}

/// Witnesses of distinct primes of `I^t` never divide each other, nor do
/// corner elements of `I^t`.
pub fn check_witness_nondivisibility(
    i: &MonomialIdeal,
    t: u32,
    budget: &Budget,
) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("prop-corner-nondiv", Some(t));
    let ws = all_witnesses(i, t, budget)?;
    report.fact(format!("{} witnesses of I^{t}", ws.len()));
    for a in &ws {
        for b in &ws {
            if a.prime() != b.prime() && a.witness().divides(b.witness()) {
                report.violate(format!(
                    "witness {} of {} divides witness {} of {}",
                    i.format_monomial(a.witness()),
                    a.prime(),
                    i.format_monomial(b.witness()),
                    b.prime()
                ));
            }
        }
    }
    let corners = corner_elements(i, t, budget)?;
    report.fact(format!("{} corner elements", corners.corners().len()));
    check_pairwise_nondivisibility(&mut report, i, corners.corners());
    Ok(report)
}

/// For a witness `h` of `p` in `I^t` and `x_i ∤ h`:
/// `((I \ x_i)^t : h) = p \ x_i`; and if `p \ x_i ∉ Ass((I \ x_i)^t)` then
/// every witness of `p` is divisible by `x_i`.
pub fn check_deletion_witness(i: &MonomialIdeal, t: u32, budget: &Budget) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("lemma-deletion-witness", Some(t));
    let ws = all_witnesses(i, t, budget)?;
    let deleted: Vec<MonomialIdeal> = (0..i.nvars())
        .map(|v| power(&deletion(i, v)?, t))
        .collect::<Result<_>>()?;
    let deleted_ass: Vec<Vec<MonomialPrime>> = deleted
        .iter()
        .map(associated_primes_total)
        .collect::<Result<_>>()?;
    let mut checked = 0usize;
    for w in &ws {
        for v in 0..i.nvars() {
            let target = w.prime().without(v);
            if w.witness().exponent(v) == 0 {
                checked += 1;
                let colon = colon_monomial(&deleted[v], w.witness())?;
                if colon != target.to_ideal() {
                    report.violate(format!(
                        "((I \\ {})^{t} : {}) = {colon}, expected {target}",
                        i.ring().name(v),
                        i.format_monomial(w.witness())
                    ));
                }
            }
            if !deleted_ass[v].contains(&target) && w.witness().exponent(v) == 0 {
                report.violate(format!(
                    "{target} is not associated to (I \\ {})^{t} yet witness {} of {} avoids it",
                    i.ring().name(v),
                    i.format_monomial(w.witness()),
                    w.prime()
                ));
            }
        }
    }
    report.fact(format!(
        "{} witnesses, {checked} deletion colons checked",
        ws.len()
    ));
    Ok(report)
}

/// For square-free `I` and a witness `h` of `p` in `I^t`,
/// `deg_{x_i} h <= t - 1` for every `x_i ∈ p`.
///
/// Variables outside `p` are not bounded this way: `((x1*x2) : x2^k) = (x1)`
/// for every `k >= 1`.
pub fn check_witness_degree(i: &MonomialIdeal, t: u32, budget: &Budget) -> Result<TheoremReport> {
    let report = TheoremReport::new("prop-witness-degree", Some(t));
    if !i.is_squarefree() {
        return Ok(report.not_met("the ideal is not square-free"));
    }
    let mut report = report;
    let ws = all_witnesses(i, t, budget)?;
    let mut primes = BTreeSet::new();
    for w in &ws {
        primes.insert(w.prime().clone());
        for &v in w.prime().vars() {
            if w.witness().exponent(v) > t - 1 {
                report.violate(format!(
                    "witness {} of {} has degree {} in {}",
                    i.format_monomial(w.witness()),
                    w.prime(),
                    w.witness().exponent(v),
                    i.ring().name(v)
                ));
            }
        }
    }
    report.fact(format!(
        "{} witnesses over {} primes",
        ws.len(),
        primes.len()
    ));
    let direct = associated_primes(&power(i, t)?)?;
    if primes.into_iter().collect::<Vec<_>>() != direct {
        report.violate("the witness search misses an associated prime");
    }
    Ok(report)
}

/// For square-free `I` and `p ∈ Min(I)`: `(I : h) = p` with `h` the product
/// of the variables outside `p`.
pub fn check_minprime_witness(i: &MonomialIdeal) -> Result<TheoremReport> {
    let report = TheoremReport::new("prop-minprime-witness", None);
    if !i.is_squarefree() {
        return Ok(report.not_met("the ideal is not square-free"));
    }
    let mut report = report;
    let n = i.nvars();
    for p in minimal_primes(i)? {
        let h = Monomial::product_of_vars(n, (0..n).filter(|&v| !p.contains_var(v)));
        let colon = colon_monomial(i, &h)?;
        report.fact(format!("(I : {}) = {colon}", i.format_monomial(&h)));
        if colon != p.to_ideal() {
            report.violate(format!("expected {p}"));
        }
    }
    Ok(report)
}

/// The 6-vertex graph whose cover ideal answers the deletion question in
/// the negative.
pub fn counterexample_graph() -> GraphSpec {
    GraphSpec::from_labelled_edges(&[
        ("1", "2"),
        ("2", "3"),
        ("3", "4"),
        ("4", "5"),
        ("5", "1"),
        ("1", "6"),
        ("5", "6"),
        ("4", "6"),
    ])
    .expect("valid graph")
}

/// Claimed: `m \ x6 ∈ Ass((J \ x6)^2)` while `m ∉ Ass(J^2)` for the cover
/// ideal `J` of [`counterexample_graph`].
///
/// With the deletion `J \ x6` (generators divisible by `x6` dropped) the
/// first membership is false: `J \ x6 = x1*x4*x5*(x2, x3)`. With `x6 = 1`
/// instead, `J` becomes the cover ideal of the 5-cycle and the membership
/// holds. Both readings are recorded; the outcome follows the deletion.
pub fn question_4_13_counterexample() -> Result<TheoremReport> {
    let mut report = TheoremReport::new("q413-counterexample", Some(2));
    let g = counterexample_graph();
    let ring = RingContext::with_vars(6)?;
    let j = cover_ideal(&g, &ring)?;
    report.fact(format!("J = {j}"));
    let min = minimal_primes(&j)?;
    let mut edges: Vec<MonomialPrime> = g
        .edges()
        .iter()
        .map(|&(a, b)| MonomialPrime::new(&ring, [a, b]))
        .collect::<Result<_>>()?;
    edges.sort();
    if min != edges {
        report.violate(format!("Min(J) = {}", format_primes(&min)));
    } else {
        report.fact("Min(J) is the 8 edge primes");
    }
    let m = MonomialPrime::maximal(&ring);
    let x6 = 5;
    let target = m.without(x6);
    let deleted = deletion(&j, x6)?;
    let contracted = contraction(&j, x6)?;
    let in_deleted = associated_primes_total(&power(&deleted, 2)?)?.contains(&target);
    let in_contracted = associated_primes(&power(&contracted, 2)?)?.contains(&target);
    let in_square = associated_primes(&power(&j, 2)?)?.contains(&m);
    report.fact(format!("J \\ x6 = {deleted}"));
    report.fact(format!("{target} in Ass((J \\ x6)^2): {in_deleted}"));
    report.fact(format!("J with x6 = 1: {contracted}"));
    report.fact(format!(
        "{target} in Ass((J with x6 = 1)^2): {in_contracted}"
    ));
    report.fact(format!("{m} in Ass(J^2): {in_square}"));
    if in_square {
        report.violate(format!("{m} is associated to J^2"));
    }
    if !in_deleted {
        report.violate(format!("{target} is not associated to (J \\ x6)^2"));
    }
    Ok(report)
}
