//! Seeded property sweeps over random instances.
//!
//! Instance `k` of a suite draws from its own generator seeded with
//! `mix(seed, suite, k)`, so instances are independent of each other and of
//! the thread schedule. Results are collected in instance order.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use rayon::prelude::*;

use crate::arith::{intersect, power, product, sum};
use crate::decompose::{ass_by_witness_enumeration, associated_primes};
use crate::error::{Budget, Error, Result};
use crate::harness::random::{prng, random_ideal_with, Prng, RandomSpec};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, RingContext};
use crate::properties::theorems::{
    check_beta1_bound, check_deletion_witness, check_disjoint_ass, check_minprime_witness,
    check_transversal_ntf, check_witness_degree, check_witness_nondivisibility,
    deletion_colon_sides,
};
use crate::properties::{check_corner_divisibility, is_ntf_up_to, Outcome, TheoremReport};

pub const DEFAULT_COUNT: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    /// Decomposition-based Ass against witness enumeration.
    Oracle,
    DisjointAss,
    Beta1Bound,
    TransversalNtf,
    WitnessDegree,
    MinprimeWitness,
    DeletionWitness,
    Nondivisibility,
    CornerDivisibility,
    Distributivity,
    MonomialMultiple,
    DeletionColon,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Oracle,
        Suite::DisjointAss,
        Suite::Beta1Bound,
        Suite::TransversalNtf,
        Suite::WitnessDegree,
        Suite::MinprimeWitness,
        Suite::DeletionWitness,
        Suite::Nondivisibility,
        Suite::CornerDivisibility,
        Suite::Distributivity,
        Suite::MonomialMultiple,
        Suite::DeletionColon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::DisjointAss => "disjoint-ass",
            Suite::Beta1Bound => "beta1-bound",
            Suite::TransversalNtf => "transversal-ntf",
            Suite::WitnessDegree => "witness-degree",
            Suite::MinprimeWitness => "minprime-witness",
            Suite::DeletionWitness => "deletion-witness",
            Suite::Nondivisibility => "nondivisibility",
            Suite::CornerDivisibility => "corner-divisibility",
            Suite::Distributivity => "distributivity",
            Suite::MonomialMultiple => "monomial-multiple",
            Suite::DeletionColon => "deletion-colon",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceResult {
    Pass,
    Skipped(String),
    Violation(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSummary {
    pub suite: Suite,
    pub seed: u64,
    pub instances: usize,
    pub passed: usize,
    pub skipped: usize,
    pub violations: usize,
    /// Instance index and description of the first violation.
    pub first_violation: Option<(usize, String)>,
}

impl SweepSummary {
    pub fn clean(&self) -> bool {
        self.violations == 0
    }
}

fn mix(seed: u64, suite: Suite, k: usize) -> u64 {
    // splitmix64 finalizer over the three inputs
    let mut z = seed
        ^ (suite as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (k as u64).wrapping_mul(0xD1B5_4A32_D192_ED03);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn run_suite(suite: Suite, seed: u64, count: usize, budget: &Budget) -> SweepSummary {
    let results: Vec<InstanceResult> = (0..count)
        .into_par_iter()
        .map(|k| {
            let mut rng = prng(mix(seed, suite, k));
            match instance(suite, &mut rng, budget) {
                Ok(r) => r,
                Err(e @ Error::Budget { .. }) => InstanceResult::Skipped(e.to_string()),
                Err(e) => InstanceResult::Violation(format!("error: {e}")),
            }
        })
        .collect();
    let mut s = SweepSummary {
        suite,
        seed,
        instances: count,
        passed: 0,
        skipped: 0,
        violations: 0,
        first_violation: None,
    };
    for (k, r) in results.into_iter().enumerate() {
        match r {
            InstanceResult::Pass => s.passed += 1,
            InstanceResult::Skipped(_) => s.skipped += 1,
            InstanceResult::Violation(msg) => {
                s.violations += 1;
                s.first_violation.get_or_insert((k, msg));
            }
        }
    }
    s
}

fn from_report(r: TheoremReport) -> InstanceResult {
    match r.outcome {
        Outcome::Confirmed => InstanceResult::Pass,
        Outcome::HypothesisNotMet(m) => InstanceResult::Skipped(m),
        Outcome::Violated(m) => InstanceResult::Violation(m),
    }
}

fn spec(
    rng: &mut Prng,
    nvars: (usize, usize),
    ngens: usize,
    max_exponent: u32,
    squarefree: bool,
) -> RandomSpec {
    let nvars = rng.gen_range(nvars.0 as u32..=nvars.1 as u32) as usize;
    let mut ngens = rng.gen_range(1..=ngens as u32) as usize;
    if squarefree {
        ngens = ngens.min((1usize << nvars) - 1);
    }
    RandomSpec {
        nvars,
        ngens,
        max_degree: if squarefree {
            nvars as u32
        } else {
            max_exponent * 2
        },
        max_exponent,
        squarefree,
    }
}

fn random_ideal(
    rng: &mut Prng,
    nvars: (usize, usize),
    ngens: usize,
    max_exponent: u32,
    squarefree: bool,
) -> Result<MonomialIdeal> {
    let s = spec(rng, nvars, ngens, max_exponent, squarefree);
    random_ideal_with(rng, &s)
}

/// Random ideal in `n` variables using only the variables `offset..offset+k`.
fn shifted(
    rng: &mut Prng,
    n: usize,
    offset: usize,
    k: usize,
    ngens: usize,
) -> Result<MonomialIdeal> {
    let local = random_ideal_with(
        rng,
        &RandomSpec {
            nvars: k,
            ngens,
            max_degree: 3,
            max_exponent: 2,
            squarefree: false,
        },
    )?;
    let ring = RingContext::with_vars(n)?;
    let gens = local.gens().iter().map(|g| {
        let mut e = vec![0u32; n];
        e[offset..offset + k].copy_from_slice(g.exponents());
        Monomial::from_exponents(e)
    });
    MonomialIdeal::new(&ring, gens)
}

fn random_t(rng: &mut Prng) -> u32 {
    rng.gen_range(1..=2)
}

fn instance(suite: Suite, rng: &mut Prng, budget: &Budget) -> Result<InstanceResult> {
    Ok(match suite {
        Suite::Oracle => {
            let i = random_ideal(rng, (1, 5), 5, 2, false)?;
            let t = random_t(rng);
            let direct = associated_primes(&power(&i, t)?)?;
            let searched = ass_by_witness_enumeration(&i, t, budget)?;
            if direct == searched {
                InstanceResult::Pass
            } else {
                InstanceResult::Violation(format!(
                    "I = {i}, t = {t}: decomposition and search disagree"
                ))
            }
        }
        Suite::DisjointAss => {
            let a = rng.gen_range(1..=3u32) as usize;
            let b = rng.gen_range(1..=3u32) as usize;
            let i1 = shifted(rng, a + b, 0, a, 3)?;
            let i2 = shifted(rng, a + b, a, b, 3)?;
            from_report(check_disjoint_ass(&i1, &i2)?)
        }
        Suite::Beta1Bound => {
            let i = random_ideal(rng, (2, 5), 5, 1, true)?;
            from_report(check_beta1_bound(&i, 4, budget)?)
        }
        Suite::TransversalNtf => {
            let n = rng.gen_range(1..=6u32) as usize;
            let mut vars: Vec<usize> = (0..n).collect();
            // Fisher-Yates with gen_range keeps the stream pinned
            for k in (1..n).rev() {
                vars.swap(k, rng.gen_range(0..=k as u32) as usize);
            }
            let used = rng.gen_range(1..=n as u32) as usize;
            let r = rng.gen_range(1..=used as u32) as usize;
            let mut factors: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); r];
            for (k, &v) in vars[..used].iter().enumerate() {
                let slot = if k < r {
                    k
                } else {
                    rng.gen_range(0..r as u32) as usize
                };
                factors[slot].insert(v);
            }
            let ring = RingContext::with_vars(n)?;
            from_report(check_transversal_ntf(&ring, &factors, 3, budget)?)
        }
        Suite::WitnessDegree => {
            let i = random_ideal(rng, (2, 6), 5, 1, true)?;
            from_report(check_witness_degree(&i, random_t(rng), budget)?)
        }
        Suite::MinprimeWitness => {
            let i = random_ideal(rng, (2, 6), 6, 1, true)?;
            from_report(check_minprime_witness(&i)?)
        }
        Suite::DeletionWitness => {
            let i = random_ideal(rng, (1, 5), 4, 2, false)?;
            from_report(check_deletion_witness(&i, random_t(rng), budget)?)
        }
        Suite::Nondivisibility => {
            let i = random_ideal(rng, (1, 5), 4, 2, false)?;
            from_report(check_witness_nondivisibility(&i, random_t(rng), budget)?)
        }
        Suite::CornerDivisibility => {
            let i = random_ideal(rng, (1, 5), 4, 2, false)?;
            from_report(check_corner_divisibility(&i, random_t(rng), budget)?)
        }
        Suite::Distributivity => {
            let n = rng.gen_range(1..=5u32) as usize;
            let mut three = Vec::with_capacity(3);
            for _ in 0..3 {
                let s = RandomSpec {
                    nvars: n,
                    ngens: rng.gen_range(1..=4u32) as usize,
                    max_degree: 4,
                    max_exponent: 3,
                    squarefree: false,
                };
                three.push(random_ideal_with(rng, &s)?);
            }
            let (i, j, l) = (&three[0], &three[1], &three[2]);
            let a = intersect(i, &sum(j, l)?)? == sum(&intersect(i, j)?, &intersect(i, l)?)?;
            let b = sum(i, &intersect(j, l)?)? == intersect(&sum(i, j)?, &sum(i, l)?)?;
            if a && b {
                InstanceResult::Pass
            } else {
                InstanceResult::Violation(format!("I = {i}, J = {j}, L = {l}"))
            }
        }
        Suite::MonomialMultiple => {
            let i = random_ideal(rng, (2, 5), 4, 1, true)?;
            let h = Monomial::from_exponents(
                (0..i.nvars())
                    .map(|_| rng.gen_range(0..=2u32))
                    .collect::<Vec<_>>(),
            );
            let hi = product(&i, &MonomialIdeal::principal(i.ring(), h.clone())?)?;
            let a = is_ntf_up_to(&i, 3, budget)?.holds();
            let b = is_ntf_up_to(&hi, 3, budget)?.holds();
            if a == b {
                InstanceResult::Pass
            } else {
                InstanceResult::Violation(format!(
                    "I = {i}, h = {}: {a} for I, {b} for h*I",
                    i.format_monomial(&h)
                ))
            }
        }
        Suite::DeletionColon => {
            let i = random_ideal(rng, (2, 5), 5, 1, true)?;
            let t = random_t(rng);
            let n = i.nvars() as u32;
            let ys: BTreeSet<usize> = (0..rng.gen_range(0..=2u32))
                .map(|_| rng.gen_range(0..n) as usize)
                .collect();
            let ys: Vec<usize> = ys.into_iter().collect();
            match deletion_colon_sides(&i, t, &ys)? {
                None => InstanceResult::Skipped("deletion hypothesis fails".into()),
                Some((a, b)) if a == b => InstanceResult::Pass,
                Some((a, b)) => {
                    InstanceResult::Violation(format!("I = {i}, t = {t}, ys = {ys:?}: {a} vs {b}"))
                }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::parse(s.name()), Some(s));
        }
        assert_eq!(Suite::parse("nope"), None);
    }

    #[test]
    fn small_sweeps_are_clean_and_deterministic() {
        let b = Budget::default();
        for s in Suite::ALL {
            let a = run_suite(s, 11, 8, &b);
            assert!(a.clean(), "{s}: {:?}", a.first_violation);
            assert_eq!(a, run_suite(s, 11, 8, &b));
        }
    }
}
