//! Power-by-power checks of normal torsion-freeness and the persistence
//! properties up to a fixed bound.

use crate::arith::{colon_ideal, product};
use crate::decompose::{associated_primes, witness_for_power};
use crate::error::{Budget, Error, Result};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::monomial::Monomial;
use crate::properties::certificate::structural_ntf_certificate;
use crate::properties::report::{AssSnapshot, FailureWitness, Property, PropertyReport, Verdict};
use crate::structure::symbolic_power;

pub const DEFAULT_MAX_POWER: u32 = 4;

/// Lazily computed powers `I^1, I^2, ...` and their associated primes.
pub struct PowerTower {
    base: MonomialIdeal,
    budget: Budget,
    powers: Vec<MonomialIdeal>,
    ass: Vec<Option<Vec<MonomialPrime>>>,
}

impl PowerTower {
    pub fn new(base: &MonomialIdeal, budget: &Budget) -> Self {
        PowerTower {
            base: base.clone(),
            budget: *budget,
            powers: Vec::new(),
            ass: Vec::new(),
        }
    }

    pub fn base(&self) -> &MonomialIdeal {
        &self.base
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    /// `I^k` for `k >= 1`.
    pub fn power(&mut self, k: u32) -> Result<&MonomialIdeal> {
        if k == 0 {
            return Err(Error::domain("power must be at least 1"));
        }
        while self.powers.len() < k as usize {
            let next = match self.powers.last() {
                Some(prev) => {
                    let reached = self.powers.len() + 1;
                    let p = product(prev, &self.base)?;
                    self.budget
                        .check_generators(format!("generators of I^{reached}"), p.len())?;
                    p
                }
                None => self.base.clone(),
            };
            self.powers.push(next);
            self.ass.push(None);
        }
        Ok(&self.powers[k as usize - 1])
    }

    /// `Ass(R/I^k)` in canonical order.
    pub fn ass(&mut self, k: u32) -> Result<&[MonomialPrime]> {
        self.power(k)?;
        let idx = k as usize - 1;
        if self.ass[idx].is_none() {
            self.ass[idx] = Some(associated_primes(&self.powers[idx])?);
        }
        Ok(self.ass[idx].as_deref().expect("filled above"))
    }

    /// The smallest witness of `p` in `Ass(R/I^k)`.
    fn witness(&mut self, k: u32, p: &MonomialPrime) -> Result<Option<Monomial>> {
        let budget = self.budget;
        let j = self.power(k)?;
        Ok(witness_for_power(j, p, &budget)?.map(|w| w.witness().clone()))
    }

    fn snapshots(&mut self, upto: u32) -> Result<Vec<AssSnapshot>> {
        (1..=upto)
            .map(|k| {
                Ok(AssSnapshot {
                    power: k,
                    primes: self.ass(k)?.to_vec(),
                })
            })
            .collect()
    }
}

fn check_preconditions(i: &MonomialIdeal, bound: u32) -> Result<()> {
    if bound == 0 {
        return Err(Error::domain("the power bound must be at least 1"));
    }
    i.require_proper_nonzero("property check")
}

fn ntf_verdict(tower: &mut PowerTower, bound: u32) -> Result<Verdict> {
    let first = tower.ass(1)?.to_vec();
    for k in 2..=bound {
        let extra = tower.ass(k)?.iter().find(|p| !first.contains(p)).cloned();
        if let Some(p) = extra {
            let witness = tower.witness(k, &p)?;
            return Ok(Verdict::FailsAt {
                power: k,
                witness: FailureWitness::Prime { prime: p, witness },
            });
        }
    }
    Ok(match structural_ntf_certificate(tower.base()) {
        Some(certificate) => Verdict::Certified { bound, certificate },
        None => Verdict::HoldsUpTo { bound },
    })
}

fn persistence_verdict(tower: &mut PowerTower, bound: u32) -> Result<Verdict> {
    for k in 1..=bound {
        let next = tower.ass(k + 1)?.to_vec();
        let lost = tower.ass(k)?.iter().find(|p| !next.contains(p)).cloned();
        if let Some(p) = lost {
            let witness = tower.witness(k, &p)?;
            return Ok(Verdict::FailsAt {
                power: k,
                witness: FailureWitness::Prime { prime: p, witness },
            });
        }
    }
    Ok(Verdict::HoldsUpTo { bound })
}

/// `left ⊇ right` is known; a generator of `left` outside `right`, if any.
fn excess_generator(left: &MonomialIdeal, right: &MonomialIdeal) -> Option<Monomial> {
    left.gens()
        .iter()
        .find(|g| !right.contains_unchecked(g))
        .cloned()
}

fn strong_persistence_verdict(tower: &mut PowerTower, bound: u32) -> Result<Verdict> {
    let base = tower.base().clone();
    for k in 1..=bound {
        let next = tower.power(k + 1)?.clone();
        let left = colon_ideal(&next, &base)?;
        let right = tower.power(k)?;
        if let Some(generator) = excess_generator(&left, right) {
            return Ok(Verdict::FailsAt {
                power: k,
                witness: FailureWitness::IdealPair {
                    left,
                    right: right.clone(),
                    generator,
                },
            });
        }
    }
    Ok(Verdict::HoldsUpTo { bound })
}

fn symbolic_strong_persistence_verdict(i: &MonomialIdeal, bound: u32) -> Result<Verdict> {
    let first = symbolic_power(i, 1)?;
    let mut current = first.clone();
    for k in 1..=bound {
        let next = symbolic_power(i, k + 1)?;
        let left = colon_ideal(&next, &first)?;
        if let Some(generator) = excess_generator(&left, &current) {
            return Ok(Verdict::FailsAt {
                power: k,
                witness: FailureWitness::IdealPair {
                    left,
                    right: current,
                    generator,
                },
            });
        }
        current = next;
    }
    Ok(Verdict::HoldsUpTo { bound })
}

/// `Ass(R/I^k) ⊆ Ass(R/I)` for `k = 1..=bound`.
///
/// A passing check is upgraded to [`Verdict::Certified`] when a structural
/// certificate covers every power.
pub fn is_ntf_up_to(i: &MonomialIdeal, bound: u32, budget: &Budget) -> Result<PropertyReport> {
    check_report(i, bound, budget, &[Property::NormallyTorsionFree])
}

/// `Ass(R/I^k) ⊆ Ass(R/I^{k+1})` for `k = 1..=bound`.
pub fn has_persistence_up_to(
    i: &MonomialIdeal,
    bound: u32,
    budget: &Budget,
) -> Result<PropertyReport> {
    check_report(i, bound, budget, &[Property::Persistence])
}

/// `(I^{k+1} : I) = I^k` for `k = 1..=bound`.
pub fn has_strong_persistence_up_to(
    i: &MonomialIdeal,
    bound: u32,
    budget: &Budget,
) -> Result<PropertyReport> {
    check_report(i, bound, budget, &[Property::StrongPersistence])
}

/// `(I^{(k+1)} : I^{(1)}) = I^{(k)}` for `k = 1..=bound`.
pub fn has_symbolic_strong_persistence_up_to(
    i: &MonomialIdeal,
    bound: u32,
    budget: &Budget,
) -> Result<PropertyReport> {
    check_report(i, bound, budget, &[Property::SymbolicStrongPersistence])
}

/// Runs the requested checks on one shared tower of powers.
pub fn check_report(
    i: &MonomialIdeal,
    bound: u32,
    budget: &Budget,
    properties: &[Property],
) -> Result<PropertyReport> {
    check_preconditions(i, bound)?;
    let mut tower = PowerTower::new(i, budget);
    let mut verdicts = Vec::new();
    let mut reached = bound;
    for &p in properties {
        let v = match p {
            Property::NormallyTorsionFree => ntf_verdict(&mut tower, bound)?,
            Property::Persistence => {
                reached = reached.max(bound + 1);
                persistence_verdict(&mut tower, bound)?
            }
            Property::StrongPersistence => strong_persistence_verdict(&mut tower, bound)?,
            Property::SymbolicStrongPersistence => symbolic_strong_persistence_verdict(i, bound)?,
        };
        verdicts.push((p, v));
    }
    let snapshots = tower.snapshots(reached)?;
    Ok(PropertyReport {
        ideal: i.clone(),
        max_power: bound,
        verdicts,
        snapshots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{Ring, RingContext};

    fn ideal(r: &Ring, s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(r, s).unwrap()
    }

    fn ntf(i: &MonomialIdeal, t: u32) -> Verdict {
        is_ntf_up_to(i, t, &Budget::default())
            .unwrap()
            .verdict(Property::NormallyTorsionFree)
            .unwrap()
            .clone()
    }

    #[test]
    fn four_cycle_is_certified() {
        let r = RingContext::with_vars(4).unwrap();
        let v = ntf(&ideal(&r, "x1*x2, x2*x3, x3*x4, x1*x4"), 4);
        assert!(matches!(v, Verdict::Certified { bound: 4, .. }));
    }

    #[test]
    fn triangle_fails_at_two() {
        let r = RingContext::with_vars(3).unwrap();
        match ntf(&ideal(&r, "x1*x2, x2*x3, x1*x3"), 2) {
            Verdict::FailsAt {
                power: 2,
                witness: FailureWitness::Prime { prime, witness },
            } => {
                assert_eq!(prime.to_string(), "(x1,x2,x3)");
                assert_eq!(r.format_monomial(&witness.unwrap()), "x1*x2*x3");
            }
            other => panic!("unexpected verdict {other:?}"),
        }
    }

    #[test]
    fn single_variable_holds() {
        let r = RingContext::with_vars(2).unwrap();
        assert!(ntf(&ideal(&r, "x1"), 5).holds());
    }

    #[test]
    fn strong_persistence_examples() {
        let r = RingContext::with_vars(7).unwrap();
        let b = Budget::default();
        let rep = has_strong_persistence_up_to(&ideal(&r, "x1, x2"), 3, &b).unwrap();
        assert!(rep.holds());
        let ex = ideal(
            &r,
            "x1*x3*x6, x1*x3*x7, x1*x4*x6, x1*x4*x7, x1*x5*x7, x2*x4*x7, x2*x5*x7",
        );
        assert!(has_strong_persistence_up_to(&ex, 3, &b).unwrap().holds());
        let principal = ideal(&r, "x1*x2*x5");
        assert!(has_symbolic_strong_persistence_up_to(&principal, 3, &b)
            .unwrap()
            .holds());
    }

    #[test]
    fn snapshots_cover_the_next_power_for_persistence() {
        let r = RingContext::with_vars(3).unwrap();
        let rep = has_persistence_up_to(&ideal(&r, "x1*x2, x2*x3, x1*x3"), 2, &Budget::default())
            .unwrap();
        assert!(rep.holds());
        assert_eq!(rep.snapshots.len(), 3);
        assert_eq!(rep.snapshots[1].primes.len(), 4);
    }

    #[test]
    fn preconditions() {
        let r = RingContext::with_vars(2).unwrap();
        let b = Budget::default();
        assert!(is_ntf_up_to(&ideal(&r, "x1"), 0, &b).is_err());
        assert!(is_ntf_up_to(&MonomialIdeal::zero(&r), 2, &b).is_err());
        assert!(is_ntf_up_to(&MonomialIdeal::unit(&r), 2, &b).is_err());
    }

    #[test]
    fn generator_budget_names_the_power() {
        let r = RingContext::with_vars(6).unwrap();
        let i = ideal(&r, "x1*x2, x2*x3, x3*x4, x4*x5, x5*x6, x1*x6, x1*x4");
        let tight = Budget {
            max_generators: 20,
            ..Budget::default()
        };
        let err = is_ntf_up_to(&i, 4, &tight).unwrap_err();
        match err {
            Error::Budget { what, .. } => assert!(what.contains("I^"), "{what}"),
            other => panic!("unexpected error {other}"),
        }
    }
}
