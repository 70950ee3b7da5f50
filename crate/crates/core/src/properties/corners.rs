//! Corner elements of `I^t`: monomials `z ∉ I^t` with `x_i z ∈ I^t` for
//! every variable.

use crate::arith::{deletion, power};
use crate::decompose::{associated_primes, associated_primes_total, box_cells, for_each_in_box};
use crate::error::{Budget, Error, Result};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::monomial::Monomial;
use crate::properties::report::TheoremReport;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerSet {
    power: u32,
    corners: Vec<Monomial>,
}

impl CornerSet {
    /// Accepts `corners` only if each one is a corner element of `j = I^t`.
    pub fn verified(j: &MonomialIdeal, power: u32, mut corners: Vec<Monomial>) -> Result<Self> {
        for z in &corners {
            if !is_corner(j, z)? {
                return Err(Error::Arithmetic(format!(
                    "{} is not a corner element",
                    j.format_monomial(z)
                )));
            }
        }
        corners.sort();
        corners.dedup();
        Ok(CornerSet { power, corners })
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn corners(&self) -> &[Monomial] {
        &self.corners
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }
}

/// `z ∉ J` and `x_i z ∈ J` for all `i`.
pub fn is_corner(j: &MonomialIdeal, z: &Monomial) -> Result<bool> {
    if j.contains(z)? {
        return Ok(false);
    }
    for v in 0..j.nvars() {
        let e = z
            .exponent(v)
            .checked_add(1)
            .ok_or_else(|| Error::Overflow("x_i z".into()))?;
        if !j.contains_unchecked(&z.with_exponent(v, e)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exponent bounds that contain every corner element of `j`.
///
/// If `z_i >= lcm_i` then any generator dividing `x_i z` already divides
/// `z`, so corners satisfy `z_i <= lcm_i - 1`; for square-free `I` this is
/// the `t - 1` bound.
pub fn corner_box(j: &MonomialIdeal) -> Vec<u32> {
    j.lcm_of_generators()
        .exponents()
        .iter()
        .map(|&e| e.saturating_sub(1))
        .collect()
}

/// All corner elements of `I^t`, cross-checked against whether the maximal
/// ideal is associated to `I^t`.
pub fn corner_elements(i: &MonomialIdeal, t: u32, budget: &Budget) -> Result<CornerSet> {
    if t == 0 {
        return Err(Error::domain("power must be at least 1"));
    }
    i.require_proper_nonzero("corner elements")?;
    let j = power(i, t)?;
    budget.check_generators(format!("generators of I^{t}"), j.len())?;
    corners_of_power(&j, t, budget)
}

pub(crate) fn corners_of_power(j: &MonomialIdeal, t: u32, budget: &Budget) -> Result<CornerSet> {
    let bounds = corner_box(j);
    budget.check_cells("corner box", box_cells(&bounds))?;
    let mut found = Vec::new();
    let mut err = None;
    for_each_in_box(&bounds, |z| {
        if err.is_none() {
            match is_corner(j, z) {
                Ok(true) => found.push(z.clone()),
                Ok(false) => {}
                Err(e) => err = Some(e),
            }
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    let set = CornerSet::verified(j, t, found)?;
    let m = MonomialPrime::maximal(j.ring());
    let associated = associated_primes(j)?.contains(&m);
    if associated == set.is_empty() {
        return Err(Error::Arithmetic(format!(
            "corner search and decomposition disagree on the maximal ideal for power {t}"
        )));
    }
    Ok(set)
}

/// Corners are pairwise incomparable under divisibility, and every corner
/// is divisible by each `x_i` with `m \ x_i ∉ Ass((I \ x_i)^t)`.
pub fn check_corner_divisibility(
    i: &MonomialIdeal,
    t: u32,
    budget: &Budget,
) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("cor-corner-div", Some(t));
    let set = corner_elements(i, t, budget)?;
    let ring = i.ring();
    report.fact(format!(
        "corners of I^{t}: [{}]",
        set.corners()
            .iter()
            .map(|z| ring.format_monomial(z))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    check_pairwise_nondivisibility(&mut report, i, set.corners());
    let m = MonomialPrime::maximal(ring);
    for v in 0..i.nvars() {
        let d = power(&deletion(i, v)?, t)?;
        let target = m.without(v);
        if associated_primes_total(&d)?.contains(&target) {
            report.fact(format!(
                "{}: {target} is associated to the deleted power, no constraint",
                ring.name(v)
            ));
            continue;
        }
        report.fact(format!("{}: every corner must be divisible", ring.name(v)));
        for z in set.corners() {
            if z.exponent(v) == 0 {
                report.violate(format!(
                    "corner {} is not divisible by {}",
                    ring.format_monomial(z),
                    ring.name(v)
                ));
            }
        }
    }
    Ok(report)
}

pub(crate) fn check_pairwise_nondivisibility(
    report: &mut TheoremReport,
    i: &MonomialIdeal,
    items: &[Monomial],
) {
    for (a, f) in items.iter().enumerate() {
        for (b, g) in items.iter().enumerate() {
            if a != b && f.divides(g) {
                report.violate(format!(
                    "{} divides {}",
                    i.format_monomial(f),
                    i.format_monomial(g)
                ));
            }
        }
    }
}
