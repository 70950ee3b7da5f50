//! Monomial ideals in canonical form and monomial primes.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{same_ring, Monomial, Ring};

/// A monomial ideal given by its minimal generating set `G(I)`.
///
/// Generators are irredundant and sorted in the canonical monomial order, so
/// two equal ideals always compare equal. The zero ideal has no generators;
/// the unit ideal is generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

/// Reduces a generator list to the minimal generating set of the ideal it
/// generates, in canonical order.
pub fn minimalize(ring: &Ring, gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    let mut gens: Vec<Monomial> = gens.into_iter().collect();
    if let Some(bad) = gens.iter().find(|g| g.nvars() != ring.nvars()) {
        return Err(Error::ContextMismatch(format!(
            "generator over {} variables in a ring with {}",
            bad.nvars(),
            ring.nvars()
        )));
    }
    Ok(MonomialIdeal::from_unchecked(
        ring.clone(),
        minimal_set(&mut gens),
    ))
}

fn minimal_set(gens: &mut Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    // A divisor has degree <= its multiple, so scanning in canonical order
    // sees every potential divisor first.
    for g in gens.drain(..) {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn new(ring: &Ring, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        minimalize(ring, gens)
    }

    /// Parses a comma-separated generator list such as `x1*x2, x3^2`.
    pub fn parse(ring: &Ring, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "0" {
            return Ok(MonomialIdeal::zero(ring));
        }
        let gens = text
            .split(',')
            .map(|s| ring.monomial(s))
            .collect::<Result<Vec<_>>>()?;
        minimalize(ring, gens)
    }

    pub(crate) fn from_unchecked(ring: Ring, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { ring, gens }
    }

    pub fn zero(ring: &Ring) -> Self {
        MonomialIdeal::from_unchecked(ring.clone(), Vec::new())
    }

    pub fn unit(ring: &Ring) -> Self {
        MonomialIdeal::from_unchecked(ring.clone(), vec![Monomial::one(ring.nvars())])
    }

    pub fn principal(ring: &Ring, m: Monomial) -> Result<Self> {
        minimalize(ring, [m])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub(crate) fn require_proper_nonzero(&self, op: &str) -> Result<()> {
        if self.is_zero() {
            return Err(Error::domain(format!(
                "{op} is undefined for the zero ideal"
            )));
        }
        if self.is_unit() {
            return Err(Error::domain(format!(
                "{op} is undefined for the unit ideal"
            )));
        }
        Ok(())
    }

    pub(crate) fn check_same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        same_ring(&self.ring, &other.ring)
    }

    pub(crate) fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.nvars() != self.nvars() {
            return Err(Error::ContextMismatch(format!(
                "monomial over {} variables against an ideal over {}",
                m.nvars(),
                self.nvars()
            )));
        }
        Ok(())
    }

    /// Membership test: some minimal generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_monomial(m)?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same_ring(other)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Union of the supports of the minimal generators.
    pub fn support_union(&self) -> BTreeSet<usize> {
        self.gens.iter().flat_map(|g| g.support_iter()).collect()
    }

    /// Componentwise maximum of the generators' exponent vectors.
    pub fn lcm_of_generators(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.nvars()), |acc, g| acc.lcm(g))
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        self.ring.format_monomial(m)
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.gens
            .iter()
            .map(|g| self.ring.format_monomial(g))
            .collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "({})", self.generator_strings().join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal{self}")
    }
}

/// The monomial prime `p_F = (x_j : j ∈ F)`.
///
/// An empty variable set stands for the zero prime, which only appears as a
/// deletion `p \ x_i` of a height-one prime.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialPrime {
    ring: Ring,
    vars: BTreeSet<usize>,
}

impl MonomialPrime {
    pub fn new(ring: &Ring, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let vars: BTreeSet<usize> = vars.into_iter().collect();
        for &v in &vars {
            ring.check_index(v)?;
        }
        Ok(MonomialPrime {
            ring: ring.clone(),
            vars,
        })
    }

    /// Parses a comma-separated list of variable names, with optional parens.
    pub fn parse(ring: &Ring, text: &str) -> Result<Self> {
        let text = text.trim().trim_start_matches('(').trim_end_matches(')');
        let vars = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|name| {
                ring.index_of(name)
                    .ok_or_else(|| Error::domain(format!("unknown variable `{name}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialPrime::new(ring, vars)
    }

    /// The graded maximal ideal `m = (x_1, ..., x_n)`.
    pub fn maximal(ring: &Ring) -> Self {
        MonomialPrime {
            ring: ring.clone(),
            vars: (0..ring.nvars()).collect(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn vars(&self) -> &BTreeSet<usize> {
        &self.vars
    }

    pub fn height(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn is_maximal(&self) -> bool {
        self.vars.len() == self.ring.nvars()
    }

    pub fn contains_var(&self, index: usize) -> bool {
        self.vars.contains(&index)
    }

    /// `p \ x_i`: the prime on the remaining variables.
    pub fn without(&self, index: usize) -> Self {
        let mut vars = self.vars.clone();
        vars.remove(&index);
        MonomialPrime {
            ring: self.ring.clone(),
            vars,
        }
    }

    pub fn is_subset_of(&self, other: &MonomialPrime) -> bool {
        self.vars.is_subset(&other.vars)
    }

    /// Sum of two primes: the union of their variable sets.
    pub fn join(&self, other: &MonomialPrime) -> Self {
        MonomialPrime {
            ring: self.ring.clone(),
            vars: self.vars.union(&other.vars).copied().collect(),
        }
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.ring.nvars();
        MonomialIdeal::from_unchecked(
            self.ring.clone(),
            self.vars.iter().map(|&i| Monomial::var(n, i)).collect(),
        )
    }

    /// `p^k`: all degree-`k` monomials in the prime's variables.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        crate::arith::power(&self.to_ideal(), k)
    }

    /// Whether `m` lies in the prime, i.e. is divisible by one of its variables.
    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.vars.iter().any(|&i| m.exponent(i) > 0)
    }

    pub fn var_names(&self) -> Vec<String> {
        self.vars
            .iter()
            .map(|&i| self.ring.name(i).to_string())
            .collect()
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.vars
            .len()
            .cmp(&other.vars.len())
            .then_with(|| self.vars.cmp(&other.vars))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vars.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "({})", self.var_names().join(","))
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Prime{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::RingContext;

    #[test]
    fn minimalize_examples() {
        let r = RingContext::with_vars(2).unwrap();
        let m = |s| r.monomial(s).unwrap();
        let i = minimalize(&r, [m("x1"), m("x1*x2")]).unwrap();
        assert_eq!(i.generator_strings(), ["x1"]);
        assert!(minimalize(&r, []).unwrap().is_zero());
        let i = minimalize(&r, [m("x1^2"), m("x1*x2"), m("x2^2"), m("x1^2*x2")]).unwrap();
        assert_eq!(i.generator_strings(), ["x1^2", "x1*x2", "x2^2"]);
        assert!(minimalize(&r, [Monomial::one(3)]).is_err());
    }

    #[test]
    fn membership_and_squarefree() {
        let r = RingContext::with_vars(3).unwrap();
        let i = MonomialIdeal::parse(&r, "x1*x2").unwrap();
        assert!(i.contains(&r.monomial("x1*x2*x3").unwrap()).unwrap());
        let sq = MonomialIdeal::parse(&r, "x1^2").unwrap();
        assert!(!sq.contains(&r.monomial("x1").unwrap()).unwrap());
        assert!(!sq.is_squarefree());
        assert!(MonomialIdeal::zero(&r).is_squarefree());
        assert!(MonomialIdeal::unit(&r).is_unit());
        assert_eq!(
            MonomialIdeal::parse(&r, "1, x1").unwrap(),
            MonomialIdeal::unit(&r)
        );
    }

    #[test]
    fn prime_basics() {
        let r = RingContext::with_vars(3).unwrap();
        let p = MonomialPrime::parse(&r, "(x1,x3)").unwrap();
        assert_eq!(p.to_string(), "(x1,x3)");
        assert_eq!(p.height(), 2);
        assert_eq!(p.without(0).to_string(), "(x3)");
        assert_eq!(p.without(2).without(0).to_string(), "(0)");
        assert!(MonomialPrime::maximal(&r).is_maximal());
        assert_eq!(p.to_ideal().to_string(), "(x1, x3)");
    }
}
