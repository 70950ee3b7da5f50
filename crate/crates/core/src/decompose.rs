//! Irreducible decomposition, associated primes, and the witness search
//! that realizes associated primes as colon ideals.
//!
//! A monomial ideal is an irredundant intersection of irreducible ideals
//! `(x_{i_1}^{a_1}, ..., x_{i_k}^{a_k})`, and its associated primes are the
//! radicals of those components. The witness search is an independent route
//! to the same primes: `p ∈ Ass(R/J)` iff `(J : h) = p` for some monomial
//! `h`, and `h` can be confined to a finite box.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::arith::{colon_monomial_unchecked, power};
use crate::error::{Budget, Error, Result};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::monomial::{Monomial, Ring};

/// An irreducible monomial ideal `(x_i^{a_i} : a_i > 0)`.
///
/// Stored as the exponent vector `a`; zero entries are absent variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleComponent {
    ring: Ring,
    powers: Monomial,
}

impl IrreducibleComponent {
    pub fn new(ring: &Ring, pure_powers: &BTreeMap<usize, u32>) -> Result<Self> {
        if pure_powers.is_empty() {
            return Err(Error::domain("an irreducible component needs a generator"));
        }
        let mut exps = vec![0; ring.nvars()];
        for (&i, &a) in pure_powers {
            ring.check_index(i)?;
            if a == 0 {
                return Err(Error::domain("pure powers must have positive exponents"));
            }
            exps[i] = a;
        }
        Ok(IrreducibleComponent {
            ring: ring.clone(),
            powers: Monomial::from_exponents(exps),
        })
    }

    pub fn pure_powers(&self) -> BTreeMap<usize, u32> {
        self.powers
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| (i, a))
            .collect()
    }

    pub fn radical(&self) -> MonomialPrime {
        MonomialPrime::new(&self.ring, self.powers.support_iter()).expect("indices in range")
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.ring.nvars();
        let gens = self
            .powers
            .support_iter()
            .map(|i| Monomial::var(n, i).with_exponent(i, self.powers.exponent(i)))
            .collect::<Vec<_>>();
        MonomialIdeal::new(&self.ring, gens).expect("same ring")
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        component_contains(&self.powers, m)
    }
}

/// Pure powers listed by variable index, e.g. `(x1^2, x2)`.
impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, (v, e)) in self.pure_powers().into_iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            let n = self.ring.nvars();
            f.write_str(
                &self
                    .ring
                    .format_monomial(&Monomial::one(n).with_exponent(v, e)),
            )?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Component{self}")
    }
}

/// `I = ∩ components`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub components: Vec<IrreducibleComponent>,
    pub irredundant: bool,
}

impl Decomposition {
    /// Intersection of the components, for reconstruction checks.
    pub fn intersection(&self, ring: &Ring) -> Result<MonomialIdeal> {
        let ideals: Vec<_> = self.components.iter().map(|c| c.to_ideal()).collect();
        crate::arith::intersect_all(ring, &ideals)
    }

    /// Primary components grouped by radical: each is the intersection of
    /// the irreducible components over that prime.
    pub fn primary_components(&self) -> Result<BTreeMap<MonomialPrime, MonomialIdeal>> {
        let mut out: BTreeMap<MonomialPrime, MonomialIdeal> = BTreeMap::new();
        for c in &self.components {
            let q = c.to_ideal();
            let merged = match out.remove(&c.radical()) {
                Some(prev) => crate::arith::intersect(&prev, &q)?,
                None => q,
            };
            out.insert(c.radical(), merged);
        }
        Ok(out)
    }
}

fn component_contains(powers: &Monomial, m: &Monomial) -> bool {
    powers
        .exponents()
        .iter()
        .zip(m.exponents())
        .any(|(&a, &e)| a > 0 && e >= a)
}

/// Component `a` is contained in component `b`.
fn component_subset(a: &Monomial, b: &Monomial) -> bool {
    a.exponents()
        .iter()
        .zip(b.exponents())
        .all(|(&x, &y)| x == 0 || (y > 0 && y <= x))
}

/// Keeps the inclusion-minimal components. Irreducible monomial ideals are
/// meet-irreducible, so an antichain of them is an irredundant intersection.
fn minimal_components(mut comps: Vec<Monomial>) -> Vec<Monomial> {
    comps.sort_unstable();
    comps.dedup();
    let keep: Vec<bool> = comps
        .iter()
        .enumerate()
        .map(|(i, c)| {
            !comps
                .iter()
                .enumerate()
                .any(|(j, d)| i != j && component_subset(d, c))
        })
        .collect();
    comps
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

/// Irredundant irreducible decomposition of a proper nonzero ideal.
///
/// Generators are added one at a time: for the current components `Q` and
/// a new generator `g = ∏ x_i^{g_i}`, `Q + (g) = ∩_{i ∈ supp g} (Q + (x_i^{g_i}))`
/// unless `g ∈ Q` already. Non-minimal components are pruned after every
/// generator.
pub fn irreducible_decomposition(i: &MonomialIdeal) -> Result<Decomposition> {
    i.require_proper_nonzero("irreducible decomposition")?;
    let mut gens = i.gens().iter();
    let first = gens.next().expect("nonzero ideal");
    let mut comps: Vec<Monomial> = first
        .support_iter()
        .map(|v| Monomial::one(i.nvars()).with_exponent(v, first.exponent(v)))
        .collect();
    for g in gens {
        let mut next = Vec::with_capacity(comps.len() * 2);
        for q in comps {
            if component_contains(&q, g) {
                next.push(q);
            } else {
                for v in g.support_iter() {
                    next.push(q.with_exponent(v, g.exponent(v)));
                }
            }
        }
        comps = minimal_components(next);
    }
    Ok(Decomposition {
        components: comps
            .into_iter()
            .map(|powers| IrreducibleComponent {
                ring: i.ring().clone(),
                powers,
            })
            .collect(),
        irredundant: true,
    })
}

/// `Ass(R/I)` in canonical order (height, then variable indices).
pub fn associated_primes(i: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let d = irreducible_decomposition(i)?;
    let primes: BTreeSet<MonomialPrime> = d.components.iter().map(|c| c.radical()).collect();
    Ok(primes.into_iter().collect())
}

pub fn minimal_primes(i: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    Ok(minimal_among(&associated_primes(i)?))
}

pub fn embedded_primes(i: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let ass = associated_primes(i)?;
    let min = minimal_among(&ass);
    Ok(ass.into_iter().filter(|p| !min.contains(p)).collect())
}

pub(crate) fn minimal_among(primes: &[MonomialPrime]) -> Vec<MonomialPrime> {
    primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && q.is_subset_of(p)))
        .cloned()
        .collect()
}

pub fn height(i: &MonomialIdeal) -> Result<usize> {
    Ok(minimal_primes(i)?
        .iter()
        .map(MonomialPrime::height)
        .min()
        .expect("proper nonzero ideal has a minimal prime"))
}

/// All associated primes have the same height.
pub fn is_unmixed(i: &MonomialIdeal) -> Result<bool> {
    let ass = associated_primes(i)?;
    Ok(ass.iter().all(|p| p.height() == ass[0].height()))
}

/// `Ass(R/I)` extended to the degenerate ideals: the zero ideal has the zero
/// prime, the unit ideal has none.
pub fn associated_primes_total(i: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    if i.is_zero() {
        return Ok(vec![MonomialPrime::new(i.ring(), [])?]);
    }
    if i.is_unit() {
        return Ok(Vec::new());
    }
    associated_primes(i)
}

/// `(J : h)` when it is a monomial prime, `None` otherwise.
///
/// The colon is generated by the quotients `u / gcd(u, h)`; it equals `p_F`
/// iff no quotient is 1, `F` is the set of linear quotients, and every other
/// quotient lies in `p_F`.
pub fn colon_prime(j: &MonomialIdeal, h: &Monomial) -> Option<MonomialPrime> {
    if j.is_zero() {
        return Some(MonomialPrime::new(j.ring(), []).expect("empty prime"));
    }
    let n = j.nvars();
    let mut linear = vec![false; n];
    let mut quotients = Vec::with_capacity(j.len());
    for u in j.gens() {
        let q = u.quotient_by_gcd(h);
        match q.degree() {
            0 => return None,
            1 => linear[q.support_iter().next().expect("degree one")] = true,
            _ => quotients.push(q),
        }
    }
    if quotients
        .iter()
        .all(|q| q.support_iter().any(|v| linear[v]))
    {
        let vars = (0..n).filter(|&v| linear[v]);
        Some(MonomialPrime::new(j.ring(), vars).expect("indices in range"))
    } else {
        None
    }
}

/// `h` with `(I^t : h) = prime`, verified at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeWitness {
    prime: MonomialPrime,
    witness: Monomial,
}

impl PrimeWitness {
    /// Checks `(power : witness) = prime` before accepting the pair.
    pub fn verified(
        power: &MonomialIdeal,
        prime: MonomialPrime,
        witness: Monomial,
    ) -> Result<Self> {
        power.check_monomial(&witness)?;
        let colon = colon_monomial_unchecked(power, &witness);
        if colon != prime.to_ideal() {
            return Err(Error::Arithmetic(format!(
                "colon by {} is {colon}, not {prime}",
                power.format_monomial(&witness)
            )));
        }
        Ok(PrimeWitness { prime, witness })
    }

    pub fn prime(&self) -> &MonomialPrime {
        &self.prime
    }

    pub fn witness(&self) -> &Monomial {
        &self.witness
    }
}

/// Per-variable exponent bounds for the witness search over `J = I^t`: the
/// exponent vector of `lcm(G(J))`.
///
/// Replacing `h_i` by `min(h_i, lcm_i)` leaves every `u / gcd(u, h)`
/// unchanged, so every colon `(J : h)` is already realized inside the box.
/// Variables outside the support of `J` get bound `0`. For square-free `I`
/// the bound is `t` on the support; a prime's own variables never need more
/// than `t - 1`, but the others can (`((x1*x2) : x2) = (x1)`).
pub fn witness_box(power: &MonomialIdeal) -> Vec<u32> {
    power.lcm_of_generators().exponents().to_vec()
}

pub(crate) fn box_cells(bounds: &[u32]) -> u64 {
    bounds
        .iter()
        .try_fold(1u64, |acc, &b| acc.checked_mul(b as u64 + 1))
        .unwrap_or(u64::MAX)
}

/// Calls `visit` on every monomial with `exps <= bounds` componentwise.
pub(crate) fn for_each_in_box(bounds: &[u32], mut visit: impl FnMut(&Monomial)) {
    let mut exps = vec![0u32; bounds.len()];
    loop {
        visit(&Monomial::from_exponents(exps.clone()));
        let mut k = 0;
        loop {
            if k == bounds.len() {
                return;
            }
            if exps[k] < bounds[k] {
                exps[k] += 1;
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}

/// Every `(h, p)` in the box with `(power : h) = p` prime, canonical order
/// on `h`.
pub fn witnesses_in_box(
    power: &MonomialIdeal,
    bounds: &[u32],
    budget: &Budget,
) -> Result<Vec<PrimeWitness>> {
    budget.check_cells("witness box", box_cells(bounds))?;
    let mut out = Vec::new();
    for_each_in_box(bounds, |h| {
        if let Some(p) = colon_prime(power, h) {
            out.push(PrimeWitness {
                prime: p,
                witness: h.clone(),
            });
        }
    });
    out.sort_by(|a, b| a.witness.cmp(&b.witness));
    Ok(out)
}

/// All witnesses for `I^t` over the search box of [`witness_box`].
pub fn all_witnesses(i: &MonomialIdeal, t: u32, budget: &Budget) -> Result<Vec<PrimeWitness>> {
    if t == 0 {
        return Err(Error::domain("power must be at least 1"));
    }
    let j = power(i, t)?;
    let bounds = witness_box(&j);
    witnesses_in_box(&j, &bounds, budget)
}

/// The canonical-order-smallest `h` with `(I^t : h) = p`, if one exists.
pub fn witness_for(
    i: &MonomialIdeal,
    t: u32,
    p: &MonomialPrime,
    budget: &Budget,
) -> Result<Option<PrimeWitness>> {
    if t == 0 {
        return Err(Error::domain("power must be at least 1"));
    }
    let j = power(i, t)?;
    witness_for_power(&j, p, budget)
}

/// [`witness_for`] with `I^t` already computed.
pub fn witness_for_power(
    j: &MonomialIdeal,
    p: &MonomialPrime,
    budget: &Budget,
) -> Result<Option<PrimeWitness>> {
    let bounds = witness_box(j);
    budget.check_cells("witness box", box_cells(&bounds))?;
    let mut best: Option<Monomial> = None;
    for_each_in_box(&bounds, |h| {
        if best.as_ref().is_some_and(|b| b <= h) {
            return;
        }
        if colon_prime(j, h).as_ref() == Some(p) {
            best = Some(h.clone());
        }
    });
    best.map(|h| PrimeWitness::verified(j, p.clone(), h))
        .transpose()
}

/// `Ass(R/I^t)` computed only from colon ideals over the search box.
pub fn ass_by_witness_enumeration(
    i: &MonomialIdeal,
    t: u32,
    budget: &Budget,
) -> Result<Vec<MonomialPrime>> {
    let primes: BTreeSet<MonomialPrime> = all_witnesses(i, t, budget)?
        .into_iter()
        .map(|w| w.prime)
        .collect();
    Ok(primes.into_iter().collect())
}

/// `{p1 + p2 : p1 ∈ Ass(I1), p2 ∈ Ass(I2)}` for ideals in disjoint variables.
pub fn ass_of_disjoint_sum(i1: &MonomialIdeal, i2: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    i1.check_same_ring(i2)?;
    let s1 = i1.support_union();
    if i2.support_union().iter().any(|v| s1.contains(v)) {
        return Err(Error::domain("ideals share variables"));
    }
    let a1 = associated_primes(i1)?;
    let a2 = associated_primes(i2)?;
    let primes: BTreeSet<MonomialPrime> = a1
        .iter()
        .flat_map(|p| a2.iter().map(move |q| p.join(q)))
        .collect();
    Ok(primes.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{deletion, intersect};
    use crate::monomial::RingContext;

    fn ideal(r: &Ring, s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(r, s).unwrap()
    }

    fn primes(r: &Ring, list: &[&str]) -> Vec<MonomialPrime> {
        let set: BTreeSet<_> = list
            .iter()
            .map(|s| MonomialPrime::parse(r, s).unwrap())
            .collect();
        set.into_iter().collect()
    }

    fn names(d: &Decomposition) -> Vec<String> {
        d.components.iter().map(|c| c.to_string()).collect()
    }

    const EXAMPLE_3_10: &str =
        "x1*x3*x6, x1*x3*x7, x1*x4*x6, x1*x4*x7, x1*x5*x7, x2*x4*x7, x2*x5*x7";

    #[test]
    fn decomposition_examples() {
        let r = RingContext::with_vars(3).unwrap();
        let d = irreducible_decomposition(&ideal(&r, "x1*x2")).unwrap();
        assert_eq!(names(&d), ["(x1)", "(x2)"]);
        let d = irreducible_decomposition(&ideal(&r, "x1^2, x1*x2")).unwrap();
        assert_eq!(names(&d), ["(x1)", "(x1^2, x2)"]);
        let i = intersect(&ideal(&r, "x1, x2"), &ideal(&r, "x2, x3")).unwrap();
        let d = irreducible_decomposition(&i).unwrap();
        assert_eq!(names(&d), ["(x1, x2)", "(x2, x3)"]);
        assert_eq!(d.intersection(&r).unwrap(), i);
        assert!(irreducible_decomposition(&MonomialIdeal::zero(&r)).is_err());
        assert!(irreducible_decomposition(&MonomialIdeal::unit(&r)).is_err());
    }

    #[test]
    fn example_3_10_associated_primes() {
        let r = RingContext::with_vars(7).unwrap();
        let i = ideal(&r, EXAMPLE_3_10);
        assert_eq!(
            associated_primes(&i).unwrap(),
            primes(
                &r,
                &["x1,x2", "x1,x7", "x6,x7", "x1,x4,x5", "x3,x4,x7", "x3,x4,x5"]
            )
        );
        let f = deletion(&i, 2).unwrap();
        assert_eq!(
            associated_primes(&f).unwrap(),
            primes(&r, &["x1,x2", "x4,x5", "x4,x7", "x6,x7", "x1,x7"])
        );
        assert!(!is_unmixed(&i).unwrap());
        assert_eq!(height(&i).unwrap(), 2);
        assert_eq!(minimal_primes(&i).unwrap(), associated_primes(&i).unwrap());
    }

    #[test]
    fn min_embedded_height() {
        let r = RingContext::with_vars(4).unwrap();
        let tri = ideal(&r, "x1*x2, x2*x3, x1*x3");
        let sq = power(&tri, 2).unwrap();
        assert_eq!(embedded_primes(&sq).unwrap(), primes(&r, &["x1,x2,x3"]));
        assert!(embedded_primes(&ideal(&r, "x1*x2")).unwrap().is_empty());
        let ci = ideal(&r, "x1*x2, x3*x4");
        assert_eq!(
            minimal_primes(&ci).unwrap(),
            primes(&r, &["x1,x3", "x1,x4", "x2,x3", "x2,x4"])
        );
        assert_eq!(height(&ci).unwrap(), 2);
        let r3 = RingContext::with_vars(3).unwrap();
        assert_eq!(height(&MonomialPrime::maximal(&r3).to_ideal()).unwrap(), 3);
        assert_eq!(
            associated_primes(&ideal(&r, "x1*x2")).unwrap(),
            primes(&r, &["x1", "x2"])
        );
    }

    #[test]
    fn witness_examples() {
        let budget = Budget::default();
        let r = RingContext::with_vars(2).unwrap();
        let m = ideal(&r, "x1, x2");
        let w = witness_for(&m, 1, &MonomialPrime::maximal(&r), &budget)
            .unwrap()
            .unwrap();
        assert!(w.witness().is_one());

        let r3 = RingContext::with_vars(3).unwrap();
        let tri = ideal(&r3, "x1*x2, x2*x3, x1*x3");
        let w = witness_for(&tri, 2, &MonomialPrime::maximal(&r3), &budget)
            .unwrap()
            .unwrap();
        assert_eq!(r3.format_monomial(w.witness()), "x1*x2*x3");
        assert!(witness_for(&tri, 1, &MonomialPrime::maximal(&r3), &budget)
            .unwrap()
            .is_none());

        let r7 = RingContext::with_vars(7).unwrap();
        let i = ideal(&r7, EXAMPLE_3_10);
        let p = MonomialPrime::parse(&r7, "x1,x2").unwrap();
        let w = witness_for(&i, 1, &p, &budget).unwrap().unwrap();
        assert_eq!(
            crate::arith::colon_monomial(&i, w.witness()).unwrap(),
            p.to_ideal()
        );
    }

    #[test]
    fn verified_witness_rejects_wrong_pairs() {
        let r = RingContext::with_vars(2).unwrap();
        let i = ideal(&r, "x1*x2");
        let p = MonomialPrime::parse(&r, "x1").unwrap();
        assert!(PrimeWitness::verified(&i, p.clone(), r.monomial("x2").unwrap()).is_ok());
        assert!(PrimeWitness::verified(&i, p.clone(), r.monomial("x1").unwrap()).is_err());
        let w = witness_for(&i, 1, &p, &Budget::default()).unwrap().unwrap();
        assert_eq!(r.format_monomial(w.witness()), "x2");
    }

    #[test]
    fn enumeration_agrees_on_small_cases() {
        let budget = Budget::default();
        let r = RingContext::with_vars(7).unwrap();
        let i = ideal(&r, EXAMPLE_3_10);
        assert_eq!(
            ass_by_witness_enumeration(&i, 1, &budget).unwrap(),
            associated_primes(&i).unwrap()
        );
        let r2 = RingContext::with_vars(2).unwrap();
        let p = ideal(&r2, "x1*x2");
        for t in 1..=3 {
            assert_eq!(
                ass_by_witness_enumeration(&p, t, &budget).unwrap(),
                associated_primes(&power(&p, t).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn witness_box_budget() {
        let r = RingContext::with_vars(4).unwrap();
        let i = ideal(&r, "x1^9*x2^9, x3^9*x4^9");
        let err = ass_by_witness_enumeration(&i, 2, &Budget::with_cells(1000)).unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
    }

    #[test]
    fn disjoint_sum_examples() {
        let r = RingContext::with_vars(4).unwrap();
        assert_eq!(
            ass_of_disjoint_sum(&ideal(&r, "x1"), &ideal(&r, "x2")).unwrap(),
            primes(&r, &["x1,x2"])
        );
        let a = ideal(&r, "x1*x2");
        let b = ideal(&r, "x3*x4");
        let expected = primes(&r, &["x1,x3", "x1,x4", "x2,x3", "x2,x4"]);
        assert_eq!(ass_of_disjoint_sum(&a, &b).unwrap(), expected);
        assert_eq!(
            associated_primes(&crate::arith::sum(&a, &b).unwrap()).unwrap(),
            expected
        );
        assert!(ass_of_disjoint_sum(&a, &ideal(&r, "x2*x3")).is_err());
    }

    #[test]
    fn colon_prime_handles_degenerate_ideals() {
        let r = RingContext::with_vars(2).unwrap();
        assert!(colon_prime(&MonomialIdeal::zero(&r), &Monomial::one(2))
            .unwrap()
            .is_zero());
        assert!(colon_prime(&MonomialIdeal::unit(&r), &Monomial::one(2)).is_none());
        assert!(colon_prime(&ideal(&r, "x1^2"), &Monomial::one(2)).is_none());
    }
}
