//! Combinatorics of generators: independence number, König property,
//! transversal polymatroidal ideals, t-spread monomials and symbolic powers.

use std::collections::BTreeSet;

use crate::arith::{intersect_all, power, product};
use crate::decompose::{irreducible_decomposition, minimal_primes};
use crate::error::{Budget, Error, Result};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::monomial::{Monomial, Ring};

/// Supports of the minimal generators, in canonical generator order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportHypergraph {
    pub nvars: usize,
    pub edges: Vec<BTreeSet<usize>>,
}

impl SupportHypergraph {
    pub fn of(i: &MonomialIdeal) -> Self {
        SupportHypergraph {
            nvars: i.nvars(),
            edges: i.gens().iter().map(Monomial::support).collect(),
        }
    }
}

/// `β₁(I)` and one maximum set of pairwise coprime minimal generators.
pub fn beta1(i: &MonomialIdeal) -> Result<(usize, Vec<Monomial>)> {
    beta1_with_budget(i, &Budget::default())
}

pub fn beta1_with_budget(i: &MonomialIdeal, budget: &Budget) -> Result<(usize, Vec<Monomial>)> {
    i.require_proper_nonzero("beta1")?;
    let gens = i.gens();
    let m = gens.len();
    let conflict: Vec<Vec<bool>> = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| a != b && !gens[a].is_coprime(&gens[b]))
                .collect()
        })
        .collect();

    let mut search = IndependentSetSearch {
        conflict: &conflict,
        best: greedy_independent(&conflict),
        nodes: 0,
        max_nodes: budget.max_nodes,
    };
    let mut current = Vec::new();
    search.branch(&mut current, (0..m).collect())?;
    let mut best = search.best;
    best.sort_unstable();
    Ok((
        best.len(),
        best.into_iter().map(|k| gens[k].clone()).collect(),
    ))
}

fn greedy_independent(conflict: &[Vec<bool>]) -> Vec<usize> {
    let m = conflict.len();
    let degree = |v: usize| conflict[v].iter().filter(|&&c| c).count();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&v| (degree(v), v));
    let mut chosen: Vec<usize> = Vec::new();
    for v in order {
        if chosen.iter().all(|&c| !conflict[v][c]) {
            chosen.push(v);
        }
    }
    chosen
}

struct IndependentSetSearch<'a> {
    conflict: &'a [Vec<bool>],
    best: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
}

impl IndependentSetSearch<'_> {
    fn branch(&mut self, current: &mut Vec<usize>, candidates: Vec<usize>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::Budget {
                what: "independent-set search nodes".into(),
                needed: self.nodes,
                limit: self.max_nodes,
            });
        }
        if candidates.is_empty() {
            if current.len() > self.best.len() {
                self.best = current.clone();
            }
            return Ok(());
        }
        if current.len() + candidates.len() <= self.best.len() {
            return Ok(());
        }
        let v = candidates[0];
        let rest: Vec<usize> = candidates[1..].to_vec();
        let compatible: Vec<usize> = rest
            .iter()
            .copied()
            .filter(|&w| !self.conflict[v][w])
            .collect();
        current.push(v);
        self.branch(current, compatible)?;
        current.pop();
        self.branch(current, rest)
    }
}

fn require_squarefree(i: &MonomialIdeal, op: &str) -> Result<()> {
    if !i.is_squarefree() {
        return Err(Error::domain(format!("{op} needs a square-free ideal")));
    }
    Ok(())
}

/// Maximum number of generators with pairwise disjoint supports.
pub fn max_disjoint_generators(i: &MonomialIdeal) -> Result<usize> {
    require_squarefree(i, "max_disjoint_generators")?;
    Ok(beta1(i)?.0)
}

/// Square-free and the maximum number of disjoint generators equals the
/// height.
pub fn is_konig(i: &MonomialIdeal) -> Result<bool> {
    let matching = max_disjoint_generators(i)?;
    Ok(matching == crate::decompose::height(i)?)
}

/// `p_{F_1} ⋯ p_{F_r}` with its square-free flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalIdeal {
    pub factors: Vec<MonomialPrime>,
    pub ideal: MonomialIdeal,
    pub squarefree: bool,
}

pub fn transversal_polymatroidal(
    ring: &Ring,
    sets: &[BTreeSet<usize>],
) -> Result<TransversalIdeal> {
    if sets.is_empty() {
        return Err(Error::domain(
            "a transversal polymatroidal ideal needs at least one factor",
        ));
    }
    let mut factors = Vec::with_capacity(sets.len());
    for f in sets {
        if f.is_empty() {
            return Err(Error::domain("empty variable set in a prime factor"));
        }
        factors.push(MonomialPrime::new(ring, f.iter().copied())?);
    }
    let mut ideal = MonomialIdeal::unit(ring);
    for p in &factors {
        ideal = product(&ideal, &p.to_ideal())?;
    }
    let mut seen = BTreeSet::new();
    let squarefree = sets.iter().flatten().all(|v| seen.insert(*v));
    Ok(TransversalIdeal {
        factors,
        ideal,
        squarefree,
    })
}

/// Recovers `F_1, ..., F_r` when a square-free ideal is a product of primes
/// in pairwise disjoint variable sets.
///
/// In such a product two support variables never occur together in a
/// generator exactly when they belong to the same factor, which determines
/// the candidate factors; the product is then recomputed and compared.
pub fn transversal_factors(i: &MonomialIdeal) -> Option<Vec<BTreeSet<usize>>> {
    if !i.is_proper_nonzero() || !i.is_squarefree() {
        return None;
    }
    let support: Vec<usize> = i.support_union().into_iter().collect();
    let together = |a: usize, b: usize| {
        i.gens()
            .iter()
            .any(|g| g.exponent(a) > 0 && g.exponent(b) > 0)
    };
    let mut classes: Vec<BTreeSet<usize>> = Vec::new();
    for &v in &support {
        match classes
            .iter_mut()
            .find(|c| c.iter().all(|&w| !together(v, w)))
        {
            Some(c) => {
                c.insert(v);
            }
            None => classes.push(BTreeSet::from([v])),
        }
    }
    let rebuilt = transversal_polymatroidal(i.ring(), &classes).ok()?;
    (rebuilt.ideal == *i).then_some(classes)
}

/// Every generator's sorted support has consecutive gaps of at least `t`.
pub fn is_t_spread(i: &MonomialIdeal, t: usize) -> Result<bool> {
    require_squarefree(i, "is_t_spread")?;
    Ok(i.gens().iter().all(|g| {
        let s: Vec<usize> = g.support_iter().collect();
        s.windows(2).all(|w| w[1] - w[0] >= t)
    }))
}

/// `I^(k)`: square-free ideals use the intersection of `p^k` over the
/// minimal primes, everything else goes through the decomposition of `I^k`.
pub fn symbolic_power(i: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    if i.is_squarefree() {
        symbolic_power_squarefree(i, k)
    } else {
        symbolic_power_general(i, k)
    }
}

/// Intersection of the primary components of `I^k` whose radicals are
/// minimal primes of `I`.
pub fn symbolic_power_general(i: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    check_symbolic_args(i, k)?;
    let min: BTreeSet<MonomialPrime> = minimal_primes(i)?.into_iter().collect();
    let d = irreducible_decomposition(&power(i, k)?)?;
    let kept: Vec<MonomialIdeal> = d
        .components
        .iter()
        .filter(|c| min.contains(&c.radical()))
        .map(|c| c.to_ideal())
        .collect();
    intersect_all(i.ring(), &kept)
}

/// `∩_{p ∈ Min(I)} p^k`; only valid for square-free `I`.
pub fn symbolic_power_squarefree(i: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    check_symbolic_args(i, k)?;
    require_squarefree(i, "symbolic_power_squarefree")?;
    let powers = minimal_primes(i)?
        .iter()
        .map(|p| p.power(k))
        .collect::<Result<Vec<_>>>()?;
    intersect_all(i.ring(), &powers)
}

fn check_symbolic_args(i: &MonomialIdeal, k: u32) -> Result<()> {
    i.require_proper_nonzero("symbolic power")?;
    if k == 0 {
        return Err(Error::domain("symbolic power exponent must be at least 1"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{deletion, sum};
    use crate::monomial::RingContext;

    fn ideal(r: &Ring, s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(r, s).unwrap()
    }

    const EXAMPLE_3_10: &str =
        "x1*x3*x6, x1*x3*x7, x1*x4*x6, x1*x4*x7, x1*x5*x7, x2*x4*x7, x2*x5*x7";

    #[test]
    fn beta1_examples() {
        let r = RingContext::with_vars(7).unwrap();
        assert_eq!(beta1(&ideal(&r, "x1, x2, x3")).unwrap().0, 3);
        assert_eq!(beta1(&ideal(&r, "x1*x2, x2*x3")).unwrap().0, 1);

        let i = ideal(&r, EXAMPLE_3_10);
        let (b, set) = beta1(&i).unwrap();
        assert_eq!(b, 2);
        assert!(set[0].is_coprime(&set[1]));
        // exhaustive: no three generators are pairwise coprime
        let g = i.gens();
        for a in 0..g.len() {
            for b in a + 1..g.len() {
                for c in b + 1..g.len() {
                    assert!(
                        !(g[a].is_coprime(&g[b])
                            && g[a].is_coprime(&g[c])
                            && g[b].is_coprime(&g[c]))
                    );
                }
            }
        }
    }

    #[test]
    fn beta1_budget() {
        let r = RingContext::with_vars(12).unwrap();
        let gens: Vec<String> = (1..=12)
            .flat_map(|a| (a + 1..=12).map(move |b| format!("x{a}*x{b}")))
            .collect();
        let i = ideal(&r, &gens.join(","));
        let budget = Budget {
            max_nodes: 5,
            ..Budget::default()
        };
        assert!(matches!(
            beta1_with_budget(&i, &budget),
            Err(Error::Budget { .. })
        ));
        assert_eq!(beta1(&i).unwrap().0, 6);
    }

    #[test]
    fn konig_examples() {
        let r = RingContext::with_vars(4).unwrap();
        assert!(is_konig(&ideal(&r, "x1*x2, x3*x4")).unwrap());
        assert!(!is_konig(&ideal(&r, "x1*x2, x2*x3, x1*x3")).unwrap());
        assert!(is_konig(&ideal(&r, "x1")).unwrap());
        assert!(is_konig(&ideal(&r, "x1^2")).is_err());
    }

    #[test]
    fn transversal_examples() {
        let r = RingContext::with_vars(6).unwrap();
        let t =
            transversal_polymatroidal(&r, &[BTreeSet::from([0, 1]), BTreeSet::from([2])]).unwrap();
        assert_eq!(t.ideal, ideal(&r, "x1*x3, x2*x3"));
        assert!(t.squarefree);
        let t = transversal_polymatroidal(&r, &[BTreeSet::from([0]), BTreeSet::from([0])]).unwrap();
        assert_eq!(t.ideal, ideal(&r, "x1^2"));
        assert!(!t.squarefree);
        let t = transversal_polymatroidal(
            &r,
            &[
                BTreeSet::from([0, 1]),
                BTreeSet::from([2, 3]),
                BTreeSet::from([4]),
            ],
        )
        .unwrap();
        assert_eq!(t.ideal.len(), 4);
        assert!(t
            .ideal
            .gens()
            .iter()
            .all(|g| g.exponent(4) == 1 && g.degree() == 3));
        assert!(transversal_polymatroidal(&r, &[BTreeSet::new()]).is_err());
        assert!(transversal_polymatroidal(&r, &[]).is_err());
    }

    #[test]
    fn transversal_factor_recovery() {
        let r = RingContext::with_vars(6).unwrap();
        let sets = [
            BTreeSet::from([0, 1]),
            BTreeSet::from([2, 3]),
            BTreeSet::from([4, 5]),
        ];
        let t = transversal_polymatroidal(&r, &sets).unwrap();
        assert_eq!(transversal_factors(&t.ideal).unwrap(), sets.to_vec());
        assert!(transversal_factors(&ideal(&r, "x1*x2, x2*x3, x1*x3")).is_none());
    }

    #[test]
    fn t_spread_examples() {
        let r = RingContext::with_vars(7).unwrap();
        assert!(is_t_spread(&ideal(&r, EXAMPLE_3_10), 2).unwrap());
        assert!(!is_t_spread(&ideal(&r, "x1*x2"), 2).unwrap());
        assert!(is_t_spread(&ideal(&r, "x1*x2"), 0).unwrap());
        assert!(is_t_spread(&ideal(&r, "x1^2"), 1).is_err());
    }

    #[test]
    fn symbolic_power_examples() {
        let r = RingContext::with_vars(7).unwrap();
        let p = ideal(&r, "x1*x2");
        for k in 1..=3 {
            assert_eq!(symbolic_power(&p, k).unwrap(), power(&p, k).unwrap());
        }
        let tri = ideal(&r, "x1*x2, x2*x3, x1*x3");
        let expected = sum(&power(&tri, 2).unwrap(), &ideal(&r, "x1*x2*x3")).unwrap();
        assert_eq!(symbolic_power(&tri, 2).unwrap(), expected);
        assert_eq!(symbolic_power_general(&tri, 2).unwrap(), expected);

        let d = deletion(&ideal(&r, EXAMPLE_3_10), 0).unwrap();
        assert_eq!(symbolic_power(&d, 2).unwrap(), power(&d, 2).unwrap());
        assert!(symbolic_power(&MonomialIdeal::zero(&r), 2).is_err());
    }

    #[test]
    fn symbolic_power_of_non_squarefree_drops_embedded_components() {
        let r = RingContext::with_vars(2).unwrap();
        // (x1^2, x1x2) = (x1) ∩ (x1^2, x2); the embedded component goes away
        let i = ideal(&r, "x1^2, x1*x2");
        assert_eq!(symbolic_power(&i, 1).unwrap(), ideal(&r, "x1"));
        assert_eq!(symbolic_power(&i, 2).unwrap(), ideal(&r, "x1^2"));
    }
}
