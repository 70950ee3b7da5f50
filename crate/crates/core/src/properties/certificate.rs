//! Structural reasons for an ideal to be normally torsion-free for every
//! power, as opposed to the bounded power-by-power sweeps.

use std::collections::BTreeSet;
use std::fmt;

use crate::arith::deletion;
use crate::decompose::{associated_primes, associated_primes_total, is_unmixed, minimal_primes};
use crate::graph::{graph_of_edge_ideal, GraphSpec};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::monomial::Monomial;
use crate::structure::{beta1, is_konig, transversal_factors};

const MAX_DEPTH: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Generated by variables; every power is primary.
    Prime,
    /// A single generator; every power is principal with the same radical.
    Principal,
    /// `I = h·I'` with `I'` certified (multiplying by a monomial preserves
    /// normal torsion-freeness).
    MonomialMultiple {
        factor: Monomial,
        inner: Box<Certificate>,
    },
    /// Edge ideal of a bipartite graph.
    BipartiteEdgeIdeal,
    /// Square-free with all minimal primes of height two, forming a
    /// bipartite graph whose cover ideal is `I`.
    BipartiteCoverIdeal,
    /// Product of primes in pairwise disjoint variable sets.
    TransversalPolymatroidal { factors: Vec<BTreeSet<usize>> },
    /// A square-free `v ∈ I` meeting every minimal prime in exactly one
    /// variable, with each deletion `I \ x_i` (`x_i | v`) certified and
    /// `m \ x_i ∉ Ass(I \ x_i)`.
    DeletionCriterion {
        v: Monomial,
        deletions: Vec<(usize, Certificate)>,
    },
    /// Unmixed König ideal whose deletions at the variables of a maximum
    /// independent set are certified with `m \ x_i ∉ Ass(I \ x_i)`.
    UnmixedKonig {
        independent_set: Vec<Monomial>,
        deletions: Vec<(usize, Certificate)>,
    },
    /// The deleted ideal is zero.
    ZeroIdeal,
}

impl Certificate {
    pub fn tag(&self) -> &'static str {
        match self {
            Certificate::Prime => "prime",
            Certificate::Principal => "principal",
            Certificate::MonomialMultiple { .. } => "monomial-multiple",
            Certificate::BipartiteEdgeIdeal => "bipartite-edge-ideal",
            Certificate::BipartiteCoverIdeal => "bipartite-cover-ideal",
            Certificate::TransversalPolymatroidal { .. } => "transversal-polymatroidal",
            Certificate::DeletionCriterion { .. } => "deletion-criterion",
            Certificate::UnmixedKonig { .. } => "unmixed-konig",
            Certificate::ZeroIdeal => "zero-ideal",
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::MonomialMultiple { inner, .. } => write!(f, "monomial-multiple[{inner}]"),
            Certificate::DeletionCriterion { deletions, .. }
            | Certificate::UnmixedKonig { deletions, .. } => {
                write!(f, "{}[", self.tag())?;
                for (k, (_, c)) in deletions.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("]")
            }
            other => f.write_str(other.tag()),
        }
    }
}

/// A structural certificate that `I` is normally torsion-free, if one of
/// the known shapes applies.
pub fn structural_ntf_certificate(i: &MonomialIdeal) -> Option<Certificate> {
    certify(i, 0)
}

fn certify(i: &MonomialIdeal, depth: usize) -> Option<Certificate> {
    if i.is_zero() {
        return Some(Certificate::ZeroIdeal);
    }
    if i.is_unit() || depth > MAX_DEPTH {
        return None;
    }
    if i.gens().iter().all(|g| g.degree() == 1) {
        return Some(Certificate::Prime);
    }
    if i.len() == 1 {
        return Some(Certificate::Principal);
    }
    let common = i
        .gens()
        .iter()
        .skip(1)
        .fold(i.gens()[0].clone(), |acc, g| acc.gcd(g));
    if !common.is_one() {
        let inner = MonomialIdeal::new(
            i.ring(),
            i.gens()
                .iter()
                .map(|g| g.div_exact(&common).expect("gcd divides")),
        )
        .ok()?;
        return certify(&inner, depth + 1).map(|c| Certificate::MonomialMultiple {
            factor: common,
            inner: Box::new(c),
        });
    }
    if !i.is_squarefree() {
        return None;
    }
    if let Some(g) = graph_of_edge_ideal(i) {
        if g.is_bipartite() {
            return Some(Certificate::BipartiteEdgeIdeal);
        }
    }
    let min = minimal_primes(i).ok()?;
    if min.iter().all(|p| p.height() == 2) {
        let edges = min.iter().map(|p| {
            let v: Vec<usize> = p.vars().iter().copied().collect();
            (v[0], v[1])
        });
        if let Ok(g) = GraphSpec::new(i.ring().names().iter().cloned(), edges) {
            if g.is_bipartite() {
                return Some(Certificate::BipartiteCoverIdeal);
            }
        }
    }
    if let Some(factors) = transversal_factors(i) {
        return Some(Certificate::TransversalPolymatroidal { factors });
    }
    if let Some(c) = deletion_criterion(i, &min, depth) {
        return Some(c);
    }
    unmixed_konig(i, depth)
}

/// Certificates for `I \ x_i` at each variable of `vars`, each paired with
/// `m \ x_i ∉ Ass(I \ x_i)`; together they give `m \ x_i ∉ Ass((I \ x_i)^s)`
/// for every `s`.
fn certified_deletions(
    i: &MonomialIdeal,
    vars: impl IntoIterator<Item = usize>,
    depth: usize,
) -> Option<Vec<(usize, Certificate)>> {
    let m = MonomialPrime::maximal(i.ring());
    let mut out = Vec::new();
    for x in vars {
        let d = deletion(i, x).ok()?;
        let cert = certify(&d, depth + 1)?;
        if associated_primes_total(&d).ok()?.contains(&m.without(x)) {
            return None;
        }
        out.push((x, cert));
    }
    Some(out)
}

fn deletion_criterion(
    i: &MonomialIdeal,
    min: &[MonomialPrime],
    depth: usize,
) -> Option<Certificate> {
    for v in i.gens() {
        let meets_once = min
            .iter()
            .all(|p| v.support_iter().filter(|&x| p.contains_var(x)).count() == 1);
        if !meets_once {
            continue;
        }
        if let Some(deletions) = certified_deletions(i, v.support_iter(), depth) {
            return Some(Certificate::DeletionCriterion {
                v: v.clone(),
                deletions,
            });
        }
    }
    None
}

fn unmixed_konig(i: &MonomialIdeal, depth: usize) -> Option<Certificate> {
    if !is_konig(i).ok()? || !is_unmixed(i).ok()? {
        return None;
    }
    let (_, set) = beta1(i).ok()?;
    let vars: BTreeSet<usize> = set.iter().flat_map(|u| u.support_iter()).collect();
    let deletions = certified_deletions(i, vars, depth)?;
    Some(Certificate::UnmixedKonig {
        independent_set: set,
        deletions,
    })
}

/// Whether `m = (x_1, ..., x_n)` is associated to `R/J`, with the zero and
/// unit ideals handled.
pub fn maximal_is_associated(j: &MonomialIdeal) -> crate::Result<bool> {
    if !j.is_proper_nonzero() {
        return Ok(false);
    }
    let m = MonomialPrime::maximal(j.ring());
    Ok(associated_primes(j)?.contains(&m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{Ring, RingContext};

    fn ideal(r: &Ring, s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(r, s).unwrap()
    }

    #[test]
    fn simple_shapes() {
        let r = RingContext::with_vars(7).unwrap();
        let tag = |s: &str| structural_ntf_certificate(&ideal(&r, s)).map(|c| c.tag());
        assert_eq!(tag("x1, x3"), Some("prime"));
        assert_eq!(tag("x1^2*x2"), Some("principal"));
        assert_eq!(tag("x2*x4*x7, x2*x5*x7"), Some("monomial-multiple"));
        assert_eq!(tag("x1*x2, x2*x3, x3*x4"), Some("bipartite-edge-ideal"));
        assert_eq!(tag("x1*x2, x2*x3, x1*x3"), None);
    }

    #[test]
    fn example_3_10_deletions_follow_the_worked_route() {
        let r = RingContext::with_vars(7).unwrap();
        let i = ideal(
            &r,
            "x1*x3*x6, x1*x3*x7, x1*x4*x6, x1*x4*x7, x1*x5*x7, x2*x4*x7, x2*x5*x7",
        );
        // I \ x3 is the cover ideal of a tree
        let f = deletion(&i, 2).unwrap();
        assert_eq!(
            structural_ntf_certificate(&f).map(|c| c.tag()),
            Some("bipartite-cover-ideal")
        );
        // I \ x6 = x7 · L with L a bipartite edge ideal
        let d6 = deletion(&i, 5).unwrap();
        match structural_ntf_certificate(&d6).unwrap() {
            Certificate::MonomialMultiple { factor, inner } => {
                assert_eq!(r.format_monomial(&factor), "x7");
                assert_eq!(*inner, Certificate::BipartiteEdgeIdeal);
            }
            other => panic!("unexpected certificate {other}"),
        }
        let c = structural_ntf_certificate(&i).unwrap();
        assert_eq!(c.tag(), "deletion-criterion");
        if let Certificate::DeletionCriterion { v, deletions } = c {
            assert_eq!(r.format_monomial(&v), "x1*x3*x6");
            assert_eq!(deletions.len(), 3);
        }
    }

    #[test]
    fn maximal_membership_on_degenerate_ideals() {
        let r = RingContext::with_vars(2).unwrap();
        assert!(!maximal_is_associated(&MonomialIdeal::zero(&r)).unwrap());
        assert!(!maximal_is_associated(&MonomialIdeal::unit(&r)).unwrap());
        assert!(maximal_is_associated(&ideal(&r, "x1, x2")).unwrap());
    }
}
