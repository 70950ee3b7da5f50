//! Ideal-level operations: sum, product, power, intersection, colon,
//! radical and deletion.

use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::Monomial;

pub fn sum(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    i.check_same_ring(j)?;
    minimalize(i.ring(), i.gens().iter().chain(j.gens()).cloned())
}

pub fn product(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    i.check_same_ring(j)?;
    let mut gens = Vec::with_capacity(i.len() * j.len());
    for u in i.gens() {
        for v in j.gens() {
            gens.push(u.checked_mul(v)?);
        }
    }
    minimalize(i.ring(), gens)
}

/// `I^t`, built by repeated multiplication with minimalization after each
/// step. `power(I, 0)` is the unit ideal.
pub fn power(i: &MonomialIdeal, t: u32) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(i.ring());
    for _ in 0..t {
        acc = product(&acc, i)?;
    }
    Ok(acc)
}

/// `[I^1, ..., I^t]`, each computed from the previous one.
pub fn powers_up_to(i: &MonomialIdeal, t: u32) -> Result<Vec<MonomialIdeal>> {
    let mut out: Vec<MonomialIdeal> = Vec::with_capacity(t as usize);
    for _ in 0..t {
        let next = match out.last() {
            Some(prev) => product(prev, i)?,
            None => i.clone(),
        };
        out.push(next);
    }
    Ok(out)
}

pub fn intersect(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    i.check_same_ring(j)?;
    let mut gens = Vec::with_capacity(i.len() * j.len());
    for u in i.gens() {
        for v in j.gens() {
            gens.push(u.lcm(v));
        }
    }
    minimalize(i.ring(), gens)
}

/// Intersection of a nonempty family; the empty family gives the unit ideal.
pub fn intersect_all<'a>(
    ring: &crate::monomial::Ring,
    ideals: impl IntoIterator<Item = &'a MonomialIdeal>,
) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(ring);
    for i in ideals {
        acc = intersect(&acc, i)?;
    }
    Ok(acc)
}

/// `(I : h)`.
pub fn colon_monomial(i: &MonomialIdeal, h: &Monomial) -> Result<MonomialIdeal> {
    i.check_monomial(h)?;
    Ok(colon_monomial_unchecked(i, h))
}

pub(crate) fn colon_monomial_unchecked(i: &MonomialIdeal, h: &Monomial) -> MonomialIdeal {
    let mut gens: Vec<Monomial> = i.gens().iter().map(|u| u.quotient_by_gcd(h)).collect();
    if gens.iter().any(Monomial::is_one) {
        return MonomialIdeal::unit(i.ring());
    }
    minimalize(i.ring(), gens.drain(..)).expect("colon stays in the ring")
}

/// `(I : J) = ∩_{v ∈ G(J)} (I : v)`.
///
/// The zero ideal colon anything is zero; colon by the unit ideal is `I`.
pub fn colon_ideal(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    i.check_same_ring(j)?;
    if j.is_zero() {
        return Err(Error::domain("colon by the zero ideal"));
    }
    if i.is_zero() {
        return Ok(i.clone());
    }
    let mut acc: Option<MonomialIdeal> = None;
    for v in j.gens() {
        let c = colon_monomial_unchecked(i, v);
        acc = Some(match acc {
            Some(a) => intersect(&a, &c)?,
            None => c,
        });
    }
    Ok(acc.expect("nonzero colon divisor has a generator"))
}

pub fn radical(i: &MonomialIdeal) -> MonomialIdeal {
    minimalize(i.ring(), i.gens().iter().map(Monomial::radical)).expect("same ring")
}

/// `I \ x_i`: keep the minimal generators not divisible by `x_i`. The ring
/// is unchanged.
pub fn deletion(i: &MonomialIdeal, index: usize) -> Result<MonomialIdeal> {
    i.ring().check_index(index)?;
    Ok(MonomialIdeal::from_unchecked(
        i.ring().clone(),
        i.gens()
            .iter()
            .filter(|g| g.exponent(index) == 0)
            .cloned()
            .collect(),
    ))
}

/// `I` with `x_i` set to `1`: the generators with their `x_i` factor
/// removed, minimalized. This is `(I : x_i^k)` for large `k`.
pub fn contraction(i: &MonomialIdeal, index: usize) -> Result<MonomialIdeal> {
    i.ring().check_index(index)?;
    minimalize(i.ring(), i.gens().iter().map(|g| g.with_exponent(index, 0)))
}

/// Colon by a monomial in variables that no generator uses.
///
/// Such a colon never changes the ideal; this returns `I` after checking
/// both the precondition and that identity.
pub fn colon_variables_outside_support(i: &MonomialIdeal, h: &Monomial) -> Result<MonomialIdeal> {
    i.check_monomial(h)?;
    let support = i.support_union();
    if h.support_iter().any(|v| support.contains(&v)) {
        return Err(Error::domain(
            "monomial shares variables with the ideal's generators",
        ));
    }
    let c = colon_monomial_unchecked(i, h);
    if &c != i {
        return Err(Error::Arithmetic(format!(
            "colon by a monomial outside the support changed {i} into {c}"
        )));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{Ring, RingContext};

    fn ring(n: usize) -> Ring {
        RingContext::with_vars(n).unwrap()
    }

    fn ideal(r: &Ring, s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(r, s).unwrap()
    }

    fn example_3_10(r: &Ring) -> MonomialIdeal {
        ideal(
            r,
            "x1*x3*x6, x1*x3*x7, x1*x4*x6, x1*x4*x7, x1*x5*x7, x2*x4*x7, x2*x5*x7",
        )
    }

    #[test]
    fn sum_and_product_examples() {
        let r = ring(7);
        assert_eq!(
            sum(&ideal(&r, "x1"), &ideal(&r, "x2")).unwrap(),
            ideal(&r, "x1, x2")
        );
        assert_eq!(
            product(&ideal(&r, "x1, x2"), &ideal(&r, "x3")).unwrap(),
            ideal(&r, "x1*x3, x2*x3")
        );
        assert_eq!(
            product(&ideal(&r, "x2*x7"), &ideal(&r, "x4, x5")).unwrap(),
            ideal(&r, "x2*x4*x7, x2*x5*x7")
        );
        let other = RingContext::with_vars(6).unwrap();
        assert!(sum(&ideal(&r, "x1"), &ideal(&other, "x1")).is_err());
    }

    #[test]
    fn power_examples() {
        let r = ring(3);
        assert_eq!(power(&ideal(&r, "x1"), 3).unwrap(), ideal(&r, "x1^3"));
        assert_eq!(
            power(&ideal(&r, "x1, x2"), 2).unwrap(),
            ideal(&r, "x1^2, x1*x2, x2^2")
        );
        // hand enumeration: x1²x2², x2²x3², x1²x3², x1x2²x3, x1²x2x3, x1x2x3²
        let tri = ideal(&r, "x1*x2, x2*x3, x1*x3");
        assert_eq!(power(&tri, 2).unwrap().len(), 6);
        assert!(power(&tri, 0).unwrap().is_unit());
        assert_eq!(power(&tri, 1).unwrap(), tri);
        let p = powers_up_to(&tri, 3).unwrap();
        assert_eq!(p[2], power(&tri, 3).unwrap());
    }

    #[test]
    fn power_overflow_is_an_error() {
        let r = ring(1);
        let i =
            MonomialIdeal::principal(&r, Monomial::from_exponents(vec![u32::MAX / 2 + 1])).unwrap();
        assert!(matches!(power(&i, 2), Err(Error::Overflow(_))));
    }

    #[test]
    fn intersection_examples() {
        let r = ring(3);
        assert_eq!(
            intersect(&ideal(&r, "x1"), &ideal(&r, "x2")).unwrap(),
            ideal(&r, "x1*x2")
        );
        assert_eq!(
            intersect(&ideal(&r, "x1, x2"), &ideal(&r, "x2, x3")).unwrap(),
            ideal(&r, "x2, x1*x3")
        );
        assert!(intersect(&ideal(&r, "x1"), &MonomialIdeal::zero(&r))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn colon_examples() {
        let r = ring(7);
        let x2 = r.monomial("x2").unwrap();
        assert_eq!(
            colon_monomial(&ideal(&r, "x1*x2"), &x2).unwrap(),
            ideal(&r, "x1")
        );
        let i = example_3_10(&r);
        assert_eq!(colon_monomial(&i, &Monomial::one(7)).unwrap(), i);
        assert!(colon_monomial(&i, &r.monomial("x1*x3*x6").unwrap())
            .unwrap()
            .is_unit());

        assert_eq!(
            colon_ideal(&ideal(&r, "x1^2"), &ideal(&r, "x1")).unwrap(),
            ideal(&r, "x1")
        );
        let m = ideal(&r, "x1, x2");
        assert_eq!(colon_ideal(&power(&m, 2).unwrap(), &m).unwrap(), m);
        assert_eq!(colon_ideal(&power(&i, 2).unwrap(), &i).unwrap(), i);
        assert!(colon_ideal(&i, &MonomialIdeal::zero(&r)).is_err());
        assert!(colon_ideal(&MonomialIdeal::zero(&r), &i).unwrap().is_zero());
        assert_eq!(colon_ideal(&i, &MonomialIdeal::unit(&r)).unwrap(), i);
    }

    #[test]
    fn radical_examples() {
        let r = ring(3);
        assert_eq!(radical(&ideal(&r, "x1^2*x2")), ideal(&r, "x1*x2"));
        let sf = ideal(&r, "x1*x2, x3");
        assert_eq!(radical(&sf), sf);
        assert_eq!(radical(&ideal(&r, "x1^3, x2*x3^2")), ideal(&r, "x1, x2*x3"));
    }

    #[test]
    fn deletion_examples() {
        let r = ring(7);
        let i = example_3_10(&r);
        assert_eq!(deletion(&i, 0).unwrap(), ideal(&r, "x2*x4*x7, x2*x5*x7"));
        assert_eq!(
            deletion(&i, 2).unwrap(),
            ideal(&r, "x1*x4*x6, x1*x4*x7, x1*x5*x7, x2*x4*x7, x2*x5*x7")
        );
        assert!(deletion(&ideal(&r, "x1"), 0).unwrap().is_zero());
        assert!(deletion(&i, 7).is_err());
    }

    #[test]
    fn outside_support_colon() {
        let r = ring(7);
        let i = ideal(&r, "x1*x2");
        assert_eq!(
            colon_variables_outside_support(&i, &r.monomial("x3").unwrap()).unwrap(),
            i
        );
        let d = deletion(&example_3_10(&r), 0).unwrap();
        assert_eq!(
            colon_variables_outside_support(&d, &r.monomial("x1^5").unwrap()).unwrap(),
            d
        );
        let r3 = ring(3);
        let sq = ideal(&r3, "x1^2, x2^2");
        assert_eq!(
            colon_variables_outside_support(&sq, &r3.monomial("x3^2").unwrap()).unwrap(),
            sq
        );
        assert!(colon_variables_outside_support(&sq, &r3.monomial("x1").unwrap()).is_err());
    }
}
